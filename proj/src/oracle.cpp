#include "pp/oracle.hpp"

#include <omp.h>

#include <map>
#include <random>
#include <stdexcept>

#include "pp/problem.hpp"

namespace pp {

namespace {

mpz_class euler_of(const PairData& p, bool x_side) {
    mpz_class chi = 1;
    for (const auto& g : p.gens) {
        if (g.module == (x_side ? Module::E : Module::C)) continue;
        chi += (g.degree % 2 == 0) ? 1 : -1;
    }
    return chi;
}

std::string betti_string(const BettiTable& t) {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, c] : t) {
        if (c == 0) continue;
        if (!first) s += ", ";
        s += std::to_string(d) + ": " + c.get_str();
        first = false;
    }
    return s + "}";
}

std::string reproduction(const SimplicialComplex& k, const PairDecomposition& p) {
    return print_problem(Problem{k, p, std::nullopt});
}

}  // namespace

mpz_class euler_characteristic(const SimplicialComplex& k, const PairDecomposition& p) {
    auto facets = k.facets();
    if (facets.size() > 12) throw std::invalid_argument("euler_characteristic: more than 12 maximal faces");
    std::vector<mpz_class> chi_x, chi_a;
    for (int v : k.ground().labels()) {
        chi_x.push_back(euler_of(p.at(v), true));
        chi_a.push_back(euler_of(p.at(v), false));
    }
    auto labels = k.ground().labels();
    std::map<VertexSet::Bits, mpz_class> memo;
    auto chi_d = [&](VertexSet sigma) {
        auto it = memo.find(sigma.bits());
        if (it != memo.end()) return it->second;
        mpz_class c = 1;
        for (std::size_t i = 0; i < labels.size(); ++i) c *= sigma.contains(labels[i]) ? chi_x[i] : chi_a[i];
        memo.emplace(sigma.bits(), c);
        return c;
    };
    mpz_class total = 0;
    std::size_t n = facets.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet inter = VertexSet::from_bits(~0u);
        int count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) {
                inter = inter & facets[i];
                ++count;
            }
        if (count % 2) total += chi_d(inter);
        else total -= chi_d(inter);
    }
    return total;
}

HochsterModel hochster_model_of(const PairDecomposition& p) {
    std::optional<HochsterModel> model;
    for (int v = 1; v <= p.vertex_count(); ++v) {
        const PairData& d = p.at(v);
        if (d.has(Module::B) || d.has(Module::C))
            throw std::invalid_argument("hochster oracle needs B' = C' = 0 (vertex " + std::to_string(v) + ")");
        auto es = d.of(Module::E);
        if (es.size() != 1 || d.gens[static_cast<std::size_t>(es[0])].degree > 1)
            throw std::invalid_argument("hochster oracle needs a single E' generator of degree 0 or 1");
        HochsterModel here = d.gens[static_cast<std::size_t>(es[0])].degree == 1 ? HochsterModel::MomentAngle
                                                                                  : HochsterModel::RealMomentAngle;
        if (model && *model != here) throw std::invalid_argument("hochster oracle needs the same model at every vertex");
        model = here;
    }
    if (!model) throw std::invalid_argument("hochster oracle needs at least one vertex");
    return *model;
}

BettiTable hochster_direct(const SimplicialComplex& k, HochsterModel model, const Field& f) {
    BettiTable t;
    for_each_subset(k.ground(), [&](VertexSet j) {
        auto betti = reduced_betti(full_subcomplex(k, j), f);
        int shift = model == HochsterModel::MomentAngle ? j.size() + 1 : 1;
        for (std::size_t i = 0; i < betti.size(); ++i)
            if (betti[i]) t[static_cast<int>(i) - 1 + shift] += betti[i];
    });
    return t;
}

std::vector<CorpusInstance> make_corpus(std::uint64_t seed, int max_m) {
    namespace fam = families;
    std::vector<CorpusInstance> out;
    auto add = [&](std::string name, SimplicialComplex k) {
        if (k.vertex_count() <= max_m && k.facets().size() <= 12) out.push_back({std::move(name), std::move(k)});
    };
    for (int m = 1; m <= 6; ++m) {
        add("discrete-" + std::to_string(m), fam::discrete(m));
        add("simplex-" + std::to_string(m), fam::simplex(m));
        if (m >= 2) add("simplex-boundary-" + std::to_string(m), fam::simplex_boundary(m));
        if (m >= 3) add("cycle-" + std::to_string(m), fam::cycle(m));
        if (m >= 2) add("path-" + std::to_string(m), fam::path(m));
        if (m <= 3) add("ghosts-" + std::to_string(m), fam::ghosts(m));
    }
    add("octahedron", fam::octahedron());
    add("rp2-6", fam::rp2_6());
    add("join-cycle3-discrete2", join(fam::cycle(3), fam::discrete(2)));
    add("join-path3-discrete2", join(fam::path(3), fam::discrete(2)));
    add("join-discrete2-discrete3", join(fam::discrete(2), fam::discrete(3)));
    add("join-point-cycle4", join(fam::discrete(1), fam::cycle(4)));
    add("join-ghost-discrete2", join(fam::ghosts(1), fam::discrete(2)));
    add("cycle4-ghost", SimplicialComplex::from_faces(5, fam::cycle(4).facets()));
    add("discrete2-ghosts", SimplicialComplex::from_faces(4, fam::discrete(2).facets()));

    std::mt19937_64 rng(seed);
    for (int m = 1; m <= max_m; ++m) {
        int count = m <= 2 ? 4 : 10 * m;
        for (int n = 0; n < count; ++n) {
            std::vector<VertexSet> gens;
            int k = static_cast<int>(rng() % static_cast<std::uint64_t>(m + 3));
            for (int i = 0; i < k; ++i) {
                VertexSet::Bits mask = static_cast<VertexSet::Bits>(rng() % (1ull << m));
                // bias towards smaller faces
                if (rng() % 2) mask &= static_cast<VertexSet::Bits>(rng());
                gens.push_back(VertexSet::from_bits(mask));
            }
            auto k2 = SimplicialComplex::from_faces(m, gens);
            if (k2.facets().size() > 12) continue;
            out.push_back({"random-" + std::to_string(seed) + "-" + std::to_string(m) + "-" + std::to_string(n), std::move(k2)});
        }
    }
    return out;
}

std::vector<OracleReport> corpus_check(const CorpusOptions& opts) {
    return corpus_check(make_corpus(opts.seed, opts.max_m), opts);
}

std::vector<OracleReport> corpus_check(const std::vector<CorpusInstance>& corpus, const CorpusOptions& opts) {
    Field q = Field::rationals(), f2 = Field::prime(2);
    struct PairChoice {
        std::string name;
        Field field;
        int max_m;
    };
    const std::vector<PairChoice> euler_pairs{{"moment-angle", q, 6}, {"real-moment-angle", q, 6}, {"s0-pair", q, 6},
                                              {"mf-cp3", q, 4},       {"so3-rp2", f2, 4}};
    const std::vector<PairChoice> join_pairs{{"moment-angle", q, 6}, {"real-moment-angle", q, 6}, {"mf-cp3", q, 4}};

    // one task per (check, instance, pair) or (join, instance pair, pair)
    struct Task {
        std::string check;
        std::size_t a, b;
        PairChoice pair;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        int m = corpus[i].complex.vertex_count();
        if (opts.checks.count("euler"))
            for (const auto& pc : euler_pairs)
                if (m <= pc.max_m) tasks.push_back({"euler", i, 0, pc});
        if (opts.checks.count("hochster"))
            for (const char* name : {"moment-angle", "real-moment-angle"}) tasks.push_back({"hochster", i, 0, {name, q, 6}});
    }
    if (opts.checks.count("join")) {
        // joins of the named members (and the first random ones) with small total size
        std::vector<std::size_t> pool;
        for (std::size_t i = 0; i < corpus.size() && pool.size() < 40; ++i)
            if (corpus[i].complex.vertex_count() <= 4) pool.push_back(i);
        for (std::size_t x : pool)
            for (std::size_t y : pool) {
                int n = corpus[x].complex.vertex_count() + corpus[y].complex.vertex_count();
                if (x > y || n > 6) continue;
                for (const auto& pc : join_pairs)
                    if (n <= pc.max_m) tasks.push_back({"join", x, y, pc});
            }
    }

    std::vector<OracleReport> reports(tasks.size());
    EngineOptions eo = opts.engine;
    eo.threads = 1;
    long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(opts.threads))
    for (long t = 0; t < n; ++t) {
        const Task& task = tasks[static_cast<std::size_t>(t)];
        const auto& inst = corpus[task.a];
        OracleReport r;
        r.check = task.check;
        r.instance = inst.name + " / " + task.pair.name;
        PairData pd = builtin(task.pair.name, task.pair.field);
        if (task.check == "euler") {
            auto p = PairDecomposition::uniform(inst.complex.vertex_count(), pd, task.pair.field);
            r.expected = euler_characteristic(inst.complex, p).get_str();
            r.computed = Engine(inst.complex, p, eo).full_series().evaluate_at_minus_one().get_str();
            r.reproduction = reproduction(inst.complex, p);
        } else if (task.check == "hochster") {
            auto p = PairDecomposition::uniform(inst.complex.vertex_count(), pd, task.pair.field);
            r.expected = betti_string(hochster_direct(inst.complex, hochster_model_of(p), task.pair.field));
            r.computed = betti_string(betti_table(Engine(inst.complex, p, eo).full_series()));
            r.reproduction = reproduction(inst.complex, p);
        } else {
            const auto& other = corpus[task.b];
            r.instance = inst.name + " * " + other.name + " / " + task.pair.name;
            SimplicialComplex joined = join(inst.complex, other.complex);
            auto series_of = [&](const SimplicialComplex& k) {
                auto p = PairDecomposition::uniform(k.ground().empty() ? 0 : k.ground().max(), pd, task.pair.field);
                return Engine(k, p, eo).full_series();
            };
            r.expected = multiply(series_of(inst.complex), series_of(other.complex)).to_string();
            r.computed = series_of(joined).to_string();
            r.reproduction = reproduction(joined, PairDecomposition::uniform(joined.ground().max(), pd, task.pair.field));
        }
        r.pass = r.expected == r.computed;
        if (r.pass) r.reproduction.clear();
        reports[static_cast<std::size_t>(t)] = std::move(r);
    }
    return reports;
}

}  // namespace pp
