#include "pp/cartan.hpp"

#include <omp.h>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pp {

namespace {

// Faces of k compressed onto its support, as a byte string; equal keys mean
// isomorphic complexes under an order-preserving relabeling.
std::string homology_key(const SimplicialComplex& k) {
    VertexSet support = k.support();
    std::string key;
    key.reserve(k.face_count() * 4);
    for (VertexSet f : k.faces()) {
        std::uint32_t c = 0;
        for (int v : f.labels()) c |= 1u << support.rank_of(v);
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((c >> (8 * b)) & 0xff));
    }
    return key;
}

LaurentPoly product_over(const PairDecomposition& p, VertexSet vs, Module m) {
    LaurentPoly out = LaurentPoly::one();
    for (int v : vs.labels()) {
        out = out * p.at(v).series(m);
        if (out.is_zero()) break;
    }
    return out;
}

bool all_have(const PairDecomposition& p, VertexSet vs, Module m) {
    for (int v : vs.labels())
        if (!p.at(v).has(m)) return false;
    return true;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string_view::npos) next = s.size();
        std::string part(s.substr(pos, next - pos));
        std::size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad integer '" + part + "'");
        out.push_back(v);
        pos = next + 1;
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PP_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

Engine::Engine(SimplicialComplex k, PairDecomposition p, EngineOptions opts)
    : k_(std::move(k)), p_(std::move(p)), opts_(opts) {
    if (p_.vertex_count() < (k_.ground().empty() ? 0 : k_.ground().max()))
        throw std::invalid_argument("pair data covers " + std::to_string(p_.vertex_count()) + " vertices, complex has " +
                                    std::to_string(k_.ground().max()));
}

std::shared_ptr<const CohomologyBasis> Engine::link_basis(VertexSet i, VertexSet sigma) const {
    auto key = std::make_pair(i.bits(), sigma.bits());
    {
        std::shared_lock lock(basis_mutex_);
        auto it = bases_.find(key);
        if (it != bases_.end()) return it->second;
    }
    auto basis = std::make_shared<const CohomologyBasis>(link(full_subcomplex(k_, i), sigma), field());
    std::unique_lock lock(basis_mutex_);
    return bases_.try_emplace(key, std::move(basis)).first->second;
}

std::vector<int> Engine::link_betti(VertexSet i, VertexSet sigma) const {
    return memo_betti(link(full_subcomplex(k_, i), sigma));
}

std::vector<int> Engine::memo_betti(const SimplicialComplex& lk) const {
    std::string key = homology_key(lk);
    {
        std::shared_lock lock(betti_mutex_);
        auto it = betti_.find(key);
        if (it != betti_.end()) return it->second;
    }
    auto betti = reduced_betti(lk, field());
    std::unique_lock lock(betti_mutex_);
    return betti_.try_emplace(std::move(key), std::move(betti)).first->second;
}

LaurentPoly Engine::cartan_inner(VertexSet i, const SimplicialComplex& ki) const {
    LaurentPoly sum;
    int suspension = opts_.drop_suspension ? 0 : 1;
    for (VertexSet sigma : ki.faces()) {
        if (!all_have(p_, sigma, Module::C) || !all_have(p_, i - sigma, Module::E)) continue;
        std::vector<int> betti = memo_betti(link(ki, sigma));
        LaurentPoly link_series;
        for (std::size_t d = 0; d < betti.size(); ++d) link_series.add_term(static_cast<int>(d) - 1 + suspension, betti[d]);
        if (link_series.is_zero()) continue;
        sum += link_series * product_over(p_, sigma, Module::C) * product_over(p_, i - sigma, Module::E);
    }
    return sum;
}

PoincareSeries Engine::smash_series(VertexSet j) const {
    if (!j.subset_of(all())) throw std::invalid_argument("subset " + j.to_string() + " is not a set of vertices");
    std::vector<VertexSet> subsets;
    for_each_subset(j, [&](VertexSet i) {
        if (all_have(p_, j - i, Module::B)) subsets.push_back(i);
    });
    std::vector<LaurentPoly> parts(subsets.size());
    long n = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(opts_.threads))
    for (long idx = 0; idx < n; ++idx) {
        VertexSet i = subsets[static_cast<std::size_t>(idx)];
        parts[static_cast<std::size_t>(idx)] = cartan_inner(i, full_subcomplex(k_, i)) * product_over(p_, j - i, Module::B);
    }
    LaurentPoly total;
    for (const auto& part : parts) total += part;
    return PoincareSeries::reduced_of(std::move(total));
}

PoincareSeries Engine::full_series() const {
    std::vector<VertexSet> subsets;
    for_each_subset(all(), [&](VertexSet i) { subsets.push_back(i); });
    std::vector<LaurentPoly> parts(subsets.size());
    long n = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(opts_.threads))
    for (long idx = 0; idx < n; ++idx) {
        VertexSet i = subsets[static_cast<std::size_t>(idx)];
        // every J containing I with B-factors on J - I
        LaurentPoly outside = LaurentPoly::one();
        for (int v : (all() - i).labels()) outside = outside * (LaurentPoly::one() + p_.at(v).series(Module::B));
        parts[static_cast<std::size_t>(idx)] = cartan_inner(i, full_subcomplex(k_, i)) * outside;
    }
    LaurentPoly total;
    for (const auto& part : parts) total += part;
    return PoincareSeries::unreduced_of(std::move(total));
}

std::vector<Generator> Engine::smash_generators(VertexSet j) const {
    if (!j.subset_of(all())) throw std::invalid_argument("subset " + j.to_string() + " is not a set of vertices");
    std::vector<VertexSet> subsets;
    for_each_subset(j, [&](VertexSet i) {
        if (all_have(p_, j - i, Module::B)) subsets.push_back(i);
    });
    std::vector<int> jl = j.labels();
    std::vector<std::vector<Generator>> parts(subsets.size());
    long n = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(opts_.threads))
    for (long idx = 0; idx < n; ++idx) {
        VertexSet i = subsets[static_cast<std::size_t>(idx)];
        auto& out = parts[static_cast<std::size_t>(idx)];
        SimplicialComplex ki = full_subcomplex(k_, i);
        for (VertexSet sigma : ki.faces()) {
            if (!all_have(p_, sigma, Module::C) || !all_have(p_, i - sigma, Module::E)) continue;
            auto basis = link_basis(i, sigma);
            // choices per vertex of J
            std::vector<std::vector<int>> choices;
            for (int v : jl) {
                Module m = sigma.contains(v) ? Module::C : i.contains(v) ? Module::E : Module::B;
                choices.push_back(p_.at(v).of(m));
            }
            for (int d = -1; d <= basis->top_degree(); ++d)
                for (int c = 0; c < basis->dim(d); ++c) {
                    std::vector<std::size_t> odo(jl.size(), 0);
                    while (true) {
                        Generator g{j, i, sigma, d, c, {}};
                        for (std::size_t k = 0; k < jl.size(); ++k) g.factors.push_back(choices[k][odo[k]]);
                        out.push_back(std::move(g));
                        std::size_t k = jl.size();
                        while (k > 0 && ++odo[k - 1] == choices[k - 1].size()) odo[--k] = 0;
                        if (k == 0) break;
                    }
                }
        }
    }
    std::vector<Generator> all_gens;
    for (auto& part : parts)
        for (auto& g : part) all_gens.push_back(std::move(g));
    return all_gens;
}

std::vector<Generator> Engine::full_generators() const {
    std::vector<Generator> out;
    for_each_subset(all(), [&](VertexSet j) {
        auto part = smash_generators(j);
        out.insert(out.end(), part.begin(), part.end());
    });
    return out;
}

int Engine::degree(const Generator& g) const {
    int deg = g.link_degree + 1;
    auto jl = g.J.labels();
    for (std::size_t k = 0; k < jl.size(); ++k)
        deg += p_.at(jl[k]).gens.at(static_cast<std::size_t>(g.factors.at(k))).degree;
    return deg;
}

void Engine::check(const Generator& g) const {
    auto fail = [&](const std::string& why) { throw std::invalid_argument("not a generator: " + why); };
    if (!g.J.subset_of(all())) fail("J is not a set of vertices");
    if (!g.I.subset_of(g.J)) fail("I is not contained in J");
    if (!g.sigma.subset_of(g.I)) fail("sigma is not contained in I");
    if (!k_.contains(g.sigma)) fail(g.sigma.to_string() + " is not a face");
    auto jl = g.J.labels();
    if (g.factors.size() != jl.size()) fail("wrong number of factors");
    for (std::size_t k = 0; k < jl.size(); ++k) {
        const auto& gens = p_.at(jl[k]).gens;
        int f = g.factors[k];
        if (f < 0 || static_cast<std::size_t>(f) >= gens.size()) fail("factor index out of range");
        if (gens[static_cast<std::size_t>(f)].module != factor_module(g, jl[k]))
            fail("factor " + gens[static_cast<std::size_t>(f)].name + " at vertex " + std::to_string(jl[k]) +
                 " has the wrong type");
    }
    auto basis = link_basis(g.I, g.sigma);
    if (g.link_index < 0 || g.link_index >= basis->dim(g.link_degree))
        fail("link class " + std::to_string(g.link_degree) + ":" + std::to_string(g.link_index) + " does not exist");
}

std::string Engine::label(const Generator& g) const {
    std::string s = "J=" + join_ints(g.J.labels()) + "|I=" + join_ints(g.I.labels()) + "|S=" + join_ints(g.sigma.labels()) +
                    "|L=" + std::to_string(g.link_degree) + ":" + std::to_string(g.link_index) + "|F=";
    auto jl = g.J.labels();
    for (std::size_t k = 0; k < jl.size(); ++k) {
        if (k) s += ',';
        s += p_.at(jl[k]).gens.at(static_cast<std::size_t>(g.factors[k])).name;
    }
    return s;
}

Generator Engine::parse_label(std::string_view text) const {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("unknown generator label '" + std::string(text) + "': " + why);
    };
    std::map<std::string, std::string> fields;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('|', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view part = text.substr(pos, next - pos);
        std::size_t eq = part.find('=');
        if (eq == std::string_view::npos) throw bad("expected key=value");
        if (!fields.emplace(std::string(part.substr(0, eq)), std::string(part.substr(eq + 1))).second)
            throw bad("repeated key");
        pos = next + 1;
    }
    for (const char* key : {"J", "I", "S", "L", "F"})
        if (!fields.count(key)) throw bad(std::string("missing ") + key);
    if (fields.size() != 5) throw bad("unexpected key");
    Generator g;
    try {
        auto set_of = [&](const std::string& s) {
            VertexSet out;
            for (int v : parse_int_list(s)) {
                if (v < 1 || v > kMaxVertices) throw bad("vertex out of range");
                out.insert(v);
            }
            return out;
        };
        g.J = set_of(fields["J"]);
        g.I = set_of(fields["I"]);
        g.sigma = set_of(fields["S"]);
        const std::string& l = fields["L"];
        std::size_t colon = l.find(':');
        if (colon == std::string::npos) throw bad("link field must be degree:index");
        g.link_degree = std::stoi(l.substr(0, colon));
        g.link_index = std::stoi(l.substr(colon + 1));
    } catch (const std::invalid_argument& e) {
        if (std::string(e.what()).rfind("unknown generator label", 0) == 0) throw;
        throw bad(e.what());
    } catch (const std::out_of_range&) {
        throw bad("number out of range");
    }
    auto jl = g.J.labels();
    std::vector<std::string> names;
    if (!fields["F"].empty()) {
        std::stringstream ss(fields["F"]);
        std::string name;
        while (std::getline(ss, name, ',')) names.push_back(name);
    }
    if (names.size() != jl.size()) throw bad("expected one factor per vertex of J");
    if (!g.J.subset_of(all())) throw bad("J is not a set of vertices");
    for (std::size_t k = 0; k < jl.size(); ++k) {
        int idx = p_.at(jl[k]).find(names[k]);
        if (idx < 0) throw bad("vertex " + std::to_string(jl[k]) + " has no generator " + names[k]);
        g.factors.push_back(idx);
    }
    try {
        check(g);
    } catch (const std::invalid_argument& e) {
        throw bad(e.what());
    }
    return g;
}

std::vector<Generator> smash_generators(const SimplicialComplex& k, const PairDecomposition& p, VertexSet j) {
    return Engine(k, p).smash_generators(j);
}

PoincareSeries smash_series(const SimplicialComplex& k, const PairDecomposition& p) { return Engine(k, p).smash_series(); }

PoincareSeries smash_series(const SimplicialComplex& k, const PairDecomposition& p, VertexSet j) {
    return Engine(k, p).smash_series(j);
}

PoincareSeries full_series(const SimplicialComplex& k, const PairDecomposition& p, EngineOptions opts) {
    return Engine(k, p, opts).full_series();
}

int generator_degree(const Generator& g, const Engine& e) { return e.degree(g); }

BettiTable betti_table(const PoincareSeries& s) {
    BettiTable t;
    PoincareSeries full = s.to_unreduced();
    for (const auto& [d, c] : full.poly().terms()) t[d] = c;
    return t;
}

namespace reference {

PoincareSeries smash_series(const SimplicialComplex& k, const PairDecomposition& p, VertexSet j) {
    const Field& f = p.field();
    PoincareSeries total = PoincareSeries::reduced_of({});
    auto wedge = [&](int v, Module m) { return PoincareSeries::reduced_of(p.at(v).series(m)); };
    for_each_subset(j, [&](VertexSet i) {
        SimplicialComplex ki = full_subcomplex(k, i);
        PoincareSeries b_part = PoincareSeries::reduced_of(LaurentPoly::one());
        for (int v : (j - i).labels()) b_part = multiply(b_part, wedge(v, Module::B));
        for (VertexSet sigma : ki.faces()) {
            PoincareSeries term = shift(series_of_complex(link(ki, sigma), f), 1);
            for (int v : sigma.labels()) term = multiply(term, wedge(v, Module::C));
            for (int v : (i - sigma).labels()) term = multiply(term, wedge(v, Module::E));
            total = add(total, multiply(term, b_part));
        }
    });
    return total;
}

PoincareSeries full_series(const SimplicialComplex& k, const PairDecomposition& p) {
    PoincareSeries total = PoincareSeries::reduced_of({});
    for_each_subset(k.ground(), [&](VertexSet j) {
        if (!j.empty()) total = add(total, reference::smash_series(k, p, j));
    });
    return total.to_unreduced();
}

}  // namespace reference

}  // namespace pp
