// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance               run all criteria
//   acceptance --criterion N run criterion N only

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "brute.hpp"
#include "pp/cli.hpp"
#include "pp/oracle.hpp"
#include "pp/starprod.hpp"

using namespace pp;

namespace {

const Field Q = Field::rationals();

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    long checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) detail << what;
        pass = pass && ok;
    }
};

PairDecomposition uniform(const SimplicialComplex& k, const char* name, const Field& f = Q) {
    int m = k.ground().empty() ? 0 : k.ground().max();
    return PairDecomposition::uniform(m, builtin(name, f), f);
}

LaurentPoly poly(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly p;
    for (auto [d, c] : terms) p.add_term(d, c);
    return p;
}

std::string order_string(const SimplicialComplex& k) {
    std::string s;
    for (auto f : shortlex_faces(k)) s += (s.empty() ? "" : " < ") + f.to_string();
    return s;
}

const std::vector<CorpusInstance>& corpus() {
    static const auto c = make_corpus(0, 6);
    return c;
}

void shortlex(Outcome& o) {
    auto two_edges = SimplicialComplex::from_faces(3, {VertexSet::of({1, 3}), VertexSet::of({2, 3})});
    auto got = order_string(two_edges);
    o.expect(got == "{} < {1} < {2} < {3} < {1,3} < {2,3}", "two edges: " + got);
    got = order_string(families::simplex(3));
    o.expect(got == "{} < {1} < {2} < {3} < {1,2} < {1,3} < {2,3} < {1,2,3}", "2-simplex: " + got);
}

void worked_product(Outcome& o) {
    auto k = families::discrete(2);
    Engine e(k, uniform(k, "mf-cp3"));
    auto u = e.parse_label("J=1,2|I=1|S=1|L=-1:0|F=c8,b4");
    auto v = e.parse_label("J=1,2|I=1,2|S=1|L=-1:0|F=c8,e2");
    auto r = star(e, u, v);
    o.expect(!r.has_unknown(), "unexpected unknown terms");
    o.expect(r.terms.size() == 1, std::to_string(r.terms.size()) + " terms");
    if (r.terms.size() != 1) return;
    const auto& [g, c] = *r.terms.begin();
    o.expect(e.label(g) == "J=1,2|I=1|S=1|L=-1:0|F=c16,b6", "term " + e.label(g));
    o.expect(c == 1, "coefficient " + c.get_str());
    o.expect(e.degree(g) == 24, "term " + e.label(g) + " has degree " + std::to_string(e.degree(g)) + ", expected 24");
}

void discrete_points(Outcome& o) {
    for (int m = 2; m <= 5; ++m) {
        auto k = families::discrete(m);
        Engine e(k, uniform(k, "s0-pair"));
        auto gens = e.full_generators();
        auto alpha = [](const Generator& g) { return g.sigma.size() == 1; };
        for (const auto& u : gens)
            for (const auto& v : gens) {
                if (u.J.empty() || v.J.empty()) continue;
                auto r = cup(e, u, v);
                std::string where = "m=" + std::to_string(m) + " " + e.label(u) + " * " + e.label(v);
                o.expect(!r.has_unknown(), where + ": unknown terms");
                if (alpha(u) && alpha(v) && u.sigma == v.sigma) {
                    Generator w = u;
                    w.J = w.I = u.J | v.J;
                    w.factors.clear();
                    for (int x : w.J.labels()) w.factors.push_back(e.pairs().at(x).find(u.sigma.contains(x) ? "c0" : "e0"));
                    o.expect(r.terms == std::map<Generator, Scalar>{{w, 1}}, where + ": expected " + e.label(w));
                } else {
                    o.expect(r.is_zero(), where + ": expected zero");
                }
            }
    }
}

void hochster(Outcome& o) {
    const auto& c = corpus();
    o.expect(c.size() >= 200, "corpus has " + std::to_string(c.size()) + " instances");
    for (const char* family : {"cycle-", "simplex-boundary-", "discrete-", "join-"}) {
        bool seen = false;
        for (const auto& inst : c) seen = seen || inst.name.rfind(family, 0) == 0;
        o.expect(seen, std::string("no ") + family + " instance");
    }
    for (const auto& inst : c) {
        const auto& k = inst.complex;
        o.expect(k.vertex_count() <= 6, inst.name + " is too large");
        o.expect(betti_table(full_series(k, uniform(k, "moment-angle"))) ==
                     hochster_direct(k, HochsterModel::MomentAngle, Q),
                 inst.name + ": moment-angle Betti numbers differ");
        o.expect(betti_table(full_series(k, uniform(k, "real-moment-angle"))) ==
                     hochster_direct(k, HochsterModel::RealMomentAngle, Q),
                 inst.name + ": real moment-angle Betti numbers differ");
    }
}

void manifolds(Outcome& o) {
    auto two = families::discrete(2);
    o.expect(full_series(two, uniform(two, "moment-angle")).poly() == poly({{0, 1}, {3, 1}}), "two points");
    auto c4 = families::cycle(4);
    o.expect(full_series(c4, uniform(c4, "moment-angle")).poly() == poly({{0, 1}, {3, 2}, {6, 1}}), "4-cycle");
    o.expect(full_series(c4, uniform(c4, "real-moment-angle")).poly() == poly({{0, 1}, {1, 2}, {2, 1}}), "torus");
    Engine e(c4, uniform(c4, "moment-angle"));
    std::vector<Generator> deg3;
    Generator top;
    for (const auto& g : e.full_generators()) {
        if (e.degree(g) == 3) deg3.push_back(g);
        if (e.degree(g) == 6) top = g;
    }
    o.expect(deg3.size() == 2, "expected two degree-3 generators");
    if (deg3.size() != 2) return;
    auto xy = cup(e, deg3[0], deg3[1]);
    bool is_top = xy.unknown.empty() && xy.terms.size() == 1 && xy.terms.begin()->first == top &&
                  abs(xy.terms.begin()->second) == 1;
    o.expect(is_top, "x*y is not +-top");
    o.expect(cup(e, deg3[0], deg3[0]).is_zero(), "x^2 != 0");
    o.expect(cup(e, deg3[1], deg3[1]).is_zero(), "y^2 != 0");
}

void euler(Outcome& o) {
    for (const auto& inst : corpus()) {
        const auto& k = inst.complex;
        std::vector<const char*> names{"moment-angle", "real-moment-angle", "s0-pair"};
        if (k.vertex_count() <= 4) names.push_back("mf-cp3");
        for (const char* name : names) {
            auto p = uniform(k, name);
            auto lhs = full_series(k, p).evaluate_at_minus_one();
            auto rhs = euler_characteristic(k, p);
            o.expect(lhs == rhs, inst.name + "/" + name + ": " + lhs.get_str() + " vs " + rhs.get_str());
        }
    }
}

void joins(Outcome& o) {
    const auto& c = corpus();
    std::map<std::pair<std::size_t, std::string>, PoincareSeries> cache;
    auto series = [&](std::size_t i, const char* name) -> const PoincareSeries& {
        auto key = std::make_pair(i, std::string(name));
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, full_series(c[i].complex, uniform(c[i].complex, name))).first;
        return it->second;
    };
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b) {
            const auto &k1 = c[a].complex, &k2 = c[b].complex;
            if (k1.vertex_count() + k2.vertex_count() > 6) continue;
            auto kj = join(k1, k2);
            for (const char* name : {"moment-angle", "real-moment-angle"}) {
                auto lhs = full_series(kj, uniform(kj, name));
                o.expect(lhs == multiply(series(a, name), series(b, name)),
                         c[a].name + " * " + c[b].name + " (" + name + ")");
            }
        }
}

void pair_validation(Outcome& o) {
    auto mf = builtin("mf-cp3", Q);
    o.expect(check_pair(mf, Q).empty(), "catalog entry rejected");
    auto set = [](PairData& p, Side s, const char* l, const char* r, const char* out, long c = 1) {
        p.table(s).entries[{p.find(l), p.find(r)}] = {Term{c, p.find(out)}};
    };
    auto only = [&](const PairData& p, const Field& f, const std::string& rule, const std::string& what) {
        auto issues = check_pair(p, f);
        bool ok = !issues.empty();
        for (const auto& i : issues) ok = ok && i.rule == rule;
        o.expect(ok, what + ": expected a single " + rule + " diagnostic");
    };
    auto p = mf;
    set(p, Side::X, "c8", "c8", "c14");
    only(p, Q, "degree-additivity", "degree");
    p = mf;
    set(p, Side::X, "c8", "b4", "c12", 2);
    only(p, Q, "graded-commutativity", "commutativity");
    p = mf;
    set(p, Side::X, "e2", "e2", "b4");
    only(p, Q, "module-target", "module target");
    auto so3 = builtin("so3-rp2", Field::prime(2));
    so3.a.entries.clear();
    only(so3, Field::prime(2), "iota-compatibility", "iota");
    p = mf;
    (*p.betti_a)[4] = 2;
    only(p, Q, "exactness", "exactness of A");
    p = mf;
    p.betti_quotient->erase(3);
    only(p, Q, "exactness", "exactness of X/A");
}

void structural(Outcome& o) {
    for (const auto& inst : corpus()) {
        const auto& k = inst.complex;
        int m = k.vertex_count();
        // series and basis coherence
        for (const char* name : {"moment-angle", "real-moment-angle", "s0-pair", "mf-cp3"}) {
            if (std::string(name) == "mf-cp3" && m > 4) continue;
            Engine e(k, uniform(k, name));
            LaurentPoly from_gens;
            auto gens = e.full_generators();
            for (const auto& g : gens) from_gens.add_term(e.degree(g), 1);
            o.expect(from_gens == e.full_series().poly(), inst.name + "/" + name + ": series and basis differ");
            // degree additivity of star
            if (m > 3 || (std::string(name) == "mf-cp3" && m > 2)) continue;
            for (const auto& u : gens)
                for (const auto& v : gens) {
                    auto r = cup(e, u, v);
                    for (const auto& [g, c] : r.terms)
                        o.expect(e.degree(g) == e.degree(u) + e.degree(v) && g.J == (u.J | v.J),
                                 inst.name + ": " + e.label(u) + " * " + e.label(v) + " is not homogeneous");
                }
        }
        // pullback squares and functoriality of restriction
        Engine e(k, uniform(k, "moment-angle"));
        VertexSet all = k.ground();
        for_each_subset(all, [&](VertexSet i) {
            auto ki = full_subcomplex(k, i);
            for (VertexSet sigma : ki.faces()) {
                int top = e.link_basis(i, sigma)->top_degree();
                for (int l : (i - sigma).labels())
                    for (int s : (all - i).labels()) {
                        VertexSet grown = sigma | VertexSet::single(s);
                        if (!k.contains(grown)) continue;
                        VertexSet il = i - VertexSet::single(l), is = i | VertexSet::single(s), small = is - VertexSet::single(l);
                        for (int d = -1; d <= top; ++d) {
                            auto a = multiply(link_restriction_matrix(e, is, grown, small, grown, d),
                                              link_restriction_matrix(e, i, sigma, is, grown, d), Q);
                            auto b = multiply(link_restriction_matrix(e, il, sigma, small, grown, d),
                                              link_restriction_matrix(e, i, sigma, il, sigma, d), Q);
                            o.expect(a == b, inst.name + ": pullback square does not commute");
                            o.expect(a == link_restriction_matrix(e, i, sigma, small, grown, d),
                                     inst.name + ": restriction is not functorial");
                        }
                    }
            }
        });
    }
    o.expect(o.checks >= 10000, "only " + std::to_string(o.checks) + " assertions");
}

void determinism(Outcome& o) {
    auto one = run_command({"oracle", "--check", "all", "--seed", "0", "--threads", "1"});
    auto eight = run_command({"oracle", "--check", "all", "--seed", "0", "--threads", "8"});
    o.expect(one.status == 0, "oracle run failed with status " + std::to_string(one.status));
    o.expect(one.out == eight.out && one.status == eight.status, "outputs differ between 1 and 8 threads");
    o.expect(!one.out.empty(), "empty output");
}

struct Criterion {
    const char* title;
    std::function<void(Outcome&)> run;
};

const std::vector<Criterion> kCriteria{
    {"shortlex order", shortlex},
    {"worked product on two points", worked_product},
    {"discrete points with the S0 pair", discrete_points},
    {"Hochster equivalence on the corpus", hochster},
    {"known manifolds", manifolds},
    {"Euler characteristic cross-check", euler},
    {"join multiplicativity", joins},
    {"pair validation", pair_validation},
    {"structural invariants", structural},
    {"oracle output is thread independent", determinism},
};

bool run(std::size_t n) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        kCriteria[n - 1].run(o);
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << kCriteria[n - 1].title << " ("
              << o.checks << " checks, " << std::fixed << std::setprecision(2) << secs << " s)";
    if (!o.pass) std::cout << "  -- " << o.detail.str();
    std::cout << "\n";
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> which;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            which.push_back(std::stoul(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 1;
        }
    }
    if (which.empty())
        for (std::size_t n = 1; n <= kCriteria.size(); ++n) which.push_back(n);
    bool ok = true;
    for (auto n : which) {
        if (n < 1 || n > kCriteria.size()) {
            std::cerr << "no criterion " << n << "\n";
            return 1;
        }
        ok = run(n) && ok;
    }
    return ok ? 0 : 1;
}
