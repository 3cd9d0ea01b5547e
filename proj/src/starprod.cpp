#include "pp/starprod.hpp"

#include <stdexcept>

namespace pp {

const char* rule_name(LinkRule r) {
    switch (r) {
        case LinkRule::NoTarget: return "no-target";
        case LinkRule::DegreeZero: return "degree";
        case LinkRule::Unit: return "unit";
        case LinkRule::UnitExtended: return "unit-extended";
        case LinkRule::Join: return "join";
        case LinkRule::Unknown: return "unknown";
    }
    return "?";
}

Generator unit_generator() { return Generator{}; }

LinkClass link_class_of(const Engine& e, const Generator& g) {
    auto basis = e.link_basis(g.I, g.sigma);
    LinkClass c{g.I, g.sigma, g.link_degree, Vec(static_cast<std::size_t>(basis->dim(g.link_degree)))};
    c.coeffs.at(static_cast<std::size_t>(g.link_index)) = 1;
    return c;
}

Matrix link_restriction_matrix(const Engine& e, VertexSet s, VertexSet sigma, VertexSet s2, VertexSet sigma2, int degree) {
    if (!sigma.subset_of(sigma2) || !(s2 - sigma2).subset_of(s - sigma))
        throw std::invalid_argument("link restriction: lk" + sigma2.to_string() + "(K" + s2.to_string() +
                                    ") is not contained in lk" + sigma.to_string() + "(K" + s.to_string() + ")");
    auto big = e.link_basis(s, sigma);
    auto small = e.link_basis(s2, sigma2);
    return pullback(*big, *small, degree);
}

LinkClass restrict_link(const Engine& e, const LinkClass& c, VertexSet s2, VertexSet sigma2) {
    if (s2 == c.S && sigma2 == c.sigma) return c;
    Matrix m = link_restriction_matrix(e, c.S, c.sigma, s2, sigma2, c.degree);
    return LinkClass{s2, sigma2, c.degree, m.apply(c.coeffs, e.field())};
}

LinkClass link_iota(const Engine& e, const LinkClass& c, int l) {
    if (!(c.S - c.sigma).contains(l)) throw std::invalid_argument("iota: vertex " + std::to_string(l) + " is not in I - sigma");
    return restrict_link(e, c, c.S - VertexSet::single(l), c.sigma);
}

LinkClass link_rho(const Engine& e, const LinkClass& c, int s) {
    if (c.S.contains(s) || !e.all().contains(s)) throw std::invalid_argument("rho: vertex " + std::to_string(s) + " must lie outside I");
    VertexSet grown = c.sigma | VertexSet::single(s);
    if (!e.complex().contains(grown)) throw std::invalid_argument("rho: " + grown.to_string() + " is not a face");
    return restrict_link(e, c, c.S | VertexSet::single(s), grown);
}

LinkProduct link_star(const Engine& e, const LinkClass& a, const LinkClass& b, VertexSet i, VertexSet sigma) {
    if (i != (a.S | b.S) || a.sigma != (sigma & a.S) || b.sigma != (sigma & b.S) || !sigma.subset_of(i))
        throw std::invalid_argument("link_star: context mismatch");
    if (!e.complex().contains(sigma)) return {LinkRule::NoTarget, std::nullopt};
    auto target = e.link_basis(i, sigma);
    int d = a.degree + b.degree + 1;
    if (target->dim(d) == 0) return {LinkRule::DegreeZero, std::nullopt};
    const Field& f = e.field();
    if (a.degree == -1 && b.degree == -1) {
        Scalar c = a.coeffs.at(0) * b.coeffs.at(0);
        f.normalize(c);
        VertexSet overlap = a.S & b.S;
        bool simple = overlap.empty() || (a.sigma == b.sigma && a.sigma.size() == 1);
        return {simple ? LinkRule::Unit : LinkRule::UnitExtended, LinkClass{i, sigma, -1, Vec{c}}};
    }
    if ((a.S & b.S).empty()) {
        auto ba = e.link_basis(a.S, a.sigma);
        auto bb = e.link_basis(b.S, b.sigma);
        CohomologyBasis joined(join(ba->complex(), bb->complex()), f);
        Vec on_join = join_class(*ba, a.degree, a.coeffs, *bb, b.degree, b.coeffs, joined);
        Matrix m = pullback(joined, *target, d);
        return {LinkRule::Join, LinkClass{i, sigma, d, m.apply(on_join, f)}};
    }
    return {LinkRule::Unknown, std::nullopt};
}

void StarClass::add(const Generator& g, const Scalar& c, const Field& f) {
    auto [it, inserted] = terms.try_emplace(g, 0);
    it->second += c;
    f.normalize(it->second);
    if (it->second == 0) terms.erase(it);
}

namespace {

struct Branch {
    Scalar coeff;
    int gen;
    Module module;
};

Module module_in(VertexSet cartan, VertexSet simplex, int v) {
    if (simplex.contains(v)) return Module::C;
    if (cartan.contains(v)) return Module::E;
    return Module::B;
}

}  // namespace

StarClass star(const Engine& e, const Generator& u, const Generator& v) {
    e.check(u);
    e.check(v);
    const Field& f = e.field();
    StarClass out;
    VertexSet P = u.J, J = u.I, tau = u.sigma;
    VertexSet Q = v.J, L = v.I, omega = v.sigma;
    VertexSet S = P | Q, I = J | L, sigma = tau | omega;
    // a C-factor meeting an E-factor has no target summand
    if ((sigma & J) != tau || (sigma & L) != omega) return out;
    if (!e.complex().contains(sigma)) return out;

    auto pl = P.labels(), ql = Q.labels(), sl = S.labels();
    auto factor_of = [](const Generator& g, const std::vector<int>& labels, int vtx) {
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == vtx) return g.factors[k];
        return -1;
    };

    // Koszul sign of moving beta past the factors of u and interleaving the factors.
    struct Item {
        int target, degree;
    };
    std::vector<Item> items;
    items.push_back({0, u.link_degree + 1});
    for (std::size_t k = 0; k < pl.size(); ++k)
        items.push_back({2 + 2 * S.rank_of(pl[k]), e.pairs().at(pl[k]).gens[static_cast<std::size_t>(u.factors[k])].degree});
    items.push_back({1, v.link_degree + 1});
    for (std::size_t k = 0; k < ql.size(); ++k)
        items.push_back({3 + 2 * S.rank_of(ql[k]), e.pairs().at(ql[k]).gens[static_cast<std::size_t>(v.factors[k])].degree});
    int parity = 0;
    for (std::size_t x = 0; x < items.size(); ++x)
        for (std::size_t y = x + 1; y < items.size(); ++y)
            if (items[x].target > items[y].target) parity ^= (items[x].degree * items[y].degree) & 1;

    // per-vertex branches
    std::vector<std::vector<Branch>> branches;
    for (int i : sl) {
        const PairData& pd = e.pairs().at(i);
        std::vector<Branch> bs;
        bool in_p = P.contains(i), in_q = Q.contains(i);
        if (in_p && in_q) {
            int fu = factor_of(u, pl, i), fv = factor_of(v, ql, i);
            Module mu = module_in(J, tau, i), mv = module_in(L, omega, i);
            if ((mu == Module::C && mv == Module::E) || (mu == Module::E && mv == Module::C))
                throw std::logic_error("star: mixed C/E vertex survived the target check");
            Side side = (mu == Module::E || mv == Module::E) ? Side::A : Side::X;
            for (const auto& t : pd.product(side, fu, fv)) bs.push_back({t.coeff, t.gen, pd.gens[static_cast<std::size_t>(t.gen)].module});
        } else if (in_p) {
            int fu = factor_of(u, pl, i);
            bs.push_back({1, fu, pd.gens[static_cast<std::size_t>(fu)].module});
        } else {
            int fv = factor_of(v, ql, i);
            bs.push_back({1, fv, pd.gens[static_cast<std::size_t>(fv)].module});
        }
        if (bs.empty()) return out;
        branches.push_back(std::move(bs));
    }

    LinkClass alpha = link_class_of(e, u), beta = link_class_of(e, v);
    std::optional<LinkProduct> base;
    int d = u.link_degree + v.link_degree + 1;

    std::vector<std::size_t> odo(sl.size(), 0);
    while (true) {
        Scalar coeff = parity ? -1 : 1;
        VertexSet i2, sigma2;
        Generator g{S, {}, {}, d, 0, {}};
        for (std::size_t k = 0; k < sl.size(); ++k) {
            const Branch& b = branches[k][odo[k]];
            coeff *= b.coeff;
            if (b.module == Module::C) {
                i2.insert(sl[k]);
                sigma2.insert(sl[k]);
            } else if (b.module == Module::E) {
                i2.insert(sl[k]);
            }
            g.factors.push_back(b.gen);
        }
        f.normalize(coeff);
        if (coeff != 0 && e.complex().contains(sigma2)) {
            if (!base) base = link_star(e, alpha, beta, I, sigma);
            g.I = i2;
            g.sigma = sigma2;
            if (base->rule == LinkRule::Unknown) {
                g.link_index = -1;
                out.unknown.push_back(UnknownTerm{coeff, alpha, beta, I, sigma, g});
            } else if (base->value) {
                if (base->rule == LinkRule::UnitExtended) out.flags.insert("S1-extended");
                LinkClass moved = restrict_link(e, *base->value, i2, sigma2);
                for (std::size_t idx = 0; idx < moved.coeffs.size(); ++idx) {
                    if (moved.coeffs[idx] == 0) continue;
                    g.link_index = static_cast<int>(idx);
                    out.add(g, coeff * moved.coeffs[idx], f);
                }
            }
        }
        std::size_t k = sl.size();
        while (k > 0 && ++odo[k - 1] == branches[k - 1].size()) odo[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

StarClass cup(const Engine& e, const Generator& u, const Generator& v) { return star(e, u, v); }

}  // namespace pp
