#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pp/cartan.hpp"

namespace pp {

// Class in H~^degree(lk_sigma(K_S)) in the engine's basis.
struct LinkClass {
    VertexSet S, sigma;
    int degree = -1;
    Vec coeffs;
    friend bool operator==(const LinkClass&, const LinkClass&) = default;
};

LinkClass link_class_of(const Engine& e, const Generator& g);

enum class LinkRule {
    NoTarget,      // tau | omega is not a face
    DegreeZero,    // S0: the target group vanishes
    Unit,          // S1
    UnitExtended,  // S1 with a larger overlap than a single shared vertex
    Join,          // S2
    Unknown        // S3
};
const char* rule_name(LinkRule r);

struct LinkProduct {
    LinkRule rule;
    std::optional<LinkClass> value;  // set for Unit, UnitExtended, Join
};

// Product of a over (J, tau) and b over (L, omega) landing in lk_sigma(K_I).
LinkProduct link_star(const Engine& e, const LinkClass& a, const LinkClass& b, VertexSet i, VertexSet sigma);

// Pullback along lk_sigma(K_{S - l}) <= lk_sigma(K_S).
LinkClass link_iota(const Engine& e, const LinkClass& c, int l);
// Pullback along lk_{sigma+s}(K_{S+s}) <= lk_sigma(K_S).
LinkClass link_rho(const Engine& e, const LinkClass& c, int s);
// Pullback along lk_sigma2(K_S2) <= lk_sigma(K_S); the inclusion must hold.
LinkClass restrict_link(const Engine& e, const LinkClass& c, VertexSet s2, VertexSet sigma2);
Matrix link_restriction_matrix(const Engine& e, VertexSet s, VertexSet sigma, VertexSet s2, VertexSet sigma2, int degree);

// A term whose link product could not be evaluated.
struct UnknownTerm {
    Scalar coeff;
    LinkClass alpha, beta;
    VertexSet I, sigma;  // where alpha*beta lives
    Generator pending;   // target summand, link_index = -1
};

struct StarClass {
    std::map<Generator, Scalar> terms;
    std::vector<UnknownTerm> unknown;
    std::set<std::string> flags;

    void add(const Generator& g, const Scalar& c, const Field& f);
    bool is_zero() const { return terms.empty() && unknown.empty(); }
    bool has_unknown() const { return !unknown.empty(); }
};

StarClass star(const Engine& e, const Generator& u, const Generator& v);
// Cup product of full-space generators: star with P = J1, Q = J2.
StarClass cup(const Engine& e, const Generator& u, const Generator& v);

Generator unit_generator();

}  // namespace pp
