#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pp/complex.hpp"
#include "pp/homalg.hpp"
#include "pp/pairdata.hpp"
#include "pp/series.hpp"

namespace pp {

// Basis element of H~*(Z^(K_J; (X,A)_J)): a link class of lk_sigma(K_I) tensored
// with one factor per vertex of J (C' on sigma, E' on I - sigma, B' on J - I).
struct Generator {
    VertexSet J, I, sigma;
    int link_degree = -1;
    int link_index = 0;
    std::vector<int> factors;  // generator index in the pair of each vertex of J, increasing label

    friend auto operator<=>(const Generator&, const Generator&) = default;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Module a vertex of J contributes to g.
inline Module factor_module(const Generator& g, int vertex) {
    if (g.sigma.contains(vertex)) return Module::C;
    if (g.I.contains(vertex)) return Module::E;
    return Module::B;
}

struct EngineOptions {
    int threads = 0;  // 0: PP_THREADS or the OpenMP default
    // Mutation hook for oracle self-tests: omit the suspension factor t.
    bool drop_suspension = false;
};

int resolve_threads(int requested);

class Engine {
public:
    Engine(SimplicialComplex k, PairDecomposition p, EngineOptions opts = {});

    const SimplicialComplex& complex() const { return k_; }
    const PairDecomposition& pairs() const { return p_; }
    const Field& field() const { return p_.field(); }
    const EngineOptions& options() const { return opts_; }
    int vertex_count() const { return k_.vertex_count(); }
    VertexSet all() const { return k_.ground(); }

    // Memoized lk_sigma(K_I) and its cohomology; safe for concurrent use.
    std::shared_ptr<const CohomologyBasis> link_basis(VertexSet i, VertexSet sigma) const;
    std::vector<int> link_betti(VertexSet i, VertexSet sigma) const;

    std::vector<Generator> smash_generators(VertexSet j) const;
    // Unit (J = {}) followed by the generators of every nonempty J in binary order.
    std::vector<Generator> full_generators() const;
    PoincareSeries smash_series(VertexSet j) const;
    PoincareSeries smash_series() const { return smash_series(all()); }
    PoincareSeries full_series() const;

    int degree(const Generator& g) const;
    std::string label(const Generator& g) const;
    Generator parse_label(std::string_view text) const;
    // Throws std::invalid_argument if g is not a basis element.
    void check(const Generator& g) const;

private:
    LaurentPoly cartan_inner(VertexSet i, const SimplicialComplex& ki) const;
    std::vector<int> memo_betti(const SimplicialComplex& lk) const;

    SimplicialComplex k_;
    PairDecomposition p_;
    EngineOptions opts_;

    mutable std::shared_mutex basis_mutex_;
    mutable std::map<std::pair<VertexSet::Bits, VertexSet::Bits>, std::shared_ptr<const CohomologyBasis>> bases_;
    mutable std::shared_mutex betti_mutex_;
    mutable std::unordered_map<std::string, std::vector<int>> betti_;
};

std::vector<Generator> smash_generators(const SimplicialComplex& k, const PairDecomposition& p, VertexSet j);
PoincareSeries smash_series(const SimplicialComplex& k, const PairDecomposition& p);
PoincareSeries smash_series(const SimplicialComplex& k, const PairDecomposition& p, VertexSet j);
PoincareSeries full_series(const SimplicialComplex& k, const PairDecomposition& p, EngineOptions opts = {});
int generator_degree(const Generator& g, const Engine& e);

// Betti numbers by degree.
using BettiTable = std::map<int, mpz_class>;
BettiTable betti_table(const PoincareSeries& s);

// Serial evaluation straight from the definitions: no memo, no threads.
namespace reference {
PoincareSeries smash_series(const SimplicialComplex& k, const PairDecomposition& p, VertexSet j);
PoincareSeries full_series(const SimplicialComplex& k, const PairDecomposition& p);
}  // namespace reference

}  // namespace pp
