#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pp/cartan.hpp"

namespace pp {

struct OracleReport {
    std::string check;
    std::string instance;
    std::string expected, computed;
    bool pass = false;
    std::string reproduction;  // problem file reproducing the instance
};

// chi(Z(K; (X, A))) by inclusion-exclusion over the maximal faces of K.
mpz_class euler_characteristic(const SimplicialComplex& k, const PairDecomposition& p);

enum class HochsterModel { MomentAngle, RealMomentAngle };
// Model of a pair decomposition, if every vertex is the (D2,S1) or every vertex the (D1,S0) pair.
HochsterModel hochster_model_of(const PairDecomposition& p);
BettiTable hochster_direct(const SimplicialComplex& k, HochsterModel model, const Field& f);

struct CorpusInstance {
    std::string name;
    SimplicialComplex complex;
};
// Named families plus seeded random complexes with at most 12 facets.
std::vector<CorpusInstance> make_corpus(std::uint64_t seed, int max_m);

struct CorpusOptions {
    std::uint64_t seed = 0;
    int max_m = 6;
    std::set<std::string> checks{"euler", "hochster", "join"};
    int threads = 0;
    EngineOptions engine;  // passed to every engine built by the checks
};
std::vector<OracleReport> corpus_check(const CorpusOptions& opts);
std::vector<OracleReport> corpus_check(const std::vector<CorpusInstance>& corpus, const CorpusOptions& opts);

}  // namespace pp
