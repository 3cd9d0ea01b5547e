#pragma once

#include <vector>

#include "brute.hpp"
#include "pp/oracle.hpp"

namespace testing_support {

inline const std::vector<pp::CorpusInstance>& corpus() {
    static const std::vector<pp::CorpusInstance> c = pp::make_corpus(0, 6);
    return c;
}

inline std::vector<brute::Mask> masks(const pp::SimplicialComplex& k) {
    std::vector<brute::Mask> out;
    for (auto f : k.faces()) out.push_back(f.bits());
    std::sort(out.begin(), out.end());
    return out;
}

inline pp::PairDecomposition uniform(const pp::SimplicialComplex& k, const char* name,
                                     pp::Field f = pp::Field::rationals()) {
    int m = k.ground().empty() ? 0 : k.ground().max();
    return pp::PairDecomposition::uniform(m, pp::builtin(name, f), f);
}

}  // namespace testing_support
