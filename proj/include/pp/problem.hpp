#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pp/complex.hpp"
#include "pp/pairdata.hpp"

namespace pp {

class ProblemError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Problem {
    SimplicialComplex complex;
    PairDecomposition pairs;
    std::optional<VertexSet> subset;  // optional restriction to a full subcomplex
};

bool operator==(const Problem& a, const Problem& b);

Problem parse_problem_text(std::string_view text);
Problem parse_problem(const std::string& path);
std::string print_problem(const Problem& p);

// "1,3,4" -> {1,3,4}
VertexSet parse_subset(std::string_view text, int m);

}  // namespace pp
