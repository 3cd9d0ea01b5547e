#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pp/field.hpp"
#include "pp/series.hpp"

namespace pp {

enum class Module { B, C, E };
char module_letter(Module m);

struct GradedGen {
    std::string name;
    int degree = 0;
    Module module = Module::B;
    friend bool operator==(const GradedGen&, const GradedGen&) = default;
};

struct Term {
    Scalar coeff;
    int gen;
    friend bool operator==(const Term&, const Term&) = default;
};
// Sorted by generator index, no zero coefficients.
using Combination = std::vector<Term>;

enum class Side { X, A };

// Products of generators; missing entries are zero.
struct MultTable {
    std::map<std::pair<int, int>, Combination> entries;
    const Combination* find(int lhs, int rhs) const {
        auto it = entries.find({lhs, rhs});
        return it == entries.end() ? nullptr : &it->second;
    }
    friend bool operator==(const MultTable&, const MultTable&) = default;
};

using DimTable = std::map<int, int>;  // degree -> dimension

// Strongly free decomposition of one pair (X, A): generators of B', C', E'
// with the cup products of H~*(X) (on B' + C') and H~*(A) (on B' + E').
struct PairData {
    std::string name;
    bool non_connected = false;
    std::vector<GradedGen> gens;
    MultTable x, a;
    // optional reduced Betti numbers used by the exactness audit
    std::optional<DimTable> betti_x, betti_a, betti_quotient;

    int find(std::string_view gen_name) const;
    std::vector<int> of(Module m) const;
    bool has(Module m) const;
    LaurentPoly series(Module m) const;
    const MultTable& table(Side s) const { return s == Side::X ? x : a; }
    MultTable& table(Side s) { return s == Side::X ? x : a; }
    // Falls back to the mirrored (rhs, lhs) entry with the graded sign.
    Combination product(Side s, int lhs, int rhs) const;

    friend bool operator==(const PairData&, const PairData&) = default;
};

struct ValidationIssue {
    std::string rule;
    std::string where;
    std::string detail;
};

class PairValidationError : public std::invalid_argument {
public:
    explicit PairValidationError(std::vector<ValidationIssue> issues);
    const std::vector<ValidationIssue>& issues() const { return issues_; }

private:
    std::vector<ValidationIssue> issues_;
};

// All violated rules, empty if the pair is valid.
std::vector<ValidationIssue> check_pair(const PairData& p, const Field& f);
// Checks the pair; throws PairValidationError. Mirrored entries stay implicit (see product).
PairData validate_pair(PairData p, const Field& f);

// Per-vertex pair data for vertices 1..m, all over one field.
class PairDecomposition {
public:
    PairDecomposition() = default;
    PairDecomposition(Field f, std::vector<std::shared_ptr<const PairData>> per_vertex);
    static PairDecomposition uniform(int m, const PairData& p, const Field& f);

    const Field& field() const { return field_; }
    int vertex_count() const { return static_cast<int>(per_vertex_.size()); }
    const PairData& at(int vertex) const { return *per_vertex_.at(static_cast<std::size_t>(vertex - 1)); }
    const std::shared_ptr<const PairData>& shared_at(int vertex) const {
        return per_vertex_.at(static_cast<std::size_t>(vertex - 1));
    }
    // true if every vertex refers to the same PairData object
    bool is_uniform() const;

private:
    Field field_;
    std::vector<std::shared_ptr<const PairData>> per_vertex_;
};

struct WedgeModel {
    std::vector<int> b, c, e;  // sphere dimensions
    std::string describe() const;
};
WedgeModel wedge_model(const PairDecomposition& p, int vertex);

std::vector<std::string> builtin_names();
PairData builtin(std::string_view name, const Field& f);

// Splits reduced Betti tables of X and A along the ranks of iota*: H~(X) -> H~(A).
// Product tables are left empty.
PairData split_from_ranks(std::string name, const DimTable& betti_x, const DimTable& betti_a, const DimTable& rank_iota,
                          bool non_connected = false);

}  // namespace pp
