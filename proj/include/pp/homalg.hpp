#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "pp/complex.hpp"
#include "pp/field.hpp"

namespace pp {

struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    static Matrix identity(std::size_t n);

    Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    Vec apply(const Vec& v, const Field& f) const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);
std::size_t rank(Matrix m, const Field& f);

// Semi-echelon set of vectors, each carrying a tag vector. Reducing a vector
// against it also accumulates the matching combination of tags.
class Reducer {
public:
    Reducer(const Field& f, std::size_t dim, std::size_t tag_dim) : field_(f), dim_(dim), tag_dim_(tag_dim) {}
    // Returns false if v is dependent on the stored vectors.
    bool insert(Vec v, Vec tag);
    // v := v - sum c_j w_j, returns sum c_j tag_j.
    Vec reduce(Vec& v) const;
    std::size_t size() const { return rows_.size(); }

private:
    struct Row {
        std::size_t pivot;
        Vec v, tag;
    };
    Field field_;
    std::size_t dim_, tag_dim_;
    std::vector<Row> rows_;
};

class HomalgError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Reduced cohomology of the augmented cochain complex, degrees -1..dim K,
// with cocycle representatives. Cochains of degree d are vectors indexed by
// the shortlex run of d-faces.
class CohomologyBasis {
public:
    CohomologyBasis(SimplicialComplex k, Field f);

    const SimplicialComplex& complex() const { return k_; }
    const Field& field() const { return field_; }
    int top_degree() const { return k_.dimension(); }
    int dim(int d) const;
    const std::vector<Vec>& representatives(int d) const;

    Vec coboundary(int d, const Vec& cochain) const;
    bool is_cocycle(int d, const Vec& cochain) const;
    // Coordinates of the class of a cocycle; throws HomalgError if not a cocycle.
    Vec express(int d, const Vec& cocycle) const;
    // Cochain sum_i coeffs[i] * rep_i.
    Vec cochain(int d, const Vec& coeffs) const;

private:
    struct Degree {
        std::vector<Vec> reps;
        std::unique_ptr<Reducer> reducer;
    };
    SimplicialComplex k_;
    Field field_;
    std::vector<Degree> degrees_;  // index d+1
};

CohomologyBasis reduced_cohomology(const SimplicialComplex& k, const Field& f);

// dim H~^d for d = -1..dim K (index d+1); rank computation only.
std::vector<int> reduced_betti(const SimplicialComplex& k, const Field& f);

// Induced map H~^d(K) -> H~^d(K') of an inclusion K' <= K (same ambient labels).
// Rows index the basis of `source` (on K'), columns that of `target` (on K).
Matrix pullback(const CohomologyBasis& target, const CohomologyBasis& source, int d);
std::vector<Matrix> pullback(const CohomologyBasis& target, const CohomologyBasis& source);

// Kunneth class in degree p+q+1 of the join. `joined` must be the basis of
// join(K1, K2) where K1, K2 have disjoint ground sets.
Vec join_cochain(const CohomologyBasis& b1, int p, const Vec& alpha, const CohomologyBasis& b2, int q,
                 const Vec& beta, const SimplicialComplex& joined);
Vec join_class(const CohomologyBasis& b1, int p, const Vec& alpha, const CohomologyBasis& b2, int q, const Vec& beta,
               const CohomologyBasis& joined);

}  // namespace pp
