#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

#include "pp/complex.hpp"
#include "pp/field.hpp"

namespace pp {

// Laurent polynomial with integer coefficients; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int degree, const mpz_class& c = 1);
    static LaurentPoly one() { return monomial(0); }

    const std::map<int, mpz_class>& terms() const { return terms_; }
    mpz_class coefficient(int d) const;
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

    void add_term(int degree, const mpz_class& c);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly shifted(int s) const;
    mpz_class evaluate_at_minus_one() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    std::map<int, mpz_class> terms_;
};

class SeriesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Hilbert-Poincare series of a space, flagged reduced or unreduced.
class PoincareSeries {
public:
    PoincareSeries() = default;
    PoincareSeries(LaurentPoly p, bool reduced) : poly_(std::move(p)), reduced_(reduced) {}
    static PoincareSeries reduced_of(LaurentPoly p) { return {std::move(p), true}; }
    static PoincareSeries unreduced_of(LaurentPoly p) { return {std::move(p), false}; }

    bool is_reduced() const { return reduced_; }
    const LaurentPoly& poly() const { return poly_; }
    mpz_class coefficient(int d) const { return poly_.coefficient(d); }
    mpz_class evaluate_at_minus_one() const { return poly_.evaluate_at_minus_one(); }

    PoincareSeries to_unreduced() const;
    PoincareSeries to_reduced() const;

    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;
    std::string to_string() const { return poly_.to_string(); }

private:
    LaurentPoly poly_;
    bool reduced_ = true;
};

// Sum of series with the same flag.
PoincareSeries add(const PoincareSeries& a, const PoincareSeries& b);
// reduced*reduced is the reduced series of the smash product;
// unreduced*unreduced is the series of the Cartesian product.
PoincareSeries multiply(const PoincareSeries& a, const PoincareSeries& b);
// Suspension shift; defined on reduced series only.
PoincareSeries shift(const PoincareSeries& a, int s);

// Reduced series of |K|, including t^-1 for the empty complex.
PoincareSeries series_of_complex(const SimplicialComplex& k, const Field& f);

}  // namespace pp
