#include <doctest.h>

#include <random>

#include "pp/complex.hpp"
#include "pp/series.hpp"

using namespace pp;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly p;
    for (auto [d, c] : terms) p.add_term(d, c);
    return p;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(-1, 8), coeff(0, 40), count(0, 4);
    LaurentPoly p;
    for (int n = count(rng); n > 0; --n) p.add_term(deg(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("sphere arithmetic") {
    auto s0 = PoincareSeries::reduced_of(LaurentPoly::one());
    CHECK(shift(s0, 1) == PoincareSeries::reduced_of(LaurentPoly::monomial(1)));
    auto s3 = PoincareSeries::reduced_of(LaurentPoly::monomial(3));
    CHECK(multiply(s3, s3) == PoincareSeries::reduced_of(LaurentPoly::monomial(6)));
    auto u3 = s3.to_unreduced();
    CHECK(u3.poly() == poly({{0, 1}, {3, 1}}));
    CHECK(multiply(u3, u3).poly() == poly({{0, 1}, {3, 2}, {6, 1}}));
    CHECK_FALSE(multiply(u3, u3).is_reduced());
    CHECK(multiply(u3, u3).to_reduced().poly() == poly({{3, 2}, {6, 1}}));
}

TEST_CASE("mixing flags is rejected") {
    auto r = PoincareSeries::reduced_of(LaurentPoly::one());
    auto u = PoincareSeries::unreduced_of(LaurentPoly::one());
    CHECK_THROWS_AS(add(r, u), SeriesError);
    CHECK_THROWS_AS(multiply(r, u), SeriesError);
    CHECK_THROWS_AS(shift(u, 1), SeriesError);
}

TEST_CASE("series of complexes") {
    const Field q = Field::rationals();
    CHECK(series_of_complex(SimplicialComplex(), q).poly() == LaurentPoly::monomial(-1));
    CHECK(series_of_complex(families::discrete(2), q).poly() == LaurentPoly::one());
    CHECK(series_of_complex(families::cycle(4), q).poly() == LaurentPoly::monomial(1));
    CHECK(series_of_complex(families::simplex(3), q).poly().is_zero());
    CHECK(series_of_complex(families::octahedron(), q).poly() == LaurentPoly::monomial(2));
}

TEST_CASE("evaluation at minus one") {
    CHECK(poly({{-1, 1}}).evaluate_at_minus_one() == -1);
    CHECK(poly({{0, 1}, {3, 2}, {6, 1}}).evaluate_at_minus_one() == 0);
    CHECK(poly({{0, 1}, {1, 2}, {2, 1}}).evaluate_at_minus_one() == 0);
    CHECK(poly({{0, 5}, {2, 3}}).evaluate_at_minus_one() == 8);
}

TEST_CASE("zero coefficients are not stored") {
    auto p = poly({{2, 3}, {2, -3}, {1, 0}});
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK(p.to_string() == "0");
}

TEST_CASE("large coefficients stay exact") {
    LaurentPoly p = poly({{0, 1}, {1, 1}});
    LaurentPoly acc = LaurentPoly::one();
    for (int i = 0; i < 100; ++i) acc = acc * p;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 100, 50);
    CHECK(acc.coefficient(50) == c);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * LaurentPoly::one() == a);
        REQUIRE(a + LaurentPoly() == a);
        REQUIRE((a * b).evaluate_at_minus_one() == a.evaluate_at_minus_one() * b.evaluate_at_minus_one());
        REQUIRE(a.shifted(2).shifted(-2) == a);
        auto ra = PoincareSeries::reduced_of(a), rb = PoincareSeries::reduced_of(b);
        REQUIRE(multiply(ra, rb) == multiply(rb, ra));
        REQUIRE(shift(multiply(ra, rb), 1) == multiply(shift(ra, 1), rb));
        REQUIRE(ra.to_unreduced().to_reduced() == ra);
    }
}

}
