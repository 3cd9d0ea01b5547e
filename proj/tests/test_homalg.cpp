#include <doctest.h>

#include "common.hpp"
#include "pp/homalg.hpp"

using namespace pp;
using testing_support::corpus;
using testing_support::masks;

namespace {

const Field Q = Field::rationals();

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

// Coboundary delta^d as a matrix, built column by column from unit cochains.
Matrix coboundary_matrix(const CohomologyBasis& b, int d) {
    const auto& k = b.complex();
    std::size_t src = k.faces_of_dim(d).size(), dst = k.faces_of_dim(d + 1).size();
    Matrix m(dst, src);
    for (std::size_t j = 0; j < src; ++j) {
        Vec img = b.coboundary(d, unit(src, j));
        for (std::size_t i = 0; i < dst; ++i) m.at(i, j) = img[i];
    }
    return m;
}

long reduced_euler_by_faces(const SimplicialComplex& k) {
    long chi = 0;
    for (auto f : k.faces()) chi += (f.size() % 2 == 1) ? 1 : -1;
    return chi;
}

}  // namespace

TEST_SUITE("homalg") {

TEST_CASE("cohomology examples") {
    auto e = reduced_cohomology(SimplicialComplex(), Q);
    CHECK(e.dim(-1) == 1);
    CHECK(e.top_degree() == -1);
    auto two = reduced_cohomology(families::discrete(2), Q);
    CHECK(two.dim(-1) == 0);
    CHECK(two.dim(0) == 1);
    auto c4 = reduced_cohomology(families::cycle(4), Q);
    CHECK(c4.dim(-1) == 0);
    CHECK(c4.dim(0) == 0);
    CHECK(c4.dim(1) == 1);
    CHECK(reduced_betti(families::ghosts(3), Q) == std::vector<int>{1});
}

TEST_CASE("projective plane depends on the characteristic") {
    auto k = families::rp2_6();
    CHECK(reduced_betti(k, Q) == std::vector<int>{0, 0, 0, 0});
    CHECK(reduced_betti(k, Field::prime(3)) == std::vector<int>{0, 0, 0, 0});
    CHECK(reduced_betti(k, Field::prime(2)) == std::vector<int>{0, 0, 1, 1});
    CHECK(brute::betti_f2(masks(k)) == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("representatives are cocycles and agree with reduced_betti") {
    for (const auto& inst : corpus()) {
        for (Field f : {Q, Field::prime(2)}) {
            auto b = reduced_cohomology(inst.complex, f);
            auto betti = reduced_betti(inst.complex, f);
            for (int d = -1; d <= b.top_degree(); ++d) {
                REQUIRE(b.dim(d) == betti[d + 1]);
                for (const auto& r : b.representatives(d)) REQUIRE(b.is_cocycle(d, r));
            }
        }
    }
}

TEST_CASE("rank-nullity and Euler audit") {
    long checked = 0;
    for (const auto& inst : corpus()) {
        const auto& k = inst.complex;
        auto b = reduced_cohomology(k, Q);
        long alt = 0;
        for (int d = -1; d <= b.top_degree(); ++d) {
            std::size_t n = k.faces_of_dim(d).size();
            std::size_t r_out = rank(coboundary_matrix(b, d), Q);
            std::size_t r_in = d >= 0 ? rank(coboundary_matrix(b, d - 1), Q) : 0;
            REQUIRE(static_cast<std::size_t>(b.dim(d)) == n - r_out - r_in);
            alt += (d % 2 == 0 ? 1 : -1) * b.dim(d);
            ++checked;
        }
        REQUIRE(alt == reduced_euler_by_faces(k));
    }
    CHECK(checked > 500);
}

TEST_CASE("F2 Betti numbers match the brute-force eliminator") {
    for (const auto& inst : corpus()) {
        CAPTURE(inst.name);
        const auto& k = inst.complex;
        REQUIRE(reduced_betti(k, Field::prime(2)) == brute::betti_f2(masks(k)));
    }
}

TEST_CASE("rationals and odd primes agree on the corpus") {
    for (const auto& inst : corpus()) {
        auto q = reduced_betti(inst.complex, Q);
        CHECK(q == reduced_betti(inst.complex, Field::prime(3)));
        CHECK(q == reduced_betti(inst.complex, Field::prime(5)));
    }
}

TEST_CASE("pullback examples") {
    auto c4 = families::cycle(4);
    auto edge = full_subcomplex(c4, VertexSet::of({1, 2}));
    auto big = reduced_cohomology(c4, Q), small = reduced_cohomology(edge, Q);
    auto m = pullback(big, small, 1);
    CHECK(m.rows == 0);
    CHECK(m.cols == 1);

    auto id = pullback(big, big, 1);
    CHECK(id == Matrix::identity(1));

    auto three = families::discrete(3);
    auto two = full_subcomplex(three, VertexSet::of({1, 2}));
    auto p = pullback(reduced_cohomology(three, Q), reduced_cohomology(two, Q), 0);
    CHECK(p.rows == 1);
    CHECK(p.cols == 2);
    CHECK(rank(p, Q) == 1);
}

TEST_CASE("pullback is functorial on full subcomplexes") {
    long checked = 0;
    for (const auto& inst : corpus()) {
        const auto& k = inst.complex;
        if (k.vertex_count() > 5) continue;
        auto bk = reduced_cohomology(k, Q);
        auto ids = pullback(bk, bk);
        for (int d = -1; d <= bk.top_degree(); ++d) REQUIRE(ids[d + 1] == Matrix::identity(bk.dim(d)));
        for_each_subset(k.ground(), [&](VertexSet i) {
            auto bi = reduced_cohomology(full_subcomplex(k, i), Q);
            auto outer = pullback(bk, bi);
            for (int s : i.labels()) {
                VertexSet i2 = i - VertexSet::single(s);
                auto bi2 = reduced_cohomology(full_subcomplex(k, i2), Q);
                auto inner = pullback(bi, bi2);
                auto direct = pullback(bk, bi2);
                for (std::size_t d = 0; d < direct.size(); ++d) {
                    if (d >= outer.size() || d >= inner.size()) {
                        REQUIRE(direct[d].is_zero());
                        continue;
                    }
                    REQUIRE(direct[d] == multiply(inner[d], outer[d], Q));
                    ++checked;
                }
            }
        });
    }
    CHECK(checked > 5000);
}

TEST_CASE("express") {
    auto k = families::discrete(4);
    auto b = reduced_cohomology(k, Q);
    REQUIRE(b.dim(0) == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(b.express(0, b.representatives(0)[i]) == unit(3, i));
    Vec sum = b.representatives(0)[0];
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += b.representatives(0)[1][j];
    CHECK(b.express(0, sum) == Vec{1, 1, 0});
    // the constant 0-cochain is the coboundary of the augmentation
    CHECK(b.express(0, b.coboundary(-1, Vec{1})) == Vec{0, 0, 0});

    auto c4 = reduced_cohomology(families::cycle(4), Q);
    CHECK_THROWS_AS(c4.express(0, Vec{1, 0, 0, 0}), HomalgError);
    CHECK(c4.cochain(1, Vec{2}) == [&] {
        Vec v = c4.representatives(1)[0];
        for (auto& x : v) x *= 2;
        return v;
    }());
}

TEST_CASE("join class examples") {
    auto two = families::discrete(2);
    auto joined = join(two, families::discrete(2));
    auto b1 = reduced_cohomology(two, Q);
    auto b2 = reduced_cohomology(relabel(two, VertexSet::of({3, 4})), Q);
    auto bj = reduced_cohomology(joined, Q);
    REQUIRE(bj.dim(1) == 1);
    Vec g = join_class(b1, 0, Vec{1}, b2, 0, Vec{1}, bj);
    REQUIRE(g.size() == 1);
    CHECK(abs(g[0]) == 1);
    Vec cochain = join_cochain(b1, 0, Vec{1}, b2, 0, Vec{1}, joined);
    CHECK(bj.is_cocycle(1, cochain));
    CHECK(join_class(b1, 0, Vec{0}, b2, 0, Vec{1}, bj) == Vec{0});

    auto be = reduced_cohomology(SimplicialComplex(), Q);
    auto c4 = families::cycle(4);
    auto bc = reduced_cohomology(c4, Q);
    CHECK(join_class(be, -1, Vec{1}, bc, 1, Vec{1}, bc) == Vec{1});
    CHECK(join_class(bc, 1, Vec{1}, be, -1, Vec{1}, bc) == Vec{1});
}

TEST_CASE("Kunneth dimensions and nondegeneracy of join classes") {
    const auto& c = corpus();
    long checked = 0;
    for (std::size_t a = 0; a < c.size(); a += 3)
        for (std::size_t b = 1; b < c.size(); b += 5) {
            const auto& k1 = c[a].complex;
            auto k2 = c[b].complex;
            if (k1.vertex_count() + k2.vertex_count() > 7) continue;
            int shift = k1.ground().empty() ? 0 : k1.ground().max();
            VertexSet g2;
            for (int v : k2.labels()) g2.insert(v + shift);
            k2 = relabel(k2, g2);
            auto kj = join(k1, k2);
            auto b1 = reduced_cohomology(k1, Q), b2 = reduced_cohomology(k2, Q), bj = reduced_cohomology(kj, Q);
            for (int n = -1; n <= bj.top_degree(); ++n) {
                int expect = 0;
                std::vector<Vec> rows;
                for (int p = -1; p <= b1.top_degree(); ++p) {
                    int q = n - 1 - p;
                    if (q < -1 || q > b2.top_degree()) continue;
                    expect += b1.dim(p) * b2.dim(q);
                    for (int i = 0; i < b1.dim(p); ++i)
                        for (int j = 0; j < b2.dim(q); ++j)
                            rows.push_back(join_class(b1, p, unit(b1.dim(p), i), b2, q, unit(b2.dim(q), j), bj));
                }
                REQUIRE(bj.dim(n) == expect);
                Matrix m(rows.size(), static_cast<std::size_t>(bj.dim(n)));
                for (std::size_t r = 0; r < rows.size(); ++r)
                    for (std::size_t s = 0; s < m.cols; ++s) m.at(r, s) = rows[r][s];
                REQUIRE(rank(m, Q) == static_cast<std::size_t>(expect));
                ++checked;
            }
        }
    CHECK(checked > 200);
}

}
