#include "pp/homalg.hpp"

#include <cstdint>

namespace pp {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Matrix::apply(const Vec& v, const Field& f) const {
    Vec out(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
        f.normalize(out[r]);
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data)
        if (x != 0) return false;
    return true;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
    if (a.cols != b.rows) throw HomalgError("matrix shapes do not compose");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    for (auto& x : out.data) f.normalize(x);
    return out;
}

namespace {

std::size_t rank_mod_p(const Matrix& m, std::uint64_t p) {
    std::vector<std::uint64_t> a(m.data.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class n = m.data[i].get_num() % mpz_class(static_cast<unsigned long>(p));
        if (n < 0) n += static_cast<unsigned long>(p);
        a[i] = n.get_ui();
    }
    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0, rows = m.rows, cols = m.cols;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        std::uint64_t s = inv(a[rank * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = a[rank * cols + j] * s % p;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t t = a[r * cols + c];
            if (!t) continue;
            for (std::size_t j = c; j < cols; ++j)
                a[r * cols + j] = (a[r * cols + j] + (p - t) * a[rank * cols + j]) % p;
        }
        ++rank;
    }
    return rank;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, const Field& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar s = f.inverse(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j)
            if (m.at(r, j) != 0) {
                m.at(r, j) *= s;
                f.normalize(m.at(r, j));
            }
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Scalar t = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                if (m.at(r, j) != 0) {
                    m.at(i, j) -= t * m.at(r, j);
                    f.normalize(m.at(i, j));
                }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Matrix of delta^d : C^d -> C^{d+1}.
Matrix coboundary_matrix(const SimplicialComplex& k, int d) {
    auto src = k.faces_of_dim(d);
    auto dst = k.faces_of_dim(d + 1);
    Matrix m(dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r) {
        int pos = 0;
        for (int v : dst[r].labels()) {
            VertexSet facet = dst[r];
            facet.erase(v);
            m.at(r, static_cast<std::size_t>(k.index_in_dim(facet))) = (pos % 2 == 0) ? 1 : -1;
            ++pos;
        }
    }
    return m;
}

}  // namespace

std::size_t rank(Matrix m, const Field& f) {
    if (!f.is_rational()) return rank_mod_p(m, f.characteristic());
    return rref(m, f).size();
}

bool Reducer::insert(Vec v, Vec tag) {
    tag.resize(tag_dim_);
    Vec t = reduce(v);
    for (std::size_t i = 0; i < tag_dim_; ++i) {
        tag[i] -= t[i];
        field_.normalize(tag[i]);
    }
    std::size_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return false;
    Scalar s = field_.inverse(v[piv]);
    for (auto& x : v)
        if (x != 0) {
            x *= s;
            field_.normalize(x);
        }
    for (auto& x : tag)
        if (x != 0) {
            x *= s;
            field_.normalize(x);
        }
    rows_.push_back(Row{piv, std::move(v), std::move(tag)});
    return true;
}

Vec Reducer::reduce(Vec& v) const {
    Vec acc(tag_dim_);
    for (const auto& row : rows_) {
        if (v[row.pivot] == 0) continue;
        Scalar c = v[row.pivot];
        for (std::size_t j = 0; j < dim_; ++j)
            if (row.v[j] != 0) {
                v[j] -= c * row.v[j];
                field_.normalize(v[j]);
            }
        for (std::size_t j = 0; j < tag_dim_; ++j)
            if (row.tag[j] != 0) {
                acc[j] += c * row.tag[j];
                field_.normalize(acc[j]);
            }
    }
    return acc;
}

CohomologyBasis::CohomologyBasis(SimplicialComplex k, Field f) : k_(std::move(k)), field_(f) {
    int top = k_.dimension();
    degrees_.resize(static_cast<std::size_t>(top + 2));
    for (int d = -1; d <= top; ++d) {
        std::size_t n = k_.faces_of_dim(d).size();
        // kernel of delta^d
        Matrix delta = coboundary_matrix(k_, d);
        auto pivots = rref(delta, field_);
        std::vector<Vec> kernel;
        std::size_t pi = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (pi < pivots.size() && pivots[pi] == c) {
                ++pi;
                continue;
            }
            Vec x(n);
            x[c] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                if (delta.at(r, c) != 0) x[pivots[r]] = -delta.at(r, c);
            for (auto& e : x) field_.normalize(e);
            kernel.push_back(std::move(x));
        }
        auto& deg = degrees_[static_cast<std::size_t>(d + 1)];
        deg.reducer = std::make_unique<Reducer>(field_, n, kernel.size());
        if (d >= 0) {
            Matrix prev = coboundary_matrix(k_, d - 1);
            for (std::size_t c = 0; c < prev.cols; ++c) {
                Vec col(n);
                for (std::size_t r = 0; r < n; ++r) col[r] = prev.at(r, c);
                deg.reducer->insert(std::move(col), Vec{});
            }
        }
        for (auto& x : kernel) {
            Vec tag(kernel.size());
            tag[deg.reps.size()] = 1;
            if (deg.reducer->insert(x, std::move(tag))) deg.reps.push_back(std::move(x));
        }
    }
}

int CohomologyBasis::dim(int d) const {
    if (d < -1 || d > top_degree()) return 0;
    return static_cast<int>(degrees_[static_cast<std::size_t>(d + 1)].reps.size());
}

const std::vector<Vec>& CohomologyBasis::representatives(int d) const {
    static const std::vector<Vec> none;
    if (d < -1 || d > top_degree()) return none;
    return degrees_[static_cast<std::size_t>(d + 1)].reps;
}

Vec CohomologyBasis::coboundary(int d, const Vec& cochain) const {
    auto dst = k_.faces_of_dim(d + 1);
    Vec out(dst.size());
    for (std::size_t r = 0; r < dst.size(); ++r) {
        int pos = 0;
        for (int v : dst[r].labels()) {
            VertexSet facet = dst[r];
            facet.erase(v);
            const Scalar& x = cochain[static_cast<std::size_t>(k_.index_in_dim(facet))];
            if (x != 0) {
                if (pos % 2 == 0) out[r] += x;
                else out[r] -= x;
            }
            ++pos;
        }
        field_.normalize(out[r]);
    }
    return out;
}

bool CohomologyBasis::is_cocycle(int d, const Vec& cochain) const {
    for (const auto& x : coboundary(d, cochain))
        if (x != 0) return false;
    return true;
}

Vec CohomologyBasis::express(int d, const Vec& cocycle) const {
    std::size_t n = k_.faces_of_dim(d).size();
    if (cocycle.size() != n) throw HomalgError("cochain length does not match the number of faces");
    if (d < -1 || d > top_degree()) return {};
    if (!is_cocycle(d, cocycle)) throw HomalgError("express: cochain is not a cocycle");
    const auto& deg = degrees_[static_cast<std::size_t>(d + 1)];
    Vec v = cocycle;
    Vec coeffs = deg.reducer->reduce(v);
    for (const auto& x : v)
        if (x != 0) throw HomalgError("express: cocycle not in the span of the basis");
    coeffs.resize(deg.reps.size());
    return coeffs;
}

Vec CohomologyBasis::cochain(int d, const Vec& coeffs) const {
    const auto& reps = representatives(d);
    if (coeffs.size() != reps.size()) throw HomalgError("coefficient vector length does not match the basis");
    Vec out(k_.faces_of_dim(d).size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (reps[i][j] != 0) out[j] += coeffs[i] * reps[i][j];
    }
    for (auto& x : out) field_.normalize(x);
    return out;
}

CohomologyBasis reduced_cohomology(const SimplicialComplex& k, const Field& f) { return CohomologyBasis(k, f); }

std::vector<int> reduced_betti(const SimplicialComplex& k, const Field& f) {
    int top = k.dimension();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2));
    for (int d = -1; d < top; ++d) ranks[static_cast<std::size_t>(d + 1)] = rank(coboundary_matrix(k, d), f);
    std::vector<int> betti(static_cast<std::size_t>(top + 2));
    for (int d = -1; d <= top; ++d) {
        std::size_t n = k.faces_of_dim(d).size();
        std::size_t out = ranks[static_cast<std::size_t>(d + 1)];
        std::size_t in = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
        betti[static_cast<std::size_t>(d + 1)] = static_cast<int>(n - out - in);
    }
    return betti;
}

Matrix pullback(const CohomologyBasis& target, const CohomologyBasis& source, int d) {
    const auto& big = target.complex();
    const auto& small = source.complex();
    Matrix m(static_cast<std::size_t>(source.dim(d)), static_cast<std::size_t>(target.dim(d)));
    if (m.rows == 0 || m.cols == 0) return m;
    auto faces = small.faces_of_dim(d);
    std::vector<std::size_t> where(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        long j = big.index_in_dim(faces[i]);
        if (j < 0) throw HomalgError("pullback: " + faces[i].to_string() + " is not a face of the larger complex");
        where[i] = static_cast<std::size_t>(j);
    }
    const auto& reps = target.representatives(d);
    for (std::size_t c = 0; c < reps.size(); ++c) {
        Vec restricted(faces.size());
        for (std::size_t i = 0; i < faces.size(); ++i) restricted[i] = reps[c][where[i]];
        Vec col = source.express(d, restricted);
        for (std::size_t r = 0; r < m.rows; ++r) m.at(r, c) = col[r];
    }
    return m;
}

std::vector<Matrix> pullback(const CohomologyBasis& target, const CohomologyBasis& source) {
    int top = std::max(target.top_degree(), source.top_degree());
    std::vector<Matrix> out;
    for (int d = -1; d <= top; ++d) out.push_back(pullback(target, source, d));
    return out;
}

Vec join_cochain(const CohomologyBasis& b1, int p, const Vec& alpha, const CohomologyBasis& b2, int q, const Vec& beta,
                 const SimplicialComplex& joined) {
    VertexSet g1 = b1.complex().ground(), g2 = b2.complex().ground();
    if (!g1.disjoint(g2) || joined.ground() != (g1 | g2))
        throw HomalgError("join_class: complexes must have disjoint ground sets matching the join");
    const Field& f = b1.field();
    Vec a = b1.cochain(p, alpha), b = b2.cochain(q, beta);
    auto faces = joined.faces_of_dim(p + q + 1);
    Vec out(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        VertexSet s1 = faces[i] & g1, s2 = faces[i] & g2;
        if (s1.size() != p + 1 || s2.size() != q + 1) continue;
        long i1 = b1.complex().index_in_dim(s1), i2 = b2.complex().index_in_dim(s2);
        if (i1 < 0 || i2 < 0) throw HomalgError("join_class: face does not split into faces of the factors");
        const Scalar& x = a[static_cast<std::size_t>(i1)];
        const Scalar& y = b[static_cast<std::size_t>(i2)];
        if (x == 0 || y == 0) continue;
        // sign of the shuffle taking (s1, s2) to increasing order
        int inversions = 0;
        for (int v : s2.labels()) inversions += (s1 - VertexSet::range(v)).size();
        out[i] = x * y;
        if (inversions % 2) out[i] = -out[i];
        f.normalize(out[i]);
    }
    return out;
}

Vec join_class(const CohomologyBasis& b1, int p, const Vec& alpha, const CohomologyBasis& b2, int q, const Vec& beta,
               const CohomologyBasis& joined) {
    Vec c = join_cochain(b1, p, alpha, b2, q, beta, joined.complex());
    return joined.express(p + q + 1, c);
}

}  // namespace pp
