#include "pp/series.hpp"

#include "pp/homalg.hpp"

namespace pp {

LaurentPoly LaurentPoly::monomial(int degree, const mpz_class& c) {
    LaurentPoly p;
    p.add_term(degree, c);
    return p;
}

mpz_class LaurentPoly::coefficient(int d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int degree, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d + s, c);
    return out;
}

mpz_class LaurentPoly::evaluate_at_minus_one() const {
    mpz_class v = 0;
    for (const auto& [d, c] : terms_) {
        if (d % 2 == 0) v += c;
        else v -= c;
    }
    return v;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : terms_) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        mpz_class a = abs(c);
        if (d == 0) s += a.get_str();
        else {
            if (a != 1) s += a.get_str();
            s += d == 1 ? "t" : "t^" + std::to_string(d);
        }
    }
    return s;
}

PoincareSeries PoincareSeries::to_unreduced() const {
    if (!reduced_) return *this;
    return unreduced_of(poly_ + LaurentPoly::one());
}

PoincareSeries PoincareSeries::to_reduced() const {
    if (reduced_) return *this;
    return reduced_of(poly_ + LaurentPoly::monomial(0, -1));
}

PoincareSeries add(const PoincareSeries& a, const PoincareSeries& b) {
    if (a.is_reduced() != b.is_reduced()) throw SeriesError("cannot add a reduced and an unreduced series");
    return {a.poly() + b.poly(), a.is_reduced()};
}

PoincareSeries multiply(const PoincareSeries& a, const PoincareSeries& b) {
    if (a.is_reduced() != b.is_reduced())
        throw SeriesError("product of a reduced and an unreduced series has no meaning");
    return {a.poly() * b.poly(), a.is_reduced()};
}

PoincareSeries shift(const PoincareSeries& a, int s) {
    if (!a.is_reduced()) throw SeriesError("suspension shift applies to reduced series only");
    return PoincareSeries::reduced_of(a.poly().shifted(s));
}

PoincareSeries series_of_complex(const SimplicialComplex& k, const Field& f) {
    auto betti = reduced_betti(k, f);
    LaurentPoly p;
    for (std::size_t i = 0; i < betti.size(); ++i) p.add_term(static_cast<int>(i) - 1, betti[i]);
    return PoincareSeries::reduced_of(std::move(p));
}

}  // namespace pp
