#include "pp/field.hpp"

#include <charconv>
#include <stdexcept>

namespace pp {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
    if (!is_prime(p) || p >= (1ul << 31)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a supported prime");
    return Field(p);
}

Field Field::parse(std::string_view name) {
    if (name == "Q") return rationals();
    if (name.size() >= 2 && name[0] == 'F') {
        unsigned long p = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), p);
        if (ec == std::errc() && ptr == name.data() + name.size()) return prime(p);
    }
    throw std::invalid_argument("unknown field '" + std::string(name) + "' (expected Q or F<p>)");
}

Scalar Field::reduce(const Scalar& x) const {
    if (p_ == 0) return x;
    mpz_class p(p_), num = x.get_num() % p, den = x.get_den() % p;
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::inverse(const Scalar& x) const {
    if (x == 0) throw std::domain_error("division by zero");
    if (p_ == 0) return 1 / x;
    mpz_class p(p_), inv, v = x.get_num();
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return Scalar(inv);
}

Scalar Field::parse_scalar(std::string_view text) const {
    Scalar v;
    if (text.empty() || v.set_str(std::string(text), 10) != 0) throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    v.canonicalize();
    return reduce(v);
}

}  // namespace pp
