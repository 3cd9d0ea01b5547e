#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pp {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Either the rationals or Z/p. Elements of Z/p are kept as integers in [0, p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field{}; }
    static Field prime(unsigned long p);
    // "Q", "F2", "F3", ...
    static Field parse(std::string_view name);

    bool is_rational() const { return p_ == 0; }
    unsigned long characteristic() const { return p_; }
    std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

    Scalar reduce(const Scalar& x) const;
    Scalar from_int(long v) const { return reduce(Scalar(v)); }
    Scalar inverse(const Scalar& x) const;
    // Accepts "n" or "n/d".
    Scalar parse_scalar(std::string_view text) const;
    std::string format(const Scalar& x) const { return x.get_str(); }

    // in-place helpers that keep the canonical representative
    void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const { acc += a * b; normalize(acc); }
    void normalize(Scalar& x) const {
        if (p_ != 0) x = reduce(x);
    }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
    explicit Field(unsigned long p) : p_(p) {}
    unsigned long p_ = 0;
};

}  // namespace pp
