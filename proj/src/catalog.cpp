#include <stdexcept>

#include "pp/pairdata.hpp"

namespace pp {

namespace {

struct Builder {
    PairData p;

    int gen(std::string name, int degree, Module m) {
        p.gens.push_back({std::move(name), degree, m});
        return static_cast<int>(p.gens.size()) - 1;
    }
    void mult(Side s, const std::string& l, const std::string& r, const std::string& out) {
        p.table(s).entries[{p.find(l), p.find(r)}] = {Term{1, p.find(out)}};
    }
};

PairData moment_angle() {
    Builder b;
    b.p.name = "moment-angle";
    b.gen("e1", 1, Module::E);
    b.p.betti_x = DimTable{};
    b.p.betti_a = DimTable{{1, 1}};
    b.p.betti_quotient = DimTable{{2, 1}};
    return b.p;
}

PairData real_moment_angle() {
    Builder b;
    b.p.name = "real-moment-angle";
    b.p.non_connected = true;
    b.gen("e0", 0, Module::E);
    b.mult(Side::A, "e0", "e0", "e0");
    b.p.betti_x = DimTable{};
    b.p.betti_a = DimTable{{0, 1}};
    b.p.betti_quotient = DimTable{{1, 1}};
    return b.p;
}

// X = CP^8/CP^1 (cohomology x^2..x^8), A = CP^3, iota iso on x^2, x^3.
PairData mf_cp3() {
    Builder b;
    b.p.name = "mf-cp3";
    for (int d : {4, 6}) b.gen("b" + std::to_string(d), d, Module::B);
    for (int d = 8; d <= 16; d += 2) b.gen("c" + std::to_string(d), d, Module::C);
    b.gen("e2", 2, Module::E);
    auto x_name = [&](int d) { return std::string(d <= 6 ? "b" : "c") + std::to_string(d); };
    for (int i = 4; i <= 16; i += 2)
        for (int j = i; i + j <= 16; j += 2) b.mult(Side::X, x_name(i), x_name(j), x_name(i + j));
    b.mult(Side::A, "e2", "e2", "b4");
    b.mult(Side::A, "e2", "b4", "b6");
    b.p.betti_x = DimTable{{4, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 1}, {14, 1}, {16, 1}};
    b.p.betti_a = DimTable{{2, 1}, {4, 1}, {6, 1}};
    b.p.betti_quotient = DimTable{{3, 1}, {8, 1}, {10, 1}, {12, 1}, {14, 1}, {16, 1}};
    return b.p;
}

// X = SO(3) = RP^3, A = RP^2, mod 2.
PairData so3_rp2() {
    Builder b;
    b.p.name = "so3-rp2";
    b.gen("b1", 1, Module::B);
    b.gen("b2", 2, Module::B);
    b.gen("c3", 3, Module::C);
    b.mult(Side::X, "b1", "b1", "b2");
    b.mult(Side::X, "b1", "b2", "c3");
    b.mult(Side::A, "b1", "b1", "b2");
    b.p.betti_x = DimTable{{1, 1}, {2, 1}, {3, 1}};
    b.p.betti_a = DimTable{{1, 1}, {2, 1}};
    b.p.betti_quotient = DimTable{{3, 1}};
    return b.p;
}

// A = S^0 included in X as the endpoints of an interval; iota* = 0.
PairData s0_pair() {
    Builder b;
    b.p.name = "s0-pair";
    b.p.non_connected = true;
    b.gen("c0", 0, Module::C);
    b.gen("e0", 0, Module::E);
    b.mult(Side::X, "c0", "c0", "c0");
    b.mult(Side::A, "e0", "e0", "e0");
    b.p.betti_x = DimTable{{0, 1}};
    b.p.betti_a = DimTable{{0, 1}};
    b.p.betti_quotient = DimTable{{0, 1}, {1, 1}};
    return b.p;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"moment-angle", "real-moment-angle", "mf-cp3", "so3-rp2", "s0-pair"}; }

PairData builtin(std::string_view name, const Field& f) {
    PairData p;
    if (name == "moment-angle") p = moment_angle();
    else if (name == "real-moment-angle") p = real_moment_angle();
    else if (name == "mf-cp3") p = mf_cp3();
    else if (name == "so3-rp2") {
        if (f.characteristic() != 2)
            throw std::invalid_argument("builtin pair 'so3-rp2' needs coefficients in F2 (field is " + f.name() + ")");
        p = so3_rp2();
    } else if (name == "s0-pair") p = s0_pair();
    else throw std::invalid_argument("unknown builtin pair '" + std::string(name) + "'");
    return validate_pair(std::move(p), f);
}

}  // namespace pp
