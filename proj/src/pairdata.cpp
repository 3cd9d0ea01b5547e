#include "pp/pairdata.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pp {

char module_letter(Module m) {
    switch (m) {
        case Module::B: return 'b';
        case Module::C: return 'c';
        case Module::E: return 'e';
    }
    return '?';
}

int PairData::find(std::string_view gen_name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == gen_name) return static_cast<int>(i);
    return -1;
}

std::vector<int> PairData::of(Module m) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].module == m) out.push_back(static_cast<int>(i));
    return out;
}

bool PairData::has(Module m) const {
    return std::any_of(gens.begin(), gens.end(), [m](const GradedGen& g) { return g.module == m; });
}

LaurentPoly PairData::series(Module m) const {
    LaurentPoly p;
    for (const auto& g : gens)
        if (g.module == m) p.add_term(g.degree, 1);
    return p;
}

Combination PairData::product(Side s, int lhs, int rhs) const {
    const MultTable& t = table(s);
    if (const Combination* c = t.find(lhs, rhs)) return *c;
    if (const Combination* c = t.find(rhs, lhs)) {
        Combination out = *c;
        if ((gens[static_cast<std::size_t>(lhs)].degree * gens[static_cast<std::size_t>(rhs)].degree) % 2)
            for (auto& term : out) term.coeff = -term.coeff;
        return out;
    }
    return {};
}

PairValidationError::PairValidationError(std::vector<ValidationIssue> issues)
    : std::invalid_argument([&] {
          std::string msg = "pair validation failed:";
          for (const auto& i : issues) msg += " [" + i.rule + "] " + i.where + ": " + i.detail + ";";
          return msg;
      }()),
      issues_(std::move(issues)) {}

namespace {

bool same_combination(Combination a, Combination b, const Field& f) {
    auto norm = [&](Combination& c) {
        std::map<int, Scalar> acc;
        for (auto& t : c) acc[t.gen] += t.coeff;
        c.clear();
        for (auto& [g, v] : acc) {
            Scalar r = f.reduce(v);
            if (r != 0) c.push_back({r, g});
        }
    };
    norm(a);
    norm(b);
    return a == b;
}

std::string combo_string(const PairData& p, const Combination& c) {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& t : c) {
        if (!s.empty()) s += " + ";
        s += t.coeff.get_str() + "*" + p.gens[static_cast<std::size_t>(t.gen)].name;
    }
    return s;
}

std::set<Module> allowed_targets(Side side, Module l, Module r) {
    auto is = [&](Module a, Module b) { return (l == a && r == b) || (l == b && r == a); };
    if (side == Side::X) {
        if (is(Module::C, Module::C) || is(Module::C, Module::B)) return {Module::C};
        if (is(Module::B, Module::B)) return {Module::B, Module::C};
    } else {
        if (is(Module::E, Module::E) || is(Module::E, Module::B)) return {Module::E, Module::B};
        if (is(Module::B, Module::B)) return {Module::B};
    }
    return {};
}

}  // namespace

std::vector<ValidationIssue> check_pair(const PairData& p, const Field& f) {
    std::vector<ValidationIssue> issues;
    auto add = [&](std::string rule, std::string where, std::string detail) {
        issues.push_back({std::move(rule), std::move(where), std::move(detail)});
    };
    std::set<std::string> names;
    for (const auto& g : p.gens) {
        if (g.name.empty()) add("generator", "gens", "empty generator name");
        if (!names.insert(g.name).second) add("generator", g.name, "duplicate generator name");
        int lo = p.non_connected ? 0 : 1;
        if (g.degree < lo)
            add("degree", g.name,
                "degree " + std::to_string(g.degree) + " below " + std::to_string(lo) +
                    (p.non_connected ? "" : " (degree 0 needs the non-connected flag)"));
    }
    int n = static_cast<int>(p.gens.size());
    for (Side side : {Side::X, Side::A}) {
        const char* sname = side == Side::X ? "X" : "A";
        for (const auto& [key, combo] : p.table(side).entries) {
            auto [l, r] = key;
            if (l < 0 || l >= n || r < 0 || r >= n) {
                add("reference", sname, "product entry refers to an unknown generator");
                continue;
            }
            const auto& gl = p.gens[static_cast<std::size_t>(l)];
            const auto& gr = p.gens[static_cast<std::size_t>(r)];
            std::string where = std::string(sname) + ": " + gl.name + "*" + gr.name;
            auto allowed = allowed_targets(side, gl.module, gr.module);
            if (allowed.empty()) {
                add("module-target", where,
                    std::string("generators of type ") + module_letter(gl.module) + "," + module_letter(gr.module) +
                        " cannot be multiplied on side " + sname);
                continue;
            }
            for (const auto& t : combo) {
                if (t.gen < 0 || t.gen >= n) {
                    add("reference", where, "result refers to an unknown generator");
                    continue;
                }
                const auto& gt = p.gens[static_cast<std::size_t>(t.gen)];
                if (gt.degree != gl.degree + gr.degree)
                    add("degree-additivity", where,
                        gt.name + " has degree " + std::to_string(gt.degree) + ", expected " +
                            std::to_string(gl.degree + gr.degree));
                if (!allowed.count(gt.module))
                    add("module-target", where,
                        std::string("result ") + gt.name + " lies in " + static_cast<char>(std::toupper(module_letter(gt.module))) +
                            "'");
            }
            // graded commutativity against the mirrored entry
            if (const Combination* mirror = p.table(side).find(r, l); mirror && l <= r) {
                Combination expected = combo;
                if ((gl.degree * gr.degree) % 2)
                    for (auto& t : expected) t.coeff = -t.coeff;
                if (!same_combination(expected, *mirror, f))
                    add("graded-commutativity", where,
                        gr.name + "*" + gl.name + " = " + combo_string(p, *mirror) + " but " + gl.name + "*" + gr.name +
                            " = " + combo_string(p, combo));
            }
        }
    }
    // iota* is a ring map that is the identity on B' and kills C'
    auto bs = p.of(Module::B);
    for (int b1 : bs)
        for (int b2 : bs) {
            if (b2 < b1) continue;
            Combination on_a = p.product(Side::A, b1, b2), on_x = p.product(Side::X, b1, b2), b_part;
            for (const auto& t : on_x)
                if (t.gen >= 0 && t.gen < n && p.gens[static_cast<std::size_t>(t.gen)].module == Module::B) b_part.push_back(t);
            if (!same_combination(on_a, b_part, f))
                add("iota-compatibility", p.gens[static_cast<std::size_t>(b1)].name + "*" + p.gens[static_cast<std::size_t>(b2)].name,
                    "A-side product " + combo_string(p, on_a) + " differs from the B'-part " + combo_string(p, b_part) +
                        " of the X-side product");
        }
    // exactness of the long exact sequence, degree by degree
    auto count = [&](Module m, int d) {
        int c = 0;
        for (const auto& g : p.gens) c += (g.module == m && g.degree == d);
        return c;
    };
    auto audit = [&](const std::optional<DimTable>& table, const char* label, auto expected) {
        if (!table) return;
        std::set<int> degrees;
        for (auto& [d, _] : *table) degrees.insert(d);
        for (const auto& g : p.gens) {
            degrees.insert(g.degree);
            degrees.insert(g.degree + 1);
        }
        for (int d : degrees) {
            auto it = table->find(d);
            int have = it == table->end() ? 0 : it->second;
            int want = expected(d);
            if (have != want)
                add("exactness", label,
                    "degree " + std::to_string(d) + ": declared dimension " + std::to_string(have) +
                        ", decomposition gives " + std::to_string(want));
        }
    };
    audit(p.betti_x, "X", [&](int d) { return count(Module::B, d) + count(Module::C, d); });
    audit(p.betti_a, "A", [&](int d) { return count(Module::B, d) + count(Module::E, d); });
    audit(p.betti_quotient, "X/A", [&](int d) { return count(Module::C, d) + count(Module::E, d - 1); });
    return issues;
}

PairData validate_pair(PairData p, const Field& f) {
    auto issues = check_pair(p, f);
    if (!issues.empty()) throw PairValidationError(std::move(issues));
    return p;
}

PairDecomposition::PairDecomposition(Field f, std::vector<std::shared_ptr<const PairData>> per_vertex)
    : field_(f), per_vertex_(std::move(per_vertex)) {}

PairDecomposition PairDecomposition::uniform(int m, const PairData& p, const Field& f) {
    auto shared = std::make_shared<const PairData>(validate_pair(p, f));
    return PairDecomposition(f, std::vector<std::shared_ptr<const PairData>>(static_cast<std::size_t>(m), shared));
}

bool PairDecomposition::is_uniform() const {
    for (const auto& p : per_vertex_)
        if (p != per_vertex_.front()) return false;
    return true;
}

std::string WedgeModel::describe() const {
    auto one = [](const std::vector<int>& dims) {
        if (dims.empty()) return std::string("*");
        std::string s;
        for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? " v S^" : "S^") + std::to_string(dims[i]);
        return s;
    };
    return "B = " + one(b) + ", C = " + one(c) + ", E = " + one(e);
}

WedgeModel wedge_model(const PairDecomposition& p, int vertex) {
    WedgeModel w;
    for (const auto& g : p.at(vertex).gens) {
        auto& dst = g.module == Module::B ? w.b : g.module == Module::C ? w.c : w.e;
        dst.push_back(g.degree);
    }
    for (auto* v : {&w.b, &w.c, &w.e}) std::sort(v->begin(), v->end());
    return w;
}

PairData split_from_ranks(std::string name, const DimTable& betti_x, const DimTable& betti_a, const DimTable& rank_iota,
                          bool non_connected) {
    PairData p;
    p.name = std::move(name);
    p.non_connected = non_connected;
    std::set<int> degrees;
    for (const auto* t : {&betti_x, &betti_a, &rank_iota})
        for (auto& [d, _] : *t) degrees.insert(d);
    auto get = [](const DimTable& t, int d) {
        auto it = t.find(d);
        return it == t.end() ? 0 : it->second;
    };
    auto emit = [&](char letter, Module m, int d, int count) {
        for (int k = 1; k <= count; ++k) {
            std::string n = std::string(1, letter) + std::to_string(d);
            if (count > 1) n += "_" + std::to_string(k);
            p.gens.push_back({n, d, m});
        }
    };
    for (int d : degrees) {
        int x = get(betti_x, d), a = get(betti_a, d), r = get(rank_iota, d);
        if (r < 0 || r > x || r > a)
            throw std::invalid_argument("rank of iota in degree " + std::to_string(d) + " exceeds the Betti numbers");
        emit('b', Module::B, d, r);
        emit('c', Module::C, d, x - r);
        emit('e', Module::E, d, a - r);
    }
    p.betti_x = betti_x;
    p.betti_a = betti_a;
    return p;
}

}  // namespace pp
