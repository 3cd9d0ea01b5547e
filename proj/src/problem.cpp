#include "pp/problem.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace pp {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ProblemError((path.empty() ? std::string("/") : path) + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

// Integers may be given as JSON numbers or decimal strings.
long integer(const json& v, const std::string& path) {
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t used = 0;
        try {
            long x = std::stol(s, &used);
            if (used == s.size()) return x;
        } catch (const std::exception&) {
        }
    }
    fail(path, "expected an integer");
}

Scalar scalar(const json& v, const Field& f, const std::string& path) {
    try {
        if (v.is_number_integer()) return f.from_int(v.get<long>());
        if (v.is_string()) return f.parse_scalar(v.get_ref<const std::string&>());
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
    fail(path, "expected a coefficient (decimal string)");
}

Module module_of(const json& v, const std::string& path) {
    if (v == "B") return Module::B;
    if (v == "C") return Module::C;
    if (v == "E") return Module::E;
    fail(path, "module must be one of B, C, E");
}

DimTable dims(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object degree -> dimension");
    DimTable t;
    for (auto it = v.begin(); it != v.end(); ++it) {
        long d = integer(json(it.key()), path + "/" + it.key());
        long c = integer(it.value(), path + "/" + it.key());
        if (c < 0) fail(path + "/" + it.key(), "negative dimension");
        if (c) t[static_cast<int>(d)] = static_cast<int>(c);
    }
    return t;
}

PairData parse_pair(const json& v, const Field& f, const std::string& path) {
    if (!v.is_object()) fail(path, "expected a pair object");
    if (v.contains("builtin")) {
        if (v.size() != 1) fail(path, "a builtin reference takes no other fields");
        const json& name = v["builtin"];
        if (!name.is_string()) fail(path + "/builtin", "expected a name");
        try {
            return builtin(name.get<std::string>(), f);
        } catch (const std::invalid_argument& e) {
            fail(path + "/builtin", e.what());
        }
    }
    static const std::set<std::string> known{"name", "non_connected", "generators", "x_products", "a_products", "betti"};
    for (auto it = v.begin(); it != v.end(); ++it)
        if (!known.count(it.key())) fail(path, "unknown field '" + it.key() + "'");
    PairData p;
    if (v.contains("name")) {
        if (!v["name"].is_string()) fail(path + "/name", "expected a string");
        p.name = v["name"].get<std::string>();
    }
    if (v.contains("non_connected")) {
        if (!v["non_connected"].is_boolean()) fail(path + "/non_connected", "expected true or false");
        p.non_connected = v["non_connected"].get<bool>();
    }
    const json& gens = member(v, "generators", path);
    if (!gens.is_array()) fail(path + "/generators", "expected an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string gp = path + "/generators/" + std::to_string(i);
        const json& name = member(gens[i], "name", gp);
        if (!name.is_string()) fail(gp + "/name", "expected a string");
        p.gens.push_back({name.get<std::string>(), static_cast<int>(integer(member(gens[i], "degree", gp), gp + "/degree")),
                          module_of(member(gens[i], "module", gp), gp + "/module")});
    }
    for (Side side : {Side::X, Side::A}) {
        std::string key = side == Side::X ? "x_products" : "a_products";
        if (!v.contains(key)) continue;
        const json& entries = v[key];
        if (!entries.is_array()) fail(path + "/" + key, "expected an array");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::string ep = path + "/" + key + "/" + std::to_string(i);
            auto gen_index = [&](const json& n, const std::string& np) {
                if (!n.is_string()) fail(np, "expected a generator name");
                int idx = p.find(n.get<std::string>());
                if (idx < 0) fail(np, "unknown generator '" + n.get<std::string>() + "'");
                return idx;
            };
            int l = gen_index(member(entries[i], "lhs", ep), ep + "/lhs");
            int r = gen_index(member(entries[i], "rhs", ep), ep + "/rhs");
            const json& result = member(entries[i], "result", ep);
            if (!result.is_array()) fail(ep + "/result", "expected an array");
            std::map<int, Scalar> acc;
            for (std::size_t k = 0; k < result.size(); ++k) {
                std::string tp = ep + "/result/" + std::to_string(k);
                int g = gen_index(member(result[k], "gen", tp), tp + "/gen");
                acc[g] += scalar(member(result[k], "coeff", tp), f, tp + "/coeff");
            }
            Combination c;
            for (auto& [g, x] : acc) {
                Scalar y = f.reduce(x);
                if (y != 0) c.push_back({y, g});
            }
            if (!p.table(side).entries.emplace(std::make_pair(l, r), std::move(c)).second) fail(ep, "repeated product entry");
        }
    }
    if (v.contains("betti")) {
        const json& b = v["betti"];
        if (!b.is_object()) fail(path + "/betti", "expected an object");
        for (auto it = b.begin(); it != b.end(); ++it) {
            std::string bp = path + "/betti/" + it.key();
            if (it.key() == "X") p.betti_x = dims(it.value(), bp);
            else if (it.key() == "A") p.betti_a = dims(it.value(), bp);
            else if (it.key() == "X/A") p.betti_quotient = dims(it.value(), bp);
            else fail(bp, "expected X, A or X/A");
        }
    }
    try {
        return validate_pair(std::move(p), f);
    } catch (const PairValidationError& e) {
        std::string msg = "pair validation failed";
        for (const auto& issue : e.issues()) msg += "; [" + issue.rule + "] " + issue.where + ": " + issue.detail;
        fail(path, msg);
    }
}

json dims_json(const DimTable& t) {
    json o = json::object();
    for (auto& [d, c] : t) o[std::to_string(d)] = std::to_string(c);
    return o;
}

json pair_json(const PairData& p, const Field& f) {
    try {
        if (builtin(p.name, f) == p) return json{{"builtin", p.name}};
    } catch (const std::invalid_argument&) {
    }
    json o;
    o["name"] = p.name;
    o["non_connected"] = p.non_connected;
    o["generators"] = json::array();
    for (const auto& g : p.gens)
        o["generators"].push_back({{"name", g.name}, {"degree", std::to_string(g.degree)}, {"module", std::string(1, static_cast<char>(std::toupper(module_letter(g.module))))}});
    for (Side side : {Side::X, Side::A}) {
        json arr = json::array();
        for (const auto& [key, combo] : p.table(side).entries) {
            json result = json::array();
            for (const auto& t : combo) result.push_back({{"coeff", t.coeff.get_str()}, {"gen", p.gens[static_cast<std::size_t>(t.gen)].name}});
            arr.push_back({{"lhs", p.gens[static_cast<std::size_t>(key.first)].name}, {"rhs", p.gens[static_cast<std::size_t>(key.second)].name}, {"result", result}});
        }
        o[side == Side::X ? "x_products" : "a_products"] = arr;
    }
    json betti = json::object();
    if (p.betti_x) betti["X"] = dims_json(*p.betti_x);
    if (p.betti_a) betti["A"] = dims_json(*p.betti_a);
    if (p.betti_quotient) betti["X/A"] = dims_json(*p.betti_quotient);
    if (!betti.empty()) o["betti"] = betti;
    return o;
}

}  // namespace

bool operator==(const Problem& a, const Problem& b) {
    if (!(a.complex == b.complex) || a.subset != b.subset) return false;
    if (!(a.pairs.field() == b.pairs.field()) || a.pairs.vertex_count() != b.pairs.vertex_count()) return false;
    for (int v = 1; v <= a.pairs.vertex_count(); ++v)
        if (!(a.pairs.at(v) == b.pairs.at(v))) return false;
    return true;
}

VertexSet parse_subset(std::string_view text, int m) {
    VertexSet s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string part(text.substr(pos, next - pos));
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw ProblemError("subset: '" + part + "' is not a vertex");
        if (v < 1 || v > m) throw ProblemError("subset: vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
        s.insert(v);
        pos = next + 1;
    }
    return s;
}

Problem parse_problem_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ProblemError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("", "expected an object");
    static const std::set<std::string> known{"format", "field", "complex", "pairs", "subset"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key())) fail("", "unknown field '" + it.key() + "'");
    if (doc.contains("format") && integer(doc["format"], "/format") != 1) fail("/format", "unsupported format version");
    Field f;
    if (doc.contains("field")) {
        if (!doc["field"].is_string()) fail("/field", "expected a field name");
        try {
            f = Field::parse(doc["field"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail("/field", e.what());
        }
    }
    const json& cx = member(doc, "complex", "");
    long m = integer(member(cx, "m", "/complex"), "/complex/m");
    if (m < 1 || m > kMaxVertices) fail("/complex/m", "vertex count must be in 1.." + std::to_string(kMaxVertices));
    const json& facets = member(cx, "facets", "/complex");
    if (!facets.is_array()) fail("/complex/facets", "expected an array of faces");
    std::vector<VertexSet> gens;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        std::string fp = "/complex/facets/" + std::to_string(i);
        if (!facets[i].is_array()) fail(fp, "expected an array of vertices");
        VertexSet s;
        for (std::size_t k = 0; k < facets[i].size(); ++k) {
            long v = integer(facets[i][k], fp + "/" + std::to_string(k));
            if (v < 1 || v > m) fail(fp, "facet " + facets[i].dump() + " has vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
            s.insert(static_cast<int>(v));
        }
        gens.push_back(s);
    }
    Problem prob{SimplicialComplex::from_faces(static_cast<int>(m), gens), {}, std::nullopt};

    const json& pairs = member(doc, "pairs", "");
    std::vector<std::shared_ptr<const PairData>> per_vertex;
    if (pairs.is_object() && pairs.contains("shared")) {
        if (pairs.size() != 1) fail("/pairs", "use either 'shared' or 'per_vertex'");
        auto shared = std::make_shared<const PairData>(parse_pair(pairs["shared"], f, "/pairs/shared"));
        per_vertex.assign(static_cast<std::size_t>(m), shared);
    } else if (pairs.is_object() && pairs.contains("per_vertex")) {
        if (pairs.size() != 1) fail("/pairs", "use either 'shared' or 'per_vertex'");
        const json& list = pairs["per_vertex"];
        if (!list.is_array() || list.size() != static_cast<std::size_t>(m))
            fail("/pairs/per_vertex", "expected an array with one pair per vertex");
        for (std::size_t i = 0; i < list.size(); ++i)
            per_vertex.push_back(std::make_shared<const PairData>(parse_pair(list[i], f, "/pairs/per_vertex/" + std::to_string(i))));
    } else {
        fail("/pairs", "expected {\"shared\": ...} or {\"per_vertex\": [...]}");
    }
    prob.pairs = PairDecomposition(f, std::move(per_vertex));
    if (doc.contains("subset")) {
        const json& s = doc["subset"];
        if (!s.is_array()) fail("/subset", "expected an array of vertices");
        VertexSet sub;
        for (std::size_t k = 0; k < s.size(); ++k) {
            long v = integer(s[k], "/subset/" + std::to_string(k));
            if (v < 1 || v > m) fail("/subset/" + std::to_string(k), "vertex out of range");
            sub.insert(static_cast<int>(v));
        }
        prob.subset = sub;
    }
    return prob;
}

Problem parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

std::string print_problem(const Problem& p) {
    json doc;
    doc["format"] = 1;
    doc["field"] = p.pairs.field().name();
    int m = p.complex.ground().empty() ? 0 : p.complex.ground().max();
    json facets = json::array();
    for (VertexSet f : p.complex.facets()) {
        if (f.empty()) continue;
        facets.push_back(f.labels());
    }
    doc["complex"] = {{"m", m}, {"facets", facets}};
    const Field& f = p.pairs.field();
    if (p.pairs.vertex_count() > 0 && p.pairs.is_uniform()) {
        doc["pairs"] = {{"shared", pair_json(p.pairs.at(1), f)}};
    } else {
        json list = json::array();
        for (int v = 1; v <= p.pairs.vertex_count(); ++v) list.push_back(pair_json(p.pairs.at(v), f));
        doc["pairs"] = {{"per_vertex", list}};
    }
    if (p.subset) doc["subset"] = p.subset->labels();
    return doc.dump(2) + "\n";
}

}  // namespace pp
