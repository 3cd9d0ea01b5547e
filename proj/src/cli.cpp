#include "pp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <iomanip>
#include <sstream>

#include "pp/oracle.hpp"
#include "pp/problem.hpp"
#include "pp/starprod.hpp"

namespace pp {

using nlohmann::json;

namespace {

constexpr int kWarnVertices = 16;

struct Options {
    bool pretty = false;
    int threads = 0;
    std::string problem;
    std::string space = "full";
    std::string subset;
    std::string degree;
    std::string u, v;
    std::string check = "all";
    std::uint64_t seed = 0;
    int max_m = 6;
    bool mutate_drop_suspension = false;
};

json set_json(VertexSet s) {
    json a = json::array();
    for (int v : s.labels()) a.push_back(v);
    return a;
}

json series_json(const PoincareSeries& s) {
    json o = json::object();
    for (const auto& [d, c] : s.poly().terms()) o[std::to_string(d)] = c.get_str();
    return o;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

Engine load_engine(const Options& o, Problem& prob, std::vector<std::string>& warnings) {
    prob = parse_problem(o.problem);
    if (prob.complex.vertex_count() > kWarnVertices)
        warnings.push_back("complex has " + std::to_string(prob.complex.vertex_count()) +
                           " vertices; summand enumeration grows like 3^m, consider --subset");
    EngineOptions eo;
    eo.threads = o.threads;
    return Engine(prob.complex, prob.pairs, eo);
}

std::optional<VertexSet> subset_of(const Options& o, const Problem& prob) {
    if (!o.subset.empty()) return parse_subset(o.subset, prob.complex.vertex_count());
    return prob.subset;
}

json generator_json(const Engine& e, const Generator& g) {
    json factors = json::array();
    auto jl = g.J.labels();
    for (std::size_t k = 0; k < jl.size(); ++k) {
        const auto& gen = e.pairs().at(jl[k]).gens[static_cast<std::size_t>(g.factors[k])];
        factors.push_back({{"vertex", jl[k]}, {"gen", gen.name}, {"module", std::string(1, static_cast<char>(std::toupper(module_letter(gen.module))))}});
    }
    return {{"label", e.label(g)},
            {"degree", std::to_string(e.degree(g))},
            {"J", set_json(g.J)},
            {"I", set_json(g.I)},
            {"sigma", set_json(g.sigma)},
            {"link", {{"degree", std::to_string(g.link_degree)}, {"index", std::to_string(g.link_index)}}},
            {"factors", factors}};
}

std::string coeff_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

json link_class_json(const LinkClass& c) {
    json coeffs = json::array();
    for (const auto& x : c.coeffs) coeffs.push_back(x.get_str());
    return {{"I", set_json(c.S)}, {"sigma", set_json(c.sigma)}, {"degree", std::to_string(c.degree)}, {"coeffs", coeffs}};
}

CommandResult cmd_validate(const Options& o) {
    Problem prob;
    std::vector<std::string> warnings;
    Engine e = load_engine(o, prob, warnings);
    json verts = json::array();
    for (int v = 1; v <= e.pairs().vertex_count(); ++v) {
        WedgeModel w = wedge_model(e.pairs(), v);
        auto dims = [](const std::vector<int>& d) {
            json a = json::array();
            for (int x : d) a.push_back(std::to_string(x));
            return a;
        };
        verts.push_back({{"vertex", v}, {"pair", e.pairs().at(v).name}, {"wedge_model", {{"B", dims(w.b)}, {"C", dims(w.c)}, {"E", dims(w.e)}}}});
    }
    json doc{{"format", 1},
             {"command", "validate"},
             {"valid", true},
             {"field", e.field().name()},
             {"m", std::to_string(prob.complex.vertex_count())},
             {"faces", std::to_string(prob.complex.face_count())},
             {"dimension", std::to_string(prob.complex.dimension())},
             {"vertices", verts},
             {"warnings", warnings}};
    if (!o.pretty) return {0, render(doc), ""};
    std::ostringstream os;
    os << "valid problem over " << e.field().name() << ": " << prob.complex.vertex_count() << " vertices, "
       << prob.complex.face_count() << " faces, dimension " << prob.complex.dimension() << "\n";
    for (int v = 1; v <= e.pairs().vertex_count(); ++v)
        os << "  vertex " << v << "  " << e.pairs().at(v).name << "  " << wedge_model(e.pairs(), v).describe() << "\n";
    return {0, os.str(), ""};
}

CommandResult cmd_series(const Options& o) {
    Problem prob;
    std::vector<std::string> warnings;
    Engine e = load_engine(o, prob, warnings);
    PoincareSeries s;
    json doc{{"format", 1}, {"command", "series"}, {"space", o.space}};
    auto sub = subset_of(o, prob);
    if (o.space == "full") {
        if (sub) {
            Engine restricted(full_subcomplex(prob.complex, *sub), prob.pairs, e.options());
            s = restricted.full_series();
            doc["subset"] = set_json(*sub);
        } else {
            s = e.full_series();
        }
    } else {
        VertexSet j = sub.value_or(e.all());
        s = e.smash_series(j);
        doc["subset"] = set_json(j);
    }
    doc["reduced"] = s.is_reduced();
    doc["series"] = series_json(s);
    doc["warnings"] = warnings;
    if (!o.pretty) return {0, render(doc), ""};
    std::ostringstream os;
    os << (s.is_reduced() ? "reduced " : "") << "Poincare series (" << o.space << "): " << s.to_string() << "\n";
    os << "  degree  dimension\n";
    for (const auto& [d, c] : s.poly().terms()) os << "  " << std::setw(6) << d << "  " << c.get_str() << "\n";
    return {0, os.str(), ""};
}

CommandResult cmd_generators(const Options& o) {
    Problem prob;
    std::vector<std::string> warnings;
    Engine e = load_engine(o, prob, warnings);
    auto sub = subset_of(o, prob);
    std::vector<Generator> gens = sub ? e.smash_generators(*sub) : e.full_generators();
    std::optional<int> deg;
    if (!o.degree.empty()) {
        try {
            deg = std::stoi(o.degree);
        } catch (const std::exception&) {
            throw ProblemError("--degree: expected an integer");
        }
    }
    json list = json::array();
    std::ostringstream os;
    for (const auto& g : gens) {
        if (deg && e.degree(g) != *deg) continue;
        list.push_back(generator_json(e, g));
        os << "  " << std::setw(4) << e.degree(g) << "  " << e.label(g) << "\n";
    }
    json doc{{"format", 1}, {"command", "generators"}, {"count", std::to_string(list.size())}, {"generators", list}, {"warnings", warnings}};
    if (sub) doc["subset"] = set_json(*sub);
    if (deg) doc["degree"] = std::to_string(*deg);
    if (!o.pretty) return {0, render(doc), ""};
    return {0, std::to_string(list.size()) + " generators\n  deg   label\n" + os.str(), ""};
}

CommandResult cmd_product(const Options& o) {
    Problem prob;
    std::vector<std::string> warnings;
    Engine e = load_engine(o, prob, warnings);
    Generator u = e.parse_label(o.u), v = e.parse_label(o.v);
    StarClass r = cup(e, u, v);
    json terms = json::array();
    std::ostringstream os;
    for (const auto& [g, c] : r.terms) {
        terms.push_back({{"coeff", c.get_str()}, {"label", e.label(g)}, {"degree", std::to_string(e.degree(g))}, {"generator", generator_json(e, g)}});
        os << "  " << std::setw(6) << c.get_str() << "  " << e.label(g) << "\n";
    }
    json unknown = json::array();
    for (const auto& t : r.unknown) {
        json factors = json::array();
        auto jl = t.pending.J.labels();
        for (std::size_t k = 0; k < jl.size(); ++k) factors.push_back(e.pairs().at(jl[k]).gens[static_cast<std::size_t>(t.pending.factors[k])].name);
        unknown.push_back({{"coeff", t.coeff.get_str()},
                           {"alpha", link_class_json(t.alpha)},
                           {"beta", link_class_json(t.beta)},
                           {"product_in", {{"I", set_json(t.I)}, {"sigma", set_json(t.sigma)}}},
                           {"target", {{"J", set_json(t.pending.J)}, {"I", set_json(t.pending.I)}, {"sigma", set_json(t.pending.sigma)}, {"link_degree", std::to_string(t.pending.link_degree)}, {"factors", factors}}}});
        os << "  unknown: " << t.coeff.get_str() << " * (" << coeff_string(t.alpha.coeffs) << " * " << coeff_string(t.beta.coeffs)
           << " in lk" << t.sigma.to_string() << "(K" << t.I.to_string() << "))\n";
    }
    json flags = json::array();
    for (const auto& f : r.flags) flags.push_back(f);
    json doc{{"format", 1},
             {"command", "product"},
             {"u", e.label(u)},
             {"v", e.label(v)},
             {"degree", std::to_string(e.degree(u) + e.degree(v))},
             {"terms", terms},
             {"unknown", unknown},
             {"flags", flags},
             {"warning", !r.unknown.empty()},
             {"warnings", warnings}};
    std::string err = r.unknown.empty() ? "" : "warning: product has unevaluated link products (see \"unknown\")\n";
    if (!o.pretty) return {0, render(doc), err};
    std::string head = e.label(u) + "  *  " + e.label(v) + "\n";
    if (r.is_zero()) head += "  0\n";
    return {0, head + os.str(), err};
}

CommandResult cmd_oracle(const Options& o) {
    CorpusOptions co;
    co.seed = o.seed;
    co.max_m = o.max_m;
    co.threads = o.threads;
    co.engine.drop_suspension = o.mutate_drop_suspension;
    if (o.check != "all") co.checks = {o.check};
    auto reports = corpus_check(co);
    std::map<std::string, std::pair<long, long>> counts;
    for (const auto& c : co.checks) counts[c] = {0, 0};
    json failures = json::array();
    for (const auto& r : reports) {
        auto& [total, failed] = counts[r.check];
        ++total;
        if (!r.pass) {
            ++failed;
            failures.push_back({{"check", r.check}, {"instance", r.instance}, {"expected", r.expected}, {"computed", r.computed}, {"reproduction", r.reproduction}});
        }
    }
    json checks = json::object();
    for (const auto& [name, c] : counts) checks[name] = {{"total", std::to_string(c.first)}, {"failed", std::to_string(c.second)}};
    bool pass = failures.empty();
    json doc{{"format", 1}, {"command", "oracle"}, {"seed", std::to_string(o.seed)}, {"max_m", std::to_string(o.max_m)}, {"checks", checks}, {"failures", failures}, {"pass", pass}};
    int status = pass ? 0 : 2;
    if (!o.pretty) return {status, render(doc), ""};
    std::ostringstream os;
    os << "oracle corpus, seed " << o.seed << ", m <= " << o.max_m << "\n";
    for (const auto& [name, c] : counts) os << "  " << std::setw(10) << name << "  " << c.first << " checks, " << c.second << " failed\n";
    for (const auto& f : failures) os << "  FAIL " << f["check"].get<std::string>() << " " << f["instance"].get<std::string>() << ": expected " << f["expected"].get<std::string>() << ", computed " << f["computed"].get<std::string>() << "\n";
    os << (pass ? "PASS\n" : "FAIL\n");
    return {status, os.str(), ""};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Cohomology of polyhedral products"};
    app.require_subcommand(1);
    app.add_flag("--pretty", o.pretty, "human-readable tables instead of JSON");
    app.add_option("--threads", o.threads, "worker threads (default: PP_THREADS or all cores)")->check(CLI::NonNegativeNumber);

    auto* validate = app.add_subcommand("validate", "parse and validate a problem file");
    validate->add_option("problem", o.problem, "problem file")->required();

    auto* series = app.add_subcommand("series", "Hilbert-Poincare series");
    series->add_option("problem", o.problem, "problem file")->required();
    series->add_option("--space", o.space, "smash or full")->check(CLI::IsMember({"smash", "full"}));
    series->add_option("--subset", o.subset, "restrict to the full subcomplex on J, e.g. 1,3");

    auto* generators = app.add_subcommand("generators", "labeled additive basis");
    generators->add_option("problem", o.problem, "problem file")->required();
    generators->add_option("--subset", o.subset, "only the smash summand of J, e.g. 1,2");
    generators->add_option("--degree", o.degree, "only generators of this degree");

    auto* product = app.add_subcommand("product", "cup product of two generators");
    product->add_option("problem", o.problem, "problem file")->required();
    product->add_option("--u", o.u, "generator label")->required();
    product->add_option("--v", o.v, "generator label")->required();

    auto* oracle = app.add_subcommand("oracle", "cross-check the engine on a seeded corpus");
    oracle->add_option("--check", o.check, "euler, hochster, join or all")->check(CLI::IsMember({"euler", "hochster", "join", "all"}));
    oracle->add_option("--seed", o.seed, "corpus seed");
    oracle->add_option("--max-m", o.max_m, "largest vertex count")->check(CLI::Range(1, 6));
    oracle->add_flag("--mutate-drop-suspension", o.mutate_drop_suspension, "self-test: run a deliberately broken engine");

    for (auto* sub : {validate, series, generators, product, oracle}) {
        sub->add_flag("--pretty", o.pretty, "human-readable tables instead of JSON");
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::NonNegativeNumber);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        return {1, "", std::string(e.what()) + "\n" + "run with --help for usage\n"};
    }

    auto failure = [&](const std::string& command, const std::string& msg) {
        json doc{{"format", 1}, {"command", command}, {"valid", false}, {"error", msg}};
        return CommandResult{1, o.pretty ? "" : render(doc), "error: " + msg + "\n"};
    };
    std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "validate") return cmd_validate(o);
        if (name == "series") return cmd_series(o);
        if (name == "generators") return cmd_generators(o);
        if (name == "product") return cmd_product(o);
        return cmd_oracle(o);
    } catch (const std::invalid_argument& e) {
        return failure(name, e.what());
    } catch (const std::exception& e) {
        CommandResult r = failure(name, std::string("internal error: ") + e.what());
        return r;
    }
}

}  // namespace pp
