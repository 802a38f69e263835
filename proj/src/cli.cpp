#include "nsing/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "nsing/errors.hpp"
#include "nsing/series_oracle.hpp"
#include "nsing/sequences.hpp"

namespace nsing {

Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return Json(static_cast<int64_t>(v));
    return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
            throw std::invalid_argument("not an integer: " + s);
        return BigInt(s);
    }
    throw std::invalid_argument("expected an integer");
}

namespace {

Json vec_json(const IntVec3& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

IntVec3 vec_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-element array");
    return IntVec3(bigint_from_json(j[0]), bigint_from_json(j[1]), bigint_from_json(j[2]));
}

Json rat_json(const Rational& r) { return Json(to_string(r)); }

Json poly_json(const PuiseuxPoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p) a.push_back(Json::array({rat_json(e), to_json(c)}));
    return a;
}

Json multiset_json(const SpectrumPart& s) {
    PuiseuxPoly counts;
    for (const auto& r : s) add_term(counts, r, 1);
    return poly_json(counts);
}

Json face_json(const Face2D& f) {
    Json j;
    j["normal"] = vec_json(f.normal);
    j["value"] = to_json(f.value);
    Json vs = Json::array();
    for (const auto& v : f.vertices) vs.push_back(vec_json(v));
    j["vertices"] = vs;
    if (f.compact) {
        j["interior_points"] = to_json(f.interior_points);
        Json es = Json::array();
        for (const auto& e : f.edges)
            es.push_back({{"from", vec_json(e.p)}, {"to", vec_json(e.q)}, {"neighbour", vec_json(e.other)},
                          {"lattice_length", to_json(e.t)}});
        j["edges"] = es;
    }
    return j;
}

struct Options {
    std::string command;
    std::string input = "-";
    bool minimal = false;
    std::string format = "json";
    std::string max_exponent = "3";
    std::string suite = "all";
    bool reverse = false;
    bool timing = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

InputDocument read_input(const Options& o, std::istream& in) {
    Json doc;
    try {
        if (o.input == "-") {
            doc = Json::parse(in);
        } else {
            std::ifstream f(o.input);
            if (!f) throw UsageError("cannot open " + o.input);
            doc = Json::parse(f);
        }
    } catch (const Json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_input(doc);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid input document: ") + e.what());
    }
}

Json diagram_report(const Support& s) {
    Json r;
    NewtonPolyhedron P = newton_polyhedron(s);
    if (P.compact_faces.empty()) throw Error(ErrorKind::NoCompactFace, "no compact two dimensional face");
    Json cf = Json::array(), nf = Json::array();
    for (const auto& f : P.compact_faces) cf.push_back(face_json(f));
    for (const auto& f : P.noncompact_faces) nf.push_back(face_json(f));
    r["compact_faces"] = cf;
    r["noncompact_faces"] = nf;
    r["convenient"] = is_convenient(s);
    bool rhs = is_rhs_link(P);
    r["rhs"] = rhs;
    if (rhs) {
        DiagramAnatomy a = classify_diagram(s);
        Json aj;
        aj["kind"] = a.kind;
        aj["central_face"] = a.central_face ? vec_json(*a.central_face) : Json(nullptr);
        aj["central_edges"] = a.central_edges;
        Json arms = Json::array();
        for (const auto& arm : a.arms) {
            Json l = Json::array();
            for (const auto& n : arm) l.push_back(vec_json(n));
            arms.push_back(l);
        }
        aj["arms"] = arms;
        r["anatomy"] = aj;
    } else {
        r["anatomy"] = nullptr;
    }
    return r;
}

Json graph_report(const Support& s, const Options& o, std::string& text) {
    NewtonPolyhedron P = newton_polyhedron(s);
    if (P.compact_faces.empty()) throw Error(ErrorKind::NoCompactFace, "no compact two dimensional face");
    PlumbingGraph g = oka_graph(P).graph;
    if (o.minimal) g = minimal_model(g);
    if (o.format == "dot") text = graph_to_dot(g);
    if (o.format == "text") text = graph_to_text(g);
    return graph_to_json(g);
}

void add_check(Json& checks, bool& all, const std::string& name, bool ok) {
    checks[name] = ok;
    all = all && ok;
}

bool nondecreasing(const SequenceResult& seq) {
    for (size_t i = 1; i < seq.steps.size(); ++i)
        if (seq.steps[i].r < seq.steps[i - 1].r) return false;
    return true;
}

Json verify_report(const Support& s, const Options& o, bool& all) {
    Analysis an = analyze(s);
    SequenceOptions opt, rev;
    opt.reverse_tiebreak = o.reverse;
    rev.reverse_tiebreak = !o.reverse;
    Rational R = parse_rational(o.max_exponent);
    Json checks = Json::object();
    all = true;
    const bool every = o.suite == "all";

    auto newton_ctx = SequenceContext::for_newton(an.oka_convenient, an.convenient);
    auto min_ctx = SequenceContext::for_graph(an.minimal);
    auto seqI = run_sequence(min_ctx, RatioTestKind::I, opt);
    auto seqIII = run_sequence(newton_ctx, RatioTestKind::III, opt);
    const BigInt pg = seqIII.a_sum();

    if (every || o.suite == "sequences") {
        add_check(checks, all, "pg_I_equals_III", seqI.a_sum() == pg);
        add_check(checks, all, "spectrum_equals_saito", spectrum_leq0(an, opt) == saito_spectrum(an.support));
        add_check(checks, all, "poincare_equals_newton",
                  poincare_via_sequence(an, R, opt) == poincare_newton(an.support, R));
        add_check(checks, all, "sw_equals_pg", sw_invariant(an, opt).value == pg);
        auto seqII = run_sequence(newton_ctx, RatioTestKind::II, opt);
        add_check(checks, all, "ratios_nondecreasing",
                  nondecreasing(seqI) && nondecreasing(seqII) && nondecreasing(seqIII));
        const auto& L = newton_ctx.laufer;
        const size_t n = an.oka_convenient.graph.size();
        Cycle zk_e = sub(newton_ctx.ZK, all_ones(n));
        add_check(checks, all, "laufer_fixed_points",
                  L.x(Cycle(n, 0)) == Cycle(n, 0) && L.x(*newton_ctx.wt_f) == *newton_ctx.wt_f &&
                      L.x(zk_e) == add(zk_e, L.legs_cycle()));
        add_check(checks, all, "canonical_cycle_merle_teissier",
                  newton_ctx.ZK == merle_teissier_ZK(an.oka_convenient, an.convenient));
        add_check(checks, all, "tiebreak_invariance",
                  geometric_genus(an, rev).via_I == seqI.a_sum() && geometric_genus(an, rev).via_III == pg &&
                      spectrum_leq0(an, rev) == spectrum_leq0(an, opt) &&
                      poincare_via_sequence(an, R, rev) == poincare_via_sequence(an, R, opt) &&
                      sw_invariant(an, rev).value == sw_invariant(an, opt).value);
    }
    if (every || o.suite == "points") {
        add_check(checks, all, "points_kind_III", enumerate_P(an.oka_convenient, seqIII).ok());
        add_check(checks, all, "points_kind_II_prefix",
                  enumerate_P(an.oka_convenient, run_sequence(newton_ctx, RatioTestKind::II, opt)).ok());
        Cycle region = sub(newton_ctx.ZK, all_ones(an.oka_convenient.graph.size()));
        add_check(checks, all, "lattice_count_equals_pg", count_outside(an.oka_convenient.graph, region) == pg);
        add_check(checks, all, "positive_points_equal_pg", count_positive_points_under(an.support) == pg);
    }
    if (every || o.suite == "series") {
        auto data = intersection_data(an.minimal);
        add_check(checks, all, "q_ZK_equals_pg", counting_q(data, an.minimal, min_ctx.ZK) == pg);
        bool stepwise = true;
        BigInt prev = 0;
        for (size_t i = 0; i < seqI.steps.size() && stepwise; ++i) {
            Cycle next = i + 1 < seqI.steps.size() ? seqI.steps[i + 1].Z : seqI.target;
            BigInt q = counting_q(data, an.minimal, next);
            stepwise = q - prev == seqI.steps[i].a;
            prev = q;
        }
        add_check(checks, all, "q_stepwise", stepwise);
        RatCycle box = to_rat(minimal_cycle(an.minimal));
        auto poly = zeta_by_products(data, an.minimal, box);
        bool paths = true;
        const auto D = scaled_duals(data, an.minimal).D;
        for (const auto& [key, c] : poly) {
            RatCycle l;
            for (auto k : key) l.push_back(make_rat(k, D));
            paths = paths && zeta_coefficient(data, an.minimal, l) == c;
        }
        add_check(checks, all, "zeta_two_paths", paths);
    }
    Json r;
    r["checks"] = checks;
    r["passed"] = all;
    r["pg"] = to_json(pg);
    return r;
}

Json compute(const Options& o, const InputDocument& doc, std::string& text, bool& passed) {
    const Support& s = doc.monomials;
    SequenceOptions opt;
    opt.reverse_tiebreak = o.reverse;
    if (o.command == "diagram") return diagram_report(s);
    if (o.command == "graph") return graph_report(s, o, text);
    if (o.command == "verify") return verify_report(s, o, passed);

    Analysis an = analyze(s);
    Json r;
    if (o.command == "pg") {
        GenusResult g = geometric_genus(an, opt);
        r["pg"] = to_json(g.via_III);
        r["via_I"] = to_json(g.via_I);
        r["via_III"] = to_json(g.via_III);
        r["sequences_agree"] = g.agree();
    } else if (o.command == "spectrum") {
        SpectrumPart sp = spectrum_leq0(an, opt);
        r["spectrum"] = multiset_json(sp);
        r["total_multiplicity"] = sp.size();
        r["agrees_with_saito"] = sp == saito_spectrum(an.support);
    } else if (o.command == "poincare") {
        Rational R = parse_rational(o.max_exponent);
        PuiseuxPoly p = poincare_via_sequence(an, R, opt);
        r["max_exponent"] = rat_json(R);
        r["terms"] = poly_json(p);
        r["agrees_with_newton_filtration"] = p == poincare_newton(an.support, R);
    } else if (o.command == "sw") {
        SWResult sw = sw_invariant(an, opt);
        r["value"] = to_json(sw.value);
        r["ZK_sq"] = rat_json(sw.ZK_sq);
        r["vertex_count"] = sw.vertex_count;
        // sw^0 = value + (Z_K^2 + |V|) / 8
        r["sw_canonical"] = rat_json(Rational(sw.value) + (sw.ZK_sq + Rational(sw.vertex_count)) / 8);
    }
    return r;
}

}  // namespace

InputDocument parse_input(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("document must be an object");
    InputDocument d;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw std::invalid_argument("name must be a string");
        d.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("monomials") || !doc["monomials"].is_array() || doc["monomials"].empty())
        throw std::invalid_argument("monomials must be a nonempty array");
    for (const auto& m : doc["monomials"]) {
        if (!m.is_array() || m.size() != 3) throw std::invalid_argument("each monomial must have 3 exponents");
        for (const auto& e : m)
            if (!e.is_number_integer() || e.get<int64_t>() < 0)
                throw std::invalid_argument("exponents must be nonnegative integers");
        d.monomials.emplace_back(m[0].get<int64_t>(), m[1].get<int64_t>(), m[2].get<int64_t>());
    }
    return d;
}

Json graph_to_json(const PlumbingGraph& g) {
    Json vs = Json::array();
    for (const auto& v : g.vertices) {
        Json j;
        j["id"] = v.id;
        j["b"] = to_json(v.b);
        j["g"] = to_json(v.g);
        if (v.ell) j["ell"] = vec_json(*v.ell);
        vs.push_back(j);
    }
    Json es = Json::array();
    for (const auto& [a, b] : g.edges) es.push_back(Json::array({a, b}));
    return Json{{"vertices", vs}, {"edges", es}};
}

PlumbingGraph graph_from_json(const Json& j) {
    PlumbingGraph g;
    for (const auto& v : j.at("vertices")) {
        Vertex x;
        x.id = v.at("id").get<int>();
        x.b = bigint_from_json(v.at("b"));
        x.g = bigint_from_json(v.at("g"));
        if (v.contains("ell")) x.ell = vec_from_json(v.at("ell"));
        g.vertices.push_back(x);
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges are pairs of ids");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    g.normalize();
    return g;
}

std::string graph_to_dot(const PlumbingGraph& g) {
    std::ostringstream s;
    s << "graph plumbing {\n";
    for (const auto& v : g.vertices)
        s << "  v" << v.id << " [label=\"v" << v.id << " [b=" << v.b << ", g=" << v.g << "]\"];\n";
    for (const auto& [a, b] : g.edges) s << "  v" << a << " -- v" << b << ";\n";
    s << "}\n";
    return s.str();
}

std::string graph_to_text(const PlumbingGraph& g) {
    std::ostringstream s;
    for (const auto& v : g.vertices) {
        s << "v" << v.id << " b=" << v.b << " g=" << v.g;
        if (v.ell) s << " ell=" << v.ell->str();
        s << "\n";
    }
    for (const auto& [a, b] : g.edges) s << "v" << a << " -- v" << b << "\n";
    return s.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Invariants of Newton nondegenerate surface singularities"};
    app.require_subcommand(1);
    app.add_flag("--reverse-tiebreak", o.reverse, "break remaining ties by the largest node id");
    app.add_flag("--timing", o.timing, "include the elapsed time in the report");

    auto input_opt = [&](CLI::App* sub) { sub->add_option("input", o.input, "input JSON file, - for stdin"); };
    auto* diagram = app.add_subcommand("diagram", "faces, convenience, link type and anatomy of the diagram");
    input_opt(diagram);
    auto* graph = app.add_subcommand("graph", "resolution graph");
    graph->add_flag("--minimal", o.minimal, "blow down to the minimal model");
    graph->add_option("--format", o.format)->check(CLI::IsMember({"json", "text", "dot"}));
    input_opt(graph);
    auto* pg = app.add_subcommand("pg", "geometric genus");
    input_opt(pg);
    auto* spectrum = app.add_subcommand("spectrum", "spectrum part in (-1, 0]");
    input_opt(spectrum);
    auto* poincare = app.add_subcommand("poincare", "Poincare series of the Newton filtration");
    poincare->add_option("--max-exponent", o.max_exponent, "truncation exponent, a positive rational");
    input_opt(poincare);
    auto* sw = app.add_subcommand("sw", "normalized Seiberg-Witten invariant");
    input_opt(sw);
    auto* verify = app.add_subcommand("verify", "cross-check the invariants against the brute-force oracles");
    verify->add_option("--suite", o.suite)->check(CLI::IsMember({"all", "points", "sequences", "series"}));
    verify->add_option("--max-exponent", o.max_exponent, "truncation exponent for the series comparison");
    input_opt(verify);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }
    o.command = app.get_subcommands().front()->get_name();
    if (o.command == "poincare" || o.command == "verify") {
        try {
            if (parse_rational(o.max_exponent) <= 0) throw std::invalid_argument("must be positive");
        } catch (const std::exception& e) {
            err << "--max-exponent: " << e.what() << "\n";
            return 2;
        }
    }

    auto t0 = std::chrono::steady_clock::now();
    Json report;
    std::string text;
    bool passed = true;
    try {
        InputDocument doc = read_input(o, in);
        report["command"] = o.command;
        report["name"] = doc.name;
        report["result"] = compute(o, doc, text, passed);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        Json j{{"command", o.command}, {"error", e.name()}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 1;
    }
    if (o.timing)
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!text.empty())
        out << text;
    else
        out << report.dump(2) << "\n";
    return passed ? 0 : 1;
}

}  // namespace nsing
