#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "multinet/document.hpp"
#include "multinet/errors.hpp"

namespace multinet::cli {

namespace {

using nlohmann::json;

struct Options {
    int n = 0;
    int N = 0;
    std::string plane;
    int pivot = -1;
    std::string file = "-";
    std::string catalog_name;
    int catalog_arg = 0;
    bool as_json = false;

    std::string strategy = "unit-triples";
    std::size_t budget = 1'000'000;
    std::size_t top = 10;
    int min_count = 1;
    std::uint64_t seed = 1;
    int threads = 1;
    bool require_light = false;
    bool forbid_fixed = false;
    bool forbid_mult_n_points = false;
    bool json_lines = false;
    std::string planes_file;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_input(const std::string& file, std::istream& in) {
    if (file == "-") return read_all(in);
    std::ifstream f(file);
    if (!f) throw PreconditionFailed("cannot open " + file);
    return read_all(f);
}

Field working_field(const Options& o) {
    if (o.n < 1) throw PreconditionFailed("--n must be positive");
    const int conductor = o.N > 0 ? o.N : o.n;
    if (conductor % o.n != 0) throw PreconditionFailed("--n must divide --N");
    return make_field(conductor);
}

PlaneP3 parse_plane(const std::string& text, Field field) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw PreconditionFailed("--plane needs four comma-separated coefficients");
    PlaneP3::Coords c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = parse_elem(parts[i], field);
    return PlaneP3(std::move(c));
}

std::optional<int> pivot_of(const Options& o) { return o.pivot >= 0 ? std::optional<int>(o.pivot) : std::nullopt; }

int cmd_build(const Options& o, std::ostream& out) {
    const Field field = working_field(o);
    const QnArrangement qn(o.n, field);
    const PlaneP3 h = parse_plane(o.plane, field);
    const auto im = restrict_to_plane(qn, h, pivot_of(o));
    MultinetDocument doc = make_document(im);
    doc.reports["classification"] = to_json(classify_induced(im));
    doc.reports["prediction"] = to_json(predict_class(position_report(h, qn), qn));
    out << dump_canonical(to_json(doc));
    return kOk;
}

// Induced documents are re-derived from their plane so the section-specific
// checks can run; a document that disagrees with its own plane is rejected.
std::optional<InducedMultinet> rebuild_induced(const MultinetDocument& doc) {
    if (doc.kind != "induced") return std::nullopt;
    const QnArrangement qn(*doc.n, doc.multinet.field);
    auto im = restrict_to_plane(qn, *doc.plane, doc.pivot);
    if (im.blocks != doc.multinet.blocks || im.d != doc.multinet.d) return std::nullopt;
    return im;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const MultinetDocument doc = parse_document(read_input(o.file, in));
    const Multinet& m = doc.multinet;
    const VerificationReport r = verify(m);
    bool ok = r.ok();
    std::vector<std::string> extra;
    if (r.condition_i_ok && !doc.base_points.empty()) {
        const auto locus = base_locus(m).points;
        const bool same = locus.size() == doc.base_points.size() &&
                          std::equal(locus.begin(), locus.end(), doc.base_points.begin(),
                                     [](const BasePoint& a, const BasePoint& b) { return a.point == b.point && a.mult == b.mult; });
        if (!same) extra.push_back("listed base points differ from the computed base locus");
    }
    if (r.classification && !verify_pencil(m)) extra.push_back("block polynomials do not span a pencil");
    ok = ok && extra.empty();
    if (o.as_json) {
        json j = to_json(r, m.k(), m.d);
        j["document_checks"] = extra;
        j["pencil"] = r.classification ? verify_pencil(m) : false;
        out << dump_canonical(j);
    } else {
        out << r.summary(m.k(), m.d) << "\n";
        for (const auto& f : r.failures) out << "  " << f << "\n";
        for (const auto& f : extra) out << "  " << f << "\n";
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
    const MultinetDocument doc = parse_document(read_input(o.file, in));
    ClassificationReport report;
    if (doc.kind == "induced") {
        const auto im = rebuild_induced(doc);
        if (!im) throw SchemaError("/blocks", "blocks do not match the section of the stated plane");
        report = classify_induced(*im);
    } else {
        report = classify(doc.multinet);
    }
    out << dump_canonical(to_json(report));
    return report.verdict ? kOk : kCheckFailed;
}

int cmd_latin(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const MultinetDocument doc = parse_document(read_input(o.file, in));
    std::vector<LatinSquare> squares;
    try {
        squares = to_latin(doc.multinet);
    } catch (const PreconditionFailed& e) {
        err << "not a 3- or 4-net: " << e.what() << "\n";
        return kCheckFailed;
    }
    json arr = json::array();
    for (const auto& s : squares) arr.push_back(to_json(s));
    json j = {{"squares", arr}, {"latin", true}, {"orthogonal", squares.size() < 2 || orthogonal(squares[0], squares[1])}};
    for (const auto& s : squares) j["latin"] = j["latin"].get<bool>() && s.is_latin();
    out << dump_canonical(j);
    return kOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    Multinet m;
    if (o.catalog_name == "hasse") {
        m = catalog::hasse(make_field(o.N > 0 ? o.N : 3));
    } else if (o.catalog_name == "monomial") {
        const int n = o.catalog_arg > 0 ? o.catalog_arg : (o.n > 0 ? o.n : 1);
        m = catalog::monomial(make_field(o.N > 0 ? o.N : n), n);
    } else if (o.catalog_name == "local") {
        const int k = o.catalog_arg > 0 ? o.catalog_arg : 3;
        m = catalog::local(make_field(o.N > 0 ? o.N : 1), k);
    } else {
        throw PreconditionFailed("unknown catalog entry '" + o.catalog_name + "' (local, monomial, hasse)");
    }
    out << dump_canonical(to_json(make_document(m)));
    return kOk;
}

int cmd_census(const Options& o, std::ostream& out) {
    const Field field = working_field(o);
    const QnArrangement qn(o.n, field);
    const PlaneP3 h = parse_plane(o.plane, field);
    if (qn.contains(h)) throw PlaneInArrangement("plane " + h.to_string() + " belongs to Q_n");
    const Census c = double_point_census(h, qn);
    json j = to_json(c);
    j["position"] = to_json(position_report(h, qn), qn);
    const auto nd = nondegeneracy_check(h, qn);
    j["nondegenerate"] = {{"precondition_ok", nd.precondition_ok}, {"ok", nd.ok}, {"points", nd.points_checked}, {"note", nd.note}};
    out << dump_canonical(j);
    return c.precondition_ok && !c.agrees ? kCheckFailed : kOk;
}

int cmd_search(const Options& o, std::istream& in, std::ostream& out) {
    const Field field = working_field(o);
    const QnArrangement qn(o.n, field);
    SearchConfig cfg;
    cfg.strategy = parse_strategy(o.strategy);
    cfg.budget = o.budget;
    cfg.top = o.top;
    cfg.min_count = o.min_count;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    cfg.require_light = o.require_light;
    cfg.forbid_fixed = o.forbid_fixed;
    cfg.forbid_mult_n_points = o.forbid_mult_n_points;
    if (cfg.strategy == Strategy::FileList) {
        // One plane per line, four comma-separated coefficients; blank lines and # comments skipped.
        std::istringstream lines(read_input(o.planes_file.empty() ? "-" : o.planes_file, in));
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty() || line[0] == '#') continue;
            cfg.planes.push_back(parse_plane(line, field));
        }
    }
    const SearchOutcome res = run_search(cfg, qn);
    json summary = {{"n", o.n},
                    {"N", field.conductor()},
                    {"strategy", to_string(cfg.strategy)},
                    {"candidates", res.candidates},
                    {"sectioned", res.sectioned},
                    {"exhausted", res.exhausted},
                    {"notes", res.notes},
                    {"best", res.results.empty() ? 0 : res.results.front().double_point_count}};
    if (o.json_lines) {
        for (const auto& r : res.results) out << to_json(r).dump() << "\n";
        out << json{{"summary", summary}}.dump() << "\n";
    } else {
        json results = json::array();
        for (const auto& r : res.results) results.push_back(to_json(r));
        summary["results"] = results;
        out << dump_canonical(summary);
    }
    return kOk;
}

int cmd_reproduce(std::ostream& out, std::ostream& err) {
    const QnArrangement qn(8, make_field(8));
    try {
        const SearchResult r = reproduce_example_46(qn);
        json points = json::array();
        for (const auto& u : example46_points()) points.push_back(qn.unit_point(u).to_strings());
        out << dump_canonical({{"result", to_json(r)}, {"double_points", points}, {"status", "reproduced"}});
        return kOk;
    } catch (const ConditionViolation& e) {
        err << "reproduction failed: " << e.what() << "\n";
        return kCheckFailed;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multinets from plane sections of the Q_n arrangement", "multinet"};
    app.require_subcommand(1);
    Options o;

    auto add_field = [&](CLI::App* sub, bool need_plane) {
        sub->add_option("--n", o.n, "Order of the roots of unity in Q_n")->required();
        sub->add_option("--N", o.N, "Conductor of the working field (default: n)");
        if (need_plane) sub->add_option("--plane", o.plane, "Coefficients c0,c1,c2,c3 as expressions in z")->required();
    };

    auto* build = app.add_subcommand("build", "Section Q_n by a plane and emit the induced multinet");
    add_field(build, true);
    build->add_option("--pivot", o.pivot, "Coordinate eliminated by the plane equation");

    auto* verify_cmd = app.add_subcommand("verify", "Check the multinet axioms and identities of a document");
    verify_cmd->add_option("file", o.file, "Document path, - for standard input");
    verify_cmd->add_flag("--json", o.as_json, "Emit the full report as JSON");

    auto* classify_cmd = app.add_subcommand("classify", "Multiplicity profile and verdict of a document");
    classify_cmd->add_option("file", o.file, "Document path, - for standard input");

    auto* latin = app.add_subcommand("latin", "Latin squares of a 3- or 4-net document");
    latin->add_option("file", o.file, "Document path, - for standard input");

    auto* cat = app.add_subcommand("catalog", "Emit a classical multinet: local K, monomial N, hasse");
    cat->add_option("name", o.catalog_name, "local, monomial or hasse")->required();
    cat->add_option("arg", o.catalog_arg, "Number of lines (local) or n (monomial)");
    cat->add_option("--n", o.n, "n for the monomial arrangement");
    cat->add_option("--N", o.N, "Conductor of the working field");

    auto* census = app.add_subcommand("census", "Double points of a plane section and their checks");
    add_field(census, true);

    auto* search = app.add_subcommand("search", "Search planes with many double points");
    add_field(search, false);
    search->add_option("--strategy", o.strategy, "unit-triples, random-rational or file-list");
    search->add_option("--budget", o.budget, "Point pairs (unit-triples) or planes to scan")->check(CLI::PositiveNumber);
    search->add_option("--top", o.top, "Number of results to keep");
    search->add_option("--min-count", o.min_count, "Smallest double-point count to report");
    search->add_option("--seed", o.seed, "Seed for random-rational");
    search->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--planes", o.planes_file, "Plane list for file-list, - for standard input");
    search->add_flag("--require-light", o.require_light, "Reject planes giving heavy multinets");
    search->add_flag("--forbid-fixed", o.forbid_fixed, "Reject planes with fixed components");
    search->add_flag("--forbid-mult-n-points", o.forbid_mult_n_points, "Reject planes through coordinate points");
    search->add_flag("--json-lines", o.json_lines, "One JSON object per result line");

    auto* repro = app.add_subcommand("reproduce-46", "Rebuild the known eight-double-point plane for n = 8");

    std::vector<const char*> argv{"multinet"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (build->parsed()) return cmd_build(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, in, out);
        if (classify_cmd->parsed()) return cmd_classify(o, in, out);
        if (latin->parsed()) return cmd_latin(o, in, out, err);
        if (cat->parsed()) return cmd_catalog(o, out);
        if (census->parsed()) return cmd_census(o, out);
        if (search->parsed()) return cmd_search(o, in, out);
        if (repro->parsed()) return cmd_reproduce(out, err);
    } catch (const PlaneInArrangement& e) {
        err << "rejected: " << e.what() << "\n";
        return kPlaneInArrangement;
    } catch (const SchemaError& e) {
        err << "schema error at " << (e.path().empty() ? "/" : e.path()) << ": " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionFailed& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace multinet::cli
