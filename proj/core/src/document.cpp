#include "multinet/document.hpp"

#include <algorithm>

#include "multinet/errors.hpp"

namespace multinet {

using nlohmann::json;

namespace {

template <class P>
json strings(const P& p) {
    return p.to_strings();
}

json block_json(const Block& block) {
    json arr = json::array();
    for (const auto& bl : block) arr.push_back({{"line", bl.line.to_strings()}, {"mult", bl.mult}});
    return arr;
}

json hist_json(const std::map<int, int>& h) {
    json o = json::object();
    for (const auto& [m, c] : h) o[std::to_string(m)] = c;
    return o;
}

class Reader {
public:
    explicit Reader(Field field) : field_(field) {}

    static const json& member(const json& obj, const std::string& key, const std::string& path) {
        if (!obj.is_object()) throw SchemaError(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) throw SchemaError(path + "/" + key, "missing");
        return *it;
    }

    static int integer(const json& j, const std::string& path) {
        if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
        return j.get<int>();
    }

    FieldElem elem(const json& j, const std::string& path) const {
        if (!j.is_string()) throw SchemaError(path, "expected an expression string");
        try {
            return parse_elem(j.get<std::string>(), field_);
        } catch (const Error& e) {
            throw SchemaError(path, e.what());
        }
    }

    template <class P>
    P projective(const json& j, const std::string& path) const {
        if (!j.is_array() || j.size() != P::dimension)
            throw SchemaError(path, "expected " + std::to_string(P::dimension) + " expressions");
        typename P::Coords c;
        for (std::size_t i = 0; i < P::dimension; ++i) c[i] = elem(j[i], path + "/" + std::to_string(i));
        try {
            return P(std::move(c));
        } catch (const DegenerateInput& e) {
            throw SchemaError(path, e.what());
        }
    }

    Block block(const json& j, const std::string& path) const {
        if (!j.is_array()) throw SchemaError(path, "expected an array of lines");
        Block out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string p = path + "/" + std::to_string(i);
            const int mult = integer(member(j[i], "mult", p), p + "/mult");
            if (mult < 1) throw SchemaError(p + "/mult", "multiplicity must be positive");
            out.push_back(BlockLine{projective<LineP2>(member(j[i], "line", p), p + "/line"), mult});
        }
        std::sort(out.begin(), out.end(), [](const BlockLine& a, const BlockLine& b) { return a.line < b.line; });
        return out;
    }

    std::vector<Block> blocks(const json& j, const std::string& path) const {
        if (!j.is_array()) throw SchemaError(path, "expected an array of blocks");
        std::vector<Block> out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(block(j[i], path + "/" + std::to_string(i)));
        return out;
    }

private:
    Field field_;
};

}  // namespace

json to_json(const PointP2& p) { return strings(p); }
json to_json(const PointP3& p) { return strings(p); }
json to_json(const LineP2& l) { return strings(l); }
json to_json(const PlaneP3& h) { return strings(h); }

MultinetDocument make_document(const Multinet& m) {
    MultinetDocument doc;
    doc.multinet = m;
    doc.multinet.canonicalize();
    try {
        doc.base_points = base_locus(doc.multinet).points;
    } catch (const ConditionViolation&) {
        doc.base_points.clear();
    }
    return doc;
}

MultinetDocument make_document(const InducedMultinet& im) {
    MultinetDocument doc = make_document(im.as_multinet());
    doc.kind = "induced";
    doc.n = im.n;
    doc.pivot = im.section.pivot();
    doc.plane = im.section.plane();
    doc.raw_blocks = im.raw_blocks;
    doc.fixed_components = im.fixed_components;
    return doc;
}

json to_json(const MultinetDocument& doc) {
    const Multinet& m = doc.multinet;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = doc.kind;
    j["N"] = m.field.conductor();
    j["k"] = m.k();
    j["d"] = m.d;
    if (!m.provenance.empty()) j["provenance"] = m.provenance;
    json blocks = json::array();
    for (const auto& b : m.blocks) blocks.push_back(block_json(b));
    j["blocks"] = blocks;
    json points = json::array();
    for (const auto& p : doc.base_points) points.push_back({{"point", p.point.to_strings()}, {"mult", p.mult}});
    j["base_points"] = points;
    if (doc.n) j["n"] = *doc.n;
    if (doc.pivot) j["pivot"] = *doc.pivot;
    if (doc.plane) j["plane"] = doc.plane->to_strings();
    if (doc.kind == "induced") {
        json raw = json::array();
        for (const auto& b : doc.raw_blocks) raw.push_back(block_json(b));
        j["raw_blocks"] = raw;
        json fixed = json::array();
        for (const auto& l : doc.fixed_components) fixed.push_back(l.to_strings());
        j["fixed_components"] = fixed;
    }
    if (!doc.reports.empty()) j["reports"] = doc.reports;
    return j;
}

MultinetDocument parse_document(const json& j) {
    const auto& version = Reader::member(j, "schema_version", "");
    if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
        throw SchemaError("/schema_version", "unsupported schema version");
    MultinetDocument doc;
    const auto& kind = Reader::member(j, "kind", "");
    if (!kind.is_string() || (kind != "multinet" && kind != "induced"))
        throw SchemaError("/kind", "expected \"multinet\" or \"induced\"");
    doc.kind = kind.get<std::string>();

    const int conductor = Reader::integer(Reader::member(j, "N", ""), "/N");
    if (conductor < 1 || conductor > Field::kMaxConductor) throw SchemaError("/N", "conductor out of range");
    const Field field = make_field(conductor);
    const Reader r(field);

    doc.multinet.field = field;
    doc.multinet.d = Reader::integer(Reader::member(j, "d", ""), "/d");
    doc.multinet.blocks = r.blocks(Reader::member(j, "blocks", ""), "/blocks");
    const int k = Reader::integer(Reader::member(j, "k", ""), "/k");
    if (k != doc.multinet.k()) throw SchemaError("/k", "does not match the number of blocks");
    if (auto it = j.find("provenance"); it != j.end()) {
        if (!it->is_string()) throw SchemaError("/provenance", "expected a string");
        doc.multinet.provenance = it->get<std::string>();
    }
    if (auto it = j.find("base_points"); it != j.end()) {
        if (!it->is_array()) throw SchemaError("/base_points", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string p = "/base_points/" + std::to_string(i);
            const int mult = Reader::integer(Reader::member((*it)[i], "mult", p), p + "/mult");
            doc.base_points.push_back(BasePoint{r.projective<PointP2>(Reader::member((*it)[i], "point", p), p + "/point"), mult});
        }
        std::sort(doc.base_points.begin(), doc.base_points.end(),
                  [](const BasePoint& a, const BasePoint& b) { return a.point < b.point; });
    }
    if (doc.kind == "induced") {
        doc.n = Reader::integer(Reader::member(j, "n", ""), "/n");
        if (*doc.n < 1 || conductor % *doc.n != 0) throw SchemaError("/n", "must divide N");
        doc.pivot = Reader::integer(Reader::member(j, "pivot", ""), "/pivot");
        if (*doc.pivot < 0 || *doc.pivot > 3) throw SchemaError("/pivot", "must be a coordinate index");
        doc.plane = r.projective<PlaneP3>(Reader::member(j, "plane", ""), "/plane");
        doc.raw_blocks = r.blocks(Reader::member(j, "raw_blocks", ""), "/raw_blocks");
        const auto& fixed = Reader::member(j, "fixed_components", "");
        if (!fixed.is_array()) throw SchemaError("/fixed_components", "expected an array");
        for (std::size_t i = 0; i < fixed.size(); ++i)
            doc.fixed_components.push_back(r.projective<LineP2>(fixed[i], "/fixed_components/" + std::to_string(i)));
        std::sort(doc.fixed_components.begin(), doc.fixed_components.end());
    }
    if (auto it = j.find("reports"); it != j.end()) doc.reports = *it;
    return doc;
}

MultinetDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_document(j);
}

json to_json(const VerificationReport& r, int k, int d) {
    json ids = json::array();
    for (const auto& c : r.identities) ids.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    json j = {{"condition_i", r.condition_i_ok},
              {"condition_ii", r.condition_ii_ok},
              {"identities", ids},
              {"k_bound", r.k_bound_ok},
              {"four_blocks_net", r.four_blocks_net_ok},
              {"failures", r.failures},
              {"summary", r.summary(k, d)}};
    j["classification"] = r.classification ? json(to_string(*r.classification)) : json(nullptr);
    return j;
}

json to_json(const ClassificationReport& r) {
    json j = {{"n", r.n},
              {"d", r.d},
              {"k", r.k},
              {"line_multiplicities", hist_json(r.line_histogram)},
              {"point_multiplicities", hist_json(r.point_histogram)},
              {"fixed_components", r.fixed_components},
              {"profile_checked", r.profile_checked},
              {"profile_ok", r.profile_ok},
              {"violations", r.violations},
              {"verification", to_json(r.verification, r.k, r.d)}};
    j["verdict"] = r.verdict ? json(to_string(*r.verdict)) : json(nullptr);
    return j;
}

json to_json(const PredictedClass& p) {
    return {{"n", p.n},
            {"d", p.degree},
            {"mult_n_lines", p.mult_n_lines},
            {"mult_2_lines", p.mult_2_lines},
            {"fixed_components", p.fixed_components},
            {"mult_n_points", p.mult_n_points},
            {"unit_points", p.unit_points},
            {"double_points", p.double_points},
            {"line_multiplicities", hist_json(p.line_histogram)},
            {"point_multiplicities", hist_json(p.point_histogram)},
            {"verdict", to_string(p.verdict)},
            {"ambiguous", p.ambiguous},
            {"notes", p.notes}};
}

json to_json(const PositionReport& r, const QnArrangement& qn) {
    json units = json::array();
    for (const auto& u : r.unit_points) units.push_back(qn.unit_point(u).to_strings());
    json same = json::array();
    for (const auto& s : r.sameblock_lines)
        same.push_back({{"block", s.block}, {"planes", {qn.planes()[s.planes[0]].plane.to_strings(), qn.planes()[s.planes[1]].plane.to_strings()}}});
    json cross = json::array();
    for (const auto& c : r.crossblock_lines) {
        json planes = json::array();
        for (auto i : c.planes) planes.push_back(qn.planes()[i].plane.to_strings());
        cross.push_back({{"coordinate_point", c.omitted}, {"planes", planes}});
    }
    json j = {{"plane", r.h.to_strings()},
              {"in_qn", r.in_qn()},
              {"base_lines", r.base_lines},
              {"sameblock_lines", same},
              {"crossblock_lines", cross},
              {"coordinate_points", r.coordinate_points},
              {"unit_points", units}};
    return j;
}

json to_json(const Census& c) {
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(p.to_strings());
    json locus = json::array();
    for (const auto& p : c.locus_points) locus.push_back(p.to_strings());
    return {{"points", pts},
            {"count", c.points.size()},
            {"locus_points", locus},
            {"precondition_ok", c.precondition_ok},
            {"agrees", c.agrees},
            {"note", c.note}};
}

json to_json(const SearchResult& r) {
    return {{"plane", r.plane.to_strings()}, {"double_points", r.double_point_count}, {"report", to_json(r.report)}};
}

json to_json(const LatinSquare& s) { return {{"order", s.order}, {"entries", s.entries}}; }

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace multinet
