#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "multinet/analysis.hpp"
#include "multinet/multinet.hpp"
#include "multinet/search.hpp"
#include "multinet/section.hpp"

namespace multinet {

inline constexpr const char* kSchemaVersion = "1";

/// JSON interchange form of a multinet, optionally with its section data.
struct MultinetDocument {
    std::string kind = "multinet";  // "multinet" or "induced"
    Multinet multinet;
    std::optional<int> n;
    std::optional<int> pivot;
    std::optional<PlaneP3> plane;
    std::vector<Block> raw_blocks;
    std::vector<LineP2> fixed_components;
    std::vector<BasePoint> base_points;
    nlohmann::json reports = nlohmann::json::object();
};

/// Base points are filled in when the multinet satisfies condition (i).
MultinetDocument make_document(const Multinet& m);
MultinetDocument make_document(const InducedMultinet& im);

nlohmann::json to_json(const MultinetDocument& doc);
/// Throws `SchemaError` carrying the JSON pointer of the first bad value.
MultinetDocument parse_document(const nlohmann::json& j);
/// Parses text first; malformed JSON is reported at path "".
MultinetDocument parse_document(const std::string& text);

nlohmann::json to_json(const VerificationReport& r, int k, int d);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const PredictedClass& p);
nlohmann::json to_json(const PositionReport& r, const QnArrangement& qn);
nlohmann::json to_json(const Census& c);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const LatinSquare& s);

nlohmann::json to_json(const PointP2& p);
nlohmann::json to_json(const PointP3& p);
nlohmann::json to_json(const LineP2& l);
nlohmann::json to_json(const PlaneP3& h);

/// Sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace multinet
