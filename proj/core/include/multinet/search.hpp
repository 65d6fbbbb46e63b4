#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "multinet/analysis.hpp"
#include "multinet/qn.hpp"

namespace multinet {

enum class Strategy { UnitTriples, RandomRational, FileList };

/// "unit-triples", "random-rational", "file-list"; throws `PreconditionFailed` otherwise.
Strategy parse_strategy(const std::string& name);
std::string to_string(Strategy s);

struct SearchConfig {
    Strategy strategy = Strategy::UnitTriples;
    bool require_light = false;
    bool forbid_fixed = false;
    bool forbid_mult_n_points = false;
    /// Unit triples: number of point pairs scanned. Other strategies: planes tried.
    std::size_t budget = 1'000'000;
    std::size_t top = 10;
    int min_count = 1;  // minimum double-point count worth reporting
    std::uint64_t seed = 1;
    int threads = 1;
    std::vector<PlaneP3> planes;  // file-list input
};

struct SearchResult {
    PlaneP3 plane;
    int double_point_count = 0;
    ClassificationReport report;
};

struct SearchOutcome {
    std::vector<SearchResult> results;  // count descending, then plane order
    std::size_t candidates = 0;         // pairs or planes scanned
    std::size_t sectioned = 0;          // planes examined exactly
    bool exhausted = false;             // the whole candidate space was scanned
    std::vector<std::string> notes;
};

/// Searches planes for many double points. Unit triples fix the first point at
/// [1:1:1:1] (torus symmetry) and scan pairs of further unit points; a modular
/// incidence count bounds each candidate before any exact work. Output depends
/// only on the configuration, never on scheduling.
SearchOutcome run_search(const SearchConfig& config, const QnArrangement& qn);

/// The plane x0 - (z+1) x1 - z^3 x2 + (z^3+z) x3 over Q(ζ_8).
PlaneP3 example46_plane(Field field);
/// Its eight double points as exponent triples.
std::vector<UnitPoint> example46_points();

/// Rebuilds the n = 8 example with the full pipeline and checks every claim about
/// it; throws `ConditionViolation` describing the first failed check.
SearchResult reproduce_example_46(const QnArrangement& qn);

}  // namespace multinet
