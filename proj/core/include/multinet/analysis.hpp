#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multinet/multinet.hpp"
#include "multinet/qn.hpp"
#include "multinet/section.hpp"

namespace multinet {

struct ClassificationReport {
    int n = 0;
    int d = 0;
    int k = 0;
    std::map<int, int> line_histogram;
    std::map<int, int> point_histogram;
    int fixed_components = 0;
    std::optional<Verdict> verdict;  // empty when the axioms fail
    bool profile_checked = false;    // false for n <= 3 or non-induced input
    bool profile_ok = true;
    std::vector<std::string> violations;
    VerificationReport verification;
};

/// Histograms and verdict of an arbitrary multinet; no profile validation.
ClassificationReport classify(const Multinet& m);

/// Classification of a section plus, for n > 3, the profile of admissible
/// multiplicity patterns for sections of Q_n.
ClassificationReport classify_induced(const InducedMultinet& im);

struct Agreement {
    bool agree = false;
    std::vector<std::string> mismatches;
    PredictedClass predicted;
    ClassificationReport actual;
};

/// Compares the lattice-position prediction with the computed section.
/// Throws `PlaneInArrangement` if h is a plane of Q_n.
Agreement predicted_vs_actual(const PlaneP3& h, const QnArrangement& qn);

struct Census {
    std::vector<PointP3> points;        // unit points on h, sorted
    std::vector<PointP3> locus_points;  // multiplicity-2 base points, lifted and sorted
    bool precondition_ok = false;
    bool agrees = false;
    std::string note;
};

/// Unit points of h, compared with the double points of the induced base locus.
/// Precondition: light, no fixed components, no coordinate points on h. When it
/// fails the census is still reported with an explanatory note.
Census double_point_census(const PlaneP3& h, const QnArrangement& qn);

struct PencilCheck {
    bool precondition_ok = false;
    bool ok = false;
    std::vector<PointP2> base_points;  // one per half-block, 2*block + half
    std::string note;
};

/// Each half-block maps to concurrent lines whose common point is the image of
/// that half-block's base line meeting H.
PencilCheck half_block_pencil_check(const InducedMultinet& im, const QnArrangement& qn);

struct UniquenessResult {
    bool ok = false;
    int pairs = 0;
    int collisions = 0;
};

/// Injectivity of (a, b) -> (1 - ζ^a)/(1 - ζ^b) over a != b in [1, n-1], with ζ
/// a primitive n-th root of unity. Throws `PreconditionFailed` for n < 2.
UniquenessResult uniqueness_check(int n);

struct NondegeneracyResult {
    bool precondition_ok = false;
    bool ok = false;
    int points_checked = 0;
    std::string note;
};

/// Writes h as A x0 + B x1 + C x2 - x3 and checks, for every double point
/// [ζ^a:ζ^b:ζ^c:1], that A ζ^a + B ζ^b + C ζ^c = 1 with no vanishing proper subsum.
NondegeneracyResult nondegeneracy_check(const PlaneP3& h, const QnArrangement& qn);

}  // namespace multinet
