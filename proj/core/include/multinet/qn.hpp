#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multinet/multinet.hpp"
#include "multinet/projgeo.hpp"

namespace multinet {

/// One reflection plane x_i - ζ_n^a x_j = 0 of Q_n.
struct QnPlane {
    int block = 0;
    int half = 0;
    int exponent = 0;
    int i = 0;  // i < j
    int j = 0;
    PlaneP3 plane;
};

/// Exponents (a, b, c) of the unit point [ζ_n^a : ζ_n^b : ζ_n^c : 1].
using UnitPoint = std::array<int, 3>;

/// The 6n planes of Q_n in P^3 grouped into three blocks of two half-blocks.
///
/// Block 0 pairs coordinates (0,1),(2,3); block 1 (0,2),(1,3); block 2 (0,3),(1,2).
/// Half-block h of block b is the pair `pair(b, h)`; its planes all contain the
/// base line where both coordinates of the pair vanish.
class QnArrangement {
public:
    /// Throws `PreconditionFailed` unless n >= 1 and n divides the conductor.
    QnArrangement(int n, Field field);

    int n() const noexcept { return n_; }
    Field field() const noexcept { return field_; }

    static constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kPairs{{
        {{{0, 1}, {2, 3}}},
        {{{0, 2}, {1, 3}}},
        {{{0, 3}, {1, 2}}},
    }};
    static std::array<int, 2> pair(int block, int half) { return kPairs[block][half]; }
    /// (block, half) of the coordinate pair {i, j}.
    static std::array<int, 2> half_of(int i, int j);

    /// Planes ordered by (block, half, exponent): index (2*block + half)*n + exponent.
    const std::vector<QnPlane>& planes() const noexcept { return planes_; }
    std::size_t plane_index(int block, int half, int exponent) const;
    const QnPlane& plane(int block, int half, int exponent) const { return planes_[plane_index(block, half, exponent)]; }

    /// Base lines indexed by 2*block + half.
    const std::array<LineP3, 6>& base_lines() const noexcept { return base_lines_; }
    const std::array<PointP3, 4>& coordinate_points() const noexcept { return coordinate_points_; }

    /// ζ_n^e.
    const FieldElem& root(int e) const { return roots_[static_cast<std::size_t>(((e % n_) + n_) % n_)]; }

    /// Index of h among the planes, if h is one of them.
    std::optional<std::size_t> find(const PlaneP3& h) const;
    bool contains(const PlaneP3& h) const { return find(h).has_value(); }

    PointP3 unit_point(const UnitPoint& u) const;
    /// The six planes through a unit point, one per half-block, in half-block order.
    std::array<std::size_t, 6> planes_through(const UnitPoint& u) const;
    /// Unit points on h, sorted; O(n^2) field operations.
    std::vector<UnitPoint> unit_points_on(const PlaneP3& h) const;

private:
    int n_;
    Field field_;
    std::vector<FieldElem> roots_;
    std::vector<QnPlane> planes_;
    std::array<LineP3, 6> base_lines_;
    std::array<PointP3, 4> coordinate_points_;
};

/// Line {x_i = ζ^a x_j, x_k = ζ^c x_l} where both planes come from the same block.
struct SameBlockLine {
    int block = 0;
    int exponent0 = 0;  // of the half-0 plane
    int exponent1 = 0;  // of the half-1 plane
    std::array<std::size_t, 2> planes{};
    LineP3 line;
};

/// Line through the coordinate point e_omitted on which the other three
/// coordinates have root-of-unity ratios; it lies on one plane of every block.
struct CrossBlockLine {
    int omitted = 0;
    std::array<int, 2> exponents{};  // ratios of the 2nd and 3rd remaining coordinates to the 1st
    std::array<std::size_t, 3> planes{};  // one per block, block order
    LineP3 line;
};

struct PositionReport {
    PlaneP3 h;
    std::optional<std::size_t> qn_plane;
    std::vector<int> base_lines;  // 2*block + half
    std::vector<SameBlockLine> sameblock_lines;
    std::vector<CrossBlockLine> crossblock_lines;
    std::vector<int> coordinate_points;
    std::vector<UnitPoint> unit_points;

    bool in_qn() const noexcept { return qn_plane.has_value(); }
};

/// Exhaustive, exact position of h relative to the lattice of Q_n.
PositionReport position_report(const PlaneP3& h, const QnArrangement& qn);

struct PredictedClass {
    int n = 0;
    int degree = 0;
    int mult_n_lines = 0;
    int mult_2_lines = 0;
    int fixed_components = 0;
    int mult_n_points = 0;  // coordinate points of h, before cancellation
    int unit_points = 0;
    int double_points = 0;  // unit points off every fixed component
    std::map<int, int> line_histogram;
    std::map<int, int> point_histogram;
    Verdict verdict = Verdict::Net;
    bool ambiguous = false;  // n <= 3: multiplicity classes collide
    std::vector<std::string> notes;
};

/// Predicts the induced multinet's invariants from the lattice position alone.
/// Throws `PlaneInArrangement` if h is a plane of Q_n.
PredictedClass predict_class(const PositionReport& report, const QnArrangement& qn);

}  // namespace multinet
