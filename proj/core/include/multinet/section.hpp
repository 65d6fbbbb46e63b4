#pragma once

#include <array>
#include <optional>
#include <vector>

#include "multinet/multinet.hpp"
#include "multinet/qn.hpp"

namespace multinet {

/// A plane H of P^3 identified with P^2 by eliminating one coordinate.
///
/// x_pivot is solved from the equation of H; the remaining three coordinates,
/// in ascending order, become the coordinates of P^2.
class SectionPlane {
public:
    /// Pivot defaults to the first nonzero coefficient. Throws
    /// `PreconditionFailed` if the requested pivot coefficient is zero.
    explicit SectionPlane(PlaneP3 h, std::optional<int> pivot = std::nullopt);

    const PlaneP3& plane() const noexcept { return h_; }
    int pivot() const noexcept { return pivot_; }
    const std::array<int, 3>& ambient() const noexcept { return ambient_; }

    /// Coefficients of g restricted to H; nullopt when g defines H itself.
    std::optional<LineP2> restrict_form(const PlaneP3& g) const;
    /// Drops the pivot coordinate of a point of H.
    PointP2 project(const PointP3& p) const;
    /// Point of H over a point of P^2.
    PointP3 lift(const PointP2& p) const;

private:
    PlaneP3 h_;
    int pivot_ = 0;
    std::array<int, 3> ambient_{};
    FieldElem inv_pivot_;
};

/// The multinet induced on H by Q_n, before and after cancelling fixed components.
struct InducedMultinet {
    int n = 0;
    int d = 0;
    Field field;
    SectionPlane section;
    std::vector<Block> raw_blocks;        // sorted by line
    std::vector<Block> blocks;            // after cancellation, sorted by line
    std::vector<LineP2> fixed_components;  // sorted
    std::vector<LineP2> images;           // image of every plane of Q_n, plane order

    Multinet as_multinet() const;
    Multinet raw_multinet() const;
};

/// Restricts Q_n to h. Throws `PlaneInArrangement` if h is a plane of Q_n and
/// `InternalInconsistency` if some line lies in exactly two blocks.
InducedMultinet restrict_to_plane(const QnArrangement& qn, const PlaneP3& h, std::optional<int> pivot = std::nullopt);

/// Number of fixed components; throws `InternalInconsistency` above two.
int fixed_component_count(const InducedMultinet& m);

}  // namespace multinet
