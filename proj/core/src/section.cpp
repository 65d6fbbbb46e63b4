#include "multinet/section.hpp"

#include <algorithm>
#include <map>

#include "multinet/errors.hpp"

namespace multinet {

SectionPlane::SectionPlane(PlaneP3 h, std::optional<int> pivot) : h_(std::move(h)) {
    if (pivot) {
        if (*pivot < 0 || *pivot > 3 || h_[static_cast<std::size_t>(*pivot)].is_zero())
            throw PreconditionFailed("pivot coefficient must be nonzero");
        pivot_ = *pivot;
    } else {
        while (h_[static_cast<std::size_t>(pivot_)].is_zero()) ++pivot_;
    }
    for (int q = 0, m = 0; q < 4; ++q)
        if (q != pivot_) ambient_[static_cast<std::size_t>(m++)] = q;
    inv_pivot_ = h_[static_cast<std::size_t>(pivot_)].inverse();
}

std::optional<LineP2> SectionPlane::restrict_form(const PlaneP3& g) const {
    // x_p = -(1/h_p) * sum h_q x_q, so g restricts to sum (g_q - g_p h_q / h_p) x_q.
    const FieldElem& gp = g[static_cast<std::size_t>(pivot_)];
    const FieldElem scale = gp.is_zero() ? gp : gp * inv_pivot_;
    LineP2::Coords c;
    bool zero = true;
    for (std::size_t m = 0; m < 3; ++m) {
        const auto q = static_cast<std::size_t>(ambient_[m]);
        c[m] = g[q];
        if (!scale.is_zero() && !h_[q].is_zero()) c[m] -= scale * h_[q];
        zero = zero && c[m].is_zero();
    }
    if (zero) return std::nullopt;
    return LineP2(std::move(c));
}

PointP2 SectionPlane::project(const PointP3& p) const {
    if (!incident(h_, p)) throw PreconditionFailed("point " + p.to_string() + " is not on " + h_.to_string());
    return PointP2({p[static_cast<std::size_t>(ambient_[0])], p[static_cast<std::size_t>(ambient_[1])],
                    p[static_cast<std::size_t>(ambient_[2])]});
}

PointP3 SectionPlane::lift(const PointP2& p) const {
    PointP3::Coords c;
    FieldElem acc = FieldElem::zero(h_.field());
    for (std::size_t m = 0; m < 3; ++m) {
        const auto q = static_cast<std::size_t>(ambient_[m]);
        c[q] = p[m];
        if (!h_[q].is_zero() && !p[m].is_zero()) acc += h_[q] * p[m];
    }
    c[static_cast<std::size_t>(pivot_)] = -(acc * inv_pivot_);
    return PointP3(std::move(c));
}

Multinet InducedMultinet::as_multinet() const { return Multinet{field, d, blocks, "induced"}; }

Multinet InducedMultinet::raw_multinet() const { return Multinet{field, 2 * n, raw_blocks, "induced-raw"}; }

InducedMultinet restrict_to_plane(const QnArrangement& qn, const PlaneP3& h, std::optional<int> pivot) {
    if (qn.contains(h)) throw PlaneInArrangement("plane " + h.to_string() + " belongs to Q_n");
    SectionPlane section(h, pivot);
    const int n = qn.n();

    std::vector<LineP2> images;
    images.reserve(qn.planes().size());
    std::array<std::map<LineP2, int>, 3> counts;
    for (const auto& pl : qn.planes()) {
        auto line = section.restrict_form(pl.plane);
        if (!line) throw InternalInconsistency("plane of Q_n restricts to zero on a plane outside Q_n");
        ++counts[static_cast<std::size_t>(pl.block)][*line];
        images.push_back(std::move(*line));
    }

    std::map<LineP2, int> blocks_containing;
    for (const auto& c : counts)
        for (const auto& [line, mult] : c) ++blocks_containing[line];
    std::vector<LineP2> fixed;
    for (const auto& [line, k] : blocks_containing) {
        if (k == 2) throw InternalInconsistency("line " + line.to_string() + " lies in exactly two blocks");
        if (k == 3) fixed.push_back(line);
    }

    InducedMultinet out{n, 2 * n - static_cast<int>(fixed.size()), qn.field(), std::move(section), {}, {}, fixed, std::move(images)};
    for (auto& c : counts) {
        Block raw;
        for (const auto& [line, mult] : c) raw.push_back(BlockLine{line, mult});
        for (const auto& f : fixed) --c[f];
        Block reduced;
        for (const auto& [line, mult] : c)
            if (mult > 0) reduced.push_back(BlockLine{line, mult});
        out.raw_blocks.push_back(std::move(raw));
        out.blocks.push_back(std::move(reduced));
    }
    return out;
}

int fixed_component_count(const InducedMultinet& m) {
    const auto f = static_cast<int>(m.fixed_components.size());
    if (f > 2) throw InternalInconsistency(std::to_string(f) + " fixed components on " + m.section.plane().to_string());
    return f;
}

}  // namespace multinet
