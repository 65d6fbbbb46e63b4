#include "multinet/projgeo.hpp"

namespace multinet {

std::array<FieldElem, 3> cross(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) {
    auto term = [](const FieldElem& x, const FieldElem& y, const FieldElem& u, const FieldElem& v) {
        // x*y - u*v with zero shortcuts; these vectors are often sparse.
        const bool left = !x.is_zero() && !y.is_zero();
        const bool right = !u.is_zero() && !v.is_zero();
        if (left && right) return x * y - u * v;
        if (left) return x * y;
        if (right) return -(u * v);
        return FieldElem::zero(x.field());
    };
    return {term(a[1], b[2], a[2], b[1]), term(a[2], b[0], a[0], b[2]), term(a[0], b[1], a[1], b[0])};
}

PointP2 meet(const LineP2& a, const LineP2& b) {
    auto c = cross(a.coords(), b.coords());
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
        throw DegenerateInput("meet of identical lines " + a.to_string());
    return PointP2(std::move(c));
}

LineP2 join(const PointP2& a, const PointP2& b) {
    auto c = cross(a.coords(), b.coords());
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
        throw DegenerateInput("join of identical points " + a.to_string());
    return LineP2(std::move(c));
}

std::size_t row_reduce(Matrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        if (!m[rank][col].is_one()) {
            const FieldElem inv = m[rank][col].inverse();
            for (std::size_t j = col; j < cols; ++j)
                if (!m[rank][j].is_zero()) m[rank][j] *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const FieldElem factor = m[r][col];
            for (std::size_t j = col; j < cols; ++j)
                if (!m[rank][j].is_zero()) m[r][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(Matrix m) { return row_reduce(m); }

Matrix nullspace(Matrix m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    const Field field = m[0][0].field();
    const std::size_t r = row_reduce(m);
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t c = 0;
        while (m[i][c].is_zero()) ++c;
        pivot_cols.push_back(c);
        is_pivot[c] = true;
    }
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(cols, FieldElem::zero(field));
        v[free] = FieldElem::one(field);
        for (std::size_t i = 0; i < r; ++i) v[pivot_cols[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

PlaneP3 plane_through(const PointP3& a, const PointP3& b, const PointP3& c) {
    Matrix m;
    for (const auto* p : {&a, &b, &c}) m.emplace_back(p->coords().begin(), p->coords().end());
    Matrix ns = nullspace(std::move(m));
    if (ns.size() != 1) throw DegenerateInput("points do not span a plane: " + a.to_string() + ", " + b.to_string() + ", " + c.to_string());
    PlaneP3::Coords coords;
    std::move(ns[0].begin(), ns[0].end(), coords.begin());
    return PlaneP3(std::move(coords));
}

LineP3 LineP3::from_span(std::vector<std::vector<FieldElem>> rows) {
    if (row_reduce(rows) != 2) throw DegenerateInput("vectors do not span a line");
    std::array<Row, 2> out;
    for (std::size_t i = 0; i < 2; ++i) std::move(rows[i].begin(), rows[i].end(), out[i].begin());
    return LineP3(std::move(out));
}

LineP3 LineP3::through(const PointP3& a, const PointP3& b) {
    return from_span({{a.coords().begin(), a.coords().end()}, {b.coords().begin(), b.coords().end()}});
}

LineP3 LineP3::meet(const PlaneP3& a, const PlaneP3& b) {
    Matrix m{{a.coords().begin(), a.coords().end()}, {b.coords().begin(), b.coords().end()}};
    Matrix ns = nullspace(std::move(m));
    if (ns.size() != 2) throw DegenerateInput("meet of identical planes " + a.to_string());
    return from_span(std::move(ns));
}

bool LineP3::contains(const PointP3& p) const {
    Matrix m{{rows_[0].begin(), rows_[0].end()}, {rows_[1].begin(), rows_[1].end()}, {p.coords().begin(), p.coords().end()}};
    return rank(std::move(m)) == 2;
}

std::string LineP3::to_string() const { return "<" + basis(0).to_string() + ", " + basis(1).to_string() + ">"; }

std::size_t LineP3::hash() const noexcept {
    std::size_t h = 17;
    for (const auto& row : rows_)
        for (const auto& c : row) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::strong_ordering operator<=>(const LineP3& a, const LineP3& b) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (auto c = a.rows_[i][j] <=> b.rows_[i][j]; c != 0) return c;
    return std::strong_ordering::equal;
}

bool line_in_plane(const LineP3& line, const PlaneP3& plane) {
    return incident(plane, line.basis(0)) && incident(plane, line.basis(1));
}

std::optional<PointP3> intersect(const LineP3& line, const PlaneP3& plane) {
    const PointP3 p = line.basis(0);
    const PointP3 q = line.basis(1);
    const FieldElem hp = dot(plane, p);
    const FieldElem hq = dot(plane, q);
    if (hp.is_zero() && hq.is_zero()) return std::nullopt;
    // (h.q) p - (h.p) q lies on the plane.
    PointP3::Coords c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = hq * p[i] - hp * q[i];
    return PointP3(std::move(c));
}

}  // namespace multinet
