#include "multinet/qn.hpp"

#include <algorithm>
#include <unordered_map>

#include "multinet/errors.hpp"

namespace multinet {

namespace {

PointP3 coordinate_point(Field f, int l) {
    std::array<long long, 4> v{0, 0, 0, 0};
    v[static_cast<std::size_t>(l)] = 1;
    return PointP3::from_integers(f, v);
}

std::array<PointP3, 4> make_coordinate_points(Field f) {
    return {coordinate_point(f, 0), coordinate_point(f, 1), coordinate_point(f, 2), coordinate_point(f, 3)};
}

std::array<LineP3, 6> make_base_lines(Field f) {
    auto base = [&](int block, int half) {
        // x_i = x_j = 0 is spanned by the other two coordinate points.
        const auto other = QnArrangement::pair(block, 1 - half);
        return LineP3::through(coordinate_point(f, other[0]), coordinate_point(f, other[1]));
    };
    return {base(0, 0), base(0, 1), base(1, 0), base(1, 1), base(2, 0), base(2, 1)};
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

QnArrangement::QnArrangement(int n, Field field)
    : n_(n),
      field_(field),
      base_lines_(field.valid() ? make_base_lines(field) : throw PreconditionFailed("Q_n needs a field")),
      coordinate_points_(make_coordinate_points(field)) {
    if (n < 1 || field.conductor() % n != 0)
        throw PreconditionFailed("n = " + std::to_string(n) + " does not divide N = " + std::to_string(field.conductor()));
    const int step = field.conductor() / n;
    for (int e = 0; e < n; ++e) roots_.push_back(FieldElem::zeta_power(field, static_cast<long long>(e) * step));
    const FieldElem zero = FieldElem::zero(field);
    for (int b = 0; b < 3; ++b)
        for (int h = 0; h < 2; ++h)
            for (int a = 0; a < n; ++a) {
                const auto [i, j] = pair(b, h);
                PlaneP3::Coords c{zero, zero, zero, zero};
                c[static_cast<std::size_t>(i)] = FieldElem::one(field);
                c[static_cast<std::size_t>(j)] = -roots_[static_cast<std::size_t>(a)];
                planes_.push_back(QnPlane{b, h, a, i, j, PlaneP3(std::move(c))});
            }
}

std::array<int, 2> QnArrangement::half_of(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int b = 0; b < 3; ++b)
        for (int h = 0; h < 2; ++h)
            if (kPairs[b][h][0] == i && kPairs[b][h][1] == j) return {b, h};
    throw PreconditionFailed("not a coordinate pair");
}

std::size_t QnArrangement::plane_index(int block, int half, int exponent) const {
    return static_cast<std::size_t>((2 * block + half) * n_ + mod(exponent, n_));
}

std::optional<std::size_t> QnArrangement::find(const PlaneP3& h) const {
    if (!(h.field() == field_)) throw FieldMismatch("plane over another field");
    int nonzero[4];
    int count = 0;
    for (int q = 0; q < 4; ++q)
        if (!h[static_cast<std::size_t>(q)].is_zero()) {
            if (count == 2) return std::nullopt;
            nonzero[count++] = q;
        }
    if (count != 2) return std::nullopt;
    // Normalized, so h = x_i + c x_j with c = -ζ_n^a for a plane of Q_n.
    const auto e = root_of_unity_exponent(-h[static_cast<std::size_t>(nonzero[1])], n_);
    if (!e) return std::nullopt;
    const auto [b, hb] = half_of(nonzero[0], nonzero[1]);
    return plane_index(b, hb, *e);
}

PointP3 QnArrangement::unit_point(const UnitPoint& u) const {
    return PointP3({root(u[0]), root(u[1]), root(u[2]), FieldElem::one(field_)});
}

std::array<std::size_t, 6> QnArrangement::planes_through(const UnitPoint& u) const {
    const int e[4] = {u[0], u[1], u[2], 0};
    std::array<std::size_t, 6> out{};
    for (int b = 0; b < 3; ++b)
        for (int h = 0; h < 2; ++h) {
            const auto [i, j] = pair(b, h);
            out[static_cast<std::size_t>(2 * b + h)] = plane_index(b, h, e[i] - e[j]);
        }
    return out;
}

std::vector<UnitPoint> QnArrangement::unit_points_on(const PlaneP3& h) const {
    // h0 ζ^a + h1 ζ^b = -(h2 ζ^c + h3): hash the right-hand side over c.
    std::unordered_map<FieldElem, std::vector<int>> rhs;
    for (int c = 0; c < n_; ++c) {
        FieldElem t = h[3];
        if (!h[2].is_zero()) t += h[2] * root(c);
        rhs[-t].push_back(c);
    }
    std::vector<FieldElem> left0;
    std::vector<FieldElem> left1;
    for (int a = 0; a < n_; ++a) {
        left0.push_back(h[0].is_zero() ? h[0] : h[0] * root(a));
        left1.push_back(h[1].is_zero() ? h[1] : h[1] * root(a));
    }
    std::vector<UnitPoint> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            auto it = rhs.find(left0[static_cast<std::size_t>(a)] + left1[static_cast<std::size_t>(b)]);
            if (it == rhs.end()) continue;
            for (int c : it->second) out.push_back({a, b, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

PositionReport position_report(const PlaneP3& h, const QnArrangement& qn) {
    const int n = qn.n();
    PositionReport r{h, qn.find(h), {}, {}, {}, {}, {}};
    auto coeff = [&](int q) -> const FieldElem& { return h[static_cast<std::size_t>(q)]; };
    auto check = [&](const LineP3& line) {
        if (!line_in_plane(line, h)) throw InternalInconsistency("lattice line " + line.to_string() + " not in " + h.to_string());
    };

    for (int q = 0; q < 4; ++q)
        if (coeff(q).is_zero()) r.coordinate_points.push_back(q);

    for (int b = 0; b < 3; ++b)
        for (int half = 0; half < 2; ++half) {
            const auto other = QnArrangement::pair(b, 1 - half);
            if (coeff(other[0]).is_zero() && coeff(other[1]).is_zero()) {
                r.base_lines.push_back(2 * b + half);
                check(qn.base_lines()[static_cast<std::size_t>(2 * b + half)]);
            }
        }

    // Same-block lines: h_i ζ^a + h_j = 0 and h_k ζ^c + h_l = 0.
    auto solve = [&](int i, int j) -> std::optional<int> {
        if (coeff(i).is_zero() || coeff(j).is_zero()) return std::nullopt;
        return root_of_unity_exponent(-coeff(j) / coeff(i), n);
    };
    const FieldElem zero = FieldElem::zero(qn.field());
    const FieldElem one = FieldElem::one(qn.field());
    for (int b = 0; b < 3; ++b) {
        const auto [i, j] = QnArrangement::pair(b, 0);
        const auto [k, l] = QnArrangement::pair(b, 1);
        const auto a = solve(i, j);
        if (!a) continue;
        const auto c = solve(k, l);
        if (!c) continue;
        PointP3::Coords p{zero, zero, zero, zero};
        PointP3::Coords q{zero, zero, zero, zero};
        p[static_cast<std::size_t>(i)] = qn.root(*a);
        p[static_cast<std::size_t>(j)] = one;
        q[static_cast<std::size_t>(k)] = qn.root(*c);
        q[static_cast<std::size_t>(l)] = one;
        LineP3 line = LineP3::through(PointP3(std::move(p)), PointP3(std::move(q)));
        check(line);
        r.sameblock_lines.push_back(
            SameBlockLine{b, *a, *c, {qn.plane_index(b, 0, *a), qn.plane_index(b, 1, *c)}, std::move(line)});
    }

    // Cross-block lines through e_l: need h_l = 0 and h_p + h_q ζ^s + h_r ζ^t = 0.
    for (int l = 0; l < 4; ++l) {
        if (!coeff(l).is_zero()) continue;
        int rest[3];
        for (int q = 0, m = 0; q < 4; ++q)
            if (q != l) rest[m++] = q;
        const auto [p, q, rr] = rest;
        if (coeff(p).is_zero() && coeff(q).is_zero() && coeff(rr).is_zero()) continue;
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                FieldElem v = coeff(p);
                if (!coeff(q).is_zero()) v += coeff(q) * qn.root(s);
                if (!coeff(rr).is_zero()) v += coeff(rr) * qn.root(t);
                if (!v.is_zero()) continue;
                PointP3::Coords w{zero, zero, zero, zero};
                w[static_cast<std::size_t>(p)] = one;
                w[static_cast<std::size_t>(q)] = qn.root(s);
                w[static_cast<std::size_t>(rr)] = qn.root(t);
                LineP3 line = LineP3::through(qn.coordinate_points()[static_cast<std::size_t>(l)], PointP3(std::move(w)));
                check(line);
                // x_p - ζ^e x_q vanishes on w for e = -s; likewise for the other two pairs.
                std::array<std::size_t, 3> planes{};
                const std::array<std::array<int, 3>, 3> rel{{{p, q, -s}, {p, rr, -t}, {q, rr, s - t}}};
                for (const auto& [x, y, e] : rel) {
                    const auto [blk, half] = QnArrangement::half_of(x, y);
                    planes[static_cast<std::size_t>(blk)] = qn.plane_index(blk, half, e);
                }
                r.crossblock_lines.push_back(CrossBlockLine{l, {s, t}, planes, std::move(line)});
            }
    }

    r.unit_points = qn.unit_points_on(h);
    return r;
}

PredictedClass predict_class(const PositionReport& report, const QnArrangement& qn) {
    if (report.in_qn()) throw PlaneInArrangement("plane " + report.h.to_string() + " belongs to Q_n");
    const int n = qn.n();
    PredictedClass p;
    p.n = n;
    p.mult_n_lines = static_cast<int>(report.base_lines.size());
    p.mult_2_lines = static_cast<int>(report.sameblock_lines.size());
    p.fixed_components = static_cast<int>(report.crossblock_lines.size());
    p.mult_n_points = static_cast<int>(report.coordinate_points.size());
    p.unit_points = static_cast<int>(report.unit_points.size());
    const int f = p.fixed_components;
    p.degree = 2 * n - f;

    // Lines: each block starts with 2n simple lines; a contained base line fuses
    // a half-block into one line of multiplicity n, a same-block line fuses two.
    for (int b = 0; b < 3; ++b) {
        int simple = 2 * n;
        for (int hb : report.base_lines)
            if (hb / 2 == b) {
                ++p.line_histogram[n];
                simple -= n;
            }
        for (const auto& s : report.sameblock_lines)
            if (s.block == b) {
                ++p.line_histogram[2];
                simple -= 2;
            }
        simple -= f;
        if (simple > 0) p.line_histogram[1] += simple;
    }

    // Points: coordinate points carry n, unit points 2. Every fixed component
    // passes through one coordinate point, lowering it by one, and through n
    // unit points, lowering each to 1. The rest is simple by the square-sum identity.
    std::vector<UnitPoint> on_fixed;
    for (const auto& u : report.unit_points) {
        const PointP3 pt = qn.unit_point(u);
        for (const auto& c : report.crossblock_lines)
            if (c.line.contains(pt)) {
                on_fixed.push_back(u);
                break;
            }
    }
    p.double_points = p.unit_points - static_cast<int>(on_fixed.size());
    long heavy_sq = 0;
    for (int l : report.coordinate_points) {
        int through = 0;
        for (const auto& c : report.crossblock_lines) through += c.omitted == l ? 1 : 0;
        const int m = n - through;
        if (m >= 2) {
            ++p.point_histogram[m];
            heavy_sq += static_cast<long>(m) * m;
        }
    }
    if (p.double_points > 0) {
        p.point_histogram[2] += p.double_points;
        heavy_sq += 4L * p.double_points;
    }
    const long simple_points = static_cast<long>(p.degree) * p.degree - heavy_sq;
    if (simple_points > 0) p.point_histogram[1] += static_cast<int>(simple_points);
    if (simple_points < 0) p.notes.push_back("square-sum identity leaves a negative count of simple points");

    const bool heavy_line = p.mult_n_lines > 0 || p.mult_2_lines > 0;
    const bool all_simple_points = std::all_of(p.point_histogram.begin(), p.point_histogram.end(),
                                               [](const auto& kv) { return kv.first == 1; });
    p.verdict = heavy_line ? Verdict::Heavy : (all_simple_points ? Verdict::Net : Verdict::LightProper);

    if (n <= 3) {
        p.ambiguous = true;
        p.notes.push_back("n <= 3: multiplicities n, n-1, n-2 and 2 may coincide");
    }
    if (f > 2) p.notes.push_back("more than two fixed components predicted");
    if (p.mult_n_lines > 0 && p.mult_2_lines > 0) p.notes.push_back("lines of multiplicity n and 2 together");
    return p;
}

}  // namespace multinet
