#include "multinet/analysis.hpp"

#include <algorithm>
#include <unordered_set>

#include "multinet/errors.hpp"

namespace multinet {

namespace {

std::string hist_string(const std::map<int, int>& h) {
    std::string s = "{";
    for (const auto& [m, c] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(m) + ":" + std::to_string(c);
    return s + "}";
}

int count(const std::map<int, int>& h, int key) {
    auto it = h.find(key);
    return it == h.end() ? 0 : it->second;
}

void validate_profile(ClassificationReport& r) {
    const int n = r.n;
    const int f = r.fixed_components;
    auto fail = [&](std::string s) {
        r.profile_ok = false;
        r.violations.push_back(std::move(s));
    };

    for (const auto& [m, c] : r.line_histogram)
        if (m != 1 && m != 2 && m != n) fail("line multiplicity " + std::to_string(m));
    const int lines_n = count(r.line_histogram, n);
    const int lines_2 = count(r.line_histogram, 2);
    if (lines_n != 0 && lines_n != 1 && lines_n != 3) fail(std::to_string(lines_n) + " lines of multiplicity n");
    if (lines_2 > (n % 2 == 0 ? 3 : 2)) fail(std::to_string(lines_2) + " lines of multiplicity 2");
    if (lines_n > 0 && lines_2 > 0) fail("lines of multiplicity n and 2 together");

    for (const auto& [m, c] : r.point_histogram)
        if (m != 1 && m != 2 && m != n - 2 && m != n - 1 && m != n) fail("point multiplicity " + std::to_string(m));

    if (f > 2) fail(std::to_string(f) + " fixed components");
    if (f > 0 && r.verdict == Verdict::Heavy) fail("heavy multinet with a fixed component");

    // With f fixed components the surviving coordinate point has multiplicity
    // n - f. For n = 4 that key is 2, so f decides how to read the 2-count.
    const int points_n = count(r.point_histogram, n);
    const int points_n1 = count(r.point_histogram, n - 1);
    int points_n2 = count(r.point_histogram, n - 2);
    int doubles = count(r.point_histogram, 2);
    if (n - 2 == 2) {
        points_n2 = f == 2 ? std::min(1, doubles) : 0;
        doubles -= points_n2;
    }

    if (r.verdict == Verdict::LightProper) {
        const int kinds = (points_n > 0) + (points_n1 > 0) + (points_n2 > 0);
        if (kinds > 1) fail("light multinet mixes points of multiplicity n, n-1, n-2");
        if (points_n > 2) fail(std::to_string(points_n) + " points of multiplicity n in a light multinet");
        if (points_n1 > 1) fail(std::to_string(points_n1) + " points of multiplicity n-1");
        if (points_n2 > 1) fail(std::to_string(points_n2) + " points of multiplicity n-2");
        if (f == 0 && doubles > 0 && points_n > 0)
            fail("double points and points of multiplicity n without a fixed component");
    }
    if (f == 1 && points_n1 != 1) fail("expected exactly one point of multiplicity n-1");
    if (f == 2 && points_n2 != 1) fail("expected exactly one point of multiplicity n-2");
    if (f > 0 && doubles > 0) fail("double points survive cancellation");
}

}  // namespace

ClassificationReport classify(const Multinet& m) {
    ClassificationReport r;
    r.d = m.d;
    r.k = m.k();
    for (const auto& block : m.blocks)
        for (const auto& bl : block) ++r.line_histogram[bl.mult];
    r.verification = verify(m);
    r.verdict = r.verification.classification;
    if (r.verification.condition_i_ok)
        for (const auto& p : base_locus(m).points) ++r.point_histogram[p.mult];
    return r;
}

ClassificationReport classify_induced(const InducedMultinet& im) {
    ClassificationReport r = classify(im.as_multinet());
    r.n = im.n;
    r.fixed_components = static_cast<int>(im.fixed_components.size());
    if (!r.verdict) {
        r.profile_ok = false;
        r.violations.push_back("induced arrangement fails the multinet axioms");
    }
    if (im.n > 3) {
        r.profile_checked = true;
        validate_profile(r);
    }
    return r;
}

Agreement predicted_vs_actual(const PlaneP3& h, const QnArrangement& qn) {
    Agreement a;
    a.predicted = predict_class(position_report(h, qn), qn);
    a.actual = classify_induced(restrict_to_plane(qn, h));
    auto compare = [&](const std::string& what, const std::string& want, const std::string& got) {
        if (want != got) a.mismatches.push_back(what + ": predicted " + want + ", computed " + got);
    };
    const auto& p = a.predicted;
    const auto& c = a.actual;
    compare("degree", std::to_string(p.degree), std::to_string(c.d));
    compare("fixed components", std::to_string(p.fixed_components), std::to_string(c.fixed_components));
    compare("line histogram", hist_string(p.line_histogram), hist_string(c.line_histogram));
    compare("point histogram", hist_string(p.point_histogram), hist_string(c.point_histogram));
    compare("verdict", to_string(p.verdict), c.verdict ? to_string(*c.verdict) : "none");
    a.agree = a.mismatches.empty();
    return a;
}

Census double_point_census(const PlaneP3& h, const QnArrangement& qn) {
    Census out;
    const auto report = position_report(h, qn);
    for (const auto& u : report.unit_points) out.points.push_back(qn.unit_point(u));
    std::sort(out.points.begin(), out.points.end());
    if (report.in_qn()) {
        out.note = "plane belongs to Q_n";
        return out;
    }
    const auto im = restrict_to_plane(qn, h);
    const auto cls = classify_induced(im);
    std::vector<std::string> reasons;
    if (cls.verdict != Verdict::LightProper && cls.verdict != Verdict::Net) reasons.push_back("not light");
    if (!im.fixed_components.empty()) reasons.push_back("has fixed components");
    if (!report.coordinate_points.empty()) reasons.push_back("contains coordinate points");
    out.precondition_ok = reasons.empty();
    for (std::size_t i = 0; i < reasons.size(); ++i) out.note += (i ? "; " : "") + reasons[i];

    if (cls.verification.condition_i_ok) {
        for (const auto& p : base_locus(im.as_multinet()).points)
            if (p.mult == 2) out.locus_points.push_back(im.section.lift(p.point));
        std::sort(out.locus_points.begin(), out.locus_points.end());
    }
    out.agrees = out.precondition_ok && out.points == out.locus_points;
    return out;
}

PencilCheck half_block_pencil_check(const InducedMultinet& im, const QnArrangement& qn) {
    PencilCheck out;
    bool simple_lines = true;
    for (const auto& block : im.raw_blocks)
        for (const auto& bl : block) simple_lines = simple_lines && bl.mult == 1;
    if (!simple_lines || !im.fixed_components.empty()) {
        out.note = simple_lines ? "has fixed components" : "heavy: a line has multiplicity above 1";
        return out;
    }
    out.precondition_ok = true;
    out.ok = true;
    const int n = qn.n();
    for (int b = 0; b < 3; ++b)
        for (int h = 0; h < 2; ++h) {
            const auto meet_point = intersect(qn.base_lines()[static_cast<std::size_t>(2 * b + h)], im.section.plane());
            if (!meet_point) throw InternalInconsistency("base line inside a plane with only simple lines");
            PointP2 base = im.section.project(*meet_point);
            for (int a = 0; a < n; ++a)
                if (!incident(im.images[qn.plane_index(b, h, a)], base)) {
                    out.ok = false;
                    out.note = "half-block " + std::to_string(2 * b + h) + " is not concurrent at " + base.to_string();
                }
            out.base_points.push_back(std::move(base));
        }
    return out;
}

UniquenessResult uniqueness_check(int n) {
    if (n < 2) throw PreconditionFailed("uniqueness check needs n >= 2");
    const Field f = make_field(n);
    const FieldElem one = FieldElem::one(f);
    std::vector<FieldElem> denom_inv;
    for (int b = 1; b < n; ++b) denom_inv.push_back((one - FieldElem::zeta_power(f, b)).inverse());
    UniquenessResult r;
    std::unordered_set<FieldElem> seen;
    for (int a = 1; a < n; ++a) {
        const FieldElem num = one - FieldElem::zeta_power(f, a);
        for (int b = 1; b < n; ++b) {
            if (a == b) continue;
            ++r.pairs;
            if (!seen.insert(num * denom_inv[static_cast<std::size_t>(b - 1)]).second) ++r.collisions;
        }
    }
    r.ok = r.collisions == 0;
    return r;
}

NondegeneracyResult nondegeneracy_check(const PlaneP3& h, const QnArrangement& qn) {
    NondegeneracyResult out;
    const auto report = position_report(h, qn);
    if (report.in_qn()) {
        out.note = "plane belongs to Q_n";
        return out;
    }
    if (!report.coordinate_points.empty()) {
        out.note = "a coefficient vanishes, so a point of multiplicity n lies on the plane";
        return out;
    }
    const auto cls = classify_induced(restrict_to_plane(qn, h));
    if (cls.verdict != Verdict::LightProper && cls.verdict != Verdict::Net) {
        out.note = "induced multinet is not light";
        return out;
    }
    out.precondition_ok = true;
    out.ok = true;
    const FieldElem scale = -h[3].inverse();
    const std::array<FieldElem, 3> coef{h[0] * scale, h[1] * scale, h[2] * scale};
    const FieldElem one = FieldElem::one(qn.field());
    for (const auto& u : report.unit_points) {
        ++out.points_checked;
        const std::array<FieldElem, 3> t{coef[0] * qn.root(u[0]), coef[1] * qn.root(u[1]), coef[2] * qn.root(u[2])};
        std::string bad;
        if (t[0] + t[1] + t[2] != one) bad = "relation fails";
        for (std::size_t i = 0; i < 3 && bad.empty(); ++i) {
            if (t[i].is_zero()) bad = "a single term vanishes";
            for (std::size_t j = i + 1; j < 3 && bad.empty(); ++j)
                if ((t[i] + t[j]).is_zero()) bad = "a two-term subsum vanishes";
        }
        if (!bad.empty()) {
            out.ok = false;
            out.note = bad + " at " + qn.unit_point(u).to_string();
        }
    }
    return out;
}

}  // namespace multinet
