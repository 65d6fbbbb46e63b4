// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "multinet/analysis.hpp"
#include "multinet/errors.hpp"
#include "multinet/search.hpp"
#include "multinet/section.hpp"
#include "support/oracle.hpp"

using namespace multinet;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Every verification report produced by the suite, for the per-instance bounds.
struct InstanceLedger {
    int instances = 0;
    int violations = 0;

    void record(const VerificationReport& r) {
        ++instances;
        if (!r.k_bound_ok || !r.four_blocks_net_ok) ++violations;
    }
} g_ledger;

class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass_ = false;
            if (failures_.size() < 5) failures_.push_back(what);
        }
    }
    Outcome outcome(const std::string& summary) const {
        if (pass_) return {true, summary};
        std::string d = summary;
        for (const auto& f : failures_) d += "; " + f;
        return {false, d};
    }

private:
    bool pass_ = true;
    std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

PlaneP3 plane(Field f, const char* a, const char* b, const char* c, const char* d) {
    return PlaneP3({parse_elem(a, f), parse_elem(b, f), parse_elem(c, f), parse_elem(d, f)});
}

int hist_at(const std::map<int, int>& h, int key) {
    auto it = h.find(key);
    return it == h.end() ? 0 : it->second;
}

ClassificationReport classified(const InducedMultinet& im) {
    auto r = classify_induced(im);
    g_ledger.record(r.verification);
    return r;
}

PointP3 unit_p3(Field f, int a, int b, int c) {
    return PointP3({FieldElem::zeta_power(f, a), FieldElem::zeta_power(f, b), FieldElem::zeta_power(f, c), FieldElem::one(f)});
}

// The eight double points of the n = 8 plane, as exponents of a primitive 8th root.
const std::array<std::array<int, 3>, 8> kEightPointTable{{
    {0, 0, 0}, {5, 2, 3}, {2, 1, 0}, {5, 3, 5}, {2, 2, 6}, {7, 0, 1}, {4, 3, 6}, {7, 1, 3},
}};

Outcome criterion1() {
    const auto t0 = Clock::now();
    Check c;
    const QnArrangement qn(8, make_field(8));
    const Field f = qn.field();
    const PlaneP3 h = plane(f, "1", "-(z+1)", "-z^3", "z^3+z");
    const auto im = restrict_to_plane(qn, h);
    const auto r = classified(im);
    c.expect(r.verification.ok(), "verification fails");
    c.expect(r.verdict == Verdict::LightProper, "not light");
    c.expect(im.fixed_components.empty(), "fixed components present");
    c.expect(hist_at(r.point_histogram, 2) == 8, "double points: " + std::to_string(hist_at(r.point_histogram, 2)));
    c.expect(r.point_histogram.size() == 2, "unexpected point multiplicities");

    std::set<PointP3> table;
    for (const auto& e : kEightPointTable) table.insert(unit_p3(f, e[0], e[1], e[2]));
    std::set<PointP3> doubles;
    for (const auto& bp : base_locus(im.as_multinet()).points)
        if (bp.mult == 2) doubles.insert(im.section.lift(bp.point));
    c.expect(doubles == table, "double points differ from the table");

    const PointP3 p = unit_p3(f, 2, 1, 0);
    auto lin = [&](std::array<std::pair<int, int>, 2> terms) {
        // x_i - ζ^e x_j
        PlaneP3::Coords co{FieldElem::zero(f), FieldElem::zero(f), FieldElem::zero(f), FieldElem::zero(f)};
        co[static_cast<std::size_t>(terms[0].first)] = FieldElem::one(f);
        co[static_cast<std::size_t>(terms[1].first)] = -FieldElem::zeta_power(f, terms[1].second);
        return PlaneP3(co);
    };
    const std::set<PlaneP3> printed{lin({{{0, 0}, {1, 1}}}), lin({{{0, 0}, {2, 2}}}), lin({{{0, 0}, {3, 2}}}),
                                    lin({{{2, 0}, {3, 0}}}), lin({{{1, 0}, {3, 1}}}), lin({{{1, 0}, {2, 1}}})};
    std::set<PlaneP3> through;
    for (const auto& q : qn.planes())
        if (incident(q.plane, p)) through.insert(q.plane);
    c.expect(incident(h, p), "[z^2:z:1:1] is not on the plane");
    c.expect(through == printed, "[z^2:z:1:1] lies on " + std::to_string(through.size()) + " planes, not the six printed");

    const double s = seconds_since(t0);
    c.expect(s < 10.0, "runtime " + std::to_string(s) + " s");
    std::ostringstream d;
    d << "n=8 light, f=0, 8 double points match the table, six incident planes (" << s << " s)";
    return c.outcome(d.str());
}

Outcome criterion2() {
    Check c;
    std::ostringstream d;
    for (int n : {2, 3, 4}) {
        const auto t0 = Clock::now();
        const QnArrangement qn(n, make_field(n));
        const PlaneP3 h = PlaneP3::from_integers(qn.field(), {1, 2, 5, 11});
        const auto pos = position_report(h, qn);
        const bool admissible = !pos.in_qn() && pos.unit_points.empty() && pos.coordinate_points.empty() && pos.base_lines.empty() &&
                                pos.sameblock_lines.empty() && pos.crossblock_lines.empty();
        c.expect(admissible, "n=" + std::to_string(n) + ": plane is not in general position");
        const auto im = restrict_to_plane(qn, h);
        const Multinet m = im.as_multinet();
        const auto v = verify(m);
        g_ledger.record(v);
        c.expect(v.ok() && v.classification == Verdict::Net, "n=" + std::to_string(n) + ": not a verified net");
        c.expect(m.k() == 3 && m.d == 2 * n, "n=" + std::to_string(n) + ": wrong (k,d)");
        c.expect(static_cast<int>(base_locus(m).points.size()) == 4 * n * n, "n=" + std::to_string(n) + ": |X| != 4n^2");
        bool identities = v.identities.size() == 4;
        for (const auto& id : v.identities) identities = identities && id.ok;
        c.expect(identities, "n=" + std::to_string(n) + ": identity failure");
        c.expect(v.condition_ii_ok, "n=" + std::to_string(n) + ": condition (ii) fails");
        const double s = seconds_since(t0);
        c.expect(s < 5.0, "n=" + std::to_string(n) + ": runtime " + std::to_string(s) + " s");
        d << "n=" << n << " (3," << 2 * n << ")-net |X|=" << 4 * n * n << " " << s << " s; ";
    }
    return c.outcome(d.str());
}

// True iff p is a nonzero multiple of q.
bool proportional(const HomogeneousPoly& p, const HomogeneousPoly& q) {
    if (p.degree() != q.degree()) return false;
    std::optional<FieldElem> ratio;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& a = p.coeffs()[i];
        const auto& b = q.coeffs()[i];
        if (a.is_zero() != b.is_zero()) return false;
        if (a.is_zero()) continue;
        const FieldElem r = a / b;
        if (ratio && *ratio != r) return false;
        ratio = r;
    }
    return ratio.has_value();
}

Outcome criterion3() {
    Check c;
    std::ostringstream d;
    for (int n = 2; n <= 6; ++n) {
        const QnArrangement qn(n, make_field(n));
        const Field f = qn.field();
        const auto im = restrict_to_plane(qn, PlaneP3::from_integers(f, {1, 0, 0, 0}));
        const auto r = classified(im);
        c.expect(hist_at(r.line_histogram, n) == 3, "x0=0, n=" + std::to_string(n) + ": lines of multiplicity n");
        // x^n (y^n - z^n), y^n (x^n - z^n), z^n (x^n - y^n)
        std::array<HomogeneousPoly, 3> expect{HomogeneousPoly(f, 2 * n), HomogeneousPoly(f, 2 * n), HomogeneousPoly(f, 2 * n)};
        expect[0].coeff(n, n) = FieldElem::one(f);
        expect[0].coeff(n, 0) = -FieldElem::one(f);
        expect[1].coeff(n, n) = FieldElem::one(f);
        expect[1].coeff(0, n) = -FieldElem::one(f);
        expect[2].coeff(n, 0) = FieldElem::one(f);
        expect[2].coeff(0, n) = -FieldElem::one(f);
        for (std::size_t b = 0; b < 3; ++b)
            c.expect(proportional(block_polynomial(f, im.blocks[b]), expect[b]),
                     "x0=0, n=" + std::to_string(n) + ": block " + std::to_string(b) + " polynomial");
    }
    d << "x0=0 gives 3 lines of multiplicity n and monomial block polynomials for n=2..6; ";
    const QnArrangement q5(5, make_field(5));
    const auto r = classified(restrict_to_plane(q5, PlaneP3::from_integers(q5.field(), {1, -2, 0, 0})));
    c.expect(hist_at(r.line_histogram, 5) == 1, "x0=2x1, n=5: lines of multiplicity 5 = " + std::to_string(hist_at(r.line_histogram, 5)));
    d << "x0=2x1 (n=5): " << hist_at(r.line_histogram, 5) << " line of multiplicity 5";
    return c.outcome(d.str());
}

Outcome criterion4() {
    Check c;
    std::ostringstream d;
    for (auto [n, want] : {std::pair{5, 2}, std::pair{6, 3}}) {
        const QnArrangement qn(n, make_field(n));
        const auto r = classified(restrict_to_plane(qn, PlaneP3::from_integers(qn.field(), {1, -1, -1, 1})));
        const int got = hist_at(r.line_histogram, 2);
        c.expect(got == want, "n=" + std::to_string(n) + ": " + std::to_string(got) + " lines of multiplicity 2");
        d << "n=" << n << ": " << got << " double lines; ";
    }
    return c.outcome(d.str());
}

// Shared corpus for the fixed-component suites: unit-point triples, random
// rational planes and planes with root-of-unity coefficients, n = 3..6.
struct CorpusEntry {
    int n;
    PlaneP3 h;
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    std::mt19937_64 rng(4711);
    for (int n = 3; n <= 6; ++n) {
        const QnArrangement qn(n, make_field(n));
        const Field f = qn.field();
        std::unordered_set<PlaneP3> seen;
        auto add = [&](const PlaneP3& h) {
            if (!qn.contains(h) && seen.insert(h).second) out.push_back({n, h});
        };
        const int units = n * n * n;
        std::uniform_int_distribution<int> pick(0, units - 1);
        std::uniform_int_distribution<int> small(-2, 2);
        std::uniform_int_distribution<int> expo(0, n - 1);
        std::uniform_int_distribution<int> kind(0, 4);
        const std::size_t target = seen.size() + 2600;
        for (std::size_t attempt = 0; seen.size() < target; ++attempt) {
            switch (attempt % 3) {
                case 0:
                    if (auto h = oracle::plane_through_units(qn, oracle::unit_from_index(n, pick(rng)), oracle::unit_from_index(n, pick(rng)),
                                                             oracle::unit_from_index(n, pick(rng))))
                        add(*h);
                    break;
                case 1: add(oracle::random_rational_plane(rng, f, 3)); break;
                default: {
                    PlaneP3::Coords co;
                    bool nonzero = false;
                    for (auto& x : co) {
                        switch (kind(rng)) {
                            case 0: x = FieldElem::zero(f); break;
                            case 1: x = FieldElem(f, Rational(small(rng))); break;
                            case 2: x = FieldElem::zeta_power(f, expo(rng)); break;
                            case 3: x = -FieldElem::zeta_power(f, expo(rng)); break;
                            default: x = FieldElem::zeta_power(f, expo(rng)) + FieldElem::zeta_power(f, expo(rng)); break;
                        }
                        nonzero = nonzero || !x.is_zero();
                    }
                    if (nonzero) add(PlaneP3(co));
                    break;
                }
            }
        }
    }
    return out;
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = build_corpus();
    return c;
}

Outcome criterion5() {
    const auto t0 = Clock::now();
    Check c;
    std::ostringstream d;
    for (int n = 4; n <= 6; ++n) {
        const QnArrangement qn(n, make_field(n));
        const Field f = qn.field();
        const auto one_im = restrict_to_plane(qn, PlaneP3::from_integers(f, {3, -2, -1, 0}));
        const auto one = classified(one_im);
        c.expect(one_im.fixed_components.size() == 1, "3x0-2x1-x2, n=" + std::to_string(n) + ": fixed components");
        c.expect(hist_at(one.point_histogram, n - 1) == 1, "3x0-2x1-x2, n=" + std::to_string(n) + ": points of multiplicity n-1");
    }
    for (int n = 5; n <= 6; ++n) {
        const QnArrangement qn(n, make_field(n));
        const auto two_im = restrict_to_plane(qn, plane(qn.field(), "1", "-(z+1)", "z", "0"));
        const auto two = classified(two_im);
        const std::string tag = "x0=(z+1)x1-zx2, n=" + std::to_string(n);
        c.expect(two_im.fixed_components.size() == 2, tag + ": fixed components");
        c.expect(two.verdict == Verdict::LightProper && two.k == 3 && two.d == 2 * n - 2, tag + ": not a light (3,2n-2)-multinet");
        c.expect(hist_at(two.point_histogram, n - 2) == 1, tag + ": points of multiplicity n-2");
    }
    d << "named planes give f=1 with one (n-1)-point and f=2 light (3,2n-2) with one (n-2)-point; ";

    std::map<std::size_t, int> by_f;
    int errors = 0;
    for (const auto& e : corpus()) {
        const QnArrangement qn(e.n, make_field(e.n));
        try {
            const auto im = restrict_to_plane(qn, e.h);
            ++by_f[im.fixed_components.size()];
            c.expect(im.fixed_components.size() <= 2, "n=" + std::to_string(e.n) + " " + e.h.to_string() + " has more than 2 fixed components");
        } catch (const Error& ex) {
            ++errors;
            c.expect(false, std::string("section failed: ") + ex.what());
        }
    }
    const double s = seconds_since(t0);
    c.expect(corpus().size() >= 10000, "corpus too small");
    c.expect(s < 120.0, "runtime " + std::to_string(s) + " s");
    d << corpus().size() << " planes (n=3..6): f=0 " << by_f[0] << ", f=1 " << by_f[1] << ", f=2 " << by_f[2] << ", f>2 "
      << (by_f.size() > 3 ? "present" : "none") << ", errors " << errors << " (" << s << " s)";
    return c.outcome(d.str());
}

Outcome criterion6() {
    Check c;
    int with_fixed = 0, lhs_true = 0, checked = 0;
    for (const auto& e : corpus()) {
        const QnArrangement qn(e.n, make_field(e.n));
        const int n = e.n;
        const auto im = restrict_to_plane(qn, e.h);
        const bool simple_lines = std::all_of(im.raw_blocks.begin(), im.raw_blocks.end(), [](const Block& b) {
            return std::all_of(b.begin(), b.end(), [](const BlockLine& l) { return l.mult == 1; });
        });
        bool mult_n = false, mult_2 = false;
        for (const auto& ip : incidence_table(im.raw_blocks)) {
            const bool equal = std::all_of(ip.block_sums.begin(), ip.block_sums.end(), [&](int s) { return s == ip.block_sums[0]; });
            c.expect(equal, "unequal raw block sums on " + e.h.to_string());
            mult_n = mult_n || ip.block_sums[0] == n;
            mult_2 = mult_2 || ip.block_sums[0] == 2;
        }
        const bool lhs = simple_lines && mult_n && mult_2;
        const bool fixed = !im.fixed_components.empty();
        lhs_true += lhs;
        with_fixed += fixed;
        ++checked;
        c.expect(lhs == fixed, "dichotomy fails for n=" + std::to_string(n) + " " + e.h.to_string());
        if (!fixed) continue;
        const auto pos = position_report(e.h, qn);
        for (const auto& L : im.fixed_components) {
            int coords = 0, units = 0;
            for (int i : pos.coordinate_points)
                coords += incident(L, im.section.project(qn.coordinate_points()[static_cast<std::size_t>(i)]));
            for (const auto& u : pos.unit_points) units += incident(L, im.section.project(qn.unit_point(u)));
            c.expect(coords == 1 && units == n, "fixed component " + L.to_string() + " of " + e.h.to_string() + " carries " +
                                                    std::to_string(coords) + " coordinate and " + std::to_string(units) + " unit points");
        }
    }
    std::ostringstream d;
    d << checked << " planes, " << with_fixed << " with fixed components, " << lhs_true
      << " with simple lines and both n- and 2-points; each fixed line carries 1 coordinate and n unit points";
    return c.outcome(d.str());
}

Outcome criterion7() {
    Check c;
    std::mt19937_64 rng(99);
    int tested = 0, mismatches = 0, through_coordinate_points = 0;
    for (int n = 3; n <= 8; ++n) {
        const QnArrangement qn(n, make_field(n));
        std::vector<PlaneP3> planes;
        SearchConfig cfg;
        cfg.require_light = true;
        cfg.forbid_fixed = true;
        cfg.forbid_mult_n_points = true;
        cfg.top = 25;
        for (const auto& r : run_search(cfg, qn).results) planes.push_back(r.plane);
        std::uniform_int_distribution<int> pick(0, n * n * n - 1);
        for (int t = 0; t < 150; ++t)
            if (auto h = oracle::plane_through_units(qn, oracle::unit_from_index(n, pick(rng)), oracle::unit_from_index(n, pick(rng)),
                                                     oracle::unit_from_index(n, pick(rng))))
                if (!qn.contains(*h)) planes.push_back(*h);
        if (n == 8) planes.push_back(example46_plane(qn.field()));
        for (const auto& h : planes) {
            const auto im = restrict_to_plane(qn, h);
            const auto r = classified(im);
            if (r.verdict != Verdict::LightProper || !im.fixed_components.empty()) continue;
            const auto census = double_point_census(h, qn);
            ++tested;
            through_coordinate_points += !census.precondition_ok;
            std::vector<PointP3> doubles;
            for (const auto& bp : base_locus(im.as_multinet()).points)
                if (bp.mult == 2) doubles.push_back(im.section.lift(bp.point));
            std::sort(doubles.begin(), doubles.end());
            const bool same = census.points == doubles && (census.agrees || !census.precondition_ok);
            mismatches += !same;
            c.expect(same, "n=" + std::to_string(n) + " " + h.to_string());
        }
    }
    c.expect(tested > 0, "no light fixed-component-free sections were tested");
    std::ostringstream d;
    d << tested << " light sections without fixed components (n=3..8, " << through_coordinate_points
      << " through a coordinate point), " << mismatches << " mismatches";
    return c.outcome(d.str());
}

Outcome criterion8() {
    const auto t0 = Clock::now();
    Check c;
    int pairs = 0, collisions = 0;
    for (int n = 2; n <= 12; ++n) {
        const auto r = uniqueness_check(n);
        pairs += r.pairs;
        collisions += r.collisions;
        c.expect(r.ok && r.collisions == 0, "n=" + std::to_string(n) + ": collision");
        c.expect(r.pairs == (n - 1) * (n - 2), "n=" + std::to_string(n) + ": pair count");
    }
    const double s = seconds_since(t0);
    c.expect(s < 1.0, "runtime " + std::to_string(s) + " s");
    std::ostringstream d;
    d << pairs << " ordered pairs for n=2..12, " << collisions << " collisions (" << s << " s)";
    return c.outcome(d.str());
}

Outcome criterion9() {
    Check c;
    {
        const Multinet m = catalog::hasse(make_field(3));
        const auto v = verify(m);
        g_ledger.record(v);
        c.expect(v.ok() && v.classification == Verdict::Net && m.k() == 4 && m.d == 3, "Hasse is not a verified (4,3)-net");
        const auto sq = to_latin(m);
        c.expect(sq.size() == 2 && sq[0].order == 3 && sq[1].order == 3, "Hasse Latin squares");
        c.expect(sq.size() == 2 && sq[0].is_latin() && sq[1].is_latin() && orthogonal(sq[0], sq[1]), "Hasse squares not orthogonal Latin");
    }
    for (int n = 2; n <= 6; ++n) {
        const Multinet m = catalog::monomial(make_field(n), n);
        const auto r = classify(m);
        g_ledger.record(r.verification);
        const std::string tag = "monomial(" + std::to_string(n) + ")";
        c.expect(r.verification.ok() && r.verdict == Verdict::Heavy, tag + " is not a verified heavy multinet");
        c.expect(r.line_histogram == std::map<int, int>{{1, 3 * n}, {n, 3}}, tag + " line profile");
        c.expect(r.point_histogram == std::map<int, int>{{1, n * n}, {n, 3}}, tag + " point profile");
        c.expect(verify_pencil(m), tag + " pencil");
    }
    for (int k = 3; k <= 5; ++k) {
        const Multinet m = catalog::local(make_field(1), k);
        const auto v = verify(m);
        g_ledger.record(v);
        c.expect(v.ok() && v.classification == Verdict::Net && m.k() == k && m.d == 1, "local(" + std::to_string(k) + ")");
    }
    return c.outcome("Hasse (4,3)-net with orthogonal order-3 squares; monomial(2..6) heavy with 3 n-lines and 3 n-points; local(3..5) (k,1)-nets");
}

Outcome criterion10() {
    Check c;
    std::mt19937_64 rng(1010);
    int compared = 0, disagreements = 0;
    auto compare = [&](const QnArrangement& qn, const PlaneP3& h) {
        if (qn.contains(h)) return;
        ++compared;
        const auto a = predicted_vs_actual(h, qn);
        g_ledger.record(a.actual.verification);
        if (!a.agree) {
            ++disagreements;
            c.expect(false, "n=" + std::to_string(qn.n()) + " " + h.to_string() + ": " + (a.mismatches.empty() ? "" : a.mismatches[0]));
        }
    };
    int random_planes = 0;
    while (random_planes < 200) {
        const int n = 2 + random_planes % 7;
        const QnArrangement qn(n, make_field(n));
        const PlaneP3 h = oracle::random_rational_plane(rng, qn.field(), 3);
        if (qn.contains(h)) continue;
        compare(qn, h);
        ++random_planes;
    }
    for (int n = 2; n <= 8; ++n) {
        const QnArrangement qn(n, make_field(n));
        const Field f = qn.field();
        for (const auto& h : {PlaneP3::from_integers(f, {1, 0, 0, 0}), PlaneP3::from_integers(f, {1, -2, 0, 0}),
                              PlaneP3::from_integers(f, {1, -1, -1, 1}), PlaneP3::from_integers(f, {3, -2, -1, 0}),
                              plane(f, "1", "-(z+1)", "z", "0"), PlaneP3::from_integers(f, {1, 2, 5, 11})})
            compare(qn, h);
    }
    const QnArrangement q8(8, make_field(8));
    compare(q8, example46_plane(q8.field()));
    std::ostringstream d;
    d << compared << " planes (200 random rational plus the named examples), " << disagreements << " disagreements";
    return c.outcome(d.str());
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},  {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10},
    };
    int failed = 0;
    std::map<int, bool> passed;
    for (const auto& [id, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        passed[id] = o.pass;
        failed += !o.pass;
        std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
        std::fflush(stdout);
    }

    // The asymptotic bound and the universal identities cannot be checked
    // exhaustively; they are replaced by the property suites above and by the
    // per-instance block-count checks on every multinet built in this run.
    const bool substitutes = passed[5] && passed[6] && passed[7] && passed[8] && passed[10];
    const bool ok11 = substitutes && g_ledger.instances > 0 && g_ledger.violations == 0;
    failed += !ok11;
    std::printf("%s criterion 11: not checkable at desk scale; substituted by criteria 5-8 and 10 (%s) and k<=4 / k=4 => net on %d "
                "constructed multinets (%d violations)\n",
                ok11 ? "PASS" : "FAIL", substitutes ? "all pass" : "some fail", g_ledger.instances, g_ledger.violations);
    return failed == 0 ? 0 : 1;
}
