#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "multinet/errors.hpp"
#include "multinet/qn.hpp"
#include "support/oracle.hpp"

using namespace multinet;

namespace {

struct LatticeLine {
    LineP3 line;
    std::set<std::size_t> planes;
};

// Every line where two planes of Q_n meet, with all planes through it.
std::vector<LatticeLine> brute_force_lines(const QnArrangement& qn) {
    const auto& ps = qn.planes();
    std::map<LineP3, std::set<std::size_t>> lines;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            auto& s = lines[LineP3::meet(ps[i].plane, ps[j].plane)];
            s.insert(i);
            s.insert(j);
        }
    std::vector<LatticeLine> out;
    for (auto& [l, s] : lines) out.push_back({l, s});
    return out;
}

bool numerically_in(const LineP3& l, const PlaneP3& h) {
    const auto eh = oracle::eval(h);
    return oracle::near_zero(oracle::dot(eh, oracle::eval(l.basis(0))), 1e-7L) &&
           oracle::near_zero(oracle::dot(eh, oracle::eval(l.basis(1))), 1e-7L);
}

}  // namespace

TEST(Qn, PlanesAndPreconditions) {
    EXPECT_THROW(QnArrangement(3, make_field(4)), PreconditionFailed);
    EXPECT_THROW(QnArrangement(0, make_field(4)), PreconditionFailed);
    const QnArrangement qn(4, make_field(8));
    ASSERT_EQ(qn.planes().size(), 24u);
    for (std::size_t idx = 0; idx < qn.planes().size(); ++idx) {
        const auto& p = qn.planes()[idx];
        EXPECT_EQ(qn.plane_index(p.block, p.half, p.exponent), idx);
        EXPECT_EQ(qn.find(p.plane), std::optional<std::size_t>(idx));
        EXPECT_TRUE(line_in_plane(qn.base_lines()[static_cast<std::size_t>(2 * p.block + p.half)], p.plane));
    }
    EXPECT_EQ(qn.root(2), -FieldElem::one(qn.field()));
    EXPECT_EQ(qn.root(-3), qn.root(1));
}

TEST(Qn, LatticeLineCountsByBruteForce) {
    for (int n = 2; n <= 5; ++n) {
        const QnArrangement qn(n, make_field(n));
        std::map<std::size_t, int> by_size;
        for (const auto& l : brute_force_lines(qn)) ++by_size[l.planes.size()];
        // Base lines carry n planes, which collides with the other classes for n <= 3.
        const int base_extra2 = n == 2 ? 6 : 0, base_extra3 = n == 3 ? 6 : 0;
        if (n > 3) {
            EXPECT_EQ(by_size[static_cast<std::size_t>(n)], 6) << "base lines, n=" << n;
        }
        EXPECT_EQ(by_size[3], 4 * n * n + base_extra3) << "n=" << n;
        EXPECT_EQ(by_size[2], 3 * n * n + base_extra2) << "n=" << n;
    }
}
TEST(Qn, UnitPointsLieOnSixPlanes) {
    const QnArrangement qn(5, make_field(5));
    for (int idx = 0; idx < 125; idx += 7) {
        const UnitPoint u = oracle::unit_from_index(5, idx);
        const auto eu = oracle::unit_point(5, u[0], u[1], u[2]);
        std::set<std::size_t> numeric;
        for (std::size_t i = 0; i < qn.planes().size(); ++i)
            if (oracle::near_zero(oracle::dot(oracle::eval(qn.planes()[i].plane), eu))) numeric.insert(i);
        const auto through = qn.planes_through(u);
        EXPECT_EQ(std::set<std::size_t>(through.begin(), through.end()), numeric);
    }
}

TEST(PositionReport, AgreesWithBruteForceLattice) {
    std::mt19937_64 rng(21);
    for (int n = 2; n <= 5; ++n) {
        const QnArrangement qn(n, make_field(n));
        const auto lines = brute_force_lines(qn);
        std::vector<PlaneP3> probes;
        for (int t = 0; t < 25; ++t) probes.push_back(oracle::random_rational_plane(rng, qn.field(), 2));
        for (int t = 0; t < 25; ++t) {
            std::uniform_int_distribution<int> pick(0, n * n * n - 1);
            if (auto h = oracle::plane_through_units(qn, oracle::unit_from_index(n, pick(rng)), oracle::unit_from_index(n, pick(rng)),
                                                     oracle::unit_from_index(n, pick(rng))))
                probes.push_back(*h);
        }
        for (const auto& h : probes) {
            const auto rep = position_report(h, qn);
            EXPECT_EQ(rep.in_qn(), qn.contains(h));
            if (rep.in_qn()) continue;
            const auto eh = oracle::eval(h);

            std::vector<UnitPoint> units;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (oracle::near_zero(oracle::dot(eh, oracle::unit_point(n, a, b, c)), 1e-7L)) units.push_back({a, b, c});
            EXPECT_EQ(rep.unit_points, units) << h.to_string();

            std::vector<int> coords;
            for (int i = 0; i < 4; ++i)
                if (h[static_cast<std::size_t>(i)].is_zero()) coords.push_back(i);
            EXPECT_EQ(rep.coordinate_points, coords);

            int base = 0, doubles = 0, triples = 0;
            for (const auto& l : lines) {
                if (!numerically_in(l.line, h)) continue;
                const auto& bl = qn.base_lines();
                if (std::find(bl.begin(), bl.end(), l.line) != bl.end()) ++base;
                else if (l.planes.size() == 2) ++doubles;
                else if (l.planes.size() == 3) ++triples;
            }
            EXPECT_EQ(static_cast<int>(rep.base_lines.size()), base) << h.to_string();
            EXPECT_EQ(static_cast<int>(rep.sameblock_lines.size()), doubles) << h.to_string();
            EXPECT_EQ(static_cast<int>(rep.crossblock_lines.size()), triples) << h.to_string();
            for (const auto& sl : rep.sameblock_lines) EXPECT_TRUE(numerically_in(sl.line, h));
            for (const auto& cl : rep.crossblock_lines) {
                EXPECT_TRUE(numerically_in(cl.line, h));
                EXPECT_TRUE(cl.line.contains(qn.coordinate_points()[static_cast<std::size_t>(cl.omitted)]));
            }
        }
    }
}

TEST(PositionReport, PredictionRejectsPlanesOfQn) {
    const QnArrangement qn(3, make_field(3));
    const auto rep = position_report(qn.planes()[4].plane, qn);
    EXPECT_TRUE(rep.in_qn());
    EXPECT_THROW(predict_class(rep, qn), PlaneInArrangement);
}
