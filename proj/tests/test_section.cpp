#include <gtest/gtest.h>

#include <random>

#include "multinet/errors.hpp"
#include "multinet/section.hpp"
#include "support/oracle.hpp"

using namespace multinet;

namespace {

PlaneP3 plane(Field f, const char* a, const char* b, const char* c, const char* d) {
    return PlaneP3({parse_elem(a, f), parse_elem(b, f), parse_elem(c, f), parse_elem(d, f)});
}

}  // namespace

TEST(SectionPlane, LiftProjectRoundTrip) {
    const Field f = make_field(4);
    const PlaneP3 h = plane(f, "2", "-1", "z", "3");
    for (std::optional<int> pivot : {std::optional<int>{}, std::optional<int>(1), std::optional<int>(3)}) {
        const SectionPlane s(h, pivot);
        const PointP2 p = PointP2::from_integers(f, {3, -7, 2});
        const PointP3 q = s.lift(p);
        EXPECT_TRUE(incident(h, q));
        EXPECT_EQ(s.project(q), p);
    }
    EXPECT_EQ(SectionPlane(h).pivot(), 0);
    EXPECT_THROW(SectionPlane(plane(f, "0", "1", "1", "1"), 0), PreconditionFailed);
    EXPECT_THROW(SectionPlane(h).project(PointP3::from_integers(f, {1, 0, 0, 0})), PreconditionFailed);
}

TEST(SectionPlane, RestrictedFormVanishesOnLiftedPoints) {
    std::mt19937_64 rng(9);
    const Field f = make_field(6);
    const SectionPlane s(plane(f, "1", "z", "-2", "1+z^2"));
    for (int t = 0; t < 30; ++t) {
        const PlaneP3 g = oracle::random_rational_plane(rng, f, 3);
        const auto l = s.restrict_form(g);
        if (!l) {
            EXPECT_EQ(g, s.plane());
            continue;
        }
        const PointP2 p = PointP2::from_integers(f, {t + 1, 2 - t, 5});
        EXPECT_EQ(dot(g, s.lift(p)).is_zero(), incident(*l, p));
        // Any point of the restricted line lifts into g.
        const LineP2 other = LineP2::from_integers(f, {1, t, 3});
        if (other != *l) {
            EXPECT_TRUE(dot(g, s.lift(meet(*l, other))).is_zero());
        }
    }
    EXPECT_FALSE(s.restrict_form(s.plane()));
}

TEST(Restrict, CoordinatePlaneGivesMonomialArrangement) {
    for (int n = 2; n <= 5; ++n) {
        const QnArrangement qn(n, make_field(n));
        const Field f = qn.field();
        const auto im = restrict_to_plane(qn, PlaneP3::from_integers(f, {1, 0, 0, 0}));
        Multinet expect = catalog::monomial(f, n);
        Multinet got = im.as_multinet();
        expect.canonicalize();
        got.canonicalize();
        EXPECT_EQ(got.blocks, expect.blocks) << "n=" << n;
        EXPECT_EQ(im.d, 2 * n);
        EXPECT_TRUE(im.fixed_components.empty());
    }
}

TEST(Restrict, ImagesMatchPlaneOrder) {
    const QnArrangement qn(3, make_field(3));
    const PlaneP3 h = PlaneP3::from_integers(qn.field(), {1, 2, 5, 11});
    const auto im = restrict_to_plane(qn, h);
    ASSERT_EQ(im.images.size(), qn.planes().size());
    for (std::size_t i = 0; i < im.images.size(); ++i) EXPECT_EQ(im.images[i], *im.section.restrict_form(qn.planes()[i].plane));
    EXPECT_THROW(restrict_to_plane(qn, qn.planes()[2].plane), PlaneInArrangement);
}

TEST(Restrict, FixedComponentsAreCancelled) {
    const int n = 5;
    const QnArrangement qn(n, make_field(n));
    const Field f = qn.field();
    const auto one = restrict_to_plane(qn, PlaneP3::from_integers(f, {3, -2, -1, 0}));
    EXPECT_EQ(fixed_component_count(one), 1);
    EXPECT_EQ(one.d, 2 * n - 1);
    const auto two = restrict_to_plane(qn, plane(f, "1", "-(z+1)", "z", "0"));
    EXPECT_EQ(fixed_component_count(two), 2);
    EXPECT_EQ(two.d, 2 * n - 2);
    // Raw blocks keep the fixed component in every block.
    for (const auto& block : two.raw_blocks) {
        int hits = 0;
        for (const auto& bl : block)
            for (const auto& fc : two.fixed_components) hits += bl.line == fc;
        EXPECT_EQ(hits, 2);
    }
    EXPECT_TRUE(verify(two.as_multinet()).ok());
}
