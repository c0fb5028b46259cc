#include <flocks/geom.hh>
#include <flocks/linalg.hh>

#include <gtest/gtest.h>

using namespace flocks;

namespace {

PointSet2 conic_y2_xz(const Field & F)
{
    PointSet2 s;
    for (const auto & p : points2(F))
        if (F.mul(p[1], p[1]) == F.mul(p[0], p[2]))
            s.insert(p);
    return s;
}

} // namespace

TEST(Geometry, Counts)
{
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto F = Field::of_order(q);
        const std::size_t q2 = q * q;
        EXPECT_EQ(points2(F).size(), q2 + q + 1);
        EXPECT_EQ(lines2(F).size(), q2 + q + 1);
        EXPECT_EQ(points3(F).size(), (q2 + 1) * (q + 1));
        EXPECT_EQ(planes3(F).size(), (q2 + 1) * (q + 1));
        EXPECT_EQ(lines3(F).size(), (q2 + 1) * (q2 + q + 1));
    }
}

TEST(Geometry, PlaneIncidence)
{
    const auto F = Field::of_order(4);
    for (const auto & l : lines2(F)) {
        const auto pts = points_on(F, l);
        EXPECT_EQ(pts.size(), 5u);
        for (const auto & p : pts)
            EXPECT_TRUE(incident(F, p, l));
    }
    const auto all = points2(F);
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(index_of(all[i], 4), i);
        for (std::size_t j = i + 1; j < all.size(); j += 4) {
            const auto l = join(F, all[i], all[j]);
            EXPECT_TRUE(incident(F, all[i], l));
            EXPECT_TRUE(incident(F, all[j], l));
        }
    }
    const auto x = Line2::from(F, {1, 0, 0}), y = Line2::from(F, {0, 1, 0});
    EXPECT_EQ(meet(F, x, y), Point2::from(F, {0, 0, 1}));
}

TEST(Geometry, NormalizationIsLeadingOne)
{
    const auto F = Field::of_order(5);
    EXPECT_EQ(Point2::from(F, {0, 3, 1}).coords(), (Vec3{0, 1, 2}));
    EXPECT_THROW(Point2::from(F, {0, 0, 0}), GeometryError);
}

TEST(Geometry, SpaceIncidence)
{
    const auto F = Field::of_order(3);
    const auto a = Plane3::from(F, {1, 0, 0, 0}), b = Plane3::from(F, {0, 1, 2, 1});
    const auto l = meet(F, a, b);
    const auto pts = l.points(F);
    EXPECT_EQ(pts.size(), 4u);
    for (const auto & p : pts) {
        EXPECT_TRUE(incident(F, p, a));
        EXPECT_TRUE(incident(F, p, b));
        EXPECT_TRUE(l.contains(F, p));
    }
    EXPECT_EQ(Line3::through(F, pts[0], pts[3]), l);
    EXPECT_TRUE(contains(F, a, l));

    const auto p = Point3::from(F, {1, 2, 0, 1});
    EXPECT_EQ(dualize(F, dualize(F, p)), p);
    const auto h = join(F, l, Point3::from(F, {1, 0, 0, 0}));
    EXPECT_TRUE(contains(F, h, l));
    const auto x = meet(F, l, Plane3::from(F, {0, 0, 0, 1}));
    EXPECT_TRUE(l.contains(F, x));
    EXPECT_EQ(x[3], 0u);
}

TEST(Geometry, SkewAndMeetingLines)
{
    const auto F = Field::of_order(3);
    const auto e = [&](Vec4 v) { return Point3::from(F, v); };
    const auto l1 = Line3::through(F, e({1, 0, 0, 0}), e({0, 1, 0, 0}));
    const auto l2 = Line3::through(F, e({0, 0, 1, 0}), e({0, 0, 0, 1}));
    const auto l3 = Line3::through(F, e({1, 0, 0, 0}), e({0, 0, 1, 0}));
    EXPECT_FALSE(lines_meet(F, l1, l2));
    EXPECT_TRUE(lines_meet(F, l1, l3));
    EXPECT_TRUE(lines_meet(F, l2, l3));
}

TEST(Geometry, ConicIsArc)
{
    for (unsigned q : {3u, 5u, 7u}) {
        const auto F = Field::of_order(q);
        const auto c = conic_y2_xz(F);
        EXPECT_EQ(c.size(), q + 1);
        EXPECT_TRUE(is_arc(F, c));
        EXPECT_FALSE(is_hyperoval(F, c));
    }
    const auto F = Field::of_order(4);
    auto h = conic_y2_xz(F);
    EXPECT_FALSE(is_hyperoval(F, h));
    h.insert(Point2::from(F, {0, 1, 0})); // nucleus
    EXPECT_TRUE(is_hyperoval(F, h));
}

TEST(Geometry, SetAlgebra)
{
    const auto F = Field::of_order(3);
    const auto p = [&](Vec3 v) { return Point2::from(F, v); };
    const PointSet2 a({p({1, 0, 0}), p({0, 1, 0})}), b({p({0, 1, 0}), p({0, 0, 1})});
    EXPECT_EQ((a | b).size(), 3u);
    EXPECT_EQ(a & b, PointSet2({p({0, 1, 0})}));
    EXPECT_EQ(a - b, PointSet2({p({1, 0, 0})}));
    EXPECT_EQ((a ^ b).size(), 2u);
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_TRUE(collinear(F, p({1, 0, 0}), p({0, 1, 0}), p({1, 1, 0})));
}

TEST(LinearAlgebra, RankInverseNullspace)
{
    const auto F = Field::of_order(5);
    const Matrix m(3, 3, {1, 2, 3, 0, 1, 4, 0, 1, 0});
    const auto inv = inverse(F, m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(multiply(F, m, *inv), Matrix::identity(3));
    EXPECT_EQ(rank(F, m), 3u);

    const Matrix s(2, 3, {1, 2, 3, 2, 4, 0});
    EXPECT_EQ(rank(F, s), 2u);
    const auto ns = nullspace(F, s);
    ASSERT_EQ(ns.rows(), 1u);
    EXPECT_EQ(apply(F, s, ns.row(0)), (std::vector<Elem>{0, 0}));
    EXPECT_FALSE(inverse(F, Matrix(2, 2)));
}
