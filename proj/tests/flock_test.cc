#include <flocks/flock.hh>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace flocks;

namespace {

std::vector<Elem> table(const Field & F, auto && fn)
{
    std::vector<Elem> out(F.q());
    for (Elem t = 0; t < F.q(); ++t)
        out[t] = fn(t);
    return out;
}

Flock star(const Field & F, auto && g)
{
    return star_normal_flock(F, table(F, g));
}

// P is in the critical cone iff every point of the generator VP other than V
// lies on exactly one flock plane.
PointSet2 cone_by_incidence(const Flock & fl)
{
    const auto & F = fl.field();
    PointSet2 s;
    for (const auto & p : points2(F)) {
        bool ok = true;
        for (Elem w = 0; w < F.q() && ok; ++w) {
            const auto x = Point3::from(F, {p[0], p[1], p[2], w});
            unsigned hits = 0;
            for (Elem t = 0; t < F.q(); ++t)
                hits += incident(F, x, fl.plane(t));
            ok = hits == 1;
        }
        if (ok)
            s.insert(p);
    }
    return s;
}

unsigned width_by_lines(const Field & F, const PointSet2 & s)
{
    if (s.empty())
        return 0;
    unsigned best = ~0u;
    for (const auto & p : points2(F)) {
        std::set<Line2> lines;
        for (const auto & x : s)
            if (x != p)
                lines.insert(join(F, p, x));
        best = std::min<unsigned>(best, lines.empty() ? 1 : lines.size());
    }
    return best;
}

} // namespace

TEST(Flock, Validation)
{
    const auto F5 = Field::of_order(5);
    EXPECT_NO_THROW(star(F5, [](Elem) { return 0u; }));
    const auto F9 = Field::of_order(9);
    EXPECT_NO_THROW(star(F9, [&](Elem t) { return F9.pow(t, 3); }));
    const std::vector<Elem> zero(5, 0);
    EXPECT_THROW(Flock::make(F5, zero, zero, zero), FlockError);
    EXPECT_THROW(Flock::make(F5, {1, 2, 3, 4, 0}, zero, zero), FlockError);
    EXPECT_THROW(Flock::make(F5, {0, 1, 2}, zero, zero), FlockError);
}

TEST(Flock, PermutationTest)
{
    const auto F5 = Field::of_order(5);
    const auto lin = star(F5, [](Elem) { return 0u; });
    EXPECT_TRUE(permutation_test(lin, 1, 0, 0));
    EXPECT_FALSE(permutation_test(lin, 0, 1, 0));

    const auto F9 = Field::of_order(9);
    const auto kk = star(F9, [&](Elem t) { return F9.pow(t, 3); });
    const Elem m = F9.neg(F9.primitive());
    std::set<Elem> values;
    for (Elem t = 0; t < 9; ++t)
        values.insert(F9.add(t, F9.mul(m, F9.pow(t, 3))));
    EXPECT_EQ(permutation_test(kk, 1, m, 0), values.size() == 9);

    const auto F16 = Field::of_order(16);
    const auto ls = star(F16, [&](Elem t) { return F16.pow(t, 4); });
    for (Elem a = 1; a < 16; ++a)
        for (Elem b = 1; b < 16; ++b) {
            // additive, so a permutation iff a + b t^3 has no root
            bool root = false;
            for (Elem t = 1; t < 16; ++t)
                root = root || F16.add(a, F16.mul(b, F16.pow(t, 3))) == 0;
            EXPECT_EQ(permutation_test(ls, a, b, 0), ! root);
        }
}

TEST(Flock, CriticalConeMatchesIncidenceScan)
{
    for (unsigned q : {3u, 4u, 5u, 7u}) {
        const auto F = Field::of_order(q);
        for (Elem c = 0; c < q; ++c) {
            const auto fl = star(F, [&](Elem t) { return F.mul(c, F.pow(t, q == 4 ? 2 : 3)); });
            const auto s = critical_cone(fl);
            EXPECT_EQ(s, cone_by_incidence(fl)) << "q=" << q << " c=" << c;
            EXPECT_TRUE(is_flock_of(fl, s));
        }
    }
}

TEST(Flock, CriticalConeExamples)
{
    const auto F5 = Field::of_order(5);
    const auto s = critical_cone(star(F5, [](Elem) { return 0u; }));
    EXPECT_EQ(s.size(), 25u);
    for (const auto & p : s)
        EXPECT_NE(p[0], 0u);

    const auto F16 = Field::of_order(16);
    const auto ls = critical_cone(star(F16, [&](Elem t) { return F16.pow(t, 4); }));
    std::vector<Point2> dirs{Point2::from(F16, {0, 1, 0}), Point2::from(F16, {1, 0, 0})};
    for (Elem c = 1; c < 16; ++c)
        if (F16.log(c) % 3 != 0)
            dirs.push_back(Point2::from(F16, {1, c, 0}));
    EXPECT_EQ(dirs.size(), 12u);
    PointSet2 expected;
    for (const auto & d : dirs)
        for (Elem w = 0; w < 16; ++w)
            expected.insert(Point2::from(F16, {d[0], d[1], w}));
    EXPECT_EQ(ls, expected);
    EXPECT_EQ(ls.size(), 192u);
}

TEST(Flock, IsFlockOf)
{
    const auto F5 = Field::of_order(5);
    const auto lin = star(F5, [](Elem) { return 0u; });
    EXPECT_TRUE(is_flock_of(lin, PointSet2{}));
    EXPECT_FALSE(is_flock_of(lin, PointSet2({Point2::from(F5, {0, 1, 0})})));
    EXPECT_TRUE(is_flock_of(lin, PointSet2({Point2::from(F5, {1, 0, 0})})));
}

TEST(Flock, Width)
{
    const auto F5 = Field::of_order(5);
    EXPECT_EQ(width(F5, PointSet2{}).minimum, 0u);
    const auto line = PointSet2(points_on(F5, Line2::from(F5, {0, 0, 1})));
    EXPECT_EQ(width(F5, line).minimum, 1u);
    PointSet2 oval;
    for (const auto & p : points2(F5))
        if (F5.mul(p[1], p[1]) == F5.mul(p[0], p[2]))
            oval.insert(p);
    EXPECT_EQ(width(F5, oval).minimum, 3u);
    EXPECT_TRUE(width_at_least(F5, oval, 3));
    EXPECT_FALSE(width_at_least(F5, oval, 4));
    EXPECT_EQ(point_width(F5, PointSet2({Point2::from(F5, {1, 0, 0})}), Point2::from(F5, {1, 0, 0})), 1u);
}

TEST(Flock, WidthMatchesLineScan)
{
    std::mt19937 rng(7);
    for (unsigned q : {3u, 4u, 5u}) {
        const auto F = Field::of_order(q);
        const auto all = points2(F);
        for (int trial = 0; trial < 30; ++trial) {
            PointSet2 s;
            for (const auto & p : all)
                if (rng() % 3 == 0)
                    s.insert(p);
            const unsigned w = width(F, s).minimum;
            EXPECT_EQ(w, width_by_lines(F, s));
            EXPECT_TRUE(width_at_least(F, s, w));
            EXPECT_FALSE(width_at_least(F, s, w + 1));
        }
    }
}

TEST(Flock, ClassifyCone)
{
    const auto F16 = Field::of_order(16);
    const auto ls = classify_cone(F16, critical_cone(star(F16, [&](Elem t) { return F16.pow(t, 4); })));
    EXPECT_EQ(ls.tag, ConeClass::Tag::thick);
    EXPECT_TRUE(ls.wide());

    const auto F5 = Field::of_order(5);
    const auto tri = classify_cone(F5, critical_cone(star(F5, [&](Elem t) { return F5.pow(t, 3); })));
    EXPECT_EQ(tri.tag, ConeClass::Tag::thin);
    EXPECT_EQ(tri.width, 2u);

    EXPECT_EQ(classify_cone(F5, PointSet2({Point2::from(F5, {1, 2, 3})})).tag, ConeClass::Tag::flat);
    EXPECT_EQ(classify_cone(F5, PointSet2{}).tag, ConeClass::Tag::empty);
    EXPECT_EQ(to_string(ConeClass::Tag::wide), "wide");
}

TEST(Flock, Linearity)
{
    const auto F5 = Field::of_order(5);
    const auto lin = is_linear(star(F5, [&](Elem t) { return F5.mul(2, t); }));
    EXPECT_TRUE(lin.linear);
    ASSERT_TRUE(lin.axis);
    const auto F9 = Field::of_order(9);
    EXPECT_FALSE(is_linear(star(F9, [&](Elem t) { return F9.pow(t, 3); })).linear);
}

TEST(Flock, StarAnalysis)
{
    const auto F9 = Field::of_order(9);
    const auto kk = star(F9, [&](Elem t) { return F9.pow(t, 3); });
    const auto sa = star_analysis(kk);
    EXPECT_TRUE(sa.is_star);
    EXPECT_TRUE(sa.is_proper);
    ASSERT_EQ(sa.star_points.size(), 1u);
    EXPECT_EQ(sa.star_points[0], Point2::from(F9, {0, 0, 1}));

    for (Elem a = 0; a < 9; a += 4)
        for (Elem b = 1; b < 9; b += 3)
            EXPECT_TRUE(star_analysis(star_variant(kk, a, b)).is_star);

    const auto lin = star_analysis(star(F9, [&](Elem t) { return F9.mul(5, t); }));
    EXPECT_TRUE(lin.is_star);
    EXPECT_FALSE(lin.is_proper);
    EXPECT_EQ(lin.star_points.size(), 10u);
}

TEST(Flock, Bilinearity)
{
    const auto F5 = Field::of_order(5);
    const auto tri = is_bilinear(star(F5, [&](Elem t) { return F5.pow(t, 3); }));
    EXPECT_TRUE(tri.properly_bilinear);
    EXPECT_TRUE(tri.lines_meet);
    ASSERT_EQ(tri.carrier_lines.size(), 2u);
    // x0 - x1 = 0 = x3 and x0 + x1 = 0 = x3
    const auto l1 = Line3::from_rows(F5, {1, 1, 0, 0}, {0, 0, 1, 0});
    const auto l2 = Line3::from_rows(F5, {1, 4, 0, 0}, {0, 0, 1, 0});
    std::set<Line3> got(tri.carrier_lines.begin(), tri.carrier_lines.end()), want{l1, l2};
    EXPECT_EQ(got, want);

    const auto lin = is_bilinear(star(F5, [&](Elem t) { return F5.mul(2, t); }));
    EXPECT_TRUE(lin.degenerate);
    EXPECT_FALSE(lin.properly_bilinear);

    const auto F16 = Field::of_order(16);
    EXPECT_FALSE(is_bilinear(star(F16, [&](Elem t) { return F16.pow(t, 4); })).properly_bilinear);
}

TEST(Flock, LinearFlockAxes)
{
    const auto F5 = Field::of_order(5);
    PointSet2 conic;
    for (const auto & p : points2(F5))
        if (F5.mul(p[1], p[1]) == F5.mul(p[0], p[2]))
            conic.insert(p);
    const auto axes = linear_flock_axes(F5, conic);
    EXPECT_FALSE(axes.empty());
    for (const auto & a : axes) {
        EXPECT_TRUE(is_linear(a.flock).linear);
        EXPECT_TRUE(is_flock_of(a.flock, conic));
    }
    EXPECT_TRUE(linear_flock_axes(F5, PointSet2(points2(F5))).empty());

    const auto F2 = Field::of_order(2);
    const auto all = linear_flock_axes(F2, PointSet2{});
    // every line of PG(3,2) not through V
    EXPECT_EQ(all.size(), 35u - 7u);
}
