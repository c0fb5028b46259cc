#include <flocks/catalog.hh>
#include <flocks/linpoly.hh>

#include <gtest/gtest.h>

using namespace flocks;

namespace {

void expect_pass(const SuiteReport & r)
{
    for (const auto & a : r.assertions())
        EXPECT_TRUE(a.pass) << r.name() << ": " << a.description;
    EXPECT_TRUE(r.pass());
}

} // namespace

TEST(Catalog, KantorKnuth)
{
    const auto F9 = Field::of_order(9);
    const auto kk = kantor_knuth(F9, 1, 1, 0);
    std::vector<Elem> t3(9);
    for (Elem t = 0; t < 9; ++t)
        t3[t] = F9.pow(t, 3);
    EXPECT_EQ(kk.g(), t3);
    EXPECT_EQ(direction_count(F9, kk.g()).N, 4u);

    const auto F16 = Field::of_order(16);
    EXPECT_EQ(direction_count(F16, kantor_knuth(F16, 2, 1, 0).g()).N, 5u);

    const auto F27 = Field::of_order(27);
    const Elem c = F27.primitive(); // not a square
    EXPECT_EQ(direction_count(F27, kantor_knuth(F27, 1, 1, c).g()).N, 13u);
    EXPECT_THROW(kantor_knuth(F27, 1, 1, 1), CatalogError);
    EXPECT_THROW(kantor_knuth(F16, 3, 1, 0), CatalogError);
    EXPECT_THROW(kantor_knuth(F16, 1, 1, 0), CatalogError);
    EXPECT_THROW(kantor_knuth(F9, 1, 0, 0), CatalogError);
}

TEST(Catalog, HolderMegyesi)
{
    const auto F27 = Field::of_order(27);
    bool found = false;
    for (Elem c = 0; c < 27; ++c) {
        try {
            const auto fl = holder_megyesi(F27, 1, 1, 1, c);
            EXPECT_EQ(direction_count(F27, fl.g()).N, 10u);
            found = true;
        }
        catch (const CatalogError &) {
            // c = Tr(b)/b for some b: t -> Tr(t) - ct has a kernel
            bool kernel = false;
            for (Elem b = 1; b < 27; ++b)
                kernel = kernel || F27.sub(F27.trace(b), F27.mul(c, b)) == 0;
            EXPECT_TRUE(kernel);
        }
    }
    EXPECT_TRUE(found);

    const auto F9 = Field::of_order(9);
    for (Elem c = 0; c < 9; ++c)
        try {
            EXPECT_EQ(direction_count(F9, holder_megyesi(F9, 1, 1, 1, c).g()).N, 4u);
        }
        catch (const CatalogError &) {
        }
}

TEST(Catalog, PuncturedLinesAndConics)
{
    const auto F5 = Field::of_order(5);
    const auto s = punctured_lines(F5, {Point2::from(F5, {1, 0, 0}), Point2::from(F5, {0, 1, 0})});
    EXPECT_EQ(s.size(), 10u);
    EXPECT_FALSE(s.contains(Point2::from(F5, {0, 0, 1})));
    EXPECT_EQ(s, critical_cone(triangle_flock(F5)));
    EXPECT_EQ(conics_inside(F5, s), 0u);

    // a conic missing (0,0,1) is found
    PointSet2 conic;
    for (const auto & p : points2(F5))
        if (F5.mul(p[0], p[1]) == F5.mul(p[2], p[2]))
            conic.insert(p);
    EXPECT_GE(conics_inside(F5, conic), 1u);
    EXPECT_THROW(conics_inside(F5, PointSet2({Point2::from(F5, {0, 0, 1})})), CatalogError);
}

TEST(Catalog, TriangleAndTriadCarriers)
{
    const auto F7 = Field::of_order(7);
    const auto tri7 = critical_cone(triangle_flock(F7));
    EXPECT_EQ(tri7.size(), 3u * 7u);
    EXPECT_FALSE(tri7.contains(Point2::from(F7, {0, 1, 0})));

    const auto F13 = Field::of_order(13);
    const auto tri13 = critical_cone(triangle_flock(F13));
    EXPECT_EQ(tri13.size(), 6u * 13u);
    EXPECT_TRUE(tri13.contains(Point2::from(F13, {0, 1, 0})));

    const auto F4 = Field::of_order(4);
    const auto triad = critical_cone(triad_flock(F4));
    EXPECT_EQ(triad, punctured_lines(F4, {Point2::from(F4, {1, 0, 0}), Point2::from(F4, {1, 1, 0})}));
    EXPECT_EQ(width(F4, triad).minimum, 2u);

    const auto F8 = Field::of_order(8);
    EXPECT_EQ(width(F8, critical_cone(triad_flock(F8))).minimum, 4u);
    const auto F16 = Field::of_order(16);
    EXPECT_EQ(width(F16, critical_cone(triad_flock(F16))).minimum, 8u);

    EXPECT_THROW(triangle_flock(F8), CatalogError);
    EXPECT_THROW(triad_flock(F7), CatalogError);
}

TEST(Catalog, Example1)
{
    const auto F9 = Field::of_order(9);
    const Elem lambda = F9.primitive();
    expect_pass(example1_check(F9, 1, {lambda, F9.mul(lambda, lambda)}));

    PointSet2 conic; // xy = -lambda^2 z^2, a square: not all in
    const auto s = critical_cone(kantor_knuth(F9, 1, 1, 0));
    const Elem m = F9.mul(lambda, lambda);
    bool all_in = true;
    for (Elem x = 1; x < 9; ++x)
        all_in = all_in && s.contains(Point2::from(F9, {x, F9.neg(F9.div(m, x)), 1}));
    EXPECT_FALSE(all_in);
}

TEST(Catalog, Suites)
{
    expect_pass(lunelli_sce_suite());
    expect_pass(kantor_knuth_suite());
    expect_pass(holder_megyesi_suite());
    for (unsigned q : {5u, 7u, 9u, 11u, 13u})
        expect_pass(triangle_flock_suite(q));
    for (unsigned q : {4u, 8u, 16u})
        expect_pass(triad_flock_suite(q));
    expect_pass(triangle_special_case(3));
    expect_pass(triangle_special_case(5));
    expect_pass(triad_special_case(1));
    expect_pass(triad_special_case(2));
    EXPECT_THROW(triangle_flock_suite(8), CatalogError);
}

TEST(Catalog, DirectionWidthBound)
{
    for (unsigned q : {5u, 7u, 9u}) {
        const auto F = Field::of_order(q);
        const auto fl = triangle_flock(F);
        EXPECT_TRUE(direction_width_bound(fl, critical_cone(fl)));
    }
}
