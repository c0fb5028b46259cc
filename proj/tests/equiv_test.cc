#include <flocks/equiv.hh>
#include <flocks/linpoly.hh>

#include <gtest/gtest.h>

using namespace flocks;

namespace {

Flock star(const Field & F, auto && g)
{
    std::vector<Elem> out(F.q());
    for (Elem t = 0; t < F.q(); ++t)
        out[t] = g(t);
    return star_normal_flock(F, out);
}

Flock scaled(const Flock & fl, Elem c)
{
    const auto & F = fl.field();
    auto f = fl.f(), g = fl.g(), h = fl.h();
    for (Elem t = 0; t < F.q(); ++t)
        f[t] = F.mul(c, f[t]), g[t] = F.mul(c, g[t]), h[t] = F.mul(c, h[t]);
    return Flock::make(F, f, g, h);
}

} // namespace

TEST(Equiv, IdentityAndScaling)
{
    const auto F9 = Field::of_order(9);
    const auto kk = star_variant(star(F9, [&](Elem t) { return F9.pow(t, 3); }), 1, 2);
    EXPECT_TRUE(same_planes(apply(identity_element(), kk), kk));

    StabElement d2;
    d2.d = 2;
    EXPECT_TRUE(same_planes(apply(d2, kk), scaled(kk, 2)));
    EXPECT_TRUE(same_planes(apply(inverse(F9, d2), kk), scaled(kk, F9.inv(2))));
}

TEST(Equiv, FrobeniusFixesTheLunelliSceFlock)
{
    const auto F16 = Field::of_order(16);
    const auto fl = star(F16, [&](Elem t) { return F16.pow(t, 4); });
    StabElement s;
    s.j = 1;
    EXPECT_TRUE(same_planes(apply(s, fl), fl));
}

TEST(Equiv, GroupLawAndIncidence)
{
    std::mt19937_64 rng(11);
    for (unsigned q : {3u, 4u, 8u, 9u}) {
        const auto F = Field::of_order(q);
        const auto pts = points2(F);
        for (int trial = 0; trial < 10; ++trial) {
            const auto g1 = random_element(F, rng), g2 = random_element(F, rng), g3 = random_element(F, rng);
            EXPECT_NO_THROW(validate(F, g1));
            EXPECT_EQ(compose(F, compose(F, g3, g2), g1), compose(F, g3, compose(F, g2, g1)));
            EXPECT_EQ(compose(F, g1, inverse(F, g1)), identity_element());
            EXPECT_EQ(compose(F, inverse(F, g1), g1), identity_element());
            const auto g21 = compose(F, g2, g1);
            for (const auto & p : pts)
                EXPECT_EQ(apply(F, g21, p), apply(F, g2, apply(F, g1, p)));

            // (P, w) on [v, -1] iff (M P^s, d w^s) on the image plane
            for (Elem t = 0; t < q; ++t) {
                const Vec3 v{t, F.mul(t, t), F.add(t, 1)};
                const auto v2 = apply_plane(F, g1, v);
                for (const auto & p : pts)
                    for (Elem w = 0; w < q; ++w) {
                        const Vec3 raw = p.coords();
                        const bool on = F.add(dot(F, v, raw), F.neg(w)) == 0;
                        const auto mp = apply(F, g1.M, {F.frobenius(raw[0], g1.j), F.frobenius(raw[1], g1.j),
                                                            F.frobenius(raw[2], g1.j)});
                        const Elem w2 = F.mul(g1.d, F.frobenius(w, g1.j));
                        const bool on2 = F.add(dot(F, v2, Vec3{mp[0], mp[1], mp[2]}), F.neg(w2)) == 0;
                        ASSERT_EQ(on, on2);
                    }
            }
        }
    }
}

TEST(Equiv, ValidateRejects)
{
    const auto F = Field::of_order(4);
    StabElement g;
    g.d = 0;
    EXPECT_THROW(validate(F, g), EquivError);
    g = {};
    g.j = 2;
    EXPECT_THROW(validate(F, g), EquivError);
    g = {};
    g.M = Matrix(3, 3);
    EXPECT_THROW(validate(F, g), EquivError);
}

TEST(Equiv, Fingerprints)
{
    const auto F9 = Field::of_order(9);
    const auto lin = star(F9, [](Elem) { return 0u; });
    const auto kk = star(F9, [&](Elem t) { return F9.pow(t, 3); });
    EXPECT_NE(fingerprint(lin), fingerprint(kk));
    EXPECT_NE(fingerprint(lin).carrier_size, fingerprint(kk).carrier_size);
    EXPECT_EQ(fingerprint(kk), fingerprint(star_variant(kk, 1, 1)));
    ASSERT_TRUE(fingerprint(kk).directions);
    EXPECT_EQ(*fingerprint(kk).directions, 4u);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial)
        EXPECT_EQ(fingerprint(apply(random_element(F9, rng), kk)), fingerprint(kk));
}

TEST(Equiv, Exhaustive)
{
    const auto F5 = Field::of_order(5);
    const auto a = star(F5, [&](Elem t) { return F5.mul(2, t); });
    const auto b = star(F5, [](Elem) { return 0u; });
    const auto r = are_equivalent(a, b, EquivMode::exhaustive);
    EXPECT_EQ(r.verdict, Verdict::equivalent);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(same_planes(apply(*r.witness, a), b));

    const auto tri = star(F5, [&](Elem t) { return F5.pow(t, 3); });
    EXPECT_EQ(are_equivalent(a, tri, EquivMode::exhaustive).verdict, Verdict::inequivalent);
    EXPECT_EQ(are_equivalent(a, b, EquivMode::fingerprint).verdict, Verdict::inconclusive);

    std::mt19937_64 rng(5);
    for (unsigned q : {4u, 7u, 8u}) {
        const auto F = Field::of_order(q);
        const auto fl = star(F, [&](Elem t) { return F.pow(t, q == 7 ? 5 : 2); });
        for (int trial = 0; trial < 5; ++trial) {
            const auto img = apply(random_element(F, rng), fl);
            const auto e = are_equivalent(fl, img, EquivMode::exhaustive);
            ASSERT_EQ(e.verdict, Verdict::equivalent);
            EXPECT_TRUE(same_planes(apply(*e.witness, fl), img));
        }
    }

    const auto F9 = Field::of_order(9);
    const auto kk = star(F9, [&](Elem t) { return F9.pow(t, 3); });
    EXPECT_THROW(are_equivalent(kk, star_variant(kk, 1, 0), EquivMode::exhaustive), EquivError);
}

TEST(Equiv, StarNormalForm)
{
    const auto F9 = Field::of_order(9);
    const auto kk = star(F9, [&](Elem t) { return F9.pow(t, 3); });
    const auto self = normalize_star_form(kk);
    EXPECT_TRUE(same_planes(self.flock, kk));

    for (Elem a = 0; a < 9; a += 2)
        for (Elem b = 1; b < 9; b += 3) {
            const auto v = star_variant(kk, a, b);
            const auto nf = normalize_star_form(v);
            EXPECT_TRUE(same_planes(apply(nf.element, v), nf.flock));
            EXPECT_EQ(nf.flock.f(), kk.f());
            const auto e = detect_linearized(F9, nf.flock.g());
            ASSERT_TRUE(e);
            EXPECT_EQ(direction_count(F9, nf.flock.g()).N, 4u);
        }

    const auto F5 = Field::of_order(5);
    const auto lin = normalize_star_form(star(F5, [&](Elem t) { return F5.mul(2, t); }));
    EXPECT_TRUE(is_linear(lin.flock).linear);
    EXPECT_EQ(direction_count(F5, lin.flock.g()).N, 1u);
}
