#include <flocks/gf.hh>

#include <gtest/gtest.h>

#include <set>

using namespace flocks;

namespace {

// schoolbook product of digit vectors reduced by a monic modulus
Elem naive_mul(const Field & F, Elem a, Elem b)
{
    const unsigned p = F.p(), n = F.n();
    auto da = F.digits(a), db = F.digits(b);
    std::vector<unsigned> prod(2 * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto & mod = F.modulus();
    for (unsigned k = 2 * n - 1; k >= n; --k) {
        const unsigned c = prod[k];
        if (c == 0)
            continue;
        prod[k] = 0;
        for (unsigned i = 0; i < n; ++i)
            prod[k - n + i] = (prod[k - n + i] + (p - mod[i]) * c) % p;
    }
    prod.resize(n);
    return F.from_digits(prod);
}

const std::vector<unsigned> orders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81};

} // namespace

TEST(Field, ExplicitProducts)
{
    const auto F16 = Field::make(2, 4);
    EXPECT_EQ(F16.modulus(), (std::vector<unsigned>{1, 1, 0, 0}));
    EXPECT_EQ(F16.mul(2, 2), 4u);
    EXPECT_EQ(F16.pow(2, 4), 3u);
    EXPECT_EQ(F16.primitive(), 2u);

    const auto F9 = Field::make(3, 2);
    EXPECT_EQ(F9.modulus(), (std::vector<unsigned>{1, 0}));
    EXPECT_EQ(F9.mul(3, 3), 2u);
    EXPECT_EQ(F9.primitive(), 4u);

    EXPECT_EQ(Field::of_order(4).trace(2), 1u);
    EXPECT_EQ(F16.trace(2), 0u);
    EXPECT_FALSE(Field::of_order(5).is_square(2));
    EXPECT_TRUE(Field::of_order(5).is_square(4));
}

TEST(Field, MultiplicationMatchesSchoolbook)
{
    for (unsigned q : orders) {
        const auto F = Field::of_order(q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b)
                ASSERT_EQ(F.mul(a, b), naive_mul(F, a, b)) << "q=" << q << " a=" << a << " b=" << b;
    }
}

TEST(Field, Axioms)
{
    for (unsigned q : orders) {
        const auto F = Field::of_order(q);
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(F.add(a, F.neg(a)), 0u);
            if (a != 0) {
                EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
                EXPECT_EQ(F.exp(F.log(a)), a);
            }
            for (Elem b = 0; b < q; b += 3)
                for (Elem c = 0; c < q; c += 5)
                    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
}

TEST(Field, PrimitiveHasFullOrder)
{
    for (unsigned q : orders) {
        const auto F = Field::of_order(q);
        std::set<Elem> seen;
        Elem x = 1;
        for (unsigned i = 0; i + 1 < q; ++i, x = F.mul(x, F.primitive()))
            seen.insert(x);
        EXPECT_EQ(seen.size(), q - 1);
        EXPECT_EQ(x, 1u);
    }
}

TEST(Field, FrobeniusTraceAndSquares)
{
    for (unsigned q : orders) {
        const auto F = Field::of_order(q);
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(F.frobenius(a, 1), F.pow(a, F.p()));
            Elem tr = 0, y = a;
            for (unsigned i = 0; i < F.n(); ++i, y = F.pow(y, F.p()))
                tr = F.add(tr, y);
            EXPECT_EQ(F.trace(a), tr);
            EXPECT_LT(F.trace(a), F.p());
            bool square = false;
            for (Elem b = 0; b < q && ! square; ++b)
                square = F.mul(b, b) == a;
            EXPECT_EQ(F.is_square(a), square);
        }
    }
}

TEST(Field, Subfields)
{
    const auto F = Field::of_order(64);
    for (unsigned e : {1u, 2u, 3u, 6u}) {
        const auto sub = F.subfield_elements(e);
        EXPECT_EQ(sub.size(), 1u << e);
        for (Elem a : sub)
            EXPECT_EQ(F.frobenius(a, e), a);
    }
}

TEST(Field, RejectsBadInput)
{
    EXPECT_THROW(Field::of_order(6), FieldError);
    EXPECT_THROW(Field::of_order(1), FieldError);
    EXPECT_THROW(Field::make(2, 2, std::vector<unsigned>{1, 0}), FieldError); // x^2 + 1 = (x+1)^2
    EXPECT_THROW(Field::make(4, 1), FieldError);
    EXPECT_FALSE(is_irreducible(3, {0, 1}));
    EXPECT_TRUE(is_irreducible(3, {1, 0}));
}

TEST(Field, CustomModulus)
{
    const auto F = Field::make(2, 4, std::vector<unsigned>{1, 0, 0, 1}); // x^4 + x^3 + 1
    for (Elem a = 0; a < 16; ++a)
        for (Elem b = 0; b < 16; ++b)
            ASSERT_EQ(F.mul(a, b), naive_mul(F, a, b));
    EXPECT_NE(F, Field::make(2, 4));
}
