#include <flocks/survey.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace flocks;

TEST(Survey, UnrankPermutation)
{
    std::vector<unsigned> p(5);
    std::iota(p.begin(), p.end(), 0u);
    for (std::uint64_t r = 0; r < 120; ++r) {
        EXPECT_EQ(unrank_permutation(5, r), p);
        std::next_permutation(p.begin(), p.end());
    }
}

TEST(Survey, SmallFieldsPass)
{
    for (unsigned q : {3u, 4u, 5u, 7u}) {
        const auto r = survey_star_flocks(q);
        EXPECT_TRUE(r.pass()) << r.to_text();
        EXPECT_EQ(r.to_json(), survey_star_flocks(q, {.jobs = 3}).to_json());
    }
    EXPECT_THROW(survey_star_flocks(11), SurveyError);
    EXPECT_THROW(survey_star_flocks(6), SurveyError);
}

TEST(Survey, Nobi)
{
    for (unsigned q : {2u, 3u, 4u, 5u})
        EXPECT_TRUE(nobi_suite(q).pass());
    EXPECT_THROW(nobi_suite(9), SurveyError);
}

TEST(Survey, Ball)
{
    for (unsigned q : {4u, 5u, 7u})
        EXPECT_TRUE(ball_suite(q).pass());
}

TEST(Survey, CountsAndProperties)
{
    EXPECT_TRUE(counts_suite().pass());
    const auto r = property_suite(17, 2);
    EXPECT_TRUE(r.pass()) << r.to_text();
    EXPECT_EQ(r.to_json(), property_suite(17, 1).to_json());
}
