#pragma once

// Exhaustive surveys over star flocks in normal form F(t, g, 0).
//
// Work is cut into fixed chunks of the search space and merged in chunk
// order, so reports do not depend on the number of workers.

#include <flocks/report.hh>

#include <cstdint>
#include <vector>

namespace flocks {

class SurveyError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

struct SurveyOptions
{
    unsigned jobs = 1;
    bool linearized_only = false;
};

/// Full mode for q in {3,4,5,7,8,9}: every permutation g fixing 0.
/// Linearized mode for q in {16, 27}.
SuiteReport survey_star_flocks(unsigned q, const SurveyOptions & opts = {});

/// Every function g with g(0) = 0, q <= 8: no properly bilinear F(t, g, 0)
/// has a wide critical cone.
SuiteReport nobi_suite(unsigned q, unsigned jobs = 1);

/// Every permutation g fixing 0 falls in exactly one case of Ball's
/// trichotomy with its bound, q <= 9.
SuiteReport ball_suite(unsigned q, unsigned jobs = 1);

/// Enumeration counts against the closed form, and the q = 27 partition.
SuiteReport counts_suite();

/// Field axioms, duality, group action and fingerprint invariance, and
/// worker-count independence of survey reports.
SuiteReport property_suite(std::uint64_t seed, unsigned jobs = 1);

/// The i-th permutation of 0..n-1 in lexicographic order.
std::vector<unsigned> unrank_permutation(unsigned n, std::uint64_t rank);

} // namespace flocks
