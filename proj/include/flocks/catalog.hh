#pragma once

// Named flock families and the verification suites built on them.

#include <flocks/blocking.hh>
#include <flocks/equiv.hh>
#include <flocks/linpoly.hh>
#include <flocks/report.hh>

namespace flocks {

class CatalogError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// F(t, k(t^(p^e) - c t), 0); c must not be a (p^e - 1)-th power.
Flock kantor_knuth(const Field & field, unsigned e, Elem k, Elem c);

/// F(t, k1(Tr(t / k2) - c t), 0) with Tr the relative trace onto GF(p^e);
/// c must differ from Tr(b / k2) / b for every nonzero b.
Flock holder_megyesi(const Field & field, unsigned e, Elem k1, Elem k2, Elem c);

/// F(t, t^((q+1)/2), 0), q odd.
Flock triangle_flock(const Field & field);
/// F(t, tr(t), 0), q even.
Flock triad_flock(const Field & field);

/// Union of the lines through (0,0,1) with the given points at infinity,
/// minus (0,0,1) itself. (0,1,0) stands for the line x = 0.
PointSet2 punctured_lines(const Field & field, const std::vector<Point2> & directions);

/// Number of nondegenerate conics contained in s; requires (0,0,1) not in s.
std::size_t conics_inside(const Field & field, const PointSet2 & s);

/// sigma = p^i; m ranges over the given values, k over 0..(q-1)/2.
SuiteReport example1_check(const Field & field, unsigned i, const std::vector<Elem> & ms);

SuiteReport lunelli_sce_suite();
SuiteReport kantor_knuth_suite();
SuiteReport holder_megyesi_suite();
SuiteReport triangle_flock_suite(unsigned q);
/// Works in GF(q^2); a nonzero control A in GF(q) must fail.
SuiteReport triangle_special_case(unsigned q);
SuiteReport triad_flock_suite(unsigned q);
/// Works in GF(2^(2e)).
SuiteReport triad_special_case(unsigned e);

/// The width-at-star-point bound used as a cross-check in the suites:
/// checks N(g) + w_S(star point) <= q + 1 for a flock F(t, g, 0).
bool direction_width_bound(const Flock & fl, const PointSet2 & cone);

} // namespace flocks
