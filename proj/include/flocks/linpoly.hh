#pragma once

// p^e-linearized polynomials sum_i a_i t^(p^(ie)), direction counts of
// graphs {(t, g(t))}, and the per-instance check of Ball's trichotomy.

#include <flocks/gf.hh>

#include <optional>
#include <string>
#include <vector>

namespace flocks {

class LinpolyError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

struct LinearizedPoly
{
    Field field;
    unsigned e = 1;
    std::vector<Elem> coeffs; // n/e entries, coefficient of t^(p^(ie)) at i

    /// Validates e | n and the coefficient count.
    static LinearizedPoly make(Field field, unsigned e, std::vector<Elem> coeffs);

    unsigned k() const { return field.n() / e; }
    Elem eval(Elem t) const;
    std::vector<Elem> table() const;
    /// Index of the last nonzero coefficient, none for the zero polynomial.
    std::optional<unsigned> leading_index() const;
    bool monic() const;

    friend bool operator==(const LinearizedPoly & a, const LinearizedPoly & b)
    {
        return a.field == b.field && a.e == b.e && a.coeffs == b.coeffs;
    }
};

/// Kernel is {0}. Cross-checked against bijectivity of the full table.
bool is_permutation(const LinearizedPoly & lp);

/// a o b, written with step gcd(a.e, b.e).
LinearizedPoly compose(const LinearizedPoly & a, const LinearizedPoly & b);

/// s^(k(k-1)/2) prod_{i=1}^{k-1} (s^i - 1).
unsigned long long betti_mathieu_count(unsigned long long s, unsigned k);

/// All p^e-linearized permutations, optionally only those whose leading
/// nonzero coefficient is 1, in ascending order of sum a_i q^i.
std::vector<LinearizedPoly> enumerate_linearized_perms(const Field & field, unsigned e, bool monic_only);

/// True iff the table is additive and commutes with multiplication by GF(p^e).
bool is_linear_over(const Field & field, const std::vector<Elem> & table, unsigned e);

/// Largest e | n for which the table is GF(p^e)-linear; none if not additive.
std::optional<unsigned> detect_linearized(const Field & field, const std::vector<Elem> & table);

/// The coefficients of a GF(p^e)-linear table as a p^e-linearized polynomial.
LinearizedPoly interpolate_linearized(const Field & field, const std::vector<Elem> & table, unsigned e);

struct Directions
{
    unsigned N = 0;
    std::vector<Elem> slopes; // ascending
};

/// Slopes (g(t) - g(s)) / (t - s) over all pairs t != s.
Directions direction_count(const Field & field, const std::vector<Elem> & table);

struct DirectionProfile
{
    unsigned N = 0;
    unsigned e = 0;      // lines meeting the graph in >= 2 points meet it in multiples of p^e
    std::string ball_case; // "i", "ii" or "iii"
    bool bound_holds = false;
    bool linearized_ok = true; // p^e > 2 requires GF(p^e)-linearity
};

/// Throws LinpolyError unless the table is a permutation fixing 0.
DirectionProfile ball_trichotomy(const Field & field, const std::vector<Elem> & table);

} // namespace flocks
