#pragma once

// The stabilizer of V = (0,0,0,1) and x3 = 0 in PGammaL(4,q), acting on flocks.
//
// An element (M, d, j) maps a point x to diag(M, d) x^sigma with sigma = p^j,
// so carrier points move by P -> M P^sigma and a flock plane with
// coefficients v = (f, g, h) moves to d M^{-T} v^sigma.

#include <flocks/flock.hh>
#include <flocks/linalg.hh>

#include <optional>
#include <random>

namespace flocks {

class EquivError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

struct StabElement
{
    Matrix M = Matrix::identity(3);
    Elem d = 1;
    unsigned j = 0;

    friend bool operator==(const StabElement &, const StabElement &) = default;
};

StabElement identity_element();
/// Throws EquivError for singular M, zero d or j out of range.
void validate(const Field & field, const StabElement & g);
/// The element acting as g2 after g1.
StabElement compose(const Field & field, const StabElement & g2, const StabElement & g1);
StabElement inverse(const Field & field, const StabElement & g);
StabElement random_element(const Field & field, std::mt19937_64 & rng);

Point2 apply(const Field & field, const StabElement & g, const Point2 & p);
PointSet2 apply(const Field & field, const StabElement & g, const PointSet2 & s);
/// Coefficients of the image plane, rescaled to the form [A,B,C,-1].
Vec3 apply_plane(const Field & field, const StabElement & g, const Vec3 & v);
/// Image flock: t = 0 stays on x3 = 0, the other planes get t = 1, 2, ...
/// in lexicographic order of their coefficients.
Flock apply(const StabElement & g, const Flock & fl);

struct Fingerprint
{
    std::size_t carrier_size = 0;
    unsigned width = 0;
    std::vector<unsigned> width_profile; // sorted w_S(P) over every point
    std::vector<unsigned> star_widths;   // sorted w_S at the star points
    bool linear = false, star = false, proper = false, properly_bilinear = false;
    std::optional<unsigned> directions; // N of the star normal form

    friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

Fingerprint fingerprint(const Flock & fl);

enum class EquivMode { fingerprint, exhaustive };
enum class Verdict { equivalent, inequivalent, inconclusive };
std::string to_string(Verdict v);

struct Equivalence
{
    Verdict verdict = Verdict::inconclusive;
    std::optional<StabElement> witness; // maps the first flock onto the second
};

inline constexpr unsigned exhaustive_limit = 8;

/// Fingerprint mode never claims equivalence. Exhaustive mode is exact and
/// throws EquivError for q > exhaustive_limit.
Equivalence are_equivalent(const Flock & a, const Flock & b, EquivMode mode);

struct StarForm
{
    Flock flock;         // F(t, g, 0)
    StabElement element; // apply(element, input) has the same planes as flock
};

/// Throws EquivError unless fl is a star flock with a nonempty critical cone.
StarForm normalize_star_form(const Flock & fl);

} // namespace flocks
