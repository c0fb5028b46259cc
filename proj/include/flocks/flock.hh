#pragma once

// Flocks of planes in PG(3,q) and the cones they are flocks of.
//
// Conventions: the vertex is V = (0,0,0,1), the carrier plane is x3 = 0, and
// a flock is given by coordinate functions f, g, h with plane
//   pi_t : f(t) x0 + g(t) x1 + h(t) x2 - x3 = 0,
// where t = 0 is the plane x3 = 0. Tables are indexed by the encoding of t.
// Carrier points (a,b,c,0) are represented by the PG(2,q) point (a,b,c).

#include <flocks/geom.hh>

#include <optional>
#include <string>
#include <vector>

namespace flocks {

class FlockError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

class Flock
{
  public:
    /// Validates f(0) = g(0) = h(0) = 0 and that the q planes are distinct.
    static Flock make(Field field, std::vector<Elem> f, std::vector<Elem> g, std::vector<Elem> h);

    const Field & field() const { return field_; }
    unsigned q() const { return field_.q(); }
    const std::vector<Elem> & f() const { return f_; }
    const std::vector<Elem> & g() const { return g_; }
    const std::vector<Elem> & h() const { return h_; }

    /// (f(t), g(t), h(t)): the plane [f(t), g(t), h(t), -1].
    Vec3 coefficients(Elem t) const { return {f_[t], g_[t], h_[t]}; }
    Plane3 plane(Elem t) const;
    /// Set-level identity: the sorted coefficient triples of all q planes.
    std::vector<Vec3> plane_set() const;

  private:
    Flock(Field field, std::vector<Elem> f, std::vector<Elem> g, std::vector<Elem> h)
        : field_(std::move(field)), f_(std::move(f)), g_(std::move(g)), h_(std::move(h))
    {
    }

    Field field_;
    std::vector<Elem> f_, g_, h_;
};

bool same_planes(const Flock & a, const Flock & b);

/// F(t, g, 0) with f the identity table.
Flock star_normal_flock(const Field & field, std::vector<Elem> g);
/// F(f, g, -(a f + b g)).
Flock star_variant(const Flock & base, Elem a, Elem b);

/// True iff the values form a permutation of GF(q).
bool is_permutation(const Field & field, const std::vector<Elem> & values);

/// t -> a f(t) + b g(t) + c h(t) is a permutation of GF(q).
bool permutation_test(const Flock & fl, Elem a, Elem b, Elem c);

/// Largest carrier for which fl is a flock.
PointSet2 critical_cone(const Flock & fl);

bool is_flock_of(const Flock & fl, const PointSet2 & s);

struct Width
{
    unsigned minimum = 0;
    std::vector<unsigned> per_point; // indexed by index_of(point, q)
};

/// Number of lines through p needed to cover s: lines through p meeting
/// s minus {p}, or 1 when s is exactly {p}. Zero for the empty set.
unsigned point_width(const Field & field, const PointSet2 & s, const Point2 & p);
Width width(const Field & field, const PointSet2 & s);
/// Exact test of W_S >= threshold with early exit.
bool width_at_least(const Field & field, const PointSet2 & s, unsigned threshold);

/// floor((q+2)/2): widths below this are thin.
inline unsigned wide_threshold(unsigned q) { return (q + 2) / 2; }

struct ConeClass
{
    enum class Tag { empty, flat, thin, wide, thick };
    Tag tag = Tag::empty;
    unsigned width = 0;
    std::size_t size = 0;

    bool thin() const { return tag == Tag::flat || tag == Tag::thin; }
    bool wide() const { return tag == Tag::wide || tag == Tag::thick; }
};

std::string to_string(ConeClass::Tag tag);
ConeClass classify_cone(const Field & field, const PointSet2 & s);

struct Linearity
{
    bool linear = false;
    std::optional<Line3> axis; // common line of all planes
};

Linearity is_linear(const Flock & fl);

struct StarAnalysis
{
    bool is_star = false;
    bool is_proper = false;
    std::size_t rank = 0; // rank of the 3 x q value matrix
    std::vector<Point2> star_points; // common points, all in x3 = 0
};

StarAnalysis star_analysis(const Flock & fl);

struct Bilinearity
{
    bool bilinear = false;
    bool degenerate = false; // linear flock: one line already carries every plane
    bool properly_bilinear = false;
    std::vector<Line3> carrier_lines; // 1 line when degenerate, 2 otherwise
    bool lines_meet = false;
};

Bilinearity is_bilinear(const Flock & fl);

struct LinearAxis
{
    Line3 axis;
    Flock flock;
};

/// Lines avoiding the cone over s and V, each with the linear flock of its
/// pencil (minus the plane through V), moved by a transvection fixing every
/// generator so that x3 = 0 is one of its planes.
std::vector<LinearAxis> linear_flock_axes(const Field & field, const PointSet2 & s);

} // namespace flocks
