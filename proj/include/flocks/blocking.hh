#pragma once

// Blocking sets of PG(2,q), the dual picture of a star flock F(t, g, 0), and
// the projective triangle and triad.
//
// Under (x,y,z,w) <-> [x,y,z,-w] the flock planes become the points
// D_F = {(t, g(t), 0, 1)} of Z = 0. Inside Z = 0 we use coordinates (X, Y, W):
// D_F is the graph {(t, g(t), 1)} and m is the line W = 0.

#include <flocks/flock.hh>

#include <optional>

namespace flocks {

class BlockingError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

struct BlockingInfo
{
    bool blocking = false;
    bool proper = false;
    std::size_t max_collinear = 0; // the Redei parameter n
    std::optional<Line2> max_line; // lexicographically first line attaining it
    bool redei = false;            // blocking with |s| = q + n
};

BlockingInfo is_blocking_set(const Field & field, const PointSet2 & s);

struct BlockingSet
{
    PointSet2 points;
    std::optional<Line2> redei_line;
};

/// Points (1, c, 0) for the slopes c of {(t, g(t), 1)}.
PointSet2 directions_of(const Field & field, const std::vector<Elem> & g);

struct DualScene
{
    std::vector<Point3> D_F;      // (t, g(t), 0, 1)
    std::vector<Line3> D_G;       // {W = 0, aX + bY + cZ = 0} for (a,b,c) in s
    Line3 m;                      // Z = W = 0
    std::vector<Point3> M;        // directions (1, c, 0, 0)
    std::vector<Point3> G_trace;  // points where D_G meets m
    unsigned N = 0;
    bool disjoint = false;        // M and G_trace share no point
};

/// fl must have h = 0 and f the identity table.
DualScene dual_scene(const Flock & fl, const PointSet2 & s);

/// D_F together with its directions, as a set of PG(2,q) in (X, Y, W).
/// Throws for linear flocks.
BlockingSet redei_from_star_flock(const Flock & fl);

/// q odd: (x, x^((q+1)/2), 1), (1, (1+z)/(1-z), 0) for nonsquare z, (1, +-1, 0).
BlockingSet projective_triangle(const Field & field);
/// Sides y = x, y = -x, z = 0; joins of points on different sides meet the
/// third side inside the set.
bool triangle_property(const Field & field, const PointSet2 & s);

/// q even: (x, tr(x), 1), (1, 1/a, 0) for tr(a) = 1, and (1, 0, 0).
BlockingSet projective_triad(const Field & field);
/// Sides y = 0, y = z, z = 0 through (1,0,0); same closure condition.
bool triad_property(const Field & field, const PointSet2 & s);

} // namespace flocks
