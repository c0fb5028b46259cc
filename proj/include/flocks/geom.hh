#pragma once

// Points, lines and planes of PG(2,q) and PG(3,q).
//
// Every subspace is kept in a canonical form so that equality of values is
// equality of subspaces: points and hyperplanes are scaled so their first
// nonzero coordinate is 1, lines of PG(3,q) are 2x4 reduced row-echelon
// matrices. All enumerations are lexicographic on these canonical forms.

#include <flocks/gf.hh>

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace flocks {

class GeometryError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

using Vec3 = std::array<Elem, 3>;
using Vec4 = std::array<Elem, 4>;

struct PointTag
{
};
struct HyperplaneTag
{
};

template <std::size_t D, typename Tag>
class Homogeneous
{
  public:
    using Coords = std::array<Elem, D>;

    static Homogeneous from(const Field & field, Coords raw)
    {
        std::size_t lead = 0;
        while (lead < D && raw[lead] == 0)
            ++lead;
        if (lead == D)
            throw GeometryError("homogeneous coordinates are all zero");
        if (raw[lead] != 1) {
            const Elem s = field.inv(raw[lead]);
            for (auto & x : raw)
                x = field.mul(s, x);
        }
        return Homogeneous{raw};
    }

    const Coords & coords() const { return c_; }
    Elem operator[](std::size_t i) const { return c_[i]; }

    friend bool operator==(const Homogeneous &, const Homogeneous &) = default;
    friend auto operator<=>(const Homogeneous &, const Homogeneous &) = default;

  private:
    explicit Homogeneous(Coords c) : c_(c) {}
    Coords c_;
};

using Point2 = Homogeneous<3, PointTag>;
using Line2 = Homogeneous<3, HyperplaneTag>;
using Point3 = Homogeneous<4, PointTag>;
using Plane3 = Homogeneous<4, HyperplaneTag>;

/// A line of PG(3,q) as the reduced row-echelon basis of its 2-dim subspace.
class Line3
{
  public:
    static Line3 through(const Field & field, const Point3 & a, const Point3 & b);
    /// Line spanned by the (independent) rows; canonicalized.
    static Line3 from_rows(const Field & field, const Vec4 & r0, const Vec4 & r1);

    const std::array<Vec4, 2> & rows() const { return rows_; }
    bool contains(const Field & field, const Point3 & p) const;
    std::vector<Point3> points(const Field & field) const;

    friend bool operator==(const Line3 &, const Line3 &) = default;
    friend auto operator<=>(const Line3 &, const Line3 &) = default;

  private:
    explicit Line3(std::array<Vec4, 2> rows) : rows_(rows) {}
    std::array<Vec4, 2> rows_;
};

/// Sorted, duplicate-free set of points of PG(2,q).
class PointSet2
{
  public:
    PointSet2() = default;
    explicit PointSet2(std::vector<Point2> pts);

    bool contains(const Point2 & p) const;
    void insert(const Point2 & p);
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }
    const std::vector<Point2> & points() const { return pts_; }

    friend bool operator==(const PointSet2 &, const PointSet2 &) = default;

    friend PointSet2 operator|(const PointSet2 & a, const PointSet2 & b);
    friend PointSet2 operator&(const PointSet2 & a, const PointSet2 & b);
    friend PointSet2 operator-(const PointSet2 & a, const PointSet2 & b);
    friend PointSet2 operator^(const PointSet2 & a, const PointSet2 & b);
    bool is_subset_of(const PointSet2 & other) const;

  private:
    std::vector<Point2> pts_;
};

Elem dot(const Field & field, const Vec3 & a, const Vec3 & b);
Elem dot(const Field & field, const Vec4 & a, const Vec4 & b);
Vec3 cross(const Field & field, const Vec3 & a, const Vec3 & b);

bool incident(const Field & field, const Point2 & p, const Line2 & l);
bool incident(const Field & field, const Point3 & p, const Plane3 & h);
bool incident(const Field & field, const Point3 & p, const Line3 & l);

/// Line through two distinct points of PG(2,q).
Line2 join(const Field & field, const Point2 & a, const Point2 & b);
/// Common point of two distinct lines of PG(2,q).
Point2 meet(const Field & field, const Line2 & a, const Line2 & b);

Line3 join(const Field & field, const Point3 & a, const Point3 & b);
Line3 meet(const Field & field, const Plane3 & a, const Plane3 & b);
/// Plane spanned by a line and a point off it.
Plane3 join(const Field & field, const Line3 & l, const Point3 & p);
/// Point where a line crosses a plane not containing it.
Point3 meet(const Field & field, const Line3 & l, const Plane3 & h);
bool contains(const Field & field, const Plane3 & h, const Line3 & l);
/// True iff the two lines share a point (equivalently are coplanar).
bool lines_meet(const Field & field, const Line3 & a, const Line3 & b);

/// The duality (x,y,z,w) <-> [x,y,z,-w].
Plane3 dualize(const Field & field, const Point3 & p);
Point3 dualize(const Field & field, const Plane3 & h);

/// (a,b,c) of the plane x3 = 0 as the point (a,b,c,0) of PG(3,q).
Point3 lift(const Field & field, const Point2 & p);

std::vector<Point2> points2(const Field & field);
std::vector<Line2> lines2(const Field & field);
std::vector<Point3> points3(const Field & field);
std::vector<Plane3> planes3(const Field & field);
std::vector<Line3> lines3(const Field & field);

/// Position of a normalized PG(2,q) vector in the lexicographic enumeration.
std::size_t plane_index(const Vec3 & normalized, unsigned q);
inline std::size_t index_of(const Point2 & p, unsigned q) { return plane_index(p.coords(), q); }
inline std::size_t index_of(const Line2 & l, unsigned q) { return plane_index(l.coords(), q); }
inline std::size_t plane_size(unsigned q) { return std::size_t{q} * q + q + 1; }

std::vector<Point2> points_on(const Field & field, const Line2 & l);
bool collinear(const Field & field, const Point2 & a, const Point2 & b, const Point2 & c);

/// No three points collinear.
bool is_arc(const Field & field, const PointSet2 & s);
/// An arc of q+2 points; only possible for even q.
bool is_hyperoval(const Field & field, const PointSet2 & s);

} // namespace flocks
