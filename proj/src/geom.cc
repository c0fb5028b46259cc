#include <flocks/geom.hh>
#include <flocks/linalg.hh>

#include <algorithm>

namespace flocks {

namespace {

Matrix rows_matrix(std::initializer_list<Vec4> rows)
{
    Matrix m(rows.size(), 4);
    std::size_t i = 0;
    for (const auto & r : rows) {
        for (std::size_t k = 0; k < 4; ++k)
            m(i, k) = r[k];
        ++i;
    }
    return m;
}

Vec4 row4(const Matrix & m, std::size_t i)
{
    return {m(i, 0), m(i, 1), m(i, 2), m(i, 3)};
}

} // namespace

Line3 Line3::from_rows(const Field & field, const Vec4 & r0, const Vec4 & r1)
{
    const auto e = rref(field, rows_matrix({r0, r1}));
    if (e.rank() != 2)
        throw GeometryError("points do not span a line");
    return Line3{{row4(e.reduced, 0), row4(e.reduced, 1)}};
}

Line3 Line3::through(const Field & field, const Point3 & a, const Point3 & b)
{
    return from_rows(field, a.coords(), b.coords());
}

bool Line3::contains(const Field & field, const Point3 & p) const
{
    return rank(field, rows_matrix({rows_[0], rows_[1], p.coords()})) == 2;
}

std::vector<Point3> Line3::points(const Field & field) const
{
    std::vector<Point3> out;
    out.push_back(Point3::from(field, rows_[1]));
    for (Elem s = 0; s < field.q(); ++s) {
        Vec4 v;
        for (std::size_t k = 0; k < 4; ++k)
            v[k] = field.add(rows_[0][k], field.mul(s, rows_[1][k]));
        out.push_back(Point3::from(field, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointSet2::PointSet2(std::vector<Point2> pts) : pts_(std::move(pts))
{
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet2::contains(const Point2 & p) const
{
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

void PointSet2::insert(const Point2 & p)
{
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it == pts_.end() || *it != p)
        pts_.insert(it, p);
}

bool PointSet2::is_subset_of(const PointSet2 & other) const
{
    return std::includes(other.pts_.begin(), other.pts_.end(), pts_.begin(), pts_.end());
}

PointSet2 operator|(const PointSet2 & a, const PointSet2 & b)
{
    std::vector<Point2> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return PointSet2{std::move(out)};
}

PointSet2 operator&(const PointSet2 & a, const PointSet2 & b)
{
    std::vector<Point2> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return PointSet2{std::move(out)};
}

PointSet2 operator-(const PointSet2 & a, const PointSet2 & b)
{
    std::vector<Point2> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return PointSet2{std::move(out)};
}

PointSet2 operator^(const PointSet2 & a, const PointSet2 & b)
{
    std::vector<Point2> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return PointSet2{std::move(out)};
}

Elem dot(const Field & field, const Vec3 & a, const Vec3 & b)
{
    return field.add(field.add(field.mul(a[0], b[0]), field.mul(a[1], b[1])), field.mul(a[2], b[2]));
}

Elem dot(const Field & field, const Vec4 & a, const Vec4 & b)
{
    Elem s = 0;
    for (std::size_t i = 0; i < 4; ++i)
        s = field.add(s, field.mul(a[i], b[i]));
    return s;
}

Vec3 cross(const Field & field, const Vec3 & a, const Vec3 & b)
{
    return {field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1])), field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2])),
        field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0]))};
}

bool incident(const Field & field, const Point2 & p, const Line2 & l)
{
    return dot(field, p.coords(), l.coords()) == 0;
}

bool incident(const Field & field, const Point3 & p, const Plane3 & h)
{
    return dot(field, p.coords(), h.coords()) == 0;
}

bool incident(const Field & field, const Point3 & p, const Line3 & l)
{
    return l.contains(field, p);
}

Line2 join(const Field & field, const Point2 & a, const Point2 & b)
{
    if (a == b)
        throw GeometryError("join of a point with itself");
    return Line2::from(field, cross(field, a.coords(), b.coords()));
}

Point2 meet(const Field & field, const Line2 & a, const Line2 & b)
{
    if (a == b)
        throw GeometryError("meet of a line with itself");
    return Point2::from(field, cross(field, a.coords(), b.coords()));
}

Line3 join(const Field & field, const Point3 & a, const Point3 & b)
{
    if (a == b)
        throw GeometryError("join of a point with itself");
    return Line3::through(field, a, b);
}

Line3 meet(const Field & field, const Plane3 & a, const Plane3 & b)
{
    if (a == b)
        throw GeometryError("meet of a plane with itself");
    const auto ns = nullspace(field, rows_matrix({a.coords(), b.coords()}));
    return Line3::from_rows(field, row4(ns, 0), row4(ns, 1));
}

Plane3 join(const Field & field, const Line3 & l, const Point3 & p)
{
    if (l.contains(field, p))
        throw GeometryError("point lies on the line; no unique plane");
    const auto ns = nullspace(field, rows_matrix({l.rows()[0], l.rows()[1], p.coords()}));
    return Plane3::from(field, row4(ns, 0));
}

Point3 meet(const Field & field, const Line3 & l, const Plane3 & h)
{
    const Elem u0 = dot(field, l.rows()[0], h.coords());
    const Elem u1 = dot(field, l.rows()[1], h.coords());
    if (u0 == 0 && u1 == 0)
        throw GeometryError("line lies in the plane");
    Vec4 v;
    for (std::size_t k = 0; k < 4; ++k)
        v[k] = field.sub(field.mul(u1, l.rows()[0][k]), field.mul(u0, l.rows()[1][k]));
    return Point3::from(field, v);
}

bool contains(const Field & field, const Plane3 & h, const Line3 & l)
{
    return dot(field, l.rows()[0], h.coords()) == 0 && dot(field, l.rows()[1], h.coords()) == 0;
}

bool lines_meet(const Field & field, const Line3 & a, const Line3 & b)
{
    return rank(field, rows_matrix({a.rows()[0], a.rows()[1], b.rows()[0], b.rows()[1]})) <= 3;
}

Plane3 dualize(const Field & field, const Point3 & p)
{
    auto c = p.coords();
    c[3] = field.neg(c[3]);
    return Plane3::from(field, c);
}

Point3 dualize(const Field & field, const Plane3 & h)
{
    auto c = h.coords();
    c[3] = field.neg(c[3]);
    return Point3::from(field, c);
}

Point3 lift(const Field & field, const Point2 & p)
{
    return Point3::from(field, {p[0], p[1], p[2], 0});
}

namespace {

template <std::size_t D>
std::vector<std::array<Elem, D>> normalized_vectors(unsigned q)
{
    // lexicographic: leading 1 at position i, arbitrary entries after it
    std::vector<std::array<Elem, D>> out;
    for (std::size_t lead = D; lead-- > 0;) {
        const std::size_t free = D - 1 - lead;
        std::size_t count = 1;
        for (std::size_t i = 0; i < free; ++i)
            count *= q;
        for (std::size_t v = 0; v < count; ++v) {
            std::array<Elem, D> c{};
            c[lead] = 1;
            std::size_t w = v;
            for (std::size_t i = D; i-- > lead + 1;) {
                c[i] = static_cast<Elem>(w % q);
                w /= q;
            }
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::vector<Point2> points2(const Field & field)
{
    std::vector<Point2> out;
    for (const auto & c : normalized_vectors<3>(field.q()))
        out.push_back(Point2::from(field, c));
    return out;
}

std::vector<Line2> lines2(const Field & field)
{
    std::vector<Line2> out;
    for (const auto & c : normalized_vectors<3>(field.q()))
        out.push_back(Line2::from(field, c));
    return out;
}

std::vector<Point3> points3(const Field & field)
{
    std::vector<Point3> out;
    for (const auto & c : normalized_vectors<4>(field.q()))
        out.push_back(Point3::from(field, c));
    return out;
}

std::vector<Plane3> planes3(const Field & field)
{
    std::vector<Plane3> out;
    for (const auto & c : normalized_vectors<4>(field.q()))
        out.push_back(Plane3::from(field, c));
    return out;
}

std::vector<Line3> lines3(const Field & field)
{
    const unsigned q = field.q();
    std::vector<Line3> out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            // free slots: row0 at columns > i except j; row1 at columns > j
            std::vector<std::pair<int, std::size_t>> slots;
            for (std::size_t c = i + 1; c < 4; ++c)
                if (c != j)
                    slots.emplace_back(0, c);
            for (std::size_t c = j + 1; c < 4; ++c)
                slots.emplace_back(1, c);
            std::size_t count = 1;
            for (std::size_t s = 0; s < slots.size(); ++s)
                count *= q;
            for (std::size_t v = 0; v < count; ++v) {
                Vec4 r0{}, r1{};
                r0[i] = 1;
                r1[j] = 1;
                std::size_t w = v;
                for (const auto & [row, col] : slots) {
                    (row == 0 ? r0 : r1)[col] = static_cast<Elem>(w % q);
                    w /= q;
                }
                out.push_back(Line3::from_rows(field, r0, r1));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t plane_index(const Vec3 & c, unsigned q)
{
    if (c[0] == 1)
        return 1 + q + std::size_t{c[1]} * q + c[2];
    if (c[1] == 1)
        return 1 + std::size_t{c[2]};
    return 0;
}

std::vector<Point2> points_on(const Field & field, const Line2 & l)
{
    std::vector<Point2> out;
    for (const auto & p : points2(field))
        if (incident(field, p, l))
            out.push_back(p);
    return out;
}

bool collinear(const Field & field, const Point2 & a, const Point2 & b, const Point2 & c)
{
    return dot(field, cross(field, a.coords(), b.coords()), c.coords()) == 0;
}

bool is_arc(const Field & field, const PointSet2 & s)
{
    const auto & p = s.points();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const Vec3 l = cross(field, p[i].coords(), p[j].coords());
            for (std::size_t k = j + 1; k < p.size(); ++k)
                if (dot(field, l, p[k].coords()) == 0)
                    return false;
        }
    return true;
}

bool is_hyperoval(const Field & field, const PointSet2 & s)
{
    return field.p() == 2 && s.size() == field.q() + 2 && is_arc(field, s);
}

} // namespace flocks
