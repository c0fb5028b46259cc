#include <flocks/blocking.hh>
#include <flocks/linpoly.hh>

#include <algorithm>

namespace flocks {

BlockingInfo is_blocking_set(const Field & field, const PointSet2 & s)
{
    const unsigned q = field.q();
    BlockingInfo out;
    out.blocking = true;
    bool contains_line = false;
    for (const auto & l : lines2(field)) {
        std::size_t c = 0;
        for (const auto & p : s)
            if (incident(field, p, l))
                ++c;
        if (c == 0)
            out.blocking = false;
        if (c == q + 1)
            contains_line = true;
        if (c > out.max_collinear) {
            out.max_collinear = c;
            out.max_line = l;
        }
    }
    out.proper = out.blocking && ! contains_line;
    out.redei = out.blocking && s.size() == q + out.max_collinear;
    return out;
}

PointSet2 directions_of(const Field & field, const std::vector<Elem> & g)
{
    std::vector<Point2> pts;
    for (auto c : direction_count(field, g).slopes)
        pts.push_back(Point2::from(field, {1, c, 0}));
    return PointSet2{std::move(pts)};
}

namespace {

void require_normal_form(const Flock & fl)
{
    for (Elem t = 0; t < fl.q(); ++t)
        if (fl.f()[t] != t || fl.h()[t] != 0)
            throw BlockingError("flock is not in the normal form F(t, g, 0)");
}

} // namespace

DualScene dual_scene(const Flock & fl, const PointSet2 & s)
{
    require_normal_form(fl);
    const auto & F = fl.field();
    DualScene d{.D_F = {},
        .D_G = {},
        .m = meet(F, Plane3::from(F, {0, 0, 0, 1}), Plane3::from(F, {0, 0, 1, 0})),
        .M = {},
        .G_trace = {},
        .N = 0,
        .disjoint = true};

    for (Elem t = 0; t < fl.q(); ++t)
        d.D_F.push_back(dualize(F, fl.plane(t)));

    std::vector<Point3> trace;
    for (const auto & p : s) {
        // planes through the generator V P dualize to points of this line
        const Plane3 w0 = Plane3::from(F, {0, 0, 0, 1});
        const Plane3 h = Plane3::from(F, {p[0], p[1], p[2], 0});
        const auto line = meet(F, w0, h);
        d.D_G.push_back(line);
        if (p[0] == 0 && p[1] == 0)
            for (const auto & x : d.m.points(F))
                trace.push_back(x);
        else
            trace.push_back(Point3::from(F, {p[1], F.neg(p[0]), 0, 0}));
    }
    std::sort(trace.begin(), trace.end());
    trace.erase(std::unique(trace.begin(), trace.end()), trace.end());
    d.G_trace = std::move(trace);

    for (const auto & p : directions_of(F, fl.g()))
        d.M.push_back(Point3::from(F, {p[0], p[1], 0, 0}));
    d.N = static_cast<unsigned>(d.M.size());
    for (const auto & x : d.M)
        if (std::binary_search(d.G_trace.begin(), d.G_trace.end(), x))
            d.disjoint = false;
    return d;
}

BlockingSet redei_from_star_flock(const Flock & fl)
{
    require_normal_form(fl);
    const auto & F = fl.field();
    if (is_linear(fl).linear)
        throw BlockingError("linear flock: D_F is collinear");
    auto pts = directions_of(F, fl.g()).points();
    for (Elem t = 0; t < fl.q(); ++t)
        pts.push_back(Point2::from(F, {t, fl.g()[t], 1}));
    return {PointSet2{std::move(pts)}, Line2::from(F, {0, 0, 1})};
}

namespace {

bool closure(const Field & field, const PointSet2 & s, const std::array<Line2, 3> & sides)
{
    std::vector<std::pair<Point2, int>> on_side;
    for (const auto & p : s) {
        int which = -1, hits = 0;
        for (int i = 0; i < 3; ++i)
            if (incident(field, p, sides[i])) {
                which = i;
                ++hits;
            }
        if (hits == 0)
            return false;
        if (hits == 1)
            on_side.emplace_back(p, which);
    }
    for (std::size_t a = 0; a < on_side.size(); ++a)
        for (std::size_t b = a + 1; b < on_side.size(); ++b) {
            const int i = on_side[a].second, j = on_side[b].second;
            if (i == j)
                continue;
            const auto l = join(field, on_side[a].first, on_side[b].first);
            const auto x = meet(field, l, sides[3 - i - j]);
            if (! s.contains(x))
                return false;
        }
    return true;
}

} // namespace

BlockingSet projective_triangle(const Field & field)
{
    const unsigned q = field.q();
    if (q % 2 == 0)
        throw BlockingError("the projective triangle needs odd q");
    std::vector<Point2> pts;
    for (Elem x = 0; x < q; ++x)
        pts.push_back(Point2::from(field, {x, field.pow(x, (q + 1) / 2), 1}));
    for (Elem z = 1; z < q; ++z)
        if (! field.is_square(z))
            pts.push_back(Point2::from(field, {1, field.div(field.add(1, z), field.sub(1, z)), 0}));
    pts.push_back(Point2::from(field, {1, 1, 0}));
    pts.push_back(Point2::from(field, {1, field.neg(1), 0}));
    PointSet2 s{std::move(pts)};
    const auto info = is_blocking_set(field, s);
    return {std::move(s), info.max_line};
}

bool triangle_property(const Field & field, const PointSet2 & s)
{
    return closure(field, s,
        {Line2::from(field, {1, field.neg(1), 0}), Line2::from(field, {1, 1, 0}), Line2::from(field, {0, 0, 1})});
}

BlockingSet projective_triad(const Field & field)
{
    const unsigned q = field.q();
    if (field.p() != 2)
        throw BlockingError("the projective triad needs even q");
    std::vector<Point2> pts;
    for (Elem x = 0; x < q; ++x)
        pts.push_back(Point2::from(field, {x, field.trace(x), 1}));
    for (Elem a = 1; a < q; ++a)
        if (field.trace(a) == 1)
            pts.push_back(Point2::from(field, {1, field.inv(a), 0}));
    pts.push_back(Point2::from(field, {1, 0, 0}));
    PointSet2 s{std::move(pts)};
    const auto info = is_blocking_set(field, s);
    return {std::move(s), info.max_line};
}

bool triad_property(const Field & field, const PointSet2 & s)
{
    const std::array<Line2, 3> sides{
        Line2::from(field, {0, 1, 0}), Line2::from(field, {0, 1, field.neg(1)}), Line2::from(field, {0, 0, 1})};
    const auto centre = Point2::from(field, {1, 0, 0});
    for (const auto & l : sides)
        if (! incident(field, centre, l))
            return false;
    return closure(field, s, sides);
}

} // namespace flocks
