#include <flocks/flock.hh>
#include <flocks/linalg.hh>

#include <algorithm>
#include <cstdint>
#include <map>

namespace flocks {

namespace {

// Reusable scratch bitset for permutation checks in hot loops.
class SeenSet
{
  public:
    explicit SeenSet(unsigned q) : words_((q + 63) / 64)
    {
        auto & b = buffer();
        if (b.size() < words_)
            b.resize(words_);
        std::fill_n(b.begin(), words_, 0);
    }

    // false if v was already present
    bool insert(Elem v)
    {
        auto & w = buffer()[v >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (w & bit)
            return false;
        w |= bit;
        return true;
    }

  private:
    static std::vector<std::uint64_t> & buffer()
    {
        thread_local std::vector<std::uint64_t> b;
        return b;
    }
    std::size_t words_;
};

Matrix value_matrix(const Flock & fl)
{
    Matrix m(fl.q(), 3);
    for (Elem t = 0; t < fl.q(); ++t) {
        m(t, 0) = fl.f()[t];
        m(t, 1) = fl.g()[t];
        m(t, 2) = fl.h()[t];
    }
    return m;
}

} // namespace

Flock Flock::make(Field field, std::vector<Elem> f, std::vector<Elem> g, std::vector<Elem> h)
{
    const unsigned q = field.q();
    if (f.size() != q || g.size() != q || h.size() != q)
        throw FlockError("coordinate tables must have exactly q entries");
    for (const auto * tab : {&f, &g, &h})
        for (auto v : *tab)
            if (v >= q)
                throw FlockError("table value is not a field element");
    if (f[0] != 0 || g[0] != 0 || h[0] != 0)
        throw FlockError("coordinate functions must vanish at t = 0");

    std::vector<Vec3> planes;
    planes.reserve(q);
    for (Elem t = 0; t < q; ++t)
        planes.push_back({f[t], g[t], h[t]});
    std::sort(planes.begin(), planes.end());
    if (std::adjacent_find(planes.begin(), planes.end()) != planes.end())
        throw FlockError("flock planes are not distinct");

    return Flock{std::move(field), std::move(f), std::move(g), std::move(h)};
}

Plane3 Flock::plane(Elem t) const
{
    return Plane3::from(field_, {f_[t], g_[t], h_[t], field_.neg(1)});
}

std::vector<Vec3> Flock::plane_set() const
{
    std::vector<Vec3> out;
    out.reserve(q());
    for (Elem t = 0; t < q(); ++t)
        out.push_back(coefficients(t));
    std::sort(out.begin(), out.end());
    return out;
}

bool same_planes(const Flock & a, const Flock & b)
{
    return a.field() == b.field() && a.plane_set() == b.plane_set();
}

Flock star_normal_flock(const Field & field, std::vector<Elem> g)
{
    std::vector<Elem> f(field.q());
    for (Elem t = 0; t < field.q(); ++t)
        f[t] = t;
    return Flock::make(field, std::move(f), std::move(g), std::vector<Elem>(field.q(), 0));
}

Flock star_variant(const Flock & base, Elem a, Elem b)
{
    const auto & F = base.field();
    std::vector<Elem> h(base.q());
    for (Elem t = 0; t < base.q(); ++t)
        h[t] = F.neg(F.add(F.mul(a, base.f()[t]), F.mul(b, base.g()[t])));
    return Flock::make(F, base.f(), base.g(), std::move(h));
}

bool is_permutation(const Field & field, const std::vector<Elem> & values)
{
    if (values.size() != field.q())
        return false;
    SeenSet seen(field.q());
    for (auto v : values)
        if (v >= field.q() || ! seen.insert(v))
            return false;
    return true;
}

bool permutation_test(const Flock & fl, Elem a, Elem b, Elem c)
{
    const auto & F = fl.field();
    SeenSet seen(fl.q());
    for (Elem t = 0; t < fl.q(); ++t) {
        const Elem v = F.add(F.add(F.mul(a, fl.f()[t]), F.mul(b, fl.g()[t])), F.mul(c, fl.h()[t]));
        if (! seen.insert(v))
            return false;
    }
    return true;
}

PointSet2 critical_cone(const Flock & fl)
{
    std::vector<Point2> pts;
    for (const auto & p : points2(fl.field()))
        if (permutation_test(fl, p[0], p[1], p[2]))
            pts.push_back(p);
    return PointSet2{std::move(pts)};
}

bool is_flock_of(const Flock & fl, const PointSet2 & s)
{
    return std::all_of(s.begin(), s.end(), [&](const Point2 & p) { return permutation_test(fl, p[0], p[1], p[2]); });
}

namespace {

// Counts lines through p meeting s \ {p}, stopping once `cap` is reached.
unsigned lines_through_meeting(const Field & field, const PointSet2 & s, const Point2 & p, unsigned cap)
{
    thread_local std::vector<std::uint32_t> stamp;
    thread_local std::uint32_t epoch = 0;
    const unsigned q = field.q();
    if (stamp.size() < plane_size(q))
        stamp.assign(plane_size(q), 0);
    if (++epoch == 0) {
        std::fill(stamp.begin(), stamp.end(), 0);
        epoch = 1;
    }
    unsigned count = 0;
    for (const auto & x : s) {
        if (x == p)
            continue;
        const auto l = normalize_leading(field, cross(field, p.coords(), x.coords()));
        auto & st = stamp[plane_index(l, q)];
        if (st != epoch) {
            st = epoch;
            if (++count >= cap)
                return count;
        }
    }
    return count;
}

unsigned point_width_capped(const Field & field, const PointSet2 & s, const Point2 & p, unsigned cap)
{
    if (s.empty())
        return 0;
    if (s.size() == 1 && *s.begin() == p)
        return 1;
    return lines_through_meeting(field, s, p, cap);
}

} // namespace

unsigned point_width(const Field & field, const PointSet2 & s, const Point2 & p)
{
    return point_width_capped(field, s, p, field.q() + 2);
}

Width width(const Field & field, const PointSet2 & s)
{
    Width w;
    const auto pts = points2(field);
    w.per_point.resize(pts.size());
    w.minimum = s.empty() ? 0 : field.q() + 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        w.per_point[i] = point_width(field, s, pts[i]);
        w.minimum = std::min(w.minimum, w.per_point[i]);
    }
    return w;
}

bool width_at_least(const Field & field, const PointSet2 & s, unsigned threshold)
{
    if (threshold == 0)
        return true;
    if (s.empty())
        return false;
    // Points lying on few lines of s are the likely minima; try (0,0,1) first.
    const auto pts = points2(field);
    if (point_width_capped(field, s, pts[0], threshold) < threshold)
        return false;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (point_width_capped(field, s, pts[i], threshold) < threshold)
            return false;
    return true;
}

std::string to_string(ConeClass::Tag tag)
{
    switch (tag) {
    case ConeClass::Tag::empty: return "empty";
    case ConeClass::Tag::flat: return "flat";
    case ConeClass::Tag::thin: return "thin";
    case ConeClass::Tag::wide: return "wide";
    case ConeClass::Tag::thick: return "thick";
    }
    return "unknown";
}

ConeClass classify_cone(const Field & field, const PointSet2 & s)
{
    ConeClass c;
    c.size = s.size();
    c.width = width(field, s).minimum;
    if (s.empty())
        c.tag = ConeClass::Tag::empty;
    else if (c.width == 1)
        c.tag = ConeClass::Tag::flat;
    else if (c.width < wide_threshold(field.q()))
        c.tag = ConeClass::Tag::thin;
    else if (s.size() >= field.q() + 1)
        c.tag = ConeClass::Tag::thick;
    else
        c.tag = ConeClass::Tag::wide;
    return c;
}

Linearity is_linear(const Flock & fl)
{
    Linearity out;
    if (rank(fl.field(), value_matrix(fl)) > 1)
        return out;
    out.linear = true;
    Matrix planes(fl.q(), 4);
    const Elem minus_one = fl.field().neg(1);
    for (Elem t = 0; t < fl.q(); ++t) {
        planes(t, 0) = fl.f()[t];
        planes(t, 1) = fl.g()[t];
        planes(t, 2) = fl.h()[t];
        planes(t, 3) = minus_one;
    }
    const auto ns = nullspace(fl.field(), planes);
    out.axis = Line3::from_rows(fl.field(), {ns(0, 0), ns(0, 1), ns(0, 2), ns(0, 3)}, {ns(1, 0), ns(1, 1), ns(1, 2), ns(1, 3)});
    return out;
}

StarAnalysis star_analysis(const Flock & fl)
{
    const auto & F = fl.field();
    StarAnalysis out;
    const auto vm = value_matrix(fl);
    out.rank = rank(F, vm);
    out.is_star = out.rank <= 2;
    out.is_proper = out.rank == 2;
    if (! out.is_star)
        return out;

    const auto ns = nullspace(F, vm);
    if (ns.rows() == 1) {
        out.star_points.push_back(Point2::from(F, {ns(0, 0), ns(0, 1), ns(0, 2)}));
    }
    else {
        // a line of star points: all combinations of the two basis vectors
        const Vec3 u{ns(0, 0), ns(0, 1), ns(0, 2)}, v{ns(1, 0), ns(1, 1), ns(1, 2)};
        out.star_points.push_back(Point2::from(F, v));
        for (Elem s = 0; s < F.q(); ++s)
            out.star_points.push_back(
                Point2::from(F, {F.add(u[0], F.mul(s, v[0])), F.add(u[1], F.mul(s, v[1])), F.add(u[2], F.mul(s, v[2]))}));
        std::sort(out.star_points.begin(), out.star_points.end());
    }
    return out;
}

Bilinearity is_bilinear(const Flock & fl)
{
    const auto & F = fl.field();
    const unsigned q = fl.q();
    const std::size_t words = (q + 63) / 64;
    using Mask = std::vector<std::uint64_t>;

    std::vector<Plane3> planes;
    for (Elem t = 0; t < q; ++t)
        planes.push_back(fl.plane(t));

    std::map<Line3, Mask> carried;
    for (Elem s = 0; s < q; ++s)
        for (Elem t = s + 1; t < q; ++t) {
            auto [it, fresh] = carried.try_emplace(meet(F, planes[s], planes[t]), Mask(words, 0));
            it->second[s / 64] |= std::uint64_t{1} << (s % 64);
            it->second[t / 64] |= std::uint64_t{1} << (t % 64);
        }

    auto popcount = [](const Mask & m) {
        std::size_t c = 0;
        for (auto w : m)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    };

    Bilinearity out;
    for (const auto & [line, mask] : carried)
        if (popcount(mask) == q) {
            out.bilinear = out.degenerate = true;
            out.carrier_lines = {line};
            return out;
        }

    std::vector<std::pair<const Line3 *, const Mask *>> cand;
    for (const auto & [line, mask] : carried)
        cand.emplace_back(&line, &mask);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const auto ci = popcount(*cand[i].second);
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            if (ci + popcount(*cand[j].second) < q)
                continue;
            std::size_t covered = 0;
            for (std::size_t w = 0; w < words; ++w)
                covered += static_cast<std::size_t>(__builtin_popcountll((*cand[i].second)[w] | (*cand[j].second)[w]));
            if (covered == q) {
                out.bilinear = out.properly_bilinear = true;
                out.carrier_lines = {*cand[i].first, *cand[j].first};
                out.lines_meet = lines_meet(F, *cand[i].first, *cand[j].first);
                return out;
            }
        }
    }
    return out;
}

std::vector<LinearAxis> linear_flock_axes(const Field & field, const PointSet2 & s)
{
    const unsigned q = field.q();
    const Point3 vertex = Point3::from(field, {0, 0, 0, 1});
    const Elem minus_one = field.neg(1);
    std::vector<LinearAxis> out;

    for (const auto & line : lines3(field)) {
        if (line.contains(field, vertex))
            continue;
        bool avoids = true;
        for (const auto & p : line.points(field))
            if (s.contains(Point2::from(field, {p[0], p[1], p[2]}))) {
                avoids = false;
                break;
            }
        if (! avoids)
            continue;

        // pencil through the axis, minus <axis, V>, in [A,B,C,-1] form
        const auto through_v = join(field, line, vertex);
        std::vector<Vec3> pencil;
        for (const auto & h : planes3(field)) {
            if (h == through_v || ! contains(field, h, line))
                continue;
            const Elem scale = field.div(minus_one, h[3]);
            pencil.push_back({field.mul(scale, h[0]), field.mul(scale, h[1]), field.mul(scale, h[2])});
        }
        std::sort(pencil.begin(), pencil.end());
        const Vec3 base = pencil.front();

        // x3 -> x3 - (base . x) fixes V and every generator, and moves the
        // base plane onto x3 = 0; the translated coefficients are s * w.
        std::vector<Vec3> shifted;
        for (const auto & v : pencil)
            shifted.push_back({field.sub(v[0], base[0]), field.sub(v[1], base[1]), field.sub(v[2], base[2])});
        Vec3 dir{};
        for (const auto & v : shifted)
            if (v != Vec3{0, 0, 0}) {
                dir = normalize_leading(field, v);
                break;
            }
        std::size_t lead = 0;
        while (dir[lead] == 0)
            ++lead;
        std::vector<Elem> f(q, 0), g(q, 0), h(q, 0);
        for (const auto & v : shifted) {
            const Elem t = v[lead]; // v = t * dir with dir[lead] = 1
            f[t] = v[0];
            g[t] = v[1];
            h[t] = v[2];
        }
        out.push_back({line, Flock::make(field, std::move(f), std::move(g), std::move(h))});
    }
    return out;
}

} // namespace flocks
