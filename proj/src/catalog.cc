#include <flocks/catalog.hh>
#include <flocks/io.hh>

#include <algorithm>
#include <set>

namespace flocks {

namespace {

bool is_power(const Field & field, Elem c, unsigned long long exponent)
{
    for (Elem b = 1; b < field.q(); ++b)
        if (field.pow(b, static_cast<long long>(exponent)) == c)
            return true;
    return false;
}

unsigned ipow(unsigned b, unsigned e)
{
    unsigned r = 1;
    while (e--)
        r *= b;
    return r;
}

std::optional<Point3> common_point(const Field & field, const Line3 & a, const Line3 & b)
{
    for (const auto & p : a.points(field))
        if (b.contains(field, p))
            return p;
    return std::nullopt;
}

Point2 star_point2(const Field & field)
{
    return Point2::from(field, {0, 0, 1});
}

// Lines through (0,0,1) as their points at infinity: (1,c,0) and (0,1,0).
std::vector<Point2> directions_at_infinity(const Field & field)
{
    std::vector<Point2> out;
    out.push_back(Point2::from(field, {0, 1, 0}));
    for (Elem c = 0; c < field.q(); ++c)
        out.push_back(Point2::from(field, {1, c, 0}));
    return out;
}

void check_wider_cones(SuiteReport & r, const Field & field, const PointSet2 & cone)
{
    std::size_t extensions = 0, wide = 0;
    for (const auto & d : directions_at_infinity(field)) {
        if (cone.contains(d))
            continue;
        ++extensions;
        if (classify_cone(field, cone | punctured_lines(field, {d})).wide())
            ++wide;
    }
    r.check("every cone with one more line through the star point is wide", extensions, wide);
}

} // namespace

Flock kantor_knuth(const Field & field, unsigned e, Elem k, Elem c)
{
    if (e == 0 || field.n() % e != 0)
        throw CatalogError("e must divide n");
    const unsigned pe = ipow(field.p(), e);
    if (pe <= 2)
        throw CatalogError("the Kantor-Knuth family needs p^e > 2");
    if (k == 0)
        throw CatalogError("k must be nonzero");
    if (is_power(field, c, pe - 1))
        throw CatalogError("c is a (p^e - 1)-th power; the polynomial is not a permutation");
    std::vector<Elem> g(field.q());
    for (Elem t = 0; t < field.q(); ++t)
        g[t] = field.mul(k, field.sub(field.frobenius(t, e), field.mul(c, t)));
    if (! is_permutation(field, g))
        throw std::logic_error("Kantor-Knuth polynomial is not a permutation");
    auto fl = star_normal_flock(field, std::move(g));
    if (direction_count(field, fl.g()).N != (field.q() - 1) / (pe - 1))
        throw std::logic_error("Kantor-Knuth direction count mismatch");
    return fl;
}

Flock holder_megyesi(const Field & field, unsigned e, Elem k1, Elem k2, Elem c)
{
    if (e == 0 || field.n() % e != 0)
        throw CatalogError("e must divide n");
    if (ipow(field.p(), e) <= 2)
        throw CatalogError("the Holder-Megyesi family needs p^e > 2");
    if (k1 == 0 || k2 == 0)
        throw CatalogError("k1 and k2 must be nonzero");
    for (Elem b = 1; b < field.q(); ++b)
        if (c == field.div(field.trace(field.div(b, k2), e), b))
            throw CatalogError("inadmissible c; the polynomial is not a permutation");
    std::vector<Elem> g(field.q());
    for (Elem t = 0; t < field.q(); ++t)
        g[t] = field.mul(k1, field.sub(field.trace(field.div(t, k2), e), field.mul(c, t)));
    if (! is_permutation(field, g))
        throw std::logic_error("Holder-Megyesi polynomial is not a permutation");
    auto fl = star_normal_flock(field, std::move(g));
    if (direction_count(field, fl.g()).N != ipow(field.p(), field.n() - e) + 1)
        throw std::logic_error("Holder-Megyesi direction count mismatch");
    return fl;
}

Flock triangle_flock(const Field & field)
{
    if (field.p() == 2)
        throw CatalogError("the triangle flock needs odd q");
    std::vector<Elem> g(field.q());
    for (Elem t = 0; t < field.q(); ++t)
        g[t] = field.pow(t, (field.q() + 1) / 2);
    return star_normal_flock(field, std::move(g));
}

Flock triad_flock(const Field & field)
{
    if (field.p() != 2)
        throw CatalogError("the triad flock needs even q");
    std::vector<Elem> g(field.q());
    for (Elem t = 0; t < field.q(); ++t)
        g[t] = field.trace(t);
    return star_normal_flock(field, std::move(g));
}

PointSet2 punctured_lines(const Field & field, const std::vector<Point2> & directions)
{
    std::vector<Point2> pts;
    for (const auto & d : directions) {
        if (d[2] != 0)
            throw CatalogError("direction must lie on z = 0");
        for (Elem z = 0; z < field.q(); ++z)
            pts.push_back(Point2::from(field, {d[0], d[1], z}));
    }
    return PointSet2{std::move(pts)};
}

std::size_t conics_inside(const Field & field, const PointSet2 & s)
{
    const unsigned q = field.q();
    if (s.contains(star_point2(field)))
        throw CatalogError("conic search needs (0,0,1) outside the set");

    // a conic inside s misses (0,0,1), so its z^2 coefficient can be taken as 1
    struct Mono
    {
        Elem xx, yy, zz, xy, xz, yz;
    };
    auto monomials = [&](const Point2 & p) {
        return Mono{field.mul(p[0], p[0]), field.mul(p[1], p[1]), field.mul(p[2], p[2]), field.mul(p[0], p[1]),
            field.mul(p[0], p[2]), field.mul(p[1], p[2])};
    };
    std::vector<Mono> outside, inside;
    std::vector<Point2> inside_pts;
    for (const auto & p : points2(field)) {
        if (s.contains(p)) {
            inside.push_back(monomials(p));
            inside_pts.push_back(p);
        }
        else
            outside.push_back(monomials(p));
    }

    std::size_t found = 0;
    std::vector<Point2> zeros;
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b)
            for (Elem d = 0; d < q; ++d)
                for (Elem e = 0; e < q; ++e)
                    for (Elem f = 0; f < q; ++f) {
                        auto value = [&](const Mono & m) {
                            Elem v = field.add(field.mul(a, m.xx), field.mul(b, m.yy));
                            v = field.add(v, m.zz);
                            v = field.add(v, field.mul(d, m.xy));
                            v = field.add(v, field.mul(e, m.xz));
                            return field.add(v, field.mul(f, m.yz));
                        };
                        bool hits_outside = false;
                        for (const auto & m : outside)
                            if (value(m) == 0) {
                                hits_outside = true;
                                break;
                            }
                        if (hits_outside)
                            continue;
                        zeros.clear();
                        for (std::size_t i = 0; i < inside.size(); ++i)
                            if (value(inside[i]) == 0)
                                zeros.push_back(inside_pts[i]);
                        if (zeros.size() != q + 1)
                            continue;
                        // q+1 zeros off a line: a nondegenerate conic
                        bool collinear_all = true;
                        for (std::size_t i = 2; i < zeros.size(); ++i)
                            if (! collinear(field, zeros[0], zeros[1], zeros[i]))
                                collinear_all = false;
                        if (! collinear_all)
                            ++found;
                    }
    return found;
}

bool direction_width_bound(const Flock & fl, const PointSet2 & cone)
{
    const auto N = direction_count(fl.field(), fl.g()).N;
    return N + point_width(fl.field(), cone, star_point2(fl.field())) <= fl.q() + 1;
}

SuiteReport example1_check(const Field & field, unsigned i, const std::vector<Elem> & ms)
{
    const unsigned q = field.q();
    if (field.p() == 2)
        throw CatalogError("the Kantor-Knuth example needs odd q");
    if (i < 1 || i >= field.n())
        throw CatalogError("sigma = p^i needs 1 <= i <= n - 1");
    SuiteReport r("example1");

    std::vector<Elem> g(q);
    for (Elem t = 0; t < q; ++t)
        g[t] = field.frobenius(t, i);
    const auto fl = star_normal_flock(field, g);
    const auto cone = critical_cone(fl);
    r.require("F(t, t^sigma, 0) is a proper star flock", star_analysis(fl).is_proper);

    // no t != 0 with f t^sigma + x t = 0, scanned directly
    auto eq12 = [&](Elem x, Elem fx) {
        for (Elem t = 1; t < q; ++t)
            if (field.add(field.mul(fx, g[t]), field.mul(x, t)) == 0)
                return false;
        return true;
    };

    std::size_t agreements = 0, comparisons = 0;
    for (auto m : ms) {
        if (m == 0 || m >= q)
            throw CatalogError("m must be a nonzero field element");
        const bool nonsquare = ! field.is_square(m);
        bool all_in = cone.contains(Point2::from(field, {1, 0, 0})) && cone.contains(Point2::from(field, {0, 1, 0}));
        for (Elem x = 1; x < q; ++x) {
            const Elem fx = field.neg(field.div(m, x));
            const auto p = Point2::from(field, {x, fx, 1});
            const bool in = cone.contains(p);
            all_in = all_in && in;
            ++comparisons;
            agreements += eq12(x, fx) == permutation_test(fl, x, fx, 1);
        }
        r.check("conic xy = -m in carrier iff m nonsquare, m = " + std::to_string(m), nonsquare, all_in);

        if (nonsquare) {
            std::set<std::vector<Elem>> curves;
            bool family_in = true;
            for (unsigned k = 0; k <= (q - 1) / 2; ++k) {
                std::vector<Elem> curve;
                for (Elem x = 1; x < q; ++x) {
                    const Elem fx = field.neg(field.div(m, field.pow(x, (2 * k + 1) % (q - 1))));
                    curve.push_back(fx);
                    ++comparisons;
                    agreements += eq12(x, fx) == permutation_test(fl, x, fx, 1);
                    family_in = family_in && cone.contains(Point2::from(field, {x, fx, 1}));
                }
                curves.insert(std::move(curve));
            }
            r.require("curves (x, -m/x^(2k+1), 1) in carrier for all k, m = " + std::to_string(m), family_in,
                {{"distinct_curves", curves.size()}, {"k_values", (q - 1) / 2 + 1}, {"all_in", family_in}});
        }
    }
    r.check("kernel criterion agrees with the permutation test", comparisons, agreements);
    r.require("N(g) + w_S(star point) <= q + 1", direction_width_bound(fl, cone));
    return r;
}

SuiteReport lunelli_sce_suite()
{
    SuiteReport r("lunelli-sce");
    const auto F = Field::make(2, 4);
    const Elem lambda = F.primitive();
    auto L = [&](unsigned i) { return F.exp(i); };
    r.check("lambda^4 = lambda + 1", F.add(lambda, 1), F.pow(lambda, 4));

    auto poly = [&](const std::vector<std::pair<unsigned, Elem>> & terms) {
        std::vector<Elem> v(16);
        for (Elem x = 0; x < 16; ++x) {
            Elem s = 0;
            for (const auto & [deg, c] : terms)
                s = F.add(s, F.mul(c, F.pow(x, deg)));
            v[x] = s;
        }
        return v;
    };
    const auto f1 = poly({{14, L(13)}, {12, L(3)}, {10, L(6)}, {8, 1}, {6, L(6)}, {4, L(3)}, {2, L(13)}});
    const auto f2 = poly({{14, L(4)}, {12, L(10)}, {10, L(11)}, {8, L(11)}, {6, 1}, {4, L(2)}});

    auto hyperoval_of = [&](const std::vector<Elem> & f) {
        std::vector<Point2> pts{Point2::from(F, {0, 1, 0}), Point2::from(F, {1, 0, 0})};
        for (Elem x = 0; x < 16; ++x)
            pts.push_back(Point2::from(F, {x, f[x], 1}));
        return PointSet2{std::move(pts)};
    };
    const auto H1 = hyperoval_of(f1), H2 = hyperoval_of(f2);
    r.check("|H1|", 18, H1.size());
    r.check("|H2|", 18, H2.size());
    r.require("H1 is a hyperoval", is_hyperoval(F, H1));
    r.require("H2 is a hyperoval", is_hyperoval(F, H2));

    const auto meet12 = H1 & H2;
    r.check("|H1 & H2|", 9, meet12.size());

    const std::vector<Point2> listed{Point2::from(F, {0, 0, 1}), Point2::from(F, {1, 1, 1}),
        Point2::from(F, {L(10), L(13), 1}), Point2::from(F, {L(8), L(2), 1}), Point2::from(F, {L(14), L(5), 1}),
        Point2::from(F, {L(13), L(10), 1})};
    json missing = json::array();
    for (const auto & p : listed)
        if (! meet12.contains(p))
            missing.push_back(to_json(p));
    r.check("listed points missing from H1 & H2", json::array(), missing);

    std::set<Elem> slopes, cubes;
    for (std::size_t i = 1; i < listed.size(); ++i)
        slopes.insert(F.div(listed[i][1], listed[i][0]));
    for (unsigned i = 0; i <= 4; ++i)
        cubes.insert(L(3 * i));
    r.check("slopes from (0,0,1) to the other five points", json(cubes), json(slopes));

    const auto sym = H1 ^ H2;
    r.check("|H1 ^ H2|", 18, sym.size());
    r.require("H1 ^ H2 is a hyperoval", is_hyperoval(F, sym));

    std::size_t on_slope_lines = 0;
    for (const auto & p : sym)
        for (auto c : cubes)
            if (F.mul(c, p[0]) == p[1] && ! (p[0] == 0 && p[1] == 0))
                ++on_slope_lines;
    r.check("points of H1 ^ H2 on the five slope lines", 0, on_slope_lines);

    std::vector<Elem> g(16);
    for (Elem t = 0; t < 16; ++t)
        g[t] = F.frobenius(t, 2);
    const auto fl = star_normal_flock(F, g);
    const auto cone = critical_cone(fl);
    r.check("carrier size of F(t, t^4, 0)", 192, cone.size());
    r.require("H1 ^ H2 lies in the carrier of F(t, t^4, 0)", sym.is_subset_of(cone));
    const auto cls = classify_cone(F, cone);
    r.check("critical cone class", "thick", to_string(cls.tag));
    r.check("conics inside the carrier", 0, conics_inside(F, cone));
    r.require("N(g) + w_S(star point) <= q + 1", direction_width_bound(fl, cone));
    return r;
}

SuiteReport kantor_knuth_suite()
{
    SuiteReport r("kantor-knuth");
    struct Case
    {
        unsigned p, n, e;
        Elem c;
        unsigned N;
    };
    const auto F27 = Field::make(3, 3);
    // a nonsquare, hence not a (3-1)-th power
    const std::vector<Case> cases{{3, 2, 1, 0, 4}, {2, 4, 2, 0, 5}, {3, 3, 1, F27.primitive(), 13}};
    for (const auto & cs : cases) {
        const auto F = Field::make(cs.p, cs.n);
        const std::string tag = "q=" + std::to_string(F.q()) + " e=" + std::to_string(cs.e);
        const auto fl = kantor_knuth(F, cs.e, 1, cs.c);
        r.check(tag + ": N", cs.N, direction_count(F, fl.g()).N);
        r.require(tag + ": proper star flock", star_analysis(fl).is_proper);
        const auto cone = critical_cone(fl);
        const auto cls = classify_cone(F, cone);
        r.require(tag + ": critical cone is wide", cls.wide(), to_json(cls));
        r.require(tag + ": N(g) + w_S(star point) <= q + 1", direction_width_bound(fl, cone));
        const auto dual = dual_scene(fl, cone);
        r.require(tag + ": directions avoid the trace of D_G", dual.disjoint);
        const auto variant = star_variant(fl, 1, 1);
        r.require(tag + ": F(t, g, -(t + g)) is a star flock", star_analysis(variant).is_proper);
        r.require(tag + ": variant has the same fingerprint", fingerprint(variant) == fingerprint(fl));
        const auto normal = normalize_star_form(variant);
        const auto lp = detect_linearized(F, normal.flock.g());
        r.require(tag + ": normal form of the variant is linearized", lp.has_value() && *lp % cs.e == 0);
    }
    const auto F9 = Field::make(3, 2);
    bool rejected = false;
    try {
        kantor_knuth(F9, 1, 1, 1);
    }
    catch (const CatalogError &) {
        rejected = true;
    }
    r.require("c = 1 = 1^(p^e-1) is rejected", rejected);
    std::vector<Elem> t3(9);
    for (Elem t = 0; t < 9; ++t)
        t3[t] = F9.pow(t, 3);
    r.require("q=9 e=1 k=1 c=0 is F(t, t^3, 0)", same_planes(kantor_knuth(F9, 1, 1, 0), star_normal_flock(F9, t3)));
    return r;
}

SuiteReport holder_megyesi_suite()
{
    SuiteReport r("holder-megyesi");
    for (auto [p, n] : {std::pair{3u, 3u}, std::pair{3u, 2u}}) {
        const auto F = Field::make(p, n);
        const std::string tag = "q=" + std::to_string(F.q());
        std::optional<Elem> c, bad;
        for (Elem x = 0; x < F.q() && ! c; ++x) {
            bool admissible = true;
            for (Elem b = 1; b < F.q(); ++b)
                if (x == F.div(F.trace(b, 1), b))
                    admissible = false;
            if (admissible)
                c = x;
        }
        r.require(tag + ": an admissible c exists", c.has_value());
        if (! c)
            continue;
        const auto fl = holder_megyesi(F, 1, 1, 1, *c);
        r.check(tag + ": N", ipow(p, n - 1) + 1, direction_count(F, fl.g()).N);
        r.require(tag + ": proper star flock", star_analysis(fl).is_proper);
        const auto cone = critical_cone(fl);
        const auto cls = classify_cone(F, cone);
        r.require(tag + ": critical cone is wide", cls.wide(), to_json(cls));
        r.require(tag + ": N(g) + w_S(star point) <= q + 1", direction_width_bound(fl, cone));
        bool rejected = false;
        try {
            holder_megyesi(F, 1, 1, 1, F.trace(1, 1));
        }
        catch (const CatalogError &) {
            rejected = true;
        }
        r.require(tag + ": c = Tr(1) is rejected", rejected);
    }
    return r;
}

SuiteReport triangle_flock_suite(unsigned q)
{
    const auto F = Field::of_order(q);
    if (q % 2 == 0)
        throw CatalogError("the triangle suite needs odd q");
    SuiteReport r("triangle q=" + std::to_string(q));
    const auto fl = triangle_flock(F);
    const auto cone = critical_cone(fl);

    std::vector<Point2> dirs;
    std::size_t affine_lines = 0;
    for (Elem c = 0; c < q; ++c) {
        const Elem den = F.add(1, c);
        if (den == 0)
            continue;
        const Elem ratio = F.div(F.sub(1, c), den);
        if (ratio != 0 && F.is_square(ratio)) {
            dirs.push_back(Point2::from(F, {1, c, 0}));
            ++affine_lines;
        }
    }
    const bool minus_one_square = F.is_square(F.neg(1));
    if (minus_one_square)
        dirs.push_back(Point2::from(F, {0, 1, 0}));
    r.require("carrier is the punctured lines y = cx with (1-c)/(1+c) a nonzero square",
        cone == punctured_lines(F, dirs));
    r.check("number of lines y = cx", minus_one_square ? (q - 3) / 2 : (q - 1) / 2, affine_lines);
    r.check("(0,1,0) in carrier", q % 4 == 1, cone.contains(Point2::from(F, {0, 1, 0})));

    const auto cls = classify_cone(F, cone);
    r.check("W_S", (q - 1) / 2, cls.width);
    r.require("critical cone is thin", cls.thin(), to_json(cls));
    r.require("proper star flock", star_analysis(fl).is_proper);
    const auto bl = is_bilinear(fl);
    r.require("properly bilinear", bl.properly_bilinear);
    std::optional<Point3> meet_point;
    if (bl.carrier_lines.size() == 2)
        meet_point = common_point(F, bl.carrier_lines[0], bl.carrier_lines[1]);
    r.check("carrier lines meet at the star point", to_json(Point3::from(F, {0, 0, 1, 0})),
        meet_point ? to_json(*meet_point) : json(nullptr));
    check_wider_cones(r, F, cone);

    const auto tri = projective_triangle(F);
    r.check("triangle size", 3 * (q + 1) / 2, tri.points.size());
    const auto info = is_blocking_set(F, tri.points);
    r.require("triangle is a blocking set", info.blocking && info.proper);
    r.check("Redei parameter", (q + 3) / 2, info.max_collinear);
    r.require("triangle is of Redei type", info.redei);
    r.require("triangle property", triangle_property(F, tri.points));
    r.require("D_F with its directions is the triangle", redei_from_star_flock(fl).points == tri.points);
    r.require("N(g) + w_S(star point) <= q + 1", direction_width_bound(fl, cone));
    r.require("directions avoid the trace of D_G", dual_scene(fl, cone).disjoint);
    return r;
}

SuiteReport triangle_special_case(unsigned q)
{
    const auto pp = prime_power(q);
    if (! pp || pp->first == 2)
        throw CatalogError("the triangle special case needs an odd prime power");
    const auto F = Field::make(pp->first, 2 * pp->second);
    const unsigned Q = F.q(), h = pp->second;
    SuiteReport r("triangle-special q=" + std::to_string(q));

    auto curve_check = [&](Elem A) {
        std::vector<Elem> g(Q);
        for (Elem t = 0; t < Q; ++t)
            g[t] = F.mul(A, F.pow(t, (Q + 1) / 2));
        const auto fl = star_normal_flock(F, g);
        const auto cone = critical_cone(fl);
        std::size_t in = 0;
        for (Elem x = 1; x < Q; ++x)
            in += cone.contains(Point2::from(F, {x, F.inv(F.frobenius(x, h)), 1}));
        return std::tuple{fl, cone, in};
    };

    const Elem A = F.exp((q + 1) / 2);
    r.check("A^q = -A", F.neg(A), F.frobenius(A, h));
    r.require("A is not in GF(q)", ! F.in_subfield(A, h));
    const auto [fl, cone, in] = curve_check(A);
    r.check("affine points of x^q y = z^(q+1) in carrier", Q - 1, in);
    r.require("(1,0,0) in carrier", cone.contains(Point2::from(F, {1, 0, 0})));
    r.check("(0,1,0) in carrier iff g is a permutation", is_permutation(F, fl.g()),
        cone.contains(Point2::from(F, {0, 1, 0})));
    r.require("proper star flock", star_analysis(fl).is_proper);
    r.require("directions avoid the trace of D_G", dual_scene(fl, cone).disjoint);

    const auto [cfl, ccone, cin] = curve_check(1);
    r.require("control A = 1 in GF(q): some curve point is missing", cin < Q - 1, {{"in_carrier", cin}});
    return r;
}

SuiteReport triad_flock_suite(unsigned q)
{
    const auto F = Field::of_order(q);
    if (F.p() != 2)
        throw CatalogError("the triad suite needs even q");
    SuiteReport r("triad q=" + std::to_string(q));
    const auto fl = triad_flock(F);
    const auto cone = critical_cone(fl);

    std::vector<Point2> dirs;
    for (Elem c = 0; c < q; ++c)
        if (F.trace(c) == 0)
            dirs.push_back(Point2::from(F, {1, c, 0}));
    r.require("carrier is the punctured lines y = cx with tr(c) = 0", cone == punctured_lines(F, dirs));
    r.require("(0,1,0) not in carrier", ! cone.contains(Point2::from(F, {0, 1, 0})));
    const auto cls = classify_cone(F, cone);
    r.check("W_S", q / 2, cls.width);
    r.require("critical cone is thin", cls.thin(), to_json(cls));
    if (q >= 4) {
        r.require("proper star flock", star_analysis(fl).is_proper);
        const auto bl = is_bilinear(fl);
        r.require("properly bilinear", bl.properly_bilinear);
        std::optional<Point3> meet_point;
        if (bl.carrier_lines.size() == 2)
            meet_point = common_point(F, bl.carrier_lines[0], bl.carrier_lines[1]);
        r.check("carrier lines meet at the star point", to_json(Point3::from(F, {0, 0, 1, 0})),
            meet_point ? to_json(*meet_point) : json(nullptr));
        r.require("D_F with its directions is the triad", redei_from_star_flock(fl).points == projective_triad(F).points);
    }
    check_wider_cones(r, F, cone);

    const auto triad = projective_triad(F);
    r.check("triad size", (3 * q + 2) / 2, triad.points.size());
    const auto info = is_blocking_set(F, triad.points);
    r.require("triad is a blocking set", info.blocking && info.proper);
    r.require("triad is of Redei type", info.redei);
    r.require("triad property with concurrent sides", triad_property(F, triad.points));
    r.require("N(g) + w_S(star point) <= q + 1", direction_width_bound(fl, cone));
    r.require("directions avoid the trace of D_G", dual_scene(fl, cone).disjoint);
    return r;
}

SuiteReport triad_special_case(unsigned e)
{
    if (e == 0)
        throw CatalogError("e must be positive");
    const auto F = Field::make(2, 2 * e);
    const unsigned Q = F.q(), q = 1u << e;
    SuiteReport r("triad-special q=" + std::to_string(q));
    const auto fl = triad_flock(F);
    const auto cone = critical_cone(fl);
    std::size_t in = 0, slope_ok = 0;
    for (Elem x = 1; x < Q; ++x) {
        const Elem y = F.inv(F.frobenius(x, e));
        in += cone.contains(Point2::from(F, {x, y, 1}));
        const Elem c = F.div(y, x);
        slope_ok += F.in_subfield(c, e) && F.trace(c) == 0;
    }
    r.check("affine points of x^q y = z^(q+1) in carrier", Q - 1, in);
    r.check("slopes y/x lie in GF(q) with trace 0", Q - 1, slope_ok);
    r.require("(1,0,0) in carrier", cone.contains(Point2::from(F, {1, 0, 0})));
    r.require("(0,1,0) not in carrier", ! cone.contains(Point2::from(F, {0, 1, 0})));
    return r;
}

} // namespace flocks
