#include <flocks/equiv.hh>
#include <flocks/linpoly.hh>

#include <algorithm>

namespace flocks {

namespace {

Matrix frobenius(const Field & field, Matrix m, unsigned j)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = field.frobenius(m(r, c), j);
    return m;
}

Vec3 frobenius(const Field & field, Vec3 v, unsigned j)
{
    for (auto & x : v)
        x = field.frobenius(x, j);
    return v;
}

Vec3 mul(const Field & field, const Matrix & m, const Vec3 & v)
{
    Vec3 out{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            out[r] = field.add(out[r], field.mul(m(r, c), v[c]));
    return out;
}

Matrix inverse_or_throw(const Field & field, const Matrix & m)
{
    auto inv = inverse(field, m);
    if (! inv)
        throw EquivError("singular matrix in group element");
    return *inv;
}

// Matrix taking plane coefficients v^sigma to the image coefficients.
Matrix plane_matrix(const Field & field, const StabElement & g)
{
    auto t = transpose(inverse_or_throw(field, g.M));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            t(r, c) = field.mul(g.d, t(r, c));
    return t;
}

} // namespace

StabElement identity_element()
{
    return {};
}

void validate(const Field & field, const StabElement & g)
{
    if (g.M.rows() != 3 || g.M.cols() != 3)
        throw EquivError("group element matrix must be 3x3");
    for (auto x : g.M.values())
        if (x >= field.q())
            throw EquivError("matrix entry is not a field element");
    if (g.d == 0 || g.d >= field.q())
        throw EquivError("scalar d must be a nonzero field element");
    if (g.j >= field.n())
        throw EquivError("automorphism exponent out of range");
    inverse_or_throw(field, g.M);
}

StabElement compose(const Field & field, const StabElement & g2, const StabElement & g1)
{
    return {multiply(field, g2.M, frobenius(field, g1.M, g2.j)), field.mul(g2.d, field.frobenius(g1.d, g2.j)),
        (g1.j + g2.j) % field.n()};
}

StabElement inverse(const Field & field, const StabElement & g)
{
    const unsigned j = (field.n() - g.j) % field.n();
    return {inverse_or_throw(field, frobenius(field, g.M, j)), field.inv(field.frobenius(g.d, j)), j};
}

StabElement random_element(const Field & field, std::mt19937_64 & rng)
{
    std::uniform_int_distribution<Elem> any(0, field.q() - 1), nonzero(1, field.q() - 1);
    std::uniform_int_distribution<unsigned> aut(0, field.n() - 1);
    StabElement g;
    do {
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                g.M(r, c) = any(rng);
    } while (rank(field, g.M) < 3);
    g.d = nonzero(rng);
    g.j = aut(rng);
    return g;
}

Point2 apply(const Field & field, const StabElement & g, const Point2 & p)
{
    return Point2::from(field, mul(field, g.M, frobenius(field, p.coords(), g.j)));
}

PointSet2 apply(const Field & field, const StabElement & g, const PointSet2 & s)
{
    std::vector<Point2> out;
    for (const auto & p : s)
        out.push_back(apply(field, g, p));
    return PointSet2{std::move(out)};
}

Vec3 apply_plane(const Field & field, const StabElement & g, const Vec3 & v)
{
    return mul(field, plane_matrix(field, g), frobenius(field, v, g.j));
}

Flock apply(const StabElement & g, const Flock & fl)
{
    const auto & F = fl.field();
    validate(F, g);
    const auto pm = plane_matrix(F, g);
    std::vector<Vec3> planes;
    for (Elem t = 1; t < fl.q(); ++t)
        planes.push_back(mul(F, pm, frobenius(F, fl.coefficients(t), g.j)));
    std::sort(planes.begin(), planes.end());

    std::vector<Elem> f(fl.q(), 0), gg(fl.q(), 0), h(fl.q(), 0);
    for (std::size_t i = 0; i < planes.size(); ++i) {
        f[i + 1] = planes[i][0];
        gg[i + 1] = planes[i][1];
        h[i + 1] = planes[i][2];
    }
    return Flock::make(F, std::move(f), std::move(gg), std::move(h));
}

Fingerprint fingerprint(const Flock & fl)
{
    const auto & F = fl.field();
    Fingerprint fp;
    const auto cone = critical_cone(fl);
    const auto w = width(F, cone);
    fp.carrier_size = cone.size();
    fp.width = w.minimum;
    fp.width_profile = w.per_point;
    std::sort(fp.width_profile.begin(), fp.width_profile.end());

    const auto star = star_analysis(fl);
    fp.linear = is_linear(fl).linear;
    fp.star = star.is_star;
    fp.proper = star.is_proper;
    fp.properly_bilinear = is_bilinear(fl).properly_bilinear;
    for (const auto & p : star.star_points)
        fp.star_widths.push_back(w.per_point[index_of(p, fl.q())]);
    std::sort(fp.star_widths.begin(), fp.star_widths.end());
    if (fp.star && ! cone.empty())
        fp.directions = direction_count(F, normalize_star_form(fl).flock.g()).N;
    return fp;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::inequivalent: return "inequivalent";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

// Searches for an invertible linear map L and automorphism j with
// L(v^sigma) running over b's planes as v runs over a's planes. Such an L is
// d M^{-T} for the element (M, d, j); d = 1 is used for the witness.
std::optional<StabElement> find_linear_map(const Flock & a, const Flock & b)
{
    const auto & F = a.field();
    const auto target = b.plane_set();

    for (unsigned j = 0; j < F.n(); ++j) {
        std::vector<Vec3> src;
        for (const auto & v : a.plane_set())
            src.push_back(frobenius(F, v, j));

        // basis of span(src) drawn from src itself
        std::vector<Vec3> basis;
        for (const auto & v : src) {
            Matrix m(basis.size() + 1, 3);
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t k = 0; k < 3; ++k)
                    m(i, k) = basis[i][k];
            for (std::size_t k = 0; k < 3; ++k)
                m(basis.size(), k) = v[k];
            if (rank(F, m) == basis.size() + 1)
                basis.push_back(v);
        }
        const std::size_t r = basis.size();

        // coordinates of every source vector in the basis
        Matrix bm(3, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < 3; ++k)
                bm(k, i) = basis[i][k];
        std::vector<std::vector<Elem>> coords;
        for (const auto & v : src) {
            Matrix aug(3, r + 1);
            for (std::size_t k = 0; k < 3; ++k) {
                for (std::size_t i = 0; i < r; ++i)
                    aug(k, i) = bm(k, i);
                aug(k, r) = v[k];
            }
            const auto e = rref(F, aug);
            std::vector<Elem> c(r, 0);
            for (std::size_t i = 0; i < e.rank(); ++i)
                c[e.pivots[i]] = e.reduced(i, r);
            coords.push_back(std::move(c));
        }

        std::vector<std::size_t> choice(r, 0);
        auto independent = [&](std::size_t upto) {
            Matrix m(upto, 3);
            for (std::size_t i = 0; i < upto; ++i)
                for (std::size_t k = 0; k < 3; ++k)
                    m(i, k) = target[choice[i]][k];
            return rank(F, m) == upto;
        };

        // depth-first over images of the basis vectors
        std::size_t depth = 0;
        bool descend = true;
        while (true) {
            if (descend) {
                if (depth == r) {
                    bool ok = true;
                    for (const auto & c : coords) {
                        Vec3 img{};
                        for (std::size_t i = 0; i < r; ++i)
                            for (std::size_t k = 0; k < 3; ++k)
                                img[k] = F.add(img[k], F.mul(c[i], target[choice[i]][k]));
                        if (! std::binary_search(target.begin(), target.end(), img)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        // extend to an invertible L: complete both bases with unit vectors
                        std::vector<Vec3> from = basis, to;
                        for (std::size_t i = 0; i < r; ++i)
                            to.push_back(target[choice[i]]);
                        auto complete = [&](std::vector<Vec3> & vs) {
                            for (std::size_t u = 0; u < 3 && vs.size() < 3; ++u) {
                                Vec3 e{};
                                e[u] = 1;
                                Matrix m(vs.size() + 1, 3);
                                for (std::size_t i = 0; i < vs.size(); ++i)
                                    for (std::size_t k = 0; k < 3; ++k)
                                        m(i, k) = vs[i][k];
                                for (std::size_t k = 0; k < 3; ++k)
                                    m(vs.size(), k) = e[k];
                                if (rank(F, m) == vs.size() + 1)
                                    vs.push_back(e);
                            }
                        };
                        complete(from);
                        complete(to);
                        Matrix fm(3, 3), tm(3, 3);
                        for (std::size_t i = 0; i < 3; ++i)
                            for (std::size_t k = 0; k < 3; ++k) {
                                fm(k, i) = from[i][k];
                                tm(k, i) = to[i][k];
                            }
                        const auto L = multiply(F, tm, inverse_or_throw(F, fm));
                        return StabElement{transpose(inverse_or_throw(F, L)), 1, j};
                    }
                    descend = false;
                    continue;
                }
                choice[depth] = 0;
            }
            else {
                if (depth == 0)
                    break;
                --depth;
                ++choice[depth];
            }
            while (choice[depth] < target.size() && (target[choice[depth]] == Vec3{0, 0, 0} || ! independent(depth + 1)))
                ++choice[depth];
            if (choice[depth] == target.size()) {
                descend = false;
                continue;
            }
            ++depth;
            descend = true;
        }
    }
    return std::nullopt;
}

} // namespace

Equivalence are_equivalent(const Flock & a, const Flock & b, EquivMode mode)
{
    if (! (a.field() == b.field()))
        throw EquivError("flocks over different fields");
    if (mode == EquivMode::exhaustive && a.q() > exhaustive_limit)
        throw EquivError("exhaustive equivalence is limited to q <= 8");

    Equivalence out;
    if (fingerprint(a) != fingerprint(b)) {
        out.verdict = Verdict::inequivalent;
        return out;
    }
    if (mode == EquivMode::fingerprint)
        return out;
    out.witness = find_linear_map(a, b);
    out.verdict = out.witness ? Verdict::equivalent : Verdict::inequivalent;
    return out;
}

StarForm normalize_star_form(const Flock & fl)
{
    const auto & F = fl.field();
    const auto star = star_analysis(fl);
    if (! star.is_star)
        throw EquivError("not a star flock");
    const auto cone = critical_cone(fl);
    if (cone.empty())
        throw EquivError("critical cone is empty");

    const Vec3 P = cone.points().front().coords();
    const Vec3 Q = star.star_points.front().coords();
    Vec3 R{};
    for (std::size_t u = 0; u < 3; ++u) {
        R = Vec3{};
        R[u] = 1;
        if (dot(F, cross(F, P, Q), R) != 0)
            break;
    }

    // M^{-1} has columns P, R, Q, so the image coefficients are (P.v, R.v, Q.v)
    Matrix minv(3, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        minv(k, 0) = P[k];
        minv(k, 1) = R[k];
        minv(k, 2) = Q[k];
    }
    StabElement g{inverse_or_throw(F, minv), 1, 0};

    std::vector<Elem> f(fl.q(), 0), gg(fl.q(), 0);
    for (Elem t = 0; t < fl.q(); ++t) {
        const auto v = fl.coefficients(t);
        const Elem s = dot(F, P, v);
        f[s] = s;
        gg[s] = dot(F, R, v);
    }
    return {Flock::make(F, std::move(f), std::move(gg), std::vector<Elem>(fl.q(), 0)), std::move(g)};
}

} // namespace flocks
