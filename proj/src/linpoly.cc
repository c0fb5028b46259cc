#include <flocks/linpoly.hh>
#include <flocks/linalg.hh>

#include <algorithm>
#include <numeric>

namespace flocks {

namespace {

// Extends values on the basis x^i (encodings p^i) to the GF(p)-linear map.
std::vector<Elem> extend_from_basis(const Field & field, const std::vector<Elem> & basis_values)
{
    const unsigned q = field.q(), p = field.p();
    std::vector<Elem> out(q, 0);
    for (Elem t = 1; t < q; ++t) {
        Elem step = 1;
        unsigned i = 0;
        while ((t / step) % p == 0) {
            step *= p;
            ++i;
        }
        out[t] = field.add(out[t - step], basis_values[i]);
    }
    return out;
}

std::vector<Elem> basis_values(const Field & field, const std::vector<Elem> & table)
{
    std::vector<Elem> v;
    Elem b = 1;
    for (unsigned i = 0; i < field.n(); ++i, b *= field.p())
        v.push_back(table[b]);
    return v;
}

bool additive(const Field & field, const std::vector<Elem> & table)
{
    return table.size() == field.q() && extend_from_basis(field, basis_values(field, table)) == table;
}

unsigned ipow(unsigned b, unsigned e)
{
    unsigned r = 1;
    while (e--)
        r *= b;
    return r;
}

} // namespace

LinearizedPoly LinearizedPoly::make(Field field, unsigned e, std::vector<Elem> coeffs)
{
    if (e == 0 || field.n() % e != 0)
        throw LinpolyError("step e must divide n");
    if (coeffs.size() != field.n() / e)
        throw LinpolyError("a p^e-linearized polynomial over GF(p^n) has n/e coefficients");
    for (auto c : coeffs)
        if (c >= field.q())
            throw LinpolyError("coefficient is not a field element");
    return {std::move(field), e, std::move(coeffs)};
}

Elem LinearizedPoly::eval(Elem t) const
{
    Elem r = 0;
    for (unsigned i = 0; i < coeffs.size(); ++i)
        r = field.add(r, field.mul(coeffs[i], field.frobenius(t, i * e)));
    return r;
}

std::vector<Elem> LinearizedPoly::table() const
{
    std::vector<Elem> bv;
    Elem b = 1;
    for (unsigned i = 0; i < field.n(); ++i, b *= field.p())
        bv.push_back(eval(b));
    return extend_from_basis(field, bv);
}

std::optional<unsigned> LinearizedPoly::leading_index() const
{
    for (unsigned i = static_cast<unsigned>(coeffs.size()); i-- > 0;)
        if (coeffs[i] != 0)
            return i;
    return std::nullopt;
}

bool LinearizedPoly::monic() const
{
    const auto li = leading_index();
    return li && coeffs[*li] == 1;
}

bool is_permutation(const LinearizedPoly & lp)
{
    const auto tab = lp.table();
    const bool trivial_kernel = std::count(tab.begin(), tab.end(), Elem{0}) == 1;
    auto sorted = tab;
    std::sort(sorted.begin(), sorted.end());
    const bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (trivial_kernel != bijective)
        throw std::logic_error("kernel test and bijectivity disagree");
    return bijective;
}

LinearizedPoly compose(const LinearizedPoly & a, const LinearizedPoly & b)
{
    if (! (a.field == b.field))
        throw LinpolyError("composition of polynomials over different fields");
    const auto & F = a.field;
    const unsigned e = std::gcd(a.e, b.e);
    const unsigned k = F.n() / e;
    auto refine = [&](const LinearizedPoly & lp) {
        std::vector<Elem> c(k, 0);
        for (unsigned i = 0; i < lp.coeffs.size(); ++i)
            c[i * (lp.e / e)] = lp.coeffs[i];
        return c;
    };
    const auto ca = refine(a), cb = refine(b);
    std::vector<Elem> out(k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            out[(i + j) % k] = F.add(out[(i + j) % k], F.mul(ca[i], F.frobenius(cb[j], i * e)));
    return LinearizedPoly::make(F, e, std::move(out));
}

unsigned long long betti_mathieu_count(unsigned long long s, unsigned k)
{
    if (k == 0)
        throw LinpolyError("k must be positive");
    unsigned long long r = 1;
    for (unsigned i = 0; i < k * (k - 1) / 2; ++i)
        r *= s;
    unsigned long long si = 1;
    for (unsigned i = 1; i < k; ++i) {
        si *= s;
        r *= si - 1;
    }
    return r;
}

std::vector<LinearizedPoly> enumerate_linearized_perms(const Field & field, unsigned e, bool monic_only)
{
    if (e == 0 || field.n() % e != 0)
        throw LinpolyError("step e must divide n");
    const unsigned k = field.n() / e, q = field.q();

    // frob[i][b] = (x^b)^(p^(ie)) for each basis index b
    std::vector<std::vector<Elem>> frob(k);
    for (unsigned i = 0; i < k; ++i) {
        Elem b = 1;
        for (unsigned j = 0; j < field.n(); ++j, b *= field.p())
            frob[i].push_back(field.frobenius(b, i * e));
    }

    std::vector<LinearizedPoly> out;
    std::vector<Elem> c(k, 0), bv(field.n());
    unsigned long long total = 1;
    for (unsigned i = 0; i < k; ++i)
        total *= q;
    for (unsigned long long code = 0; code < total; ++code) {
        auto w = code;
        for (unsigned i = 0; i < k; ++i) {
            c[i] = static_cast<Elem>(w % q);
            w /= q;
        }
        if (monic_only) {
            unsigned li = k;
            while (li > 0 && c[li - 1] == 0)
                --li;
            if (li == 0 || c[li - 1] != 1)
                continue;
        }
        for (unsigned j = 0; j < field.n(); ++j) {
            Elem v = 0;
            for (unsigned i = 0; i < k; ++i)
                v = field.add(v, field.mul(c[i], frob[i][j]));
            bv[j] = v;
        }
        const auto tab = extend_from_basis(field, bv);
        if (std::count(tab.begin(), tab.end(), Elem{0}) == 1)
            out.push_back(LinearizedPoly{field, e, c});
    }
    return out;
}

bool is_linear_over(const Field & field, const std::vector<Elem> & table, unsigned e)
{
    if (e == 0 || field.n() % e != 0)
        return false;
    if (! additive(field, table))
        return false;
    if (e == 1)
        return true;
    const Elem gamma = field.exp((field.q() - 1) / (ipow(field.p(), e) - 1));
    Elem b = 1;
    for (unsigned i = 0; i < field.n(); ++i, b *= field.p())
        if (table[field.mul(gamma, b)] != field.mul(gamma, table[b]))
            return false;
    return true;
}

std::optional<unsigned> detect_linearized(const Field & field, const std::vector<Elem> & table)
{
    if (! additive(field, table))
        return std::nullopt;
    for (unsigned e = field.n(); e >= 1; --e)
        if (field.n() % e == 0 && is_linear_over(field, table, e))
            return e;
    return 1;
}

LinearizedPoly interpolate_linearized(const Field & field, const std::vector<Elem> & table, unsigned e)
{
    if (! is_linear_over(field, table, e))
        throw LinpolyError("table is not GF(p^e)-linear");
    const unsigned k = field.n() / e;
    Matrix m(field.q(), k + 1);
    for (Elem t = 0; t < field.q(); ++t) {
        for (unsigned i = 0; i < k; ++i)
            m(t, i) = field.frobenius(t, i * e);
        m(t, k) = table[t];
    }
    const auto r = rref(field, m);
    std::vector<Elem> c(k, 0);
    for (std::size_t i = 0; i < r.rank(); ++i) {
        if (r.pivots[i] == k)
            throw std::logic_error("inconsistent interpolation system");
        c[r.pivots[i]] = r.reduced(i, k);
    }
    return LinearizedPoly::make(field, e, std::move(c));
}

Directions direction_count(const Field & field, const std::vector<Elem> & table)
{
    const unsigned q = field.q();
    if (table.size() != q)
        throw LinpolyError("table must have q entries");
    std::vector<char> seen(q, 0);
    for (Elem t = 0; t < q; ++t)
        for (Elem s = t + 1; s < q; ++s)
            seen[field.div(field.sub(table[t], table[s]), field.sub(t, s))] = 1;
    Directions d;
    for (Elem m = 0; m < q; ++m)
        if (seen[m])
            d.slopes.push_back(m);
    d.N = static_cast<unsigned>(d.slopes.size());
    return d;
}

DirectionProfile ball_trichotomy(const Field & field, const std::vector<Elem> & table)
{
    const unsigned q = field.q(), p = field.p(), n = field.n();
    if (table.size() != q || table[0] != 0)
        throw LinpolyError("table must fix 0");
    {
        auto s = table;
        std::sort(s.begin(), s.end());
        for (Elem i = 0; i < q; ++i)
            if (s[i] != i)
                throw LinpolyError("table is not a permutation");
    }

    DirectionProfile out;
    const auto dirs = direction_count(field, table);
    out.N = dirs.N;

    // multiplicities of non-vertical lines y = m x + b; vertical lines meet the graph once
    unsigned e = n;
    std::vector<unsigned> count(q);
    for (auto m : dirs.slopes) {
        std::fill(count.begin(), count.end(), 0);
        for (Elem t = 0; t < q; ++t)
            ++count[field.sub(table[t], field.mul(m, t))];
        for (auto c : count) {
            if (c < 2)
                continue;
            unsigned v = 0;
            while (c % p == 0) {
                c /= p;
                ++v;
            }
            e = std::min(e, v);
        }
    }
    out.e = e;

    const unsigned pe = ipow(p, e);
    if (e == 0) {
        out.ball_case = "i";
        out.bound_holds = 2 * out.N >= q + 3 && out.N <= q + 1;
    }
    else if (e == n) {
        out.ball_case = "iii";
        out.bound_holds = out.N == 1;
    }
    else {
        out.ball_case = "ii";
        out.bound_holds = n % e == 0 && ipow(p, n - e) + 1 <= out.N && out.N <= (q - 1) / (pe - 1);
    }
    if (pe > 2)
        out.linearized_ok = is_linear_over(field, table, e);
    return out;
}

} // namespace flocks
