#include <flocks/gf.hh>

#include <algorithm>
#include <sstream>

namespace flocks {

namespace {

constexpr unsigned max_order = 1u << 16;

using Poly = std::vector<unsigned>; // coefficient i of x^i, arbitrary length

unsigned inv_mod_p(unsigned a, unsigned p)
{
    unsigned long long r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1)
            r = r * b % p;
    return static_cast<unsigned>(r);
}

void trim(Poly & f)
{
    while (! f.empty() && f.back() == 0)
        f.pop_back();
}

// Remainder of f modulo g over GF(p); g must be nonzero.
Poly poly_rem(Poly f, const Poly & g, unsigned p)
{
    trim(f);
    const unsigned lead_inv = inv_mod_p(g.back(), p);
    while (f.size() >= g.size()) {
        const unsigned c = static_cast<unsigned>(1ull * f.back() * lead_inv % p);
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = static_cast<unsigned>((f[shift + i] + p - 1ull * c * g[i] % p) % p);
        trim(f);
    }
    return f;
}

std::vector<unsigned> prime_factors(unsigned long long v)
{
    std::vector<unsigned> out;
    for (unsigned long long d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(static_cast<unsigned>(d));
            while (v % d == 0)
                v /= d;
        }
    if (v > 1)
        out.push_back(static_cast<unsigned>(v));
    return out;
}

// Multiplies two digit vectors modulo x^n + sum c_i x^i.
std::vector<unsigned> mul_mod(const std::vector<unsigned> & a, const std::vector<unsigned> & b, const std::vector<unsigned> & modulus,
    unsigned p)
{
    const std::size_t n = modulus.size();
    std::vector<unsigned> r(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            r[i + j] = static_cast<unsigned>((r[i + j] + 1ull * a[i] * b[j]) % p);
    }
    // x^n = -sum c_i x^i
    for (std::size_t k = 2 * n - 1; k >= n; --k) {
        const unsigned c = r[k];
        if (c == 0)
            continue;
        r[k] = 0;
        for (std::size_t i = 0; i < n; ++i)
            r[k - n + i] = static_cast<unsigned>((r[k - n + i] + p - 1ull * c * modulus[i] % p) % p);
    }
    r.resize(n);
    return r;
}

std::vector<unsigned> to_digits(Elem a, unsigned p, unsigned n)
{
    std::vector<unsigned> d(n);
    for (unsigned i = 0; i < n; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem from_digits_impl(const std::vector<unsigned> & d, unsigned p)
{
    Elem r = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        r = r * p + d[i];
    return r;
}

} // namespace

bool is_prime(unsigned long long v)
{
    if (v < 2)
        return false;
    for (unsigned long long d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long q)
{
    if (q < 2)
        return std::nullopt;
    auto factors = prime_factors(q);
    if (factors.size() != 1)
        return std::nullopt;
    unsigned n = 0;
    for (; q > 1; q /= factors[0])
        ++n;
    return std::pair{factors[0], n};
}

bool is_irreducible(unsigned p, const std::vector<unsigned> & low_coeffs)
{
    const unsigned n = static_cast<unsigned>(low_coeffs.size());
    if (n == 0)
        return false;
    Poly f(low_coeffs);
    f.push_back(1);
    for (unsigned d = 1; 2 * d <= n; ++d) {
        unsigned long long count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (unsigned long long v = 0; v < count; ++v) {
            Poly g(d + 1, 0);
            unsigned long long w = v;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(w % p);
                w /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty())
                return false;
        }
    }
    return true;
}

Field Field::make(unsigned p, unsigned n, std::optional<std::vector<unsigned>> modulus)
{
    if (! is_prime(p))
        throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (n == 0)
        throw FieldError("extension degree must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > max_order)
            throw FieldError("field order exceeds 2^16");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->n = n;
    t->q = static_cast<unsigned>(q);

    if (modulus) {
        if (modulus->size() != n)
            throw FieldError("modulus must list exactly n low-order coefficients");
        for (auto c : *modulus)
            if (c >= p)
                throw FieldError("modulus coefficient out of range");
        if (! is_irreducible(p, *modulus))
            throw FieldError("modulus is reducible over GF(" + std::to_string(p) + ")");
        t->modulus = *modulus;
    }
    else {
        for (Elem v = 0; v < t->q; ++v) {
            auto c = to_digits(v, p, n);
            if (is_irreducible(p, c)) {
                t->modulus = std::move(c);
                break;
            }
        }
    }

    const auto order_factors = prime_factors(q - 1);
    auto pow_digits = [&](std::vector<unsigned> base, unsigned long long e) {
        std::vector<unsigned> r = to_digits(1, p, n);
        for (; e; e >>= 1, base = mul_mod(base, base, t->modulus, p))
            if (e & 1)
                r = mul_mod(r, base, t->modulus, p);
        return r;
    };
    const auto one = to_digits(1, p, n);
    for (Elem g = 1; g < t->q; ++g) {
        const auto gd = to_digits(g, p, n);
        bool full = true;
        for (auto r : order_factors)
            if (pow_digits(gd, (q - 1) / r) == one) {
                full = false;
                break;
            }
        if (full) {
            t->primitive = g;
            break;
        }
    }
    const unsigned m = t->q - 1;
    t->exp.assign(2 * m, 0);
    t->log.assign(t->q, 0);
    auto cur = one;
    const auto prim = to_digits(t->primitive, p, n);
    for (unsigned i = 0; i < m; ++i) {
        const Elem e = from_digits_impl(cur, p);
        t->exp[i] = t->exp[i + m] = e;
        t->log[e] = i;
        cur = mul_mod(cur, prim, t->modulus, p);
    }

    t->neg.resize(t->q);
    for (Elem a = 0; a < t->q; ++a) {
        auto d = to_digits(a, p, n);
        for (auto & x : d)
            x = (p - x) % p;
        t->neg[a] = from_digits_impl(d, p);
    }

    t->p_powers.resize(n);
    for (unsigned i = 0, v = 1; i < n; ++i, v *= p)
        t->p_powers[i] = v;

    if (p != 2 && t->q <= 256) {
        t->add.resize(std::size_t{t->q} * t->q);
        Field partial{t};
        for (Elem a = 0; a < t->q; ++a)
            for (Elem b = 0; b < t->q; ++b)
                t->add[a * t->q + b] = static_cast<std::uint16_t>(partial.add_digits(a, b));
    }

    return Field{std::move(t)};
}

Field Field::of_order(unsigned q)
{
    auto pp = prime_power(q);
    if (! pp)
        throw FieldError(std::to_string(q) + " is not a prime power");
    return make(pp->first, pp->second);
}

Elem Field::add_digits(Elem a, Elem b) const
{
    const unsigned p = t_->p;
    Elem r = 0;
    for (unsigned i = 0; i < t_->n; ++i) {
        r += ((a % p + b % p) % p) * t_->p_powers[i];
        a /= p;
        b /= p;
    }
    return r;
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw FieldError("inverse of zero");
    const unsigned m = t_->q - 1;
    return t_->exp[(m - t_->log[a]) % m];
}

Elem Field::pow(Elem a, long long e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem r = 1;
    for (Elem b = a; e; e >>= 1, b = mul(b, b))
        if (e & 1)
            r = mul(r, b);
    return r;
}

Elem Field::frobenius(Elem a, unsigned j) const
{
    if (a == 0)
        return 0;
    const unsigned long long m = t_->q - 1;
    return t_->exp[(t_->log[a] * static_cast<unsigned long long>(t_->p_powers[j % t_->n])) % m];
}

Elem Field::trace(Elem a, unsigned e) const
{
    if (e == 0 || t_->n % e != 0)
        throw FieldError("trace degree must divide n");
    Elem r = 0;
    for (unsigned i = 0; i < t_->n / e; ++i)
        r = add(r, frobenius(a, e * i));
    return r;
}

bool Field::is_square(Elem a) const
{
    if (t_->p == 2 || a == 0)
        return true;
    return t_->log[a] % 2 == 0;
}

std::vector<Elem> Field::subfield_elements(unsigned e) const
{
    if (e == 0 || t_->n % e != 0)
        throw FieldError("subfield degree must divide n");
    std::vector<Elem> out;
    for (Elem a = 0; a < t_->q; ++a)
        if (frobenius(a, e) == a)
            out.push_back(a);
    return out;
}

unsigned Field::log(Elem a) const
{
    if (a == 0)
        throw FieldError("logarithm of zero");
    return t_->log[a];
}

Elem Field::exp(long long i) const
{
    const long long m = t_->q - 1;
    return t_->exp[static_cast<std::size_t>(((i % m) + m) % m)];
}

Elem Field::from_int(long long k) const
{
    const long long p = t_->p;
    return static_cast<Elem>(((k % p) + p) % p);
}

Elem Field::poly_mul(Elem a, Elem b) const
{
    return from_digits_impl(mul_mod(digits(a), digits(b), t_->modulus, t_->p), t_->p);
}

std::vector<unsigned> Field::digits(Elem a) const
{
    return to_digits(a, t_->p, t_->n);
}

Elem Field::from_digits(const std::vector<unsigned> & d) const
{
    if (d.size() != t_->n)
        throw FieldError("digit vector length must equal n");
    for (auto x : d)
        if (x >= t_->p)
            throw FieldError("digit out of range");
    return from_digits_impl(d, t_->p);
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "GF(" << t_->q << ") = GF(" << t_->p << ")[x]/(x^" << t_->n;
    for (unsigned i = t_->n; i-- > 0;) {
        const unsigned c = t_->modulus[i];
        if (c == 0)
            continue;
        os << " + ";
        if (c != 1 || i == 0)
            os << c;
        if (i > 0)
            os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << ")";
    return os.str();
}

FieldElement::FieldElement(Field field, Elem encoding) : field_(std::move(field)), enc_(encoding)
{
    if (enc_ >= field_.q())
        throw FieldError("encoding out of range");
}

FieldElement FieldElement::inverse() const
{
    return {field_, field_.inv(enc_)};
}

namespace {

const Field & common_field(const FieldElement & a, const FieldElement & b)
{
    if (! (a.field() == b.field()))
        throw FieldError("mixed-field operands");
    return a.field();
}

} // namespace

FieldElement operator+(const FieldElement & a, const FieldElement & b)
{
    const auto & f = common_field(a, b);
    return {f, f.add(a.encoding(), b.encoding())};
}

FieldElement operator-(const FieldElement & a, const FieldElement & b)
{
    const auto & f = common_field(a, b);
    return {f, f.sub(a.encoding(), b.encoding())};
}

FieldElement operator*(const FieldElement & a, const FieldElement & b)
{
    const auto & f = common_field(a, b);
    return {f, f.mul(a.encoding(), b.encoding())};
}

FieldElement operator/(const FieldElement & a, const FieldElement & b)
{
    const auto & f = common_field(a, b);
    return {f, f.div(a.encoding(), b.encoding())};
}

} // namespace flocks
