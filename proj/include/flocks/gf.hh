#pragma once

// Exact arithmetic in GF(p^n).
//
// Elements are encoded as integers in [0, q): digit i of the base-p expansion
// is the coefficient of x^i in the polynomial representation modulo the
// field's defining polynomial. Encodings are the only currency used by the
// rest of the library; FieldElement wraps one together with its field for
// callers that want operator syntax and mixed-field checking.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flocks {

using Elem = std::uint32_t;

class FieldError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

class Field
{
  public:
    /// Builds GF(p^n). Without a modulus, the monic irreducible whose
    /// coefficient vector (c0..c_{n-1}) is the least base-p integer is used.
    /// The primitive element is the least encoding of multiplicative order q-1.
    static Field make(unsigned p, unsigned n, std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// GF(q) for a prime power q, default modulus.
    static Field of_order(unsigned q);

    unsigned p() const { return t_->p; }
    unsigned n() const { return t_->n; }
    unsigned q() const { return t_->q; }
    const std::vector<unsigned> & modulus() const { return t_->modulus; }
    Elem primitive() const { return t_->primitive; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const
    {
        if (t_->p == 2)
            return a ^ b;
        if (! t_->add.empty())
            return t_->add[a * t_->q + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const { return t_->neg[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, t_->neg[b]); }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Square-and-multiply; negative exponents invert first.
    Elem pow(Elem a, long long e) const;

    /// a^(p^j).
    Elem frobenius(Elem a, unsigned j) const;
    /// Relative trace to GF(p^e): sum of a^(p^(e i)) for 0 <= i < n/e.
    Elem trace(Elem a, unsigned e) const;
    /// Absolute trace to the prime field.
    Elem trace(Elem a) const { return trace(a, 1); }
    bool is_square(Elem a) const;
    /// The p^e elements fixed by x -> x^(p^e), ascending.
    std::vector<Elem> subfield_elements(unsigned e) const;
    bool in_subfield(Elem a, unsigned e) const { return frobenius(a, e) == a; }

    /// Discrete logarithm to base primitive(); a must be nonzero.
    unsigned log(Elem a) const;
    /// primitive()^i, any integer i.
    Elem exp(long long i) const;
    /// Embeds an integer through the prime field (k mod p).
    Elem from_int(long long k) const;

    /// Reference multiplication by schoolbook polynomial product and reduction.
    Elem poly_mul(Elem a, Elem b) const;

    std::vector<unsigned> digits(Elem a) const;
    Elem from_digits(const std::vector<unsigned> & d) const;

    std::string describe() const;

    friend bool operator==(const Field & a, const Field & b)
    {
        return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->n == b.t_->n && a.t_->modulus == b.t_->modulus);
    }

  private:
    struct Tables
    {
        unsigned p = 0, n = 0, q = 0;
        std::vector<unsigned> modulus;
        Elem primitive = 0;
        std::vector<Elem> exp; // 2(q-1) entries so log sums need no reduction
        std::vector<std::uint32_t> log;
        std::vector<Elem> neg;
        std::vector<std::uint16_t> add; // full table when q <= 256, odd p
        std::vector<std::uint32_t> p_powers;
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    Elem add_digits(Elem a, Elem b) const;

    std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned long long v);

/// (p, n) with q = p^n, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long q);

/// True iff x^n + sum c_i x^i is irreducible over GF(p).
bool is_irreducible(unsigned p, const std::vector<unsigned> & low_coeffs);

class FieldElement
{
  public:
    FieldElement(Field field, Elem encoding);

    const Field & field() const { return field_; }
    Elem encoding() const { return enc_; }

    FieldElement inverse() const;
    FieldElement pow(long long e) const { return {field_, field_.pow(enc_, e)}; }
    FieldElement frobenius(unsigned j) const { return {field_, field_.frobenius(enc_, j)}; }
    FieldElement trace(unsigned e) const { return {field_, field_.trace(enc_, e)}; }
    bool is_square() const { return field_.is_square(enc_); }

    friend FieldElement operator+(const FieldElement & a, const FieldElement & b);
    friend FieldElement operator-(const FieldElement & a, const FieldElement & b);
    friend FieldElement operator*(const FieldElement & a, const FieldElement & b);
    friend FieldElement operator/(const FieldElement & a, const FieldElement & b);
    FieldElement operator-() const { return {field_, field_.neg(enc_)}; }

    friend bool operator==(const FieldElement & a, const FieldElement & b)
    {
        return a.enc_ == b.enc_ && a.field_ == b.field_;
    }

  private:
    Field field_;
    Elem enc_;
};

} // namespace flocks
