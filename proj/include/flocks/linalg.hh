#pragma once

// Small dense matrices over GF(q): echelon forms, ranks, null spaces.
// Sizes here never exceed q x 4, so everything is plain Gaussian elimination.

#include <flocks/gf.hh>

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace flocks {

class Matrix
{
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> values);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem & operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

    std::vector<Elem> row(std::size_t r) const;
    const std::vector<Elem> & values() const { return v_; }

    friend bool operator==(const Matrix &, const Matrix &) = default;
    friend auto operator<=>(const Matrix &, const Matrix &) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> v_;
};

struct Echelon
{
    Matrix reduced; // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Field & field, const Matrix & m);
std::size_t rank(const Field & field, const Matrix & m);

/// Basis of {x : m x = 0}, one vector per row, in reduced row-echelon form.
Matrix nullspace(const Field & field, const Matrix & m);

std::optional<Matrix> inverse(const Field & field, const Matrix & m);
Matrix multiply(const Field & field, const Matrix & a, const Matrix & b);
Matrix transpose(const Matrix & m);
std::vector<Elem> apply(const Field & field, const Matrix & m, const std::vector<Elem> & x);

/// Scales so the first nonzero entry is 1; the zero vector is returned unchanged.
template <typename Vec>
Vec normalize_leading(const Field & field, Vec v)
{
    for (auto x : v)
        if (x != 0) {
            const Elem s = field.inv(x);
            for (auto & y : v)
                y = field.mul(s, y);
            break;
        }
    return v;
}

} // namespace flocks
