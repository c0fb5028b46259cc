#include <flocks/linalg.hh>

#include <stdexcept>
#include <utility>

namespace flocks {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> values) : rows_(rows), cols_(cols), v_(std::move(values))
{
    if (v_.size() != rows * cols)
        throw std::invalid_argument("matrix value count does not match shape");
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Elem> Matrix::row(std::size_t r) const
{
    return {v_.begin() + static_cast<std::ptrdiff_t>(r * cols_), v_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Echelon rref(const Field & field, const Matrix & input)
{
    Matrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != r)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(sel, k), m(r, k));
        const Elem s = field.inv(m(r, c));
        for (std::size_t k = 0; k < m.cols(); ++k)
            m(r, k) = field.mul(s, m(r, k));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Elem f = m(i, c);
            for (std::size_t k = 0; k < m.cols(); ++k)
                m(i, k) = field.sub(m(i, k), field.mul(f, m(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            reduced(i, k) = m(i, k);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Field & field, const Matrix & m)
{
    return rref(field, m).rank();
}

Matrix nullspace(const Field & field, const Matrix & m)
{
    const auto e = rref(field, m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Elem> v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = field.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    Matrix b(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = 0; k < n; ++k)
            b(i, k) = basis[i][k];
    return rref(field, b).reduced;
}

std::optional<Matrix> inverse(const Field & field, const Matrix & m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k)
            aug(i, k) = m(i, k);
        aug(i, n + i) = 1;
    }
    const auto e = rref(field, aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            out(i, k) = e.reduced(i, n + k);
    return out;
}

Matrix multiply(const Field & field, const Matrix & a, const Matrix & b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix shapes do not compose");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Elem s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s = field.add(s, field.mul(a(i, k), b(k, j)));
            out(i, j) = s;
        }
    return out;
}

Matrix transpose(const Matrix & m)
{
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = m(i, j);
    return out;
}

std::vector<Elem> apply(const Field & field, const Matrix & m, const std::vector<Elem> & x)
{
    if (x.size() != m.cols())
        throw std::invalid_argument("vector length does not match matrix");
    std::vector<Elem> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            out[i] = field.add(out[i], field.mul(m(i, k), x[k]));
    return out;
}

} // namespace flocks
