#pragma once

#include "kisinlab/series.hpp"

#include <array>
#include <iosfwd>

namespace kisinlab {

// A 2x2 matrix of Laurent series, row-major: (a b; c d).
class Mat2 {
public:
    Mat2(Series a, Series b, Series c, Series d);

    static Mat2 zero(const FieldPtr& field);
    static Mat2 identity(const FieldPtr& field);
    static Mat2 diag(Series a, Series d);
    // diag(u^i, u^j)
    static Mat2 diag_u(const FieldPtr& field, std::int64_t i, std::int64_t j);

    const Series& operator()(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }
    Series& operator()(int row, int col) { return m_[static_cast<std::size_t>(2 * row + col)]; }
    const FieldPtr& field() const noexcept { return m_[0].field(); }

    Series det() const;
    Series trace() const;
    // (a b; c d) -> (d -b; -c a), so that M * adj(M) = det(M) * Id.
    Mat2 adjugate() const;
    Mat2 transposed() const;
    bool is_integral() const;
    bool is_exact() const;
    // adj(M) / det(M); the determinant is inverted to work_prec.
    Mat2 inverse(std::int64_t work_prec) const;

    Mat2 scaled(const Series& s) const;
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend Mat2 operator+(const Mat2& x, const Mat2& y);
    friend Mat2 operator-(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y) = default;

private:
    std::array<Series, 4> m_;
};

// Entrywise u -> u^p.
Mat2 frobenius(const Mat2& m);

std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace kisinlab
