#include "kisinlab/mat2.hpp"

#include "kisinlab/errors.hpp"

#include <ostream>

namespace kisinlab {

Mat2::Mat2(Series a, Series b, Series c, Series d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (const auto& s : m_) require_same_field(m_[0].field(), s.field());
}

Mat2 Mat2::zero(const FieldPtr& field) {
    Series z(field);
    return {z, z, z, z};
}

Mat2 Mat2::identity(const FieldPtr& field) { return diag_u(field, 0, 0); }

Mat2 Mat2::diag(Series a, Series d) {
    Series z(a.field());
    return {std::move(a), z, z, std::move(d)};
}

Mat2 Mat2::diag_u(const FieldPtr& field, std::int64_t i, std::int64_t j) {
    return diag(Series::u_power(field, i), Series::u_power(field, j));
}

Series Mat2::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

Series Mat2::trace() const { return m_[0] + m_[3]; }

Mat2 Mat2::adjugate() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }

Mat2 Mat2::transposed() const { return {m_[0], m_[2], m_[1], m_[3]}; }

bool Mat2::is_integral() const {
    for (const auto& s : m_)
        if (!kisinlab::is_integral(s)) return false;
    return true;
}

bool Mat2::is_exact() const {
    for (const auto& s : m_)
        if (!s.is_exact()) return false;
    return true;
}

Mat2 Mat2::inverse(std::int64_t work_prec) const {
    const Series d = det();
    if (d.is_zero()) throw singular_matrix("matrix has zero determinant");
    if (!d.is_exact() && d.terms().empty())
        throw insufficient_precision("determinant is not known to be nonzero");
    return adjugate().scaled(kisinlab::inverse(d, work_prec));
}

Mat2 Mat2::scaled(const Series& s) const { return {m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s}; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0), x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
            x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0), x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1)};
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x(0, 0) + y(0, 0), x(0, 1) + y(0, 1), x(1, 0) + y(1, 0), x(1, 1) + y(1, 1)};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x(0, 0) - y(0, 0), x(0, 1) - y(0, 1), x(1, 0) - y(1, 0), x(1, 1) - y(1, 1)};
}

Mat2 frobenius(const Mat2& m) {
    return {frobenius(m(0, 0)), frobenius(m(0, 1)), frobenius(m(1, 0)), frobenius(m(1, 1))};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
}

}  // namespace kisinlab
