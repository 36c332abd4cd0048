#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace kisinlab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * The finite field F_q, q = p^r, presented as F_p[g]/(modulus).
 *
 * Elements are handled internally as integer codes: the element
 * c_0 + c_1 g + ... + c_{r-1} g^{r-1} has code c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
 * For small q the arithmetic goes through precomputed tables; the
 * polynomial routines (`*_direct`) are always available and are what the
 * tables are filled from.
 */
class Field {
public:
    using code_t = std::uint32_t;

    // Lexicographically least monic irreducible of degree r (see least_irreducible).
    static FieldPtr make(std::uint32_t p, std::uint32_t r);
    // Explicit modulus, low-to-high coefficients, monic of degree r.
    static FieldPtr make(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);

    // Least monic irreducible of degree r over F_p when monic polynomials
    // x^r + c_{r-1} x^{r-1} + ... + c_0 are ordered by the integer
    // c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
    static std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t r);
    static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !mul_table_.empty(); }

    code_t zero() const noexcept { return 0; }
    code_t one() const noexcept { return 1; }
    code_t gen() const noexcept { return r_ > 1 ? p_ : 0; }
    code_t from_int(std::int64_t n) const noexcept;

    code_t add(code_t a, code_t b) const noexcept {
        return has_tables() ? add_table_[a * q_ + b] : add_direct(a, b);
    }
    code_t sub(code_t a, code_t b) const noexcept { return add(a, neg(b)); }
    code_t neg(code_t a) const noexcept { return has_tables() ? neg_table_[a] : neg_direct(a); }
    code_t mul(code_t a, code_t b) const noexcept {
        return has_tables() ? mul_table_[a * q_ + b] : mul_direct(a, b);
    }
    // Throws division_by_zero on 0.
    code_t inv(code_t a) const;
    code_t div(code_t a, code_t b) const { return mul(a, inv(b)); }
    code_t pow(code_t a, std::int64_t k) const;

    code_t add_direct(code_t a, code_t b) const noexcept;
    code_t neg_direct(code_t a) const noexcept;
    code_t mul_direct(code_t a, code_t b) const noexcept;

    std::vector<std::uint32_t> coeffs(code_t a) const;
    code_t from_coeffs(const std::vector<std::uint32_t>& c) const;

    // Polynomial in g, e.g. "g+1", "2*g^2+g". The empty polynomial prints as "0".
    std::string format(code_t a) const;
    // Accepts the output of format(); digits must lie in [0, p).
    code_t parse(std::string_view text) const;

    friend bool operator==(const Field& x, const Field& y) noexcept {
        return x.p_ == y.p_ && x.r_ == y.r_ && x.modulus_ == y.modulus_;
    }

private:
    Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);

    std::uint32_t p_;
    std::uint32_t r_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;  // length r+1, monic
    std::vector<code_t> add_table_;
    std::vector<code_t> mul_table_;
    std::vector<code_t> neg_table_;
    std::vector<code_t> inv_table_;
};

bool same_field(const Field& a, const Field& b) noexcept;
bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

// Throws field_mismatch unless both pointers describe the same field.
void require_same_field(const FieldPtr& a, const FieldPtr& b);

bool is_prime(std::uint64_t n) noexcept;

/// A single element of F_q that remembers its field.
class FieldElem {
public:
    FieldElem(FieldPtr field, Field::code_t code);
    static FieldElem from_coeffs(FieldPtr field, const std::vector<std::uint32_t>& coeffs);

    const FieldPtr& field() const noexcept { return field_; }
    Field::code_t code() const noexcept { return code_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(std::int64_t k) const;

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return a.code_ == b.code_ && same_field(a.field_, b.field_);
    }

    std::string to_string() const { return field_->format(code_); }

private:
    FieldPtr field_;
    Field::code_t code_;
};

}  // namespace kisinlab
