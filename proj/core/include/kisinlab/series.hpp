#pragma once

#include "kisinlab/field.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kisinlab {

/**
 * A Laurent series in u over F_q, stored sparsely.
 *
 * Two precision states:
 *  - exact: the stored support is the whole series (a Laurent polynomial);
 *  - known below N: coefficients at exponents < N are authoritative, the
 *    rest are unknown. No term at an exponent >= N is ever stored.
 *
 * Anything that needs an unknown coefficient to reach an answer throws
 * insufficient_precision instead of guessing.
 */
class Series {
public:
    using code_t = Field::code_t;

    struct Term {
        std::int64_t exp;
        code_t coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    // Valuation of the exact zero series.
    static constexpr std::int64_t infinite_valuation = std::numeric_limits<std::int64_t>::max();

    explicit Series(FieldPtr field);

    static Series constant(FieldPtr field, code_t c);
    static Series constant(const FieldElem& c);
    static Series monomial(FieldPtr field, code_t c, std::int64_t exp);
    static Series u_power(FieldPtr field, std::int64_t exp);
    // Sorts, merges repeated exponents, drops zeros and anything at or past the cap.
    static Series from_terms(FieldPtr field, std::vector<Term> terms,
                             std::optional<std::int64_t> cap = std::nullopt);

    const FieldPtr& field() const noexcept { return field_; }
    std::span<const Term> terms() const& noexcept { return terms_; }
    // A span into a temporary would dangle.
    std::span<const Term> terms() const&& = delete;
    bool is_exact() const noexcept { return !cap_.has_value(); }
    // The N of "known below N"; nullopt when exact.
    std::optional<std::int64_t> cap() const noexcept { return cap_; }
    bool is_zero() const noexcept { return is_exact() && terms_.empty(); }
    bool is_monomial() const noexcept { return is_exact() && terms_.size() == 1; }

    std::int64_t valuation() const;
    // Largest v with every coefficient below v known to vanish; infinite for exact zero.
    std::int64_t valuation_lower_bound() const noexcept;

    FieldElem coeff(std::int64_t k) const;
    code_t coeff_code(std::int64_t k) const;
    FieldElem leading_coeff() const;

    // Forget everything at exponents >= n.
    Series truncated(std::int64_t n) const;
    // Representative of the class modulo u^n F[[u]]: terms below n, exact.
    // Needs the coefficients below n to be known.
    Series reduced_mod(std::int64_t n) const;
    // Multiply by u^k.
    Series shifted(std::int64_t k) const;
    Series scaled(code_t c) const;

    Series operator-() const;
    friend Series operator+(const Series& f, const Series& g);
    friend Series operator-(const Series& f, const Series& g);
    friend Series operator*(const Series& f, const Series& g);
    Series& operator+=(const Series& g) { return *this = *this + g; }
    Series& operator-=(const Series& g) { return *this = *this - g; }
    Series& operator*=(const Series& g) { return *this = *this * g; }

    // Structural equality: same field, same support, same precision state.
    friend bool operator==(const Series& f, const Series& g);

private:
    FieldPtr field_;
    std::vector<Term> terms_;  // strictly increasing exponents, nonzero coefficients
    std::optional<std::int64_t> cap_;
};

// u -> u^p on every term; coefficients are left alone.
Series frobenius(const Series& f);

// Multiplicative inverse. Exact for monomials; otherwise known below
// val(f^-1) + min(work_prec, relative precision of f).
Series inverse(const Series& f, std::int64_t work_prec);

// No nonzero coefficient at a negative exponent.
bool is_integral(const Series& f);

// Text form: terms in increasing exponent order joined by " + ", e.g.
// "(g+1)*u^-2 + 2 + u^3"; a precision cap prints as a trailing "O(u^N)".
std::string to_string(const Series& f);
Series parse_series(const FieldPtr& field, std::string_view text);
std::ostream& operator<<(std::ostream& os, const Series& f);

}  // namespace kisinlab
