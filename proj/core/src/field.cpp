#include "kisinlab/field.hpp"

#include "kisinlab/errors.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace kisinlab {

namespace {

// Tables are q*q entries; beyond this the direct routines are used.
constexpr std::uint32_t kMaxTableOrder = 1024;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic d over F_p.
Poly poly_mod(Poly f, const Poly& d, std::uint32_t p) {
    trim(f);
    const std::size_t n = d.size() - 1;
    while (f.size() > n) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - n;
        for (std::size_t i = 0; i <= n; ++i) {
            const std::uint64_t t = (static_cast<std::uint64_t>(lead) * d[i]) % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - t) % p);
        }
        trim(f);
    }
    return f;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t k) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < k; ++i) out *= base;
    return static_cast<std::uint32_t>(out);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw parse_error("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool Field::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
    const std::size_t deg = monic.size() - 1;
    if (deg <= 1) return deg == 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint32_t count = ipow(p, static_cast<std::uint32_t>(d));
        for (std::uint32_t n = 0; n < count; ++n) {
            Poly divisor(d + 1, 0);
            std::uint32_t x = n;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = x % p;
                x /= p;
            }
            divisor[d] = 1;
            if (poly_mod(monic, divisor, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> Field::least_irreducible(std::uint32_t p, std::uint32_t r) {
    if (!is_prime(p)) throw precondition_error("p must be prime");
    if (r == 0) throw precondition_error("r must be positive");
    const std::uint32_t count = ipow(p, r);
    for (std::uint32_t n = 0; n < count; ++n) {
        Poly f(r + 1, 0);
        std::uint32_t x = n;
        for (std::uint32_t i = 0; i < r; ++i) {
            f[i] = x % p;
            x /= p;
        }
        f[r] = 1;
        if (is_irreducible(p, f)) return f;
    }
    throw error("no irreducible polynomial found");  // unreachable for prime p
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t r) {
    return make(p, r, least_irreducible(p, r));
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw precondition_error("p must be prime, got " + std::to_string(p));
    if (r == 0) throw precondition_error("r must be positive");
    if (ipow(p, r) > (1u << 24) || r > 24)
        throw precondition_error("field too large for this library");
    if (modulus.size() != r + 1 || modulus.back() != 1)
        throw precondition_error("modulus must be monic of degree r");
    for (auto c : modulus)
        if (c >= p) throw precondition_error("modulus coefficients must lie in [0, p)");
    if (!is_irreducible(p, modulus)) throw precondition_error("modulus is not irreducible");
    return FieldPtr(new Field(p, r, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(ipow(p, r)), modulus_(std::move(modulus)) {
    if (q_ <= kMaxTableOrder) {
        std::vector<code_t> add(q_ * q_), mul(q_ * q_), neg(q_), inv(q_, 0);
        for (code_t a = 0; a < q_; ++a) {
            neg[a] = neg_direct(a);
            for (code_t b = 0; b < q_; ++b) {
                add[a * q_ + b] = add_direct(a, b);
                mul[a * q_ + b] = mul_direct(a, b);
            }
        }
        for (code_t a = 1; a < q_; ++a)
            for (code_t b = 1; b < q_; ++b)
                if (mul[a * q_ + b] == 1) {
                    inv[a] = b;
                    break;
                }
        add_table_ = std::move(add);
        mul_table_ = std::move(mul);
        neg_table_ = std::move(neg);
        inv_table_ = std::move(inv);
    }
}

Field::code_t Field::from_int(std::int64_t n) const noexcept {
    const auto pp = static_cast<std::int64_t>(p_);
    return static_cast<code_t>(((n % pp) + pp) % pp);
}

Field::code_t Field::add_direct(code_t a, code_t b) const noexcept {
    code_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

Field::code_t Field::neg_direct(code_t a) const noexcept {
    code_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

Field::code_t Field::mul_direct(code_t a, code_t b) const noexcept {
    const Poly fa = coeffs(a), fb = coeffs(b);
    Poly prod(2 * r_, 0);
    for (std::uint32_t i = 0; i < r_; ++i)
        for (std::uint32_t j = 0; j < r_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % p_);
    return from_coeffs(poly_mod(std::move(prod), modulus_, p_));
}

Field::code_t Field::inv(code_t a) const {
    if (a == 0) throw division_by_zero("inverse of zero in F_q");
    if (has_tables()) return inv_table_[a];
    return pow(a, static_cast<std::int64_t>(q_) - 2);
}

Field::code_t Field::pow(code_t a, std::int64_t k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    code_t result = one();
    while (k > 0) {
        if (k & 1) result = mul(result, a);
        a = mul(a, a);
        k >>= 1;
    }
    return result;
}

std::vector<std::uint32_t> Field::coeffs(code_t a) const {
    std::vector<std::uint32_t> out(r_);
    for (std::uint32_t i = 0; i < r_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Field::code_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > r_) throw precondition_error("too many coefficients for F_q element");
    code_t out = 0, place = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        out += (c[i] % p_) * place;
        place *= p_;
    }
    return out;
}

std::string Field::format(code_t a) const {
    if (a == 0) return "0";
    const auto c = coeffs(a);
    std::ostringstream out;
    bool first = true;
    for (std::uint32_t k = r_; k-- > 0;) {
        if (c[k] == 0) continue;
        if (!first) out << '+';
        first = false;
        if (k == 0) {
            out << c[k];
            continue;
        }
        if (c[k] != 1) out << c[k] << '*';
        out << 'g';
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

Field::code_t Field::parse(std::string_view text) const {
    text = strip(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = strip(text.substr(1, text.size() - 2));
    if (text.empty()) throw parse_error("empty field element");

    Poly acc;
    while (!text.empty()) {
        const auto plus = text.find('+');
        std::string_view mono = strip(text.substr(0, plus));
        text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
        if (mono.empty() || (plus != std::string_view::npos && strip(text).empty()))
            throw parse_error("empty monomial in field element");

        std::uint64_t scalar = 1;
        std::uint64_t degree = 0;
        const auto gpos = mono.find('g');
        if (gpos == std::string_view::npos) {
            scalar = parse_uint(mono, "digit");
        } else {
            std::string_view head = strip(mono.substr(0, gpos));
            std::string_view tail = strip(mono.substr(gpos + 1));
            if (!head.empty()) {
                if (head.back() != '*') throw parse_error("expected '*' before g");
                head = strip(head.substr(0, head.size() - 1));
                scalar = parse_uint(head, "digit");
            }
            degree = 1;
            if (!tail.empty()) {
                if (tail.front() != '^') throw parse_error("expected '^' after g");
                degree = parse_uint(strip(tail.substr(1)), "exponent of g");
            }
        }
        if (scalar >= p_) throw parse_error("digit out of range [0, p)");
        if (acc.size() <= degree) acc.resize(degree + 1, 0);
        acc[degree] = static_cast<std::uint32_t>((acc[degree] + scalar) % p_);
    }
    return from_coeffs(poly_mod(std::move(acc), modulus_, p_));
}

bool same_field(const Field& a, const Field& b) noexcept { return &a == &b || a == b; }

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b)) throw field_mismatch("operands live in different fields");
}

FieldElem::FieldElem(FieldPtr field, Field::code_t code) : field_(std::move(field)), code_(code) {
    if (!field_) throw precondition_error("field element without a field");
    if (code_ >= field_->q()) throw precondition_error("field element code out of range");
}

FieldElem FieldElem::from_coeffs(FieldPtr field, const std::vector<std::uint32_t>& coeffs) {
    const auto code = field->from_coeffs(coeffs);
    return FieldElem(std::move(field), code);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->add(code_, o.code_)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->sub(code_, o.code_)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->mul(code_, o.code_)};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->div(code_, o.code_)};
}

FieldElem FieldElem::operator-() const { return {field_, field_->neg(code_)}; }

FieldElem FieldElem::inverse() const { return {field_, field_->inv(code_)}; }

FieldElem FieldElem::pow(std::int64_t k) const { return {field_, field_->pow(code_, k)}; }

}  // namespace kisinlab
