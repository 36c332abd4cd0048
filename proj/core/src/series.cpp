#include "kisinlab/series.hpp"

#include "kisinlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>

namespace kisinlab {

namespace {

constexpr std::int64_t kInf = Series::infinite_valuation;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a == kInf || b == kInf) return kInf;
    return a + b;
}

std::int64_t cap_or_inf(const Series& f) { return f.cap().value_or(kInf); }

std::optional<std::int64_t> to_cap(std::int64_t n) {
    if (n == kInf) return std::nullopt;
    return n;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s) {
    s = strip(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw parse_error("bad exponent '" + std::string(s) + "'");
    return v;
}

// Splits on '+' outside parentheses.
std::vector<std::string_view> split_terms(std::string_view text) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '(') ++depth;
        else if (ch == ')') {
            if (--depth < 0) throw parse_error("unbalanced ')' in series");
        } else if (ch == '+' && depth == 0) {
            out.push_back(strip(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (depth != 0) throw parse_error("unbalanced '(' in series");
    out.push_back(strip(text.substr(start)));
    return out;
}

// "u^k" or "u" -> k.
std::optional<std::int64_t> parse_u_power(std::string_view s) {
    s = strip(s);
    if (s.empty() || s.front() != 'u') return std::nullopt;
    s = strip(s.substr(1));
    if (s.empty()) return 1;
    if (s.front() != '^') throw parse_error("expected '^' after u");
    return parse_int(s.substr(1));
}

std::string format_coeff(const Field& field, Field::code_t c) {
    std::string text = field.format(c);
    const bool atom = text.find('+') == std::string::npos && text.find('*') == std::string::npos;
    return atom ? text : "(" + text + ")";
}

}  // namespace

Series::Series(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw precondition_error("series without a field");
}

Series Series::constant(FieldPtr field, code_t c) { return monomial(std::move(field), c, 0); }

Series Series::constant(const FieldElem& c) { return constant(c.field(), c.code()); }

Series Series::monomial(FieldPtr field, code_t c, std::int64_t exp) {
    Series s(std::move(field));
    if (c >= s.field_->q()) throw precondition_error("coefficient code out of range");
    if (c != 0) s.terms_.push_back({exp, c});
    return s;
}

Series Series::u_power(FieldPtr field, std::int64_t exp) { return monomial(std::move(field), 1, exp); }

Series Series::from_terms(FieldPtr field, std::vector<Term> terms, std::optional<std::int64_t> cap) {
    Series s(std::move(field));
    const Field& F = *s.field_;
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    for (const auto& t : terms) {
        if (t.coeff >= F.q()) throw precondition_error("coefficient code out of range");
        if (cap && t.exp >= *cap) continue;
        if (!s.terms_.empty() && s.terms_.back().exp == t.exp) {
            s.terms_.back().coeff = F.add(s.terms_.back().coeff, t.coeff);
            if (s.terms_.back().coeff == 0) s.terms_.pop_back();
        } else if (t.coeff != 0) {
            s.terms_.push_back(t);
        }
    }
    s.cap_ = cap;
    return s;
}

std::int64_t Series::valuation() const {
    if (!terms_.empty()) return terms_.front().exp;
    if (is_exact()) return infinite_valuation;
    throw insufficient_precision("valuation undecided: no nonzero coefficient below u^" +
                                 std::to_string(*cap_));
}

std::int64_t Series::valuation_lower_bound() const noexcept {
    if (!terms_.empty()) return terms_.front().exp;
    return cap_.value_or(infinite_valuation);
}

Series::code_t Series::coeff_code(std::int64_t k) const {
    if (cap_ && k >= *cap_)
        throw insufficient_precision("coefficient of u^" + std::to_string(k) + " is unknown (known below u^" +
                                     std::to_string(*cap_) + ")");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, std::int64_t e) { return t.exp < e; });
    return (it != terms_.end() && it->exp == k) ? it->coeff : 0;
}

FieldElem Series::coeff(std::int64_t k) const { return {field_, coeff_code(k)}; }

FieldElem Series::leading_coeff() const {
    const auto v = valuation();
    if (v == infinite_valuation) throw precondition_error("zero series has no leading coefficient");
    return {field_, terms_.front().coeff};
}

Series Series::truncated(std::int64_t n) const {
    const std::int64_t cap = std::min(n, cap_or_inf(*this));
    Series out(field_);
    for (const auto& t : terms_)
        if (t.exp < cap) out.terms_.push_back(t);
    out.cap_ = to_cap(cap);
    return out;
}

Series Series::reduced_mod(std::int64_t n) const {
    if (cap_ && *cap_ < n)
        throw insufficient_precision("reduction mod u^" + std::to_string(n) + " needs coefficients up to u^" +
                                     std::to_string(n - 1));
    Series out(field_);
    for (const auto& t : terms_)
        if (t.exp < n) out.terms_.push_back(t);
    return out;
}

Series Series::shifted(std::int64_t k) const {
    Series out(*this);
    for (auto& t : out.terms_) t.exp += k;
    if (out.cap_) *out.cap_ += k;
    return out;
}

Series Series::scaled(code_t c) const {
    if (c == 0) {
        Series z(field_);
        return z;
    }
    Series out(*this);
    for (auto& t : out.terms_) t.coeff = field_->mul(t.coeff, c);
    return out;
}

Series Series::operator-() const {
    Series out(*this);
    for (auto& t : out.terms_) t.coeff = field_->neg(t.coeff);
    return out;
}

Series operator+(const Series& f, const Series& g) {
    require_same_field(f.field_, g.field_);
    const Field& F = *f.field_;
    const std::int64_t cap = std::min(cap_or_inf(f), cap_or_inf(g));
    Series out(f.field_);
    out.cap_ = to_cap(cap);
    auto i = f.terms_.begin(), j = g.terms_.begin();
    auto push = [&](Series::Term t) {
        if (t.coeff != 0 && t.exp < cap) out.terms_.push_back(t);
    };
    while (i != f.terms_.end() || j != g.terms_.end()) {
        if (j == g.terms_.end() || (i != f.terms_.end() && i->exp < j->exp)) {
            push(*i++);
        } else if (i == f.terms_.end() || j->exp < i->exp) {
            push(*j++);
        } else {
            push({i->exp, F.add(i->coeff, j->coeff)});
            ++i;
            ++j;
        }
    }
    return out;
}

Series operator-(const Series& f, const Series& g) { return f + (-g); }

Series operator*(const Series& f, const Series& g) {
    require_same_field(f.field_, g.field_);
    const Field& F = *f.field_;
    const std::int64_t cap = std::min(sat_add(f.valuation_lower_bound(), cap_or_inf(g)),
                                      sat_add(g.valuation_lower_bound(), cap_or_inf(f)));
    Series out(f.field_);
    out.cap_ = to_cap(cap);
    if (f.terms_.empty() || g.terms_.empty()) return out;

    const std::int64_t lo = f.terms_.front().exp + g.terms_.front().exp;
    const std::int64_t hi = std::min(f.terms_.back().exp + g.terms_.back().exp + 1, cap);
    if (hi <= lo) return out;

    if (hi - lo <= (1 << 20)) {
        std::vector<Series::code_t> acc(static_cast<std::size_t>(hi - lo), 0);
        for (const auto& a : f.terms_)
            for (const auto& b : g.terms_) {
                const std::int64_t k = a.exp + b.exp;
                if (k >= hi) break;
                auto& slot = acc[static_cast<std::size_t>(k - lo)];
                slot = F.add(slot, F.mul(a.coeff, b.coeff));
            }
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (acc[k] != 0) out.terms_.push_back({lo + static_cast<std::int64_t>(k), acc[k]});
    } else {
        std::map<std::int64_t, Series::code_t> acc;
        for (const auto& a : f.terms_)
            for (const auto& b : g.terms_) {
                const std::int64_t k = a.exp + b.exp;
                if (k >= hi) break;
                auto& slot = acc[k];
                slot = F.add(slot, F.mul(a.coeff, b.coeff));
            }
        for (const auto& [k, c] : acc)
            if (c != 0) out.terms_.push_back({k, c});
    }
    return out;
}

bool operator==(const Series& f, const Series& g) {
    return same_field(f.field_, g.field_) && f.cap_ == g.cap_ && f.terms_ == g.terms_;
}

Series frobenius(const Series& f) {
    const auto p = static_cast<std::int64_t>(f.field()->p());
    std::vector<Series::Term> terms(f.terms().begin(), f.terms().end());
    for (auto& t : terms) t.exp *= p;
    std::optional<std::int64_t> cap;
    if (f.cap()) cap = *f.cap() * p;
    return Series::from_terms(f.field(), std::move(terms), cap);
}

Series inverse(const Series& f, std::int64_t work_prec) {
    if (f.is_zero()) throw division_by_zero("inverse of the zero series");
    const std::int64_t v = f.valuation();  // throws when undecidable
    const Field& F = *f.field();
    const Series::code_t c_inv = F.inv(f.terms().front().coeff);
    if (f.is_monomial()) return Series::monomial(f.field(), c_inv, -v);
    if (work_prec < 1) throw precondition_error("work_prec must be positive");

    const std::int64_t relative = f.cap() ? *f.cap() - v : kInf;
    const std::int64_t n = std::min(work_prec, relative);

    // f = c u^v (1 + h); invert 1 + h term by term.
    std::vector<Series::code_t> h(static_cast<std::size_t>(n), 0);
    for (const auto& t : f.terms()) {
        const std::int64_t k = t.exp - v;
        if (k >= n) break;
        h[static_cast<std::size_t>(k)] = F.mul(t.coeff, c_inv);
    }
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k < h.size(); ++k)
        if (h[k] != 0) support.push_back(k);

    std::vector<Series::code_t> b(static_cast<std::size_t>(n), 0);
    b[0] = F.one();
    for (std::size_t k = 1; k < b.size(); ++k) {
        Series::code_t acc = 0;
        for (std::size_t j : support) {
            if (j > k) break;
            acc = F.add(acc, F.mul(h[j], b[k - j]));
        }
        b[k] = F.neg(acc);
    }

    std::vector<Series::Term> terms;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] != 0) terms.push_back({-v + static_cast<std::int64_t>(k), F.mul(b[k], c_inv)});
    return Series::from_terms(f.field(), std::move(terms), -v + n);
}

bool is_integral(const Series& f) {
    if (!f.terms().empty() && f.terms().front().exp < 0) return false;
    if (f.cap() && *f.cap() < 0)
        throw insufficient_precision("integrality undecided: coefficients from u^" + std::to_string(*f.cap()) +
                                     " to u^-1 are unknown");
    return true;
}

std::string to_string(const Series& f) {
    const Field& F = *f.field();
    std::vector<std::string> parts;
    for (const auto& t : f.terms()) {
        std::string s;
        if (t.exp == 0) {
            s = format_coeff(F, t.coeff);
        } else {
            if (t.coeff != 1) s = format_coeff(F, t.coeff) + "*";
            s += "u^" + std::to_string(t.exp);
        }
        parts.push_back(std::move(s));
    }
    if (f.cap()) parts.push_back("O(u^" + std::to_string(*f.cap()) + ")");
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

Series parse_series(const FieldPtr& field, std::string_view text) {
    text = strip(text);
    if (text.empty()) throw parse_error("empty series");
    std::vector<Series::Term> terms;
    std::optional<std::int64_t> cap;
    for (std::string_view term : split_terms(text)) {
        if (term.empty()) throw parse_error("empty term in series");
        if (term.front() == 'O') {
            std::string_view inner = strip(term.substr(1));
            if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
                throw parse_error("bad precision marker '" + std::string(term) + "'");
            auto k = parse_u_power(inner.substr(1, inner.size() - 2));
            if (!k) throw parse_error("bad precision marker '" + std::string(term) + "'");
            if (cap) throw parse_error("repeated precision marker");
            cap = *k;
            continue;
        }
        // coeff '*' 'u^' int | coeff | 'u^' int
        if (auto k = parse_u_power(term)) {
            terms.push_back({*k, field->one()});
            continue;
        }
        int depth = 0;
        std::size_t star = std::string_view::npos;
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            else if (term[i] == ')') --depth;
            else if (term[i] == '*' && depth == 0) {
                if (parse_u_power(term.substr(i + 1)).has_value()) star = i;
            }
        }
        if (star == std::string_view::npos) {
            terms.push_back({0, field->parse(term)});
        } else {
            terms.push_back({*parse_u_power(term.substr(star + 1)), field->parse(term.substr(0, star))});
        }
    }
    if (cap)
        for (const auto& t : terms)
            if (t.exp >= *cap && t.coeff != 0) throw parse_error("term at or beyond the precision marker");
    return Series::from_terms(field, std::move(terms), cap);
}

std::ostream& operator<<(std::ostream& os, const Series& f) { return os << to_string(f); }

}  // namespace kisinlab
