#include "kisinlab/errors.hpp"
#include "kisinlab/series.hpp"

#include <doctest.h>

using namespace kisinlab;

namespace {

const FieldPtr& F9() {
    static const FieldPtr f = Field::make(3, 2);
    return f;
}

Series S(std::string_view text) { return parse_series(F9(), text); }

}  // namespace

TEST_SUITE("series") {

TEST_CASE("arithmetic examples") {
    CHECK((S("u^-1 + 1") * S("u")) == S("1 + u"));
    const Series zero = S("1 + u") * Series(F9());
    CHECK(zero.is_zero());
    CHECK(zero.is_exact());
    CHECK((S("1 + u") * S("1 + 2*u")) == S("1 + 2*u^2"));
    CHECK((S("1 + u") - S("1 + u")).is_zero());
}

TEST_CASE("inverse") {
    const Series m = inverse(S("u^3"), 10);
    CHECK(m.is_exact());
    CHECK(m == S("u^-3"));

    const Series inv = inverse(S("1 + u"), 6);
    CHECK(inv == S("1 + 2*u + u^2 + 2*u^3 + u^4 + 2*u^5 + O(u^6)"));
    CHECK(inv.cap() == 6);
    const Series one = S("1 + u") * inv;
    CHECK(one == S("1 + O(u^6)"));

    CHECK_THROWS_AS(inverse(Series(F9()), 6), division_by_zero);
    CHECK_THROWS_AS(inverse(S("O(u^3)"), 6), insufficient_precision);
}

TEST_CASE("valuation") {
    CHECK(S("u^2 + u^5").valuation() == 2);
    CHECK(Series(F9()).valuation() == Series::infinite_valuation);
    CHECK_THROWS_AS(S("O(u^3)").valuation(), insufficient_precision);
    CHECK(S("O(u^3)").valuation_lower_bound() == 3);
    CHECK(S("u + O(u^3)").valuation() == 1);
}

TEST_CASE("frobenius substitutes u -> u^p and fixes coefficients") {
    CHECK(frobenius(S("g + u")) == S("g + u^3"));
    CHECK(frobenius(S("2")) == S("2"));
    CHECK(frobenius(S("u^-1")) == S("u^-3"));
    CHECK(frobenius(S("1 + O(u^2)")) == S("1 + O(u^6)"));
}

TEST_CASE("integrality is decided from exact support") {
    CHECK(is_integral(S("1 + u")));
    CHECK_FALSE(is_integral(S("u^-1")));
    const Series cancel = S("u^-4 + u^-1") + S("2*u^-4 + 2*u^-1 + u");
    CHECK(cancel == S("u"));
    CHECK(is_integral(cancel));
    CHECK_FALSE(is_integral(S("u^-2 + O(u^3)")));
    CHECK_THROWS_AS(is_integral(S("O(u^-2)")), insufficient_precision);
}

TEST_CASE("text form round-trips") {
    for (const char* text : {"(g+1)*u^-2 + 2 + u^3", "0", "u^1", "(2*g)*u^4", "g + O(u^2)", "O(u^-1)", "(2*g+2)"}) {
        CAPTURE(text);
        CHECK(to_string(S(text)) == text);
    }
    CHECK(S("(g+1)*u^-2 + 2 + u^3").coeff(-2).to_string() == "g+1");
    CHECK_THROWS_AS(S("u^"), parse_error);
    // Bare u and out-of-order terms are accepted and printed canonically.
    CHECK(to_string(S("u^2 + u")) == "u^1 + u^2");
    CHECK_THROWS_AS(S("u^2 + "), parse_error);
    CHECK_THROWS_AS(S("3*u"), parse_error);
    CHECK_THROWS_AS(S("u^5 + O(u^2)"), parse_error);
}

TEST_CASE("precision states") {
    const Series f = S("1 + u + u^4").truncated(3);
    CHECK_FALSE(f.is_exact());
    CHECK(f == S("1 + u + O(u^3)"));
    CHECK_THROWS_AS(f.coeff(5), insufficient_precision);
    CHECK(f.reduced_mod(2) == S("1 + u"));
    CHECK_THROWS_AS(f.reduced_mod(4), insufficient_precision);
    // The product only knows what both factors determine.
    CHECK((f * S("u^-1 + O(u^2)")).cap() == 2);
    CHECK((S("u^-2") * f).cap() == 1);
}

TEST_CASE("mixing fields is rejected") {
    CHECK_THROWS_AS(S("1") + Series::constant(Field::make(5, 2), 1), field_mismatch);
}

}
