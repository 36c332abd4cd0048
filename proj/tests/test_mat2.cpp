#include "kisinlab/errors.hpp"
#include "kisinlab/mat2.hpp"

#include <doctest.h>

using namespace kisinlab;

namespace {

const FieldPtr& F9() {
    static const FieldPtr f = Field::make(3, 2);
    return f;
}

Mat2 M(std::string_view a, std::string_view b, std::string_view c, std::string_view d) {
    return {parse_series(F9(), a), parse_series(F9(), b), parse_series(F9(), c), parse_series(F9(), d)};
}

}  // namespace

TEST_SUITE("mat2") {

TEST_CASE("examples") {
    CHECK(Mat2::diag_u(F9(), 4, 0).det() == parse_series(F9(), "u^4"));
    CHECK(M("0", "1", "2", "2*u") * M("2", "2*u", "u^-1", "0") == M("u^-1", "0", "0", "u"));
    CHECK(M("0", "g", "0", "0").adjugate() == M("0", "2*g", "0", "0"));
}

TEST_CASE("inverse and transpose") {
    const Mat2 B = M("u^-2", "g*u", "0", "u^2");
    CHECK(B * B.inverse(20) == Mat2::identity(F9()));
    CHECK(B.transposed() == M("u^-2", "0", "g*u", "u^2"));
    CHECK_THROWS_AS(Mat2::zero(F9()).inverse(20), singular_matrix);
    const Mat2 C = M("1 + u", "0", "0", "1");
    CHECK_FALSE(C.inverse(5).is_exact());
    CHECK((C * C.inverse(5))(0, 0) == parse_series(F9(), "1 + O(u^5)"));
}

TEST_CASE("integrality and frobenius") {
    CHECK(M("1", "u", "0", "u^3").is_integral());
    CHECK_FALSE(M("1", "u^-1", "0", "1").is_integral());
    CHECK(frobenius(M("u", "g", "u^-1", "0")) == M("u^3", "g", "u^-3", "0"));
    CHECK(M("1", "2", "0", "1").trace() == parse_series(F9(), "2"));
}

}
