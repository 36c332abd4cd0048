#include "kisinlab/errors.hpp"
#include "kisinlab/kisin.hpp"

#include "properties.hpp"

#include <doctest.h>

#include <cstring>

using namespace kisinlab;

namespace {

Mat2 M(const FieldPtr& F, std::string_view a, std::string_view b, std::string_view c, std::string_view d) {
    return {parse_series(F, a), parse_series(F, b), parse_series(F, c), parse_series(F, d)};
}

MatTuple constant_tuple(const Mat2& m, std::size_t r) { return MatTuple(std::vector<Mat2>(r, m)); }

}  // namespace

TEST_SUITE("kisin") {

TEST_CASE("parameter preconditions") {
    CHECK_NOTHROW(make_params(3, 2, 4));
    CHECK(make_params(3, 2, 4).work_prec == 4 * 4 * 3 + 8);
    CHECK(make_params(3, 2, 8).height() == 4);
    try {
        make_params(3, 2, 3);
        FAIL("expected precondition_error");
    } catch (const precondition_error& ex) {
        CHECK(std::strstr(ex.what(), "(p-1) must divide e") != nullptr);
    }
    CHECK_THROWS_AS(make_params(2, 2, 2), precondition_error);
    CHECK_THROWS_AS(make_params(9, 2, 8), precondition_error);
    CHECK_THROWS_AS(make_params(3, 1, 2), precondition_error);
    CHECK_THROWS_AS(make_params(3, 2, 0), precondition_error);
}

TEST_CASE("base model and ambient") {
    for (auto [p, e] : {std::pair{3u, 4}, {3u, 2}, {5u, 4}}) {
        const KisinParams P = make_params(p, 2, e);
        const Presentation A = base_model(P);
        REQUIRE(A.A.size() == 2);
        for (const Mat2& m : A.A) CHECK(m == Mat2::diag_u(P.field, e, 0));
        CHECK(is_valid_presentation(A));
        const Presentation I = ambient_phi(P);
        for (const Mat2& m : I.A) CHECK(m == Mat2::identity(P.field));
        CHECK_FALSE(is_valid_presentation(I));
    }
}

TEST_CASE("change_basis") {
    const KisinParams P = make_params(3, 2, 4);
    const Presentation A = base_model(P);
    CHECK(change_basis(A, BasisChange::identity(P)).A == A.A);
    const BasisChange B(P, constant_tuple(Mat2::diag_u(P.field, -1, 1), 2));
    const Presentation moved = change_basis(A, B);
    for (const Mat2& m : moved.A) CHECK(m == Mat2::diag_u(P.field, 2, 2));
    CHECK(is_valid_presentation(moved));
    CHECK_THROWS_AS(BasisChange(P, constant_tuple(Mat2::diag_u(P.field, 1, 1), 2)), precondition_error);
    CHECK_THROWS_AS(BasisChange(P, constant_tuple(Mat2::identity(P.field), 3)), precondition_error);
}

TEST_CASE("validity") {
    const KisinParams P = make_params(3, 2, 4);
    auto pres = [&](const Mat2& m) { return Presentation{P, constant_tuple(m, 2)}; };
    CHECK(is_valid_presentation(pres(Mat2::diag_u(P.field, 2, 2))));
    CHECK_FALSE(is_valid_presentation(pres(Mat2::diag_u(P.field, 4, 1))));
    CHECK_FALSE(is_valid_presentation(pres(Mat2::diag_u(P.field, -1, 5))));
}

TEST_CASE("lattice_presentation uses column generators") {
    const KisinParams P = make_params(3, 2, 4);
    CHECK(lattice_presentation(P, constant_tuple(Mat2::identity(P.field), 2)).A == ambient_phi(P).A);
    const auto uI = lattice_presentation(P, constant_tuple(Mat2::diag_u(P.field, 1, 1), 2));
    for (const Mat2& m : uI.A) CHECK(m == Mat2::diag_u(P.field, 2, 2));

    // Transpose dictionary: A_i^T = G_{i+1}^{-1} phi(G_i).
    testkit::Gen g(P.field, 11);
    for (int trial = 0; trial < 50; ++trial) {
        const MatTuple G({g.unit_det(), g.unit_det()});
        const auto A = lattice_presentation(P, G);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(A.A[i].transposed() == G[G.next(i)].inverse(P.work_prec) * frobenius(G[i]));
    }
}

TEST_CASE("same_lattice") {
    const KisinParams P = make_params(3, 2, 8);
    const FieldPtr& F = P.field;
    const BasisChange B(P, MatTuple({M(F, "u^-2", "g*u", "0", "u^2"), M(F, "u^-1", "0", "0", "u")}));
    CHECK(same_lattice(B, B));
    const BasisChange shifted(P, MatTuple({M(F, "u^-2", "g*u + u^2", "0", "u^2"), M(F, "u^-1", "u", "0", "u")}));
    CHECK(same_lattice(B, shifted));
    const BasisChange moved(P, MatTuple({M(F, "u^-2", "g*u + 1", "0", "u^2"), M(F, "u^-1", "0", "0", "u")}));
    CHECK_FALSE(same_lattice(B, moved));
    CHECK_FALSE(same_lattice(BasisChange::identity(P), BasisChange(P, constant_tuple(Mat2::diag_u(F, -1, 1), 2))));
}

TEST_CASE("Iwasawa normal form") {
    const FieldPtr F = Field::make(3, 2);
    const auto id = iwasawa_normal_form(Mat2::identity(F), 20);
    CHECK(id.a == 0);
    CHECK(id.v.is_zero());

    const auto shifted = iwasawa_normal_form(M(F, "2", "2*u", "u^-1", "0"), 20);
    CHECK(shifted.a == 1);
    CHECK(shifted.v.is_zero());
    CHECK(shifted.unit_cofactor * shifted.triangular() == M(F, "2", "2*u", "u^-1", "0"));

    const auto tri = iwasawa_normal_form(M(F, "u^-2", "1", "0", "u^2"), 20);
    CHECK(tri.a == 2);
    CHECK(tri.v == parse_series(F, "1"));
    CHECK(tri.unit_cofactor == Mat2::identity(F));

    // Off-diagonal entries at or above u^a are absorbed into the cofactor.
    const auto absorbed = iwasawa_normal_form(M(F, "u^-1", "g + u^3", "0", "u"), 20);
    CHECK(absorbed.a == 1);
    CHECK(absorbed.v == parse_series(F, "g"));

    CHECK_THROWS_AS(iwasawa_normal_form(Mat2::diag_u(F, 1, 0), 20), precondition_error);
}

TEST_CASE("compose applies inner first") {
    const KisinParams P = make_params(3, 2, 4);
    testkit::Gen g(P.field, 5);
    const BasisChange B(P, MatTuple({g.unit_det(), g.unit_det()}));
    const BasisChange C(P, MatTuple({g.unit_det(), g.unit_det()}));
    const BasisChange CB = compose(C, B);
    for (std::size_t i = 0; i < 2; ++i) CHECK(CB[i] == C[i] * B[i]);
}

}
