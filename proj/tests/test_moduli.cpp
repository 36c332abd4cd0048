#include "kisinlab/errors.hpp"
#include "kisinlab/moduli.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace kisinlab;

namespace {

std::vector<ModelPoint> with_a(const ModelSet& ms, const AVector& a) {
    std::vector<ModelPoint> out;
    for (const auto& m : ms.points)
        if (m.a == a) out.push_back(m);
    return out;
}

}  // namespace

TEST_SUITE("moduli") {

TEST_CASE("valid a-vectors") {
    using V = std::vector<AVector>;
    CHECK(valid_a_vectors(3, 2, 4) == V{{0, 0}, {1, 1}, {2, 2}});
    CHECK(valid_a_vectors(3, 2, 2) == V{{0, 0}, {1, 1}});
    CHECK(valid_a_vectors(3, 2, 8) ==
          V{{0, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 4}});
    for (std::int64_t p : {3, 5})
        for (std::int64_t r : {2, 3})
            for (std::int64_t m : {1, 2, 3}) {
                const std::int64_t e = m * (p - 1);
                CHECK(valid_a_vectors(p, r, e) == testkit::brute_a_vectors(p, r, e, 3 * e));
            }
}

TEST_CASE("ordinarity") {
    const KisinParams P4 = make_params(3, 2, 4), P8 = make_params(3, 2, 8);
    CHECK(classify_ordinary({0, 0}, P4));
    CHECK_FALSE(classify_ordinary({1, 1}, P4));
    CHECK(classify_ordinary({2, 2}, P4));
    CHECK(classify_ordinary({4, 4}, P8));
    CHECK_FALSE(classify_ordinary({1, 3}, P8));
    CHECK_THROWS_AS(classify_ordinary({0, 1}, P4), precondition_error);
}

TEST_CASE("model coordinates") {
    const KisinParams P = make_params(3, 2, 8);
    const FieldPtr& F = P.field;
    const BasisChange B = model_basis_change(P, diagonal_point(P, {1, 1}));
    for (const Mat2& m : B.B()) CHECK(m == Mat2::diag_u(F, -1, 1));
    const BasisChange I = model_basis_change(P, diagonal_point(P, {0, 0}));
    for (const Mat2& m : I.B()) CHECK(m == Mat2::identity(F));

    const ModelPoint pt{{2, 2}, {parse_series(F, "g*u"), Series(F)}};
    const BasisChange C = model_basis_change(P, pt);
    CHECK(C[0] == Mat2(parse_series(F, "u^-2"), parse_series(F, "g*u"), Series(F), parse_series(F, "u^2")));
    CHECK(model_from_basis_change(C).a == pt.a);
    CHECK(model_from_basis_change(C).w == pt.w);

    // The standard coordinates: a = 0 is the base lattice itself, a = e/(p-1) is also ordinary.
    CHECK(model_presentation(P, diagonal_point(P, {0, 0})).A == base_model(P).A);
    const Presentation top = model_presentation(P, diagonal_point(P, {4, 4}));
    for (const Mat2& m : top.A) CHECK(m == Mat2::diag_u(F, 0, 8));
}

TEST_CASE("enumerate (3,2,4)") {
    const KisinParams P = make_params(3, 2, 4);
    const ModelSet ms = enumerate_models(P);
    CHECK(ms.window == 4);
    CHECK(ms.points.size() == 11);
    std::vector<ModelPoint> nonord;
    for (const auto& m : ms.points)
        if (!classify_ordinary(m.a, P)) nonord.push_back(m);
    REQUIRE(nonord.size() == 1);
    CHECK(nonord[0].a == AVector{1, 1});
    CHECK(nonord[0].is_diagonal());
    // The ordinary locus is a P^1 over F_9: a = 0 plus the nine lines at a = 2.
    CHECK(with_a(ms, {0, 0}).size() == 1);
    CHECK(with_a(ms, {2, 2}).size() == 9);
}

TEST_CASE("enumerate (3,2,2) is entirely ordinary") {
    const KisinParams P = make_params(3, 2, 2);
    const ModelSet ms = enumerate_models(P);
    CHECK(ms.points.size() == 10);
    std::size_t diagonal = 0;
    for (const auto& m : ms.points) {
        CHECK(classify_ordinary(m.a, P));
        diagonal += m.is_diagonal();
    }
    CHECK(diagonal == 2);
}

TEST_CASE("enumerate (3,2,8): the a=(2,2) stratum") {
    const KisinParams P = make_params(3, 2, 8);
    const ModelSet ms = enumerate_models(P);
    const auto stratum = with_a(ms, {2, 2});
    CHECK(stratum.size() == 81);
    std::set<std::pair<Field::code_t, Field::code_t>> seen;
    for (const auto& m : stratum) {
        for (const Series& w : m.w) {
            CHECK(w.is_exact());
            for (const auto& t : w.terms()) CHECK(t.exp == 1);
        }
        seen.insert({m.w[0].coeff_code(1), m.w[1].coeff_code(1)});
    }
    CHECK(seen.size() == 81);
    std::map<AVector, std::size_t> sizes;
    for (const auto& m : ms.points) ++sizes[m.a];
    CHECK(sizes == std::map<AVector, std::size_t>{{{0, 0}, 1},    {{1, 1}, 1},   {{1, 2}, 9},    {{1, 3}, 81},
                                                  {{2, 1}, 9},    {{2, 2}, 81},  {{2, 3}, 729},  {{3, 1}, 81},
                                                  {{3, 2}, 729},  {{3, 3}, 6561}, {{4, 4}, 9}});
}

TEST_CASE("model set invariants") {
    for (auto [p, r, e] : {std::tuple{3u, 2u, 4}, {5u, 2u, 4}, {3u, 3u, 4}, {3u, 2u, 2}}) {
        const KisinParams P = make_params(p, r, e);
        const ModelSet ms = enumerate_models(P);
        for (std::size_t i = 0; i < ms.points.size(); ++i) {
            CHECK(is_valid_presentation(model_presentation(P, ms.points[i])));
            if (i) CHECK(canonical_less(ms.points[i - 1], ms.points[i]));
            for (std::size_t j = i + 1; j < ms.points.size(); ++j)
                CHECK_FALSE(same_lattice(model_basis_change(P, ms.points[i]), model_basis_change(P, ms.points[j])));
            CHECK(ms.find(ms.points[i]) == i);
        }
    }
}

TEST_CASE("window stability") {
    for (auto [p, r, e] : {std::tuple{3u, 2u, 2}, {3u, 2u, 4}, {5u, 2u, 4}, {3u, 3u, 4}, {3u, 2u, 8}}) {
        const KisinParams P = make_params(p, r, e);
        EnumerateOptions wide;
        wide.window = 2 * e;
        CHECK(same_model_points(enumerate_models(P), enumerate_models(P, wide)));
    }
}

TEST_CASE("oracle equivalence") {
    for (auto [p, r, e, box] : {std::tuple{3u, 2u, 2, 2}, {3u, 2u, 4, 4}, {5u, 2u, 4, 2}, {3u, 3u, 4, 2}, {3u, 3u, 4, 3}}) {
        const KisinParams P = make_params(p, r, e);
        OracleOptions o;
        o.box = box;
        const ModelSet oracle = brute_force_lattices(P, o);
        EnumerateOptions w;
        w.window = box;
        CAPTURE(p);
        CAPTURE(e);
        CHECK(same_model_points(oracle, enumerate_models(P, w)));
    }
    // A box that cannot hold a lattice of determinant index e/(p-1) is empty.
    OracleOptions zero;
    zero.box = 0;
    CHECK(brute_force_lattices(make_params(3, 2, 4), zero).points.empty());
    OracleOptions huge;
    huge.box = 9;
    CHECK_THROWS_AS(brute_force_lattices(make_params(3, 2, 4), huge), precondition_error);
}

TEST_CASE("threads do not change the result") {
    const KisinParams P = make_params(3, 2, 8);
    EnumerateOptions one, four;
    four.threads = 4;
    const ModelSet a = enumerate_models(P, one), b = enumerate_models(P, four);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(canonical_equal(a.points[i], b.points[i]));
}

TEST_CASE("budget") {
    EnumerateOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(enumerate_models(make_params(3, 2, 8), tight), budget_exceeded);
    OracleOptions o;
    o.budget = 100;
    CHECK_THROWS_AS(brute_force_lattices(make_params(3, 2, 8), o), budget_exceeded);
}

}
