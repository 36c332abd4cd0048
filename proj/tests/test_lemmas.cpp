#include "kisinlab/lemmas.hpp"

#include <doctest.h>

#include <numeric>

using namespace kisinlab;

TEST_SUITE("lemmas") {

TEST_CASE("bounds lemma examples") {
    const LemmaReport r = verify_bounds_lemma({3, 2, 4});
    CHECK(r.passed());
    CHECK(r.witnesses == std::vector<AVector>{{0, 0}, {1, 1}, {2, 2}});
    CHECK(verify_bounds_lemma({5, 2, 8}).passed());
    CHECK(verify_bounds_lemma({3, 3, 4}).passed());
    CHECK(r.checked == 13 * 13);
}

TEST_CASE("decrement lemma examples") {
    const LemmaReport r = verify_decrement_lemma({3, 2, 8});
    CHECK(r.passed());
    bool saw22 = false, saw13 = false;
    for (const auto& c : r.choices) {
        if (c.a == AVector{2, 2}) {
            saw22 = true;
            CHECK(c.j == 0);
        }
        if (c.a == AVector{1, 3}) {
            saw13 = true;
            CHECK(c.j == 1);
        }
    }
    CHECK(saw22);
    CHECK(saw13);
    const LemmaReport vac = verify_decrement_lemma({3, 2, 4});
    CHECK(vac.passed());
    CHECK(vac.choices.empty());
}

TEST_CASE("decrement chains") {
    const GridPoint g{3, 2, 8};
    // Greedy smallest index: (3,3) -> (2,3) -> (1,3) -> (1,2) -> (1,1).
    const auto c33 = decrement_chain({3, 3}, g);
    CHECK_FALSE(c33.stuck);
    CHECK(c33.steps == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(decrement_chain({1, 1}, g).steps.empty());
    CHECK(decrement_chain({1, 2}, g).steps == std::vector<std::size_t>{1});
}

TEST_CASE("grid") {
    const auto grid = lemma_grid();
    CHECK(grid.size() == 18);
    for (const auto& g : grid) {
        CHECK(g.e % (g.p - 1) == 0);
        CHECK(verify_bounds_lemma(g).passed());
        CHECK(verify_decrement_lemma(g).passed());
    }
}

TEST_CASE("cyclic defect sum") {
    for (const AVector& a : {AVector{1, 2}, AVector{3, 1, 4}, AVector{0, 0, 0, 0}})
        CHECK(cyclic_defect_sum(a, 5) == 4 * std::accumulate(a.begin(), a.end(), std::int64_t{0}));
    CHECK(is_strictly_interior({1, 3}, 3, 8));
    CHECK_FALSE(is_strictly_interior({0, 3}, 3, 8));
    CHECK_FALSE(is_strictly_interior({4, 3}, 3, 8));
}

}
