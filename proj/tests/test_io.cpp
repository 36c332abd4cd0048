#include "kisinlab/errors.hpp"
#include "kisinlab/io.hpp"

#include <doctest.h>

using namespace kisinlab;

TEST_SUITE("io") {

TEST_CASE("params carry the modulus and work precision") {
    const KisinParams P = make_params(5, 3, 8, 100);
    const json j = to_json(P);
    CHECK(j.at("p") == 5);
    CHECK(j.at("r") == 3);
    CHECK(j.at("e") == 8);
    CHECK(j.at("work_prec") == 100);
    CHECK(j.at("modulus").get<std::vector<std::uint32_t>>() == P.field->modulus());
    const KisinParams back = params_from_json(j);
    CHECK(same_params(P, back));
    json bad = j;
    bad["modulus"] = {0, 0, 0, 1};
    CHECK_THROWS_AS(params_from_json(bad), precondition_error);
}

TEST_CASE("series, matrices and presentations") {
    const KisinParams P = make_params(3, 2, 4);
    const Series s = parse_series(P.field, "(g+1)*u^-2 + 2 + u^3 + O(u^7)");
    CHECK(to_json(s) == "(g+1)*u^-2 + 2 + u^3 + O(u^7)");
    CHECK(series_from_json(P.field, to_json(s)) == s);
    const Presentation A = base_model(P);
    const json ja = to_json(A);
    CHECK(ja.at("A").size() == 2);
    CHECK(ja.at("A")[0] == json::parse(R"([["u^4","0"],["0","1"]])"));
    const Presentation back = presentation_from_json(ja);
    CHECK(back.A == A.A);
    const BasisChange B = model_basis_change(P, diagonal_point(P, {1, 1}));
    CHECK(basis_change_from_json(to_json(B)).B() == B.B());
    CHECK_THROWS_AS(series_from_json(P.field, json(3)), parse_error);
}

TEST_CASE("model sets round-trip") {
    const ModelSet ms = enumerate_models(make_params(3, 2, 4));
    const json j = to_json(ms);
    CHECK(j.at("tool") == tool_version());
    CHECK(j.at("window") == 4);
    CHECK(j.at("models").size() == 11);
    CHECK(j.at("models")[1] == json::parse(R"({"id":1,"a":[1,1],"w":["0","0"],"ordinary":false})"));
    const ModelSet back = model_set_from_json(j);
    CHECK(same_model_points(ms, back));
    CHECK(to_json(back) == j);
}

TEST_CASE("connectivity reports reload and re-verify") {
    const auto rep = verify_nonordinary_connected(make_params(3, 3, 4));
    const json j = to_json(rep);
    CHECK(j.at("verified") == true);
    const auto back = connectivity_report_from_json(j);
    CHECK(back.verified);
    CHECK(back.graph.edges.size() == rep.graph.edges.size());
    CHECK(recheck_witnesses(back));
    CHECK(to_json(back) == j);
}

TEST_CASE("a tampered witness fails the re-check") {
    const auto rep = verify_nonordinary_connected(make_params(3, 2, 8));
    json j = to_json(rep);
    // Point a kill edge at the wrong target.
    bool tampered = false;
    for (auto& e : j.at("edges")) {
        if (e.at("kind") == "kill_offdiagonal") {
            e["to"] = e.at("from");
            tampered = true;
            break;
        }
    }
    REQUIRE(tampered);
    bool rejected = false;
    try {
        rejected = !recheck_witnesses(connectivity_report_from_json(j));
    } catch (const error&) {
        rejected = true;
    }
    CHECK(rejected);
}

TEST_CASE("path-check input") {
    const json j = json::parse(R"({
      "params": {"p": 3, "r": 2, "e": 4},
      "presentation": [[["u^4","0"],["0","1"]], [["u^4","0"],["0","1"]]],
      "nil": [[["0","u^-1"],["0","0"]], [["0","0"],["u^-1","0"]]]
    })");
    const PathCheckInput in = path_check_input_from_json(j);
    CHECK_FALSE(path_condition(in.nil, in.presentation));
    json bad = j;
    bad["nil"][0] = json::parse(R"([["1","0"],["0","0"]])");
    CHECK_THROWS_AS(path_check_input_from_json(bad), precondition_error);
}

TEST_CASE("lemma report") {
    const json j = to_json(verify_bounds_lemma({3, 2, 4}));
    CHECK(j.at("lemma") == "bounds");
    CHECK(j.at("passed") == true);
    CHECK(j.at("solutions").size() == 3);
}

}
