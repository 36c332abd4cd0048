#pragma once

#include "kisinlab/connect.hpp"
#include "kisinlab/lemmas.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace kisinlab {

using json = nlohmann::json;

// "kisinlab <version>", embedded in every artifact.
std::string tool_version();

json to_json(const KisinParams& params);
// Rebuilds the field from p, r and the stored modulus.
KisinParams params_from_json(const json& j);

json to_json(const Series& s);
Series series_from_json(const FieldPtr& field, const json& j);
json to_json(const Mat2& m);
Mat2 mat2_from_json(const FieldPtr& field, const json& j);
json to_json(const MatTuple& t);
MatTuple mat_tuple_from_json(const FieldPtr& field, const json& j);

json to_json(const Presentation& A);     // {"params", "A"}
Presentation presentation_from_json(const json& j);
json to_json(const BasisChange& B);      // {"params", "B"}
BasisChange basis_change_from_json(const json& j);

json to_json(const ModelSet& ms);
ModelSet model_set_from_json(const json& j);

json to_json(const MoveEdge& edge);
MoveEdge move_edge_from_json(const FieldPtr& field, const json& j);

json to_json(const ConnectivityReport& report);
// Rebuilds models, edges and witness paths. Nothing is recomputed; use
// recheck_witnesses() on the result to re-verify.
ConnectivityReport connectivity_report_from_json(const json& j);

json to_json(const LemmaReport& report);

// {"params", "presentation": [...], "nil": [...]}
struct PathCheckInput {
    Presentation presentation;
    NilTuple nil;
};
PathCheckInput path_check_input_from_json(const json& j);

}  // namespace kisinlab
