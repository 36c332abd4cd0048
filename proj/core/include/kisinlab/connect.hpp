#pragma once

#include "kisinlab/moduli.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kisinlab {

// A tuple of nilpotent 2x2 matrices; trace and determinant are checked to
// be exactly zero.
class NilTuple {
public:
    explicit NilTuple(MatTuple N);
    // N_j = m, all other positions zero.
    static NilTuple single(const FieldPtr& field, std::size_t r, std::size_t j, Mat2 m);

    const MatTuple& N() const noexcept { return N_; }
    const Mat2& operator[](std::size_t i) const { return N_[i]; }
    std::size_t size() const noexcept { return N_.size(); }

private:
    MatTuple N_;
};

// phi(N_i) A_i adj(N_{i+1}) for every i.
std::vector<Mat2> path_products(const NilTuple& N, const Presentation& A);
// All of path_products are integral. Then (1+N) * M and M lie on a common
// rational curve in the moduli.
bool path_condition(const NilTuple& N, const Presentation& A);

// N_j = (1, -u; u^-1, -1). (u^-1 0; 0 u) = (0 1; -1 2u) (1 + N_j) with the
// first factor in GL_2(F[[u]]).
Mat2 shift_nilpotent(const FieldPtr& field);
Mat2 shift_unit_factor(const FieldPtr& field);

enum class MoveKind { kill_offdiagonal, shift, identification };
std::string to_string(MoveKind kind);
MoveKind parse_move_kind(const std::string& text);

/**
 * An undirected edge between two model ids. For kill_offdiagonal and
 * shift, `witness` is the nilpotent tuple applied at `from`:
 * (1+N) B_from spans the same lattice as B_to. For identification,
 * `cofactor` holds C_i = B_to_i B_from_i^{-1}.
 */
struct MoveEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    MoveKind kind = MoveKind::identification;
    std::optional<std::size_t> j;  // shift position, 0-based
    std::optional<NilTuple> witness;
    std::optional<MatTuple> cofactor;
};

// Kills every off-diagonal entry at once: N_i = (0, -w_i u^-a_i; 0, 0).
// Requires a non-diagonal point. Throws error if the witness fails the path
// condition or the target is not in the set.
MoveEdge kill_offdiagonal_move(const ModelSet& ms, std::size_t id);

enum class ShiftDirection { up, down };
// Edge between the diagonal points a and a + e_j (up) or a - e_j (down),
// oriented from the lower endpoint. Throws precondition_error when the point
// is not diagonal or the other endpoint is invalid or missing.
MoveEdge shift_move(const ModelSet& ms, std::size_t id, std::size_t j, ShiftDirection dir = ShiftDirection::up);

// Re-derives an edge's claim from the model set: path condition on the
// witness, and the target lattice.
bool verify_edge(const ModelSet& ms, const MoveEdge& edge);

struct ComponentGraph {
    std::vector<MoveEdge> edges;
    std::vector<std::size_t> label;  // per model id: smallest id in its component

    std::vector<std::vector<std::size_t>> components() const;
};

// Components for a fixed edge list; labels do not depend on edge order.
ComponentGraph components_from_edges(const ModelSet& ms, std::vector<MoveEdge> edges);

// Kill moves from every non-diagonal point and every shift between diagonal
// points whose a-vectors differ by a unit vector. Identification edges are
// never needed here: distinct points of a model set are distinct lattices.
ComponentGraph build_component_graph(const ModelSet& ms);

struct ConnectivityReport {
    ModelSet models;
    ComponentGraph graph;
    std::optional<std::size_t> hub;               // (1,...,1), w = 0
    std::vector<std::size_t> nonordinary;         // ids
    std::map<std::size_t, std::vector<std::size_t>> witnesses;  // id -> edge indices, walking to the hub
    std::vector<std::size_t> disconnected;        // non-ordinary ids not reaching the hub
    std::vector<std::size_t> bad_edges;           // edges failing verify_edge
    bool verified = false;
};

ConnectivityReport verify_nonordinary_connected(ModelSet ms);
ConnectivityReport verify_nonordinary_connected(const KisinParams& params, const EnumerateOptions& options = {});

// Walks each witness path and re-verifies every edge on it.
bool recheck_witnesses(const ConnectivityReport& report);

// One node per model, one cluster per component.
std::string to_dot(const ModelSet& ms, const ComponentGraph& graph);

}  // namespace kisinlab
