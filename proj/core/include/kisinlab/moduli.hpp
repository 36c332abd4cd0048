#pragma once

#include "kisinlab/kisin.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kisinlab {

// Diagonal exponents (a_1, ..., a_r) of a triangular basis change.
using AVector = std::vector<std::int64_t>;

/**
 * Canonical coordinates of a finite flat model B*M_F, where M_F is the base
 * lattice and B_i = (u^-a_i, w_i; 0, u^a_i). Each w_i is reduced modulo
 * u^a_i F[[u]], which makes (a, w) unique per lattice.
 */
struct ModelPoint {
    AVector a;
    std::vector<Series> w;

    bool is_diagonal() const;
    std::vector<std::string> serialized_w() const;
};

// Canonical order: a lexicographically, then the printed w lexicographically.
bool canonical_less(const ModelPoint& x, const ModelPoint& y);
bool canonical_equal(const ModelPoint& x, const ModelPoint& y);

struct ModelSet {
    KisinParams params;
    std::int64_t window = 0;
    std::string provenance;
    std::vector<ModelPoint> points;  // canonical order; ids are positions

    std::optional<std::size_t> find(const ModelPoint& m) const;
    // The point (a, w = 0), if present.
    std::optional<std::size_t> find_diagonal(const AVector& a) const;
};

// e >= p a_i - a_{i+1} >= 0 for every i (cyclically).
bool satisfies_inequalities(const AVector& a, const KisinParams& params);
bool satisfies_inequalities(const AVector& a, std::int64_t p, std::int64_t e);

// Every solution of the cyclic inequality system, found by a pruned search
// of the box [-e, 2e]^r; sorted lexicographically.
std::vector<AVector> valid_a_vectors(const KisinParams& params);
std::vector<AVector> valid_a_vectors(std::int64_t p, std::int64_t r, std::int64_t e);

// All a_i = 0 or all a_i = e/(p-1). Throws precondition_error on invalid a.
bool classify_ordinary(const AVector& a, const KisinParams& params);

ModelPoint diagonal_point(const KisinParams& params, const AVector& a);
BasisChange model_basis_change(const KisinParams& params, const ModelPoint& m);
// change_basis(base_model, model_basis_change(m)).
Presentation model_presentation(const KisinParams& params, const ModelPoint& m);
// Reduces an arbitrary unit-determinant basis change to canonical coordinates.
ModelPoint model_from_basis_change(const BasisChange& B);

struct EnumerateOptions {
    std::int64_t window = -1;  // < 0 selects e
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
};

/**
 * All models B*M_F with B triangular as above and each w_i supported on
 * [-window, a_i). For a fixed a-vector the only remaining condition is the
 * integrality of the (1,2) entry of phi(B_i) A_i B_{i+1}^{-1},
 *
 *     u^{-a_{i+1}} phi(w_i) - u^{e - p a_i} w_{i+1},
 *
 * which is F_q-linear in the coefficients and pairs single coefficients
 * across each edge of the cycle. Those pairings are propagated with a
 * union-find over coefficient slots; every free class then ranges over F_q.
 * Survivors are re-checked with is_valid_presentation.
 *
 * Throws budget_exceeded if more than `budget` candidates would be generated.
 */
ModelSet enumerate_models(const KisinParams& params, const EnumerateOptions& options = {});

struct OracleOptions {
    std::int64_t box = -1;  // < 0 selects e/(p-1)
    std::uint64_t budget = 200'000'000;
};

/**
 * Independent oracle: enumerates every lattice L with u^box L_std in L in
 * u^-box L_std through its row Hermite form (u^alpha, x; 0, u^beta), keeps
 * the r-tuples with phi(L_i) in L_{i+1} and the cyclotomic determinant
 * index, confirms each with is_valid_presentation(lattice_presentation(.)),
 * and rewrites the survivors in canonical model coordinates. Hermite shapes
 * (alpha, beta) that cannot close a cycle of length r under the containment
 * test are skipped before any lattice is built. Requires box <= 2e.
 */
ModelSet brute_force_lattices(const KisinParams& params, const OracleOptions& options = {});

// Canonical-set equality (same params, same points).
bool same_model_points(const ModelSet& x, const ModelSet& y);

}  // namespace kisinlab
