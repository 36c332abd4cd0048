#pragma once

#include "kisinlab/moduli.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kisinlab {

// Plain (p, r, e) triple; the lemma checks need no field arithmetic.
struct GridPoint {
    std::int64_t p;
    std::int64_t r;
    std::int64_t e;
};

struct Counterexample {
    AVector a;
    std::string reason;
};

struct DecrementChoice {
    AVector a;
    std::size_t j;  // 0-based coordinate that was decremented
};

struct LemmaReport {
    std::string lemma;  // "bounds" or "decrement"
    GridPoint params;
    std::uint64_t checked = 0;
    std::vector<Counterexample> counterexamples;
    // bounds: the solutions found; decrement: the hypotheses examined.
    std::vector<AVector> witnesses;
    std::vector<DecrementChoice> choices;  // decrement only
    bool box_contact = false;              // bounds only

    bool passed() const { return counterexamples.empty() && !box_contact; }
};

/**
 * Sweeps every integer vector of [-e, 2e]^r, keeps the solutions of
 * e >= p a_i - a_{i+1} >= 0 and checks that each lies in [0, e/(p-1)]^r,
 * that a zero coordinate forces the zero vector, and that a coordinate equal
 * to e/(p-1) forces the constant vector. Also records whether any solution
 * touches the boundary of the box.
 */
LemmaReport verify_bounds_lemma(const GridPoint& g);

// For each valid a with 0 < a_i < e/(p-1) and a != (1,...,1), finds the
// smallest j whose unit decrement is still a solution.
LemmaReport verify_decrement_lemma(const GridPoint& g);

// Sum over the cycle of (p a_i - a_{i+1}); equals (p-1) * sum(a).
std::int64_t cyclic_defect_sum(const AVector& a, std::int64_t p);

bool is_strictly_interior(const AVector& a, std::int64_t p, std::int64_t e);

struct ChainStuck {
    AVector at;
};

/**
 * Greedy walk from a strictly interior valid a down to (1, ..., 1): each
 * step decrements the smallest coordinate j whose decrement stays valid and
 * strictly interior. Returns the 0-based indices, or the vector it got stuck
 * at (which would contradict the decrement lemma).
 */
struct DecrementChain {
    std::vector<std::size_t> steps;
    std::optional<ChainStuck> stuck;
};
DecrementChain decrement_chain(const AVector& a, const GridPoint& g);

// p in {3, 5}, r in [2, r_max], e = m (p-1) for m in [1, m_max].
std::vector<GridPoint> lemma_grid(std::int64_t r_max = 4, std::int64_t m_max = 3);

}  // namespace kisinlab
