#include "kisinlab/lemmas.hpp"

#include "kisinlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace kisinlab {

namespace {

void require_grid(const GridPoint& g) {
    if (g.p < 3 || !is_prime(static_cast<std::uint64_t>(g.p))) throw precondition_error("p must be an odd prime");
    if (g.r < 2) throw precondition_error("r must be at least 2");
    if (g.e < 1 || g.e % (g.p - 1) != 0) throw precondition_error("(p-1) must divide e");
}

bool all_equal(const AVector& a, std::int64_t v) {
    return std::all_of(a.begin(), a.end(), [v](std::int64_t x) { return x == v; });
}

}  // namespace

std::int64_t cyclic_defect_sum(const AVector& a, std::int64_t p) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += p * a[i] - a[(i + 1) % a.size()];
    return sum;
}

bool is_strictly_interior(const AVector& a, std::int64_t p, std::int64_t e) {
    const std::int64_t h = e / (p - 1);
    return std::all_of(a.begin(), a.end(), [h](std::int64_t x) { return x > 0 && x < h; });
}

LemmaReport verify_bounds_lemma(const GridPoint& g) {
    require_grid(g);
    LemmaReport rep;
    rep.lemma = "bounds";
    rep.params = g;
    const std::int64_t lo = -g.e, hi = 2 * g.e, h = g.e / (g.p - 1);

    // Odometer over the whole box; no pruning, so nothing is assumed.
    AVector a(static_cast<std::size_t>(g.r), lo);
    while (true) {
        ++rep.checked;
        if (satisfies_inequalities(a, g.p, g.e)) {
            rep.witnesses.push_back(a);
            const bool touches = std::any_of(a.begin(), a.end(), [&](std::int64_t x) { return x == lo || x == hi; });
            if (touches) rep.box_contact = true;
            if (std::any_of(a.begin(), a.end(), [&](std::int64_t x) { return x < 0 || x > h; }))
                rep.counterexamples.push_back({a, "coordinate outside [0, e/(p-1)]"});
            if (std::find(a.begin(), a.end(), 0) != a.end() && !all_equal(a, 0))
                rep.counterexamples.push_back({a, "a zero coordinate without the zero vector"});
            if (std::find(a.begin(), a.end(), h) != a.end() && !all_equal(a, h))
                rep.counterexamples.push_back({a, "a coordinate e/(p-1) without the constant vector"});
            if (cyclic_defect_sum(a, g.p) != (g.p - 1) * std::accumulate(a.begin(), a.end(), std::int64_t{0}))
                rep.counterexamples.push_back({a, "cyclic sum identity fails"});
        }
        std::size_t c = 0;
        while (c < a.size() && a[c] == hi) a[c++] = lo;
        if (c == a.size()) break;
        ++a[c];
    }
    return rep;
}

LemmaReport verify_decrement_lemma(const GridPoint& g) {
    require_grid(g);
    LemmaReport rep;
    rep.lemma = "decrement";
    rep.params = g;
    for (const auto& a : valid_a_vectors(g.p, g.r, g.e)) {
        ++rep.checked;
        if (!is_strictly_interior(a, g.p, g.e) || all_equal(a, 1)) continue;
        rep.witnesses.push_back(a);
        bool found = false;
        for (std::size_t j = 0; j < a.size() && !found; ++j) {
            AVector b = a;
            --b[j];
            if (satisfies_inequalities(b, g.p, g.e)) {
                rep.choices.push_back({a, j});
                found = true;
            }
        }
        if (!found) rep.counterexamples.push_back({a, "no coordinate can be decremented"});
    }
    return rep;
}

DecrementChain decrement_chain(const AVector& a, const GridPoint& g) {
    require_grid(g);
    if (!satisfies_inequalities(a, g.p, g.e) || !is_strictly_interior(a, g.p, g.e))
        throw precondition_error("decrement_chain needs a valid strictly interior a-vector");
    DecrementChain out;
    AVector cur = a;
    while (!all_equal(cur, 1)) {
        bool moved = false;
        for (std::size_t j = 0; j < cur.size(); ++j) {
            AVector b = cur;
            --b[j];
            if (satisfies_inequalities(b, g.p, g.e) && is_strictly_interior(b, g.p, g.e)) {
                out.steps.push_back(j);
                cur = std::move(b);
                moved = true;
                break;
            }
        }
        if (!moved) {
            out.stuck = ChainStuck{cur};
            break;
        }
    }
    return out;
}

std::vector<GridPoint> lemma_grid(std::int64_t r_max, std::int64_t m_max) {
    std::vector<GridPoint> out;
    for (std::int64_t p : {3, 5})
        for (std::int64_t r = 2; r <= r_max; ++r)
            for (std::int64_t m = 1; m <= m_max; ++m) out.push_back({p, r, m * (p - 1)});
    return out;
}

}  // namespace kisinlab
