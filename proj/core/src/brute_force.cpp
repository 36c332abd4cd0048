#include "kisinlab/errors.hpp"
#include "kisinlab/moduli.hpp"

#include <algorithm>

namespace kisinlab {

namespace {

// Hermite shape of (u^alpha, x; 0, u^beta) with x stored densely on [lo, beta).
struct Shape {
    std::int64_t alpha;
    std::int64_t beta;
    std::int64_t lo;
    std::size_t offset = 0;  // index of the first lattice of this shape
    std::uint64_t count = 1;

    std::int64_t len() const { return std::max<std::int64_t>(0, beta - lo); }
};

struct Lattice {
    std::size_t shape;
    std::vector<Field::code_t> x;
};

/**
 * phi(L) in M, rows (u^{p alpha_L}, phi(x_L)) and (0, u^{p beta_L}):
 * the second row needs p beta_L >= beta_M; the first, after subtracting
 * u^d times M's first row (d = p alpha_L - alpha_M >= 0), needs
 * phi(x_L) - u^d x_M to vanish below beta_M.
 */
class Oracle {
public:
    Oracle(const KisinParams& params, std::int64_t box, std::uint64_t budget)
        : params_(params), q_(params.field->q()), p_(params.p()), budget_(budget) {
        // det index: val det A_i = p d_i - d_{i+1} = e has the single solution d_i = e/(p-1).
        const std::int64_t h = params.height();
        std::vector<Shape> all;
        for (std::int64_t alpha = -box; alpha <= box; ++alpha) {
            const std::int64_t beta = h - alpha;
            if (beta < -box || beta > box) continue;
            // L in u^-box L_std: x supported from -box. u^box L_std in L: val x >= alpha + beta - box.
            all.push_back({alpha, beta, std::max(-box, alpha + beta - box)});
        }
        // Only shapes on a closed walk of length r in the shape graph can carry a cycle of lattices.
        const std::size_t s = all.size();
        std::vector<std::vector<char>> reach(s, std::vector<char>(s, 0));
        for (std::size_t i = 0; i < s; ++i) reach[i][i] = 1;
        for (std::size_t step = 0; step < params.r(); ++step) {
            std::vector<std::vector<char>> next(s, std::vector<char>(s, 0));
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t k = 0; k < s; ++k)
                    if (reach[i][k])
                        for (std::size_t j = 0; j < s; ++j)
                            if (shape_edge(all[k], all[j])) next[i][j] = 1;
            reach = std::move(next);
        }
        std::size_t offset = 0;
        for (std::size_t i = 0; i < s; ++i) {
            if (!reach[i][i]) continue;
            Shape sh = all[i];
            sh.offset = offset;
            for (std::int64_t k = 0; k < sh.len(); ++k) {
                if (sh.count > budget_ / q_) throw budget_exceeded("oracle lattice list exceeds budget");
                sh.count *= q_;
            }
            offset += sh.count;
            if (offset > budget_) throw budget_exceeded("oracle lattice list exceeds budget");
            shapes_.push_back(sh);
        }
        total_ = offset;
    }

    std::size_t size() const { return total_; }

    Lattice lattice(std::size_t index) const {
        std::size_t si = 0;
        while (index >= shapes_[si].offset + shapes_[si].count) ++si;
        std::uint64_t code = index - shapes_[si].offset;
        Lattice L{si, std::vector<Field::code_t>(static_cast<std::size_t>(shapes_[si].len()))};
        for (auto& c : L.x) {
            c = static_cast<Field::code_t>(code % q_);
            code /= q_;
        }
        return L;
    }

    // Every M with phi(L) in M, sorted.
    std::vector<std::size_t> successors(const Lattice& L) {
        const Shape& S = shapes_[L.shape];
        const auto p = static_cast<std::int64_t>(p_);
        std::vector<std::size_t> out;
        for (const Shape& T : shapes_) {
            if (!shape_edge(S, T)) continue;
            const std::int64_t d = p * S.alpha - T.alpha;
            // phi(x_L) must vanish where M has no room to match it.
            bool ok = true;
            for (std::int64_t t = p * S.lo; t < std::min(T.lo + d, T.beta) && ok; ++t)
                if (phi_x(L, t) != 0) ok = false;
            if (!ok) continue;
            // x_M at s is forced to phi(x_L)_{s+d} when s + d < beta_M, free otherwise.
            std::uint64_t forced = 0, weight = 1;
            std::vector<std::uint64_t> free_weights;
            for (std::int64_t pos = T.lo; pos < T.beta; ++pos) {
                if (pos + d < T.beta)
                    forced += weight * phi_x(L, pos + d);
                else
                    free_weights.push_back(weight);
                weight *= q_;
            }
            std::uint64_t variants = 1;
            for (std::size_t k = 0; k < free_weights.size(); ++k) variants *= q_;
            charge(variants);
            for (std::uint64_t v = 0; v < variants; ++v) {
                std::uint64_t code = forced, rest = v;
                for (auto w : free_weights) {
                    code += w * (rest % q_);
                    rest /= q_;
                }
                out.push_back(T.offset + code);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool frobenius_into(const Lattice& L, const Lattice& M) const {
        const Shape& S = shapes_[L.shape];
        const Shape& T = shapes_[M.shape];
        if (!shape_edge(S, T)) return false;
        const auto p = static_cast<std::int64_t>(p_);
        const std::int64_t d = p * S.alpha - T.alpha;
        for (std::int64_t t = std::min(p * S.lo, T.lo + d); t < T.beta; ++t) {
            const std::int64_t s = t - d;
            const Field::code_t rhs = s >= T.lo && s < T.beta ? M.x[static_cast<std::size_t>(s - T.lo)] : 0;
            if (phi_x(L, t) != rhs) return false;
        }
        return true;
    }

    Mat2 generator_rows(const Lattice& L) const {
        const Shape& S = shapes_[L.shape];
        std::vector<Series::Term> terms;
        for (std::size_t k = 0; k < L.x.size(); ++k)
            if (L.x[k] != 0) terms.push_back({S.lo + static_cast<std::int64_t>(k), L.x[k]});
        const FieldPtr& F = params_.field;
        return {Series::u_power(F, S.alpha), Series::from_terms(F, std::move(terms)), Series(F),
                Series::u_power(F, S.beta)};
    }

    void charge(std::uint64_t n) {
        spent_ += n;
        if (spent_ > budget_) throw budget_exceeded("oracle exceeded its budget of " + std::to_string(budget_) + " checks");
    }

private:
    bool shape_edge(const Shape& S, const Shape& T) const {
        const auto p = static_cast<std::int64_t>(p_);
        return p * S.alpha >= T.alpha && p * S.beta >= T.beta;
    }

    Field::code_t phi_x(const Lattice& L, std::int64_t t) const {
        const auto p = static_cast<std::int64_t>(p_);
        if (t % p != 0) return 0;
        const std::int64_t k = t / p - shapes_[L.shape].lo;
        if (k < 0 || k >= static_cast<std::int64_t>(L.x.size())) return 0;
        return L.x[static_cast<std::size_t>(k)];
    }

    const KisinParams& params_;
    std::uint64_t q_;
    std::uint32_t p_;
    std::uint64_t budget_;
    std::uint64_t spent_ = 0;
    std::vector<Shape> shapes_;
    std::size_t total_ = 0;
};

}  // namespace

ModelSet brute_force_lattices(const KisinParams& params, const OracleOptions& options) {
    const std::int64_t box = options.box < 0 ? params.height() : options.box;
    if (box > 2 * params.e) throw precondition_error("oracle box must not exceed 2e");
    Oracle oracle(params, box, options.budget);
    const std::size_t n = oracle.size();
    const std::size_t r = params.r();

    ModelSet ms{params, box, "brute_force_lattices", {}};
    // Frobenius containment does not depend on the component index, so one
    // lattice list serves every position; successors are generated on demand.
    std::vector<Lattice> chain(r);
    auto close_cycle = [&]() {
        std::vector<Mat2> columns;
        std::vector<Mat2> basis;
        const Mat2 unbase = Mat2::diag_u(params.field, -params.height(), 0);
        for (std::size_t i = 0; i < r; ++i) {
            const Mat2 rows = oracle.generator_rows(chain[i]);
            columns.push_back(rows.transposed());
            basis.push_back(rows * unbase);
        }
        if (!is_valid_presentation(lattice_presentation(params, MatTuple(std::move(columns)))))
            throw error("oracle containment test disagrees with is_valid_presentation");
        ms.points.push_back(model_from_basis_change(BasisChange(params, MatTuple(std::move(basis)))));
    };
    auto walk = [&](auto&& self, std::size_t depth) -> void {
        if (depth == r) {
            if (oracle.frobenius_into(chain[r - 1], chain[0])) close_cycle();
            return;
        }
        for (std::size_t next : oracle.successors(chain[depth - 1])) {
            chain[depth] = oracle.lattice(next);
            oracle.charge(1);
            self(self, depth + 1);
        }
    };
    for (std::size_t start = 0; start < n; ++start) {
        chain[0] = oracle.lattice(start);
        walk(walk, 1);
    }

    std::sort(ms.points.begin(), ms.points.end(), canonical_less);
    return ms;
}

}  // namespace kisinlab
