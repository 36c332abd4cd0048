#include "kisinlab/moduli.hpp"

#include "kisinlab/errors.hpp"
#include "kisinlab/union_find.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <thread>

namespace kisinlab {

bool ModelPoint::is_diagonal() const {
    return std::all_of(w.begin(), w.end(), [](const Series& s) { return s.is_zero(); });
}

std::vector<std::string> ModelPoint::serialized_w() const {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (const auto& s : w) out.push_back(to_string(s));
    return out;
}

bool canonical_less(const ModelPoint& x, const ModelPoint& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.serialized_w() < y.serialized_w();
}

bool canonical_equal(const ModelPoint& x, const ModelPoint& y) { return x.a == y.a && x.w == y.w; }

std::optional<std::size_t> ModelSet::find(const ModelPoint& m) const {
    auto it = std::lower_bound(points.begin(), points.end(), m, canonical_less);
    if (it != points.end() && canonical_equal(*it, m)) return static_cast<std::size_t>(it - points.begin());
    return std::nullopt;
}

std::optional<std::size_t> ModelSet::find_diagonal(const AVector& a) const {
    return find(diagonal_point(params, a));
}

bool satisfies_inequalities(const AVector& a, std::int64_t p, std::int64_t e) {
    const std::size_t r = a.size();
    for (std::size_t i = 0; i < r; ++i) {
        const std::int64_t d = p * a[i] - a[(i + 1) % r];
        if (d < 0 || d > e) return false;
    }
    return true;
}

bool satisfies_inequalities(const AVector& a, const KisinParams& params) {
    if (a.size() != params.r()) return false;
    return satisfies_inequalities(a, params.p(), params.e);
}

std::vector<AVector> valid_a_vectors(std::int64_t p, std::int64_t r, std::int64_t e) {
    const std::int64_t lo = -e, hi = 2 * e;
    std::vector<AVector> out;
    AVector a(static_cast<std::size_t>(r));
    // a_{i+1} is confined to [p a_i - e, p a_i] by edge i.
    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == a.size()) {
            const std::int64_t d = p * a.back() - a.front();
            if (d >= 0 && d <= e) out.push_back(a);
            return;
        }
        std::int64_t from = lo, to = hi;
        if (i > 0) {
            from = std::max(from, p * a[i - 1] - e);
            to = std::min(to, p * a[i - 1]);
        }
        for (std::int64_t v = from; v <= to; ++v) {
            a[i] = v;
            self(self, i + 1);
        }
    };
    if (r > 0) extend(extend, 0);
    return out;
}

std::vector<AVector> valid_a_vectors(const KisinParams& params) {
    return valid_a_vectors(params.p(), params.r(), params.e);
}

bool classify_ordinary(const AVector& a, const KisinParams& params) {
    if (!satisfies_inequalities(a, params)) throw precondition_error("a-vector violates e >= p a_i - a_{i+1} >= 0");
    const std::int64_t h = params.height();
    const bool all_zero = std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
    const bool all_top = std::all_of(a.begin(), a.end(), [h](std::int64_t x) { return x == h; });
    return all_zero || all_top;
}

ModelPoint diagonal_point(const KisinParams& params, const AVector& a) {
    return {a, std::vector<Series>(a.size(), Series(params.field))};
}

BasisChange model_basis_change(const KisinParams& params, const ModelPoint& m) {
    if (m.a.size() != params.r() || m.w.size() != params.r())
        throw precondition_error("model point has the wrong length");
    std::vector<Mat2> items;
    for (std::size_t i = 0; i < m.a.size(); ++i)
        items.emplace_back(Series::u_power(params.field, -m.a[i]), m.w[i], Series(params.field),
                           Series::u_power(params.field, m.a[i]));
    return {params, MatTuple(std::move(items))};
}

Presentation model_presentation(const KisinParams& params, const ModelPoint& m) {
    return change_basis(base_model(params), model_basis_change(params, m));
}

ModelPoint model_from_basis_change(const BasisChange& B) {
    ModelPoint out;
    for (const auto& b : B.B()) {
        NormalForm nf = iwasawa_normal_form(b, B.params().work_prec);
        out.a.push_back(nf.a);
        out.w.push_back(std::move(nf.v));
    }
    return out;
}

namespace {

struct Slot {
    std::size_t component;
    std::int64_t exp;
};

struct Stratum {
    AVector a;
    std::vector<Slot> slots;
    std::vector<std::size_t> class_of;  // slot -> free class, or npos when forced to zero
    std::size_t free_classes = 0;
};

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Propagates the coefficient pairings of every edge for one a-vector.
Stratum propagate(const KisinParams& params, const AVector& a, std::int64_t window) {
    const auto p = static_cast<std::int64_t>(params.p());
    const std::int64_t e = params.e;
    const std::size_t r = a.size();

    Stratum st;
    st.a = a;
    std::vector<std::map<std::int64_t, std::size_t>> index(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::int64_t k = -window; k < a[i]; ++k) {
            index[i][k] = st.slots.size();
            st.slots.push_back({i, k});
        }

    UnionFind uf(st.slots.size());
    std::vector<bool> zero(st.slots.size(), false);
    auto lookup = [&](std::size_t i, std::int64_t k) -> std::size_t {
        auto it = index[i].find(k);
        return it == index[i].end() ? npos : it->second;
    };

    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t j = (i + 1) % r;
        const std::int64_t shift = e - p * a[i];  // exponent offset of the w_{i+1} term
        // Term c u^k of w_i lands at p k - a_j; term d u^m of w_j at m + shift.
        for (const auto& [k, s] : index[i]) {
            const std::int64_t t = p * k - a[j];
            if (t >= 0) continue;
            const std::size_t partner = lookup(j, t - shift);
            if (partner == npos) zero[s] = true;
            else uf.unite(s, partner);
        }
        for (const auto& [m, s] : index[j]) {
            const std::int64_t t = m + shift;
            if (t >= 0) continue;
            const std::int64_t num = t + a[j];
            const bool hit = num % p == 0 && lookup(i, num / p) != npos;
            if (!hit) zero[s] = true;
        }
    }

    std::vector<bool> root_zero(st.slots.size(), false);
    for (std::size_t s = 0; s < st.slots.size(); ++s)
        if (zero[s]) root_zero[uf.find(s)] = true;
    std::map<std::size_t, std::size_t> class_id;
    st.class_of.assign(st.slots.size(), npos);
    for (std::size_t s = 0; s < st.slots.size(); ++s) {
        const std::size_t root = uf.find(s);
        if (root_zero[root]) continue;
        auto [it, inserted] = class_id.try_emplace(root, class_id.size());
        st.class_of[s] = it->second;
    }
    st.free_classes = class_id.size();
    return st;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t k, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (out > limit / base) return limit + 1;
        out *= base;
    }
    return out;
}

std::vector<ModelPoint> expand(const KisinParams& params, const Stratum& st) {
    const Field& F = *params.field;
    const std::size_t r = st.a.size();
    std::vector<ModelPoint> out;
    std::vector<Field::code_t> values(st.free_classes, 0);
    while (true) {
        std::vector<std::vector<Series::Term>> terms(r);
        for (std::size_t s = 0; s < st.slots.size(); ++s) {
            const std::size_t c = st.class_of[s];
            if (c == npos || values[c] == 0) continue;
            terms[st.slots[s].component].push_back({st.slots[s].exp, values[c]});
        }
        ModelPoint m;
        m.a = st.a;
        for (std::size_t i = 0; i < r; ++i) m.w.push_back(Series::from_terms(params.field, std::move(terms[i])));
        if (is_valid_presentation(model_presentation(params, m))) out.push_back(std::move(m));

        std::size_t c = 0;
        while (c < values.size() && ++values[c] == F.q()) values[c++] = 0;
        if (c == values.size()) break;
    }
    return out;
}

void finalize(ModelSet& ms) {
    std::sort(ms.points.begin(), ms.points.end(), canonical_less);
    std::vector<ModelPoint> kept;
    for (auto& m : ms.points) {
        if (!kept.empty() && canonical_equal(kept.back(), m) &&
            same_lattice(model_basis_change(ms.params, kept.back()), model_basis_change(ms.params, m)))
            continue;
        kept.push_back(std::move(m));
    }
    ms.points = std::move(kept);
}

}  // namespace

ModelSet enumerate_models(const KisinParams& params, const EnumerateOptions& options) {
    const std::int64_t window = options.window < 0 ? params.e : options.window;
    std::vector<Stratum> strata;
    std::uint64_t candidates = 0;
    for (const auto& a : valid_a_vectors(params)) {
        strata.push_back(propagate(params, a, window));
        const std::uint64_t n = checked_pow(params.field->q(), strata.back().free_classes, options.budget);
        candidates += n;
        if (n > options.budget || candidates > options.budget)
            throw budget_exceeded("budget exceeded: enumeration needs more than " +
                                  std::to_string(options.budget) + " candidate evaluations");
    }

    ModelSet ms{params, window, "enumerate_models", {}};
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(strata.size())));
    if (threads <= 1) {
        for (const auto& st : strata)
            for (auto& m : expand(params, st)) ms.points.push_back(std::move(m));
    } else {
        std::vector<std::future<std::vector<ModelPoint>>> jobs;
        for (unsigned t = 0; t < threads; ++t)
            jobs.push_back(std::async(std::launch::async, [&, t] {
                std::vector<ModelPoint> part;
                for (std::size_t s = t; s < strata.size(); s += threads)
                    for (auto& m : expand(params, strata[s])) part.push_back(std::move(m));
                return part;
            }));
        for (auto& job : jobs)
            for (auto& m : job.get()) ms.points.push_back(std::move(m));
    }
    finalize(ms);
    return ms;
}

bool same_model_points(const ModelSet& x, const ModelSet& y) {
    if (!same_field(x.params.field, y.params.field) || x.params.e != y.params.e) return false;
    if (x.points.size() != y.points.size()) return false;
    for (std::size_t i = 0; i < x.points.size(); ++i)
        if (x.points[i].a != y.points[i].a || x.points[i].serialized_w() != y.points[i].serialized_w())
            return false;
    return true;
}

}  // namespace kisinlab
