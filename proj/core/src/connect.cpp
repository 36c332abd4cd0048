#include "kisinlab/connect.hpp"

#include "kisinlab/errors.hpp"
#include "kisinlab/union_find.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace kisinlab {

namespace {

void require_nilpotent(const Mat2& m, std::size_t i) {
    for (const Series& s : {m.trace(), m.det()}) {
        if (s.is_zero()) continue;
        if (s.terms().empty())
            throw insufficient_precision("cannot certify nilpotency of N_" + std::to_string(i + 1));
        throw precondition_error("N_" + std::to_string(i + 1) + " is not nilpotent");
    }
}

Mat2 one_plus(const Mat2& n) { return Mat2::identity(n.field()) + n; }

const ModelPoint& point(const ModelSet& ms, std::size_t id) {
    if (id >= ms.points.size()) throw precondition_error("model id out of range");
    return ms.points[id];
}

std::string format_a(const AVector& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + "]";
}

// Canonical target of (1+N) B_from, looked up in the set.
std::size_t resolve_target(const ModelSet& ms, std::size_t from_id, const NilTuple& N) {
    const BasisChange B = model_basis_change(ms.params, ms.points[from_id]);
    std::vector<Mat2> moved;
    for (std::size_t i = 0; i < N.size(); ++i) moved.push_back(one_plus(N[i]) * B[i]);
    const ModelPoint target = model_from_basis_change(BasisChange(ms.params, MatTuple(std::move(moved))));
    const auto id = ms.find(target);
    if (!id) throw falsification("move target a=" + format_a(target.a) + " is not in the model set", from_id);
    return *id;
}

}  // namespace

NilTuple::NilTuple(MatTuple N) : N_(std::move(N)) {
    for (std::size_t i = 0; i < N_.size(); ++i) require_nilpotent(N_[i], i);
}

NilTuple NilTuple::single(const FieldPtr& field, std::size_t r, std::size_t j, Mat2 m) {
    std::vector<Mat2> items(r, Mat2::zero(field));
    items.at(j) = std::move(m);
    return NilTuple(MatTuple(std::move(items)));
}

std::vector<Mat2> path_products(const NilTuple& N, const Presentation& A) {
    if (N.size() != A.A.size()) throw precondition_error("nilpotent tuple and presentation differ in length");
    std::vector<Mat2> out;
    for (std::size_t i = 0; i < N.size(); ++i)
        out.push_back(frobenius(N[i]) * A.A[i] * N[N.N().next(i)].adjugate());
    return out;
}

bool path_condition(const NilTuple& N, const Presentation& A) {
    for (const auto& m : path_products(N, A))
        if (!m.is_integral()) return false;
    return true;
}

Mat2 shift_nilpotent(const FieldPtr& field) {
    const auto& F = *field;
    return {Series::constant(field, F.one()), Series::monomial(field, F.neg(F.one()), 1), Series::u_power(field, -1),
            Series::constant(field, F.neg(F.one()))};
}

Mat2 shift_unit_factor(const FieldPtr& field) {
    const auto& F = *field;
    return {Series(field), Series::constant(field, F.one()), Series::constant(field, F.neg(F.one())),
            Series::monomial(field, F.from_int(2), 1)};
}

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::kill_offdiagonal: return "kill_offdiagonal";
        case MoveKind::shift: return "shift";
        case MoveKind::identification: return "identification";
    }
    return "?";
}

MoveKind parse_move_kind(const std::string& text) {
    if (text == "kill_offdiagonal") return MoveKind::kill_offdiagonal;
    if (text == "shift") return MoveKind::shift;
    if (text == "identification") return MoveKind::identification;
    throw parse_error("unknown move kind '" + text + "'");
}

MoveEdge kill_offdiagonal_move(const ModelSet& ms, std::size_t id) {
    const ModelPoint& m = point(ms, id);
    if (m.is_diagonal()) throw precondition_error("kill move needs a nonzero off-diagonal entry");
    const FieldPtr& F = ms.params.field;
    std::vector<Mat2> items;
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        Series top = -(m.w[i].shifted(-m.a[i]));
        items.emplace_back(Series(F), std::move(top), Series(F), Series(F));
    }
    NilTuple N{MatTuple(std::move(items))};
    if (!path_condition(N, model_presentation(ms.params, m)))
        throw falsification("off-diagonal kill move fails the path condition at model " + std::to_string(id), id);
    MoveEdge edge;
    edge.from = id;
    edge.to = resolve_target(ms, id, N);
    edge.kind = MoveKind::kill_offdiagonal;
    edge.witness = std::move(N);
    return edge;
}

MoveEdge shift_move(const ModelSet& ms, std::size_t id, std::size_t j, ShiftDirection dir) {
    const ModelPoint& m = point(ms, id);
    if (!m.is_diagonal()) throw precondition_error("shift move needs a diagonal point");
    if (j >= m.a.size()) throw precondition_error("shift index out of range");
    AVector other = m.a;
    other[j] += dir == ShiftDirection::up ? 1 : -1;
    if (!satisfies_inequalities(other, ms.params))
        throw precondition_error("shift endpoint " + format_a(other) + " is not a valid a-vector");
    const auto other_id = ms.find_diagonal(other);
    if (!other_id) throw precondition_error("shift endpoint " + format_a(other) + " is not in the model set");

    const std::size_t lower = dir == ShiftDirection::up ? id : *other_id;
    const std::size_t upper = dir == ShiftDirection::up ? *other_id : id;
    NilTuple N = NilTuple::single(ms.params.field, m.a.size(), j, shift_nilpotent(ms.params.field));
    if (!path_condition(N, model_presentation(ms.params, ms.points[lower])))
        throw falsification("shift move fails the path condition at model " + std::to_string(lower), lower);
    if (resolve_target(ms, lower, N) != upper)
        throw falsification("shift move lands away from a + e_j", lower);
    MoveEdge edge;
    edge.from = lower;
    edge.to = upper;
    edge.kind = MoveKind::shift;
    edge.j = j;
    edge.witness = std::move(N);
    return edge;
}

bool verify_edge(const ModelSet& ms, const MoveEdge& edge) {
    if (edge.from >= ms.points.size() || edge.to >= ms.points.size()) return false;
    const BasisChange from = model_basis_change(ms.params, ms.points[edge.from]);
    const BasisChange to = model_basis_change(ms.params, ms.points[edge.to]);
    const std::int64_t wp = ms.params.work_prec;
    if (edge.kind == MoveKind::identification) {
        if (!edge.cofactor || edge.cofactor->size() != from.B().size()) return false;
        for (std::size_t i = 0; i < from.B().size(); ++i) {
            const Mat2& c = (*edge.cofactor)[i];
            if (!c.is_integral() || c.det().valuation() != 0) return false;
            if (!same_lattice(c * from[i], to[i], wp)) return false;
        }
        return same_lattice(from, to);
    }
    if (!edge.witness || edge.witness->size() != from.B().size()) return false;
    if (!path_condition(*edge.witness, model_presentation(ms.params, ms.points[edge.from]))) return false;
    for (std::size_t i = 0; i < from.B().size(); ++i)
        if (!same_lattice(one_plus((*edge.witness)[i]) * from[i], to[i], wp)) return false;
    return true;
}

std::vector<std::vector<std::size_t>> ComponentGraph::components() const {
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t id = 0; id < label.size(); ++id) groups[label[id]].push_back(id);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [lbl, ids] : groups) out.push_back(std::move(ids));
    return out;
}

ComponentGraph components_from_edges(const ModelSet& ms, std::vector<MoveEdge> edges) {
    UnionFind uf(ms.points.size());
    for (const auto& e : edges) uf.unite(e.from, e.to);
    ComponentGraph g;
    g.edges = std::move(edges);
    g.label = uf.min_labels();
    return g;
}

ComponentGraph build_component_graph(const ModelSet& ms) {
    std::vector<MoveEdge> edges;
    for (std::size_t id = 0; id < ms.points.size(); ++id)
        if (!ms.points[id].is_diagonal()) edges.push_back(kill_offdiagonal_move(ms, id));

    for (std::size_t id = 0; id < ms.points.size(); ++id) {
        const ModelPoint& m = ms.points[id];
        if (!m.is_diagonal()) continue;
        for (std::size_t j = 0; j < m.a.size(); ++j) {
            AVector up = m.a;
            ++up[j];
            if (satisfies_inequalities(up, ms.params) && ms.find_diagonal(up))
                edges.push_back(shift_move(ms, id, j, ShiftDirection::up));
        }
    }

    // No identification edges: (a, w) with w reduced mod u^a is a normal form, so
    // distinct points of an enumerated set are never the same lattice.
    return components_from_edges(ms, std::move(edges));
}

ConnectivityReport verify_nonordinary_connected(ModelSet ms) {
    ConnectivityReport rep{std::move(ms), {}, std::nullopt, {}, {}, {}, {}, false};
    const ModelSet& models = rep.models;
    rep.graph = build_component_graph(models);

    for (std::size_t k = 0; k < rep.graph.edges.size(); ++k)
        if (!verify_edge(models, rep.graph.edges[k])) rep.bad_edges.push_back(k);

    for (std::size_t id = 0; id < models.points.size(); ++id)
        if (!classify_ordinary(models.points[id].a, models.params)) rep.nonordinary.push_back(id);

    rep.hub = models.find_diagonal(AVector(models.params.r(), 1));
    if (rep.hub && classify_ordinary(models.points[*rep.hub].a, models.params)) rep.hub.reset();

    if (rep.hub) {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(models.points.size());
        for (std::size_t k = 0; k < rep.graph.edges.size(); ++k) {
            const auto& e = rep.graph.edges[k];
            adj[e.from].push_back({k, e.to});
            adj[e.to].push_back({k, e.from});
        }
        constexpr std::size_t none = static_cast<std::size_t>(-1);
        std::vector<std::size_t> via(models.points.size(), none);
        std::vector<bool> seen(models.points.size(), false);
        std::deque<std::size_t> queue{*rep.hub};
        seen[*rep.hub] = true;
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop_front();
            for (const auto& [k, next] : adj[cur]) {
                if (seen[next]) continue;
                seen[next] = true;
                via[next] = k;
                queue.push_back(next);
            }
        }
        for (std::size_t id : rep.nonordinary) {
            if (!seen[id]) {
                rep.disconnected.push_back(id);
                continue;
            }
            std::vector<std::size_t> path;
            for (std::size_t cur = id; cur != *rep.hub;) {
                const auto& e = rep.graph.edges[via[cur]];
                path.push_back(via[cur]);
                cur = e.from == cur ? e.to : e.from;
            }
            rep.witnesses[id] = std::move(path);
        }
    } else {
        rep.disconnected = rep.nonordinary;
    }
    rep.verified = rep.disconnected.empty() && rep.bad_edges.empty();
    return rep;
}

ConnectivityReport verify_nonordinary_connected(const KisinParams& params, const EnumerateOptions& options) {
    return verify_nonordinary_connected(enumerate_models(params, options));
}

bool recheck_witnesses(const ConnectivityReport& report) {
    if (!report.disconnected.empty()) return false;
    for (std::size_t id : report.nonordinary) {
        auto it = report.witnesses.find(id);
        if (it == report.witnesses.end() || !report.hub) return false;
        std::size_t cur = id;
        for (std::size_t k : it->second) {
            if (k >= report.graph.edges.size()) return false;
            const auto& e = report.graph.edges[k];
            if (e.from != cur && e.to != cur) return false;
            if (!verify_edge(report.models, e)) return false;
            cur = e.from == cur ? e.to : e.from;
        }
        if (cur != *report.hub) return false;
    }
    return true;
}

std::string to_dot(const ModelSet& ms, const ComponentGraph& graph) {
    std::ostringstream out;
    out << "graph models {\n  node [shape=box];\n";
    const auto comps = graph.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        out << "  subgraph cluster_" << c << " {\n    label=\"component " << comps[c].front() << "\";\n";
        for (std::size_t id : comps[c]) {
            const ModelPoint& m = ms.points[id];
            out << "    n" << id << " [label=\"a=" << format_a(m.a) << " w=[";
            const auto w = m.serialized_w();
            for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
            out << "] ord=" << (classify_ordinary(m.a, ms.params) ? 'T' : 'F') << "\"];\n";
        }
        out << "  }\n";
    }
    for (const auto& e : graph.edges) {
        out << "  n" << e.from << " -- n" << e.to << " [label=\"" << to_string(e.kind);
        if (e.j) out << "(" << *e.j + 1 << ")";
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace kisinlab
