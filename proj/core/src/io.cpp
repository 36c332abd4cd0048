#include "kisinlab/io.hpp"

#include "kisinlab/errors.hpp"

namespace kisinlab {

namespace {

template <class T>
T field_of(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& ex) {
        throw parse_error(std::string("bad value for '") + key + "': " + ex.what());
    }
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing key '") + key + "'");
    return j[key];
}

json a_to_json(const AVector& a) { return json(a); }

}  // namespace

std::string tool_version() { return std::string("kisinlab ") + KISINLAB_VERSION; }

json to_json(const KisinParams& params) {
    return {{"p", params.p()},
            {"r", params.r()},
            {"e", params.e},
            {"modulus", params.field->modulus()},
            {"work_prec", params.work_prec}};
}

KisinParams params_from_json(const json& j) {
    const auto p = field_of<std::uint32_t>(j, "p");
    const auto r = field_of<std::uint32_t>(j, "r");
    const auto e = field_of<std::int64_t>(j, "e");
    const std::int64_t work_prec = j.contains("work_prec") ? field_of<std::int64_t>(j, "work_prec") : 0;
    FieldPtr field = j.contains("modulus") ? Field::make(p, r, field_of<std::vector<std::uint32_t>>(j, "modulus"))
                                           : Field::make(p, r);
    return make_params(std::move(field), e, work_prec);
}

json to_json(const Series& s) { return to_string(s); }

Series series_from_json(const FieldPtr& field, const json& j) {
    if (!j.is_string()) throw parse_error("series must be a string");
    return parse_series(field, j.get<std::string>());
}

json to_json(const Mat2& m) {
    return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Mat2 mat2_from_json(const FieldPtr& field, const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2)
        throw parse_error("matrix must be a 2x2 array of series strings");
    return {series_from_json(field, j[0][0]), series_from_json(field, j[0][1]), series_from_json(field, j[1][0]),
            series_from_json(field, j[1][1])};
}

json to_json(const MatTuple& t) {
    json out = json::array();
    for (const auto& m : t) out.push_back(to_json(m));
    return out;
}

MatTuple mat_tuple_from_json(const FieldPtr& field, const json& j) {
    if (!j.is_array()) throw parse_error("matrix tuple must be an array");
    std::vector<Mat2> items;
    for (const auto& m : j) items.push_back(mat2_from_json(field, m));
    return MatTuple(std::move(items));
}

json to_json(const Presentation& A) { return {{"params", to_json(A.params)}, {"A", to_json(A.A)}}; }

Presentation presentation_from_json(const json& j) {
    KisinParams params = params_from_json(member(j, "params"));
    MatTuple A = mat_tuple_from_json(params.field, member(j, "A"));
    if (A.size() != params.r()) throw parse_error("presentation length differs from r");
    return {std::move(params), std::move(A)};
}

json to_json(const BasisChange& B) { return {{"params", to_json(B.params())}, {"B", to_json(B.B())}}; }

BasisChange basis_change_from_json(const json& j) {
    KisinParams params = params_from_json(member(j, "params"));
    MatTuple B = mat_tuple_from_json(params.field, member(j, "B"));
    return {std::move(params), std::move(B)};
}

json to_json(const ModelSet& ms) {
    json models = json::array();
    for (std::size_t id = 0; id < ms.points.size(); ++id) {
        const ModelPoint& m = ms.points[id];
        models.push_back({{"id", id},
                          {"a", a_to_json(m.a)},
                          {"w", m.serialized_w()},
                          {"ordinary", classify_ordinary(m.a, ms.params)}});
    }
    return {{"tool", tool_version()},
            {"params", to_json(ms.params)},
            {"window", ms.window},
            {"provenance", ms.provenance},
            {"models", std::move(models)}};
}

ModelSet model_set_from_json(const json& j) {
    ModelSet ms{params_from_json(member(j, "params")), field_of<std::int64_t>(j, "window"),
                j.contains("provenance") ? field_of<std::string>(j, "provenance") : std::string("loaded"), {}};
    const json& models = member(j, "models");
    for (std::size_t k = 0; k < models.size(); ++k) {
        const json& m = models[k];
        if (m.contains("id") && field_of<std::size_t>(m, "id") != k)
            throw parse_error("model ids must be 0, 1, 2, ... in order");
        ModelPoint pt;
        pt.a = field_of<AVector>(m, "a");
        for (const auto& s : member(m, "w")) pt.w.push_back(series_from_json(ms.params.field, s));
        if (pt.a.size() != ms.params.r() || pt.w.size() != ms.params.r())
            throw parse_error("model " + std::to_string(k) + " has the wrong length");
        ms.points.push_back(std::move(pt));
    }
    return ms;
}

json to_json(const MoveEdge& edge) {
    json out = {{"from", edge.from}, {"to", edge.to}, {"kind", to_string(edge.kind)}};
    if (edge.j) out["j"] = *edge.j + 1;
    if (edge.witness) out["witness"] = to_json(edge.witness->N());
    if (edge.cofactor) out["cofactor"] = to_json(*edge.cofactor);
    return out;
}

MoveEdge move_edge_from_json(const FieldPtr& field, const json& j) {
    MoveEdge edge;
    edge.from = field_of<std::size_t>(j, "from");
    edge.to = field_of<std::size_t>(j, "to");
    edge.kind = parse_move_kind(field_of<std::string>(j, "kind"));
    if (j.contains("j")) {
        const auto jj = field_of<std::size_t>(j, "j");
        if (jj == 0) throw parse_error("shift index is 1-based");
        edge.j = jj - 1;
    }
    if (j.contains("witness")) edge.witness = NilTuple(mat_tuple_from_json(field, member(j, "witness")));
    if (j.contains("cofactor")) edge.cofactor = mat_tuple_from_json(field, member(j, "cofactor"));
    return edge;
}

json to_json(const ConnectivityReport& report) {
    json out = to_json(report.models);
    json components = json::array();
    for (const auto& c : report.graph.components()) components.push_back(c);
    json edges = json::array();
    for (const auto& e : report.graph.edges) edges.push_back(to_json(e));
    json witnesses = json::object();
    for (const auto& [id, path] : report.witnesses) {
        json steps = json::array();
        for (std::size_t k : path) {
            json step = to_json(report.graph.edges[k]);
            step["edge"] = k;
            steps.push_back(std::move(step));
        }
        witnesses[std::to_string(id)] = std::move(steps);
    }
    out["components"] = std::move(components);
    out["edges"] = std::move(edges);
    out["witnesses"] = std::move(witnesses);
    out["nonordinary"] = report.nonordinary;
    out["disconnected"] = report.disconnected;
    out["bad_edges"] = report.bad_edges;
    out["hub"] = report.hub ? json(*report.hub) : json(nullptr);
    out["verified"] = report.verified;
    return out;
}

ConnectivityReport connectivity_report_from_json(const json& j) {
    ConnectivityReport rep{model_set_from_json(j), {}, std::nullopt, {}, {}, {}, {}, false};
    const FieldPtr& field = rep.models.params.field;
    std::vector<MoveEdge> edges;
    for (const auto& e : member(j, "edges")) edges.push_back(move_edge_from_json(field, e));
    for (const auto& e : edges)
        if (e.from >= rep.models.points.size() || e.to >= rep.models.points.size())
            throw parse_error("edge endpoint out of range");
    rep.graph = components_from_edges(rep.models, std::move(edges));
    if (!member(j, "hub").is_null()) rep.hub = field_of<std::size_t>(j, "hub");
    rep.nonordinary = field_of<std::vector<std::size_t>>(j, "nonordinary");
    rep.disconnected = field_of<std::vector<std::size_t>>(j, "disconnected");
    rep.bad_edges = field_of<std::vector<std::size_t>>(j, "bad_edges");
    for (const auto& [key, steps] : member(j, "witnesses").items()) {
        std::vector<std::size_t> path;
        for (const auto& step : steps) {
            const auto k = field_of<std::size_t>(step, "edge");
            if (k >= rep.graph.edges.size()) throw parse_error("witness refers to a missing edge");
            // The inline copy must agree with the edge list.
            if (to_json(rep.graph.edges[k]) != to_json(move_edge_from_json(field, step)))
                throw parse_error("witness step disagrees with edge " + std::to_string(k));
            path.push_back(k);
        }
        rep.witnesses[std::stoul(key)] = std::move(path);
    }
    rep.verified = field_of<bool>(j, "verified");
    return rep;
}

json to_json(const LemmaReport& report) {
    json counter = json::array();
    for (const auto& c : report.counterexamples) counter.push_back({{"a", c.a}, {"reason", c.reason}});
    json out = {{"lemma", report.lemma},
                {"params", {{"p", report.params.p}, {"r", report.params.r}, {"e", report.params.e}}},
                {"checked", report.checked},
                {"counterexamples", std::move(counter)},
                {"passed", report.passed()}};
    if (report.lemma == "bounds") {
        out["box_contact"] = report.box_contact;
        out["solutions"] = report.witnesses;
    } else {
        json choices = json::array();
        for (const auto& c : report.choices) choices.push_back({{"a", c.a}, {"j", c.j + 1}});
        out["choices"] = std::move(choices);
    }
    return out;
}

PathCheckInput path_check_input_from_json(const json& j) {
    KisinParams params = params_from_json(member(j, "params"));
    MatTuple A = mat_tuple_from_json(params.field, member(j, "presentation"));
    MatTuple N = mat_tuple_from_json(params.field, member(j, "nil"));
    if (A.size() != params.r() || N.size() != params.r()) throw parse_error("tuples must have length r");
    // Validate before building the aggregate: a throw inside braced init leaks on some compilers.
    NilTuple nil(std::move(N));
    return {{std::move(params), std::move(A)}, std::move(nil)};
}

}  // namespace kisinlab
