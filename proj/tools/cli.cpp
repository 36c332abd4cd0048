#include "cli.hpp"

#include "kisinlab/errors.hpp"
#include "kisinlab/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>

namespace kisinlab::cli {

namespace {

struct RunConfig {
    std::uint32_t p = 3;
    std::uint32_t r = 2;
    std::int64_t e = 2;
    std::optional<std::int64_t> window;
    std::optional<std::int64_t> work_prec;
    std::optional<std::uint64_t> budget;
    unsigned threads = 1;
    std::string out_path;
    std::string dot_path;
    std::string input_path;
    std::int64_t r_max = 4;
    std::int64_t m_max = 3;
};

constexpr std::uint64_t kDefaultBudget = 10'000'000;

std::uint64_t resolve_budget(const RunConfig& cfg) {
    if (cfg.budget) return *cfg.budget;
    if (const char* env = std::getenv("KISINLAB_BUDGET")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            return v;
        } catch (const std::exception&) {
            throw precondition_error("KISINLAB_BUDGET must be a non-negative integer");
        }
    }
    return kDefaultBudget;
}

KisinParams params_for(const RunConfig& cfg) { return make_params(cfg.p, cfg.r, cfg.e, cfg.work_prec.value_or(0)); }

EnumerateOptions enumerate_options(const RunConfig& cfg) {
    EnumerateOptions opt;
    opt.window = cfg.window.value_or(-1);
    opt.budget = resolve_budget(cfg);
    opt.threads = cfg.threads;
    return opt;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw precondition_error("cannot write '" + path + "'");
    file << text;
    if (!file) throw precondition_error("failed writing '" + path + "'");
}

void emit(const RunConfig& cfg, const json& j, std::ostream& out) { write_text(cfg.out_path, j.dump(2) + "\n", out); }

void add_params(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--p", cfg.p, "odd prime p")->required();
    sub->add_option("--r", cfg.r, "residue degree r >= 2")->required();
    sub->add_option("--e", cfg.e, "ramification index e, divisible by p-1")->required();
    sub->add_option("--window", cfg.window, "lower support bound -window for w_i (default e)");
    sub->add_option("--work-prec", cfg.work_prec, "series working precision (default 4ep+8)");
    sub->add_option("--budget", cfg.budget, "candidate budget (default 1e7 or $KISINLAB_BUDGET)");
    sub->add_option("--threads", cfg.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    const ModelSet ms = enumerate_models(params_for(cfg), enumerate_options(cfg));
    emit(cfg, to_json(ms), out);
    return kPass;
}

int cmd_components(const RunConfig& cfg, std::ostream& out) {
    const ConnectivityReport report = verify_nonordinary_connected(params_for(cfg), enumerate_options(cfg));
    json j = to_json(report);
    // The report must certify itself after a round trip through JSON.
    const bool rechecked = recheck_witnesses(connectivity_report_from_json(j));
    j["witnesses_rechecked"] = rechecked;
    if (!cfg.dot_path.empty()) write_text(cfg.dot_path, to_dot(report.models, report.graph), out);
    emit(cfg, j, out);
    return report.verified && rechecked ? kPass : kFalsified;
}

int cmd_verify_lemmas(const RunConfig& cfg, std::ostream& out) {
    if (cfg.r_max < 2 || cfg.m_max < 1) throw precondition_error("need --r-max >= 2 and --m-max >= 1");
    json reports = json::array();
    json chains = json::array();
    bool ok = true;
    for (const GridPoint& g : lemma_grid(cfg.r_max, cfg.m_max)) {
        const LemmaReport bounds = verify_bounds_lemma(g);
        const LemmaReport decrement = verify_decrement_lemma(g);
        ok = ok && bounds.passed() && decrement.passed();
        reports.push_back(to_json(bounds));
        reports.push_back(to_json(decrement));
        for (const AVector& a : valid_a_vectors(g.p, g.r, g.e)) {
            if (!is_strictly_interior(a, g.p, g.e)) continue;
            const DecrementChain chain = decrement_chain(a, g);
            const std::int64_t expected =
                std::accumulate(a.begin(), a.end(), std::int64_t{0}) - static_cast<std::int64_t>(a.size());
            const bool good = !chain.stuck && static_cast<std::int64_t>(chain.steps.size()) == expected;
            ok = ok && good;
            json steps = json::array();
            for (auto j : chain.steps) steps.push_back(j + 1);
            json entry = {{"params", {{"p", g.p}, {"r", g.r}, {"e", g.e}}}, {"a", a}, {"steps", steps}, {"ok", good}};
            if (chain.stuck) entry["stuck_at"] = chain.stuck->at;
            chains.push_back(std::move(entry));
        }
    }
    json j = {{"tool", tool_version()},
              {"grid", {{"p", {3, 5}}, {"r_max", cfg.r_max}, {"m_max", cfg.m_max}}},
              {"reports", std::move(reports)},
              {"chains", std::move(chains)},
              {"verified", ok}};
    emit(cfg, j, out);
    return ok ? kPass : kFalsified;
}

int cmd_path_check(const RunConfig& cfg, std::ostream& out) {
    std::ifstream file(cfg.input_path);
    if (!file) throw precondition_error("cannot read '" + cfg.input_path + "'");
    json input;
    try {
        input = json::parse(file);
    } catch (const json::exception& ex) {
        throw parse_error(std::string("invalid JSON: ") + ex.what());
    }
    const PathCheckInput in = path_check_input_from_json(input);
    json products = json::array();
    for (const auto& m : path_products(in.nil, in.presentation)) products.push_back(to_json(m));
    const bool holds = path_condition(in.nil, in.presentation);
    json j = {{"tool", tool_version()},
              {"params", to_json(in.presentation.params)},
              {"products", std::move(products)},
              {"path_condition", holds}};
    emit(cfg, j, out);
    return holds ? kPass : kFalsified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite flat models of a trivial rank-2 mod p representation: enumeration and connectivity"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);
    RunConfig cfg;

    auto* enumerate = app.add_subcommand("enumerate", "list every model as canonical (a, w) coordinates");
    add_params(enumerate, cfg);
    auto* components = app.add_subcommand("components", "build the move graph and check non-ordinary connectivity");
    add_params(components, cfg);
    components->add_option("--dot", cfg.dot_path, "also write a Graphviz DOT file");
    auto* lemmas = app.add_subcommand("verify-lemmas", "sweep the a-vector lemmas over p in {3,5}");
    lemmas->add_option("--r-max", cfg.r_max, "largest r in the sweep");
    lemmas->add_option("--m-max", cfg.m_max, "largest m, with e = m(p-1)");
    lemmas->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
    auto* path = app.add_subcommand("path-check", "evaluate the path-lemma condition on a JSON input");
    path->add_option("--input", cfg.input_path, "JSON with params, presentation and nil")->required();
    path->add_option("--out", cfg.out_path, "write JSON here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(cfg, out);
        if (components->parsed()) return cmd_components(cfg, out);
        if (lemmas->parsed()) return cmd_verify_lemmas(cfg, out);
        if (path->parsed()) return cmd_path_check(cfg, out);
    } catch (const falsification& ex) {
        json j = {{"tool", tool_version()},
                  {"falsification", {{"message", ex.what()}, {"model_id", ex.model_id()}}},
                  {"verified", false}};
        emit(cfg, j, out);
        err << "falsification: " << ex.what() << "\n";
        return kFalsified;
    } catch (const budget_exceeded& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const error& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const json::exception& ex) {
        err << "error: malformed JSON: " << ex.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace kisinlab::cli
