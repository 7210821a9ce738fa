// gfree: command-line front end for the G-free colouring library.
//
// Exit codes: 0 ok, 1 input error, 2 budget exhausted, 3 a verifier found a
// hypothesis that held with a conclusion that did not.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfree/constructive.hpp"
#include "gfree/exact.hpp"
#include "gfree/graph.hpp"
#include "gfree/harness.hpp"
#include "gfree/pattern.hpp"

using namespace gfree;

namespace {

enum Exit { kOk = 0, kInput = 1, kBudget = 2, kViolation = 3 };

struct RunConfig {
    std::string graph;
    std::string corpus;
    std::string pattern = "K2";
    std::string lists;
    int k = 0;
    int d = 0;
    int delta = 0;
    int n_max = 3;
    int max_join_order = 7;
    int trials = 100;
    int threads = 0;
    std::uint64_t seed = 20240521;
    std::uint64_t budget_nodes = 10'000'000;
    std::uint64_t budget_assignments = 10'000'000;
    std::string format = "json";
    std::vector<std::string> checks;
    bool choice = false;
    bool verbose = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Graph> load_graphs(const RunConfig& cfg) {
    if (!cfg.graph.empty()) {
        std::string_view text = cfg.graph;
        if (text.starts_with("g6:")) text.remove_prefix(3);
        return {parse_graph6(text)};
    }
    if (cfg.corpus == "-") return read_graph6_stream(std::cin);
    std::ifstream in(cfg.corpus);
    if (!in) throw InputError("cannot open corpus '" + cfg.corpus + "'");
    return read_graph6_stream(in);
}

Budget budget_of(const RunConfig& cfg) {
    Budget b;
    b.max_nodes = cfg.budget_nodes;
    b.max_assignments = cfg.budget_assignments;
    return b;
}

// Nested objects become dotted keys so csv and plain output stay flat.
void flatten(const ordered_json& j, const std::string& prefix, ordered_json& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) flatten(value, name, out);
        else out[name] = value;
    }
}

std::string cell(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const std::vector<ordered_json>& records, const std::string& format, std::ostream& os) {
    if (format == "json") {
        for (const auto& r : records) os << r.dump() << '\n';
        return;
    }
    std::vector<ordered_json> flat;
    for (const auto& r : records) {
        ordered_json f = ordered_json::object();
        flatten(r, "", f);
        flat.push_back(std::move(f));
    }
    if (format == "plain") {
        for (const auto& f : flat) {
            bool first = true;
            for (const auto& [key, value] : f.items()) {
                os << (first ? "" : " ") << key << '=' << cell(value);
                first = false;
            }
            os << '\n';
        }
        return;
    }
    std::vector<std::string> header;
    std::set<std::string> seen;
    for (const auto& f : flat)
        for (const auto& [key, value] : f.items())
            if (seen.insert(key).second) header.push_back(key);
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_quote(header[i]);
    os << '\n';
    for (const auto& f : flat) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            const auto it = f.find(header[i]);
            os << (i ? "," : "") << (it == f.end() ? "" : csv_quote(cell(*it)));
        }
        os << '\n';
    }
}

ordered_json head(const Graph& g, const Pattern& p) {
    return {{"graph", write_graph6(g)}, {"pattern", p.literal()}};
}

ListAssignment lists_for(const RunConfig& cfg, const Graph& g) {
    if (cfg.lists.empty()) throw InputError("--lists is required");
    ListAssignment lists = ListAssignment::parse(cfg.lists);
    if (lists.order() != g.order()) {
        throw InputError("--lists has " + std::to_string(lists.order()) + " entries but the graph has " +
                         std::to_string(g.order()) + " vertices");
    }
    return lists;
}

int cmd_chi(const RunConfig& cfg, std::vector<ordered_json>& out) {
    const Pattern p = parse_pattern(cfg.pattern);
    for (const auto& g : load_graphs(cfg)) {
        ordered_json r = head(g, p);
        const int chi = chromatic_number(g, p, budget_of(cfg));
        r["chi"] = chi;
        r["coloring"] = chi == 0 ? ordered_json::array() : to_json(*find_k_coloring(g, p, chi, budget_of(cfg)));
        if (cfg.choice) r["chi_list"] = choice_number(g, p, budget_of(cfg));
        out.push_back(std::move(r));
    }
    return kOk;
}

int cmd_choosable(const RunConfig& cfg, std::vector<ordered_json>& out) {
    if (cfg.k < 1) throw InputError("choosable needs --k >= 1");
    const Pattern p = parse_pattern(cfg.pattern);
    for (const auto& g : load_graphs(cfg)) {
        ordered_json r = head(g, p);
        const auto verdict = check_choosable(g, p, cfg.k, budget_of(cfg));
        r["k"] = cfg.k;
        r["choosable"] = verdict.choosable;
        r["counterexample"] = verdict.counterexample ? ordered_json(verdict.counterexample->to_string()) : nullptr;
        r["assignments_checked"] = verdict.assignments_checked;
        out.push_back(std::move(r));
    }
    return kOk;
}

int cmd_color(const RunConfig& cfg, std::vector<ordered_json>& out) {
    const Pattern p = parse_pattern(cfg.pattern);
    for (const auto& g : load_graphs(cfg)) {
        ordered_json r = head(g, p);
        std::optional<Coloring> c;
        if (!cfg.lists.empty()) {
            const ListAssignment lists = lists_for(cfg, g);
            r["lists"] = lists.to_string();
            c = find_list_coloring(g, p, lists, budget_of(cfg));
        } else {
            if (cfg.k < 1) throw InputError("color needs --lists or --k >= 1");
            r["k"] = cfg.k;
            c = find_k_coloring(g, p, cfg.k, budget_of(cfg));
        }
        r["colorable"] = c.has_value();
        r["coloring"] = c ? to_json(*c) : nullptr;
        out.push_back(std::move(r));
    }
    return kOk;
}

// Without --lists, draws lists of size ceil(max_degree/delta)+1 (or --k)
// from a palette of 3n colours.
int cmd_greedy(const RunConfig& cfg, std::vector<ordered_json>& out) {
    const Pattern p = parse_pattern(cfg.pattern);
    std::mt19937_64 rng(cfg.seed);
    for (const auto& g : load_graphs(cfg)) {
        ordered_json r = head(g, p);
        ListAssignment lists;
        if (!cfg.lists.empty()) {
            lists = lists_for(cfg, g);
        } else {
            const int n = g.order();
            const int k = cfg.k > 0 ? cfg.k : ceil_div(max_degree(g), p.min_degree()) + 1;
            std::vector<int> palette(static_cast<std::size_t>(std::max(3 * n, k)));
            std::iota(palette.begin(), palette.end(), 0);
            std::vector<std::vector<int>> raw(static_cast<std::size_t>(n));
            for (auto& l : raw) std::sample(palette.begin(), palette.end(), std::back_inserter(l), k, rng);
            lists = ListAssignment(std::move(raw));
        }
        r["lists"] = lists.to_string();
        const auto c = greedy_list_color(g, p, lists);
        r["colored"] = c.has_value();
        r["coloring"] = c ? to_json(*c) : nullptr;
        out.push_back(std::move(r));
    }
    return kOk;
}

int cmd_hall(const RunConfig& cfg, std::vector<ordered_json>& out) {
    const int delta = cfg.delta > 0 ? cfg.delta : parse_pattern(cfg.pattern).min_degree();
    for (const auto& g : load_graphs(cfg)) {
        const ListAssignment lists = lists_for(cfg, g);
        ordered_json r = {{"graph", write_graph6(g)}, {"delta", delta}, {"lists", lists.to_string()}};
        const auto outcome = hall_color_or_violator(g, lists, delta);
        r["colored"] = outcome.colored();
        r["coloring"] = outcome.colored() ? to_json(outcome.coloring()) : nullptr;
        r["violator"] = outcome.colored() ? nullptr : ordered_json(outcome.violator().to_vector());
        out.push_back(std::move(r));
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::vector<ordered_json>& out) {
    if (cfg.checks.empty()) throw InputError("verify needs at least one --check");
    CorpusOptions options;
    options.verify.budget = budget_of(cfg);
    options.verify.trials = cfg.trials;
    options.verify.seed = cfg.seed;
    options.checks = cfg.checks;
    options.d = cfg.d;
    options.n_max = cfg.n_max;
    options.max_join_order = cfg.max_join_order;
    options.threads = cfg.threads;
    const auto result = run_corpus(load_graphs(cfg), parse_pattern(cfg.pattern), options);
    for (const auto& r : result.reports) {
        if (cfg.format == "json") {
            out.push_back(r.to_json(cfg.verbose));
            continue;
        }
        ordered_json row = {{"theorem", r.theorem}};
        row.update(r.instance);
        row["hypothesis_holds"] = r.hypothesis_holds;
        row["conclusion_holds"] = r.conclusion_holds ? ordered_json(*r.conclusion_holds) : nullptr;
        row["status"] = to_string(r.status);
        out.push_back(std::move(row));
    }
    std::cerr << result.summary.to_json().dump() << '\n';
    if (result.summary.failed > 0) {
        std::cerr << "THEOREM VIOLATION: " << result.summary.failed << " instance(s) with hypothesis true and "
                  << "conclusion false\n";
        return kViolation;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("GFREE_BUDGET_NODES")) {
        try {
            cfg.budget_nodes = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: GFREE_BUDGET_NODES is not a number\n";
            return kInput;
        }
    }

    CLI::App app{"G-free colouring solvers and verifiers"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        auto* graph = sub->add_option("--graph", cfg.graph, "graph6 string, optionally prefixed g6:");
        auto* corpus = sub->add_option("--corpus", cfg.corpus, "graph6 file, one graph per line ('-' for stdin)");
        graph->excludes(corpus);
        sub->add_option("--pattern", cfg.pattern, "K<n>, C<n>, P<n>, R:<d> or g6:<graph6>")->capture_default_str();
        sub->add_option("--budget-nodes", cfg.budget_nodes, "search nodes per solver call")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--budget-assignments", cfg.budget_assignments, "list assignments per choosability check")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "plain"}))
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        sub->add_option("--k", cfg.k, "list size or number of classes")->check(CLI::NonNegativeNumber);
        sub->add_option("--lists", cfg.lists, "list assignment, e.g. 0,1;0,2;1");
        sub->callback([sub] {
            if (sub->count("--graph") + sub->count("--corpus") != 1) {
                throw CLI::ValidationError("exactly one of --graph and --corpus is required");
            }
        });
    };

    auto* chi = app.add_subcommand("chi", "G-free chromatic number with a witness colouring");
    add_common(chi);
    chi->add_flag("--choice", cfg.choice, "also compute the choice number");
    auto* choosable = app.add_subcommand("choosable", "exhaustive k-choosability check");
    add_common(choosable);
    auto* color = app.add_subcommand("color", "find a list colouring (--lists) or a k-colouring (--k)");
    add_common(color);
    auto* greedy = app.add_subcommand("greedy", "greedy list colouring, random lists unless --lists is given");
    add_common(greedy);
    auto* hall = app.add_subcommand("hall", "capacity-delta Hall matching or a deficient set");
    add_common(hall);
    hall->add_option("--delta", cfg.delta, "colour capacity (default: pattern min degree)")->check(CLI::PositiveNumber);
    auto* verify = app.add_subcommand("verify", "run verifiers over a corpus, JSON lines on stdout");
    add_common(verify);
    verify->add_option("--check", cfg.checks, "theorem1 lemma2 theorem2 lemma4 theorem3 lemma5 theorem4")
        ->check(CLI::IsMember(known_checks()));
    verify->add_option("--d", cfg.d, "regularity for lemma5/theorem4 (default from R:d pattern, else 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--n-max", cfg.n_max, "largest clique joined by lemma5/theorem4")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--max-join-order", cfg.max_join_order, "pair checks use |H|+|H2| <= this")
        ->capture_default_str();
    verify->add_option("--trials", cfg.trials, "random list assignments per theorem3 instance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--threads", cfg.threads, "worker threads (0: hardware)")->check(CLI::NonNegativeNumber);
    verify->add_flag("-v,--verbose", cfg.verbose, "include elapsed_ms in reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    std::vector<ordered_json> records;
    int code = kOk;
    try {
        if (*chi) code = cmd_chi(cfg, records);
        else if (*choosable) code = cmd_choosable(cfg, records);
        else if (*color) code = cmd_color(cfg, records);
        else if (*greedy) code = cmd_greedy(cfg, records);
        else if (*hall) code = cmd_hall(cfg, records);
        else code = cmd_verify(cfg, records);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kBudget;
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    emit(records, cfg.format, std::cout);
    return code;
}
