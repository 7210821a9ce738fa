#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfree/exact.hpp"
#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"

namespace gfree {

using ordered_json = nlohmann::ordered_json;

enum class Status {
    pass,      // hypothesis held and conclusion confirmed
    fail,      // hypothesis held and conclusion refuted
    vacuous,   // hypothesis did not hold
    skipped,   // a solver ran out of budget
    observed,  // informational report with no pass/fail semantics
};

std::string to_string(Status s);

struct VerifyReport {
    std::string theorem;
    ordered_json instance = ordered_json::object();
    bool hypothesis_holds = false;
    ordered_json hypothesis_values = ordered_json::object();
    std::optional<bool> conclusion_holds;  // empty unless status is pass or fail
    Status status = Status::vacuous;
    ordered_json witnesses = ordered_json::object();
    std::string note;
    double elapsed_ms = 0.0;

    // snake_case keys; conclusion_holds is null when not meaningful.
    ordered_json to_json(bool with_timing = true) const;
};

struct VerifyOptions {
    Budget budget;
    int trials = 100;
    std::uint64_t seed = 20240521;
};

// Canonical optimal colouring: chromatic_number(h, p) classes, chosen one
// at a time as the largest free set (lexicographically first on ties) whose
// removal leaves a graph colourable with the remaining classes. Class sizes
// are therefore non-increasing in colour index.
Coloring canonical_optimal_coloring(const Graph& h, const Pattern& p, const Budget& budget = {});

// Exact test of n <= delta*chi + sqrt(delta*chi) - (delta - 1) without
// floating point.
bool list_equality_bound_holds(long n, long delta, long chi);

VerifyReport verify_theorem2(const Graph& h, const Pattern& p, const VerifyOptions& options = {});
VerifyReport verify_lemma4(const Graph& h, const Pattern& p, const VerifyOptions& options = {});
VerifyReport verify_theorem3(const Graph& h, const Pattern& p, const VerifyOptions& options = {});
VerifyReport verify_theorem1(const Graph& h, const Graph& h2, const Pattern& p, const VerifyOptions& options = {});
VerifyReport verify_lemma2(const Graph& h, const Graph& h2, const Pattern& p, const VerifyOptions& options = {});
// Requires n >= 1.
VerifyReport verify_lemma5(const Graph& h, int d, int n, const VerifyOptions& options = {});
VerifyReport verify_theorem4(const Graph& h, int d, int n_max, const VerifyOptions& options = {});

struct CorpusOptions {
    VerifyOptions verify;
    std::vector<std::string> checks;  // theorem ids, see known_checks()
    int d = 0;                        // 0: take it from an R:d pattern, else 1
    int n_max = 3;                    // lemma5 runs n = 1..n_max; theorem4 up to n_max
    int max_join_order = 7;           // pair checks only use |H| + |H2| <= this
    int threads = 0;                  // 0: hardware concurrency
};

const std::vector<std::string>& known_checks();

struct CorpusSummary {
    std::size_t instances = 0;
    std::size_t hypothesis_held = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t vacuous = 0;
    std::size_t skipped = 0;
    std::size_t observed = 0;

    void add(const VerifyReport& r);
    ordered_json to_json() const;
};

struct CorpusResult {
    std::vector<VerifyReport> reports;
    CorpusSummary summary;
};

// Applies every selected check to the corpus: single-graph checks per
// graph, pair checks (theorem1, lemma2) over all ordered pairs within
// max_join_order, lemma5 per graph and n. Reports come back in that
// deterministic order regardless of thread count.
CorpusResult run_corpus(const std::vector<Graph>& corpus, const Pattern& p, const CorpusOptions& options);
CorpusResult run_corpus(std::istream& corpus, const Pattern& p, const CorpusOptions& options);

ordered_json to_json(const Coloring& c);
ordered_json to_json(const ListAssignment& l);

}  // namespace gfree
