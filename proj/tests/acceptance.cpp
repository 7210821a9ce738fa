// Acceptance suite: one PASS/FAIL line per criterion. Graph corpora come
// from the networkx atlas export in data/, not from the library's own
// generator.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "gfree/constructive.hpp"
#include "gfree/exact.hpp"
#include "gfree/harness.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gfree;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

oracle::FreeTest free_test(const Graph& g, const Pattern& p) {
    const auto m = oracle::matrix_of(g);
    if (p.is_family()) {
        const int d = p.regularity();
        return [m, d](std::uint64_t s) { return !oracle::contains_regular(m, s, d); };
    }
    const auto pm = oracle::matrix_of(p.graph());
    return [m, pm](std::uint64_t s) { return !oracle::contains(m, s, pm); };
}

bool oracle_valid(const Graph& g, const Pattern& p, const Coloring& c) {
    if (c.order() != g.order()) return false;
    const auto free = free_test(g, p);
    for (int color : c.palette()) {
        std::uint64_t cls = 0;
        for (int v = 0; v < g.order(); ++v)
            if (c.color(v) == color) cls |= std::uint64_t{1} << v;
        if (!free(cls)) return false;
    }
    return true;
}

bool within_lists(const ListAssignment& lists, const Coloring& c) {
    for (int v = 0; v < lists.order(); ++v)
        if (!lists.allows(v, c.color(v))) return false;
    return true;
}

std::string summary_text(const CorpusSummary& s) {
    std::ostringstream os;
    os << s.instances << " instances, " << s.hypothesis_held << " hypothesis held, " << s.passed << " passed, "
       << s.failed << " failed, " << s.vacuous << " vacuous, " << s.skipped << " skipped";
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const auto corpus = support::atlas(1, 7);
    const Pattern k2 = parse_pattern("K2");
    int seven = 0;
    int mismatches = 0;
    for (const auto& g : corpus) {
        seven += g.order() == 7;
        if (chromatic_number(g, k2) != oracle::proper_chromatic(oracle::matrix_of(g))) ++mismatches;
    }
    const double secs = seconds_since(start);
    std::ostringstream os;
    os << corpus.size() << " graphs on 1..7 vertices (" << seven << " on 7), " << mismatches << " mismatches, "
       << secs << " s";
    return {seven == 1044 && mismatches == 0 && secs < 300.0, os.str()};
}

Outcome criterion2() {
    const auto corpus = support::atlas(1, 6);
    const Pattern r2 = parse_pattern("R:2");
    int mismatches = 0;
    for (const auto& g : corpus)
        if (chromatic_number(g, r2) != oracle::vertex_arboricity(oracle::matrix_of(g))) ++mismatches;
    return {mismatches == 0, std::to_string(corpus.size()) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion3() {
    std::mt19937_64 rng(20240521);
    int discrepancies = 0;
    int violators = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const int k = 1 + static_cast<int>(rng() % 4);
        const int delta = 1 + static_cast<int>(rng() % 3);
        const int universe = k + static_cast<int>(rng() % (n + 1));
        const ListAssignment lists(support::random_lists(n, k, universe, rng));
        const auto outcome = hall_color_or_violator(Graph(n), lists, delta);
        const bool expected_violation = oracle::hall_violated(lists.lists(), delta);
        if (outcome.colored() == expected_violation) ++discrepancies;
        if (outcome.colored()) {
            std::map<int, int> sizes;
            for (int c : outcome.coloring().colors()) ++sizes[c];
            bool ok = within_lists(lists, outcome.coloring());
            for (auto [c, size] : sizes) ok = ok && size <= delta;
            if (!ok) ++discrepancies;
        } else {
            ++violators;
            const VertexSet s = outcome.violator();
            if (s.size() <= delta * static_cast<int>(lists.colors_of(s).size())) ++discrepancies;
        }
    }
    return {discrepancies == 0, std::to_string(trials) + " instances (" + std::to_string(violators) +
                                    " with violators), " + std::to_string(discrepancies) + " discrepancies"};
}

Outcome criterion4() {
    const auto corpus = support::atlas(1, 6);
    int instances = 0;
    int bad = 0;
    int skipped = 0;
    // Confirm the bound by enumeration rather than through choice_number,
    // which stops searching at it. Degree peeling is off because at this k
    // it alone would settle every instance; for proper colouring the
    // Alon-Tarsi certificate stands in, since plain enumeration of n-lists
    // on n vertices is out of reach.
    ChoosabilityOptions options;
    options.peel_low_degree = false;
    for (const char* lit : {"K2", "K3", "C4", "R:2"}) {
        const Pattern p = parse_pattern(lit);
        options.alon_tarsi = p.min_degree() == 1;
        for (const auto& g : corpus) {
            ++instances;
            const int bound = ceil_div(g.order(), p.min_degree());
            try {
                if (!check_choosable(g, p, bound, {}, options).choosable) ++bad;
                if (choice_number(g, p) > bound) ++bad;
            } catch (const BudgetExceeded&) {
                ++skipped;
            }
        }
    }
    std::mt19937_64 rng(4);
    int failures = 0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Pattern p = parse_pattern(t % 3 == 0 ? "K2" : t % 3 == 1 ? "K3" : "R:3");
        const Graph g = support::random_graph(n, 0.6, rng);
        const int k = ceil_div(n, p.min_degree());
        const ListAssignment lists(support::random_lists(n, k, k + static_cast<int>(rng() % (n + 1)), rng));
        try {
            const Coloring c = color_ceil_n_over_delta(g, p, lists);
            std::map<int, int> sizes;
            for (int col : c.colors()) ++sizes[col];
            bool ok = within_lists(lists, c) && oracle_valid(g, p, c);
            for (auto [col, size] : sizes) ok = ok && size <= p.min_degree();
            if (!ok) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    std::ostringstream os;
    os << instances << " (graph, pattern) instances, " << bad << " above ceil(n/delta), " << skipped
       << " skipped; constructive: " << trials << " instances, " << failures << " failures";
    return {bad == 0 && failures == 0, os.str()};
}

Outcome criterion5() {
    const auto corpus = support::atlas(1, 6);
    std::mt19937_64 rng(5);
    long runs = 0;
    int failures = 0;
    for (const char* lit : {"K2", "K3"}) {
        const Pattern p = parse_pattern(lit);
        for (const auto& g : corpus) {
            const int n = g.order();
            const int k = ceil_div(max_degree(g), p.min_degree()) + 1;
            for (int t = 0; t < 500; ++t) {
                const ListAssignment lists(support::random_lists(n, k, std::max(3 * n, k), rng));
                const auto c = greedy_list_color(g, p, lists);
                ++runs;
                if (!c || !within_lists(lists, *c) || !oracle_valid(g, p, *c)) ++failures;
            }
        }
    }
    // Exhaustive confirmation without degree peeling (which restates the
    // greedy argument) or the Alon-Tarsi shortcut.
    ChoosabilityOptions no_peel;
    no_peel.peel_low_degree = false;
    no_peel.alon_tarsi = false;
    const Pattern k2 = parse_pattern("K2");
    int exhaustive = 0;
    int refuted = 0;
    int skipped = 0;
    for (const auto& g : support::atlas(1, 5)) {
        const int k = max_degree(g) + 1;
        try {
            ++exhaustive;
            if (!check_choosable(g, k2, k, {}, no_peel).choosable) ++refuted;
        } catch (const BudgetExceeded&) {
            ++skipped;
        }
    }
    std::ostringstream os;
    os << runs << " greedy runs, " << failures << " failures; exhaustive on " << exhaustive << " graphs: " << refuted
       << " not choosable, " << skipped << " skipped";
    return {failures == 0 && refuted == 0 && skipped == 0, os.str()};
}

Outcome run_checks(const std::vector<Graph>& corpus, const std::vector<std::string>& checks,
                   const std::vector<std::string>& patterns, int max_join_order) {
    std::string detail;
    bool pass = true;
    for (const auto& lit : patterns) {
        CorpusOptions options;
        options.checks = checks;
        options.max_join_order = max_join_order;
        const auto result = run_corpus(corpus, parse_pattern(lit), options);
        for (const auto& check : checks) {
            CorpusSummary s;
            for (const auto& r : result.reports)
                if (r.theorem == check) s.add(r);
            pass = pass && s.failed == 0;
            if (!detail.empty()) detail += "; ";
            detail += check + "/" + lit + ": " + summary_text(s);
        }
    }
    return {pass, detail};
}

Outcome criterion6() {
    return run_checks(support::atlas(1, 6), {"theorem2", "lemma4"}, {"K2", "K3"}, 0);
}

Outcome criterion7() {
    return run_checks(support::atlas(1, 6), {"theorem1", "lemma2"}, {"K2", "K3"}, 7);
}

Outcome criterion8() {
    const auto corpus = support::atlas(1, 5);
    int instances = 0;
    int violations = 0;
    int skipped = 0;
    for (int d : {1, 2}) {
        for (const auto& g : corpus) {
            for (int n = 1; n <= 4; ++n) {
                ++instances;
                const auto r = verify_lemma5(g, d, n);
                if (r.status == Status::skipped) ++skipped;
                else if (r.status != Status::pass) ++violations;
            }
        }
    }
    return {violations == 0 && skipped == 0, std::to_string(instances) + " instances, " +
                                                 std::to_string(violations) + " violations, " +
                                                 std::to_string(skipped) + " skipped"};
}

Outcome criterion9() {
    bool pass = true;
    std::string detail;
    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"K1", Graph(1)}, {"P3", path_graph(3)}, {"C5", cycle_graph(5)}};
    for (int d : {1, 2}) {
        for (const auto& [name, h] : graphs) {
            const auto r = verify_theorem4(h, d, 3);
            const auto& rows = r.witnesses["per_n"];
            bool ok = r.status == Status::observed && r.hypothesis_holds && !r.conclusion_holds &&
                      !r.note.empty() && rows.size() == 3;
            std::string pattern;
            for (const auto& row : rows) {
                if (row.contains("chi") && row.contains("chi_list")) {
                    const bool eq = row["chi"] == row["chi_list"];
                    ok = ok && eq && row["equal"] == eq;
                    pattern += eq ? "=" : "<";
                } else {
                    pattern += "?";
                }
            }
            pass = pass && ok;
            if (!detail.empty()) detail += ", ";
            detail += name + "/d" + std::to_string(d) + " " + pattern + " from n=" +
                      r.hypothesis_values["equality_from"].dump();
        }
    }
    return {pass, detail};
}

Outcome criterion10() {
    int checked = 0;
    int broken = 0;
    const auto corpus = support::atlas(1, 6);
    for (const char* lit : {"K2", "K3", "C4", "R:2"}) {
        const Pattern p = parse_pattern(lit);
        for (const auto& g : corpus) {
            ++checked;
            const int chi = chromatic_number(g, p);
            if (chi > choice_number(g, p)) ++broken;
            const auto c = find_k_coloring(g, p, chi);
            if (!c || !oracle_valid(g, p, *c)) ++broken;
            const Coloring canon = canonical_optimal_coloring(g, p);
            if (!oracle_valid(g, p, canon)) ++broken;
        }
    }

    std::mt19937_64 rng(10);
    const std::vector<Pattern> ps = {parse_pattern("K2"), parse_pattern("K3"), parse_pattern("C4"),
                                     parse_pattern("R:2")};
    int monotone = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Graph g = support::random_graph(n, 0.5, rng);
        const VertexSet s(rng() & g.vertices().bits());
        const Pattern& p = ps[t % ps.size()];
        if (chromatic_number(induced_subgraph(g, s), p) > chromatic_number(g, p)) ++broken;
        ++monotone;
    }
    int joins = 0;
    for (int t = 0; t < 100; ++t) {
        const Graph a = support::random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
        const Graph b = support::random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
        const Pattern& p = ps[t % ps.size()];
        const Graph j = join(a, b);
        const int chi = chromatic_number(j, p);
        if (chi > chromatic_number(a, p) + chromatic_number(b, p)) ++broken;
        const auto c = find_k_coloring(j, p, chi);
        if (!c || !oracle_valid(j, p, *c)) ++broken;
        ++joins;
    }
    int lists = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = support::random_graph(n, 0.5, rng);
        const Pattern& p = ps[t % ps.size()];
        const int k = 1 + static_cast<int>(rng() % 3);
        const ListAssignment l(support::random_lists(n, k, k + 2, rng));
        if (const auto c = find_list_coloring(g, p, l)) {
            ++lists;
            if (!within_lists(l, *c) || !oracle_valid(g, p, *c)) ++broken;
        }
    }
    std::ostringstream os;
    os << checked << " chi/chi_list instances, " << monotone << " subgraph pairs, " << joins << " join pairs, "
       << lists << " list colourings; " << broken << " violations";
    return {broken == 0, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 chi(H,K2) equals proper chromatic number on graphs up to 7 vertices", criterion1},
        {"2 chi(H,R:2) equals vertex arboricity on graphs up to 6 vertices", criterion2},
        {"3 Hall colouring/violator matches subset enumeration", criterion3},
        {"4 chi_list <= ceil(n/delta); ceil(n/delta) colouring succeeds", criterion4},
        {"5 greedy with ceil(maxdeg/delta)+1 colours never fails", criterion5},
        {"6 list-equality bound and largest-class bound", criterion6},
        {"7 join bounds for choice numbers", criterion7},
        {"8 lower bound for chi of H join K_n, R_d", criterion8},
        {"9 equality report for H join K_n at small n", criterion9},
        {"10 invariants", criterion10},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] criterion %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
