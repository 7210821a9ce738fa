#include "gfree/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "gfree/constructive.hpp"

namespace gfree {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::vacuous: return "vacuous";
        case Status::skipped: return "skipped";
        case Status::observed: return "observed";
    }
    return "unknown";
}

ordered_json VerifyReport::to_json(bool with_timing) const {
    ordered_json j;
    j["theorem"] = theorem;
    j["instance"] = instance;
    j["hypothesis_holds"] = hypothesis_holds;
    j["hypothesis_values"] = hypothesis_values;
    j["conclusion_holds"] = conclusion_holds ? ordered_json(*conclusion_holds) : ordered_json(nullptr);
    j["status"] = gfree::to_string(status);
    j["witnesses"] = witnesses;
    if (!note.empty()) j["note"] = note;
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

ordered_json to_json(const Coloring& c) { return c.colors(); }

ordered_json to_json(const ListAssignment& l) { return l.lists(); }

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body`, fills timing, and turns budget exhaustion into a skipped
// report.
VerifyReport timed(VerifyReport report, const std::function<void(VerifyReport&)>& body) {
    const auto start = Clock::now();
    try {
        body(report);
    } catch (const BudgetExceeded& e) {
        report.status = Status::skipped;
        report.conclusion_holds.reset();
        report.note = e.what();
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

void conclude(VerifyReport& r, bool holds) {
    r.conclusion_holds = holds;
    r.status = holds ? Status::pass : Status::fail;
}

void mark_vacuous(VerifyReport& r) {
    r.conclusion_holds.reset();
    r.status = Status::vacuous;
}

VerifyReport make_report(std::string theorem, ordered_json instance) {
    VerifyReport r;
    r.theorem = std::move(theorem);
    r.instance = std::move(instance);
    return r;
}

ordered_json describe(const Graph& h, const Pattern& p) {
    return {{"graph", write_graph6(h)}, {"pattern", p.literal()}};
}

ordered_json describe_pair(const Graph& h, const Graph& h2, const Pattern& p) {
    return {{"graph", write_graph6(h)}, {"graph2", write_graph6(h2)}, {"pattern", p.literal()}};
}

// Lexicographic k-subsets of `pool`, stopping when `visit` returns true.
bool for_each_subset(const std::vector<int>& pool, int k, const std::function<bool(VertexSet)>& visit) {
    const int n = static_cast<int>(pool.size());
    if (k > n) return false;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        VertexSet s;
        for (int i : pick) s.insert(pool[i]);
        if (visit(s)) return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

Coloring canonical_optimal_coloring(const Graph& h, const Pattern& p, const Budget& budget) {
    const int chi = chromatic_number(h, p, budget);
    std::vector<int> colors(static_cast<std::size_t>(h.order()), -1);
    VertexSet remaining = h.vertices();
    for (int cls = 0; cls < chi; ++cls) {
        const int left = chi - cls - 1;
        const std::vector<int> pool = remaining.to_vector();
        VertexSet picked;
        for (int size = static_cast<int>(pool.size()); size >= 1 && picked.empty(); --size) {
            for_each_subset(pool, size, [&](VertexSet s) {
                if (!is_free(h, s, p)) return false;
                const VertexSet rest = remaining - s;
                const bool fits = left == 0 ? rest.empty()
                                            : rest.empty() || find_k_coloring(induced_subgraph(h, rest), p, left,
                                                                              budget).has_value();
                if (fits) picked = s;
                return fits;
            });
        }
        if (picked.empty()) throw std::logic_error("no canonical optimal colouring found");
        for (int v : picked) colors[v] = cls;
        remaining = remaining - picked;
    }
    return Coloring(std::move(colors));
}

bool list_equality_bound_holds(long n, long delta, long chi) {
    const long x = delta * chi;
    const long t = n - x + delta - 1;
    return t <= 0 || t * t <= x;
}

VerifyReport verify_theorem2(const Graph& h, const Pattern& p, const VerifyOptions& options) {
    VerifyReport base = make_report("theorem2", describe(h, p));
    return timed(base, [&](VerifyReport& r) {
        const int n = h.order();
        const int delta = p.min_degree();
        const int chi = chromatic_number(h, p, options.budget);
        const double x = static_cast<double>(delta) * chi;
        r.hypothesis_values = {{"n", n}, {"delta", delta}, {"chi", chi},
                               {"bound", x + std::sqrt(x) - (delta - 1)}};
        r.hypothesis_holds = list_equality_bound_holds(n, delta, chi);
        if (!r.hypothesis_holds) return mark_vacuous(r);
        const int chi_list = choice_number(h, p, options.budget);
        r.hypothesis_values["chi_list"] = chi_list;
        conclude(r, chi_list == chi);
    });
}

VerifyReport verify_lemma4(const Graph& h, const Pattern& p, const VerifyOptions& options) {
    VerifyReport base = make_report("lemma4", describe(h, p));
    return timed(base, [&](VerifyReport& r) {
        const long n = h.order();
        const long delta = p.min_degree();
        const Coloring optimal = canonical_optimal_coloring(h, p, options.budget);
        const std::vector<int> sizes = optimal.class_sizes();
        const long chi = static_cast<long>(sizes.size());
        const long n1 = sizes.empty() ? 0 : sizes.front();
        r.hypothesis_values = {{"n", n}, {"delta", delta}, {"chi", chi}, {"n1", n1},
                               {"lhs", (n1 - 1) * n}, {"rhs", n1 * delta * chi}};
        r.witnesses["optimal_coloring"] = to_json(optimal);
        r.hypothesis_holds = (n1 - 1) * n <= n1 * delta * chi;
        if (!r.hypothesis_holds) return mark_vacuous(r);
        const int chi_list = choice_number(h, p, options.budget);
        r.hypothesis_values["chi_list"] = chi_list;
        conclude(r, chi_list == chi);
    });
}

VerifyReport verify_theorem3(const Graph& h, const Pattern& p, const VerifyOptions& options) {
    VerifyReport base = make_report("theorem3", describe(h, p));
    base.instance["trials"] = options.trials;
    base.instance["seed"] = options.seed;
    return timed(base, [&](VerifyReport& r) {
        const int n = h.order();
        const int delta = p.min_degree();
        const int k = ceil_div(max_degree(h), delta) + 1;
        r.hypothesis_holds = true;
        r.hypothesis_values = {{"n", n}, {"delta", delta}, {"max_degree", max_degree(h)}, {"k", k},
                               {"connected", is_connected(h)}};

        std::mt19937_64 rng(options.seed);
        const int universe = std::max(3 * n, k);
        std::vector<int> palette(static_cast<std::size_t>(universe));
        for (int c = 0; c < universe; ++c) palette[c] = c;
        int failures = 0;
        for (int t = 0; t < options.trials; ++t) {
            std::vector<std::vector<int>> lists;
            for (int v = 0; v < n; ++v) {
                std::vector<int> list;
                std::sample(palette.begin(), palette.end(), std::back_inserter(list), k, rng);
                lists.push_back(std::move(list));
            }
            const ListAssignment assignment(std::move(lists));
            if (!greedy_list_color(h, p, assignment)) {
                if (failures++ == 0) r.witnesses["greedy_failure"] = to_json(assignment);
            }
        }
        r.hypothesis_values["greedy_failures"] = failures;

        bool exhaustive_ok = true;
        try {
            const auto verdict = check_choosable(h, p, k, options.budget);
            r.hypothesis_values["exhaustive_choosable"] = verdict.choosable;
            if (!verdict.choosable) {
                exhaustive_ok = false;
                r.witnesses["counterexample"] = to_json(*verdict.counterexample);
            }
        } catch (const BudgetExceeded& e) {
            r.hypothesis_values["exhaustive_choosable"] = nullptr;
            r.note = std::string("exhaustive check skipped: ") + e.what();
        }
        conclude(r, failures == 0 && exhaustive_ok);
    });
}

VerifyReport verify_theorem1(const Graph& h, const Graph& h2, const Pattern& p, const VerifyOptions& options) {
    VerifyReport base = make_report("theorem1", describe_pair(h, h2, p));
    return timed(base, [&](VerifyReport& r) {
        const long n = h.order();
        const long n2 = h2.order();
        const long delta = p.min_degree();
        const long k = choice_number(h, p, options.budget);
        const long k2 = choice_number(h2, p, options.budget);
        const long s = max_free_induced_set(h, p).size();
        const long s2 = max_free_induced_set(h2, p).size();
        const bool via_right = (s2 - 1) * (n + s2) <= s2 * delta * (k + 1);
        const bool via_left = (s - 1) * (n2 + s) <= s * delta * (k2 + 1);
        r.hypothesis_values = {{"n", n}, {"n2", n2}, {"delta", delta}, {"k", k}, {"k2", k2},
                               {"s", s}, {"s2", s2}, {"via_right", via_right}, {"via_left", via_left}};
        r.hypothesis_holds = via_right || via_left;
        if (!r.hypothesis_holds) return mark_vacuous(r);
        const auto verdict = check_choosable(join(h, h2), p, static_cast<int>(k + k2), options.budget);
        if (verdict.counterexample) r.witnesses["counterexample"] = to_json(*verdict.counterexample);
        conclude(r, verdict.choosable);
    });
}

VerifyReport verify_lemma2(const Graph& h, const Graph& h2, const Pattern& p, const VerifyOptions& options) {
    VerifyReport base = make_report("lemma2", describe_pair(h, h2, p));
    return timed(base, [&](VerifyReport& r) {
        const long n = h.order();
        const long n2 = h2.order();
        const long delta = p.min_degree();
        const bool h2_free = is_free(h2, p);
        r.hypothesis_values = {{"n", n}, {"n2", n2}, {"delta", delta}, {"h2_free", h2_free}};
        if (!h2_free) {
            r.note = "second graph contains the pattern";
            return mark_vacuous(r);
        }
        const long k = choice_number(h, p, options.budget);
        r.hypothesis_values["k"] = k;
        r.hypothesis_values["lhs"] = (n2 - 1) * (n + n2);
        r.hypothesis_values["rhs"] = n2 * delta * (k + 1);
        r.hypothesis_holds = (n2 - 1) * (n + n2) <= n2 * delta * (k + 1);
        if (!r.hypothesis_holds) return mark_vacuous(r);
        const auto verdict = check_choosable(join(h, h2), p, static_cast<int>(k + 1), options.budget);
        if (verdict.counterexample) r.witnesses["counterexample"] = to_json(*verdict.counterexample);
        conclude(r, verdict.choosable);
    });
}

VerifyReport verify_lemma5(const Graph& h, int d, int n, const VerifyOptions& options) {
    if (n < 1) throw std::invalid_argument("lemma5 needs n >= 1");
    const Pattern p = Pattern::all_regular(d);
    VerifyReport base = make_report("lemma5", describe(h, p));
    base.instance["d"] = d;
    base.instance["n"] = n;
    return timed(base, [&](VerifyReport& r) {
        const int chi_h = chromatic_number(h, p, options.budget);
        const Graph joined = join(h, complete_graph(n));
        const int chi_join = chromatic_number(joined, p, options.budget);
        r.hypothesis_holds = true;
        r.hypothesis_values = {{"d", d}, {"n", n}, {"chi_h", chi_h}, {"chi_join", chi_join},
                               {"bound", static_cast<double>(chi_h + n) / d}};
        conclude(r, static_cast<long>(d) * chi_join >= chi_h + n);
    });
}

VerifyReport verify_theorem4(const Graph& h, int d, int n_max, const VerifyOptions& options) {
    const Pattern p = Pattern::all_regular(d);
    VerifyReport base = make_report("theorem4", describe(h, p));
    base.instance["d"] = d;
    base.instance["n_max"] = n_max;
    return timed(base, [&](VerifyReport& r) {
        r.hypothesis_holds = true;
        r.status = Status::observed;
        ordered_json rows = ordered_json::array();
        int equality_from = 0;  // 0: no equality suffix observed
        int computed = 0;
        for (int n = 1; n <= n_max; ++n) {
            const Graph joined = join(h, complete_graph(n));
            ordered_json row = {{"n", n}};
            try {
                const int chi = chromatic_number(joined, p, options.budget);
                const int chi_list = choice_number(joined, p, options.budget);
                row["chi"] = chi;
                row["chi_list"] = chi_list;
                row["equal"] = chi == chi_list;
                ++computed;
                if (chi != chi_list) equality_from = 0;
                else if (equality_from == 0) equality_from = n;
            } catch (const BudgetExceeded& e) {
                row["skipped"] = e.what();
            }
            rows.push_back(std::move(row));
        }
        r.witnesses["per_n"] = std::move(rows);
        r.hypothesis_values = {{"d", d}, {"n_max", n_max}, {"computed", computed},
                               {"equality_from", equality_from > 0 ? ordered_json(equality_from) : ordered_json(nullptr)}};
        r.note = "equality is only guaranteed for sufficiently large n; inequality at small n does not refute it";
    });
}

// ------------------------------------------------------------------ corpus

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> ids = {"theorem1", "lemma2",  "theorem2", "lemma4",
                                                 "theorem3", "lemma5", "theorem4"};
    return ids;
}

void CorpusSummary::add(const VerifyReport& r) {
    ++instances;
    if (r.hypothesis_holds && r.status != Status::skipped) ++hypothesis_held;
    switch (r.status) {
        case Status::pass: ++passed; break;
        case Status::fail: ++failed; break;
        case Status::vacuous: ++vacuous; break;
        case Status::skipped: ++skipped; break;
        case Status::observed: ++observed; break;
    }
}

ordered_json CorpusSummary::to_json() const {
    return {{"instances", instances}, {"hypothesis_held", hypothesis_held}, {"passed", passed},
            {"failed", failed},       {"vacuous", vacuous},                 {"skipped", skipped},
            {"observed", observed}};
}

CorpusResult run_corpus(const std::vector<Graph>& corpus, const Pattern& p, const CorpusOptions& options) {
    for (const auto& id : options.checks) {
        if (std::find(known_checks().begin(), known_checks().end(), id) == known_checks().end()) {
            throw std::invalid_argument("unknown check '" + id + "'");
        }
    }
    const int d = options.d > 0 ? options.d : (p.is_family() ? p.regularity() : 1);
    const VerifyOptions& vo = options.verify;

    std::vector<std::function<VerifyReport()>> tasks;
    for (const auto& id : options.checks) {
        const bool pairwise = id == "theorem1" || id == "lemma2";
        if (pairwise) {
            for (const auto& a : corpus) {
                for (const auto& b : corpus) {
                    if (a.order() + b.order() > options.max_join_order) continue;
                    if (id == "theorem1") tasks.emplace_back([&] { return verify_theorem1(a, b, p, vo); });
                    else tasks.emplace_back([&] { return verify_lemma2(a, b, p, vo); });
                }
            }
            continue;
        }
        for (const auto& g : corpus) {
            if (id == "theorem2") tasks.emplace_back([&] { return verify_theorem2(g, p, vo); });
            else if (id == "lemma4") tasks.emplace_back([&] { return verify_lemma4(g, p, vo); });
            else if (id == "theorem3") tasks.emplace_back([&] { return verify_theorem3(g, p, vo); });
            else if (id == "theorem4") tasks.emplace_back([&, d] { return verify_theorem4(g, d, options.n_max, vo); });
            else if (id == "lemma5") {
                for (int n = 1; n <= options.n_max; ++n)
                    tasks.emplace_back([&, d, n] { return verify_lemma5(g, d, n, vo); });
            }
        }
    }

    CorpusResult result;
    result.reports.resize(tasks.size());
    int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                result.reports[i] = tasks[i]();
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (error) std::rethrow_exception(error);

    for (const auto& r : result.reports) result.summary.add(r);
    return result;
}

CorpusResult run_corpus(std::istream& corpus, const Pattern& p, const CorpusOptions& options) {
    return run_corpus(read_graph6_stream(corpus), p, options);
}

}  // namespace gfree
