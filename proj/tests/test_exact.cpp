#include <doctest.h>

#include <algorithm>
#include <random>

#include "gfree/exact.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gfree;

namespace {

oracle::FreeTest free_test(const Graph& g, const Pattern& p) {
    const auto m = oracle::matrix_of(g);
    if (p.is_family()) {
        const int d = p.regularity();
        return [m, d](std::uint64_t s) { return !oracle::contains_regular(m, s, d); };
    }
    const auto pm = oracle::matrix_of(p.graph());
    return [m, pm](std::uint64_t s) { return !oracle::contains(m, s, pm); };
}

// Checks a colouring with the oracle, not with the library.
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

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("list assignment parsing") {
    const auto l = ListAssignment::parse("1,0;2;0,2,2");
    CHECK(l.order() == 3);
    CHECK(l.list(0) == std::vector<int>{0, 1});
    CHECK(l.list(2) == std::vector<int>{0, 2});
    CHECK(l.to_string() == "0,1;2;0,2");
    CHECK(l.colors_of(VertexSet(0b011)) == std::vector<int>{0, 1, 2});
    CHECK(l.min_list_size() == 1);
    CHECK_THROWS_AS(ListAssignment::parse("0;;1"), std::invalid_argument);
    CHECK_THROWS_AS(ListAssignment::parse("0;x"), std::invalid_argument);
    CHECK_THROWS_AS(ListAssignment::parse("-1"), std::invalid_argument);
    CHECK(ListAssignment::uniform(3, 2).to_string() == "0,1;0,1;0,1");
}

TEST_CASE("reference examples for colouring") {
    const Pattern k2 = parse_pattern("K2");
    const Pattern k3 = parse_pattern("K3");
    const Pattern r2 = parse_pattern("R:2");
    const auto two = find_k_coloring(complete_graph(4), k3, 2);
    REQUIRE(two);
    CHECK(oracle_valid(complete_graph(4), k3, *two));
    CHECK_FALSE(find_k_coloring(cycle_graph(5), k2, 2));
    CHECK(chromatic_number(cycle_graph(5), k2) == 3);
    CHECK(chromatic_number(complete_graph(4), k3) == 2);
    CHECK(chromatic_number(cycle_graph(5), r2) == 2);
    CHECK(chromatic_number(Graph(0), k2) == 0);
    CHECK(chromatic_number(empty_graph(4), k2) == 1);

    // Lists.
    CHECK_FALSE(find_list_coloring(complete_graph(3), k2, ListAssignment::parse("0,1;0,1;0,1")));
    const auto distinct = find_list_coloring(complete_graph(4), k2, ListAssignment::parse("0;1;2;3"));
    REQUIRE(distinct);
    CHECK(distinct->colors() == std::vector<int>{0, 1, 2, 3});
    CHECK(find_list_coloring(complete_graph(4), k3, ListAssignment::parse("0,1,2;0,1,2;0,1,2;0,1,2")));

    // Choosability.
    const auto c5 = check_choosable(cycle_graph(5), k2, 2);
    CHECK_FALSE(c5.choosable);
    REQUIRE(c5.counterexample);
    CHECK_FALSE(find_list_coloring(cycle_graph(5), k2, *c5.counterexample));
    CHECK(check_choosable(complete_graph(4), k3, 2).choosable);
    CHECK(choice_number(cycle_graph(5), k2) == 3);
    CHECK(choice_number(complete_graph(4), k3) == 2);
    CHECK(choice_number(cycle_graph(4), k2) == 2);
    // K_{3,3} is the classic 2-colourable graph that is not 2-choosable.
    CHECK(choice_number(join(empty_graph(3), empty_graph(3)), k2) == 3);
}

TEST_CASE("one class iff free") {
    for (const auto& g : support::atlas(1, 5))
        for (const char* lit : {"K2", "K3", "R:2"}) {
            const Pattern p = parse_pattern(lit);
            CHECK(find_k_coloring(g, p, 1).has_value() == is_free(g, p));
            CHECK((chromatic_number(g, p) == 1) == is_free(g, p));
            CHECK((choice_number(g, p) == 1) == is_free(g, p));
        }
}

TEST_CASE("chromatic number agrees with brute force") {
    for (const auto& g : support::atlas(1, 6)) {
        for (const char* lit : {"K2", "K3", "C4", "P3", "R:2", "R:3"}) {
            const Pattern p = parse_pattern(lit);
            CAPTURE(write_graph6(g));
            CAPTURE(lit);
            const int chi = chromatic_number(g, p);
            CHECK(chi == oracle::free_chromatic(g.order(), free_test(g, p)));
            const auto c = find_k_coloring(g, p, chi);
            REQUIRE(c);
            CHECK(oracle_valid(g, p, *c));
            CHECK(static_cast<int>(c->palette().size()) <= chi);
            CHECK(is_valid_coloring(g, p, *c));
        }
    }
}

TEST_CASE("uniform lists reduce to k-colouring") {
    const Pattern k2 = parse_pattern("K2");
    for (const auto& g : support::atlas(1, 6))
        for (int k = 1; k <= 3; ++k)
            CHECK(find_list_coloring(g, k2, ListAssignment::uniform(g.order(), k)).has_value() ==
                  find_k_coloring(g, k2, k).has_value());
}

TEST_CASE("list colouring agrees with brute force") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = support::random_graph(n, 0.6, rng);
        const Pattern p = parse_pattern(trial % 3 == 0 ? "K2" : trial % 3 == 1 ? "K3" : "R:2");
        const int k = 1 + static_cast<int>(rng() % 3);
        const ListAssignment lists(support::random_lists(n, k, k + 2, rng));
        const auto c = find_list_coloring(g, p, lists);
        CHECK(c.has_value() == oracle::list_colorable(lists.lists(), free_test(g, p)));
        if (c) {
            CHECK(oracle_valid(g, p, *c));
            CHECK(is_valid_list_coloring(g, p, lists, *c));
        }
    }
}

TEST_CASE("choosability agrees with brute force on tiny graphs") {
    for (const auto& g : support::atlas(1, 4)) {
        for (const char* lit : {"K2", "K3", "P3", "R:2"}) {
            const Pattern p = parse_pattern(lit);
            for (int k = 1; k <= 3; ++k) {
                CAPTURE(write_graph6(g));
                CAPTURE(lit);
                CAPTURE(k);
                const auto verdict = check_choosable(g, p, k);
                CHECK(verdict.choosable == oracle::choosable(g.order(), k, free_test(g, p)));
                if (!verdict.choosable) {
                    REQUIRE(verdict.counterexample);
                    CHECK(verdict.counterexample->order() == g.order());
                    for (const auto& l : verdict.counterexample->lists()) CHECK(static_cast<int>(l.size()) == k);
                    CHECK_FALSE(oracle::list_colorable(verdict.counterexample->lists(), free_test(g, p)));
                }
            }
        }
    }
}

TEST_CASE("choosability on five vertices, K2, against brute force") {
    const Pattern k2 = parse_pattern("K2");
    for (const auto& g : support::atlas(5, 5)) {
        CAPTURE(write_graph6(g));
        CHECK(check_choosable(g, k2, 2).choosable == oracle::choosable(5, 2, free_test(g, k2)));
    }
}

TEST_CASE("reductions do not change verdicts") {
    std::vector<ChoosabilityOptions> variants;
    for (int bits = 0; bits < 8; ++bits) {
        ChoosabilityOptions o;
        o.peel_low_degree = bits & 1;
        o.covered_colour_sets_only = bits & 2;
        o.alon_tarsi = bits & 4;
        variants.push_back(o);
    }
    for (const auto& g : support::atlas(1, 5)) {
        for (const char* lit : {"K2", "K3", "R:2"}) {
            const Pattern p = parse_pattern(lit);
            const int chi = chromatic_number(g, p);
            for (int k = chi; k <= std::min(chi + 1, 3); ++k) {
                CAPTURE(write_graph6(g));
                CAPTURE(lit);
                CAPTURE(k);
                const bool reference = check_choosable(g, p, k, {}, variants[0]).choosable;
                for (const auto& o : variants) {
                    const auto verdict = check_choosable(g, p, k, {}, o);
                    CHECK(verdict.choosable == reference);
                    if (verdict.counterexample)
                        CHECK_FALSE(find_list_coloring(g, p, *verdict.counterexample).has_value());
                }
            }
        }
    }
}

TEST_CASE("Alon-Tarsi certificates are sound") {
    const Pattern k2 = parse_pattern("K2");
    for (const auto& g : support::atlas(1, 5)) {
        for (int k = 1; k <= 3; ++k) {
            if (!alon_tarsi_certifies(g, g.vertices(), k)) continue;
            CAPTURE(write_graph6(g));
            CAPTURE(k);
            CHECK(oracle::choosable(g.order(), k, free_test(g, k2)));
        }
    }
    CHECK(alon_tarsi_certifies(cycle_graph(4), VertexSet::range(4), 2));
    CHECK_FALSE(alon_tarsi_certifies(cycle_graph(5), VertexSet::range(5), 2));
    CHECK(alon_tarsi_certifies(complete_graph(4), VertexSet::range(4), 4));
}

TEST_CASE("choice number bounds") {
    for (const auto& g : support::atlas(1, 6)) {
        for (const char* lit : {"K2", "K3", "C4", "R:2"}) {
            const Pattern p = parse_pattern(lit);
            const int chi = chromatic_number(g, p);
            const int chl = choice_number(g, p);
            CHECK(chi <= chl);
            CHECK(chl <= ceil_div(g.order(), p.min_degree()));
        }
    }
}

TEST_CASE("budgets are enforced") {
    Budget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(chromatic_number(parse_graph6("IheA@GUAo"), parse_pattern("K2"), tiny), BudgetExceeded);
    Budget few;
    few.max_assignments = 2;
    ChoosabilityOptions plain;
    plain.peel_low_degree = false;
    plain.covered_colour_sets_only = false;
    plain.alon_tarsi = false;
    CHECK_THROWS_AS(check_choosable(cycle_graph(4), parse_pattern("K2"), 2, few, plain), BudgetExceeded);
    CHECK_THROWS_AS(find_k_coloring(cycle_graph(4), parse_pattern("K2"), 0), std::invalid_argument);
}

}  // TEST_SUITE
