#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"

namespace gfree {

// Search limits. Exceeding either raises BudgetExceeded instead of running
// unbounded.
struct Budget {
    std::uint64_t max_nodes = 10'000'000;        // branch nodes per solver call
    std::uint64_t max_assignments = 10'000'000;  // reduced list assignments per choosability check
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vertex -> colour. For plain k-colourings the colours are class indices
// 0..k-1; for list colourings they are the list colour identifiers.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {}

    int order() const { return static_cast<int>(colors_.size()); }
    int color(int v) const { return colors_[v]; }
    const std::vector<int>& colors() const { return colors_; }

    // Distinct colours in ascending order.
    std::vector<int> palette() const;
    VertexSet class_of(int color) const;
    // One vertex set per palette colour, same order as palette().
    std::vector<VertexSet> classes() const;
    // Class sizes, largest first.
    std::vector<int> class_sizes() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> colors_;
};

// Every class of the colouring induces a pattern-free subgraph.
bool is_valid_coloring(const Graph& h, const Pattern& p, const Coloring& c);

class ListAssignment {
public:
    ListAssignment() = default;
    // Lists are sorted and deduplicated; throws std::invalid_argument on an
    // empty list or a negative colour.
    explicit ListAssignment(std::vector<std::vector<int>> lists);
    // Every vertex gets {0, ..., k-1}.
    static ListAssignment uniform(int n, int k);

    int order() const { return static_cast<int>(lists_.size()); }
    const std::vector<int>& list(int v) const { return lists_[v]; }
    const std::vector<std::vector<int>>& lists() const { return lists_; }
    bool allows(int v, int color) const;
    std::size_t min_list_size() const;

    // L(S): union of the lists of S, ascending.
    std::vector<int> colors_of(VertexSet s) const;
    std::vector<int> universe() const;

    std::string to_string() const;  // "0,1;0,2;1"
    static ListAssignment parse(const std::string& text);

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<int>> lists_;
};

bool is_valid_list_coloring(const Graph& h, const Pattern& p, const ListAssignment& lists, const Coloring& c);

// A k-class colouring with every class free, if one exists. Classes are
// numbered in the order the search opens them.
std::optional<Coloring> find_k_coloring(const Graph& h, const Pattern& p, int k, const Budget& budget = {});

// Least k with a k-class free colouring (0 for the empty graph).
int chromatic_number(const Graph& h, const Pattern& p, const Budget& budget = {});

// A colouring with c(v) in L(v) and every colour class free, if one exists.
std::optional<Coloring> find_list_coloring(const Graph& h, const Pattern& p, const ListAssignment& lists,
                                           const Budget& budget = {});

struct ChoosabilityVerdict {
    bool choosable = false;
    std::optional<ListAssignment> counterexample;  // set iff !choosable
    std::uint64_t assignments_checked = 0;
};

// Knobs for the sound reductions used by check_choosable. Disabling them
// gives the plain canonical enumeration; used to cross-check the reductions.
struct ChoosabilityOptions {
    // Drop vertices whose degree is below delta*k: they can always be
    // coloured last.
    bool peel_low_degree = true;
    // Once every H - v is known to be k-choosable, only enumerate colour
    // sets in which every vertex lies on a pattern copy inside the set. A
    // bad assignment with some other colour set cannot exist then.
    bool covered_colour_sets_only = true;
    // For proper colouring (K2 or R:1) first try an Alon-Tarsi certificate,
    // which proves choosability without enumerating assignments.
    bool alon_tarsi = true;
};

// Combinatorial Nullstellensatz test: true if the graph polynomial of
// H[within] has a nonzero monomial with every exponent below k, which makes
// H[within] k-choosable for proper colouring. False means "no certificate",
// not "not choosable". Gives up (false) above 16 vertices or k > 15.
bool alon_tarsi_certifies(const Graph& h, VertexSet within, int k);

// Whether every assignment of k-lists admits a free list colouring. On a
// negative answer the verdict carries a concrete bad assignment.
ChoosabilityVerdict check_choosable(const Graph& h, const Pattern& p, int k, const Budget& budget = {},
                                    const ChoosabilityOptions& options = {});

// Least k with check_choosable true. Searches upward from
// chromatic_number(h, p) and stops at ceil(n / delta).
int choice_number(const Graph& h, const Pattern& p, const Budget& budget = {});

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace gfree
