#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfree/graph.hpp"

namespace gfree {

class Pattern;
Pattern parse_pattern(std::string_view literal);

// A forbidden structure: either one connected graph G, or the family of
// all d-regular graphs. min_degree() is the delta that drives every bound in
// the library; any vertex set with at most min_degree() vertices is free.
class Pattern {
public:
    // Throws std::invalid_argument unless g is connected with at least one edge.
    static Pattern single(Graph g);
    // Throws std::invalid_argument unless d >= 1.
    static Pattern all_regular(int d);

    bool is_family() const { return family_; }
    const Graph& graph() const { return graph_; }
    int regularity() const { return family_ ? delta_ : -1; }
    int min_degree() const { return delta_; }

    // Round-trips through parse_pattern.
    std::string literal() const;

private:
    friend Pattern parse_pattern(std::string_view literal);
    Pattern() = default;

    bool family_ = false;
    int delta_ = 0;
    Graph graph_;
    std::string literal_;
};

// "K<n>", "C<n>", "P<n>", "R:<d>" or "g6:<graph6>".
Pattern parse_pattern(std::string_view literal);

// True iff H[within] contains no copy of the pattern as a (not necessarily
// induced) subgraph.
bool is_free(const Graph& h, VertexSet within, const Pattern& p);
inline bool is_free(const Graph& h, const Pattern& p) { return is_free(h, h.vertices(), p); }

// True iff some copy of the pattern inside H[within] uses vertex `anchor`.
// `anchor` must belong to `within`.
bool has_copy_through(const Graph& h, VertexSet within, int anchor, const Pattern& p);

// A maximum-cardinality S with H[S] free; among those, the lexicographically
// smallest sorted vertex sequence.
VertexSet max_free_induced_set(const Graph& h, const Pattern& p);

// Memoized freeness queries over subsets of one host graph. Not thread-safe;
// give each worker its own instance.
class FreeSetCache {
public:
    FreeSetCache(const Graph& h, const Pattern& p);

    const Graph& host() const { return host_; }
    const Pattern& pattern() const { return pattern_; }

    bool is_free(VertexSet s);
    // Whether cls + {v} stays free, given that cls already is.
    bool can_add(VertexSet cls, int v);

private:
    Graph host_;
    Pattern pattern_;
    std::vector<signed char> table_;
};

}  // namespace gfree
