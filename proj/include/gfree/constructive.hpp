#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gfree/exact.hpp"
#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"

namespace gfree {

// Either a list colouring that uses every colour on at most delta vertices,
// or a vertex set S with |S| > delta * |L(S)| proving none exists.
class HallOutcome {
public:
    explicit HallOutcome(Coloring c) : value_(std::move(c)) {}
    explicit HallOutcome(VertexSet violator) : value_(violator) {}

    bool colored() const { return std::holds_alternative<Coloring>(value_); }
    const Coloring& coloring() const { return std::get<Coloring>(value_); }
    VertexSet violator() const { return std::get<VertexSet>(value_); }

private:
    std::variant<Coloring, VertexSet> value_;
};

// Capacity-delta bipartite matching of vertices to list colours. On failure
// the violator is the alternating-reachable set of an unmatched vertex.
// The graph only fixes the vertex count; edges play no role.
HallOutcome hall_color_or_violator(const Graph& h, const ListAssignment& lists, int delta);

// Colours vertices in `order`, each with the first colour of its list that
// keeps its class free. nullopt if some vertex has no such colour. Always
// succeeds when every list has at least ceil(max_degree / delta) + 1 colours.
std::optional<Coloring> greedy_list_color(const Graph& h, const Pattern& p, const ListAssignment& lists,
                                          const std::vector<int>& order);
std::optional<Coloring> greedy_list_color(const Graph& h, const Pattern& p, const ListAssignment& lists);

// Requires every list to have at least ceil(n / delta) colours (throws
// std::invalid_argument otherwise). Repeatedly gives the colour shared by
// the most remaining lists (smallest id on ties) to delta of its holders,
// removes it from the other lists, and finishes with a Hall matching once
// no colour is shared by delta vertices. Every class has at most delta
// vertices.
Coloring color_ceil_n_over_delta(const Graph& h, const Pattern& p, const ListAssignment& lists);

}  // namespace gfree
