#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gfree {

inline constexpr int kMaxVertices = 64;

// A set of vertices 0..63 stored as a single machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int first() const { return std::countr_zero(bits_); }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend constexpr bool operator==(iterator a, iterator b) = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

// Undirected simple graph on vertices 0..n-1, n <= 64, with one adjacency
// bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const;
    VertexSet vertices() const { return VertexSet::range(order()); }

    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].size(); }
    int degree_within(int v, VertexSet within) const { return (adj_[v] & within).size(); }

    void add_edge(int u, int v);
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> adj_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);

// Disjoint union of `left` and `right` plus every left-right edge. Vertices
// of `right` are shifted by left.order().
Graph join(const Graph& left, const Graph& right);

// Subgraph induced by `subset`, re-indexed in ascending vertex order.
Graph induced_subgraph(const Graph& g, VertexSet subset);
Graph induced_subgraph(const Graph& g, const std::vector<int>& subset);

int max_degree(const Graph& g);
int min_degree(const Graph& g);
bool is_connected(const Graph& g);

// Smallest-last (degeneracy) ordering: every vertex has at most
// degeneracy(g) neighbours earlier in the returned sequence.
std::vector<int> smallest_last_order(const Graph& g);

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Reads one graph per non-blank line. Parse failures are rethrown as
// std::runtime_error naming the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Relabelling-invariant graph6 string (lexicographic minimum over all
// degree-respecting vertex orders). Exponential; intended for n <= 10.
std::string canonical_graph6(const Graph& g);

// All non-isomorphic graphs on n vertices in canonical form, sorted by
// canonical graph6. Exponential; intended for n <= 8.
std::vector<Graph> all_graphs(int n);

}  // namespace gfree
