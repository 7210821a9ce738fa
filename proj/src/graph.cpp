#include "gfree/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gfree {

Graph::Graph(int order) {
    if (order < 0 || order > kMaxVertices) {
        throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(order));
    }
    adj_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
    int twice = 0;
    for (auto row : adj_) twice += row.size();
    return twice / 2;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                                std::to_string(order()));
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph join(const Graph& left, const Graph& right) {
    const int a = left.order();
    const int b = right.order();
    Graph g(a + b);
    for (auto [u, v] : left.edges()) g.add_edge(u, v);
    for (auto [u, v] : right.edges()) g.add_edge(a + u, a + v);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph induced_subgraph(const Graph& g, VertexSet subset) {
    if (!subset.is_subset_of(g.vertices())) {
        throw std::out_of_range("vertex " + std::to_string((subset - g.vertices()).first()) +
                                " out of range for graph of order " + std::to_string(g.order()));
    }
    const std::vector<int> kept = subset.to_vector();
    Graph sub(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (g.adjacent(kept[i], kept[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& subset) {
    VertexSet s;
    for (int v : subset) {
        if (v < 0 || v >= g.order()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                                    std::to_string(g.order()));
        }
        s.insert(v);
    }
    return induced_subgraph(g, s);
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | g.neighbors(v);
        frontier = next - seen;
        seen = seen | next;
    }
    return seen == g.vertices();
}

std::vector<int> smallest_last_order(const Graph& g) {
    std::vector<int> removed;
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        int pick = remaining.first();
        for (int v : remaining) {
            if (g.degree_within(v, remaining) < g.degree_within(pick, remaining)) pick = v;
        }
        removed.push_back(pick);
        remaining.erase(pick);
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr int kBias = 63;

bool is_g6_byte(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw Graph6Error("empty graph6 input", 0);

    std::size_t pos = 0;
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= line.size()) throw Graph6Error("truncated graph6 data", i);
        const auto c = static_cast<unsigned char>(line[i]);
        if (!is_g6_byte(c)) throw Graph6Error("invalid graph6 byte " + std::to_string(c), i);
        return c - kBias;
    };

    long n = 0;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126) {
            throw Graph6Error("graph6 order exceeds 64 vertices", 0);
        }
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
        pos = 4;
        if (n > kMaxVertices) throw Graph6Error("graph6 order exceeds 64 vertices", 1);
    } else {
        const auto c = static_cast<unsigned char>(line[0]);
        if (!is_g6_byte(c)) throw Graph6Error("invalid graph6 header byte " + std::to_string(c), 0);
        n = c - kBias;
        pos = 1;
    }

    Graph g(static_cast<int>(n));
    const long bit_count = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bit_count + 5) / 6);
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int value = byte_at(pos + static_cast<std::size_t>(bit / 6));
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (body > 0) byte_at(pos + body - 1);
    if (line.size() > pos + body) throw Graph6Error("trailing bytes after graph6 data", pos + body);
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("short-form graph6 supports at most 62 vertices");
    std::string out(1, static_cast<char>(n + kBias));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw std::runtime_error("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return graphs;
}

// ------------------------------------------------------- canonical labels

namespace {

// Branch-and-bound search for the lexicographically smallest adjacency bit
// string (graph6 column order) over orders that list vertices by
// non-increasing degree.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        order_.reserve(static_cast<std::size_t>(n_));
        current_.assign(static_cast<std::size_t>(n_), 0);
        best_.assign(static_cast<std::size_t>(n_), ~std::uint64_t{0});
    }

    Graph run() {
        descend(0, VertexSet());
        Graph out(n_);
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if ((best_[j] >> (j - 1 - i)) & 1U) out.add_edge(i, j);
        return out;
    }

private:
    // Column j is encoded most-significant-first so that integer comparison
    // matches graph6 bit order within the column.
    void descend(int pos, VertexSet used) {
        if (found_) {
            for (int i = 0; i < pos; ++i) {
                if (current_[i] < best_[i]) break;
                if (current_[i] > best_[i]) return;
            }
        }
        if (pos == n_) {
            if (!found_ || current_ < best_) {
                best_ = current_;
                found_ = true;
            }
            return;
        }
        int wanted = -1;
        for (int v : g_.vertices() - used) wanted = std::max(wanted, g_.degree(v));
        for (int v : g_.vertices() - used) {
            if (g_.degree(v) != wanted) continue;
            std::uint64_t column = 0;
            for (int i = 0; i < pos; ++i) column = (column << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
            current_[pos] = column;
            order_.push_back(v);
            descend(pos + 1, used.with(v));
            order_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    bool found_ = false;
    std::vector<int> order_;
    std::vector<std::uint64_t> current_;
    std::vector<std::uint64_t> best_;
};

}  // namespace

std::string canonical_graph6(const Graph& g) { return write_graph6(CanonicalSearch(g).run()); }

std::vector<Graph> all_graphs(int n) {
    if (n < 0) throw std::invalid_argument("negative order");
    std::set<std::string> layer{write_graph6(Graph(0))};
    for (int m = 1; m <= n; ++m) {
        std::set<std::string> next;
        for (const auto& code : layer) {
            const Graph base = parse_graph6(code);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Graph g(m);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int u : VertexSet(mask)) g.add_edge(u, m - 1);
                next.insert(canonical_graph6(g));
            }
        }
        layer = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(layer.size());
    for (const auto& code : layer) out.push_back(parse_graph6(code));
    return out;
}

}  // namespace gfree
