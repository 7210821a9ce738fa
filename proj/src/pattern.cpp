#include "gfree/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gfree {

Pattern Pattern::single(Graph g) {
    if (g.size() == 0) throw std::invalid_argument("pattern graph must have at least one edge");
    if (!is_connected(g)) throw std::invalid_argument("pattern graph must be connected");
    Pattern p;
    p.delta_ = gfree::min_degree(g);
    p.literal_ = "g6:" + write_graph6(g);
    p.graph_ = std::move(g);
    return p;
}

Pattern Pattern::all_regular(int d) {
    if (d < 1) throw std::invalid_argument("regularity must be at least 1");
    Pattern p;
    p.family_ = true;
    p.delta_ = d;
    p.literal_ = "R:" + std::to_string(d);
    return p;
}

std::string Pattern::literal() const { return literal_; }

namespace {

int parse_count(std::string_view text, std::string_view literal) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("bad pattern literal '" + std::string(literal) + "'");
    }
    return value;
}

}  // namespace

Pattern parse_pattern(std::string_view literal) {
    if (literal.starts_with("g6:")) return Pattern::single(parse_graph6(literal.substr(3)));
    if (literal.starts_with("R:")) return Pattern::all_regular(parse_count(literal.substr(2), literal));
    if (literal.size() < 2) throw std::invalid_argument("bad pattern literal '" + std::string(literal) + "'");

    const int n = parse_count(literal.substr(1), literal);
    if (n > kMaxVertices) throw std::invalid_argument("pattern too large: " + std::string(literal));
    Pattern p = [&] {
        switch (literal[0]) {
            case 'K':
                if (n < 2) throw std::invalid_argument("K<n> needs n >= 2");
                return Pattern::single(complete_graph(n));
            case 'C':
                if (n < 3) throw std::invalid_argument("C<n> needs n >= 3");
                return Pattern::single(cycle_graph(n));
            case 'P':
                if (n < 2) throw std::invalid_argument("P<n> needs n >= 2");
                return Pattern::single(path_graph(n));
            default:
                throw std::invalid_argument("bad pattern literal '" + std::string(literal) + "'");
        }
    }();
    p.literal_ = std::string(literal.substr(0, 1)) + std::to_string(n);
    return p;
}

// ------------------------------------------------------ single-graph copies

namespace {

// Injective backtracking from pattern vertices into host vertices. Pattern
// vertices are visited in BFS order from the root so every vertex after the
// first has an already-placed neighbour.
class CopyFinder {
public:
    CopyFinder(const Graph& host, VertexSet within, const Graph& pattern, int root)
        : host_(host), within_(within), pattern_(pattern) {
        const int k = pattern.order();
        order_.reserve(static_cast<std::size_t>(k));
        VertexSet placed = VertexSet::single(root);
        order_.push_back(root);
        for (std::size_t head = 0; head < order_.size(); ++head) {
            std::vector<int> next = (pattern.neighbors(order_[head]) - placed).to_vector();
            std::stable_sort(next.begin(), next.end(),
                             [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
            for (int v : next) {
                placed.insert(v);
                order_.push_back(v);
            }
        }
        position_.assign(static_cast<std::size_t>(k), -1);
        for (int i = 0; i < k; ++i) position_[order_[i]] = i;
        back_.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            for (int u : pattern.neighbors(order_[i])) {
                if (position_[u] < i) back_[i].push_back(position_[u]);
            }
        }
        image_.assign(static_cast<std::size_t>(k), -1);
    }

    // Tries to map the root onto each vertex of `roots`.
    bool find(VertexSet roots) {
        for (int r : roots) {
            if (host_.degree_within(r, within_) < pattern_.degree(order_[0])) continue;
            image_[0] = r;
            if (extend(1, VertexSet::single(r))) return true;
        }
        return false;
    }

private:
    bool extend(int pos, VertexSet used) {
        if (pos == static_cast<int>(order_.size())) return true;
        VertexSet candidates = within_ - used;
        for (int b : back_[pos]) candidates = candidates & host_.neighbors(image_[b]);
        const int need = pattern_.degree(order_[pos]);
        for (int c : candidates) {
            if (host_.degree_within(c, within_) < need) continue;
            image_[pos] = c;
            if (extend(pos + 1, used.with(c))) return true;
        }
        return false;
    }

    const Graph& host_;
    VertexSet within_;
    const Graph& pattern_;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<std::vector<int>> back_;
    std::vector<int> image_;
};

int max_degree_vertex(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

// ------------------------------------------------- d-regular subgraphs

VertexSet core(const Graph& h, VertexSet within, int d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : within) {
            if (h.degree_within(v, within) < d) {
                within.erase(v);
                changed = true;
            }
        }
    }
    return within;
}

bool has_cycle(const Graph& h, VertexSet within) {
    // A forest has exactly |V| - components edges.
    int edges = 0;
    for (int v : within) edges += h.degree_within(v, within);
    edges /= 2;
    int components = 0;
    VertexSet left = within;
    while (!left.empty()) {
        ++components;
        VertexSet seen = VertexSet::single(left.first());
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next = next | (h.neighbors(v) & within);
            frontier = next - seen;
            seen = seen | next;
        }
        left = left - seen;
    }
    return edges > within.size() - components;
}

bool on_cycle(const Graph& h, VertexSet within, int anchor) {
    const VertexSet rest = within.without(anchor);
    const VertexSet nbrs = h.neighbors(anchor) & rest;
    VertexSet left = nbrs;
    while (!left.empty()) {
        VertexSet seen = VertexSet::single(left.first());
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next = next | (h.neighbors(v) & rest);
            frontier = next - seen;
            seen = seen | next;
        }
        if ((seen & nbrs).size() >= 2) return true;
        left = left - seen;
    }
    return false;
}

// Edge-selection search for a non-empty subgraph of H[within] in which every
// used vertex has degree exactly d. Vertices are settled one at a time; a
// settled vertex ends with selected degree 0 or d.
class RegularSearch {
public:
    RegularSearch(const Graph& h, VertexSet within, int d, int anchor)
        : h_(h), d_(d), anchor_(anchor) {
        order_ = within.to_vector();
        if (anchor >= 0) {
            std::erase(order_, anchor);
            order_.insert(order_.begin(), anchor);
        }
        degree_.assign(static_cast<std::size_t>(kMaxVertices), 0);
    }

    bool run() { return settle(0, VertexSet(), false); }

private:
    bool settle(std::size_t pos, VertexSet settled, bool nonempty) {
        if (pos == order_.size()) return nonempty;
        const int u = order_[pos];
        const int have = degree_[u];
        const VertexSet settled_now = settled.with(u);
        VertexSet later;
        for (std::size_t i = pos + 1; i < order_.size(); ++i) {
            const int w = order_[i];
            if (h_.adjacent(u, w) && degree_[w] < d_) later.insert(w);
        }
        if (have == 0 && u != anchor_) {
            if (settle(pos + 1, settled_now, nonempty)) return true;
        }
        const int need = d_ - have;
        if (need < 0 || later.size() < need) return false;
        return choose(later.to_vector(), 0, need, pos, settled_now);
    }

    bool choose(const std::vector<int>& pool, std::size_t from, int need, std::size_t pos, VertexSet settled) {
        if (need == 0) return settle(pos + 1, settled, true);
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= pool.size(); ++i) {
            const int w = pool[i];
            ++degree_[w];
            const bool ok = choose(pool, i + 1, need - 1, pos, settled);
            --degree_[w];
            if (ok) return true;
        }
        return false;
    }

    const Graph& h_;
    int d_;
    int anchor_;
    std::vector<int> order_;
    std::vector<int> degree_;
};

bool regular_copy(const Graph& h, VertexSet within, int d, int anchor) {
    switch (d) {
        case 1:
            if (anchor >= 0) return !(h.neighbors(anchor) & within).empty();
            for (int v : within)
                if (!(h.neighbors(v) & within).empty()) return true;
            return false;
        case 2:
            return anchor >= 0 ? on_cycle(h, within, anchor) : has_cycle(h, within);
        default: {
            const VertexSet c = core(h, within, d);
            if (c.empty() || (anchor >= 0 && !c.contains(anchor))) return false;
            return RegularSearch(h, c, d, anchor).run();
        }
    }
}

}  // namespace

bool is_free(const Graph& h, VertexSet within, const Pattern& p) {
    if (within.size() <= p.min_degree()) return true;
    if (p.is_family()) return !regular_copy(h, within, p.regularity(), -1);
    const Graph& g = p.graph();
    if (within.size() < g.order()) return true;
    CopyFinder finder(h, within, g, max_degree_vertex(g));
    return !finder.find(within);
}

bool has_copy_through(const Graph& h, VertexSet within, int anchor, const Pattern& p) {
    if (within.size() <= p.min_degree()) return false;
    if (h.degree_within(anchor, within) < p.min_degree()) return false;
    if (p.is_family()) return regular_copy(h, within, p.regularity(), anchor);
    const Graph& g = p.graph();
    if (within.size() < g.order()) return false;
    for (int root = 0; root < g.order(); ++root) {
        CopyFinder finder(h, within, g, root);
        if (finder.find(VertexSet::single(anchor))) return true;
    }
    return false;
}

VertexSet max_free_induced_set(const Graph& h, const Pattern& p) {
    const int n = h.order();
    if (is_free(h, p)) return h.vertices();
    for (int size = n - 1; size >= 1; --size) {
        // Lexicographic combinations of {0..n-1}.
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            VertexSet s;
            for (int v : pick) s.insert(v);
            if (is_free(h, s, p)) return s;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return VertexSet();
}

// ---------------------------------------------------------------- cache

namespace {
constexpr int kTableLimit = 22;
}

FreeSetCache::FreeSetCache(const Graph& h, const Pattern& p)
    : host_(h), pattern_(p) {
    if (h.order() <= kTableLimit) table_.assign(std::size_t{1} << h.order(), -1);
}

bool FreeSetCache::is_free(VertexSet s) {
    if (s.size() <= pattern_.min_degree()) return true;
    if (table_.empty()) return gfree::is_free(host_, s, pattern_);
    auto& slot = table_[s.bits()];
    if (slot < 0) slot = gfree::is_free(host_, s, pattern_) ? 1 : 0;
    return slot == 1;
}

bool FreeSetCache::can_add(VertexSet cls, int v) {
    const VertexSet grown = cls.with(v);
    if (grown.size() <= pattern_.min_degree()) return true;
    if (table_.empty()) return !has_copy_through(host_, grown, v, pattern_);
    auto& slot = table_[grown.bits()];
    if (slot < 0) slot = has_copy_through(host_, grown, v, pattern_) ? 0 : 1;
    return slot == 1;
}

}  // namespace gfree
