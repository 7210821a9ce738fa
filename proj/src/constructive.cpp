#include "gfree/constructive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gfree {

namespace {

// b-matching of vertices in `within` to colours, every colour usable
// `capacity` times. Kuhn-style augmenting paths over colour nodes.
class CapacityMatching {
public:
    CapacityMatching(const std::vector<std::vector<int>>& lists, VertexSet within, int capacity)
        : lists_(lists), within_(within), capacity_(capacity), match_(lists.size(), -1) {}

    // Colour per vertex of `within` (-1 elsewhere), or the deficient set.
    std::variant<std::vector<int>, VertexSet> solve() {
        for (int u : within_) {
            seen_colors_.clear();
            reached_ = VertexSet();
            if (!augment(u)) return reached_;
        }
        return match_;
    }

private:
    bool augment(int u) {
        reached_.insert(u);
        for (int c : lists_[u]) {
            if (seen_colors_.contains(c)) continue;
            seen_colors_.insert(c);
            auto& holders = holders_[c];
            if (static_cast<int>(holders.size()) < capacity_) {
                holders.push_back(u);
                match_[u] = c;
                return true;
            }
            for (auto& w : holders) {
                if (augment(w)) {
                    w = u;
                    match_[u] = c;
                    return true;
                }
            }
        }
        return false;
    }

    const std::vector<std::vector<int>>& lists_;
    VertexSet within_;
    int capacity_;
    std::vector<int> match_;
    std::map<int, std::vector<int>> holders_;
    std::set<int> seen_colors_;
    VertexSet reached_;
};

}  // namespace

HallOutcome hall_color_or_violator(const Graph& h, const ListAssignment& lists, int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be at least 1");
    if (lists.order() != h.order()) throw std::invalid_argument("list assignment does not cover the graph");
    auto result = CapacityMatching(lists.lists(), h.vertices(), delta).solve();
    if (auto* colors = std::get_if<std::vector<int>>(&result)) return HallOutcome(Coloring(*colors));
    return HallOutcome(std::get<VertexSet>(result));
}

std::optional<Coloring> greedy_list_color(const Graph& h, const Pattern& p, const ListAssignment& lists,
                                          const std::vector<int>& order) {
    const int n = h.order();
    if (lists.order() != n) throw std::invalid_argument("list assignment does not cover the graph");
    std::vector<bool> listed(static_cast<std::size_t>(n), false);
    for (int v : order) {
        if (v < 0 || v >= n || listed[v]) throw std::invalid_argument("order is not a permutation of the vertices");
        listed[v] = true;
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order is not a permutation of the vertices");

    FreeSetCache cache(h, p);
    std::map<int, VertexSet> classes;
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    for (int v : order) {
        for (int c : lists.list(v)) {
            VertexSet& cls = classes[c];
            if (cache.can_add(cls, v)) {
                cls.insert(v);
                colors[v] = c;
                break;
            }
        }
        if (colors[v] < 0) return std::nullopt;
    }
    return Coloring(std::move(colors));
}

std::optional<Coloring> greedy_list_color(const Graph& h, const Pattern& p, const ListAssignment& lists) {
    return greedy_list_color(h, p, lists, smallest_last_order(h));
}

Coloring color_ceil_n_over_delta(const Graph& h, const Pattern& p, const ListAssignment& lists) {
    const int n = h.order();
    const int delta = p.min_degree();
    if (lists.order() != n) throw std::invalid_argument("list assignment does not cover the graph");
    const auto needed = static_cast<std::size_t>(ceil_div(n, delta));
    if (n > 0 && lists.min_list_size() < needed) {
        throw std::invalid_argument("every list needs at least ceil(n/delta) = " + std::to_string(needed) +
                                    " colours");
    }

    std::vector<std::vector<int>> working = lists.lists();
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    VertexSet remaining = h.vertices();

    while (remaining.size() >= delta) {
        std::map<int, std::vector<int>> holders;
        for (int v : remaining)
            for (int c : working[v]) holders[c].push_back(v);
        int best = -1;
        std::size_t best_count = 0;
        for (const auto& [c, vs] : holders) {
            if (vs.size() > best_count) {
                best = c;
                best_count = vs.size();
            }
        }
        if (best_count < static_cast<std::size_t>(delta)) break;
        for (int i = 0; i < delta; ++i) {
            const int v = holders[best][i];
            colors[v] = best;
            remaining.erase(v);
        }
        for (int v : remaining) std::erase(working[v], best);
    }

    auto rest = CapacityMatching(working, remaining, delta).solve();
    const auto* matched = std::get_if<std::vector<int>>(&rest);
    if (matched == nullptr) throw std::logic_error("Hall condition failed in the ceil(n/delta) regime");
    for (int v : remaining) colors[v] = (*matched)[v];
    return Coloring(std::move(colors));
}

}  // namespace gfree
