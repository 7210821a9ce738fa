#include "gfree/exact.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gfree {

// ------------------------------------------------------------- Coloring

std::vector<int> Coloring::palette() const {
    std::vector<int> out = colors_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet Coloring::class_of(int color) const {
    VertexSet s;
    for (int v = 0; v < order(); ++v)
        if (colors_[v] == color) s.insert(v);
    return s;
}

std::vector<VertexSet> Coloring::classes() const {
    std::vector<VertexSet> out;
    for (int c : palette()) out.push_back(class_of(c));
    return out;
}

std::vector<int> Coloring::class_sizes() const {
    std::vector<int> sizes;
    for (auto cls : classes()) sizes.push_back(cls.size());
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

bool is_valid_coloring(const Graph& h, const Pattern& p, const Coloring& c) {
    if (c.order() != h.order()) return false;
    for (auto cls : c.classes())
        if (!is_free(h, cls, p)) return false;
    return true;
}

// ------------------------------------------------------- ListAssignment

ListAssignment::ListAssignment(std::vector<std::vector<int>> lists) : lists_(std::move(lists)) {
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        auto& l = lists_[v];
        if (l.empty()) throw std::invalid_argument("empty colour list at vertex " + std::to_string(v));
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.front() < 0) throw std::invalid_argument("negative colour at vertex " + std::to_string(v));
    }
}

ListAssignment ListAssignment::uniform(int n, int k) {
    std::vector<int> all(static_cast<std::size_t>(k));
    std::iota(all.begin(), all.end(), 0);
    return ListAssignment(std::vector<std::vector<int>>(static_cast<std::size_t>(n), all));
}

bool ListAssignment::allows(int v, int color) const {
    return std::binary_search(lists_[v].begin(), lists_[v].end(), color);
}

std::size_t ListAssignment::min_list_size() const {
    std::size_t best = lists_.empty() ? 0 : lists_[0].size();
    for (const auto& l : lists_) best = std::min(best, l.size());
    return best;
}

std::vector<int> ListAssignment::colors_of(VertexSet s) const {
    std::set<int> out;
    for (int v : s) out.insert(lists_[v].begin(), lists_[v].end());
    return {out.begin(), out.end()};
}

std::vector<int> ListAssignment::universe() const {
    return colors_of(VertexSet::range(order()));
}

std::string ListAssignment::to_string() const {
    std::string out;
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        if (v > 0) out += ';';
        for (std::size_t i = 0; i < lists_[v].size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(lists_[v][i]);
        }
    }
    return out;
}

ListAssignment ListAssignment::parse(const std::string& text) {
    std::vector<std::vector<int>> lists;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<int> list;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                throw std::invalid_argument("bad colour '" + cell + "' in list assignment");
            }
            list.push_back(value);
        }
        lists.push_back(std::move(list));
    }
    return ListAssignment(std::move(lists));
}

bool is_valid_list_coloring(const Graph& h, const Pattern& p, const ListAssignment& lists, const Coloring& c) {
    if (lists.order() != h.order() || c.order() != h.order()) return false;
    for (int v = 0; v < h.order(); ++v)
        if (!lists.allows(v, c.color(v))) return false;
    return is_valid_coloring(h, p, c);
}

// ------------------------------------------------------ k-colourability

namespace {

class NodeCounter {
public:
    explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}
    void tick() {
        if (++nodes_ > limit_) throw BudgetExceeded("node budget of " + std::to_string(limit_) + " exceeded");
    }

private:
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
};

std::vector<int> by_degree_desc(const Graph& h, VertexSet within) {
    std::vector<int> order = within.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return h.degree_within(a, within) > h.degree_within(b, within);
    });
    return order;
}

// Partition search: each vertex joins an existing class or, if fewer than
// k are open, a fresh one. Fresh classes are interchangeable, so at most one
// is tried per vertex.
class PartitionSearch {
public:
    PartitionSearch(FreeSetCache& cache, int k, NodeCounter& counter)
        : cache_(cache), k_(k), counter_(counter), order_(by_degree_desc(cache.host(), cache.host().vertices())),
          colors_(static_cast<std::size_t>(cache.host().order()), -1) {}

    std::optional<Coloring> run() {
        if (place(0)) return Coloring(colors_);
        return std::nullopt;
    }

private:
    bool place(std::size_t idx) {
        if (idx == order_.size()) return true;
        counter_.tick();
        const int v = order_[idx];
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            if (!cache_.can_add(classes_[i], v)) continue;
            classes_[i].insert(v);
            colors_[v] = static_cast<int>(i);
            if (place(idx + 1)) return true;
            classes_[i].erase(v);
        }
        if (static_cast<int>(classes_.size()) < k_) {
            classes_.push_back(VertexSet::single(v));
            colors_[v] = static_cast<int>(classes_.size()) - 1;
            if (place(idx + 1)) return true;
            classes_.pop_back();
        }
        colors_[v] = -1;
        return false;
    }

    FreeSetCache& cache_;
    int k_;
    NodeCounter& counter_;
    std::vector<int> order_;
    std::vector<VertexSet> classes_;
    std::vector<int> colors_;
};

}  // namespace

std::optional<Coloring> find_k_coloring(const Graph& h, const Pattern& p, int k, const Budget& budget) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    FreeSetCache cache(h, p);
    NodeCounter counter(budget.max_nodes);
    return PartitionSearch(cache, k, counter).run();
}

int chromatic_number(const Graph& h, const Pattern& p, const Budget& budget) {
    const int n = h.order();
    if (n == 0) return 0;
    FreeSetCache cache(h, p);
    if (cache.is_free(h.vertices())) return 1;
    const int lower = std::max(2, ceil_div(n, max_free_induced_set(h, p).size()));
    for (int k = lower;; ++k) {
        NodeCounter counter(budget.max_nodes);
        if (PartitionSearch(cache, k, counter).run()) return k;
    }
}

// ---------------------------------------------------- list colourability

namespace {

// Colours the vertices of `within` from their lists. `lists[v]` is only
// read for v in `within`.
class ListSearch {
public:
    ListSearch(FreeSetCache& cache, VertexSet within, const std::vector<std::vector<int>>& lists,
               NodeCounter& counter)
        : cache_(cache), lists_(lists), counter_(counter),
          colors_(static_cast<std::size_t>(cache.host().order()), -1) {
        const Graph& h = cache.host();
        order_ = within.to_vector();
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (lists[a].size() != lists[b].size()) return lists[a].size() < lists[b].size();
            return h.degree_within(a, within) > h.degree_within(b, within);
        });
        int top = 0;
        for (int v : order_)
            for (int c : lists[v]) top = std::max(top, c + 1);
        classes_.assign(static_cast<std::size_t>(top), VertexSet());
    }

    bool run() { return place(0); }
    const std::vector<int>& colors() const { return colors_; }

private:
    bool place(std::size_t idx) {
        if (idx == order_.size()) return true;
        counter_.tick();
        const int v = order_[idx];
        for (int c : lists_[v]) {
            if (!cache_.can_add(classes_[c], v)) continue;
            classes_[c].insert(v);
            colors_[v] = c;
            if (place(idx + 1)) return true;
            classes_[c].erase(v);
        }
        colors_[v] = -1;
        return false;
    }

    FreeSetCache& cache_;
    const std::vector<std::vector<int>>& lists_;
    NodeCounter& counter_;
    std::vector<int> order_;
    std::vector<VertexSet> classes_;
    std::vector<int> colors_;
};

}  // namespace

std::optional<Coloring> find_list_coloring(const Graph& h, const Pattern& p, const ListAssignment& lists,
                                           const Budget& budget) {
    if (lists.order() != h.order()) throw std::invalid_argument("list assignment does not cover the graph");
    FreeSetCache cache(h, p);
    NodeCounter counter(budget.max_nodes);
    ListSearch search(cache, h.vertices(), lists.lists(), counter);
    if (search.run()) return Coloring(search.colors());
    return std::nullopt;
}

// ----------------------------------------------------------- choosability

bool alon_tarsi_certifies(const Graph& h, VertexSet within, int k) {
    if (k < 1 || k > 15 || within.size() > 16) return false;
    // Exponent vectors packed four bits per vertex, in `within` order.
    std::vector<int> slot(static_cast<std::size_t>(h.order()), -1);
    int next = 0;
    for (int v : within) slot[v] = next++;
    std::unordered_map<std::uint64_t, std::int64_t> terms{{0, 1}};
    std::unordered_map<std::uint64_t, std::int64_t> grown;
    const auto bump = [k](std::uint64_t t, int s) -> std::optional<std::uint64_t> {
        if (static_cast<int>((t >> (4 * s)) & 0xF) + 1 >= k) return std::nullopt;
        return t + (std::uint64_t{1} << (4 * s));
    };
    for (int u : within) {
        for (int w : h.neighbors(u) & within) {
            if (w < u) continue;
            grown.clear();
            for (const auto& [t, c] : terms) {
                if (auto a = bump(t, slot[u])) grown[*a] += c;
                if (auto b = bump(t, slot[w])) grown[*b] -= c;
            }
            std::erase_if(grown, [](const auto& kv) { return kv.second == 0; });
            terms.swap(grown);
            if (terms.empty()) return false;
        }
    }
    return true;
}

namespace {

bool is_proper_colouring_pattern(const Pattern& p) {
    return p.is_family() ? p.regularity() == 1 : p.graph().order() == 2;
}

// Enumerates k-list assignments up to renaming of colours. An assignment is
// a multiset of colour columns (the vertex set holding each colour) with
// every vertex in exactly k columns. Columns are ordered by (lowest vertex,
// bits); emitting them in non-decreasing order, always covering the lowest
// vertex still short of k colours, yields each multiset exactly once.
//
// Why the column filter is sound: suppose every H[mask - v] is k-choosable
// and L is bad on H[mask]. Colour H[mask - v] from L; v fits in none of its
// colours, so for each c in L(v) the class of c plus v holds a copy through
// v, and that class lies inside column c. Hence every vertex of every
// column of L is on a copy inside that column.
class ChoosabilityCheck {
public:
    ChoosabilityCheck(const Graph& h, const Pattern& p, int k, const Budget& budget,
                      const ChoosabilityOptions& options)
        : cache_(h, p), k_(k), budget_(budget), options_(options), delta_(p.min_degree()),
          alon_tarsi_(options.alon_tarsi && is_proper_colouring_pattern(p)) {}

    ChoosabilityVerdict run() {
        ChoosabilityVerdict verdict;
        auto bad = solve(cache_.host().vertices());
        verdict.assignments_checked = assignments_;
        if (!bad) {
            verdict.choosable = true;
            return verdict;
        }
        // Vertices outside the failing subgraph get private colours.
        int next = 0;
        for (const auto& l : *bad)
            for (int c : l) next = std::max(next, c + 1);
        for (auto& l : *bad) {
            if (!l.empty()) continue;
            for (int i = 0; i < k_; ++i) l.push_back(next++);
        }
        verdict.counterexample = ListAssignment(std::move(*bad));
        return verdict;
    }

private:
    using Lists = std::vector<std::vector<int>>;

    // nullopt when H[mask] is k-choosable, else a bad assignment on mask.
    std::optional<Lists> solve(VertexSet mask) {
        if (mask.empty() || good_.contains(mask.bits())) return std::nullopt;
        const Graph& h = cache_.host();

        if (options_.peel_low_degree) {
            for (int v : mask) {
                if (h.degree_within(v, mask) < delta_ * k_) {
                    auto bad = solve(mask.without(v));
                    if (!bad) good_.insert(mask.bits());
                    return bad;
                }
            }
        }
        if (alon_tarsi_ && alon_tarsi_certifies(h, mask, k_)) {
            good_.insert(mask.bits());
            return std::nullopt;
        }
        if (options_.covered_colour_sets_only) {
            for (int v : mask) {
                if (auto bad = solve(mask.without(v))) return bad;
            }
        }

        auto bad = enumerate(mask);
        if (!bad) good_.insert(mask.bits());
        return bad;
    }

    bool covered(VertexSet t) {
        if (cache_.is_free(t)) return false;
        for (int v : t)
            if (!has_copy_through(cache_.host(), t, v, cache_.pattern())) return false;
        return true;
    }

    std::optional<Lists> enumerate(VertexSet mask) {
        const Graph& h = cache_.host();
        std::vector<VertexSet> all;
        const std::uint64_t full = mask.bits();
        for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
            const VertexSet t(sub);
            if (options_.covered_colour_sets_only && !covered(t)) continue;
            all.push_back(t);
        }
        std::sort(all.begin(), all.end(), [](VertexSet a, VertexSet b) {
            if (a.first() != b.first()) return a.first() < b.first();
            return a.bits() < b.bits();
        });
        columns_ = std::move(all);
        group_begin_.assign(static_cast<std::size_t>(kMaxVertices), 0);
        group_end_.assign(static_cast<std::size_t>(kMaxVertices), 0);
        for (std::size_t i = columns_.size(); i-- > 0;) group_begin_[columns_[i].first()] = i;
        for (std::size_t i = 0; i < columns_.size(); ++i) group_end_[columns_[i].first()] = i + 1;

        mask_ = mask;
        deficit_.assign(static_cast<std::size_t>(kMaxVertices), 0);
        for (int v : mask) deficit_[v] = k_;
        color_order_ = by_degree_desc(h, mask);
        chosen_.clear();
        vertex_colors_.assign(static_cast<std::size_t>(kMaxVertices), {});
        class_of_color_.assign(static_cast<std::size_t>(k_ * mask.size()), VertexSet());
        found_.reset();
        extend(0);
        return std::move(found_);
    }

    void extend(std::size_t from) {
        int u = -1;
        for (int v : mask_) {
            if (deficit_[v] > 0) {
                u = v;
                break;
            }
        }
        if (u < 0) {
            check_assignment();
            return;
        }
        const std::size_t begin = std::max(from, group_begin_[u]);
        for (std::size_t j = begin; j < group_end_[u] && !found_; ++j) {
            const VertexSet t = columns_[j];
            bool fits = true;
            for (int v : t) {
                if (deficit_[v] == 0) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            const int color = static_cast<int>(chosen_.size());
            for (int v : t) {
                --deficit_[v];
                vertex_colors_[v].push_back(color);
            }
            chosen_.push_back(t);
            extend(j);
            chosen_.pop_back();
            for (int v : t) {
                ++deficit_[v];
                vertex_colors_[v].pop_back();
            }
        }
    }

    void check_assignment() {
        if (++assignments_ > budget_.max_assignments) {
            throw BudgetExceeded("assignment budget of " + std::to_string(budget_.max_assignments) + " exceeded");
        }
        nodes_ = 0;
        if (colorable(0)) return;
        Lists lists(static_cast<std::size_t>(cache_.host().order()));
        for (int v : mask_) lists[v] = vertex_colors_[v];
        found_ = std::move(lists);
    }

    bool colorable(std::size_t idx) {
        if (idx == color_order_.size()) return true;
        if (++nodes_ > budget_.max_nodes) {
            throw BudgetExceeded("node budget of " + std::to_string(budget_.max_nodes) + " exceeded");
        }
        const int v = color_order_[idx];
        for (int c : vertex_colors_[v]) {
            VertexSet& cls = class_of_color_[c];
            if (!cache_.can_add(cls, v)) continue;
            cls.insert(v);
            const bool ok = colorable(idx + 1);
            cls.erase(v);
            if (ok) return true;
        }
        return false;
    }

    FreeSetCache cache_;
    int k_;
    Budget budget_;
    ChoosabilityOptions options_;
    int delta_;
    bool alon_tarsi_;
    std::unordered_set<std::uint64_t> good_;
    std::uint64_t assignments_ = 0;
    std::uint64_t nodes_ = 0;

    // Per-enumeration state.
    VertexSet mask_;
    std::vector<VertexSet> columns_;
    std::vector<std::size_t> group_begin_;
    std::vector<std::size_t> group_end_;
    std::vector<int> deficit_;
    std::vector<int> color_order_;
    std::vector<VertexSet> chosen_;
    std::vector<std::vector<int>> vertex_colors_;
    std::vector<VertexSet> class_of_color_;
    std::optional<Lists> found_;
};

}  // namespace

ChoosabilityVerdict check_choosable(const Graph& h, const Pattern& p, int k, const Budget& budget,
                                    const ChoosabilityOptions& options) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    return ChoosabilityCheck(h, p, k, budget, options).run();
}

int choice_number(const Graph& h, const Pattern& p, const Budget& budget) {
    const int n = h.order();
    if (n == 0) return 0;
    const int upper = ceil_div(n, p.min_degree());
    for (int k = chromatic_number(h, p, budget); k < upper; ++k) {
        if (check_choosable(h, p, k, budget).choosable) return k;
    }
    return upper;
}

}  // namespace gfree
