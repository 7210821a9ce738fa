#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfree/graph.hpp"

#ifndef GFREE_DATA_DIR
#error "GFREE_DATA_DIR must point at the data directory"
#endif

namespace support {

inline std::string data_path(const std::string& name) { return std::string(GFREE_DATA_DIR) + "/" + name; }

// Graphs from the networkx atlas export (independent of all_graphs), with
// min_n <= order <= max_n.
inline std::vector<gfree::Graph> atlas(int min_n, int max_n) {
    std::ifstream in(data_path("atlas1-7.g6"));
    if (!in) throw std::runtime_error("missing data/atlas1-7.g6");
    std::vector<gfree::Graph> out;
    for (auto& g : gfree::read_graph6_stream(in))
        if (g.order() >= min_n && g.order() <= max_n) out.push_back(std::move(g));
    return out;
}

inline gfree::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    gfree::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<std::vector<int>> random_lists(int n, int k, int universe, std::mt19937_64& rng) {
    std::vector<int> palette(static_cast<std::size_t>(universe));
    for (int c = 0; c < universe; ++c) palette[c] = c;
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    for (auto& l : lists) std::sample(palette.begin(), palette.end(), std::back_inserter(l), k, rng);
    return lists;
}

}  // namespace support
