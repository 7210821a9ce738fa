// Writes every non-isomorphic graph on the given vertex counts as graph6,
// one per line, in canonical form.
#include <iostream>

#include <CLI11.hpp>

#include "gfree/graph.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Enumerate small graphs up to isomorphism in graph6"};
    int min_order = 1;
    int max_order = 7;
    app.add_option("--min", min_order, "smallest vertex count")->check(CLI::Range(0, 9));
    app.add_option("--max", max_order, "largest vertex count")->check(CLI::Range(0, 9));
    CLI11_PARSE(app, argc, argv);

    for (int n = min_order; n <= max_order; ++n) {
        const auto graphs = gfree::all_graphs(n);
        for (const auto& g : graphs) std::cout << gfree::write_graph6(g) << '\n';
        std::cerr << n << " vertices: " << graphs.size() << " graphs\n";
    }
    return 0;
}
