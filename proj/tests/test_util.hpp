#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ihara/graph.hpp"

namespace ihara::testutil {

// Random graph satisfying the standing hypotheses: a Hamiltonian cycle on
// n vertices plus 1..4 extra chords. Connected and min-degree-2 by
// construction; any chord endpoint has degree >= 3.
inline Graph random_valid_graph(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_dist(4, 8);
    const int n = n_dist(rng);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(order[i], order[(i + 1) % n]);

    auto contains = [&](int u, int v) {
        for (auto& [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };

    std::uniform_int_distribution<int> chord_dist(1, 4);
    std::uniform_int_distribution<int> v_dist(0, n - 1);
    int chords = chord_dist(rng);
    int added = 0;
    for (int attempt = 0; attempt < 200 && added < chords; ++attempt) {
        int u = v_dist(rng), v = v_dist(rng);
        if (u == v || contains(u, v)) continue;
        edges.emplace_back(u, v);
        ++added;
    }
    if (added == 0) edges.emplace_back(order[0], order[n / 2]);  // n >= 4 so this is a chord

    std::shuffle(edges.begin(), edges.end(), rng);
    std::ostringstream text;
    for (auto& [u, v] : edges) text << 'v' << u << ' ' << 'v' << v << '\n';
    return parse_edge_list(text.str());
}

// The fixed suite: billiard, K4, K_{2,3} and `extra` random valid graphs.
inline std::vector<Graph> suite_graphs(int extra = 20, unsigned seed = 20240817) {
    std::vector<Graph> graphs{make_billiard_graph(), make_complete_graph(4),
                              make_complete_bipartite(2, 3)};
    std::mt19937 rng(seed);
    for (int i = 0; i < extra; ++i) graphs.push_back(random_valid_graph(rng));
    return graphs;
}

}  // namespace ihara::testutil
