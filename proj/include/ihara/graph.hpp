#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ihara {

// Finite simple undirected graph under the standing hypotheses: connected,
// minimum degree >= 2, and not a cycle graph. Vertex labels are opaque
// strings mapped to dense indices 0..n-1 in first-appearance order; all
// matrix code works on the dense indices.
struct Graph {
    std::vector<std::string> vertex_labels;          // index -> label
    std::vector<std::pair<int, int>> edges;          // dense index pairs, input order
    std::vector<int> degree;                         // index -> degree
    int duplicate_records = 0;                       // deduplicated edge-list lines

    int n() const { return static_cast<int>(vertex_labels.size()); }
    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    int index_of(const std::string& label) const;    // -1 if absent
};

// d = min over edges of d_u + d_v, D = max over edges of d_u + d_v.
struct DegreeStats {
    int d = 0;
    int D = 0;
};

struct HypothesisCheck {
    std::string hypothesis;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<HypothesisCheck> checks;
    bool pass = false;  // all hypotheses hold
};

// Edge-list text: one "u v" record per line, '#' starts a comment line,
// blank lines ignored. Duplicate records are deduplicated (counted, reported
// by validate); self-loops and malformed lines are errors.
Graph parse_edge_list(const std::string& text);

std::string to_edge_list(const Graph& g);

ValidationReport validate(const Graph& g);

// Throws DomainError unless validate(g) passes.
void require_valid(const Graph& g);

DegreeStats degree_stats(const Graph& g);

// Fixed small graphs used throughout the test corpus and the CLI demo.
Graph make_complete_graph(int n);
Graph make_complete_bipartite(int a, int b);
// The five-reflector billiard graph: 4-cycle 1-2-4-3 plus hub vertex 5.
Graph make_billiard_graph();

}  // namespace ihara
