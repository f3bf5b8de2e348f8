#pragma once

#include <cstdint>
#include <vector>

#include "ihara/graph.hpp"
#include "ihara/numeric.hpp"

namespace ihara {

// The 2m directed edge-orientations of a graph: symbols 0..m-1 are the edges
// in input order, symbol m+k is the inverse of symbol k. Symbol indices are
// 0-based; the paper's e^(k) is symbol k-1.
struct OrientedEdgeAlphabet {
    int m = 0;                       // undirected edge count
    std::vector<int> initial;        // symbol -> initial vertex i(e)
    std::vector<int> terminal;       // symbol -> terminal vertex t(e)

    int size() const { return 2 * m; }
    int inverse(int symbol) const { return symbol < m ? symbol + m : symbol - m; }
};

// Adjacency matrix T of the oriented line graph: T[e][f] = 1 iff
// t(e) = i(f) and i(e) != t(f). This is the directed non-backtracking
// (Hashimoto) operator; entry (e, e^-1) is always 0.
struct HashimotoMatrix {
    int size = 0;
    std::vector<uint8_t> entries;    // row-major 0/1

    uint8_t at(int e, int f) const { return entries[static_cast<size_t>(e) * size + f]; }
    long ones_count() const;
    long row_sum(int e) const;
    long col_sum(int f) const;
    bool is_symmetric() const;
};

OrientedEdgeAlphabet build_alphabet(const Graph& g);

HashimotoMatrix build_hashimoto(const OrientedEdgeAlphabet& alph);

// 2 * sum over edges of (d_u + d_v - 2): the degree sum (in + out over all
// vertices) of the oriented line graph, i.e. twice its arc count.
long lemma1_edge_count(const Graph& g);

// tr(T^k) for k = 1..K by exact integer matrix powers.
std::vector<Int> trace_powers(const HashimotoMatrix& T, int K);

// Independent oracle for tr(T^k): DFS enumeration of closed length-k walks
// in the oriented line graph, counted with starting point. The guard bounds
// the number of DFS node expansions.
long count_closed_walks_bruteforce(const OrientedEdgeAlphabet& alph, int k,
                                   long expansion_guard = 50'000'000);

// Strong connectivity of the Hashimoto digraph via reachability closure.
bool is_irreducible(const HashimotoMatrix& T);

}  // namespace ihara
