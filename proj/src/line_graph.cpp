#include "ihara/line_graph.hpp"

#include "ihara/errors.hpp"

namespace ihara {

long HashimotoMatrix::ones_count() const {
    long c = 0;
    for (uint8_t v : entries) c += v;
    return c;
}

long HashimotoMatrix::row_sum(int e) const {
    long c = 0;
    for (int f = 0; f < size; ++f) c += at(e, f);
    return c;
}

long HashimotoMatrix::col_sum(int f) const {
    long c = 0;
    for (int e = 0; e < size; ++e) c += at(e, f);
    return c;
}

bool HashimotoMatrix::is_symmetric() const {
    for (int e = 0; e < size; ++e)
        for (int f = e + 1; f < size; ++f)
            if (at(e, f) != at(f, e)) return false;
    return true;
}

OrientedEdgeAlphabet build_alphabet(const Graph& g) {
    OrientedEdgeAlphabet a;
    a.m = g.m();
    a.initial.resize(2 * a.m);
    a.terminal.resize(2 * a.m);
    for (int k = 0; k < a.m; ++k) {
        const auto& [u, v] = g.edges[k];
        a.initial[k] = u;
        a.terminal[k] = v;
        a.initial[a.m + k] = v;
        a.terminal[a.m + k] = u;
    }
    return a;
}

HashimotoMatrix build_hashimoto(const OrientedEdgeAlphabet& alph) {
    HashimotoMatrix T;
    T.size = alph.size();
    T.entries.assign(static_cast<size_t>(T.size) * T.size, 0);
    for (int e = 0; e < T.size; ++e) {
        for (int f = 0; f < T.size; ++f) {
            // (u,v) -> (v,w) with u != w; u = w is exactly f = e^-1.
            if (alph.terminal[e] == alph.initial[f] && alph.initial[e] != alph.terminal[f]) {
                T.entries[static_cast<size_t>(e) * T.size + f] = 1;
            }
        }
    }
    return T;
}

long lemma1_edge_count(const Graph& g) {
    long sum = 0;
    for (const auto& [u, v] : g.edges) sum += g.degree[u] + g.degree[v] - 2;
    return 2 * sum;
}

std::vector<Int> trace_powers(const HashimotoMatrix& T, int K) {
    if (K < 1) throw DomainError("trace_powers: K must be >= 1");
    const int n = T.size;
    auto trace = [n](const std::vector<Int>& a) {
        Int t(0);
        for (int i = 0; i < n; ++i) t += a[static_cast<size_t>(i) * n + i];
        return t;
    };

    // power = T^k, built by exact multiplication with the 0/1 base matrix.
    std::vector<Int> power(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < power.size(); ++i) power[i] = T.entries[i];

    std::vector<Int> traces;
    traces.reserve(K);
    traces.push_back(trace(power));
    std::vector<Int> next(static_cast<size_t>(n) * n);
    for (int k = 2; k <= K; ++k) {
        for (auto& v : next) v = 0;
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) {
                const Int& a = power[static_cast<size_t>(i) * n + l];
                if (a == 0) continue;
                const uint8_t* row = &T.entries[static_cast<size_t>(l) * n];
                Int* out = &next[static_cast<size_t>(i) * n];
                for (int j = 0; j < n; ++j) {
                    if (row[j]) out[j] += a;
                }
            }
        }
        power.swap(next);
        traces.push_back(trace(power));
    }
    return traces;
}

long count_closed_walks_bruteforce(const OrientedEdgeAlphabet& alph, int k,
                                   long expansion_guard) {
    if (k < 1) throw DomainError("count_closed_walks_bruteforce: k must be >= 1");
    HashimotoMatrix T = build_hashimoto(alph);
    const int n = T.size;

    // Successor lists once; DFS counts walks e_0 -> ... -> e_k = e_0.
    std::vector<std::vector<int>> succ(n);
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
            if (T.at(e, f)) succ[e].push_back(f);

    long expansions = 0;
    long total = 0;
    for (int start = 0; start < n; ++start) {
        // Iterative DFS over (current symbol, depth).
        std::vector<std::pair<int, int>> stack{{start, 0}};
        while (!stack.empty()) {
            auto [e, depth] = stack.back();
            stack.pop_back();
            if (++expansions > expansion_guard)
                throw ResourceGuardError("count_closed_walks_bruteforce: expansion guard exceeded");
            if (depth == k) {
                if (e == start) ++total;
                continue;
            }
            for (int f : succ[e]) stack.emplace_back(f, depth + 1);
        }
    }
    return total;
}

bool is_irreducible(const HashimotoMatrix& T) {
    const int n = T.size;
    std::vector<char> reach(static_cast<size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        reach[static_cast<size_t>(s) * n + s] = 1;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (int f = 0; f < n; ++f) {
                if (T.at(e, f) && !reach[static_cast<size_t>(s) * n + f]) {
                    reach[static_cast<size_t>(s) * n + f] = 1;
                    stack.push_back(f);
                }
            }
        }
    }
    for (char r : reach)
        if (!r) return false;
    return true;
}

}  // namespace ihara
