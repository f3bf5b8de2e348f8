#include "ihara/shift.hpp"

#include <algorithm>
#include <functional>

#include "ihara/errors.hpp"
#include "ihara/graph.hpp"

namespace ihara {

ForbiddenSet build_forbidden_set(const OrientedEdgeAlphabet& alph) {
    ForbiddenSet f;
    f.blocks.reserve(alph.size());
    for (int e = 0; e < alph.size(); ++e) f.blocks.push_back({e, alph.inverse(e)});
    return f;
}

bool is_admissible(const Block& b, const OrientedEdgeAlphabet& alph) {
    for (int s : b.symbols) {
        if (s < 0 || s >= alph.size())
            throw DomainError("is_admissible: unknown symbol " + std::to_string(s));
    }
    for (size_t i = 0; i + 1 < b.symbols.size(); ++i) {
        int e = b.symbols[i], f = b.symbols[i + 1];
        if (alph.terminal[e] != alph.initial[f]) return false;  // not composable
        if (f == alph.inverse(e)) return false;                 // forbidden factor
    }
    return true;
}

std::vector<int> canonical_rotation(const std::vector<int>& symbols) {
    const size_t n = symbols.size();
    std::vector<int> best = symbols;
    std::vector<int> rot(n);
    for (size_t r = 1; r < n; ++r) {
        for (size_t i = 0; i < n; ++i) rot[i] = symbols[(r + i) % n];
        if (rot < best) best = rot;
    }
    return best;
}

namespace {

bool is_primitive(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (int i = d; i < n && periodic; ++i) periodic = (w[i] == w[i - d]);
        if (periodic) return false;
    }
    return true;
}

// True iff w is the lexicographically least among its rotations. Only
// rotations starting at another occurrence of w[0] can compete.
bool is_least_rotation(const std::vector<int>& w) {
    const size_t n = w.size();
    for (size_t r = 1; r < n; ++r) {
        if (w[r] != w[0]) continue;
        for (size_t i = 0; i < n; ++i) {
            int cmp = w[(r + i) % n] - w[i];
            if (cmp < 0) return false;
            if (cmp > 0) break;
        }
    }
    return true;
}

}  // namespace

std::vector<PrimeCycle> enumerate_primes(const Graph& g, int L, long expansion_guard) {
    require_valid(g);
    if (L < 3) return {};
    OrientedEdgeAlphabet alph = build_alphabet(g);
    HashimotoMatrix T = build_hashimoto(alph);
    const int n = T.size;

    std::vector<std::vector<int>> succ(n);
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
            if (T.at(e, f)) succ[e].push_back(f);

    std::vector<PrimeCycle> primes;
    std::vector<int> path;
    long expansions = 0;

    // DFS from each start symbol s; the canonical representative of a class
    // starts at its minimal symbol, so only symbols >= s may appear.
    std::function<void(int, int)> dfs = [&](int start, int current) {
        if (++expansions > expansion_guard)
            throw ResourceGuardError("enumerate_primes: expansion guard exceeded");
        if (path.size() >= 3 && T.at(current, start) && is_least_rotation(path) &&
            is_primitive(path)) {
            primes.push_back({path});
        }
        if (static_cast<int>(path.size()) == L) return;
        for (int f : succ[current]) {
            if (f < start) continue;
            path.push_back(f);
            dfs(start, f);
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        dfs(s, s);
    }

    std::sort(primes.begin(), primes.end());
    return primes;
}

TruncatedSeries euler_product_series(const std::vector<PrimeCycle>& primes, int L, int order) {
    if (order > L)
        throw DomainError("euler_product_series: order exceeds the prime completeness bound L");

    std::map<int, long> counts;
    for (const auto& p : primes) ++counts[p.length()];

    TruncatedSeries result = TruncatedSeries::constant(Rat(1), order);
    for (const auto& [len, count] : counts) {
        if (len > order) continue;
        // (1 - x^len)^{-count} = sum_j C(count + j - 1, j) x^{len j}
        TruncatedSeries factor(order);
        for (int j = 0; len * j <= order; ++j)
            factor[len * j] = Rat(binomial(Int(count) + j - 1, static_cast<unsigned long>(j)));
        result = result * factor;
    }
    return result;
}

std::map<int, Int> prime_counts_from_traces(const Graph& g, int L) {
    require_valid(g);
    if (L < 3) throw DomainError("prime_counts_from_traces: L must be >= 3");
    HashimotoMatrix T = build_hashimoto(build_alphabet(g));
    std::vector<Int> traces = trace_powers(T, L);

    std::map<int, Int> counts;
    for (int l = 1; l <= L; ++l) {
        Int acc(0);
        for (int d = 1; d <= l; ++d) {
            if (l % d != 0) continue;
            int mu = moebius(d);
            if (mu != 0) acc += mu * traces[l / d - 1];
        }
        if (acc % l != 0)
            throw InternalError("prime_counts_from_traces: inversion not divisible at length " +
                                std::to_string(l));
        counts[l] = acc / l;
    }
    return counts;
}

}  // namespace ihara
