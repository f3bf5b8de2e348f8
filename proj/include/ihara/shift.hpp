#pragma once

#include <array>
#include <map>
#include <vector>

#include "ihara/line_graph.hpp"
#include "ihara/series.hpp"

namespace ihara {

// A block over the oriented edge alphabet: a finite walk, symbols 0-based.
struct Block {
    std::vector<int> symbols;
};

// A prime cycle stored in canonical form: the lexicographically least
// rotation of a primitive, closed, non-backtracking symbol sequence.
struct PrimeCycle {
    std::vector<int> symbols;
    int length() const { return static_cast<int>(symbols.size()); }

    bool operator==(const PrimeCycle& o) const = default;
    bool operator<(const PrimeCycle& o) const {
        if (symbols.size() != o.symbols.size()) return symbols.size() < o.symbols.size();
        return symbols < o.symbols;
    }
};

// The 2m forbidden two-symbol blocks e e^-1 defining the shift of finite type.
struct ForbiddenSet {
    std::vector<std::array<int, 2>> blocks;
};

ForbiddenSet build_forbidden_set(const OrientedEdgeAlphabet& alph);

// True iff consecutive symbols are composable (t(e_i) = i(e_{i+1})) and no
// forbidden factor e e^-1 occurs. Unknown symbols are an error.
bool is_admissible(const Block& b, const OrientedEdgeAlphabet& alph);

// All prime cycles of length <= L, canonical form, sorted by (length, lex).
std::vector<PrimeCycle> enumerate_primes(const Graph& g, int L,
                                         long expansion_guard = 100'000'000);

// Canonical (lexicographically least) rotation of a closed symbol sequence.
std::vector<int> canonical_rotation(const std::vector<int>& symbols);

// Truncated Euler product prod_[P] (1 - x^{gamma(P)})^{-1} over the supplied
// primes; exact integer coefficients. Requires the prime list to be complete
// up to length L and order <= L.
TruncatedSeries euler_product_series(const std::vector<PrimeCycle>& primes, int L, int order);

// Prime-class counts per length from the traces, by divisor inversion:
// l * N_l = sum_{d | l} mu(d) tr(T^{l/d}). Independent oracle for
// enumerate_primes: the two routes must agree count for count.
std::map<int, Int> prime_counts_from_traces(const Graph& g, int L);

}  // namespace ihara
