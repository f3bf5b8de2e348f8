#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihara/params.hpp"
#include "ihara/series.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

struct ProbabilityDistribution {
    std::vector<double> p;

    int W() const { return static_cast<int>(p.size()); }

    // Throws DistributionError unless all p_i in [0, 1] and sum is 1
    // within 1e-9.
    void validate() const;

    // Whitespace-separated decimals; normalize rescales any positive sum
    // to 1, otherwise the sum must already be 1 within tolerance.
    static ProbabilityDistribution from_text(const std::string& text, bool normalize = false);

    static ProbabilityDistribution uniform(int W);
};

struct EntropyParams {
    double a = 0.0;
    double sigma = 0.0;
    WindowMode mode = WindowMode::relaxed;
    ParamWindow window;
};

// Validated parameter set; a and sigma default to x0/2 and l_sigma/2.
EntropyParams make_entropy_params(ParamSolver& solver, WindowMode mode,
                                  std::optional<double> a = std::nullopt,
                                  std::optional<double> sigma = std::nullopt);

// The per-term function of the entropy:
//   s(p) = p [zeta(a p^sigma) - p^sigma + 1 - zeta(a)] / (sigma (1 - a zeta'(a))).
// Computed in exact rationals (p^sigma is the single floating step); the
// exact form keeps term sums permutation-invariant to the bit.
Rat s_term_exact(const ZetaFunction& zf, const EntropyParams& params, double p);
double s_term(const ZetaFunction& zf, const EntropyParams& params, double p);

// Closed-form derivative of s, used by the maximum solver and its tests:
//   s'(p) = [a sg p^sg z'(a p^sg) + z(a p^sg) - (1+sg) p^sg - z(a) + 1] / (sg (1 - a z'(a))).
double s_prime(const ZetaFunction& zf, const EntropyParams& params, double p);

// S_G([P]) = sum_i s(p_i): exact rational sum, one final rounding.
double ihara_entropy(const ZetaFunction& zf, const EntropyParams& params,
                     const ProbabilityDistribution& P);

// |S_G(P; a, sigma) - H(P)| for each sigma (decreasing toward 0), where
// H is the natural-log Shannon entropy.
std::vector<double> shannon_limit_check(const ZetaFunction& zf, ParamSolver& solver, double a,
                                        const ProbabilityDistribution& P,
                                        const std::vector<double>& sigmas);

// Interior maximum of s: the point c in (0, 1) with s'(c) = 0; existence
// and s''(c) < 0 are verified, violation is an InternalError.
double find_max_p(const ZetaFunction& zf, const EntropyParams& params, double tol = 1e-12);

// The formal power series G(t) = [zeta(a e^{-t sigma}) - e^{-t sigma} + 1 - zeta(a)]
//                                / (sigma (1 - a zeta'(a)))
// built from the exact zeta series truncated at zeta_order (0 picks the
// default max(2*order, 16)). Zero constant term; linear coefficient exactly 1.
TruncatedSeries generator_series(const Graph& g, const Rat& a, const Rat& sigma, int order,
                                 int zeta_order = 0);

// Lazard law Phi(s1, s2) = G(F(s1) + F(s2)) with F the compositional
// inverse of G; truncated to total degree `order`.
BivariateSeries lazard_law(const TruncatedSeries& Gser, int order);

struct LazardCheck {
    bool unit = false;           // Phi(s, 0) = Phi(0, s) = s
    bool commutative = false;    // Phi(s1, s2) = Phi(s2, s1)
    bool associative = false;    // Phi(Phi(s1, s2), s3) = Phi(s1, Phi(s2, s3))
};

// Exact verification of the formal-group axioms to the truncation order of
// Phi (associativity via trivariate expansion).
LazardCheck lazard_axioms_check(const BivariateSeries& phi);

}  // namespace ihara
