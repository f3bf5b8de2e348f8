#pragma once

#include "ihara/graph.hpp"
#include "ihara/line_graph.hpp"
#include "ihara/polynomial.hpp"
#include "ihara/series.hpp"

namespace ihara {

// Q(x) = (1 - x^2)^(m-n) det(I - Ax + (D - I)x^2), the exact integer
// polynomial with zeta_G = 1/Q on [0, 1/lambda). Constant term is always 1.
// det_part keeps the determinant factor so the factored form can be printed
// alongside the expansion.
struct ReciprocalZetaPolynomial {
    IntPoly q;
    IntPoly det_part;
    int m = 0;
    int n = 0;
};

// Perron root of T with the paper's bounds and the radius of convergence.
// lambda is computed two ways (power iteration on T + I, and bisection on the
// smallest positive real root of Q); construction fails if they disagree.
struct SpectralData {
    double lambda = 0.0;         // authoritative: 1 / (smallest positive root of Q)
    double lambda_power = 0.0;   // power-iteration route, kept for reporting
    double lower_bound = 0.0;    // 2(d-2)/m
    double upper_bound = 0.0;    // D - 2
    double radius = 0.0;         // 1/lambda
};

ReciprocalZetaPolynomial reciprocal_poly(const Graph& g);

// 1 + sum c_k x^k via series_exp of sum_{k>=2} tr(T^k)/k x^k. The c_k are
// walk counts; integrality is asserted.
TruncatedSeries zeta_series(const Graph& g, int order);

SpectralData perron_root(const Graph& g);

// Upper bound on the dropped tail sum_{k>K} tr(T^k) x^k / k given
// |tr(T^k)| <= 2m lambda^k; reported whenever the truncated series is used
// as a numeric stand-in for zeta.
double series_tail_bound(int m, double lambda, double x, int K);

// Evaluation facade: the exact polynomial route for zeta and its first two
// derivatives, with domain checks against the spectral data. All evaluation
// is exact rational with one final rounding per returned number.
class ZetaFunction {
public:
    explicit ZetaFunction(const Graph& g);

    const ReciprocalZetaPolynomial& reciprocal() const { return recip_; }
    const SpectralData& spectral() const { return spectral_; }
    const Graph& graph() const { return graph_; }

    double eval(double x) const;                       // zeta(x) = 1/Q(x)
    struct Derivatives {
        double zeta;
        double zeta_prime;
        double zeta_second;
    };
    Derivatives derivatives(double x) const;

    // Exact-rational core, used by the entropy layer so term sums stay exact.
    Rat eval_exact(const Rat& x) const;
    Rat prime_exact(const Rat& x) const;               // -Q'/Q^2
    Rat second_exact(const Rat& x) const;              // (2Q'^2 - Q Q'')/Q^3

    void check_domain(double x) const;                 // [0, 1/lambda)

private:
    Graph graph_;
    ReciprocalZetaPolynomial recip_;
    IntPoly dq_;    // Q'
    IntPoly ddq_;   // Q''
    SpectralData spectral_;
};

}  // namespace ihara
