#include "ihara/zeta.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

// Integer matrix M(t) = I - A t + (D - I) t^2 for an integer point t.
std::vector<std::vector<Int>> vertex_matrix_at(const Graph& g, const Int& t) {
    const int n = g.n();
    std::vector<std::vector<Int>> mat(n, std::vector<Int>(n, Int(0)));
    Int t2 = t * t;
    for (int i = 0; i < n; ++i) mat[i][i] = 1 + Int(g.degree[i] - 1) * t2;
    for (const auto& [u, v] : g.edges) {
        mat[u][v] -= t;
        mat[v][u] -= t;
    }
    return mat;
}

}  // namespace

ReciprocalZetaPolynomial reciprocal_poly(const Graph& g) {
    require_valid(g);
    const int n = g.n();
    const int m = g.m();

    // det(I - Ax + (D - I)x^2) has degree <= 2n: evaluate at 2n+1 integer
    // points, take exact determinants, interpolate exactly.
    std::vector<Int> points, values;
    points.reserve(2 * n + 1);
    values.reserve(2 * n + 1);
    for (int t = -n; t <= n; ++t) {
        points.emplace_back(t);
        values.push_back(bareiss_determinant(vertex_matrix_at(g, Int(t))));
    }
    IntPoly det = interpolate_integer_polynomial(points, values);

    IntPoly one_minus_x2({Int(1), Int(0), Int(-1)});
    ReciprocalZetaPolynomial r;
    r.q = one_minus_x2.pow(static_cast<unsigned>(m - n)) * det;
    r.det_part = det;
    r.m = m;
    r.n = n;
    if (r.q[0] != 1) throw InternalError("reciprocal_poly: constant term is not 1");
    if (r.q.degree() > 2 * m) throw InternalError("reciprocal_poly: degree exceeds 2m");
    return r;
}

TruncatedSeries zeta_series(const Graph& g, int order) {
    require_valid(g);
    if (order < 2) throw DomainError("zeta_series: order must be >= 2");
    HashimotoMatrix T = build_hashimoto(build_alphabet(g));
    std::vector<Int> traces = trace_powers(T, order);

    TruncatedSeries u(order);
    for (int k = 2; k <= order; ++k) u[k] = rat(traces[k - 1], Int(k));
    TruncatedSeries z = series_exp(u);
    for (int k = 0; k <= order; ++k) {
        if (!is_integer(z[k]))
            throw InternalError("zeta_series: non-integer coefficient c_" + std::to_string(k));
    }
    return z;
}

double series_tail_bound(int m, double lambda, double x, int K) {
    // sum_{k>K} 2m (x lambda)^k / k <= 2m (x lambda)^{K+1} / ((K+1)(1 - x lambda))
    double r = x * lambda;
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 * m * std::pow(r, K + 1) / ((K + 1) * (1.0 - r));
}

namespace {

double power_iteration_shifted(const HashimotoMatrix& T, int max_iters, double rel_tol) {
    // Iterate on T + I: the positive diagonal makes the chain aperiodic, so
    // bipartite-style period-2 oscillation cannot stall the iteration.
    const int n = T.size;
    std::vector<double> v(n, 1.0 / n), w(n);
    double rho = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = v[i];  // the +I shift
            const uint8_t* row = &T.entries[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j)
                if (row[j]) acc += v[j];
            w[i] = acc;
        }
        double num = 0.0, den = 0.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            num += w[i] * v[i];
            den += v[i] * v[i];
            norm += w[i] * w[i];
        }
        double rayleigh = num / den;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::abs(rayleigh - rho) <= rel_tol * std::abs(rayleigh)) {
            rho = rayleigh;
            break;
        }
        rho = rayleigh;
    }
    return rho - 1.0;
}

// Smallest positive real root of Q by double scan + exact-sign bisection.
double smallest_positive_root(const IntPoly& q, double scan_upper) {
    const double step = 1e-5;
    double prev_x = 0.0;
    double lo = -1.0, hi = -1.0;
    for (double x = step; x <= scan_upper + step; x += step) {
        if (q.eval(x) <= 0.0) {
            lo = prev_x;
            hi = x;
            break;
        }
        prev_x = x;
    }
    if (hi < 0.0) throw InternalError("smallest_positive_root: no sign change found");

    // Certify and refine with exact signs at rational points.
    while (q.eval(rat_from_double(lo)) <= 0) lo = std::max(0.0, lo - step);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (q.eval(rat_from_double(mid)) > 0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

SpectralData perron_root(const Graph& g) {
    require_valid(g);
    DegreeStats ds = degree_stats(g);
    ReciprocalZetaPolynomial r = reciprocal_poly(g);

    HashimotoMatrix T = build_hashimoto(build_alphabet(g));
    SpectralData s;
    s.lambda_power = power_iteration_shifted(T, 100000, 1e-12);

    double root = smallest_positive_root(r.q, 1.0);
    s.lambda = 1.0 / root;
    s.radius = root;
    s.lower_bound = 2.0 * (ds.d - 2) / g.m();
    s.upper_bound = ds.D - 2;

    double rel = std::abs(s.lambda - s.lambda_power) / s.lambda;
    if (rel > 1e-9) {
        throw InternalError("perron_root: power-iteration and polynomial-root routes disagree ("
                            + std::to_string(s.lambda_power) + " vs " + std::to_string(s.lambda) + ")");
    }
    return s;
}

ZetaFunction::ZetaFunction(const Graph& g)
    : graph_(g),
      recip_(reciprocal_poly(g)),
      dq_(recip_.q.derivative()),
      ddq_(dq_.derivative()),
      spectral_(perron_root(g)) {}

void ZetaFunction::check_domain(double x) const {
    if (!(x >= 0.0) || x >= spectral_.radius) {
        throw DomainError("zeta: x = " + std::to_string(x) + " outside [0, 1/lambda) with 1/lambda = " +
                          std::to_string(spectral_.radius));
    }
}

Rat ZetaFunction::eval_exact(const Rat& x) const {
    Rat qx = recip_.q.eval(x);
    if (qx <= 0) throw DomainError("zeta: Q(x) <= 0, x is at or beyond the radius of convergence");
    return 1 / qx;
}

Rat ZetaFunction::prime_exact(const Rat& x) const {
    Rat qx = recip_.q.eval(x);
    if (qx <= 0) throw DomainError("zeta': Q(x) <= 0, x is at or beyond the radius of convergence");
    return -dq_.eval(x) / (qx * qx);
}

Rat ZetaFunction::second_exact(const Rat& x) const {
    Rat qx = recip_.q.eval(x);
    if (qx <= 0) throw DomainError("zeta'': Q(x) <= 0, x is at or beyond the radius of convergence");
    Rat dqx = dq_.eval(x);
    return (2 * dqx * dqx - qx * ddq_.eval(x)) / (qx * qx * qx);
}

double ZetaFunction::eval(double x) const {
    check_domain(x);
    return to_double(eval_exact(rat_from_double(x)));
}

ZetaFunction::Derivatives ZetaFunction::derivatives(double x) const {
    check_domain(x);
    Rat xr = rat_from_double(x);
    return {to_double(eval_exact(xr)), to_double(prime_exact(xr)), to_double(second_exact(xr))};
}

}  // namespace ihara
