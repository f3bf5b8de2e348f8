#include "ihara/params.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "ihara/errors.hpp"

namespace ihara {

std::string to_string(WindowMode mode) {
    return mode == WindowMode::strict ? "strict" : "relaxed";
}

WindowMode window_mode_from_string(const std::string& s) {
    if (s == "strict") return WindowMode::strict;
    if (s == "relaxed") return WindowMode::relaxed;
    throw DomainError("unknown window mode: " + s);
}

ParamSolver::ParamSolver(const ZetaFunction& zf, double tol) : zf_(zf), tol_(tol) {
    if (tol <= 0) throw DomainError("ParamSolver: tolerance must be positive");
}

namespace {

// Bracketing bisection on [lo, hi] for a function whose exact sign is
// computable at any double; positive at lo, non-positive at hi.
double bisect(double lo, double hi, double tol, const std::function<int(double)>& sign_at) {
    for (int it = 0; it < 300 && (hi - lo) > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sign_at(mid) > 0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double ParamSolver::solve_x0() {
    if (x0_) return *x0_;
    const double radius = zf_.spectral().radius;
    // h(x) = 1 - x zeta'(x): h(0) = 1, and h is negative close enough to the
    // radius; shrink epsilon until the sign change is bracketed.
    auto h_sign = [&](double x) {
        Rat xr = rat_from_double(x);
        Rat h = 1 - xr * zf_.prime_exact(xr);
        return sgn(h);
    };
    double hi = -1.0;
    for (double eps = 1e-2; eps >= 1e-14; eps /= 10.0) {
        double cand = radius * (1.0 - eps);
        if (h_sign(cand) < 0) {
            hi = cand;
            break;
        }
    }
    if (hi < 0.0) {
        throw InternalError("solve_x0: no sign change of h on (0, 1/lambda); h(" +
                            std::to_string(radius * (1.0 - 1e-14)) + ") >= 0");
    }
    x0_ = bisect(0.0, hi, tol_, h_sign);
    return *x0_;
}

double ParamSolver::solve_x1() {
    if (x1_) return *x1_;
    const double radius = zf_.spectral().radius;
    // zeta(0) = 1 < 2 and zeta is unbounded at the radius, so zeta(x) = 2
    // has a root; zeta(x) - 2 > 0 iff 1 - 2 Q(x) > 0.
    auto sign_2_minus_zeta = [&](double x) {
        Rat q = zf_.reciprocal().q.eval(rat_from_double(x));
        Rat v = 2 * q - 1;  // positive while zeta < 2
        return sgn(v);
    };
    double hi = -1.0;
    for (double eps = 1e-2; eps >= 1e-14; eps /= 10.0) {
        double cand = radius * (1.0 - eps);
        if (sign_2_minus_zeta(cand) < 0) {
            hi = cand;
            break;
        }
    }
    if (hi < 0.0) throw InternalError("solve_x1: zeta stays below 2 on the scanned domain");
    x1_ = bisect(0.0, hi, tol_, sign_2_minus_zeta);
    return *x1_;
}

double ParamSolver::sigma_limit(double a) {
    zf_.check_domain(a);
    Rat ar = rat_from_double(a);
    Rat num = 1 - ar * zf_.prime_exact(ar);
    Rat den = ar * ar * zf_.second_exact(ar) + ar * zf_.prime_exact(ar) - 1;
    if (den <= 0) return 1.0;  // constraint vacuous
    Rat r = num / den;
    if (r >= 1) return 1.0;
    return to_double(r);
}

void ParamSolver::check_a(double a, WindowMode mode) {
    double hi = solve_x0();
    double lo = (mode == WindowMode::strict) ? solve_x1() : 0.0;
    if (mode == WindowMode::strict && !(lo < hi)) {
        throw WindowError("strict window (x1, x0) is empty: x1 = " + std::to_string(lo) +
                          " >= x0 = " + std::to_string(hi));
    }
    if (!(a > lo) || !(a < hi)) {
        throw WindowError("a = " + std::to_string(a) + " outside the " + to_string(mode) +
                          " window (" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
    }
}

double ParamSolver::admissibility_R(double a, double sigma, double x, WindowMode mode) {
    check_a(a, mode);
    if (!(sigma > 0.0) || sigma > 1.0)
        throw WindowError("sigma = " + std::to_string(sigma) + " outside (0, 1]");
    if (!(x >= 0.0) || x > 1.0)
        throw WindowError("x = " + std::to_string(x) + " outside [0, 1]");

    Rat ar = rat_from_double(a);
    Rat sr = rat_from_double(sigma);
    Rat xs = rat_from_double(std::pow(x, sigma));
    Rat arg = ar * xs;
    Rat num = 1 - ar * zf_.prime_exact(arg) -
              ar * ar * xs * (sr / (1 + sr)) * zf_.second_exact(arg);
    Rat den = 1 - ar * zf_.prime_exact(ar);
    return to_double(num / den);
}

ParamWindow ParamSolver::window(WindowMode mode, std::optional<double> a,
                                std::optional<double> sigma) {
    ParamWindow w;
    w.mode = mode;
    w.lambda = zf_.spectral().lambda;
    w.x0 = solve_x0();
    w.x1 = solve_x1();
    w.strict_window_nonempty = w.x1 < w.x0;

    const int m = zf_.reciprocal().m;
    double inv_2ml = 1.0 / (2.0 * m * w.lambda);
    w.chain_holds = (0.0 < w.x1) && (w.x1 < inv_2ml) && (inv_2ml < w.x0) &&
                    (w.x0 < zf_.spectral().radius) && (zf_.spectral().radius < 1.0);

    w.a = a.value_or(w.x0 / 2.0);
    check_a(w.a, mode);
    w.l_sigma = sigma_limit(w.a);
    w.sigma = sigma.value_or(w.l_sigma / 2.0);
    if (!(w.sigma > 0.0) || !(w.sigma < w.l_sigma)) {
        throw WindowError("sigma = " + std::to_string(w.sigma) + " outside (0, l_sigma) with l_sigma = " +
                          std::to_string(w.l_sigma));
    }
    return w;
}

namespace {

// Lemma 7's f(x) = x^x / (e (x-1)^{x+1}), evaluated in log space.
double lemma7_f(double x) {
    return std::exp(x * std::log(x) - 1.0 - (x + 1.0) * std::log(x - 1.0));
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

AuditReport ParamSolver::audit() {
    AuditReport report;
    const Graph& g = zf_.graph();
    const SpectralData& sp = zf_.spectral();
    DegreeStats ds = degree_stats(g);
    const int m = g.m();
    const double two_m = 2.0 * m;
    const double lambda = sp.lambda;
    const double at_2ml = 1.0 / (two_m * lambda);

    auto add = [&](std::string id, std::string where, double lhs, double rhs, bool holds,
                   std::string note) {
        report.claims.push_back({std::move(id), std::move(where), lhs, rhs, holds, std::move(note)});
    };

    // (i) Lemma 2 and the section-2 chain of eigenvalue bounds.
    add("lemma2_lower", "Lemma 2", 2.0 * (ds.d - 2) / m, lambda,
        2.0 * (ds.d - 2) / m <= lambda, "2(d-2)/m <= lambda");
    add("lemma2_upper", "Section 2", lambda, static_cast<double>(ds.D - 2),
        lambda <= ds.D - 2, "lambda <= D-2");

    // (ii) Lemma 6: zeta(1/(2m lambda)) vs (2m)^{2m} / (e (2m-1)^{2m}).
    double zeta_2ml = zf_.eval(at_2ml);
    double lemma6_bound = std::exp(two_m * (std::log(two_m) - std::log(two_m - 1.0)) - 1.0);
    add("lemma6_zeta_upper_bound", "Lemma 6", zeta_2ml, lemma6_bound, zeta_2ml <= lemma6_bound,
        "zeta(1/(2m lambda)) <= (2m)^{2m}/(e(2m-1)^{2m})");

    // (iii) Lemma 7: f decreasing, spot-checked on integer points.
    double worst_diff = -std::numeric_limits<double>::infinity();
    for (int x = 2; x <= 11; ++x) worst_diff = std::max(worst_diff, lemma7_f(x + 1) - lemma7_f(x));
    add("lemma7_f_decreasing", "Lemma 7", worst_diff, 0.0, worst_diff < 0.0,
        "max of f(x+1)-f(x) over x = 2..11; negative means decreasing");

    // (iv) Lemma 8: sum_k tr(T^k)/(2m lambda)^k <= 1/(2m-1), truncated with a
    // rigorous tail bound added to the measured side.
    int K = 2;
    while (two_m / (std::pow(two_m, K) * (two_m - 1.0)) >= 1e-12) ++K;
    HashimotoMatrix T = build_hashimoto(build_alphabet(g));
    std::vector<Int> traces = trace_powers(T, K);
    double sum = 0.0;
    for (int k = 2; k <= K; ++k) sum += to_double(traces[k - 1]) / std::pow(two_m * lambda, k);
    double tail = two_m / (std::pow(two_m, K) * (two_m - 1.0));
    add("lemma8_trace_sum", "Lemma 8", sum + tail, 1.0 / (two_m - 1.0),
        sum + tail <= 1.0 / (two_m - 1.0),
        "truncated at K = " + std::to_string(K) + " with tail bound " + short_num(tail) + " included");

    // (v) Lemma 9: h(1/(2m lambda)) > 0.
    {
        Rat xr = rat_from_double(at_2ml);
        double h = to_double(1 - xr * zf_.prime_exact(xr));
        add("lemma9_h_positive", "Lemma 9", h, 0.0, h > 0.0, "h(1/(2m lambda)) > 0");
    }

    // (vi) Lemma 10: zeta(1/(2m lambda)) > 2. Conflicts with Lemma 6's bound
    // (< 2 for m >= 2); both sides reported, neither asserted.
    add("lemma10_zeta_above_two", "Lemma 10", zeta_2ml, 2.0, zeta_2ml > 2.0,
        "zeta(1/(2m lambda)) > 2; note Lemma 6 bounds the same value by " + short_num(lemma6_bound));

    // (vii) Eq. (13): 0 < x1 < 1/(2m lambda) < x0 < 1/lambda < 1.
    double x0 = solve_x0();
    double x1 = solve_x1();
    add("eq13_x1_positive", "Eq. (13)", 0.0, x1, 0.0 < x1, "0 < x1");
    add("eq13_x1_below_inv2ml", "Eq. (13)", x1, at_2ml, x1 < at_2ml, "x1 < 1/(2m lambda)");
    add("eq13_inv2ml_below_x0", "Eq. (13)", at_2ml, x0, at_2ml < x0, "1/(2m lambda) < x0");
    add("eq13_x0_below_radius", "Eq. (13)", x0, sp.radius, x0 < sp.radius, "x0 < 1/lambda");
    add("eq13_radius_below_one", "Eq. (13)", sp.radius, 1.0, sp.radius < 1.0, "1/lambda < 1");
    add("x1_vs_x0_ordering", "Eq. (13)", x1, x0, x1 < x0,
        std::string("measured ordering: ") + (x1 < x0 ? "x1 < x0 (paper's chain)" : "x0 < x1 (chain reversed)"));

    // (viii) Lemma 3 proof step: tr(T^k) >= lambda^k for even k. Fails at
    // k = 2 on every simple graph since tr(T^2) = 0.
    for (int k = 2; k <= 6; k += 2) {
        double tk = to_double(traces[k - 1]);
        add("lemma3_step_even_k" + std::to_string(k), "Lemma 3 proof", tk, std::pow(lambda, k),
            tk >= std::pow(lambda, k), "tr(T^k) >= lambda^k at k = " + std::to_string(k));
    }

    // The paper calls T symmetric; the defining relation is directed. Flag it.
    bool symmetric = T.is_symmetric();
    add("hashimoto_symmetry_claim", "Section 2", symmetric ? 1.0 : 0.0, 1.0, symmetric,
        "T as defined by the oriented line graph is directed; the determinant identity needs the "
        "directed operator");

    return report;
}

double solve_x0(const Graph& g, double tol) {
    ZetaFunction zf(g);
    return ParamSolver(zf, tol).solve_x0();
}

double solve_x1(const Graph& g, double tol) {
    ZetaFunction zf(g);
    return ParamSolver(zf, tol).solve_x1();
}

double sigma_limit(const Graph& g, double a, double tol) {
    ZetaFunction zf(g);
    return ParamSolver(zf, tol).sigma_limit(a);
}

AuditReport audit_inequalities(const Graph& g, double tol) {
    ZetaFunction zf(g);
    return ParamSolver(zf, tol).audit();
}

}  // namespace ihara
