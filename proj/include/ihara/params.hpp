#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihara/zeta.hpp"

namespace ihara {

// STRICT follows the paper's window a in (x1, x0) and fails when it is
// empty; RELAXED (default) admits a in (0, x0), which preserves everything
// the entropy actually needs. On every valid graph x0 < x1, so the strict
// window is empty in practice; the audit carries the measured values.
enum class WindowMode { strict, relaxed };

std::string to_string(WindowMode mode);
WindowMode window_mode_from_string(const std::string& s);

struct ParamWindow {
    double lambda = 0.0;
    double x0 = 0.0;       // root of h(x) = 1 - x zeta'(x)
    double x1 = 0.0;       // root of zeta(x) = 2
    double l_sigma = 0.0;  // sigma cap evaluated at the chosen a
    double a = 0.0;
    double sigma = 0.0;
    WindowMode mode = WindowMode::relaxed;
    bool strict_window_nonempty = false;  // x1 < x0
    bool chain_holds = false;             // 0 < x1 < 1/(2m lambda) < x0 < 1/lambda < 1
};

struct AuditClaim {
    std::string claim_id;
    std::string paper_location;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    std::string note;
};

struct AuditReport {
    std::vector<AuditClaim> claims;
};

// Root solvers and window machinery over one zeta function. Roots are found
// by bracketing bisection with exact-rational sign evaluations; x0 and x1
// are cached after the first solve.
class ParamSolver {
public:
    explicit ParamSolver(const ZetaFunction& zf, double tol = 1e-12);

    double solve_x0();
    double solve_x1();

    // min(1, (1 - a z'(a)) / (a^2 z''(a) + a z'(a) - 1)); 1 when the
    // denominator is <= 0 (the sigma constraint is vacuous there).
    double sigma_limit(double a);

    // R = [1 - a z'(a x^s) - a^2 x^s (s/(1+s)) z''(a x^s)] / (1 - a z'(a)).
    // a must lie in the active window; sigma in (0, 1] so values beyond
    // l_sigma remain evaluable (that boundary behaviour is itself audited).
    double admissibility_R(double a, double sigma, double x, WindowMode mode);

    ParamWindow window(WindowMode mode, std::optional<double> a = std::nullopt,
                       std::optional<double> sigma = std::nullopt);

    void check_a(double a, WindowMode mode);

    AuditReport audit();

    const ZetaFunction& zeta() const { return zf_; }
    double tol() const { return tol_; }

private:
    const ZetaFunction& zf_;
    double tol_;
    std::optional<double> x0_, x1_;
};

// Graph-level convenience wrappers.
double solve_x0(const Graph& g, double tol = 1e-12);
double solve_x1(const Graph& g, double tol = 1e-12);
double sigma_limit(const Graph& g, double a, double tol = 1e-12);
AuditReport audit_inequalities(const Graph& g, double tol = 1e-12);

}  // namespace ihara
