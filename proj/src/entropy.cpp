#include "ihara/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ihara/errors.hpp"

namespace ihara {

void ProbabilityDistribution::validate() const {
    if (p.empty()) throw DistributionError("empty distribution");
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0) || v > 1.0)
            throw DistributionError("probability " + std::to_string(v) + " outside [0, 1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw DistributionError("probabilities sum to " + std::to_string(sum) + ", not 1");
}

ProbabilityDistribution ProbabilityDistribution::from_text(const std::string& text,
                                                           bool normalize) {
    ProbabilityDistribution d;
    std::istringstream in(text);
    double v;
    while (in >> v) d.p.push_back(v);
    if (!in.eof()) throw DistributionError("non-numeric token in distribution input");
    if (d.p.empty()) throw DistributionError("empty distribution");
    if (normalize) {
        double sum = 0.0;
        for (double x : d.p) {
            if (!(x >= 0.0)) throw DistributionError("negative probability in input");
            sum += x;
        }
        if (!(sum > 0.0)) throw DistributionError("cannot normalize: sum is not positive");
        for (double& x : d.p) x /= sum;
    }
    d.validate();
    return d;
}

ProbabilityDistribution ProbabilityDistribution::uniform(int W) {
    ProbabilityDistribution d;
    d.p.assign(W, 1.0 / W);
    return d;
}

EntropyParams make_entropy_params(ParamSolver& solver, WindowMode mode, std::optional<double> a,
                                  std::optional<double> sigma) {
    EntropyParams params;
    params.window = solver.window(mode, a, sigma);
    params.a = params.window.a;
    params.sigma = params.window.sigma;
    params.mode = mode;
    return params;
}

Rat s_term_exact(const ZetaFunction& zf, const EntropyParams& params, double p) {
    if (!(p >= 0.0) || p > 1.0)
        throw DistributionError("probability " + std::to_string(p) + " outside [0, 1]");
    if (p == 0.0) return Rat(0);

    const Rat ar = rat_from_double(params.a);
    const Rat sr = rat_from_double(params.sigma);
    const Rat ps = rat_from_double(std::pow(p, params.sigma));

    Rat bracket = zf.eval_exact(ar * ps) - ps + 1 - zf.eval_exact(ar);
    Rat denom = sr * (1 - ar * zf.prime_exact(ar));
    return rat_from_double(p) * bracket / denom;
}

double s_term(const ZetaFunction& zf, const EntropyParams& params, double p) {
    return to_double(s_term_exact(zf, params, p));
}

namespace {

// Numerator of s'(p) as an exact rational; s' shares its sign with this when
// the window makes 1 - a zeta'(a) positive.
Rat s_prime_numerator(const ZetaFunction& zf, const EntropyParams& params, double p) {
    const Rat ar = rat_from_double(params.a);
    const Rat sr = rat_from_double(params.sigma);
    const Rat ps = rat_from_double(std::pow(p, params.sigma));
    Rat arg = ar * ps;
    return ar * sr * ps * zf.prime_exact(arg) + zf.eval_exact(arg) - (1 + sr) * ps -
           zf.eval_exact(ar) + 1;
}

}  // namespace

double s_prime(const ZetaFunction& zf, const EntropyParams& params, double p) {
    if (!(p > 0.0) || p > 1.0)
        throw DistributionError("s': p = " + std::to_string(p) + " outside (0, 1]");
    const Rat ar = rat_from_double(params.a);
    const Rat sr = rat_from_double(params.sigma);
    Rat denom = sr * (1 - ar * zf.prime_exact(ar));
    return to_double(s_prime_numerator(zf, params, p) / denom);
}

double ihara_entropy(const ZetaFunction& zf, const EntropyParams& params,
                     const ProbabilityDistribution& P) {
    P.validate();
    Rat sum(0);
    for (double p : P.p) sum += s_term_exact(zf, params, p);
    return to_double(sum);
}

std::vector<double> shannon_limit_check(const ZetaFunction& zf, ParamSolver& solver, double a,
                                        const ProbabilityDistribution& P,
                                        const std::vector<double>& sigmas) {
    P.validate();
    double H = 0.0;
    for (double p : P.p) {
        if (p > 0.0) H -= p * std::log(p);
    }
    std::vector<double> deviations;
    deviations.reserve(sigmas.size());
    double prev = std::numeric_limits<double>::infinity();
    for (double sigma : sigmas) {
        if (!(sigma < prev))
            throw WindowError("sigma values must decrease toward 0");
        prev = sigma;
        EntropyParams params = make_entropy_params(solver, WindowMode::relaxed, a, sigma);
        deviations.push_back(std::abs(ihara_entropy(zf, params, P) - H));
    }
    return deviations;
}

double find_max_p(const ZetaFunction& zf, const EntropyParams& params, double tol) {
    // Bracket a sign change of s' on (0, 1): s'(1) = -1 always; in the
    // relaxed window zeta(a) < 2 makes s' positive near 0.
    auto sign_at = [&](double p) { return sgn(s_prime_numerator(zf, params, p)); };

    double lo = 0.5;
    while (sign_at(lo) <= 0) {
        lo *= 0.5;
        if (lo < 1e-12) {
            throw InternalError("find_max_p: no interior sign change of s'; s'(1e-12) numerator sign " +
                                std::to_string(sign_at(1e-12)) + ", s'(1) = " +
                                std::to_string(s_prime(zf, params, 1.0)));
        }
    }
    double hi = 1.0;
    for (int it = 0; it < 300 && (hi - lo) > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sign_at(mid) > 0) lo = mid;
        else hi = mid;
    }
    double c = 0.5 * (lo + hi);

    // Concavity at the critical point, by central second difference.
    double h = 1e-5;
    double s2 = (s_term(zf, params, c + h) - 2.0 * s_term(zf, params, c) +
                 s_term(zf, params, c - h)) / (h * h);
    if (!(s2 < 0.0))
        throw InternalError("find_max_p: s''(c) = " + std::to_string(s2) + " is not negative");
    return c;
}

TruncatedSeries generator_series(const Graph& g, const Rat& a, const Rat& sigma, int order,
                                 int zeta_order) {
    if (order < 2) throw DomainError("generator_series: order must be >= 2");
    if (sigma <= 0) throw WindowError("generator_series: sigma must be positive");
    if (a <= 0) throw WindowError("generator_series: a must be positive");
    if (zeta_order <= 0) zeta_order = std::max(2 * order, 16);

    // zeta truncated at zeta_order in x; the construction below is exact for
    // the truncated zeta, so the constant/linear normalization is exact too.
    TruncatedSeries zc = zeta_series(g, zeta_order);

    // E_k(t) = exp(-k sigma t) as a series in t.
    auto exp_series = [&](const Rat& rate) {
        TruncatedSeries e(order);
        Rat term(1);
        e[0] = 1;
        for (int j = 1; j <= order; ++j) {
            term = term * rate / j;
            e[j] = term;
        }
        return e;
    };

    Rat zeta_at_a(0);       // zeta_K(a)
    Rat zeta_prime_at_a(0); // zeta_K'(a)
    TruncatedSeries num(order);
    Rat apow(1);
    for (int k = 0; k <= zeta_order; ++k) {
        const Rat& ck = zc[k];
        if (ck != 0) {
            Rat coeff = ck * apow;
            zeta_at_a += coeff;
            if (k >= 1) zeta_prime_at_a += Rat(k) * ck * apow / a;
            num = num + coeff * exp_series(Rat(-k) * sigma);
        }
        apow *= a;
    }
    num = num - exp_series(-sigma);
    num[0] += 1 - zeta_at_a;

    Rat denom = sigma * (1 - a * zeta_prime_at_a);
    if (denom == 0) throw InternalError("generator_series: vanishing normalization factor");
    TruncatedSeries gser = (Rat(1) / denom) * num;
    if (gser[0] != 0 || gser[1] != 1)
        throw InternalError("generator_series: normalization failed");
    return gser;
}

BivariateSeries lazard_law(const TruncatedSeries& Gser, int order) {
    if (Gser.order() < order)
        throw DomainError("lazard_law: generator series order below requested order");
    TruncatedSeries G = Gser.truncated(order);
    TruncatedSeries F = series_revert(G);
    BivariateSeries u = BivariateSeries::from_univariate(F, 0, order) +
                        BivariateSeries::from_univariate(F, 1, order);
    return series_compose(G, u);
}

namespace {

// Dense trivariate truncated polynomial, total degree <= order. Only the
// associativity check needs three variables, so it stays file-local.
class TriSeries {
public:
    explicit TriSeries(int order)
        : order_(order),
          coeff_(static_cast<size_t>(order + 1) * (order + 1) * (order + 1), Rat(0)) {}

    int order() const { return order_; }
    const Rat& at(int i, int j, int k) const { return coeff_[idx(i, j, k)]; }
    void add(int i, int j, int k, const Rat& v) { coeff_[idx(i, j, k)] += v; }

    static TriSeries variable(int var, int order) {
        TriSeries t(order);
        t.add(var == 0 ? 1 : 0, var == 1 ? 1 : 0, var == 2 ? 1 : 0, Rat(1));
        return t;
    }

    TriSeries operator*(const TriSeries& o) const {
        int n = order_;
        TriSeries r(n);
        for (int i1 = 0; i1 <= n; ++i1)
            for (int j1 = 0; i1 + j1 <= n; ++j1)
                for (int k1 = 0; i1 + j1 + k1 <= n; ++k1) {
                    const Rat& a = at(i1, j1, k1);
                    if (a == 0) continue;
                    for (int i2 = 0; i1 + j1 + k1 + i2 <= n; ++i2)
                        for (int j2 = 0; i1 + j1 + k1 + i2 + j2 <= n; ++j2)
                            for (int k2 = 0; i1 + j1 + k1 + i2 + j2 + k2 <= n; ++k2) {
                                const Rat& b = o.at(i2, j2, k2);
                                if (b == 0) continue;
                                r.add(i1 + i2, j1 + j2, k1 + k2, a * b);
                            }
                }
        return r;
    }

    TriSeries operator+(const TriSeries& o) const {
        TriSeries r(order_);
        for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] = coeff_[i] + o.coeff_[i];
        return r;
    }

    bool operator==(const TriSeries& o) const { return coeff_ == o.coeff_; }

private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * (order_ + 1) + j) * (order_ + 1) + k;
    }
    int order_;
    std::vector<Rat> coeff_;
};

// Phi(P, Q) for trivariate arguments with zero constant term.
TriSeries substitute(const BivariateSeries& phi, const TriSeries& P, const TriSeries& Q) {
    int n = P.order();
    TriSeries result(n);
    // Powers of P and Q up to total degree n.
    std::vector<TriSeries> ppow{TriSeries(n)}, qpow{TriSeries(n)};
    ppow[0].add(0, 0, 0, Rat(1));
    qpow[0].add(0, 0, 0, Rat(1));
    for (int k = 1; k <= n; ++k) {
        ppow.push_back(ppow[k - 1] * P);
        qpow.push_back(qpow[k - 1] * Q);
    }
    for (int i = 0; i <= phi.order(); ++i)
        for (int j = 0; i + j <= phi.order(); ++j) {
            const Rat& c = phi.at(i, j);
            if (c == 0 || i + j > n) continue;
            TriSeries term = ppow[i] * qpow[j];
            for (int a = 0; a <= n; ++a)
                for (int b = 0; a + b <= n; ++b)
                    for (int d = 0; a + b + d <= n; ++d)
                        if (term.at(a, b, d) != 0) result.add(a, b, d, c * term.at(a, b, d));
        }
    return result;
}

}  // namespace

LazardCheck lazard_axioms_check(const BivariateSeries& phi) {
    LazardCheck check;
    const int n = phi.order();

    TruncatedSeries id = TruncatedSeries::identity(n);
    check.unit = (phi.set_var_zero(1) == id) && (phi.set_var_zero(0) == id);
    check.commutative = phi.swapped_vars() == phi;

    TriSeries s1 = TriSeries::variable(0, n);
    TriSeries s2 = TriSeries::variable(1, n);
    TriSeries s3 = TriSeries::variable(2, n);
    TriSeries left = substitute(phi, substitute(phi, s1, s2), s3);
    TriSeries right = substitute(phi, s1, substitute(phi, s2, s3));
    check.associative = left == right;
    return check;
}

}  // namespace ihara
