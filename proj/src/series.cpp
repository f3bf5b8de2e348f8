#include "ihara/series.hpp"

#include <algorithm>

#include "ihara/errors.hpp"

namespace ihara {

TruncatedSeries TruncatedSeries::constant(const Rat& c, int order) {
    TruncatedSeries s(order);
    s[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    std::vector<Rat> c(coeff_.begin(), coeff_.begin() + std::min<size_t>(order + 1, coeff_.size()));
    c.resize(order + 1, Rat(0));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r[k] = a[k] + b[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r[k] = a[k] - b[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = c * a[k];
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& u) {
    if (u[0] != 0) throw DomainError("series_exp: nonzero constant term");
    int n = u.order();
    // k E_k = sum_{j=1..k} j u_j E_{k-j}, E_0 = 1.
    TruncatedSeries e(n);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += Rat(j) * u[j] * e[k - j];
        e[k] = acc / k;
    }
    return e;
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g[0] != 0) throw DomainError("series_compose: inner series has nonzero constant term");
    int n = std::min(f.order(), g.order());
    TruncatedSeries gn = g.truncated(n);
    // Horner over the truncated ring.
    TruncatedSeries r = TruncatedSeries::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * gn;
        r[0] += f[k];
    }
    return r;
}

TruncatedSeries series_revert(const TruncatedSeries& g) {
    if (g[0] != 0) throw DomainError("series_revert: nonzero constant term");
    int n = g.order();
    if (n < 1 || g[1] == 0) {
        throw DomainError(
            "series_revert: zero linear coefficient, no compositional inverse exists");
    }
    // Solve F(g(t)) = t coefficient by coefficient: [t^k] of F_k g^k is
    // F_k g_1^k plus terms already fixed by F_1..F_{k-1}.
    TruncatedSeries f(n);
    TruncatedSeries acc = TruncatedSeries::constant(Rat(0), n);  // sum_{j<k} F_j g^j
    TruncatedSeries gpow = TruncatedSeries::constant(Rat(1), n);
    Rat g1_pow(1);
    for (int k = 1; k <= n; ++k) {
        gpow = gpow * g;
        g1_pow *= g[1];
        Rat target = (k == 1) ? Rat(1) : Rat(0);
        f[k] = (target - acc[k]) / g1_pow;
        acc = acc + f[k] * gpow;
    }
    return f;
}

Rat series_eval(const TruncatedSeries& s, const Rat& x) {
    Rat acc(0);
    for (int k = s.order(); k >= 0; --k) acc = acc * x + s[k];
    return acc;
}

BivariateSeries BivariateSeries::from_univariate(const TruncatedSeries& s, int var, int order) {
    BivariateSeries b(order);
    for (int k = 0; k <= std::min(order, s.order()); ++k) {
        if (var == 0) b.set(k, 0, s[k]);
        else b.set(0, k, s[k]);
    }
    return b;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& other) const {
    int n = std::min(order_, other.order_);
    BivariateSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r.set(i, j, at(i, j) + other.at(i, j));
    return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& other) const {
    int n = std::min(order_, other.order_);
    BivariateSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r.set(i, j, at(i, j) - other.at(i, j));
    return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& other) const {
    int n = std::min(order_, other.order_);
    BivariateSeries r(n);
    for (int i1 = 0; i1 <= n; ++i1)
        for (int j1 = 0; i1 + j1 <= n; ++j1) {
            const Rat& a = at(i1, j1);
            if (a == 0) continue;
            for (int i2 = 0; i1 + j1 + i2 <= n; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= n; ++j2) {
                    const Rat& b = other.at(i2, j2);
                    if (b == 0) continue;
                    r.set(i1 + i2, j1 + j2, r.at(i1 + i2, j1 + j2) + a * b);
                }
        }
    return r;
}

BivariateSeries series_compose(const TruncatedSeries& f, const BivariateSeries& g) {
    if (!g.zero_constant_term())
        throw DomainError("series_compose: bivariate inner series has nonzero constant term");
    int n = g.order();
    BivariateSeries r(n);
    r.set(0, 0, f[std::min(n, f.order())]);
    for (int k = std::min(n, f.order()) - 1; k >= 0; --k) {
        r = r * g;
        r.set(0, 0, r.at(0, 0) + f[k]);
    }
    return r;
}

TruncatedSeries BivariateSeries::set_var_zero(int var) const {
    TruncatedSeries s(order_);
    for (int k = 0; k <= order_; ++k) s[k] = (var == 1) ? at(k, 0) : at(0, k);
    return s;
}

BivariateSeries BivariateSeries::swapped_vars() const {
    BivariateSeries r(order_);
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) r.set(j, i, at(i, j));
    return r;
}

}  // namespace ihara
