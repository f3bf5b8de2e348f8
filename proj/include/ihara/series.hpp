#pragma once

#include <vector>

#include "ihara/numeric.hpp"

namespace ihara {

// Truncated formal power series with exact rational coefficients.
// coefficient(k) is the coefficient of t^k for k = 0..order; everything
// beyond `order` is unknown (not zero), and arithmetic never pretends
// otherwise: combining two series truncates to the smaller order.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : coeff_(order + 1, Rat(0)) {}
    TruncatedSeries(std::vector<Rat> coeff) : coeff_(std::move(coeff)) {}

    static TruncatedSeries constant(const Rat& c, int order);
    static TruncatedSeries identity(int order);  // t

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Rat& operator[](int k) const { return coeff_[k]; }
    Rat& operator[](int k) { return coeff_[k]; }
    const std::vector<Rat>& coefficients() const { return coeff_; }

    TruncatedSeries truncated(int order) const;

    bool operator==(const TruncatedSeries& other) const = default;

private:
    std::vector<Rat> coeff_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a);

// exp(u) for u with zero constant term, via the E' = u'E recurrence.
TruncatedSeries series_exp(const TruncatedSeries& u);

// f(g(t)) for g with zero constant term; order = min of the two orders.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

// Compositional inverse: F with F(g(t)) = t up to the order of g.
// Requires zero constant term and nonzero linear coefficient.
TruncatedSeries series_revert(const TruncatedSeries& g);

// Exact evaluation of the truncated polynomial at a rational point.
Rat series_eval(const TruncatedSeries& s, const Rat& x);

// Bivariate truncated series: coefficient (i, j) of s1^i s2^j, stored densely
// for total degree i + j <= order. Carrier for the Lazard group law.
class BivariateSeries {
public:
    BivariateSeries() = default;
    explicit BivariateSeries(int order)
        : order_(order), coeff_(static_cast<size_t>(order + 1) * (order + 1), Rat(0)) {}

    int order() const { return order_; }
    const Rat& at(int i, int j) const { return coeff_[idx(i, j)]; }
    void set(int i, int j, const Rat& v) { coeff_[idx(i, j)] = v; }

    // Embeds a univariate series as a series in s1 (var = 0) or s2 (var = 1).
    static BivariateSeries from_univariate(const TruncatedSeries& s, int var, int order);

    BivariateSeries operator+(const BivariateSeries& other) const;
    BivariateSeries operator-(const BivariateSeries& other) const;
    BivariateSeries operator*(const BivariateSeries& other) const;

    bool zero_constant_term() const { return at(0, 0) == 0; }
    bool operator==(const BivariateSeries& other) const = default;

    // Substitutes this series (zero constant term required) into f.
    friend BivariateSeries series_compose(const TruncatedSeries& f, const BivariateSeries& g);

    // Partial substitutions used by the formal-group axiom checks.
    TruncatedSeries set_var_zero(int var) const;  // e.g. Phi(s, 0)
    BivariateSeries swapped_vars() const;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * (order_ + 1) + j; }
    int order_ = 0;
    std::vector<Rat> coeff_;
};

}  // namespace ihara
