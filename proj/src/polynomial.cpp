#include "ihara/polynomial.hpp"

#include "ihara/errors.hpp"

namespace ihara {

IntPoly::IntPoly(std::vector<Int> coeff) : coeff_(std::move(coeff)) {
    if (coeff_.empty()) coeff_.push_back(Int(0));
    trim();
}

void IntPoly::trim() {
    while (coeff_.size() > 1 && coeff_.back() == 0) coeff_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeff_.size(), o.coeff_.size()), Int(0));
    for (size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) c[i] += o.coeff_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    std::vector<Int> c(coeff_.size() + o.coeff_.size() - 1, Int(0));
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly::constant(1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

IntPoly IntPoly::derivative() const {
    if (coeff_.size() == 1) return IntPoly::constant(0);
    std::vector<Int> c(coeff_.size() - 1);
    for (size_t k = 1; k < coeff_.size(); ++k) c[k - 1] = Int(static_cast<long>(k)) * coeff_[k];
    return IntPoly(std::move(c));
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + Rat(coeff_[k]);
    return acc;
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + coeff_[k].get_d();
    return acc;
}

TruncatedSeries reciprocal_series(const IntPoly& p, int order) {
    if (p[0] != 1) throw DomainError("reciprocal_series: constant term must be 1");
    // b_k = -sum_{j=1..min(k,deg)} p_j b_{k-j}, b_0 = 1.
    std::vector<Int> b(order + 1);
    b[0] = 1;
    for (int k = 1; k <= order; ++k) {
        Int acc(0);
        for (int j = 1; j <= std::min(k, p.degree()); ++j) acc += p[j] * b[k - j];
        b[k] = -acc;
    }
    std::vector<Rat> c(order + 1);
    for (int k = 0; k <= order; ++k) c[k] = Rat(b[k]);
    return TruncatedSeries(std::move(c));
}

Int bareiss_determinant(std::vector<std::vector<Int>> a) {
    const size_t n = a.size();
    if (n == 0) return Int(1);
    Int sign(1);
    Int prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact division
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntPoly interpolate_integer_polynomial(const std::vector<Int>& points,
                                       const std::vector<Int>& values) {
    const size_t n = points.size();
    if (values.size() != n || n == 0)
        throw DomainError("interpolate: point/value count mismatch");

    // Newton's divided differences in exact rationals.
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rat(values[i]);
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i] - points[i - level]);
            if (i == level) break;
        }
    }
    // Expand the Newton form into monomial coefficients.
    std::vector<Rat> c(n, Rat(0));
    std::vector<Rat> basis(n, Rat(0));  // prod_{j<i}(x - points[j])
    basis[0] = 1;
    size_t basis_deg = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k <= basis_deg; ++k) c[k] += dd[i] * basis[k];
        if (i + 1 < n) {
            // basis *= (x - points[i])
            ++basis_deg;
            for (size_t k = basis_deg; k >= 1; --k)
                basis[k] = (k == basis_deg ? Rat(0) : basis[k]) * (-Rat(points[i])) + basis[k - 1];
            basis[0] = basis[0] * (-Rat(points[i]));
        }
    }

    std::vector<Int> ic(n);
    for (size_t k = 0; k < n; ++k) {
        if (!is_integer(c[k]))
            throw InternalError("interpolate: non-integer coefficient " + to_string(c[k]));
        ic[k] = c[k].get_num();
    }
    return IntPoly(std::move(ic));
}

}  // namespace ihara
