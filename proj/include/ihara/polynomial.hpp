#pragma once

#include <vector>

#include "ihara/numeric.hpp"
#include "ihara/series.hpp"

namespace ihara {

// Exact integer polynomial, coefficient of x^k at index k.
class IntPoly {
public:
    IntPoly() : coeff_{Int(0)} {}
    explicit IntPoly(std::vector<Int> coeff);

    static IntPoly constant(const Int& c) { return IntPoly({c}); }

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const Int& operator[](int k) const { return coeff_[k]; }
    const std::vector<Int>& coefficients() const { return coeff_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly pow(unsigned e) const;
    IntPoly derivative() const;

    Rat eval(const Rat& x) const;
    double eval(double x) const;  // Horner in doubles, for scans only

    bool operator==(const IntPoly& o) const = default;

private:
    void trim();
    std::vector<Int> coeff_;
};

// Power-series expansion of 1/p by exact long division; requires p(0) = 1.
// Coefficients of the reciprocal of a monic-at-0 integer polynomial are
// integers; returned as a rational series for uniformity with series_engine.
TruncatedSeries reciprocal_series(const IntPoly& p, int order);

// Exact determinant of a square integer matrix (row-major), by Bareiss
// fraction-free elimination.
Int bareiss_determinant(std::vector<std::vector<Int>> a);

// Exact Lagrange interpolation through (points[i], values[i]); throws if the
// interpolant is not an integer polynomial.
IntPoly interpolate_integer_polynomial(const std::vector<Int>& points,
                                       const std::vector<Int>& values);

}  // namespace ihara
