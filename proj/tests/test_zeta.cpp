#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ihara/errors.hpp"
#include "ihara/zeta.hpp"
#include "test_util.hpp"

using namespace ihara;

namespace {

// The published billiard reciprocal:
// (1-x^2)^3 (48x^10 + 32x^8 - 32x^7 - 8x^6 - 32x^5 - 4x^4 - 8x^3 + 3x^2 + 1).
IntPoly billiard_reference() {
    IntPoly cyc({Int(1), Int(0), Int(-1)});
    IntPoly f({Int(1), Int(0), Int(3), Int(-8), Int(-4), Int(-32), Int(-8), Int(-32), Int(32),
               Int(0), Int(48)});
    return cyc.pow(3) * f;
}

}  // namespace

TEST_CASE("billiard reciprocal polynomial matches the published one") {
    ReciprocalZetaPolynomial r = reciprocal_poly(make_billiard_graph());
    CHECK(r.q == billiard_reference());
    CHECK(r.m - r.n == 3);
    // the determinant factor alone is the published degree-10 factor
    IntPoly f({Int(1), Int(0), Int(3), Int(-8), Int(-4), Int(-32), Int(-8), Int(-32), Int(32),
               Int(0), Int(48)});
    CHECK(r.det_part == f);
}

TEST_CASE("constant term of Q is 1 on the whole suite") {
    for (const Graph& g : testutil::suite_graphs()) {
        ReciprocalZetaPolynomial r = reciprocal_poly(g);
        CHECK(r.q[0] == 1);
        CHECK(r.q.degree() <= 2 * g.m());
    }
}

TEST_CASE("series coefficients c1 = c2 = 0, K4 values") {
    for (const Graph& g : testutil::suite_graphs(5)) {
        TruncatedSeries s = zeta_series(g, 4);
        CHECK(s[0] == 1);
        CHECK(s[1] == 0);
        CHECK(s[2] == 0);
    }
    Graph k4 = make_complete_graph(4);
    HashimotoMatrix T = build_hashimoto(build_alphabet(k4));
    std::vector<Int> tr = trace_powers(T, 5);
    TruncatedSeries s = zeta_series(k4, 5);
    CHECK(s[3] == 8);                                  // tr(T^3)/3 = 24/3
    CHECK(s[4] == rat(tr[3], Int(4)));                 // tr(T^4)/4, since tr(T^2) = 0
    CHECK(s[5] == rat(tr[4], Int(5)));                 // tr(T^2)tr(T^3)/6 + tr(T^5)/5
}

TEST_CASE("exp-trace series equals the polynomial reciprocal to order 12") {
    for (const Graph& g : testutil::suite_graphs(6)) {
        TruncatedSeries s = zeta_series(g, 12);
        TruncatedSeries rec = reciprocal_series(reciprocal_poly(g).q, 12);
        CHECK(s == rec);
    }
}

TEST_CASE("Perron root of K4 is 2 by both routes") {
    SpectralData s = perron_root(make_complete_graph(4));
    CHECK(s.lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.lambda_power == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("billiard Perron root lies in (2, 2.5) and kills Q") {
    SpectralData s = perron_root(make_billiard_graph());
    CHECK(s.lambda > 2.0);
    CHECK(s.lambda < 2.5);
    IntPoly q = reciprocal_poly(make_billiard_graph()).q;
    CHECK(std::abs(q.eval(1.0 / s.lambda)) < 1e-9);
    // sign change of the paper's degree-10 factor between 0.4 and 0.5
    CHECK(q.eval(0.4) > 0.0);
    CHECK(q.eval(0.5) < 0.0);
}

TEST_CASE("bipartite K_{2,3}: the shifted iteration still converges") {
    SpectralData s = perron_root(make_complete_bipartite(2, 3));
    // (q1+1, q2+1)-biregular non-backtracking spectrum has Perron root sqrt(q1 q2).
    CHECK(s.lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("eigenvalue bounds hold across the suite") {
    for (const Graph& g : testutil::suite_graphs()) {
        SpectralData s = perron_root(g);
        CHECK(s.lower_bound <= s.lambda + 1e-12);
        CHECK(s.lambda <= s.upper_bound + 1e-12);
        CHECK(std::abs(s.lambda - s.lambda_power) <= 1e-9 * s.lambda);
    }
}

TEST_CASE("zeta(0) = 1 and domain errors") {
    ZetaFunction zf(make_billiard_graph());
    CHECK(zf.eval(0.0) == 1.0);
    CHECK_THROWS_AS(zf.eval(zf.spectral().radius), DomainError);
    CHECK_THROWS_AS(zf.eval(-0.125), DomainError);
}

TEST_CASE("billiard zeta at x = 1/4 equals the published closed form") {
    ZetaFunction zf(make_billiard_graph());
    // independent evaluation of the displayed factorization at x = 1/4
    Rat x = rat(1, 4);
    Rat f(0);
    long coeff[] = {1, 0, 3, -8, -4, -32, -8, -32, 32, 0, 48};
    for (int k = 10; k >= 0; --k) f = f * x + coeff[k];
    Rat one_minus_x2 = 1 - x * x;
    Rat expected = 1 / (one_minus_x2 * one_minus_x2 * one_minus_x2 * f);
    CHECK(zf.eval(0.25) == to_double(expected));
}

TEST_CASE("derivatives at zero") {
    for (const Graph& g : testutil::suite_graphs(4)) {
        ZetaFunction zf(g);
        auto d = zf.derivatives(0.0);
        CHECK(d.zeta == 1.0);
        CHECK(d.zeta_prime == 0.0);
        CHECK(d.zeta_second == 0.0);  // 2 c_2 = tr(T^2) = 0
    }
}

TEST_CASE("derivatives match central finite differences") {
    for (const Graph& g : testutil::suite_graphs(6)) {
        ZetaFunction zf(g);
        double radius = zf.spectral().radius;
        for (int i = 0; i < 10; ++i) {
            double x = (0.15 + 0.55 * i / 9.0) * radius;
            auto d = zf.derivatives(x);

            double h1 = 1e-5 * radius;
            double fd1 = (zf.eval(x + h1) - zf.eval(x - h1)) / (2.0 * h1);
            CHECK(std::abs(fd1 - d.zeta_prime) <= 1e-6 * std::abs(d.zeta_prime));

            double h2 = 1e-4 * radius;
            double fd2 = (zf.eval(x + h2) - 2.0 * zf.eval(x) + zf.eval(x - h2)) / (h2 * h2);
            CHECK(std::abs(fd2 - d.zeta_second) <= 1e-6 * std::abs(d.zeta_second));
        }
    }
}

TEST_CASE("zeta and its derivatives are monotone on the domain") {
    for (const Graph& g : testutil::suite_graphs(4)) {
        ZetaFunction zf(g);
        double radius = zf.spectral().radius;
        double prev_z = 0.0, prev_p = -1.0, prev_s = -1.0;
        for (int i = 0; i <= 100; ++i) {
            double x = 0.95 * radius * i / 100.0;
            auto d = zf.derivatives(x);
            CHECK(d.zeta >= 1.0);
            CHECK(d.zeta >= prev_z);
            CHECK(d.zeta_prime >= prev_p);
            CHECK(d.zeta_second >= prev_s);
            CHECK(d.zeta_second >= 0.0);
            prev_z = d.zeta;
            prev_p = d.zeta_prime;
            prev_s = d.zeta_second;
        }
    }
}

TEST_CASE("zeta grows without bound toward the radius") {
    for (const Graph& g : {make_complete_graph(4), make_billiard_graph()}) {
        ZetaFunction zf(g);
        double prev = 0.0;
        for (int k = 1; k <= 6; ++k) {
            double x = (1.0 - std::pow(10.0, -k)) * zf.spectral().radius;
            double z = zf.eval(x);
            CHECK(z > prev);
            prev = z;
        }
        CHECK(prev > 1e3);  // operational stand-in for divergence
    }
}

TEST_CASE("series tail bound shrinks with the truncation order") {
    SpectralData s = perron_root(make_complete_graph(4));
    double x = 0.3 * s.radius;
    double b8 = series_tail_bound(6, s.lambda, x, 8);
    double b16 = series_tail_bound(6, s.lambda, x, 16);
    CHECK(b16 < b8);
    CHECK(b16 < 1e-8);
}
