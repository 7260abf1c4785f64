#include "doctest.h"

#include <cmath>
#include <complex>

#include "frobdet/builtin_groups.hpp"
#include "frobdet/john.hpp"
#include "frobdet/pde.hpp"

using namespace frobdet;

TEST_CASE("z2 polynomial plane wave is exactly annihilated") {
    auto g = builtin_group("z2");
    auto r = plane_wave_check(g, {CD(1, 0), CD(1, 0)}, "poly3");
    CHECK(r.exact);
    CHECK(r.residual == 0.0);
}

TEST_CASE("z3 exponential plane wave: FD residual small") {
    auto g = builtin_group("z3");
    double c = std::cos(2 * M_PI / 3), s = std::sin(2 * M_PI / 3);
    std::vector<CD> alpha{CD(1, 0), CD(c, s), CD(c * c - s * s, 2 * c * s)};
    auto r = plane_wave_check(g, alpha, "exp");
    CHECK(!r.exact);
    CHECK(r.residual < 1e-5);
}

TEST_CASE("s3 all-ones point lies on the variety and kills polynomials") {
    auto g = builtin_group("s3");
    std::vector<CD> beta(6, CD(1, 0));
    auto r = plane_wave_check(g, beta, "poly4");
    CHECK(r.exact);
    CHECK(r.residual == 0.0);
}

TEST_CASE("off-variety points are rejected") {
    auto g = builtin_group("z2");
    CHECK_THROWS_AS(plane_wave_check(g, {CD(2, 0), CD(1, 0)}, "poly2"), Error);
}

TEST_CASE("FD residual shrinks at the expected order when the step halves") {
    auto g = builtin_group("z2");
    std::vector<CD> alpha{CD(1, 0), CD(1, 0)};
    SparsePoly<Rat> symbol = expand_group_det(g);
    auto w = [&](const std::vector<double>& x) {
        return CD(std::sin(x[0] + x[1]), 0.0) * std::exp(0.2 * (x[0] - x[1]));
    };
    std::vector<double> x0{0.3, 0.7};
    // compare raw (unnormalized) operator values at h and h/2 against the
    // true operator application; the hierarchy must drop at order >= n - 0.5
    auto apply = [&](double h) {
        double scale = 0.0;
        double r = fd_apply_operator(symbol, w, x0, h, &scale);
        return r;
    };
    double r1 = apply(0.2), r2 = apply(0.1);
    double order = std::log2(r1 / r2);
    CHECK(order >= 2 - 0.5);
}

TEST_CASE("separated solutions") {
    SUBCASE("z2 mixed family") {
        auto g = builtin_group("z2");
        auto r = separated_solution_residual(g, {"poly2", "sin"});
        CHECK(r.residual < 1e-5);
    }
    SUBCASE("z3 polynomial family is exact") {
        auto g = builtin_group("z3");
        auto r = separated_solution_residual(g, {"poly2", "poly3", "poly2"});
        CHECK(r.exact);
        CHECK(r.residual == 0.0);
    }
    SUBCASE("z4 mixed family") {
        auto g = builtin_group("z4");
        auto r = separated_solution_residual(g, {"sin", "gauss", "poly2", "exp"});
        CHECK(r.residual < 1e-5);
    }
    SUBCASE("non-abelian groups rejected") {
        auto g = builtin_group("s3");
        CHECK_THROWS_AS(separated_solution_residual(g, {"sin", "sin", "sin", "sin", "sin", "sin"}),
                        Error);
    }
}

namespace {

SparsePoly<Rat> zvar(int f, int j, int l) { return SparsePoly<Rat>::variable(f * f, j * f + l, Rat(1)); }

SparsePoly<Rat> det_z(int f) {
    // only needed for f = 2 here
    return zvar(f, 0, 0) * zvar(f, 1, 1) - zvar(f, 0, 1) * zvar(f, 1, 0);
}

} // namespace

TEST_CASE("cayley operator basics") {
    SUBCASE("f=2: Omega(z11 z22) = 1") {
        auto q = zvar(2, 0, 0) * zvar(2, 1, 1);
        auto r = cayley_omega_apply(2, q);
        CHECK(r == SparsePoly<Rat>::constant(4, Rat(1)));
    }
    SUBCASE("f=2: Omega(det^2) = 6 det") {
        auto d = det_z(2);
        auto r = cayley_omega_apply(2, d * d);
        auto expect = d * SparsePoly<Rat>::constant(4, Rat(6));
        CHECK(r == expect);
    }
    SUBCASE("cayley identity Omega(A*q) = det(A) A*Omega(q)") {
        std::vector<std::vector<Rat>> a{{Rat(2), Rat(1)}, {Rat(-1), Rat(3)}};
        Rat det_a = Rat(2) * 3 - Rat(1) * -1;
        auto d = det_z(2);
        for (const auto& q : {d * d, zvar(2, 0, 0) * zvar(2, 1, 1) * zvar(2, 0, 1)}) {
            auto lhs = cayley_omega_apply(2, matrix_substitute(2, a, q));
            auto rhs = matrix_substitute(2, a, cayley_omega_apply(2, q)) *
                       SparsePoly<Rat>::constant(4, det_a);
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("rank-deficient substitution kills det powers") {
        // f=3, rank-2 A applied to det(Z)^2
        int f = 3;
        auto z = [f](int j, int l) { return zvar(f, j, l); };
        SparsePoly<Rat> d(f * f);
        int idx[3] = {0, 1, 2};
        // det of 3x3 via explicit formula
        d = z(0, 0) * (z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1)) -
            z(0, 1) * (z(1, 0) * z(2, 2) - z(1, 2) * z(2, 0)) +
            z(0, 2) * (z(1, 0) * z(2, 1) - z(1, 1) * z(2, 0));
        (void)idx;
        std::vector<std::vector<Rat>> a{{Rat(1), Rat(0), Rat(1)},
                                        {Rat(0), Rat(1), Rat(1)},
                                        {Rat(1), Rat(1), Rat(2)}}; // rank 2
        auto r = cayley_omega_apply(3, matrix_substitute(3, a, d * d));
        CHECK(r.is_zero());
    }
}

TEST_CASE("polarization commutators") {
    SUBCASE("f=2 examples") {
        auto q = zvar(2, 1, 0) * zvar(2, 1, 0) * zvar(2, 1, 1);
        auto r = polarization_commutator_check(2, 0, 1, 1, q);
        CHECK(r.ok);
        CHECK_THROWS_AS(polarization_commutator_check(2, 1, 1, 1, q), Error);
    }
    SUBCASE("f=3, r=2, degree-4 polynomial") {
        auto q = zvar(3, 1, 0) * zvar(3, 1, 1) * zvar(3, 2, 2) * zvar(3, 0, 0) +
                 zvar(3, 2, 0) * zvar(3, 2, 1) * zvar(3, 1, 2) * zvar(3, 0, 1);
        auto r = polarization_commutator_check(3, 0, 1, 2, q);
        CHECK(r.ok);
    }
    SUBCASE("Delta^r of a row-l function stays in ker Omega") {
        auto fl = zvar(2, 1, 0) * zvar(2, 1, 0) * zvar(2, 1, 0) + zvar(2, 1, 0) * zvar(2, 1, 1);
        auto moved = fl;
        auto delta = [&](const SparsePoly<Rat>& p) {
            SparsePoly<Rat> out(4);
            for (int m = 0; m < 2; ++m)
                out = out + zvar(2, 0, m) * p.derivative(1 * 2 + m);
            return out;
        };
        for (int r = 1; r <= 2; ++r) {
            moved = delta(moved);
            CHECK(cayley_omega_apply(2, moved).is_zero());
        }
    }
}

TEST_CASE("john transform") {
    SUBCASE("unit box polynomial case") {
        JohnParams p;
        p.lambda = {1.0, 1.0, 1.0};
        p.alpha1 = -1.0;
        p.alpha2 = -1.0;
        p.beta1 = 1.0;
        p.beta2 = 1.0;
        auto r = john_transform_numeric(p);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(john_hypergeometric_closed(p) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("half-integer exponents match the closed form") {
        JohnParams p;
        p.lambda = {0.5, 0.5, 0.5};
        p.alpha1 = -1.0;
        p.alpha2 = -2.0;
        p.beta1 = 3.0;
        p.beta2 = 4.0;
        auto r = john_transform_numeric(p);
        double cf = john_hypergeometric_closed(p);
        CHECK(std::abs(r.value - cf) < 1e-6);
    }
    SUBCASE("divergent unbounded case rejected") {
        JohnParams p;
        p.lambda = {2.0, 1.0, 1.0};
        p.alpha1 = 1.0; // unbounded support
        p.alpha2 = 1.0;
        p.beta1 = 1.0;
        p.beta2 = 1.0;
        CHECK_THROWS_AS(john_transform_numeric(p), Error);
    }
    SUBCASE("series domain guard") {
        JohnParams p;
        p.lambda = {0.5, 0.5, 0.5};
        p.alpha1 = -4.0; // x = alpha1 beta2 / (alpha2 beta1) = 16/3 >= 1
        p.alpha2 = -1.0;
        p.beta1 = 3.0;
        p.beta2 = 4.0;
        CHECK_THROWS_AS(john_hypergeometric_closed(p), Error);
    }
}

TEST_CASE("omega9 kernel residual") {
    std::vector<double> alpha{1.0, 0.2, 0.1}, beta{0.15, 1.0, 0.25}, gamma{0.1, 0.2, 1.0};
    auto r = omega9_kernel_residual("gauss", alpha, beta, gamma);
    CHECK(r.residual < 1e-3);
    auto r2 = omega9_kernel_residual("xgauss", alpha, beta, gamma);
    CHECK(r2.residual < 1e-3);
    // degenerate point: two coinciding alpha-columns
    auto r3 = omega9_kernel_residual("gauss", {0.5, 0.5, 0.1}, beta, gamma);
    CHECK(r3.residual < 1e-3);
}
