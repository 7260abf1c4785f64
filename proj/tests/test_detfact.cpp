#include "doctest.h"

#include <cmath>
#include <random>

#include "frobdet/builtin_groups.hpp"
#include "frobdet/detfact.hpp"

using namespace frobdet;

namespace {

SparsePoly<Rat> monomial(int nv, std::vector<int> e, long num, long den = 1) {
    SparsePoly<Rat> p(nv);
    p.add_term(std::move(e), Rat(num, den));
    return p;
}

} // namespace

TEST_CASE("z2 determinant is X0^2 - X1^2") {
    auto g = builtin_group("z2");
    auto p = expand_group_det(g);
    auto expect = monomial(2, {2, 0}, 1) + monomial(2, {0, 2}, -1);
    CHECK(p == expect);
}

TEST_CASE("z3 determinant is the Humbert polynomial") {
    auto g = builtin_group("z3");
    auto p = expand_group_det(g);
    auto expect = monomial(3, {3, 0, 0}, 1) + monomial(3, {0, 3, 0}, 1) +
                  monomial(3, {0, 0, 3}, 1) + monomial(3, {1, 1, 1}, -3);
    CHECK(p == expect);
}

TEST_CASE("z4 determinant matches the grouped product form") {
    auto g = builtin_group("z4");
    auto p = expand_group_det(g);
    // {(X0+X2)^2 - (X1+X3)^2} {(X0-X2)^2 + (X1-X3)^2}
    auto x0 = SparsePoly<Rat>::variable(4, 0, Rat(1));
    auto x1 = SparsePoly<Rat>::variable(4, 1, Rat(1));
    auto x2 = SparsePoly<Rat>::variable(4, 2, Rat(1));
    auto x3 = SparsePoly<Rat>::variable(4, 3, Rat(1));
    auto a = (x0 + x2) * (x0 + x2) - (x1 + x3) * (x1 + x3);
    auto b = (x0 - x2) * (x0 - x2) + (x1 - x3) * (x1 - x3);
    CHECK(p == a * b);
}

TEST_CASE("klein determinant matches the four-factor form") {
    auto g = builtin_group("klein");
    auto p = expand_group_det(g);
    auto x0 = SparsePoly<Rat>::variable(4, 0, Rat(1));
    auto x1 = SparsePoly<Rat>::variable(4, 1, Rat(1));
    auto x2 = SparsePoly<Rat>::variable(4, 2, Rat(1));
    auto x3 = SparsePoly<Rat>::variable(4, 3, Rat(1));
    auto expect = (x0 + x1 + x2 + x3) * (x0 + x1 - x2 - x3) * (x0 - x1 + x2 - x3) *
                  (x0 - x1 - x2 + x3);
    CHECK(p == expect);
}

TEST_CASE("dedekind factorization verified for the abelian corpus") {
    for (const char* name : {"z2", "z3", "z4", "z6", "klein"}) {
        auto g = builtin_group(name);
        auto f = dedekind_factorization(g);
        CHECK(f.verified);
        CHECK(static_cast<int>(f.factors.size()) == g.n);
    }
    try {
        dedekind_factorization(builtin_group("s3"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "NotAbelian");
    }
}

TEST_CASE("circulant evaluation equals the rational determinant") {
    auto g = builtin_group("z4");
    std::vector<Rat> a{Rat(3), Rat(1, 2), Rat(-2), Rat(5, 3)};
    Rat d = rational_det(frobenius_matrix(g, a));
    std::vector<CD> c;
    for (const auto& v : a) c.emplace_back(to_double(v), 0.0);
    CD ce = circulant_eval(c);
    CHECK(std::abs(ce - CD(to_double(d), 0.0)) < 1e-9 * std::max(1.0, std::abs(to_double(d))));
}

TEST_CASE("s3 phi factorization: 500 seeded rational points") {
    auto g = builtin_group("s3");
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Rat> a;
        for (int i = 0; i < 6; ++i) a.emplace_back(num(rng), den(rng));
        auto phi = s3_phi_eval(a);
        Rat lhs = phi.phi1 * phi.phi2 * phi.phi3 * phi.phi3;
        Rat rhs = rational_det(frobenius_matrix(g, a));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("s3 isotypic blocks: 100 seeded complex points") {
    auto g = builtin_group("s3");
    auto table = character_table_numeric(g, 42);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<CD> c;
        for (int i = 0; i < 6; ++i) c.emplace_back(dist(rng), dist(rng));
        auto dec = isotypic_block_dets(g, table, c);
        REQUIRE(dec.blocks.size() == 3);

        // Dedekind's phi evaluated at the complex point
        auto lin = [&](double s) {
            return c[0] + c[1] + c[2] + s * (c[3] + c[4] + c[5]);
        };
        CD phi1 = lin(1.0), phi2 = lin(-1.0);
        CD phi3 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] - c[3] * c[3] - c[4] * c[4] -
                  c[5] * c[5] - c[0] * c[1] - c[0] * c[2] - c[1] * c[2] + c[3] * c[4] +
                  c[3] * c[5] + c[4] * c[5];
        std::vector<CD> expect{phi1, phi2, phi3 * phi3};
        // match blocks by degree: two degree-1 blocks then the degree-2 block
        std::vector<CD> got;
        for (const auto& b : dec.blocks) got.push_back(b.det);
        // the two linear blocks may come in either order
        auto close = [](CD a, CD b) {
            return std::abs(a - b) <= 1e-8 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
        };
        bool direct = close(got[0], phi1) && close(got[1], phi2);
        bool swapped = close(got[0], phi2) && close(got[1], phi1);
        CHECK((direct || swapped));
        CHECK(close(got[2], phi3 * phi3));
    }
}

TEST_CASE("expansion caps at order 8") {
    std::vector<std::vector<int>> t(9, std::vector<int>(9));
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) t[i][j] = (i + j) % 9;
    auto g = make_group(t, {});
    CHECK_THROWS_AS(expand_group_det(g), Error);
}
