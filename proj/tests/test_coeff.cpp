#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cybra/delta_poly.hpp"
#include "cybra/scalar.hpp"

using namespace cybra;

namespace {

std::mt19937 rng(20240811);

GaussRat random_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return GaussRat(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

DeltaPoly random_poly(int m) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3);
    DeltaPoly p = DeltaPoly::zero(m);
    int t = nterms(rng);
    for (int j = 0; j < t; ++j) {
        DeltaPoly mono = DeltaPoly::constant(m, random_rat());
        for (int v = 0; v < m / 2 + 1; ++v)
            for (int e = expo(rng); e > 0; --e) mono *= DeltaPoly::variable(m, v);
        p += mono;
    }
    return p;
}

} // namespace

TEST_CASE("gaussian rational basics") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
    CHECK((GaussRat(3, 4) + GaussRat(1, 4)) == GaussRat(1));
    CHECK(GaussRat(mpq_class(2), mpq_class(-3)).conj() == GaussRat(mpq_class(2), mpq_class(3)));
    GaussRat z(mpq_class(1, 2), mpq_class(-1, 3));
    CHECK(z / z == GaussRat(1));
    CHECK(z.str() == "1/2-1/3i");
    CHECK(rat_from_string("-3/4") == mpq_class(-3, 4));
    CHECK(rat_to_string(mpq_class(5)) == "5");
    CHECK_THROWS_AS(GaussRat(1) / GaussRat(0), error);
}

TEST_CASE("field axioms on random gaussian rationals") {
    for (int trial = 0; trial < 200; ++trial) {
        GaussRat a = random_rat(), b = random_rat(), c = random_rat();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a / a == GaussRat(1));
    }
}

TEST_CASE("delta monomials") {
    // single loop of label 0 at m=3
    DeltaPoly d0 = delta_monomial({0}, 3);
    CHECK(d0 == DeltaPoly::variable(3, 0));
    // empty multiset is the unit
    CHECK(delta_monomial({}, 3) == DeltaPoly::one(3));
    // {1,1,0} at m=2 gives d0 * d1^2
    DeltaPoly p = delta_monomial({1, 1, 0}, 2);
    DeltaPoly expect = DeltaPoly::variable(2, 0) * DeltaPoly::variable(2, 1) * DeltaPoly::variable(2, 1);
    CHECK(p == expect);
    CHECK_THROWS_AS(delta_monomial({2}, 2), bad_label);
}

TEST_CASE("polynomial arithmetic identities") {
    int m = 3;
    DeltaPoly d0 = DeltaPoly::variable(m, 0), d1 = DeltaPoly::variable(m, 1);
    CHECK((d0 + (-d0)).is_zero());
    CHECK((d0 + DeltaPoly::one(m)) * (d0 - DeltaPoly::one(m)) == d0 * d0 - DeltaPoly::one(m));
    CHECK(d0 * d1 == d1 * d0);
    CHECK_THROWS_AS(DeltaPoly::variable(2, 0) + DeltaPoly::variable(3, 0), context_mismatch);
}

TEST_CASE("ring axioms on random polynomials") {
    for (int trial = 0; trial < 60; ++trial) {
        DeltaPoly a = random_poly(2), b = random_poly(2), c = random_poly(2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("specialize") {
    int m = 2;
    DeltaPoly d0 = DeltaPoly::variable(m, 0), d1 = DeltaPoly::variable(m, 1);
    std::map<int, GaussRat> at{{0, GaussRat(-2)}};
    CHECK(d0.specialize(at) == GaussRat(-2));
    // d0 d1 + d1 at {d0 -> -n, d1 -> 0} vanishes
    DeltaPoly p = d0 * d1 + d1;
    std::map<int, GaussRat> at2{{0, GaussRat(-3)}, {1, GaussRat(0)}};
    CHECK(p.specialize(at2) == GaussRat(0));
    CHECK(DeltaPoly::one(m).specialize({}) == GaussRat(1));
    CHECK_THROWS_AS(d1.specialize(at), missing_assignment);
}

TEST_CASE("specialize is a ring homomorphism") {
    for (int trial = 0; trial < 60; ++trial) {
        DeltaPoly a = random_poly(3), b = random_poly(3);
        std::map<int, GaussRat> at{{0, random_rat()}, {1, random_rat()}};
        CHECK((a * b).specialize(at) == a.specialize(at) * b.specialize(at));
        CHECK((a + b).specialize(at) == a.specialize(at) + b.specialize(at));
    }
}
