#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cybra/algebra.hpp"
#include "cybra/json_io.hpp"

using namespace cybra;

namespace {
AlgebraElement gen_t(int i, int k, int m) { return generator(GeneratorKind::T, i, k, m); }
AlgebraElement gen_e(int i, int k, int m) { return generator(GeneratorKind::E, i, k, m); }
AlgebraElement gen_th(int i, int k, int m) { return generator(GeneratorKind::Theta, i, k, m); }
} // namespace

TEST_CASE("generators are the expected diagrams") {
    CHECK(gen_th(1, 1, 2) == AlgebraElement::from_diagram(diagram_from_text("t1-b1:1", 1, 2)));
    CHECK(gen_t(1, 2, 2) == AlgebraElement::from_diagram(diagram_from_text("t1-b2,t2-b1", 2, 2)));
    CHECK(gen_e(1, 2, 2) == AlgebraElement::from_diagram(diagram_from_text("t1-t2,b1-b2", 2, 2)));
    CHECK_THROWS_AS(gen_t(2, 2, 2), index_out_of_range);
    CHECK_THROWS_AS(gen_th(3, 2, 2), index_out_of_range);
}

TEST_CASE("basic algebra relations via multiplication") {
    int k = 2, m = 2;
    AlgebraElement e = gen_e(1, k, m), t = gen_t(1, k, m);
    // e^2 = delta_0 e
    AlgebraElement e2 = e * e;
    AlgebraElement expected = e;
    expected.scale(DeltaPoly::variable(m, 0));
    CHECK(e2 == expected);
    // t e = e
    CHECK(t * e == e);
    // 1 x = x
    CHECK(AlgebraElement::identity(k, m) * e == e);
    CHECK_THROWS_AS(e * AlgebraElement::identity(3, 2), context_mismatch);
}

TEST_CASE("presentation holds symbolically at several ranks") {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {2, 3}}) {
        auto reports = verify_presentation(k, m);
        for (const auto& r : reports) {
            INFO(r.relation_id << " at k=" << k << " m=" << m);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("e theta^l e = delta_l e at k=2 m=3") {
    int k = 2, m = 3;
    AlgebraElement e = gen_e(1, k, m), th = gen_th(1, k, m);
    AlgebraElement lhs = e * th * e;
    AlgebraElement rhs = e;
    rhs.scale(DeltaPoly::variable(m, 1));
    CHECK(lhs == rhs);
    // theta^2 on the same strand picks up delta_{min(2, 3-2)} = delta_1 as well
    AlgebraElement lhs2 = e * th * th * e;
    CHECK(lhs2 == rhs);
}

TEST_CASE("presentation at ranks 0 and 1 is vacuous but well-formed") {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}}) {
        for (const auto& r : verify_presentation(k, m)) {
            INFO(r.relation_id << " at k=" << k << " m=" << m);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("m=1 degenerates to the classical Brauer relations") {
    auto reports = verify_presentation(2, 1);
    for (const auto& r : reports) CHECK(r.passed());
    // theta is the identity when m=1
    CHECK(gen_th(1, 2, 1) == AlgebraElement::identity(2, 1));
}

TEST_CASE("associativity of elem multiplication") {
    // exhaustive on all basis diagram triples for k=2, m=2
    auto basis = enumerate_diagrams(2, 2);
    for (const auto& a : basis)
        for (const auto& b : basis)
            for (const auto& c : basis) {
                AlgebraElement ea = AlgebraElement::from_diagram(a);
                AlgebraElement eb = AlgebraElement::from_diagram(b);
                AlgebraElement ec = AlgebraElement::from_diagram(c);
                CHECK((ea * eb) * ec == ea * (eb * ec));
            }
    // randomized samples at k=4, m=2
    std::mt19937 rng(7);
    auto basis4 = enumerate_diagrams(4, 2);
    std::uniform_int_distribution<size_t> pick(0, basis4.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        AlgebraElement a = AlgebraElement::from_diagram(basis4[pick(rng)]);
        AlgebraElement b = AlgebraElement::from_diagram(basis4[pick(rng)]);
        AlgebraElement c = AlgebraElement::from_diagram(basis4[pick(rng)]);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("walled basis counts and closure") {
    CHECK(walled_basis(1, 1).size() == 2);
    CHECK(walled_basis(2, 1).size() == 6);
    CHECK(walled_basis(0, 0).size() == 1);
    for (int s = 0; s <= 3; ++s)
        for (int t = 0; s + t <= 5 && t <= 3; ++t) {
            CHECK(static_cast<long long>(walled_basis(s, t).size()) == factorial(s + t));
            CHECK(walled_closed_under_mul(s, t));
        }
    // the identity and the crossing horizontal pair at s=t=1
    auto b11 = walled_basis(1, 1);
    CHECK(b11[0] == BrauerDiagram(2, {{0, 1}, {2, 3}}));
    CHECK(b11[1] == BrauerDiagram::identity(2));
}

TEST_CASE("element json round-trip") {
    AlgebraElement x = gen_e(1, 2, 2) * gen_th(1, 2, 2) + gen_t(1, 2, 2);
    x.scale(GaussRat(mpq_class(3, 2), mpq_class(-1, 3)));
    json j = element_to_json(x);
    CHECK(element_from_json(j) == x);
    // polynomial serialization alone
    DeltaPoly p = DeltaPoly::variable(2, 0) * DeltaPoly::variable(2, 1) + DeltaPoly::one(2);
    CHECK(poly_from_json(poly_to_json(p), 2) == p);
}
