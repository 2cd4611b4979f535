#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybra/json_io.hpp"
#include "cybra/schur_weyl.hpp"

using namespace cybra;

TEST_CASE("group context construction and invariants") {
    for (GroupSpec spec : {GroupSpec::sp(1), GroupSpec::sp(2), GroupSpec::sp(3), GroupSpec::sp(4),
                           GroupSpec::so(2, 1), GroupSpec::so(3, 2), GroupSpec::so(4, 1),
                           GroupSpec::so(4, 3)}) {
        GroupContext ctx = group_context(spec);
        CHECK(ctx.xi * ctx.xi == GaussMat::identity(ctx.dimV));
        for (const auto& x : ctx.lie_basis) CHECK(commutator(x, ctx.xi).is_zero());
    }
    CHECK(group_context(GroupSpec::sp(2)).lie_basis.size() == 4);
    CHECK(group_context(GroupSpec::so(3, 2)).lie_basis.size() == 4);
    CHECK_THROWS_AS(group_context(GroupSpec::so(2, 2)), bad_spec);
    CHECK_THROWS_AS(group_context(GroupSpec::so(3, 0)), bad_spec);
    CHECK_THROWS_AS(group_context(GroupSpec::sp(0)), bad_spec);
}

TEST_CASE("xi matches the stated action") {
    GroupContext so = group_context(GroupSpec::so(3, 2));
    GaussMat expected(5, 5);
    for (int j = 0; j < 5; ++j) expected.set(j, j, GaussRat(j < 3 ? 1 : -1));
    CHECK(so.xi == expected);

    // Sp(2): xi(e_1 + e_3) = i (e_1 - e_3)
    GroupContext sp = group_context(GroupSpec::sp(2));
    SparseVec f1{{0, GaussRat(1)}, {2, GaussRat(1)}};
    SparseVec img = sp.xi.apply(f1);
    SparseVec expect{{0, GaussRat::i()}, {2, -GaussRat::i()}};
    CHECK(img == expect);
}

TEST_CASE("corrupted contexts are rejected with the failing check named") {
    GroupContext ctx = group_context(GroupSpec::sp(2));
    GroupContext bad = ctx;
    bad.xi.set(0, 2, GaussRat(1)); // sign/shape corruption
    CHECK_THROWS_WITH_AS(check_context_invariants(bad), doctest::Contains("xi"),
                         invariant_violation);
    GroupContext bad2 = ctx;
    bad2.v1[0].second = GaussRat(2); // breaks g.v1 = 0
    CHECK_THROWS_WITH_AS(check_context_invariants(bad2), doctest::Contains("annihilate"),
                         invariant_violation);
}

TEST_CASE("tensor operators satisfy the basic identities") {
    for (GroupSpec spec : {GroupSpec::sp(2), GroupSpec::so(3, 2)}) {
        GroupContext ctx = group_context(spec);
        GaussMat s = swap_operator(ctx, 2, 1);
        CHECK(s * s == GaussMat::identity(s.rows()));
        GaussMat x = xi_operator(ctx, 2, 1);
        CHECK(x * x == GaussMat::identity(x.rows()));
        GaussMat e = contract_operator(ctx, 2, 1);
        DeltaReport d = measure_deltas(ctx);
        GaussMat scaled = e;
        scaled.scale(d.delta0);
        CHECK(e * e == scaled);
    }
}

TEST_CASE("brauer operators commute with the compact algebra") {
    for (GroupSpec spec : {GroupSpec::sp(2), GroupSpec::so(3, 2), GroupSpec::so(4, 1)}) {
        Realization rea(spec, 2);
        std::vector<GaussMat> ops{swap_operator(rea.ctx(), 2, 1), contract_operator(rea.ctx(), 2, 1),
                                  xi_operator(rea.ctx(), 2, 1), xi_operator(rea.ctx(), 2, 2)};
        for (const auto& lie : rea.lie_ops())
            for (const auto& op : ops) CHECK(commutator(lie, op).is_zero());
    }
}

TEST_CASE("measured loop parameters") {
    DeltaReport so32 = measure_deltas(group_context(GroupSpec::so(3, 2)));
    CHECK(so32.delta0 == GaussRat(5));
    CHECK(so32.delta1 == GaussRat(1));
    CHECK(so32.xi_pair_sign == GaussRat(1));

    DeltaReport sp2 = measure_deltas(group_context(GroupSpec::sp(2)));
    CHECK(sp2.delta0 == GaussRat(-4));
    CHECK(sp2.delta1 == GaussRat(0));
    // structural obstruction of the symplectic family
    CHECK(sp2.xi_pair_sign == GaussRat(-1));

    for (int n = 1; n <= 4; ++n) {
        DeltaReport d = measure_deltas(group_context(GroupSpec::sp(n)));
        CHECK(d.delta1 == GaussRat(0));
        CHECK(d.delta0 == GaussRat(-2 * n));
    }
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 1}, {4, 3}}) {
        DeltaReport d = measure_deltas(group_context(GroupSpec::so(p, q)));
        CHECK(d.delta1 == GaussRat(p - q));
        CHECK(d.delta0 == GaussRat(p + q));
    }
}

TEST_CASE("deltas are invariant under a change of basis") {
    // conjugate the whole realization by the split-basis change and remeasure
    for (GroupSpec spec : {GroupSpec::sp(2), GroupSpec::so(3, 2)}) {
        GroupContext ctx = group_context(spec);
        const GaussMat& p = ctx.basis_change;
        GaussMat pinv = ctx.basis_change_inv;
        GroupContext conj = ctx;
        conj.form = p.transpose() * ctx.form * p;
        conj.xi = pinv * ctx.xi * p;
        GaussMat p2 = kron(pinv, pinv);
        SparseVec v1;
        {
            GaussMat v1m = GaussMat::unflatten(ctx.v1, ctx.dimV * ctx.dimV, 1);
            v1 = (p2 * v1m).flatten();
        }
        conj.v1 = v1;
        DeltaReport before = measure_deltas(ctx);
        DeltaReport after = measure_deltas(conj);
        CHECK(before.delta0 == after.delta0);
        CHECK(before.delta1 == after.delta1);
        CHECK(before.xi_pair_sign == after.xi_pair_sign);
    }
}

TEST_CASE("phi of elements: identity, absorption, sandwich") {
    Realization rea(GroupSpec::so(3, 2), 2);
    CHECK(rea.phi(AlgebraElement::identity(2, 2)) == GaussMat::identity(25));
    AlgebraElement t = generator(GeneratorKind::T, 1, 2, 2);
    AlgebraElement e = generator(GeneratorKind::E, 1, 2, 2);
    // phi(t e) = phi(e)
    CHECK(rea.phi(t * e) == rea.phi(e));
    // phi(e theta e) = delta1 phi(e)
    AlgebraElement th = generator(GeneratorKind::Theta, 1, 2, 2);
    GaussMat lhs = rea.phi(e * th * e);
    GaussMat rhs = rea.phi(e);
    rhs.scale(rea.deltas().delta1);
    CHECK(lhs == rhs);
}

TEST_CASE("verify_phi passes fully for the orthogonal family") {
    for (GroupSpec spec : {GroupSpec::so(3, 2), GroupSpec::so(2, 1)}) {
        Realization rea(spec, 2);
        for (const auto& r : verify_phi(rea)) {
            INFO(spec.name() << " relation " << r.relation_id);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("verify_phi for Sp: everything passes except the xi-pair absorption") {
    Realization rea(GroupSpec::sp(2), 2);
    for (const auto& r : verify_phi(rea)) {
        INFO("relation " << r.relation_id);
        if (r.relation_id == "phi_xi_pair_absorption" || r.relation_id == "phi_homomorphism_pairs") {
            CHECK_FALSE(r.passed()); // structural sign obstruction, reported as data
        } else {
            CHECK(r.passed());
        }
    }
}

TEST_CASE("the symplectic homomorphism defect is a pure sign") {
    // 32 of the 144 pairs at k=2 fail, every one off by exactly -1: the
    // obstruction is a sign cocycle on products where marks meet a
    // contraction, never a structural mismatch
    Realization rea(GroupSpec::sp(2), 2);
    int fails = 0;
    for (const auto& a : rea.basis_diagrams())
        for (const auto& b : rea.basis_diagrams()) {
            AlgebraElement prod = AlgebraElement::from_diagram(a) * AlgebraElement::from_diagram(b);
            GaussMat lhs = rea.image_of(a) * rea.image_of(b);
            GaussMat rhs = rea.phi(prod);
            if (lhs == rhs) continue;
            ++fails;
            rhs.scale(GaussRat(-1));
            CHECK(lhs == rhs);
        }
    CHECK(fails == 32);
}

TEST_CASE("crossing parity") {
    CHECK(crossing_parity(BrauerDiagram::identity(3)) == 0);
    // a single transposition crosses once
    CHECK(crossing_parity(diagram_from_text("t1-b2,t2-b1,t3-b3", 3, 1).strip_labels()) == 1);
    // cup/cap pairs are planar
    CHECK(crossing_parity(diagram_from_text("t1-t2,b1-b2", 2, 1).strip_labels()) == 0);
    // parity of through-only diagrams equals the permutation sign
    CHECK(crossing_parity(diagram_from_text("t1-b2,t2-b3,t3-b1", 3, 1).strip_labels()) == 0);
}

TEST_CASE("symplectic crossing sign makes the swap image negative") {
    Realization rea(GroupSpec::sp(2), 2);
    const LabeledDiagram t = generator(GeneratorKind::T, 1, 2, 2).terms().begin()->first;
    GaussMat img = rea.image_of(t);
    GaussMat s = swap_operator(rea.ctx(), 2, 1);
    s.scale(GaussRat(-1));
    CHECK(img == s);
    // orthogonal family keeps the plain swap
    Realization so(GroupSpec::so(3, 2), 2);
    CHECK(so.image_of(t) == swap_operator(so.ctx(), 2, 1));
}

TEST_CASE("verify_phi at three tensor factors exercises the braid relations") {
    {
        Realization rea(GroupSpec::so(3, 2), 3);
        for (const auto& r : verify_phi(rea)) {
            INFO("so(3,2) k=3 relation " << r.relation_id);
            CHECK(r.passed());
        }
    }
    {
        Realization rea(GroupSpec::sp(2), 3);
        for (const auto& r : verify_phi(rea)) {
            INFO("sp(2) k=3 relation " << r.relation_id);
            if (r.relation_id == "phi_xi_pair_absorption")
                CHECK_FALSE(r.passed());
            else
                CHECK(r.passed());
        }
    }
}

TEST_CASE("phi ranks: faithful exactly when k <= rank(G)") {
    {
        Realization rea(GroupSpec::sp(2), 2);
        PhiRankReport r = phi_faithful(rea);
        CHECK(r.expected == 12);
        CHECK(r.rank == 12);
        CHECK(r.injective);
    }
    {
        Realization rea(GroupSpec::so(3, 2), 2);
        PhiRankReport r = phi_faithful(rea);
        CHECK(r.rank == 12);
        CHECK(r.injective);
    }
    {
        // k exceeds the rank: the map cannot stay injective
        Realization rea(GroupSpec::sp(1), 2);
        PhiRankReport r = phi_faithful(rea);
        CHECK(r.rank < r.expected);
        CHECK_FALSE(r.injective);
    }
}

TEST_CASE("commutant equals the diagram image span at small rank") {
    {
        Realization rea(GroupSpec::sp(2), 1);
        CommutantReport r = commutant_check(rea);
        CHECK(r.commutant_dim == 2);
        CHECK(r.image_dim == 2);
        CHECK(r.equal);
    }
    {
        Realization rea(GroupSpec::sp(2), 2);
        CommutantReport r = commutant_check(rea);
        CHECK(r.commutant_dim == 12);
        CHECK(r.image_dim == 12);
        CHECK(r.equal);
    }
    {
        Realization rea(GroupSpec::so(3, 2), 2);
        CommutantReport r = commutant_check(rea);
        CHECK(r.commutant_dim == 12);
        CHECK(r.equal);
    }
}

TEST_CASE("gl_2 inside sp_4 on two tensor factors has a 12-dimensional commutant") {
    Realization rea(GroupSpec::sp(2), 2);
    CHECK(commutant_basis(rea.lie_ops(), 16).dim() == 12);
}

TEST_CASE("image span and centralizer agree as echelonized subspaces") {
    // the subspace-comparison route, next to the dimension+containment route
    Realization rea(GroupSpec::sp(2), 2);
    const GaussMat& p = rea.ctx().basis_change;
    GaussMat pk = kron(kron(GaussMat::identity(1), p), p);
    GaussMat pk_inv = invert(pk);
    std::vector<SparseVec> conj_images;
    for (size_t i = 0; i < rea.basis_diagrams().size(); ++i)
        conj_images.push_back((pk_inv * rea.image(i) * pk).flatten());
    Subspace image_span = span_of(conj_images, rea.dim() * rea.dim());
    CHECK(subspace_equal(image_span, rea.commutant_split()));
}

TEST_CASE("a corrupted involution is caught by the scalar-multiple guard") {
    GroupContext ctx = group_context(GroupSpec::so(3, 2));
    // swap e_3 and e_4: still an involution, but xi (x) xi moves v1 off the
    // line spanned by v1, so the pair measurement cannot be a scalar
    GroupContext bad = ctx;
    bad.xi = GaussMat(5, 5);
    bad.xi.set(0, 0, GaussRat(1));
    bad.xi.set(1, 1, GaussRat(1));
    bad.xi.set(2, 3, GaussRat(1));
    bad.xi.set(3, 2, GaussRat(1));
    bad.xi.set(4, 4, GaussRat(-1));
    CHECK_THROWS_AS(measure_deltas(bad), not_scalar_multiple);
}

TEST_CASE("sp block decomposition at n=2, k=2") {
    Realization rea(GroupSpec::sp(2), 2);
    SectorReport rep = decompose_sp(rea);
    CHECK(rep.off_block_zero);
    REQUIRE(rep.sectors.size() == 3);
    CHECK(rep.sectors[0].block_dim == 2);
    CHECK(rep.sectors[1].block_dim == 8);
    CHECK(rep.sectors[2].block_dim == 2);
    CHECK(rep.total_dim == 12);
    for (const auto& s : rep.sectors) CHECK(s.block_dim == s.expected);
    // trivial case k=0
    Realization rea0(GroupSpec::sp(2), 0);
    SectorReport rep0 = decompose_sp(rea0);
    CHECK(rep0.total_dim == 1);
    CHECK(rep0.off_block_zero);
    CHECK(rep0.sectors[0].block_dim == 1);
}

TEST_CASE("sector dimension identity as integers") {
    for (int k = 0; k <= 12; ++k) {
        long long sum = 0;
        for (int s = 0; s <= k; ++s) sum += binomial(k, s) * binomial(k, s) * factorial(k);
        CHECK(sum == count_diagrams(k, 2));
    }
}

TEST_CASE("k-type counts match bipartition counts") {
    {
        Realization rea(GroupSpec::sp(2), 1);
        CHECK(count_ktypes(rea) == 2);
        CHECK(count_bipartitions(1) == 2);
    }
    {
        Realization rea(GroupSpec::sp(2), 2);
        CHECK(count_ktypes(rea) == 6);
        CHECK(count_bipartitions(2) == 6);
    }
    {
        Realization rea(GroupSpec::so(3, 2), 2);
        CHECK(count_ktypes(rea) == 6);
    }
}

TEST_CASE("outside the split-rank range the centralizer shrinks but surjectivity survives") {
    // For the orthogonal family the full (2k)!/k! centralizer requires
    // k <= min(p, q), not k <= (p+q-1)/2: an O(1) or O(2) block leaves its
    // stable range first.  At so(4,1) and so(2,1) with k=2 the exact
    // dimension is 10 (blocks 3 + 4 + 1 + 2 over the isotypic pieces), and
    // the diagram image span still equals the centralizer.
    for (GroupSpec spec : {GroupSpec::so(4, 1), GroupSpec::so(2, 1)}) {
        Realization rea(spec, 2);
        CommutantReport r = commutant_check(rea);
        CHECK(r.commutant_dim == 10);
        CHECK(r.image_dim == 10);
        CHECK(r.equal);
        CHECK_FALSE(phi_faithful(rea).injective);
    }
    // inside the split-rank range the count is full
    {
        Realization rea(GroupSpec::so(4, 3), 2);
        CommutantReport r = commutant_check(rea);
        CHECK(r.commutant_dim == 12);
        CHECK(r.equal);
    }
}

TEST_CASE("walled centralizer dimensions") {
    WalledCentralizerReport a = walled_centralizer_check(2, 1, 1);
    CHECK(a.commutant_dim == 2);
    CHECK(a.equal);
    WalledCentralizerReport b = walled_centralizer_check(3, 2, 1);
    CHECK(b.commutant_dim == 6);
    CHECK(b.equal);
    WalledCentralizerReport c = walled_centralizer_check(2, 0, 0);
    CHECK(c.commutant_dim == 1);
    CHECK(c.equal);
}

TEST_CASE("report serialization shapes") {
    Realization rea(GroupSpec::so(3, 2), 2);
    json dj = deltas_to_json(rea.deltas());
    CHECK(dj["measured"]["delta0"]["re"] == "5");
    CHECK(dj["paper"]["delta0"] == "2");
    CHECK(dj["delta0_matches_paper"] == false);
    CHECK(dj["delta1_matches_paper"] == true);
    json cj = commutant_to_json(commutant_check(rea));
    CHECK(cj["equal"] == true);
    json ctx = context_to_json(rea.ctx());
    CHECK(ctx["dim_v"] == 5);
    CHECK(matrix_from_json(ctx["xi"]) == rea.ctx().xi);
}
