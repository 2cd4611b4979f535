#ifndef CYBRA_ACCEPTANCE_HPP
#define CYBRA_ACCEPTANCE_HPP

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cybra/algebra.hpp"
#include "cybra/combinatorics.hpp"
#include "cybra/schur_weyl.hpp"

namespace cybra {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail; // first failing check, or a short summary
    long long millis = 0;
};

enum class SizeProfile { Small, Full };

namespace acceptance_detail {

struct Collector {
    bool ok = true;
    std::ostringstream first_failure;
    std::ostringstream summary;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure << what;
        }
    }
    template <typename T, typename U>
    void require_eq(const T& got, const U& expected, const std::string& what) {
        if (!(got == static_cast<T>(expected)) && ok) {
            ok = false;
            first_failure << what << ": got " << got << ", expected " << expected;
        }
    }
};

inline std::vector<GroupSpec> so_specs() {
    return {GroupSpec::so(2, 1), GroupSpec::so(3, 2), GroupSpec::so(4, 1), GroupSpec::so(4, 3)};
}

// 1. diagram counts
inline void criterion_counts(Collector& c, SizeProfile profile) {
    int kmax = profile == SizeProfile::Small ? 2 : 4;
    for (int k = 0; k <= kmax; ++k)
        for (int m = 1; m <= 3; ++m) {
            long long got = static_cast<long long>(enumerate_diagrams(k, m).size());
            c.require_eq(got, count_diagrams(k, m),
                         "enumerate(" + std::to_string(k) + "," + std::to_string(m) + ")");
        }
    c.require_eq(count_diagrams(2, 2), 12LL, "count(2,2)");
    c.require_eq(count_diagrams(3, 1), 15LL, "count(3,1)");
    c.require_eq(count_diagrams(4, 2), 1680LL, "count(4,2)");
    c.summary << "all (k<=" << kmax << ", m<=3) enumerations match (2k)! m^k / (k! 2^k)";
}

// 2. presentations
inline void criterion_presentations(Collector& c, SizeProfile profile) {
    std::vector<std::pair<int, int>> cases;
    int k2 = profile == SizeProfile::Small ? 2 : 4;
    int k3 = profile == SizeProfile::Small ? 2 : 3;
    for (int k = 2; k <= k2; ++k) cases.emplace_back(k, 2);
    for (int k = 2; k <= k3; ++k) cases.emplace_back(k, 3);
    long long instances = 0;
    for (auto [k, m] : cases)
        for (const auto& r : verify_presentation(k, m)) {
            instances += r.instances_checked;
            if (!r.passed())
                c.require(false, "relation " + r.relation_id + " at k=" + std::to_string(k) +
                                     ", m=" + std::to_string(m) + ": " + r.failures.front().first);
        }
    c.summary << instances << " relation instances, including the wreath-product tables";
}

// 3. loop parameters + verify_phi
inline void criterion_deltas(Collector& c, SizeProfile) {
    bool deltas_ok = true;
    std::vector<std::string> relation_failures;
    auto run_group = [&](const GroupSpec& spec, const GaussRat& expected_delta1) {
        Realization& rea = get_realization(spec, 2);
        const DeltaReport& d = rea.deltas();
        if (d.delta1 != expected_delta1 || d.delta0.is_zero()) {
            deltas_ok = false;
            c.require(false, spec.name() + ": measured deltas wrong (delta0 " + d.delta0.str() +
                                 ", delta1 " + d.delta1.str() + ")");
        }
        for (const auto& r : verify_phi(rea))
            if (!r.passed())
                relation_failures.push_back(spec.name() + " " + r.relation_id + " [xi pair sign " +
                                            d.xi_pair_sign.str() + "]");
    };
    for (const auto& spec : so_specs()) run_group(spec, GaussRat(spec.p - spec.q));
    for (int n = 1; n <= 4; ++n) run_group(GroupSpec::sp(n), GaussRat(0));
    if (!relation_failures.empty()) {
        std::string msg = deltas_ok ? "measured deltas all correct and recorded beside the stated "
                                      "values, but the operator relations fail for: "
                                    : "relation failures: ";
        for (size_t i = 0; i < relation_failures.size(); ++i)
            msg += (i ? "; " : "") + relation_failures[i];
        msg += " -- the symplectic involution pair acts by -1 on the invariant pairing "
               "(structural obstruction, reported as measured; orthogonal family fully green)";
        c.require(false, msg);
    }
    c.summary << "measured deltas recorded beside stated values for all eight groups";
}

// 4. faithfulness
inline void criterion_faithfulness(Collector& c, SizeProfile profile) {
    std::vector<std::pair<GroupSpec, int>> cases{{GroupSpec::sp(2), 2}, {GroupSpec::sp(3), 2},
                                                 {GroupSpec::so(3, 2), 2}};
    if (profile == SizeProfile::Full) cases.emplace_back(GroupSpec::sp(3), 3);
    for (auto& [spec, k] : cases) {
        PhiRankReport r = phi_faithful(get_realization(spec, k));
        c.require(r.injective, spec.name() + " k=" + std::to_string(k) + ": rank " +
                                   std::to_string(r.rank) + " != " + std::to_string(r.expected));
        c.summary << spec.name() << " k=" << k << " rank " << r.rank << "; ";
    }
}

// 5. full centralizer
inline void criterion_commutant(Collector& c, SizeProfile profile) {
    // expected dimension = diagram count (2k)!/k! inside the stable range
    // k <= rank(G); the so(3,2) k=3 case sits outside it (rank 2) and the
    // true dimension drops to 115: the O(2)-block Hom space at six tensor
    // factors has dimension 10, not the 15 diagrams, costing 5.  Surjectivity
    // (image span = centralizer) is the claim that survives there.
    std::vector<std::tuple<GroupSpec, int, int>> cases{{GroupSpec::sp(2), 1, 2},
                                                       {GroupSpec::sp(2), 2, 12},
                                                       {GroupSpec::sp(3), 2, 12},
                                                       {GroupSpec::so(3, 2), 2, 12}};
    if (profile == SizeProfile::Full) {
        cases.emplace_back(GroupSpec::sp(3), 3, 120);
        cases.emplace_back(GroupSpec::so(3, 2), 3, 115);
    }
    for (auto& [spec, k, expected] : cases) {
        CommutantReport r = commutant_check(get_realization(spec, k));
        c.require(r.equal, spec.name() + " k=" + std::to_string(k) + ": commutant " +
                               std::to_string(r.commutant_dim) + " vs image " +
                               std::to_string(r.image_dim));
        c.require_eq(r.commutant_dim, expected,
                     spec.name() + " k=" + std::to_string(k) + " centralizer dimension");
        c.summary << spec.name() << " k=" << k << " dim " << r.commutant_dim << "; ";
    }
    if (profile == SizeProfile::Full)
        c.summary << "(so(3,2) k=3 is outside the stable range k <= rank, dim 115 is exact)";
}

// 6. sp block decomposition
inline void criterion_decompose(Collector& c, SizeProfile profile) {
    {
        SectorReport rep = decompose_sp(get_realization(GroupSpec::sp(2), 2));
        c.require(rep.off_block_zero, "sp(2) k=2: off-sector entries present");
        std::vector<int> dims;
        for (const auto& s : rep.sectors) dims.push_back(s.block_dim);
        c.require(dims == std::vector<int>{2, 8, 2}, "sp(2) k=2: sector dims not [2,8,2]");
    }
    if (profile == SizeProfile::Full) {
        SectorReport rep = decompose_sp(get_realization(GroupSpec::sp(3), 3));
        c.require(rep.off_block_zero, "sp(3) k=3: off-sector entries present");
        std::vector<int> dims;
        for (const auto& s : rep.sectors) dims.push_back(s.block_dim);
        c.require(dims == std::vector<int>{6, 54, 54, 6}, "sp(3) k=3: sector dims not [6,54,54,6]");
    }
    for (int k = 0; k <= 12; ++k) {
        long long sum = 0;
        for (int s = 0; s <= k; ++s) sum += binomial(k, s) * binomial(k, s) * factorial(k);
        c.require_eq(sum, count_diagrams(k, 2), "sector sum identity at k=" + std::to_string(k));
    }
    c.summary << "sector dims and the k<=12 integer identity check out";
}

// 7. walled Brauer
inline void criterion_walled(Collector& c, SizeProfile profile) {
    int cap = profile == SizeProfile::Small ? 4 : 5;
    for (int s = 0; s <= cap; ++s)
        for (int t = 0; s + t <= cap; ++t) {
            c.require_eq(static_cast<long long>(walled_basis(s, t).size()), factorial(s + t),
                         "walled_basis(" + std::to_string(s) + "," + std::to_string(t) + ") count");
            c.require(walled_closed_under_mul(s, t),
                      "walled span not closed at (" + std::to_string(s) + "," + std::to_string(t) + ")");
        }
    WalledCentralizerReport a = walled_centralizer_check(2, 1, 1);
    c.require(a.equal && a.commutant_dim == 2, "walled centralizer (n=2,s=1,t=1)");
    WalledCentralizerReport b = walled_centralizer_check(3, 2, 1);
    c.require(b.equal && b.commutant_dim == 6, "walled centralizer (n=3,s=2,t=1)");
    c.summary << "counts (s+t)! with multiplicative closure; centralizer dims 2 and 6";
}

// 8. SO dimension identity + uneven counts
inline void criterion_so_identity(Collector& c, SizeProfile) {
    for (int k = 0; k <= 12; ++k)
        c.require(so_dimension_identity(k).equal, "identity fails at k=" + std::to_string(k));
    c.require_eq(static_cast<long long>(enumerate_uneven(6, 4).size()), 945LL, "uneven(6,4)");
    c.require_eq(static_cast<long long>(enumerate_uneven(2, 1).size()), 0LL, "uneven(2,1)");
    c.summary << "double sum equals (2k)!/k! for k <= 12";
}

// 9. K-types
inline void criterion_ktypes(Collector& c, SizeProfile profile) {
    std::vector<std::tuple<GroupSpec, int, long long>> cases{
        {GroupSpec::sp(2), 1, 2}, {GroupSpec::sp(2), 2, 6}, {GroupSpec::so(3, 2), 2, 6}};
    if (profile == SizeProfile::Full) cases.emplace_back(GroupSpec::sp(3), 3, 12);
    for (auto& [spec, k, expected] : cases) {
        long long got = count_ktypes(get_realization(spec, k));
        c.require_eq(got, expected, spec.name() + " k=" + std::to_string(k) + " block count");
        c.require_eq(count_bipartitions(k), expected,
                     "bipartition count at k=" + std::to_string(k));
    }
    c.summary << "commutant block counts equal bipartition counts";
}

// 10. property suites
inline void criterion_properties(Collector& c, SizeProfile profile) {
    // composition associativity, table-driven so the full m=3 rank-3 case stays fast
    int kmax = profile == SizeProfile::Small ? 2 : 3;
    for (int k = 0; k <= kmax; ++k)
        for (int m = 1; m <= 3; ++m) {
            auto basis = enumerate_diagrams(k, m);
            const size_t nb = basis.size();
            std::map<LabeledDiagram, int> index;
            for (size_t i = 0; i < nb; ++i) index[basis[i]] = static_cast<int>(i);
            struct Cell {
                int diagram;
                std::vector<int> loops;
            };
            std::vector<Cell> table(nb * nb);
            for (size_t a = 0; a < nb; ++a)
                for (size_t b = 0; b < nb; ++b) {
                    CompositionResult r = compose(basis[a], basis[b]);
                    table[a * nb + b] = Cell{index.at(r.diagram), r.loops};
                }
            bool ok = true;
            for (size_t a = 0; a < nb && ok; ++a)
                for (size_t b = 0; b < nb && ok; ++b) {
                    const Cell& ab = table[a * nb + b];
                    for (size_t d = 0; d < nb; ++d) {
                        const Cell& ab_d = table[static_cast<size_t>(ab.diagram) * nb + d];
                        const Cell& bd = table[b * nb + d];
                        const Cell& a_bd = table[a * nb + static_cast<size_t>(bd.diagram)];
                        if (ab_d.diagram != a_bd.diagram) {
                            ok = false;
                            break;
                        }
                        std::vector<int> left = ab.loops, right = bd.loops;
                        left.insert(left.end(), ab_d.loops.begin(), ab_d.loops.end());
                        right.insert(right.end(), a_bd.loops.begin(), a_bd.loops.end());
                        std::sort(left.begin(), left.end());
                        std::sort(right.begin(), right.end());
                        if (left != right) {
                            ok = false;
                            break;
                        }
                    }
                }
            c.require(ok, "associativity fails at k=" + std::to_string(k) + ", m=" + std::to_string(m));
        }

    // ring and field axioms on randomized coefficients
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    auto rnd = [&] { return GaussRat(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))); };
    for (int trial = 0; trial < 100; ++trial) {
        GaussRat a = rnd(), b = rnd(), x = rnd();
        c.require(a * (b + x) == a * b + a * x, "distributivity failure");
        c.require(GaussRat::i() * GaussRat::i() == GaussRat(-1), "i^2 != -1");
        if (!a.is_zero()) c.require(a / a == GaussRat(1), "inverse failure");
    }

    // rank-nullity on random sparse matrices
    std::uniform_int_distribution<int> rr(0, 7), cc(0, 9), vv(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        GaussMat m(8, 10);
        for (int j = 0; j < 20; ++j) m.set(rr(rng), cc(rng), GaussRat(vv(rng)));
        Subspace ns = nullspace(m);
        c.require(rank(m) + ns.dim() == 10, "rank-nullity failure");
        for (const auto& v : ns.basis)
            c.require(m.apply(v).empty(), "nullspace residual nonzero");
    }

    // commutant residuals identically zero on a real case
    Realization& rea = get_realization(GroupSpec::sp(2), 2);
    const Subspace& comm = rea.commutant_split();
    for (const auto& v : comm.basis) {
        GaussMat x = GaussMat::unflatten(v, rea.dim(), rea.dim());
        for (const auto& g : rea.lie_ops_split())
            c.require(commutator(x, g).is_zero(), "commutant residual nonzero");
    }
    c.summary << "associativity, ring/field axioms, rank-nullity, commutant residuals";
}

} // namespace acceptance_detail

/// Runs every acceptance criterion in order (nothing short-circuits) and
/// returns one row per criterion.  `Small` caps ranks at k <= 2 and skips
/// the heaviest realizations.
inline std::vector<CriterionResult> run_acceptance(SizeProfile profile) {
    using namespace acceptance_detail;
    using Fn = std::function<void(Collector&, SizeProfile)>;
    struct Row {
        std::string title;
        Fn fn;
        long long budget_ms; // stated runtime limit for the full profile
    };
    std::vector<Row> rows = {
        {"diagram counts match the closed form", criterion_counts, 10'000},
        {"presentations verify symbolically", criterion_presentations, 60'000},
        {"loop parameters measured and relations checked", criterion_deltas, 5'000},
        {"diagram image span has full rank (faithfulness)", criterion_faithfulness, 300'000},
        {"diagram image span equals the centralizer", criterion_commutant, 900'000},
        {"symplectic sector decomposition", criterion_decompose, 300'000},
        {"walled diagram basis and centralizer", criterion_walled, 30'000},
        {"orthogonal dimension identity and uneven counts", criterion_so_identity, 1'000},
        {"K-type counts equal bipartition counts", criterion_ktypes, 300'000},
        {"property suites", criterion_properties, 60'000},
    };
    std::vector<CriterionResult> out;
    for (size_t i = 0; i < rows.size(); ++i) {
        CriterionResult res;
        res.id = static_cast<int>(i) + 1;
        res.title = rows[i].title;
        Collector col;
        auto start = std::chrono::steady_clock::now();
        try {
            rows[i].fn(col, profile);
        } catch (const std::exception& ex) {
            col.ok = false;
            col.first_failure << "exception: " << ex.what();
        }
        res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        if (col.ok && res.millis > rows[i].budget_ms) {
            col.ok = false;
            col.first_failure << "runtime " << res.millis << " ms exceeds the stated "
                              << rows[i].budget_ms << " ms budget";
        }
        res.pass = col.ok;
        res.detail = col.ok ? col.summary.str() : col.first_failure.str();
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace cybra

#endif
