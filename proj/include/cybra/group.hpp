#ifndef CYBRA_GROUP_HPP
#define CYBRA_GROUP_HPP

#include <sstream>
#include <string>
#include <vector>

#include "cybra/errors.hpp"
#include "cybra/linalg.hpp"

namespace cybra {

enum class GroupFamily { Sp, SOpq };

/// Which real group to realize: Sp(2n,R) or SO(p,q) with p > q >= 1, p+q odd.
struct GroupSpec {
    GroupFamily family = GroupFamily::Sp;
    int n = 0; // Sp only
    int p = 0, q = 0; // SOpq only

    static GroupSpec sp(int n) { return GroupSpec{GroupFamily::Sp, n, 0, 0}; }
    static GroupSpec so(int p, int q) { return GroupSpec{GroupFamily::SOpq, 0, p, q}; }

    int dim_v() const { return family == GroupFamily::Sp ? 2 * n : p + q; }
    int rank() const { return family == GroupFamily::Sp ? n : (p + q - 1) / 2; }
    /// Split (real) rank: min(p,q) for SO(p,q), n for Sp(2n,R).  The
    /// centralizer has the full diagram-count dimension exactly for
    /// k <= split_rank(); see the tests for the k = 2 failures at q = 1.
    int split_rank() const { return family == GroupFamily::Sp ? n : q; }

    std::string name() const {
        std::ostringstream os;
        if (family == GroupFamily::Sp)
            os << "sp(n=" << n << ")";
        else
            os << "so(p=" << p << ",q=" << q << ")";
        return os.str();
    }

    void validate() const {
        if (family == GroupFamily::Sp) {
            if (n < 1) throw bad_spec("Sp requires n >= 1");
        } else {
            if (q < 1 || p <= q) throw bad_spec("SOpq requires p > q >= 1");
            if ((p + q) % 2 == 0) throw bad_spec("SOpq requires p + q odd");
        }
    }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
    friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

/// Dense-ish inverse of a small matrix by Gauss-Jordan elimination.
inline GaussMat invert(const GaussMat& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("invert: not square");
    const int n = m.rows();
    std::vector<std::vector<GaussRat>> a(static_cast<size_t>(n),
                                         std::vector<GaussRat>(static_cast<size_t>(2 * n)));
    for (int r = 0; r < n; ++r) {
        for (const auto& [c, v] : m.row(r)) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        a[static_cast<size_t>(r)][static_cast<size_t>(n + r)] = GaussRat(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw invariant_violation("invert: singular matrix");
        std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
        GaussRat lead = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int c = 0; c < 2 * n; ++c) a[static_cast<size_t>(col)][static_cast<size_t>(c)] /= lead;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            GaussRat f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c < 2 * n; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    GaussMat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!a[static_cast<size_t>(r)][static_cast<size_t>(n + c)].is_zero())
                inv.set(r, c, a[static_cast<size_t>(r)][static_cast<size_t>(n + c)]);
    return inv;
}

/// Kronecker product (A on the first factor).
inline GaussMat kron(const GaussMat& a, const GaussMat& b) {
    GaussMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra)
        for (const auto& [ca, va] : a.row(ra))
            for (int rb = 0; rb < b.rows(); ++rb)
                for (const auto& [cb, vb] : b.row(rb))
                    out.set(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
    return out;
}

/// Realization data for one group: standard module V, invariant form,
/// the involution xi, a basis of the complexified maximal compact Lie
/// algebra acting on V, the invariant vector v1 in V tensor V, and the
/// change of basis splitting V into the two xi-eigenspaces (for Sp: the
/// V_gl and V_gl* summands; for SOpq: a basis diagonalizing the compact
/// Cartan rotations).
struct GroupContext {
    GroupSpec spec;
    int dimV = 0;
    GaussMat form;       // bilinear form B(u,w) = u^T form w
    GaussMat xi;         // involution commuting with the compact subalgebra
    std::vector<GaussMat> lie_basis;
    // Representatives of the non-identity components of the maximal compact
    // group (one reflection per orthogonal block; empty for Sp, whose U(n)
    // is connected).  The Lie algebra alone undercuts the centralizer
    // constraints when a block is O(1) or O(2).
    std::vector<GaussMat> component_reps;
    GaussMat basis_change;     // columns = adapted basis vectors
    GaussMat basis_change_inv;
    SparseVec v1;        // invariant vector in V tensor V, flat index a*dimV+b
};

namespace detail {

inline GroupContext build_sp_context(int n) {
    GroupContext ctx;
    ctx.spec = GroupSpec::sp(n);
    const int d = 2 * n;
    ctx.dimV = d;

    ctx.form = GaussMat(d, d); // J = [0 I; -I 0]
    for (int j = 0; j < n; ++j) {
        ctx.form.set(j, n + j, GaussRat(1));
        ctx.form.set(n + j, j, GaussRat(-1));
    }

    ctx.xi = GaussMat(d, d); // iJ: e_j -> -i e_{n+j}, e_{n+j} -> i e_j
    for (int j = 0; j < n; ++j) {
        ctx.xi.set(n + j, j, -GaussRat::i());
        ctx.xi.set(j, n + j, GaussRat::i());
    }

    // k = { [A B; -B A] : A^t = -A, B^t = B }, dimension n^2
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            GaussMat x(d, d); // A = E_ab - E_ba in both diagonal blocks
            x.set(a, b, GaussRat(1));
            x.set(b, a, GaussRat(-1));
            x.set(n + a, n + b, GaussRat(1));
            x.set(n + b, n + a, GaussRat(-1));
            ctx.lie_basis.push_back(std::move(x));
        }
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            GaussMat x(d, d); // B = E_ab + E_ba (a<b) or E_aa, off-diagonal blocks
            x.set(a, n + b, GaussRat(1));
            x.set(n + a, b, GaussRat(-1));
            if (a != b) {
                x.set(b, n + a, GaussRat(1));
                x.set(n + b, a, GaussRat(-1));
            }
            ctx.lie_basis.push_back(std::move(x));
        }

    // v1 = sum_j e_{n+j} (x) e_j - e_j (x) e_{n+j}  (snake-compatible cup: loop value -2n)
    for (int j = 0; j < n; ++j) {
        ctx.v1.emplace_back((n + j) * d + j, GaussRat(1));
        ctx.v1.emplace_back(j * d + (n + j), GaussRat(-1));
    }
    sparse_normalize(ctx.v1);

    // split basis: g_j = (1+i) e_j + (1-i) e_{n+j}  (xi = +1, the V_gl letters),
    //              h_j = (1-i) e_j + (1+i) e_{n+j}  (xi = -1)
    ctx.basis_change = GaussMat(d, d);
    const GaussRat one_plus_i(mpq_class(1), mpq_class(1));
    const GaussRat one_minus_i(mpq_class(1), mpq_class(-1));
    for (int j = 0; j < n; ++j) {
        ctx.basis_change.set(j, j, one_plus_i);
        ctx.basis_change.set(n + j, j, one_minus_i);
        ctx.basis_change.set(j, n + j, one_minus_i);
        ctx.basis_change.set(n + j, n + j, one_plus_i);
    }
    ctx.basis_change_inv = invert(ctx.basis_change);
    return ctx;
}

inline GroupContext build_so_context(int p, int q) {
    GroupContext ctx;
    ctx.spec = GroupSpec::so(p, q);
    const int d = p + q;
    ctx.dimV = d;

    ctx.form = GaussMat(d, d); // I_{p,q}
    for (int j = 0; j < d; ++j) ctx.form.set(j, j, GaussRat(j < p ? 1 : -1));
    ctx.xi = ctx.form;

    // so_p + so_q block rotations E_ab - E_ba
    auto add_block = [&](int lo, int hi) {
        for (int a = lo; a < hi; ++a)
            for (int b = a + 1; b < hi; ++b) {
                GaussMat x(d, d);
                x.set(a, b, GaussRat(1));
                x.set(b, a, GaussRat(-1));
                ctx.lie_basis.push_back(std::move(x));
            }
    };
    add_block(0, p);
    add_block(p, d);

    for (int j = 0; j < d; ++j) ctx.v1.emplace_back(j * d + j, GaussRat(j < p ? 1 : -1));

    // one orientation-reversing reflection per block: O(p) x O(q) has four
    // components and the extra two generators matter whenever a block is
    // O(1) or O(2)
    {
        GaussMat rp = GaussMat::identity(d);
        rp.set(0, 0, GaussRat(-1));
        GaussMat rq = GaussMat::identity(d);
        rq.set(p, p, GaussRat(-1));
        ctx.component_reps.push_back(std::move(rp));
        ctx.component_reps.push_back(std::move(rq));
    }

    // per block, pair consecutive coordinates and diagonalize the rotation:
    // columns e_a + i e_b, e_a - i e_b; odd leftover stays put
    ctx.basis_change = GaussMat(d, d);
    auto add_change = [&](int lo, int hi) {
        int a = lo;
        for (; a + 1 < hi; a += 2) {
            ctx.basis_change.set(a, a, GaussRat(1));
            ctx.basis_change.set(a + 1, a, GaussRat::i());
            ctx.basis_change.set(a, a + 1, GaussRat(1));
            ctx.basis_change.set(a + 1, a + 1, -GaussRat::i());
        }
        if (a < hi) ctx.basis_change.set(a, a, GaussRat(1));
    };
    add_change(0, p);
    add_change(p, d);
    ctx.basis_change_inv = invert(ctx.basis_change);
    return ctx;
}

/// Action of X on slot `slot` (1-based) of V^{(x) k}; dims all n.
inline GaussMat slot_operator(const GaussMat& x, int slot, int k, int n) {
    long long d = 1;
    for (int j = 0; j < k; ++j) d *= n;
    long long right = 1;
    for (int j = 0; j < k - slot; ++j) right *= n;
    long long left = d / (right * n);
    GaussMat out(static_cast<int>(d), static_cast<int>(d));
    for (long long pre = 0; pre < left; ++pre)
        for (int r = 0; r < n; ++r)
            for (const auto& [c, v] : x.row(r))
                for (long long suf = 0; suf < right; ++suf)
                    out.add_to(static_cast<int>((pre * n + r) * right + suf),
                               static_cast<int>((pre * n + c) * right + suf), v);
    return out;
}

} // namespace detail

/// Verify the construction invariants; throws invariant_violation naming the
/// first failing check.  Exposed separately so tests can feed corrupted data.
inline void check_context_invariants(const GroupContext& ctx) {
    const int d = ctx.dimV;
    if (ctx.xi * ctx.xi != GaussMat::identity(d)) throw invariant_violation("xi^2 != Id");
    size_t expected = ctx.spec.family == GroupFamily::Sp
                          ? static_cast<size_t>(ctx.spec.n) * static_cast<size_t>(ctx.spec.n)
                          : static_cast<size_t>(ctx.spec.p) * (ctx.spec.p - 1) / 2 +
                                static_cast<size_t>(ctx.spec.q) * (ctx.spec.q - 1) / 2;
    if (ctx.lie_basis.size() != expected)
        throw invariant_violation("lie_basis size != " + std::to_string(expected));
    for (size_t idx = 0; idx < ctx.lie_basis.size(); ++idx) {
        const GaussMat& x = ctx.lie_basis[idx];
        if (!commutator(x, ctx.xi).is_zero())
            throw invariant_violation("[lie_basis[" + std::to_string(idx) + "], xi] != 0");
        // form invariance X^T B + B X = 0
        if (!(x.transpose() * ctx.form + ctx.form * x).is_zero())
            throw invariant_violation("lie_basis[" + std::to_string(idx) + "] does not preserve the form");
        // (X (x) I + I (x) X) v1 = 0
        GaussMat act = detail::slot_operator(x, 1, 2, d) + detail::slot_operator(x, 2, 2, d);
        if (!act.apply(ctx.v1).empty())
            throw invariant_violation("lie_basis[" + std::to_string(idx) + "] does not annihilate v1");
    }
    for (size_t idx = 0; idx < ctx.component_reps.size(); ++idx) {
        const GaussMat& r = ctx.component_reps[idx];
        if (r * r != GaussMat::identity(d))
            throw invariant_violation("component_reps[" + std::to_string(idx) + "]^2 != Id");
        if (r.transpose() * ctx.form * r != ctx.form)
            throw invariant_violation("component_reps[" + std::to_string(idx) + "] does not preserve the form");
        if (!commutator(r, ctx.xi).is_zero())
            throw invariant_violation("[component_reps[" + std::to_string(idx) + "], xi] != 0");
        GaussMat rr = kron(r, r);
        GaussMat v1m = GaussMat::unflatten(ctx.v1, d * d, 1);
        if (rr * v1m != v1m)
            throw invariant_violation("component_reps[" + std::to_string(idx) + "] moves v1");
    }
}

/// Build and validate the realization data for a group.
inline GroupContext group_context(const GroupSpec& spec) {
    spec.validate();
    GroupContext ctx = spec.family == GroupFamily::Sp ? detail::build_sp_context(spec.n)
                                                      : detail::build_so_context(spec.p, spec.q);
    check_context_invariants(ctx);
    return ctx;
}

} // namespace cybra

#endif
