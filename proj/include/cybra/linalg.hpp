#ifndef CYBRA_LINALG_HPP
#define CYBRA_LINALG_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "cybra/errors.hpp"
#include "cybra/scalar.hpp"

namespace cybra {

/// Sparse vector: (index, value) pairs sorted by index, no zero values.
using SparseVec = std::vector<std::pair<int, GaussRat>>;

inline void sparse_normalize(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& [i, x] : v) {
        if (!out.empty() && out.back().first == i) {
            out.back().second += x;
            if (out.back().second.is_zero()) out.pop_back();
        } else if (!x.is_zero()) {
            out.emplace_back(i, std::move(x));
        }
    }
    v = std::move(out);
}

/// r -= c * p, merged walk over sorted supports.
inline void sparse_axpy_sub(SparseVec& r, const GaussRat& c, const SparseVec& p) {
    SparseVec out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(std::move(r[i]));
            ++i;
        } else if (i >= r.size() || p[j].first < r[i].first) {
            GaussRat x = c * p[j].second;
            if (!x.is_zero()) out.emplace_back(p[j].first, -x);
            ++j;
        } else {
            GaussRat x = r[i].second - c * p[j].second;
            if (!x.is_zero()) out.emplace_back(r[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

/// Exact sparse matrix over Gaussian rationals, row-major storage.
class GaussMat {
public:
    GaussMat() : rows_(0), cols_(0) {}
    GaussMat(int rows, int cols) : rows_(rows), cols_(cols), row_(static_cast<size_t>(rows)) {
        if (rows < 0 || cols < 0) throw dimension_mismatch("negative matrix dimension");
    }

    static GaussMat identity(int n) {
        GaussMat m(n, n);
        for (int i = 0; i < n; ++i) m.row_[static_cast<size_t>(i)].emplace_back(i, GaussRat(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const SparseVec& row(int r) const { return row_[static_cast<size_t>(r)]; }

    void set(int r, int c, const GaussRat& v) {
        check_index(r, c);
        SparseVec& rw = row_[static_cast<size_t>(r)];
        auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != rw.end() && it->first == c) {
            if (v.is_zero())
                rw.erase(it);
            else
                it->second = v;
        } else if (!v.is_zero()) {
            rw.insert(it, {c, v});
        }
    }

    void add_to(int r, int c, const GaussRat& v) {
        if (v.is_zero()) return;
        check_index(r, c);
        SparseVec& rw = row_[static_cast<size_t>(r)];
        auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != rw.end() && it->first == c) {
            it->second += v;
            if (it->second.is_zero()) rw.erase(it);
        } else {
            rw.insert(it, {c, v});
        }
    }

    GaussRat get(int r, int c) const {
        check_index(r, c);
        const SparseVec& rw = row_[static_cast<size_t>(r)];
        auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != rw.end() && it->first == c) return it->second;
        return GaussRat(0);
    }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : row_) n += r.size();
        return n;
    }
    bool is_zero() const { return nnz() == 0; }

    /// Structurally diagonal (all stored entries on the main diagonal).
    bool is_diagonal() const {
        if (rows_ != cols_) return false;
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : row_[static_cast<size_t>(r)])
                if (c != r) return false;
        return true;
    }

    GaussMat operator-() const {
        GaussMat m(rows_, cols_);
        for (int r = 0; r < rows_; ++r) {
            m.row_[static_cast<size_t>(r)] = row_[static_cast<size_t>(r)];
            for (auto& [c, v] : m.row_[static_cast<size_t>(r)]) v = -v;
        }
        return m;
    }

    GaussMat& operator+=(const GaussMat& o) {
        require_same_shape(o);
        for (int r = 0; r < rows_; ++r) {
            SparseVec merged;
            const SparseVec& a = row_[static_cast<size_t>(r)];
            const SparseVec& b = o.row_[static_cast<size_t>(r)];
            merged.reserve(a.size() + b.size());
            size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (j >= b.size() || (i < a.size() && a[i].first < b[j].first))
                    merged.push_back(a[i++]);
                else if (i >= a.size() || b[j].first < a[i].first)
                    merged.push_back(b[j++]);
                else {
                    GaussRat v = a[i].second + b[j].second;
                    if (!v.is_zero()) merged.emplace_back(a[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            row_[static_cast<size_t>(r)] = std::move(merged);
        }
        return *this;
    }
    GaussMat& operator-=(const GaussMat& o) { return *this += -o; }

    GaussMat& scale(const GaussRat& c) {
        if (c.is_zero()) {
            for (auto& r : row_) r.clear();
            return *this;
        }
        for (auto& r : row_)
            for (auto& [col, v] : r) v *= c;
        return *this;
    }

    friend GaussMat operator+(GaussMat a, const GaussMat& b) { return a += b; }
    friend GaussMat operator-(GaussMat a, const GaussMat& b) { return a -= b; }

    friend GaussMat operator*(const GaussMat& a, const GaussMat& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("matrix product shape mismatch");
        GaussMat out(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r) {
            std::map<int, GaussRat> acc;
            for (const auto& [l, x] : a.row_[static_cast<size_t>(r)]) {
                for (const auto& [c, y] : b.row_[static_cast<size_t>(l)]) {
                    auto it = acc.find(c);
                    if (it == acc.end()) {
                        GaussRat v = x * y;
                        if (!v.is_zero()) acc.emplace(c, std::move(v));
                    } else {
                        it->second += x * y;
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
            }
            SparseVec& rw = out.row_[static_cast<size_t>(r)];
            rw.reserve(acc.size());
            for (auto& [c, v] : acc) rw.emplace_back(c, std::move(v));
        }
        return out;
    }

    friend GaussMat operator*(const GaussRat& c, GaussMat m) { return m.scale(c); }

    friend bool operator==(const GaussMat& a, const GaussMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
    }
    friend bool operator!=(const GaussMat& a, const GaussMat& b) { return !(a == b); }

    SparseVec apply(const SparseVec& x) const {
        // y = M x with x sparse over cols
        std::map<int, GaussRat> acc;
        std::map<int, GaussRat> xm(x.begin(), x.end());
        for (int r = 0; r < rows_; ++r) {
            GaussRat v(0);
            for (const auto& [c, a] : row_[static_cast<size_t>(r)]) {
                auto it = xm.find(c);
                if (it != xm.end()) v += a * it->second;
            }
            if (!v.is_zero()) acc.emplace(r, std::move(v));
        }
        return SparseVec(acc.begin(), acc.end());
    }

    /// Row-major flattening to a length rows*cols sparse vector.
    SparseVec flatten() const {
        SparseVec v;
        v.reserve(nnz());
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, x] : row_[static_cast<size_t>(r)]) v.emplace_back(r * cols_ + c, x);
        return v;
    }

    static GaussMat unflatten(const SparseVec& v, int rows, int cols) {
        GaussMat m(rows, cols);
        for (const auto& [i, x] : v) m.set(i / cols, i % cols, x);
        return m;
    }

    GaussMat transpose() const {
        GaussMat t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, x] : row_[static_cast<size_t>(r)])
                t.row_[static_cast<size_t>(c)].emplace_back(r, x);
        return t;
    }

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw dimension_mismatch("matrix index out of range");
    }
    void require_same_shape(const GaussMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix shapes differ");
    }

    int rows_, cols_;
    std::vector<SparseVec> row_;
};

inline GaussMat commutator(const GaussMat& a, const GaussMat& b) { return a * b - b * a; }

/// Forward echelon accumulator: pivot rows have leading coefficient 1 and
/// strictly increasing pivot columns; stored rows never change afterwards.
/// Deterministic for a fixed insertion sequence.
class Echelonizer {
public:
    /// Reduces v against the pivots; if a nonzero remainder survives it is
    /// normalized and kept.  Returns true when the rank grew.
    bool insert(SparseVec v) {
        reduce(v);
        if (v.empty()) return false;
        GaussRat lead = v.front().second;
        if (!lead.is_one())
            for (auto& [c, x] : v) x /= lead;
        pivot_of_col_[v.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    /// Eliminates v's leading column against pivot rows until it is either
    /// zero or leads at a pivot-free column.  A nonzero residual leading at a
    /// pivot-free column cannot lie in the row space, so this suffices for
    /// both rank growth and membership tests.
    void reduce(SparseVec& v) const {
        while (!v.empty()) {
            auto it = pivot_of_col_.find(v.front().first);
            if (it == pivot_of_col_.end()) return;
            sparse_axpy_sub(v, v.front().second, rows_[static_cast<size_t>(it->second)]);
        }
    }

    bool contains(SparseVec v) const {
        reduce(v);
        return v.empty();
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::map<int, int>& pivots() const { return pivot_of_col_; }

    /// Unique solution with x[free_col] = 1, all other free columns 0, of
    /// (row space) . x = 0; the canonical nullspace vector of a free column.
    SparseVec nullspace_vector(int free_col) const {
        std::map<int, GaussRat> x;
        x[free_col] = GaussRat(1);
        // rows in decreasing pivot order; each determines its pivot variable
        for (auto it = pivot_of_col_.rbegin(); it != pivot_of_col_.rend(); ++it) {
            const SparseVec& row = rows_[static_cast<size_t>(it->second)];
            GaussRat acc(0);
            for (size_t i = 1; i < row.size(); ++i) {
                auto jt = x.find(row[i].first);
                if (jt != x.end()) acc += row[i].second * jt->second;
            }
            if (!acc.is_zero()) x[it->first] = -acc;
        }
        return SparseVec(x.begin(), x.end());
    }

private:
    std::vector<SparseVec> rows_;
    std::map<int, int> pivot_of_col_; // pivot column -> row index
};

/// Echelonized subspace of an ambient coordinate space.
struct Subspace {
    int ambient_dim = 0;
    std::vector<SparseVec> basis; // pivot columns strictly increasing

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Echelonize arbitrary spanning vectors into a Subspace (order of pivots
/// follows insertion; basis rows sorted by pivot column afterwards).
inline Subspace span_of(const std::vector<SparseVec>& vectors, int ambient) {
    Echelonizer ech;
    for (const auto& v : vectors) ech.insert(v);
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = ech.rows();
    std::sort(s.basis.begin(), s.basis.end(),
              [](const SparseVec& a, const SparseVec& b) { return a.front().first < b.front().first; });
    return s;
}

inline bool subspace_contains(const Subspace& s, const SparseVec& v) {
    Echelonizer ech;
    for (const auto& b : s.basis) ech.insert(b);
    return ech.contains(v);
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw dimension_mismatch("subspace ambient dims differ");
    if (a.dim() != b.dim()) return false;
    Echelonizer ech;
    for (const auto& v : a.basis) ech.insert(v);
    int ra = ech.rank();
    for (const auto& v : b.basis)
        if (ech.insert(v)) return false;
    return ech.rank() == ra;
}

/// Exact rank by forward elimination, rows processed in row-major order,
/// pivot = first structurally nonzero column of each reduced row.
inline int rank(const GaussMat& m) {
    Echelonizer ech;
    for (int r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
    return ech.rank();
}

/// Basis of { x : M x = 0 }, dimension cols - rank, re-echelonized so pivot
/// columns are strictly increasing.
inline Subspace nullspace(const GaussMat& m) {
    Echelonizer ech;
    for (int r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
    std::vector<SparseVec> kernel;
    for (int c = 0; c < m.cols(); ++c)
        if (!ech.pivots().count(c)) kernel.push_back(ech.nullspace_vector(c));
    return span_of(kernel, m.cols());
}

namespace detail {

/// Shared core of commutant computation over an explicit unknown set.
/// Unknowns are matrix coordinates (i,j) surviving the diagonal filter;
/// constraints come from the non-diagonal generators.
inline Subspace commutant_core(const std::vector<GaussMat>& gens, int d) {
    // 1. diagonal filter: X_ij may be nonzero only if every structurally
    //    diagonal generator has equal eigenvalues at i and j.
    std::vector<const GaussMat*> diag, rest;
    for (const auto& g : gens)
        (g.is_diagonal() ? diag : rest).push_back(&g);

    // class id per basis index from simultaneous diagonal values
    std::map<std::vector<GaussRat>, int> class_of_profile;
    std::vector<int> cls(static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
        std::vector<GaussRat> profile;
        profile.reserve(diag.size());
        for (const auto* g : diag) profile.push_back(g->get(i, i));
        auto [it, fresh] = class_of_profile.try_emplace(profile, static_cast<int>(class_of_profile.size()));
        cls[static_cast<size_t>(i)] = it->second;
    }

    std::vector<int> alive_index(static_cast<size_t>(d) * static_cast<size_t>(d), -1);
    std::vector<std::pair<int, int>> alive; // unknown id -> (i,j)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (cls[static_cast<size_t>(i)] == cls[static_cast<size_t>(j)]) {
                alive_index[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)] =
                    static_cast<int>(alive.size());
                alive.emplace_back(i, j);
            }

    // 2. constraint rows [g, X]_{ij} = 0 restricted to alive unknowns
    Echelonizer ech;
    for (const auto* gp : rest) {
        const GaussMat& g = *gp;
        GaussMat gt = g.transpose(); // column access
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                SparseVec row;
                for (const auto& [l, v] : g.row(i)) { // g_il X_lj
                    int u = alive_index[static_cast<size_t>(l) * static_cast<size_t>(d) + static_cast<size_t>(j)];
                    if (u >= 0) row.emplace_back(u, v);
                }
                for (const auto& [l, v] : gt.row(j)) { // -X_il g_lj
                    int u = alive_index[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(l)];
                    if (u >= 0) row.emplace_back(u, -v);
                }
                if (row.empty()) continue;
                sparse_normalize(row);
                if (!row.empty()) ech.insert(std::move(row));
            }
        }
    }

    // 3. nullspace over alive unknowns, embedded back into d*d coordinates
    std::vector<SparseVec> kernel;
    for (int u = 0; u < static_cast<int>(alive.size()); ++u) {
        if (ech.pivots().count(u)) continue;
        SparseVec x = ech.nullspace_vector(u);
        SparseVec full;
        full.reserve(x.size());
        for (const auto& [idx, v] : x) {
            auto [i, j] = alive[static_cast<size_t>(idx)];
            full.emplace_back(i * d + j, v);
        }
        sparse_normalize(full);
        kernel.push_back(std::move(full));
    }
    return span_of(kernel, d * d);
}

} // namespace detail

/// Basis of { X : X g = g X for all g }, as flattened d*d vectors.
/// Structurally diagonal generators are handled combinatorially (their
/// constraint is an exact sparsity pattern), the rest by sparse elimination.
inline Subspace commutant_basis(const std::vector<GaussMat>& gens, int d) {
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d)
            throw dimension_mismatch("commutant generators must be d x d");
    return detail::commutant_core(gens, d);
}

inline Subspace commutant_basis(const std::vector<GaussMat>& gens) {
    if (gens.empty()) throw dimension_mismatch("commutant_basis: empty generator list needs explicit d");
    return commutant_basis(gens, gens.front().rows());
}

/// Dimension of { Z in span(S) : Z s = s Z for all s in S }.  For a
/// semisimple algebra spanned by S this is its number of simple blocks.
/// Precondition (sampled): span(S) contains the identity and is closed
/// under products.
inline int center_dim(const std::vector<GaussMat>& spanning_set) {
    if (spanning_set.empty()) throw dimension_mismatch("center_dim: empty spanning set");
    const int d = spanning_set.front().rows();
    for (const auto& s : spanning_set)
        if (s.rows() != d || s.cols() != d) throw dimension_mismatch("center_dim: shapes differ");
    const int n = static_cast<int>(spanning_set.size());

    {
        // closure sampling: identity plus a few pairwise products must stay in the span
        Echelonizer ech;
        for (const auto& s : spanning_set) ech.insert(s.flatten());
        if (!ech.contains(GaussMat::identity(d).flatten()))
            throw invariant_violation("center_dim: identity not in span");
        const int probe = std::min(n, 3);
        for (int a = 0; a < probe; ++a)
            for (int b = 0; b < probe; ++b)
                if (!ech.contains((spanning_set[static_cast<size_t>(a)] * spanning_set[static_cast<size_t>(b)]).flatten()))
                    throw invariant_violation("center_dim: span not closed under sampled products");
    }

    // Solution space over coefficient vectors z, cut down one spanning
    // element at a time: Z = sum_a z_a S_a with [Z, S_b] = 0.  The matrices
    // U_i realizing the current basis are kept alongside and rebuilt only
    // when a constraint actually shrinks the space.
    std::vector<SparseVec> basis;
    std::vector<GaussMat> reps;
    for (int a = 0; a < n; ++a) {
        basis.push_back(SparseVec{{a, GaussRat(1)}});
        reps.push_back(spanning_set[static_cast<size_t>(a)]);
    }

    for (int b = 0; b < n && !basis.empty(); ++b) {
        std::vector<GaussMat> comm;
        comm.reserve(basis.size());
        for (const auto& u : reps) comm.push_back(commutator(u, spanning_set[static_cast<size_t>(b)]));
        bool all_zero = true;
        for (const auto& c : comm)
            if (!c.is_zero()) all_zero = false;
        if (all_zero) continue;

        // rows over i, indexed by matrix coordinate
        std::map<int, SparseVec> rows;
        for (size_t i = 0; i < comm.size(); ++i)
            for (const auto& [coord, v] : comm[i].flatten())
                rows[coord].emplace_back(static_cast<int>(i), v);
        Echelonizer ech;
        for (auto& [coord, row] : rows) ech.insert(std::move(row));

        std::vector<SparseVec> next;
        std::vector<GaussMat> next_reps;
        const int r = static_cast<int>(basis.size());
        for (int c = 0; c < r; ++c) {
            if (ech.pivots().count(c)) continue;
            SparseVec combo = ech.nullspace_vector(c);
            // translate back to z-coordinates and rebuild the matrix
            SparseVec z;
            GaussMat u(d, d);
            for (const auto& [i, coef] : combo) {
                for (const auto& [a, w] : basis[static_cast<size_t>(i)]) z.emplace_back(a, coef * w);
                GaussMat t = reps[static_cast<size_t>(i)];
                t.scale(coef);
                u += t;
            }
            sparse_normalize(z);
            next.push_back(std::move(z));
            next_reps.push_back(std::move(u));
        }
        basis = std::move(next);
        reps = std::move(next_reps);
    }
    return static_cast<int>(basis.size());
}

} // namespace cybra

#endif
