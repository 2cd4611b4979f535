#ifndef CYBRA_ALGEBRA_HPP
#define CYBRA_ALGEBRA_HPP

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cybra/combinatorics.hpp"
#include "cybra/delta_poly.hpp"
#include "cybra/diagram.hpp"

namespace cybra {

/// Element of Br_{k,m}[delta]: finite linear combination of canonical
/// diagrams with DeltaPoly coefficients.  Zero coefficients are never kept.
class AlgebraElement {
public:
    AlgebraElement(int k, int m) : k_(k), m_(m) {}

    static AlgebraElement zero(int k, int m) { return AlgebraElement(k, m); }
    static AlgebraElement identity(int k, int m) {
        return from_diagram(LabeledDiagram::identity(k, m));
    }
    static AlgebraElement from_diagram(const LabeledDiagram& d) {
        AlgebraElement x(d.k(), d.m());
        x.terms_[d] = DeltaPoly::one(d.m());
        return x;
    }

    int k() const { return k_; }
    int m() const { return m_; }
    const std::map<LabeledDiagram, DeltaPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement& add_term(const LabeledDiagram& d, const DeltaPoly& c) {
        if (d.k() != k_ || d.m() != m_) throw context_mismatch("diagram context differs");
        if (c.modulus() != m_) throw context_mismatch("coefficient context differs");
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    AlgebraElement operator-() const {
        AlgebraElement r(k_, m_);
        for (const auto& [d, c] : terms_) r.terms_[d] = -c;
        return r;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        require_same_context(o);
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this += -o; }

    AlgebraElement& scale(const DeltaPoly& c) {
        if (c.modulus() != m_) throw context_mismatch("coefficient context differs");
        std::map<LabeledDiagram, DeltaPoly> out;
        for (const auto& [d, v] : terms_) {
            DeltaPoly p = v * c;
            if (!p.is_zero()) out.emplace(d, std::move(p));
        }
        terms_ = std::move(out);
        return *this;
    }
    AlgebraElement& scale(const GaussRat& c) { return scale(DeltaPoly::constant(m_, c)); }

    AlgebraElement& operator*=(const AlgebraElement& o) {
        require_same_context(o);
        AlgebraElement out(k_, m_);
        for (const auto& [da, ca] : terms_) {
            for (const auto& [db, cb] : o.terms_) {
                CompositionResult comp = compose(da, db);
                DeltaPoly c = ca * cb * delta_monomial(comp.loops, m_);
                out.add_term(comp.diagram, c);
            }
        }
        *this = std::move(out);
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const AlgebraElement& b) { return a *= b; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.k_ == b.k_ && a.m_ == b.m_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "[" << c.str() << "]*(" << diagram_to_text(d) << ")";
        }
        return os.str();
    }

private:
    void require_same_context(const AlgebraElement& o) const {
        if (k_ != o.k_ || m_ != o.m_) throw context_mismatch("algebra contexts differ");
    }

    int k_, m_;
    std::map<LabeledDiagram, DeltaPoly> terms_;
};

enum class GeneratorKind { T, E, Theta };

/// The standard single-diagram generators: t_i crosses strands i,i+1;
/// e_i joins them by horizontal strands; theta_i puts label 1 on strand i.
inline AlgebraElement generator(GeneratorKind kind, int i, int k, int m) {
    if (kind == GeneratorKind::Theta) {
        if (i < 1 || i > k) throw index_out_of_range("theta index");
        std::vector<DiagEdge> e;
        for (int j = 0; j < k; ++j) e.push_back(DiagEdge{j, k + j, j + 1 == i ? 1 % m : 0});
        return AlgebraElement::from_diagram(LabeledDiagram::from_code_edges(std::move(e), k, m));
    }
    if (i < 1 || i > k - 1) throw index_out_of_range("t/e index");
    std::vector<DiagEdge> e;
    for (int j = 0; j < k; ++j) {
        if (j + 1 == i || j + 1 == i + 1) continue;
        e.push_back(DiagEdge{j, k + j, 0});
    }
    if (kind == GeneratorKind::T) {
        e.push_back(DiagEdge{i - 1, k + i, 0});
        e.push_back(DiagEdge{i, k + i - 1, 0});
    } else {
        e.push_back(DiagEdge{i - 1, i, 0});
        e.push_back(DiagEdge{k + i - 1, k + i, 0});
    }
    return AlgebraElement::from_diagram(LabeledDiagram::from_code_edges(std::move(e), k, m));
}

/// Outcome of checking one relation family across all its index instances.
struct RelationReport {
    std::string relation_id;
    long instances_checked = 0;
    // (instance parameters, printable difference)
    std::vector<std::pair<std::string, std::string>> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

inline void check_instance(RelationReport& rep, const std::string& params, const AlgebraElement& lhs,
                           const AlgebraElement& rhs) {
    ++rep.instances_checked;
    if (lhs != rhs) {
        AlgebraElement diff = lhs - rhs;
        rep.failures.emplace_back(params, diff.str());
    }
}

/// Independent model of S_k x (Z/m)^k as colored bijections, composed
/// top-to-bottom like diagram gluing: strand enters at top position i, exits
/// at bottom position perm[i], picking up color[i] along the way.
struct ColoredPerm {
    std::vector<int> perm;   // 0-based, perm[i] = exit position of entry i
    std::vector<int> colors; // colors[i] on the strand entering at i
    int m = 1;

    ColoredPerm then_below(const ColoredPerm& lower) const {
        ColoredPerm r;
        r.m = m;
        size_t n = perm.size();
        r.perm.resize(n);
        r.colors.resize(n);
        for (size_t i = 0; i < n; ++i) {
            int mid = perm[i];
            r.perm[i] = lower.perm[static_cast<size_t>(mid)];
            r.colors[i] = (colors[i] + lower.colors[static_cast<size_t>(mid)]) % m;
        }
        return r;
    }
    friend bool operator==(const ColoredPerm&, const ColoredPerm&) = default;
};

inline ColoredPerm colored_perm_of(const LabeledDiagram& d) {
    ColoredPerm c;
    c.m = d.m();
    c.perm.assign(static_cast<size_t>(d.k()), 0);
    c.colors.assign(static_cast<size_t>(d.k()), 0);
    for (const auto& e : d.edges()) {
        // through-only diagrams: from is top, to is bottom
        c.perm[static_cast<size_t>(e.from)] = e.to - d.k();
        c.colors[static_cast<size_t>(e.from)] = e.label;
    }
    return c;
}

} // namespace detail

/// Symbolic verification of the defining relations of Br_{k,m}[delta],
/// including the wreath-product multiplication table for the group-like part.
/// Failures are reported as data, never thrown.
inline std::vector<RelationReport> verify_presentation(int k, int m) {
    using detail::check_instance;
    std::vector<RelationReport> reports;
    auto t = [&](int i) { return generator(GeneratorKind::T, i, k, m); };
    auto e = [&](int i) { return generator(GeneratorKind::E, i, k, m); };
    auto th = [&](int i) { return generator(GeneratorKind::Theta, i, k, m); };
    auto pow = [&](const AlgebraElement& x, int p) {
        AlgebraElement r = AlgebraElement::identity(k, m);
        for (int j = 0; j < p; ++j) r *= x;
        return r;
    };
    const AlgebraElement id = AlgebraElement::identity(k, m);
    const DeltaPoly d0 = DeltaPoly::variable(m, 0);
    auto delta_var = [&](int l) { return DeltaPoly::variable(m, std::min(l, m - l)); };

    {
        RelationReport r{"t_involution", 0, {}};
        for (int i = 1; i <= k - 1; ++i) check_instance(r, "i=" + std::to_string(i), t(i) * t(i), id);
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"t_braid", 0, {}};
        for (int i = 1; i <= k - 2; ++i)
            check_instance(r, "i=" + std::to_string(i), t(i) * t(i + 1) * t(i),
                           t(i + 1) * t(i) * t(i + 1));
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"t_distant_commute", 0, {}};
        for (int i = 1; i <= k - 1; ++i)
            for (int j = i + 2; j <= k - 1; ++j)
                check_instance(r, "i=" + std::to_string(i) + ",j=" + std::to_string(j), t(i) * t(j),
                               t(j) * t(i));
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"e_idempotent_delta0", 0, {}};
        for (int i = 1; i <= k - 1; ++i) {
            AlgebraElement rhs = e(i);
            rhs.scale(d0);
            check_instance(r, "i=" + std::to_string(i), e(i) * e(i), rhs);
        }
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"te_absorption", 0, {}};
        for (int i = 1; i <= k - 1; ++i) {
            check_instance(r, "i=" + std::to_string(i) + " (left)", t(i) * e(i), e(i));
            check_instance(r, "i=" + std::to_string(i) + " (right)", e(i) * t(i), e(i));
        }
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"e_conjugation", 0, {}};
        for (int i = 1; i <= k - 2; ++i)
            check_instance(r, "i=" + std::to_string(i),
                           t(i) * t(i + 1) * e(i) * t(i + 1) * t(i), e(i + 1));
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"te_distant_commute", 0, {}};
        for (int i = 1; i <= k - 1; ++i)
            for (int j = 1; j <= k - 1; ++j) {
                if (std::abs(i - j) < 2) continue;
                check_instance(r, "t_i e_j, i=" + std::to_string(i) + ",j=" + std::to_string(j),
                               t(i) * e(j), e(j) * t(i));
            }
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"ee_distant_commute", 0, {}};
        for (int i = 1; i <= k - 1; ++i)
            for (int j = i + 2; j <= k - 1; ++j)
                check_instance(r, "i=" + std::to_string(i) + ",j=" + std::to_string(j), e(i) * e(j),
                               e(j) * e(i));
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"theta_order_m", 0, {}};
        for (int i = 1; i <= k; ++i) check_instance(r, "i=" + std::to_string(i), pow(th(i), m), id);
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"theta_commute", 0, {}};
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                check_instance(r, "i=" + std::to_string(i) + ",j=" + std::to_string(j),
                               th(i) * th(j), th(j) * th(i));
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"t_theta_conjugation", 0, {}};
        for (int i = 1; i <= k - 1; ++i)
            check_instance(r, "i=" + std::to_string(i), t(i) * th(i) * t(i), th(i + 1));
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"theta_t_distant_commute", 0, {}};
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k - 1; ++j) {
                if (j == i || j == i - 1) continue;
                check_instance(r, "theta_i t_j, i=" + std::to_string(i) + ",j=" + std::to_string(j),
                               th(i) * t(j), t(j) * th(i));
            }
        reports.push_back(std::move(r));
    }
    {
        RelationReport r{"theta_e_distant_commute", 0, {}};
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k - 1; ++j) {
                if (j == i || j == i - 1) continue;
                check_instance(r, "theta_i e_j, i=" + std::to_string(i) + ",j=" + std::to_string(j),
                               th(i) * e(j), e(j) * th(i));
            }
        reports.push_back(std::move(r));
    }
    {
        // e_i theta_i^l e_i = delta_l e_i, and the mirror with theta_{i+1}
        RelationReport r{"e_theta_sandwich", 0, {}};
        for (int i = 1; i <= k - 1; ++i)
            for (int l = 1; l < m; ++l) {
                AlgebraElement rhs = e(i);
                rhs.scale(delta_var(l));
                check_instance(r, "left, i=" + std::to_string(i) + ",l=" + std::to_string(l),
                               e(i) * pow(th(i), l) * e(i), rhs);
                check_instance(r, "right, i=" + std::to_string(i) + ",l=" + std::to_string(l),
                               e(i) * pow(th(i + 1), l) * e(i), rhs);
            }
        reports.push_back(std::move(r));
    }
    {
        // (theta_i theta_{i+1})^l e_i = e_i = e_i (theta_i theta_{i+1})^l:
        // the two marks sit on the two ends of one cup strand and cancel,
        // so absorption needs equal exponents on both slots
        RelationReport r{"theta_pair_absorption", 0, {}};
        for (int i = 1; i <= k - 1; ++i)
            for (int l = 1; l < m; ++l) {
                AlgebraElement w = pow(th(i), l) * pow(th(i + 1), l);
                check_instance(r, "pre, i=" + std::to_string(i) + ",l=" + std::to_string(l),
                               w * e(i), e(i));
                check_instance(r, "post, i=" + std::to_string(i) + ",l=" + std::to_string(l),
                               e(i) * w, e(i));
            }
        reports.push_back(std::move(r));
    }
    {
        // Group-like part: through-strand-only diagrams multiply as the wreath
        // product S_k x (Z/m)^k, with no loops and a single-diagram product.
        RelationReport r{"wreath_product_table", 0, {}};
        std::vector<LabeledDiagram> group_basis;
        for (const auto& d : enumerate_diagrams(k, m))
            if (d.is_through_only()) group_basis.push_back(d);
        long long expected = factorial(k);
        for (int j = 0; j < k; ++j) expected *= m;
        if (static_cast<long long>(group_basis.size()) != expected) {
            r.failures.emplace_back("basis", "through-only diagram count " +
                                                 std::to_string(group_basis.size()) + " != " +
                                                 std::to_string(expected));
        }
        for (const auto& a : group_basis)
            for (const auto& b : group_basis) {
                ++r.instances_checked;
                CompositionResult comp = compose(a, b);
                if (!comp.loops.empty() || !comp.diagram.is_through_only()) {
                    r.failures.emplace_back(diagram_to_text(a) + " * " + diagram_to_text(b),
                                            "product left the group-like span");
                    continue;
                }
                detail::ColoredPerm expected_cp =
                    detail::colored_perm_of(a).then_below(detail::colored_perm_of(b));
                if (!(detail::colored_perm_of(comp.diagram) == expected_cp)) {
                    r.failures.emplace_back(diagram_to_text(a) + " * " + diagram_to_text(b),
                                            "wreath composition mismatch");
                }
            }
        reports.push_back(std::move(r));
    }
    return reports;
}

/// All diagrams of Br_{s+t} respecting the wall after position s.
/// Count is (s+t)!.
inline std::vector<BrauerDiagram> walled_basis(int s, int t) {
    if (s < 0 || t < 0) throw error("walled_basis: negative size");
    std::vector<BrauerDiagram> out;
    for (const auto& d : enumerate_diagrams(s + t, 1)) {
        BrauerDiagram b = d.strip_labels();
        if (is_walled(b, s)) out.push_back(b);
    }
    return out;
}

/// Pairwise products of walled diagrams stay walled (up to delta_0 loops).
inline bool walled_closed_under_mul(int s, int t) {
    std::vector<BrauerDiagram> basis = walled_basis(s, t);
    for (const auto& a : basis)
        for (const auto& b : basis) {
            CompositionResult comp = compose(to_labeled(a, 1), to_labeled(b, 1));
            if (!is_walled(comp.diagram.strip_labels(), s)) return false;
        }
    return true;
}

} // namespace cybra

#endif
