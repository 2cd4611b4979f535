#ifndef CYBRA_DELTA_POLY_HPP
#define CYBRA_DELTA_POLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cybra/errors.hpp"
#include "cybra/scalar.hpp"

namespace cybra {

/// Polynomial in the loop parameters delta_0 .. delta_{floor(m/2)} with
/// GaussRat coefficients.  Exponent vectors are dense over that fixed
/// variable set; terms with zero coefficient are never stored.
class DeltaPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit DeltaPoly(int m = 1) : m_(check_m(m)) {}

    static DeltaPoly constant(int m, const GaussRat& c) {
        DeltaPoly p(m);
        if (!c.is_zero()) p.terms_[Exponents(p.num_vars(), 0)] = c;
        return p;
    }
    static DeltaPoly one(int m) { return constant(m, GaussRat(1)); }
    static DeltaPoly zero(int m) { return DeltaPoly(m); }

    /// The single variable delta_j.
    static DeltaPoly variable(int m, int j) {
        DeltaPoly p(m);
        if (j < 0 || j >= p.num_vars())
            throw bad_label("delta index " + std::to_string(j) + " out of range for m=" + std::to_string(m));
        Exponents e(p.num_vars(), 0);
        e[static_cast<size_t>(j)] = 1;
        p.terms_[e] = GaussRat(1);
        return p;
    }

    int modulus() const { return m_; }
    int num_vars() const { return m_ / 2 + 1; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::map<Exponents, GaussRat>& terms() const { return terms_; }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == Exponents(static_cast<size_t>(num_vars()), 0);
    }
    GaussRat constant_value() const {
        if (terms_.empty()) return GaussRat(0);
        if (!is_constant()) throw error("DeltaPoly is not constant");
        return terms_.begin()->second;
    }

    DeltaPoly operator-() const {
        DeltaPoly r(m_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    DeltaPoly& operator+=(const DeltaPoly& o) {
        require_same_context(o);
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    DeltaPoly& operator-=(const DeltaPoly& o) { return *this += -o; }

    DeltaPoly& operator*=(const DeltaPoly& o) {
        require_same_context(o);
        std::map<Exponents, GaussRat> out;
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e = ea;
                for (size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
                GaussRat c = ca * cb;
                auto it = out.find(e);
                if (it == out.end()) {
                    if (!c.is_zero()) out.emplace(std::move(e), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    DeltaPoly& scale(const GaussRat& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
    friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
    friend DeltaPoly operator*(DeltaPoly a, const DeltaPoly& b) { return a *= b; }

    friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DeltaPoly& a, const DeltaPoly& b) { return !(a == b); }

    /// Exact evaluation; the assignment must cover every variable that
    /// actually occurs.  Variables are addressed by index j of delta_j.
    GaussRat specialize(const std::map<int, GaussRat>& assignment) const {
        GaussRat total(0);
        for (const auto& [e, c] : terms_) {
            GaussRat term = c;
            for (size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                auto it = assignment.find(static_cast<int>(v));
                if (it == assignment.end())
                    throw missing_assignment("delta_" + std::to_string(v) + " unassigned");
                for (unsigned rep = 0; rep < e[v]; ++rep) term *= it->second;
            }
            total += term;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            bool has_vars = false;
            for (unsigned x : e)
                if (x) has_vars = true;
            if (!has_vars) {
                os << "(" << c.str() << ")";
                continue;
            }
            if (!c.is_one()) os << "(" << c.str() << ")";
            for (size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                os << "d" << v;
                if (e[v] > 1) os << "^" << e[v];
            }
        }
        return os.str();
    }

private:
    static int check_m(int m) {
        if (m < 1) throw bad_modulus("m must be >= 1");
        return m;
    }
    void require_same_context(const DeltaPoly& o) const {
        if (m_ != o.m_) throw context_mismatch("DeltaPoly moduli differ");
    }

    int m_;
    std::map<Exponents, GaussRat> terms_;
};

/// Product monomial prod delta_l over a multiset of normalized loop labels.
/// The empty multiset gives the constant 1.
inline DeltaPoly delta_monomial(const std::vector<int>& loops, int m) {
    const int vars = m / 2 + 1;
    for (int l : loops) {
        if (l < 0 || l >= vars)
            throw bad_label("loop label " + std::to_string(l) + " out of range for m=" + std::to_string(m));
    }
    DeltaPoly out = DeltaPoly::one(m);
    for (int l : loops) out *= DeltaPoly::variable(m, l);
    return out;
}

} // namespace cybra

#endif
