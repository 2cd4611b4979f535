#ifndef CYBRA_SCALAR_HPP
#define CYBRA_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <ostream>
#include <string>

#include "cybra/errors.hpp"

namespace cybra {

/// Exact complex scalar with rational real and imaginary parts.
/// mpq_class keeps every value canonical (lowest terms, positive denominator),
/// so equality is plain component comparison.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long v) : re_(v), im_(0) {}
    GaussRat(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussRat(long num, long den) : re_(mpq_class(num, den)), im_(0) { re_.canonicalize(); }

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw error("division by zero GaussRat");
        // 1/(a+bi) = (a-bi)/(a^2+b^2)
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Total order for use as a map key; not a numeric order.
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// "3", "-1/2", "i", "3-2i"... canonical human-readable form.
    std::string str() const {
        if (sgn(im_) == 0) return re_.get_str();
        std::string s;
        if (sgn(re_) != 0) s += re_.get_str();
        if (sgn(im_) > 0 && !s.empty()) s += "+";
        if (im_ == 1) {
            s += "i";
        } else if (im_ == -1) {
            s += "-i";
        } else {
            s += im_.get_str() + "i";
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& v) { return os << v.str(); }

private:
    mpq_class re_, im_;
};

/// Rational <-> string in lowest terms, e.g. "-3/4" or "5" ("/1" omitted).
inline std::string rat_to_string(const mpq_class& q) { return q.get_str(); }

inline mpq_class rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace cybra

#endif
