#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "svira/rational.hpp"

namespace svira {

// Element a + b*delta of the quadratic extension Q(delta), delta^2 = d.
// Arithmetic is closed for a fixed d; combining elements over different
// extensions is a usage error unless one operand is purely rational.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
    static QuadExt rationalValue(Rational a) { return QuadExt(std::move(a), Rational(0), Rational(0)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; }

    bool isRational() const { return b_.isZero(); }
    bool isZero() const { return a_.isZero() && b_.isZero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Rational d = mergedD(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rational d = mergedD(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const Rational& s) { return QuadExt(x.a_ * s, x.b_ * s, x.d_); }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.b_.isZero() && y.b_.isZero()) return x.a_ == y.a_;
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // (a + b*delta)^2 has rational value iff a or b vanishes; norm-style helper:
    Rational square() const {
        QuadExt s = (*this) * (*this);
        if (!s.isRational())
            throw std::domain_error("QuadExt: square is not rational");
        return s.a();
    }

    double toDouble() const {
        if (d_.sign() < 0)
            throw std::domain_error("QuadExt: toDouble needs d >= 0");
        return a_.toDouble() + b_.toDouble() * std::sqrt(d_.toDouble());
    }

    std::string str() const {
        if (b_.isZero()) return a_.str();
        std::string s;
        if (!a_.isZero()) s = a_.str() + " + ";
        s += b_.str() + "*sqrt(" + d_.str() + ")";
        return s;
    }

  private:
    static Rational mergedD(const QuadExt& x, const QuadExt& y) {
        if (x.b_.isZero()) return y.d_;
        if (y.b_.isZero()) return x.d_;
        if (x.d_ != y.d_)
            throw std::invalid_argument("QuadExt: mismatched extensions d=" + x.d_.str() + " vs d=" + y.d_.str());
        return x.d_;
    }

    Rational a_, b_, d_;
};

}  // namespace svira
