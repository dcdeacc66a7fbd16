#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace svira {

using Integer = mpz_class;

// Exact rational scalar, always reduced with positive denominator.
// Thin value wrapper around GMP's mpq_class; every quantity the library
// produces goes through this type, so no float ever enters a result path
// (floats appear only in cross-checks).
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(static_cast<signed long>(v)) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(long num, long den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
        q_.canonicalize();
    }
    Rational(const Integer& num, const Integer& den) {
        if (sgn(den) == 0)
            throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    // Parses "p", "p/q", with optional leading '-'.
    static Rational fromString(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(Integer(s), Integer(1));
            return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool isZero() const { return sgn(q_) == 0; }
    bool isOne() const { return q_ == 1; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero())
            throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // Exact conversion to long; throws if not an integer or out of range.
    long toLong() const {
        if (!isInteger())
            throw std::domain_error("Rational: not an integer: " + str());
        Integer n = num();
        if (!n.fits_slong_p())
            throw std::domain_error("Rational: integer out of long range");
        return n.get_si();
    }

    double toDouble() const { return q_.get_d(); }

    std::string str() const {
        if (isInteger())
            return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

  private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (x.isZero())
            throw std::domain_error("Rational: negative power of zero");
        return pow(Rational(1) / x, -e);
    }
    Rational r(1), b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Exact square root when x is a perfect rational square (x >= 0), else nullopt.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    Integer n = x.num(), d = x.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

// Generalized binomial C(a, k) = a(a-1)...(a-k+1) / k! for rational a,
// computed as an exact falling-factorial product.
inline Rational binomial(const Rational& a, unsigned long k) {
    Rational r(1);
    Rational t = a;
    for (unsigned long i = 0; i < k; ++i) {
        r *= t - Rational(static_cast<long>(i));
        r /= Rational(static_cast<long>(i + 1));
    }
    return r;
}

inline Rational binomial(long a, unsigned long k) { return binomial(Rational(a), k); }

}  // namespace svira
