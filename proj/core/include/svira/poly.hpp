#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "svira/rational.hpp"

namespace svira {

template <class T>
class Poly;

template <class T>
struct ring_one {
    static T value() { return T(1); }
};
template <class U>
struct ring_one<Poly<U>> {
    static Poly<U> value() { return Poly<U>(ring_one<U>::value()); }
};

// Dense univariate polynomial over a coefficient ring T.
// T must be default-constructible (= zero) and provide isZero(), +=, -=, *, ==.
// No trailing zero coefficients are stored, so degree() is well-defined.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(T c0) {
        if (!c0.isZero()) c_.push_back(std::move(c0));
    }
    static Poly variable() {
        Poly p;
        p.c_ = {T(), ring_one<T>::value()};
        return p;
    }
    static Poly one() { return Poly(ring_one<T>::value()); }
    static Poly fromCoeffs(std::vector<T> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    size_t size() const { return c_.size(); }

    const T& coeff(size_t i) const {
        static const T zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const T& leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.isZero() || b.isZero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, T());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].isZero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    Poly scaled(const T& s) const {
        Poly r;
        if (s.isZero()) return r;
        r.c_ = c_;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    // Multiply by the monomial x^k.
    Poly shifted(size_t k) const {
        if (isZero()) return Poly();
        Poly r;
        r.c_.assign(k, T());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    template <class U>
    U eval(const U& x) const {
        U r{};
        for (size_t i = c_.size(); i-- > 0;) {
            r = r * x + U(c_[i]);
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void trim() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }

    std::vector<T> c_;
};

}  // namespace svira
