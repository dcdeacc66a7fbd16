#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svira/rational.hpp"

namespace svira {

// Truncated exact power series in q with a rational leading exponent.
// Coefficients sit on the grid offset + k/gran for k = 0 .. len-1; every
// exponent strictly below bound() = offset + len/gran is exact, and no
// operation ever claims a coefficient at or beyond its bound.
class CharSeries {
  public:
    CharSeries() : offset_(0), gran_(1) {}
    CharSeries(Rational offset, int gran, std::vector<Rational> coeffs);

    static CharSeries zeros(const Rational& offset, int gran, long len);
    // Constant series 1 with validity [0, order).
    static CharSeries one(const Rational& order, int gran = 1);
    static CharSeries monomial(const Rational& coeff, const Rational& exponent, const Rational& order,
                               int gran = 1);

    const Rational& offset() const { return offset_; }
    int gran() const { return gran_; }
    long len() const { return static_cast<long>(c_.size()); }
    Rational bound() const { return offset_ + Rational(len(), gran_); }
    Rational order() const { return Rational(len(), gran_); }

    Rational expAt(long k) const { return offset_ + Rational(k, gran_); }
    const Rational& at(long k) const { return c_[static_cast<size_t>(k)]; }
    Rational& at(long k) { return c_[static_cast<size_t>(k)]; }

    // Coefficient of q^e; zero off the grid. Throws if e >= bound().
    Rational coeffAt(const Rational& e) const;

    bool isZeroThrough(const Rational& absBound) const;
    // Leading exponent of the first nonzero coefficient (nullopt if none stored).
    std::optional<Rational> leadingExp() const;

    // Returns a copy on a finer grid; g must be a positive multiple of gran.
    CharSeries withGran(int g) const;
    CharSeries truncated(const Rational& absBound) const;
    CharSeries scaled(const Rational& s) const;
    CharSeries shifted(const Rational& dExp) const;  // multiply by q^dExp

    friend CharSeries operator+(const CharSeries& a, const CharSeries& b) { return combined(a, b, 1); }
    friend CharSeries operator-(const CharSeries& a, const CharSeries& b) { return combined(a, b, -1); }
    friend CharSeries operator*(const CharSeries& a, const CharSeries& b);

    // In-place *this += s * o restricted to exponents below this->bound();
    // o must be valid through this->bound().
    void addScaledInPlace(const CharSeries& o, const Rational& s);

    // Multiply by (1 + coeff * q^step), step > 0; validity preserved.
    CharSeries mulBinomialFactor(const Rational& coeff, const Rational& step) const;
    // Multiply by 1 / (1 - coeff * q^step), step > 0; validity preserved.
    CharSeries mulInvFactor(const Rational& coeff, const Rational& step) const;

    struct Mismatch {
        Rational exponent;
        Rational lhs, rhs;
    };
    // First exponent < through where coefficients differ. Both series must be
    // valid through `through`.
    static std::optional<Mismatch> firstMismatch(const CharSeries& a, const CharSeries& b,
                                                 const Rational& through);

    std::string str(int maxTerms = 12) const;

  private:
    static CharSeries combined(const CharSeries& a, const CharSeries& b, int sign);

    Rational offset_;
    int gran_;
    std::vector<Rational> c_;
};

// Truncated exact series in (q, z): finitely many z-strata, each a CharSeries,
// all valid through the common absolute bound offset + order.
class TwoVarSeries {
  public:
    TwoVarSeries() : offset_(0), order_(0) {}
    TwoVarSeries(Rational offset, Rational order) : offset_(std::move(offset)), order_(std::move(order)) {}

    const Rational& offset() const { return offset_; }
    const Rational& order() const { return order_; }
    Rational bound() const { return offset_ + order_; }

    const std::map<int, CharSeries>& strata() const { return strata_; }
    bool hasStratum(int z) const { return strata_.count(z) != 0; }
    void setStratum(int z, CharSeries s);
    Rational coeffAt(int z, const Rational& e) const;

    int minZ() const { return strata_.empty() ? 0 : strata_.begin()->first; }
    int maxZ() const { return strata_.empty() ? 0 : strata_.rbegin()->first; }

    friend TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b);
    friend TwoVarSeries operator+(const TwoVarSeries& a, const TwoVarSeries& b) { return combined(a, b, 1); }
    friend TwoVarSeries operator-(const TwoVarSeries& a, const TwoVarSeries& b) { return combined(a, b, -1); }

    TwoVarSeries scaledBySeries(const CharSeries& s) const;
    TwoVarSeries scaled(const Rational& s) const;
    // *this -= s * q^shift * o, stratum by stratum (used by the GKO extraction).
    void subtractScaledShifted(const TwoVarSeries& o, const Rational& s, const Rational& shift);

    // Drops strata that vanish below the bound.
    void prune();

    struct Mismatch {
        int z;
        Rational exponent;
        Rational lhs, rhs;
    };
    static std::optional<Mismatch> firstMismatch(const TwoVarSeries& a, const TwoVarSeries& b,
                                                 const Rational& through);

    std::string str(int maxStrata = 7, int maxTerms = 6) const;

  private:
    static TwoVarSeries combined(const TwoVarSeries& a, const TwoVarSeries& b, int sign);

    Rational offset_;
    Rational order_;
    std::map<int, CharSeries> strata_;
};

}  // namespace svira
