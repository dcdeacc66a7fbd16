#include "svira/series.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace svira {

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// (e - offset) * gran as an integer index; nullopt if off the grid.
std::optional<long> gridIndex(const Rational& e, const Rational& offset, int gran) {
    Rational idx = (e - offset) * Rational(gran);
    if (!idx.isInteger()) return std::nullopt;
    return idx.toLong();
}

}  // namespace

CharSeries::CharSeries(Rational offset, int gran, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), gran_(gran), c_(std::move(coeffs)) {
    if (gran_ <= 0) throw std::invalid_argument("CharSeries: gran must be positive");
}

CharSeries CharSeries::zeros(const Rational& offset, int gran, long len) {
    if (len < 0) len = 0;
    return CharSeries(offset, gran, std::vector<Rational>(static_cast<size_t>(len)));
}

CharSeries CharSeries::one(const Rational& order, int gran) {
    Rational lenR = order * Rational(gran);
    if (!lenR.isInteger() || lenR.sign() <= 0)
        throw std::invalid_argument("CharSeries::one: order must be a positive multiple of 1/gran");
    CharSeries s = zeros(Rational(0), gran, lenR.toLong());
    s.at(0) = Rational(1);
    return s;
}

CharSeries CharSeries::monomial(const Rational& coeff, const Rational& exponent, const Rational& order,
                                int gran) {
    Rational lenR = order * Rational(gran);
    if (!lenR.isInteger() || lenR.sign() <= 0)
        throw std::invalid_argument("CharSeries::monomial: bad order");
    CharSeries s = zeros(exponent, gran, lenR.toLong());
    s.at(0) = coeff;
    return s;
}

Rational CharSeries::coeffAt(const Rational& e) const {
    if (e >= bound())
        throw std::domain_error("CharSeries: coefficient at " + e.str() + " beyond truncation bound " +
                                bound().str());
    if (e < offset_) return Rational(0);
    auto k = gridIndex(e, offset_, gran_);
    if (!k) return Rational(0);
    return c_[static_cast<size_t>(*k)];
}

bool CharSeries::isZeroThrough(const Rational& absBound) const {
    if (absBound > bound())
        throw std::domain_error("CharSeries: zero test beyond truncation bound");
    for (long k = 0; k < len(); ++k) {
        if (expAt(k) >= absBound) break;
        if (!c_[static_cast<size_t>(k)].isZero()) return false;
    }
    return true;
}

std::optional<Rational> CharSeries::leadingExp() const {
    for (long k = 0; k < len(); ++k)
        if (!c_[static_cast<size_t>(k)].isZero()) return expAt(k);
    return std::nullopt;
}

CharSeries CharSeries::withGran(int g) const {
    if (g == gran_) return *this;
    if (g <= 0 || g % gran_ != 0)
        throw std::invalid_argument("CharSeries::withGran: new gran must be a multiple of old");
    long f = g / gran_;
    CharSeries r = zeros(offset_, g, len() * f);
    for (long k = 0; k < len(); ++k) r.at(k * f) = c_[static_cast<size_t>(k)];
    return r;
}

CharSeries CharSeries::truncated(const Rational& absBound) const {
    Rational relLen = (absBound - offset_) * Rational(gran_);
    long newLen = 0;
    if (relLen.sign() > 0) {
        // ceil(relLen): validity must not extend beyond absBound
        Integer n = relLen.num(), d = relLen.den();
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        newLen = Rational(q).toLong();
    }
    newLen = std::min(newLen, len());
    CharSeries r = *this;
    r.c_.resize(static_cast<size_t>(newLen));
    return r;
}

CharSeries CharSeries::scaled(const Rational& s) const {
    CharSeries r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

CharSeries CharSeries::shifted(const Rational& dExp) const {
    CharSeries r = *this;
    r.offset_ += dExp;
    return r;
}

CharSeries CharSeries::combined(const CharSeries& a, const CharSeries& b, int sign) {
    Rational newOffset = std::min(a.offset_, b.offset_);
    Rational diff = a.offset_ - b.offset_;
    long g = lcm_long(lcm_long(a.gran_, b.gran_), static_cast<long>(diff.den().get_si()));
    if (g > (1L << 20))
        throw std::domain_error("CharSeries: incompatible gradings (offset difference " + diff.str() + ")");
    Rational newBound = std::min(a.bound(), b.bound());
    Rational lenR = (newBound - newOffset) * Rational(g);
    long newLen = lenR.sign() > 0 ? lenR.toLong() : 0;
    CharSeries r = zeros(newOffset, static_cast<int>(g), newLen);
    for (long k = 0; k < a.len(); ++k) {
        if (a.c_[static_cast<size_t>(k)].isZero()) continue;
        auto idx = gridIndex(a.expAt(k), newOffset, static_cast<int>(g));
        if (idx && *idx < newLen) r.at(*idx) += a.c_[static_cast<size_t>(k)];
    }
    for (long k = 0; k < b.len(); ++k) {
        if (b.c_[static_cast<size_t>(k)].isZero()) continue;
        auto idx = gridIndex(b.expAt(k), newOffset, static_cast<int>(g));
        if (idx && *idx < newLen) {
            if (sign > 0)
                r.at(*idx) += b.c_[static_cast<size_t>(k)];
            else
                r.at(*idx) -= b.c_[static_cast<size_t>(k)];
        }
    }
    return r;
}

CharSeries operator*(const CharSeries& a, const CharSeries& b) {
    long g = lcm_long(a.gran_, b.gran_);
    CharSeries aa = a.withGran(static_cast<int>(g));
    CharSeries bb = b.withGran(static_cast<int>(g));
    // Relative validity is the min of the operands' relative validities.
    long newLen = std::min(aa.len(), bb.len());
    CharSeries r = CharSeries::zeros(aa.offset_ + bb.offset_, static_cast<int>(g), newLen);
    for (long i = 0; i < aa.len() && i < newLen; ++i) {
        const Rational& ai = aa.c_[static_cast<size_t>(i)];
        if (ai.isZero()) continue;
        long jmax = std::min(bb.len(), newLen - i);
        for (long j = 0; j < jmax; ++j) {
            const Rational& bj = bb.c_[static_cast<size_t>(j)];
            if (bj.isZero()) continue;
            r.at(i + j) += ai * bj;
        }
    }
    return r;
}

void CharSeries::addScaledInPlace(const CharSeries& o, const Rational& s) {
    if (s.isZero()) return;
    if (o.bound() < bound())
        throw std::domain_error("CharSeries::addScaledInPlace: operand validity too short");
    Rational diff = o.offset_ - offset_;
    Rational step = diff * Rational(gran_);
    if (!step.isInteger() || o.gran_ % gran_ != 0) {
        // Fall back through the general combine path.
        *this = combined(*this, o.scaled(s), 1);
        return;
    }
    long f = o.gran_ / gran_;
    if (f != 1) {
        *this = combined(*this, o.scaled(s), 1);
        return;
    }
    long shift = step.toLong();
    for (long k = 0; k < o.len(); ++k) {
        long idx = k + shift;
        if (idx < 0 || idx >= len()) continue;
        at(idx) += s * o.c_[static_cast<size_t>(k)];
    }
}

CharSeries CharSeries::mulBinomialFactor(const Rational& coeff, const Rational& step) const {
    if (step.sign() <= 0) throw std::invalid_argument("mulBinomialFactor: step must be positive");
    Rational idxR = step * Rational(gran_);
    CharSeries src = *this;
    if (!idxR.isInteger()) {
        long g = lcm_long(gran_, static_cast<long>(step.den().get_si()));
        src = withGran(static_cast<int>(g));
        idxR = step * Rational(src.gran_);
    }
    long shift = idxR.toLong();
    CharSeries r = src;
    for (long k = src.len() - 1; k >= shift; --k)
        r.at(k) += coeff * src.c_[static_cast<size_t>(k - shift)];
    return r;
}

CharSeries CharSeries::mulInvFactor(const Rational& coeff, const Rational& step) const {
    if (step.sign() <= 0) throw std::invalid_argument("mulInvFactor: step must be positive");
    Rational idxR = step * Rational(gran_);
    CharSeries src = *this;
    if (!idxR.isInteger()) {
        long g = lcm_long(gran_, static_cast<long>(step.den().get_si()));
        src = withGran(static_cast<int>(g));
        idxR = step * Rational(src.gran_);
    }
    long shift = idxR.toLong();
    CharSeries r = src;
    // (sum_k r_k q^k)(1 - c q^s) = src  =>  r_k = src_k + c r_{k-s}
    for (long k = shift; k < r.len(); ++k)
        r.at(k) += coeff * r.at(k - shift);
    return r;
}

std::optional<CharSeries::Mismatch> CharSeries::firstMismatch(const CharSeries& a, const CharSeries& b,
                                                              const Rational& through) {
    if (through > a.bound() || through > b.bound())
        throw std::domain_error("CharSeries::firstMismatch: comparison beyond truncation bound");
    std::set<Rational> exps;
    for (long k = 0; k < a.len(); ++k)
        if (!a.c_[static_cast<size_t>(k)].isZero() && a.expAt(k) < through) exps.insert(a.expAt(k));
    for (long k = 0; k < b.len(); ++k)
        if (!b.c_[static_cast<size_t>(k)].isZero() && b.expAt(k) < through) exps.insert(b.expAt(k));
    for (const Rational& e : exps) {
        Rational ca = a.coeffAt(e), cb = b.coeffAt(e);
        if (ca != cb) return Mismatch{e, ca, cb};
    }
    return std::nullopt;
}

std::string CharSeries::str(int maxTerms) const {
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (long k = 0; k < len(); ++k) {
        const Rational& c = c_[static_cast<size_t>(k)];
        if (c.isZero()) continue;
        if (shown == maxTerms) {
            os << " + ...";
            return os.str();
        }
        Rational e = expAt(k);
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (e.isZero()) {
            os << mag.str();
        } else {
            if (!mag.isOne()) os << mag.str() << "*";
            os << "q";
            if (!e.isOne()) os << "^" << (e.isInteger() ? e.str() : "(" + e.str() + ")");
        }
        ++shown;
    }
    if (first) os << "0";
    os << "  (O(q^" << bound().str() << "))";
    return os.str();
}

void TwoVarSeries::setStratum(int z, CharSeries s) {
    if (s.bound() < bound())
        throw std::domain_error("TwoVarSeries::setStratum: stratum validity too short");
    // Invariant: a stratum never claims nonzero coefficients below the
    // object's global offset, and its stored offset is >= that offset.
    if (s.offset() < offset_) {
        long g = lcm_long(s.gran(), static_cast<long>((offset_ - s.offset()).den().get_si()));
        CharSeries fine = s.withGran(static_cast<int>(g));
        std::vector<Rational> kept;
        for (long k = 0; k < fine.len(); ++k) {
            if (fine.expAt(k) < offset_) {
                if (!fine.at(k).isZero())
                    throw std::domain_error("TwoVarSeries::setStratum: coefficient below the global offset");
            } else {
                kept.push_back(fine.at(k));
            }
        }
        // First kept exponent may sit above offset_ on a coarse grid; recompute it.
        Rational firstExp = offset_;
        for (long k = 0; k < fine.len(); ++k) {
            if (fine.expAt(k) >= offset_) {
                firstExp = fine.expAt(k);
                break;
            }
        }
        s = CharSeries(firstExp, static_cast<int>(g), std::move(kept));
    }
    CharSeries t = s.truncated(bound());
    if (t.isZeroThrough(std::min(t.bound(), bound()))) {
        strata_.erase(z);
        return;
    }
    strata_[z] = std::move(t);
}

Rational TwoVarSeries::coeffAt(int z, const Rational& e) const {
    if (e >= bound()) throw std::domain_error("TwoVarSeries: coefficient beyond truncation bound");
    auto it = strata_.find(z);
    if (it == strata_.end()) return Rational(0);
    if (e >= it->second.bound()) return Rational(0);
    return it->second.coeffAt(e);
}

TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b) {
    TwoVarSeries r(a.offset_ + b.offset_, std::min(a.order_, b.order_));
    Rational rbound = r.bound();
    std::map<int, CharSeries> acc;
    for (const auto& [za, sa] : a.strata_) {
        auto la = sa.leadingExp();
        if (!la) continue;
        for (const auto& [zb, sb] : b.strata_) {
            auto lb = sb.leadingExp();
            if (!lb) continue;
            if (*la + *lb >= rbound) continue;  // contributes nothing below the bound
            CharSeries prod = sa * sb;
            auto it = acc.find(za + zb);
            if (it == acc.end())
                acc.emplace(za + zb, std::move(prod));
            else
                it->second = it->second + prod;
        }
    }
    for (auto& [z, s] : acc) {
        if (s.bound() < rbound) {
            // Product validity fell short only if inputs were inconsistent.
            throw std::logic_error("TwoVarSeries: stratum validity shorter than declared bound");
        }
        r.setStratum(z, std::move(s));
    }
    return r;
}

TwoVarSeries TwoVarSeries::combined(const TwoVarSeries& a, const TwoVarSeries& b, int sign) {
    TwoVarSeries r(std::min(a.offset_, b.offset_), std::min(a.bound(), b.bound()) - std::min(a.offset_, b.offset_));
    Rational rbound = r.bound();
    std::set<int> zs;
    for (const auto& [z, s] : a.strata_) zs.insert(z);
    for (const auto& [z, s] : b.strata_) zs.insert(z);
    for (int z : zs) {
        auto ia = a.strata_.find(z);
        auto ib = b.strata_.find(z);
        if (ia != a.strata_.end() && ib != b.strata_.end()) {
            CharSeries s = sign > 0 ? ia->second + ib->second : ia->second - ib->second;
            r.setStratum(z, s.truncated(rbound));
        } else if (ia != a.strata_.end()) {
            r.setStratum(z, ia->second.truncated(rbound));
        } else {
            CharSeries s = sign > 0 ? ib->second : ib->second.scaled(Rational(-1));
            r.setStratum(z, s.truncated(rbound));
        }
    }
    return r;
}

TwoVarSeries TwoVarSeries::scaledBySeries(const CharSeries& s) const {
    TwoVarSeries r(offset_ + s.offset(), std::min(order_, s.order()));
    for (const auto& [z, st] : strata_) r.setStratum(z, st * s);
    return r;
}

TwoVarSeries TwoVarSeries::scaled(const Rational& s) const {
    TwoVarSeries r(offset_, order_);
    if (s.isZero()) return r;
    for (const auto& [z, st] : strata_) r.setStratum(z, st.scaled(s));
    return r;
}

void TwoVarSeries::subtractScaledShifted(const TwoVarSeries& o, const Rational& s, const Rational& shift) {
    if (s.isZero()) return;
    for (const auto& [z, st] : o.strata_) {
        CharSeries term = st.shifted(shift).scaled(-s);
        if (term.bound() < bound())
            throw std::domain_error("TwoVarSeries::subtractScaledShifted: operand validity too short");
        auto it = strata_.find(z);
        if (it == strata_.end()) {
            setStratum(z, std::move(term));
        } else {
            CharSeries sum = it->second + term;
            strata_.erase(it);
            setStratum(z, std::move(sum));
        }
    }
    prune();
}

void TwoVarSeries::prune() {
    for (auto it = strata_.begin(); it != strata_.end();) {
        Rational b = std::min(bound(), it->second.bound());
        if (it->second.isZeroThrough(b))
            it = strata_.erase(it);
        else
            ++it;
    }
}

std::optional<TwoVarSeries::Mismatch> TwoVarSeries::firstMismatch(const TwoVarSeries& a,
                                                                  const TwoVarSeries& b,
                                                                  const Rational& through) {
    std::set<int> zs;
    for (const auto& [z, s] : a.strata_) zs.insert(z);
    for (const auto& [z, s] : b.strata_) zs.insert(z);
    for (int z : zs) {
        CharSeries sa = a.strata_.count(z) ? a.strata_.at(z) : CharSeries::zeros(through - 1, 1, 1);
        CharSeries sb = b.strata_.count(z) ? b.strata_.at(z) : CharSeries::zeros(through - 1, 1, 1);
        auto mm = CharSeries::firstMismatch(sa, sb, through);
        if (mm) return Mismatch{z, mm->exponent, mm->lhs, mm->rhs};
    }
    return std::nullopt;
}

std::string TwoVarSeries::str(int maxStrata, int maxTerms) const {
    std::ostringstream os;
    int shown = 0;
    for (const auto& [z, s] : strata_) {
        if (shown == maxStrata) {
            os << "...";
            break;
        }
        os << "z^" << z << ": " << s.str(maxTerms) << "\n";
        ++shown;
    }
    if (strata_.empty()) os << "0\n";
    return os.str();
}

}  // namespace svira
