#include "svira/zhu_oracle.hpp"

#include <stdexcept>

namespace svira {

TwistedZhuOracle::TwistedZhuOracle(Rational c, long wcap2) : c_(std::move(c)), wcap2_(wcap2) {
    basis_ = pbw_basis_up_to(wcap2_);
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;

    // Circle-element residues Res_z Y(g,z) v (1+z)^{wt g} / z^{2+k}:
    //   g = omega: L(-3-k)v + 2 L(-2-k)v + L(-1-k)v
    //   g = tau:   sum_i C(3/2, i) G(i - 5/2 - k) v
    for (const auto& v : basis_) {
        long vw2 = v.weight2();
        PBWState vstate{{v, CPoly(Rational(1))}};
        // omega relations: top weight2 = vw2 + 2k + 6
        for (long k = 0; vw2 + 2 * k + 6 <= wcap2_; ++k) {
            PBWState rel;
            state_add_scaled(rel, apply_gen({true, 2 * (-3 - k)}, vstate), CPoly(Rational(1)));
            state_add_scaled(rel, apply_gen({true, 2 * (-2 - k)}, vstate), CPoly(Rational(2)));
            state_add_scaled(rel, apply_gen({true, 2 * (-1 - k)}, vstate), CPoly(Rational(1)));
            if (!rel.empty()) addRelation(toVector(rel));
        }
        // tau relations: top weight2 = vw2 + 2k + 5
        for (long k = 0; vw2 + 2 * k + 5 <= wcap2_; ++k) {
            PBWState rel;
            // G(i - 5/2 - k): result weight 3/2 + wt(v) + k + 1 - i; stop
            // once the weight goes negative.
            long imax = (vw2 + 2 * k + 5) / 2;
            for (long i = 0; i <= imax; ++i) {
                Rational coeff = binomial(Rational(3, 2), static_cast<unsigned long>(i));
                if (coeff.isZero()) continue;
                PBWState term = apply_gen({false, 2 * i - 5 - 2 * k}, vstate);
                state_add_scaled(rel, term, CPoly(coeff));
            }
            if (!rel.empty()) addRelation(toVector(rel));
        }
    }
}

std::vector<Rational> TwistedZhuOracle::toVector(const PBWState& st) const {
    std::vector<Rational> out(basis_.size());
    for (const auto& [m, coeff] : st) {
        auto it = index_.find(m);
        if (it == index_.end())
            throw std::logic_error("TwistedZhuOracle: state escapes the weight cap: " + m.str());
        out[it->second] = coeff.eval(c_);
    }
    return out;
}

void TwistedZhuOracle::addRelation(std::vector<Rational> v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& x = v[pivots_[r]];
        if (x.isZero()) continue;
        Rational f = x;  // pivot rows are normalized to leading 1
        for (size_t j = 0; j < v.size(); ++j)
            if (!rows_[r][j].isZero()) v[j] -= f * rows_[r][j];
    }
    size_t p = v.size();
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].isZero()) {
            p = j;
            break;
        }
    if (p == v.size()) return;  // dependent
    Rational inv = Rational(1) / v[p];
    for (auto& x : v) x *= inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& x = rows_[r][p];
        if (x.isZero()) continue;
        Rational f = x;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].isZero()) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
}

bool TwistedZhuOracle::reducesToZero(std::vector<Rational> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& x = v[pivots_[r]];
        if (x.isZero()) continue;
        Rational f = x;
        for (size_t j = 0; j < v.size(); ++j)
            if (!rows_[r][j].isZero()) v[j] -= f * rows_[r][j];
    }
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

const PBWState& TwistedZhuOracle::tauStarPower(long k) {
    auto it = starPowers_.find(k);
    if (it != starPowers_.end()) return it->second;
    if (k == 0) {
        starPowers_[0] = PBWState{{PBWMonomial{}, CPoly(Rational(1))}};
        return starPowers_[0];
    }
    const PBWState& prev = tauStarPower(k - 1);
    // tau *_tw w = sum_i C(3/2, i) tau_(i-1) w = sum_i C(3/2, i) G(i - 3/2) w
    PBWState out;
    for (const auto& [mono, coeff] : prev) {
        long w2 = mono.weight2();
        long imax = (w2 + 3) / 2 + 1;
        PBWState mstate{{mono, coeff}};
        for (long i = 0; i <= imax; ++i) {
            Rational b = binomial(Rational(3, 2), static_cast<unsigned long>(i));
            if (b.isZero()) continue;
            state_add_scaled(out, apply_gen({false, 2 * i - 3}, mstate), CPoly(b));
        }
    }
    starPowers_[k] = std::move(out);
    return starPowers_[k];
}

bool TwistedZhuOracle::classesAgree(const PBWMonomial& m, const XPoly& expected) {
    if (m.weight2() > wcap2_)
        throw std::invalid_argument("TwistedZhuOracle: monomial beyond the weight cap");
    if (3 * expected.degree() > wcap2_)
        throw std::invalid_argument("TwistedZhuOracle: lift of the expected polynomial exceeds the cap");
    PBWState diff{{m, CPoly(Rational(1))}};
    for (size_t d = 0; d < expected.size(); ++d) {
        const Rational& coeff = expected.coeff(d);
        if (coeff.isZero()) continue;
        state_add_scaled(diff, tauStarPower(static_cast<long>(d)), CPoly(-coeff));
    }
    return reducesToZero(toVector(diff));
}

}  // namespace svira
