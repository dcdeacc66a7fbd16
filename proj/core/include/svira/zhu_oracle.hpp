#pragma once

#include <map>
#include <vector>

#include "svira/linalg.hpp"
#include "svira/param_poly.hpp"
#include "svira/zhu.hpp"

namespace svira {

// Independent cross-check for the lemma-based Zhu reduction. Works at a
// specialized rational central charge: spans the twisted-Zhu ideal with the
// defining circle-element residues of the generators (omega and tau, all
// residue depths that fit under the weight cap) and decides class equality
// [m] == p([tau]) by exact membership of m - p(tau*^k lifts) in that span.
//
// The span only contains genuine ideal elements, so a positive answer proves
// equality; a negative answer means the certificate was not found under the
// cap. This module must stay independent of ZhuReducer's rewriting strategy.
class TwistedZhuOracle {
  public:
    TwistedZhuOracle(Rational c, long wcap2);

    const Rational& c() const { return c_; }
    long wcap2() const { return wcap2_; }
    size_t dimension() const { return basis_.size(); }
    size_t relationRank() const { return rows_.size(); }

    // [m] == expected evaluated at [tau], in A_tw of the vacuum module?
    bool classesAgree(const PBWMonomial& m, const XPoly& expected);

  private:
    std::vector<Rational> toVector(const PBWState& st) const;
    void addRelation(std::vector<Rational> v);
    bool reducesToZero(std::vector<Rational> v) const;
    const PBWState& tauStarPower(long k);

    Rational c_;
    long wcap2_;
    std::vector<PBWMonomial> basis_;
    std::map<PBWMonomial, size_t> index_;
    std::vector<std::vector<Rational>> rows_;  // echelonized relation span
    std::vector<size_t> pivots_;               // pivot column of each row
    std::map<long, PBWState> starPowers_;
};

}  // namespace svira
