#pragma once

#include <map>
#include <string>
#include <vector>

#include "svira/linalg.hpp"
#include "svira/param_poly.hpp"
#include "svira/rational.hpp"

namespace svira {

// Normal-ordered word L(-n_1)...L(-n_i) G(-r_1)...G(-r_j) |0> with
// n_1 >= ... >= n_i >= 2 and r_1 > ... > r_j >= 3/2. G-indices are stored
// doubled (odd integers >= 3). The empty word is the vacuum.
struct PBWMonomial {
    std::vector<long> L;   // n values, weakly decreasing, >= 2
    std::vector<long> G2;  // 2r values, strictly decreasing, odd, >= 3

    long weight2() const {
        long w = 0;
        for (long n : L) w += 2 * n;
        for (long g : G2) w += g;
        return w;
    }
    Rational weight() const { return Rational(weight2(), 2); }
    size_t length() const { return L.size() + G2.size(); }
    bool isVacuum() const { return L.empty() && G2.empty(); }
    bool isValid() const;

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
        long wa = a.weight2(), wb = b.weight2();
        if (wa != wb) return wa < wb;
        if (a.L != b.L) return a.L < b.L;
        return a.G2 < b.G2;
    }
    std::string str() const;
};

// Linear combination of PBW monomials, coefficients polynomial in c.
using PBWState = std::map<PBWMonomial, CPoly>;

void state_add(PBWState& dst, const PBWMonomial& m, const CPoly& coeff);
void state_add_scaled(PBWState& dst, const PBWState& src, const CPoly& s);
std::string state_str(const PBWState& st);

// One generator of the Neveu-Schwarz algebra: L(idx2/2) with even idx2,
// or G(idx2/2) with odd idx2.
struct SuperGen {
    bool isL = true;
    long idx2 = 0;  // doubled index; even for L, odd for G

    std::string str() const;
};
using SuperWord = std::vector<SuperGen>;

// "L-3,G-5/2,G-3/2" -> L(-3) G(-5/2) G(-3/2); throws std::invalid_argument.
SuperWord parse_super_word(const std::string& spec);

// Applies one generator to a normal-ordered state, rewriting with the
// Neveu-Schwarz relations; vacuum annihilation L(k)|0> = 0 for k >= -1 and
// G(r)|0> = 0 for r >= -1/2 (the quotient kills L(-1)|0> and G(-1/2)|0>).
PBWState apply_gen(const SuperGen& g, const PBWState& st);

PBWState normal_order(const SuperWord& word);

// Reduction to the twisted Zhu algebra image C[X], X = [tau]; generic
// central parameter carried as the polynomial variable c.
class ZhuReducer {
  public:
    ParamPoly reduce(const PBWMonomial& m);
    ParamPoly reduce(const PBWState& st);

  private:
    std::map<PBWMonomial, ParamPoly> memo_;
};

// All PBW monomials of doubled weight w2 (sorted), and all with weight2 <= w2.
std::vector<PBWMonomial> pbw_basis(long w2);
std::vector<PBWMonomial> pbw_basis_up_to(long w2);

// prod (X - Delta_{r,s}^{(n)}) over the Ramond rectangle r-s odd; the +-Delta
// pairing makes the coefficients rational.
XPoly minimal_poly(long n);
long minimal_poly_degree(long n);  // parity formula

// Exact matrices of L(1), L(2), G(1/2), G(3/2) between graded pieces of the
// vacuum module at a specialized central charge.
class VermaAction {
  public:
    VermaAction(Rational c, Rational levelBound);

    const Rational& c() const { return c_; }
    long maxWeight2() const { return maxW2_; }
    const std::vector<PBWMonomial>& basis(long w2) const;
    // Matrix of op from the weight2 stratum to the target stratum
    // (rows = target basis, columns = source basis).
    RatMatrix matrix(const SuperGen& op, long w2) const;

  private:
    Rational c_;
    long maxW2_;
    mutable std::map<long, std::vector<PBWMonomial>> basis_;
    mutable std::map<std::pair<std::pair<bool, long>, long>, RatMatrix> mats_;
};

struct SingularVector {
    long weight2 = 0;
    Rational c;
    std::vector<std::pair<PBWMonomial, Rational>> terms;
    std::string str() const;
};

// The joint kernel of L(1), L(2), G(1/2), G(3/2) at weight (n+1)(n+3)/2 with
// c = c_n^1; throws std::domain_error unless the kernel is 1-dimensional.
// Supported for n <= 3 (larger weights are out of desk reach).
SingularVector singular_vector(long n);

}  // namespace svira
