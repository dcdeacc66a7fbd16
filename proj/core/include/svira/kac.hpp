#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "svira/quad_ext.hpp"
#include "svira/rational.hpp"

namespace svira {

// Label (r, s) of an irreducible module of the n-th unitary Virasoro VOA,
// 1 <= r <= n+1, 1 <= s <= n+2, up to the symmetry (r,s) ~ (n+2-r, n+3-s).
struct KacLabel {
    long n = 1;
    long r = 1;
    long s = 1;

    friend bool operator==(const KacLabel&, const KacLabel&) = default;
    friend auto operator<=>(const KacLabel&, const KacLabel&) = default;
    std::string str() const { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }
};

// Label of an N=1 sector: p = 0 (Neveu-Schwarz) stored as twop=0,
// p = 1/2 (Ramond) stored as twop=1; r - s == 2p (mod 2).
struct SuperLabel {
    long n = 1;
    long r = 1;
    long s = 1;
    int twop = 0;

    bool isNS() const { return twop == 0; }
    friend bool operator==(const SuperLabel&, const SuperLabel&) = default;
    friend auto operator<=>(const SuperLabel&, const SuperLabel&) = default;
    std::string str() const {
        return std::string(isNS() ? "NS" : "R") + "(" + std::to_string(r) + "," + std::to_string(s) + ")";
    }
};

// --- N=0 unitary series ------------------------------------------------

Rational central_charge_n0(long n);
Rational central_charge_n1(long n);
// (c_n^0, c_{n+1}^0, c_n^1); the identity c_n^0 + c_{n+1}^0 - 1/2 = c_n^1
// holds exactly.
std::tuple<Rational, Rational, Rational> central_charges(long n);

void check_label(const KacLabel& a);
KacLabel canonical(const KacLabel& a);
KacLabel mirror(const KacLabel& a);  // (r,s) -> (n+2-r, n+3-s)

Rational weight_n0(const KacLabel& a);

// Fusion rule of the unitary series; canonical labels, sorted.
std::vector<KacLabel> fuse(const KacLabel& a, const KacLabel& b);

// Labels of P_n (sigma-type sector set).
std::vector<KacLabel> sigma_set(long n);
bool in_sigma_set(const KacLabel& a);

struct InvolutionSigns {
    int tau;                   // +-1
    std::optional<int> sigma;  // defined only on P_n
};
InvolutionSigns involution_signs(const KacLabel& a);
int tau_sign(const KacLabel& a);
int sigma_sign(const KacLabel& a);  // throws std::domain_error off P_n

// --- N=1 unitary series ------------------------------------------------

void check_super_label(const SuperLabel& a);
SuperLabel super_mirror(const SuperLabel& a);  // (r,s) -> (n+2-r, n+4-s)
SuperLabel canonical_ns(const SuperLabel& a);  // NS labels only

// Delta_{r,s}^{(n)} as an element of Q(delta), delta^2 = 1/(8(n+2)(n+4)).
QuadExt super_delta(const SuperLabel& a);
Rational weight_n1(const SuperLabel& a);
std::pair<QuadExt, Rational> super_data(const SuperLabel& a);

struct SectorCatalogs {
    std::vector<SuperLabel> ns;      // canonical representatives
    std::vector<SuperLabel> ramond;  // all labels; +-Delta pairs kept distinct
    long nsRawCount = 0;             // NS labels before Kac identification
};
SectorCatalogs sector_catalogs(long n);

// Weights h_{r,s,1/2}^{(n)}(i) of potential singular vectors of the Ramond
// Verma module, even/odd branch by the parity of i.
Rational ramond_embedding_weight(long n, long r, long s, long i);
// { h(i) : 0 < |i| <= iBound }.
std::set<Rational> ramond_embedding_weights(long n, long r, long s, long iBound);

// Finite check used by the Z2-rationality proof: no Ramond highest weight
// h_{r',s',1/2} lies in any embedding-weight set H_{r,s,1/2} with |i| <= iBound.
struct DisjointnessReport {
    bool pass = true;
    std::string detail;
};
DisjointnessReport ramond_weight_sets_disjoint(long n, long iBound);

}  // namespace svira
