#pragma once

#include <map>
#include <string>
#include <vector>

#include "svira/kac.hpp"
#include "svira/quad_ext.hpp"

namespace svira {

// One line of the irreducible-module list of A(1/2, c_n^1):
//   NS0   M(0,   h_{r,s,0})  -- sector canonical NS label
//   NS12  M(1/2, h_{r,s,0})  -- sector canonical NS label
//   R     M(1/16, Delta_{r,s}) -- raw Ramond label, sign of Delta retained
enum class ModuleKind { NS0, NS12, R };

struct ModuleLabel {
    ModuleKind kind = ModuleKind::NS0;
    SuperLabel sector;

    friend bool operator==(const ModuleLabel&, const ModuleLabel&) = default;
    friend auto operator<=>(const ModuleLabel&, const ModuleLabel&) = default;
    std::string str() const;
};

std::vector<ModuleLabel> module_catalog(long n);

// sigma_e-conjugate label: NS labels are fixed, R labels flip the Delta sign.
ModuleLabel sigma_conjugate(const ModuleLabel& m);

// Prop-4.5-style decomposition into L(c_n^0, h_{r,j}) (x) L(c_{n+1}^0, h_{j,s})
// summands; j runs over one congruence class mod 2 in 1..n+2.
std::vector<std::pair<KacLabel, KacLabel>> decompose(long n, const ModuleLabel& m);

enum class InvGen { E, U, V, SigmaU, SigmaV };
std::string gen_name(InvGen g);

// Assignment of +-1 to every catalog module; componentwise multiplication.
struct SignVector {
    std::vector<int> signs;  // aligned with module_catalog(n) order

    friend bool operator==(const SignVector&, const SignVector&) = default;
    SignVector operator*(const SignVector& o) const;
    bool isTrivial() const;
};

// tau-sign vector of a generator on the catalog; throws std::domain_error if
// a summand-wise sign fails to be constant on some module (well-definedness).
SignVector sign_vector(long n, InvGen g);

struct GroupReport {
    long n = 0;
    int rank = 0;  // rank of the span of the five sign vectors over GF(2)
    bool parityRelationsHold = false;   // the relation set matching n's parity
    bool otherParityRelationsFail = false;
    bool tauECentral = false;
    std::vector<std::string> relations;
    bool pass() const { return parityRelationsHold && otherParityRelationsFail && tauECentral && rank <= 2; }
};
GroupReport group_structure(long n);

struct CommutantReport {
    long n = 0;
    bool pass = false;
    long pairsChecked = 0;
    std::vector<std::string> lines;
};
// For odd n: every summand of a catalog module whose first factor is
// L(c_n^0, 0) has a sigma-type second factor, the congruence class of the
// module matches the theorem's list, and sigma_v = tau_e on each pair.
CommutantReport commutant_sigma_check(long n);

// Top-level zero-mode value Delta/sqrt(2) of an R module, as an element of
// Q(delta) with delta^2 = 1/(16(n+2)(n+4)).
QuadExt zero_mode_top(long n, const ModuleLabel& m);

}  // namespace svira
