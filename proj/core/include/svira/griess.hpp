#pragma once

#include <array>
#include <string>
#include <vector>

#include "svira/linalg.hpp"
#include "svira/rational.hpp"

namespace svira {

// Coordinates over the ordered basis (e, f, x).
using GriessVector = std::array<Rational, 3>;

inline GriessVector gvec(Rational e, Rational f, Rational x) {
    return {std::move(e), std::move(f), std::move(x)};
}
inline bool gvec_is_zero(const GriessVector& v) {
    return v[0].isZero() && v[1].isZero() && v[2].isZero();
}
std::string gvec_str(const GriessVector& v, const std::array<std::string, 3>& names = {"e", "f", "x"});

// The 3-dimensional Griess algebra of A(1/2, c_n^1) over the basis (e, f, x):
// commutative product table and invariant symmetric bilinear form.
struct GriessAlgebra {
    long n = 1;
    std::array<std::array<GriessVector, 3>, 3> prod;
    std::array<std::array<Rational, 3>, 3> form;
};

GriessAlgebra standard_algebra(long n);

GriessVector mult(const GriessAlgebra& A, const GriessVector& a, const GriessVector& b);
Rational form(const GriessAlgebra& A, const GriessVector& a, const GriessVector& b);

// Multiplication operator of `a` as a 3x3 matrix (columns = a . basis).
RatMatrix mult_operator(const GriessAlgebra& A, const GriessVector& a);

struct VirasoroVector {
    GriessVector v;
    Rational charge;  // 2 (v | v)
};

// All nonzero exact solutions of y.y = 2y, by branch analysis on the
// x-coordinate; throws std::domain_error if a solution branch leaves
// the rationals (which Prop-level theory forbids for these algebras).
std::vector<VirasoroVector> classify_virasoro(const GriessAlgebra& A);

// The orthogonal Virasoro frame pair (u, v) with charges c_n^0, c_{n+1}^0.
std::pair<GriessVector, GriessVector> uv_frame(long n);

// sigma-involution attached to a sigma-type Ising vector: fixes the 0- and
// 2-eigenspaces of its multiplication operator, negates the 1/2-eigenspace.
RatMatrix sigma_involution(const GriessAlgebra& A, const GriessVector& ising);

struct AutGroup {
    long order = 0;
    std::vector<std::string> relations;
    std::vector<RatMatrix> elements;
};
AutGroup aut_group(long n);

// Re-derivation of x.x from the invariance identities alone, in the
// normalization (x|x) = 2 c_f / 3: returns (4 c_f / 3) e + 2 f.
GriessVector derive_xx(const Rational& c_f);

struct WVectorData {
    GriessVector w;
    Rational hu, hv;  // weights under u and v
};
WVectorData w_vector(long n);

// Rebuilds the full algebra from the (e, u, v) presentation (products of
// the frame plus the two e-products), recovering the (e, f, x) tables.
GriessAlgebra reconstruct_from_uv(long n);

}  // namespace svira
