#include "svira/griess.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "svira/kac.hpp"

namespace svira {

std::string gvec_str(const GriessVector& v, const std::array<std::string, 3>& names) {
    std::string s;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        if (v[i].isZero()) continue;
        Rational mag = abs(v[i]);
        if (first) {
            if (v[i].sign() < 0) s += "-";
            first = false;
        } else {
            s += v[i].sign() < 0 ? " - " : " + ";
        }
        if (!mag.isOne()) s += mag.str() + "*";
        s += names[i];
    }
    return first ? "0" : s;
}

GriessAlgebra standard_algebra(long n) {
    if (n < 1) throw std::invalid_argument("standard_algebra: n must be >= 1");
    GriessAlgebra A;
    A.n = n;
    const GriessVector zero = gvec(0, 0, 0);
    for (auto& row : A.prod) row.fill(zero);
    for (auto& row : A.form) row.fill(Rational(0));

    A.prod[0][0] = gvec(2, 0, 0);                                        // e.e = 2e
    A.prod[1][1] = gvec(0, 2, 0);                                        // f.f = 2f
    A.prod[0][2] = A.prod[2][0] = gvec(0, 0, Rational(1, 2));            // e.x = x/2
    A.prod[1][2] = A.prod[2][1] = gvec(0, 0, Rational(3, 2));            // f.x = 3x/2
    A.prod[2][2] = gvec(Rational(2 * n * (n + 6)), Rational(2 * (n + 2) * (n + 4)), 0);

    A.form[0][0] = Rational(1, 4);
    A.form[1][1] = central_charge_n1(n) / Rational(2);
    A.form[2][2] = Rational(n * (n + 6));
    return A;
}

GriessVector mult(const GriessAlgebra& A, const GriessVector& a, const GriessVector& b) {
    GriessVector r = gvec(0, 0, 0);
    for (int i = 0; i < 3; ++i) {
        if (a[i].isZero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (b[j].isZero()) continue;
            Rational c = a[i] * b[j];
            for (int t = 0; t < 3; ++t) r[t] += c * A.prod[i][j][t];
        }
    }
    return r;
}

Rational form(const GriessAlgebra& A, const GriessVector& a, const GriessVector& b) {
    Rational r(0);
    for (int i = 0; i < 3; ++i) {
        if (a[i].isZero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (b[j].isZero()) continue;
            r += a[i] * b[j] * A.form[i][j];
        }
    }
    return r;
}

RatMatrix mult_operator(const GriessAlgebra& A, const GriessVector& a) {
    RatMatrix m(3, std::vector<Rational>(3));
    for (int j = 0; j < 3; ++j) {
        GriessVector basis = gvec(0, 0, 0);
        basis[j] = Rational(1);
        GriessVector col = mult(A, a, basis);
        for (int i = 0; i < 3; ++i) m[i][j] = col[i];
    }
    return m;
}

namespace {

bool is_idempotent2(const GriessAlgebra& A, const GriessVector& y) {
    GriessVector yy = mult(A, y, y);
    for (int t = 0; t < 3; ++t)
        if (yy[t] != y[t] * Rational(2)) return false;
    return true;
}

Rational require_rational_sqrt(const Rational& x, const char* what) {
    auto r = exact_sqrt(x);
    if (!r)
        throw std::domain_error(std::string("classify_virasoro: ") + what +
                                " is not a rational square: " + x.str());
    return *r;
}

}  // namespace

std::vector<VirasoroVector> classify_virasoro(const GriessAlgebra& A) {
    // The solver follows the two-branch case tree on the x-coordinate.
    // It expects the standard basis shape of the tables (e.f = 0, the mixed
    // products proportional to x, x.x without x-component) and confirms every
    // candidate by direct multiplication.
    if (!gvec_is_zero(A.prod[0][1]) || !A.prod[0][2][0].isZero() || !A.prod[0][2][1].isZero() ||
        !A.prod[1][2][0].isZero() || !A.prod[1][2][1].isZero() || !A.prod[2][2][2].isZero() ||
        A.prod[0][0] != gvec(2, 0, 0) || A.prod[1][1] != gvec(0, 2, 0))
        throw std::domain_error("classify_virasoro: tables are not in the standard basis shape");

    const Rational alpha = A.prod[0][2][2];  // e.x = alpha x
    const Rational beta = A.prod[1][2][2];   // f.x = beta x
    const Rational gamma = A.prod[2][2][0];  // (x.x)_e
    const Rational delta = A.prod[2][2][1];  // (x.x)_f

    std::vector<GriessVector> sols;

    // Branch 1: x-coordinate zero. The system splits into a^2 = a, b^2 = b.
    for (long a = 0; a <= 1; ++a)
        for (long b = 0; b <= 1; ++b) {
            if (a == 0 && b == 0) continue;
            sols.push_back(gvec(Rational(a), Rational(b), 0));
        }

    // Branch 2: x-coordinate nonzero. The x-component equation becomes
    // linear: 2 alpha a + 2 beta b = 2, and eliminating a and c^2 leaves one
    // quadratic in b with rational discriminant.
    if (alpha.isZero()) throw std::domain_error("classify_virasoro: degenerate e.x product");
    // a = (1 - beta b) / alpha
    // e-eq: 2 a^2 + gamma c^2 = 2a; f-eq: 2 b^2 + delta c^2 = 2b
    // => c^2 = 2 b (1 - b) / delta, and substituting a(b) into the e-eq
    //    yields A2 b^2 + A1 b + A0 = 0:
    if (delta.isZero()) throw std::domain_error("classify_virasoro: degenerate x.x product");
    Rational ia = Rational(1) / alpha;
    // 2 (1 - beta b)^2 ia^2 + gamma 2 b (1-b)/delta = 2 (1 - beta b) ia
    // multiply by delta/2:
    // delta ia^2 (1 - beta b)^2 + gamma b (1 - b) - delta ia (1 - beta b) = 0
    Rational A2 = delta * ia * ia * beta * beta - gamma;
    Rational A1 = -Rational(2) * delta * ia * ia * beta + gamma + delta * ia * beta;
    Rational A0 = delta * ia * ia - delta * ia;
    std::vector<Rational> broots;
    if (A2.isZero()) {
        if (!A1.isZero()) broots.push_back(-A0 / A1);
    } else {
        Rational disc = A1 * A1 - Rational(4) * A2 * A0;
        if (disc.sign() >= 0) {
            Rational sq = require_rational_sqrt(disc, "discriminant");
            broots.push_back((-A1 + sq) / (Rational(2) * A2));
            broots.push_back((-A1 - sq) / (Rational(2) * A2));
        }
    }
    for (const Rational& b : broots) {
        Rational a = (Rational(1) - beta * b) * ia;
        Rational c2 = Rational(2) * b * (Rational(1) - b) / delta;
        if (c2.sign() < 0) continue;   // complex branch: no real solution here
        if (c2.isZero()) continue;     // lands back in branch 1
        Rational c = require_rational_sqrt(c2, "x-coordinate square");
        sols.push_back(gvec(a, b, c));
        sols.push_back(gvec(a, b, -c));
    }

    std::vector<VirasoroVector> out;
    std::map<std::array<Rational, 3>, bool> seen;
    for (const auto& y : sols) {
        if (gvec_is_zero(y)) continue;
        if (!is_idempotent2(A, y))
            throw std::domain_error("classify_virasoro: candidate fails y.y = 2y: " + gvec_str(y));
        if (seen.count(y)) continue;
        seen[y] = true;
        out.push_back({y, Rational(2) * form(A, y, y)});
    }
    std::sort(out.begin(), out.end(), [](const VirasoroVector& p, const VirasoroVector& q) {
        if (p.charge != q.charge) return q.charge < p.charge;
        return p.v < q.v;
    });
    return out;
}

std::pair<GriessVector, GriessVector> uv_frame(long n) {
    if (n < 1) throw std::invalid_argument("uv_frame: n must be >= 1");
    Rational den(2 * (n + 3));
    GriessVector u = gvec(Rational(n) / den, Rational(n + 4) / den, Rational(1) / den);
    GriessVector v = gvec(Rational(1) - u[0], Rational(1) - u[1], -u[2]);
    return {u, v};
}

RatMatrix sigma_involution(const GriessAlgebra& A, const GriessVector& ising) {
    if (!is_idempotent2(A, ising))
        throw std::domain_error("sigma_involution: not a Virasoro vector");
    if (Rational(2) * form(A, ising, ising) != Rational(1, 2))
        throw std::domain_error("sigma_involution: central charge is not 1/2");
    RatMatrix M = mult_operator(A, ising);
    const Rational lams[3] = {Rational(0), Rational(1, 2), Rational(2)};
    RatMatrix P(3, std::vector<Rational>(3));
    std::vector<int> signs;
    size_t col = 0;
    for (int t = 0; t < 3; ++t) {
        RatMatrix shifted = M;
        for (int i = 0; i < 3; ++i) shifted[i][i] -= lams[t];
        for (const auto& vec : nullspace(shifted)) {
            if (col >= 3)
                throw std::domain_error("sigma_involution: too many eigenvectors");
            for (int i = 0; i < 3; ++i) P[i][col] = vec[i];
            signs.push_back(t == 1 ? -1 : 1);
            ++col;
        }
    }
    if (col != 3)
        throw std::domain_error(
            "sigma_involution: multiplication operator is not semisimple with eigenvalues {0,1/2,2}");
    RatMatrix D(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i) D[i][i] = Rational(signs[i]);
    return mat_mul(mat_mul(P, D), mat_inverse(P));
}

namespace {

GriessVector apply_mat(const RatMatrix& m, const GriessVector& v) {
    std::vector<Rational> x = mat_apply(m, {v[0], v[1], v[2]});
    return gvec(x[0], x[1], x[2]);
}

}  // namespace

AutGroup aut_group(long n) {
    GriessAlgebra A = standard_algebra(n);
    std::vector<VirasoroVector> vir = classify_virasoro(A);
    std::vector<GriessVector> isings;
    for (const auto& y : vir)
        if (y.charge == Rational(1, 2)) isings.push_back(y.v);

    std::vector<RatMatrix> gens;
    for (const auto& y : isings) gens.push_back(sigma_involution(A, y));

    // Closure under multiplication.
    std::vector<RatMatrix> elems = {mat_identity(3)};
    auto contains = [&elems](const RatMatrix& m) {
        return std::find(elems.begin(), elems.end(), m) != elems.end();
    };
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RatMatrix> next = elems;
        for (const auto& g : gens)
            for (const auto& h : elems) {
                RatMatrix p = mat_mul(g, h);
                if (std::find(next.begin(), next.end(), p) == next.end()) {
                    next.push_back(p);
                    grew = true;
                }
            }
        elems = std::move(next);
    }

    AutGroup out;
    out.order = static_cast<long>(elems.size());
    out.elements = std::move(elems);
    if (isings.size() == 1) {
        out.relations = {"sigma_e^2 = 1"};
    } else {
        out.relations = {"sigma^2 = 1 for each Ising vector"};
        // S3 presentation: any two distinct sigma-involutions braid.
        RatMatrix se = gens[0], su = gens[1];
        RatMatrix prod = mat_mul(se, su);
        RatMatrix cube = mat_mul(prod, mat_mul(prod, prod));
        if (cube == mat_identity(3)) out.relations.push_back("(sigma_e*sigma_u)^3 = 1");
    }
    return out;
}

GriessVector derive_xx(const Rational& c_f) {
    if (c_f.isZero()) throw std::invalid_argument("derive_xx: c_f must be nonzero");
    // Normalization of the characterization proof: (x|x) = 2 c_f / 3, with
    // x a highest weight vector of weight (1/2, 3/2) for <e> (x) <f>.
    Rational xnorm = Rational(2) * c_f / Rational(3);
    Rational ip_e = xnorm / Rational(2);                 // (x.x | e) = (x | x.e)   = (x|x)/2
    Rational ip_f = Rational(3) * xnorm / Rational(2);   // (x.x | f) = (x | x.f) = 3(x|x)/2
    Rational ee = Rational(1, 4);                        // (e|e)
    Rational ff = c_f / Rational(2);                     // (f|f)
    Rational alpha = ip_e / ee;
    Rational beta = ip_f / ff;
    return gvec(alpha, beta, 0);
}

WVectorData w_vector(long n) {
    if (n < 1) throw std::invalid_argument("w_vector: n must be >= 1");
    GriessAlgebra A = standard_algebra(n);
    WVectorData out;
    out.w = gvec(Rational(3 * n * (n + 6)), Rational(-(n + 2) * (n + 4)), Rational(3));
    out.hu = Rational(n + 1, n + 3);
    out.hv = Rational(n + 5, n + 3);
    auto [u, v] = uv_frame(n);
    GriessVector uw = mult(A, u, out.w), vw = mult(A, v, out.w);
    for (int t = 0; t < 3; ++t) {
        if (uw[t] != out.hu * out.w[t] || vw[t] != out.hv * out.w[t])
            throw std::domain_error("w_vector: w is not a highest weight vector for the (u,v) frame");
    }
    return out;
}

GriessAlgebra reconstruct_from_uv(long n) {
    if (n < 1) throw std::invalid_argument("reconstruct_from_uv: n must be >= 1");
    // Input data over the basis (e, u, v): frame relations and the two
    // e-products; inner products of e with the frame are *derived* from
    // invariance, not taken from the standard tables.
    Rational den(4 * (n + 3));
    GriessVector eu = gvec(Rational(n + 1, n + 3), Rational(n + 2) / den, -Rational(n + 4) / den);
    GriessVector ev = gvec(Rational(n + 5, n + 3), -Rational(n + 2) / den, Rational(n + 4) / den);

    GriessAlgebra B;  // basis (e, u, v)
    B.n = n;
    const GriessVector zero = gvec(0, 0, 0);
    for (auto& row : B.prod) row.fill(zero);
    for (auto& row : B.form) row.fill(Rational(0));
    B.prod[0][0] = gvec(2, 0, 0);
    B.prod[1][1] = gvec(0, 2, 0);
    B.prod[2][2] = gvec(0, 0, 2);
    B.prod[0][1] = B.prod[1][0] = eu;
    B.prod[0][2] = B.prod[2][0] = ev;
    // u.v = 0 already zero.
    B.form[0][0] = Rational(1, 4);
    B.form[1][1] = central_charge_n0(n) / Rational(2);
    B.form[2][2] = central_charge_n0(n + 1) / Rational(2);

    // (e|u) from 2(e|u) = (e.u | u) = eu_e (e|u) + eu_u (u|u) + eu_v (v|u).
    auto solve_ip = [&](const GriessVector& prod_ev, const Rational& uu, int which) {
        Rational denom = Rational(2) - prod_ev[0];
        if (denom.isZero()) throw std::domain_error("reconstruct_from_uv: inconsistent relations");
        return prod_ev[which] * uu / denom;
    };
    Rational ipEU = solve_ip(eu, B.form[1][1], 1);
    Rational ipEV = solve_ip(ev, B.form[2][2], 2);
    B.form[0][1] = B.form[1][0] = ipEU;
    B.form[0][2] = B.form[2][0] = ipEV;

    // Cross-check the derived inner products against invariance on the other
    // slot: (e.u | e) must equal (u | e.e) = 2 (e|u).
    {
        Rational lhs = eu[0] * B.form[0][0] + eu[1] * B.form[0][1] + eu[2] * B.form[0][2];
        if (lhs != Rational(2) * ipEU)
            throw std::domain_error("reconstruct_from_uv: invariance cross-check failed for (e|u)");
        Rational lhs2 = ev[0] * B.form[0][0] + ev[1] * B.form[0][1] + ev[2] * B.form[0][2];
        if (lhs2 != Rational(2) * ipEV)
            throw std::domain_error("reconstruct_from_uv: invariance cross-check failed for (e|v)");
    }

    // Change of basis back to (e, f, x):
    //   e = e,  f = -e + u + v,  x = 4e + (n+2)u - (n+4)v.
    std::array<GriessVector, 3> T;  // images of (e,f,x) in (e,u,v) coordinates
    T[0] = gvec(1, 0, 0);
    T[1] = gvec(-1, 1, 1);
    T[2] = gvec(4, Rational(n + 2), -Rational(n + 4));
    // Inverse map (e,u,v) -> (e,f,x) coordinates.
    RatMatrix S(3, std::vector<Rational>(3));
    {
        Rational d2(2 * (n + 3));
        // u = (n e + (n+4) f + x) / (2(n+3)), v = e + f - u.
        std::array<GriessVector, 3> img;  // images of (e,u,v) in (e,f,x) coords
        img[0] = gvec(1, 0, 0);
        img[1] = gvec(Rational(n) / d2, Rational(n + 4) / d2, Rational(1) / d2);
        img[2] = gvec(Rational(1) - img[1][0], Rational(1) - img[1][1], -img[1][2]);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) S[i][j] = img[j][i];
    }

    GriessAlgebra out;
    out.n = n;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            GriessVector p = mult(B, T[i], T[j]);  // in (e,u,v) coords
            GriessVector q = apply_mat(S, p);      // back to (e,f,x)
            out.prod[i][j] = q;
            out.form[i][j] = form(B, T[i], T[j]);
        }
    }
    return out;
}

}  // namespace svira
