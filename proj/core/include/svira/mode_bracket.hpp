#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "svira/param_poly.hpp"
#include "svira/rational.hpp"

namespace svira {

// Polynomial in the two formal mode indices (alpha for the first operand's
// index, beta for the second's), coefficients polynomial in the central
// parameter c.
class IndexPoly {
  public:
    IndexPoly() = default;
    static IndexPoly constant(CPoly v);
    static IndexPoly constant(const Rational& v) { return constant(CPoly(v)); }
    static IndexPoly alpha();
    static IndexPoly beta();
    // Polynomial in alpha only (coefficient i belongs to alpha^i).
    static IndexPoly fromAlphaPoly(const Poly<CPoly>& p);

    bool isZero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, CPoly>& terms() const { return terms_; }

    IndexPoly& operator+=(const IndexPoly& o);
    IndexPoly& operator-=(const IndexPoly& o);
    friend IndexPoly operator+(IndexPoly a, const IndexPoly& b) { a += b; return a; }
    friend IndexPoly operator-(IndexPoly a, const IndexPoly& b) { a -= b; return a; }
    friend IndexPoly operator*(const IndexPoly& a, const IndexPoly& b);
    IndexPoly scaled(const CPoly& s) const;

    // Specializes (alpha, beta); the result is still polynomial in c.
    CPoly eval(const Rational& alphaVal, const Rational& betaVal) const;

    friend bool operator==(const IndexPoly& a, const IndexPoly& b) { return a.terms_ == b.terms_; }

    std::string str(const std::string& aName = "m", const std::string& bName = "n") const;

  private:
    // (deg alpha, deg beta) -> coefficient; zero coefficients never stored.
    std::map<std::pair<int, int>, CPoly> terms_;
};

// C(alpha + shift, k) expanded as a polynomial in alpha.
Poly<CPoly> binomial_poly(const Rational& shift, unsigned long k);

// A term of some product a_(i)b: a field symbol, the formal derivative of a
// field symbol, or a multiple of the vacuum.
struct FieldTerm {
    enum class Kind { Field, Deriv, Vacuum };
    Kind kind = Kind::Field;
    std::string symbol;  // empty for Vacuum
    CPoly coeff;
};

struct FieldSpec {
    std::string name;
    Rational weight;
    bool odd = false;
};

// Graded (anti)commutator of two mode families, collected canonically:
// field terms at the combined index alpha+beta, plus central contributions
// supported on affine lines alpha + beta = K.
class ModeExpr {
  public:
    bool anticommutator = false;
    // symbol -> coefficient polynomial in (alpha, beta)
    std::map<std::string, IndexPoly> fieldTerms;
    // K -> coefficient polynomial in alpha, valid on the locus alpha+beta=K
    std::map<Rational, Poly<CPoly>> centralTerms;

    void addField(const std::string& sym, const IndexPoly& p);
    void addCentral(const Rational& K, const Poly<CPoly>& p);

    friend bool operator==(const ModeExpr& a, const ModeExpr& b) {
        return a.anticommutator == b.anticommutator && a.fieldTerms == b.fieldTerms &&
               a.centralTerms == b.centralTerms;
    }

    // Value at integer indices: per-symbol coefficient and the central part
    // (nonzero only when alphaVal + betaVal hits a supported K).
    struct SampledValue {
        std::map<std::string, CPoly> fields;
        CPoly central;
        friend bool operator==(const SampledValue&, const SampledValue&) = default;
    };
    SampledValue sample(const Rational& alphaVal, const Rational& betaVal) const;

    std::string str(const std::string& aName = "m", const std::string& bName = "n") const;
};

// Finite table of products a_(i)b for registered field pairs; the bracket is
// the finite Borcherds sum over the table.
class FieldAlgebra {
  public:
    void defineField(FieldSpec spec);
    // Declares the full product table of the ordered pair (a, b); entries not
    // listed are zero. Weight consistency of every term is checked here.
    void defineProducts(const std::string& a, const std::string& b,
                        std::map<long, std::vector<FieldTerm>> table);

    const FieldSpec& field(const std::string& name) const;
    bool hasProducts(const std::string& a, const std::string& b) const;

    // [A(alpha), B(beta)]_{-+}: commutator, or anticommutator when both odd.
    ModeExpr bracket(const std::string& a, const std::string& b) const;

  private:
    std::map<std::string, FieldSpec> fields_;
    std::map<std::pair<std::string, std::string>, std::map<long, std::vector<FieldTerm>>> products_;
};

// Builders for the standard tables.
void define_virasoro(FieldAlgebra& alg, const std::string& name, const CPoly& central);
void define_free_fermion(FieldAlgebra& alg, const std::string& name);
// The f/a pair of the characterization proof: a_(2)a = (2 c_f/3) 1,
// a_(1)a = 0, a_(0)a = 2f, with f acting as a Virasoro field of charge c_f.
FieldAlgebra ns_pair_algebra(const Rational& c_f);

struct NsVerifyCheck {
    std::string name;
    bool pass;
    std::string detail;
};
struct NsVerifyReport {
    bool pass = true;
    std::vector<NsVerifyCheck> checks;
};
// Verifies the Neveu-Schwarz relations [L,L], [L,G], [G,G] as polynomial
// identities in the formal indices, from the product table alone, and
// cross-checks on a sampled integer grid.
NsVerifyReport verify_ns(const Rational& c_f, int gridPointsPerIndex = 20);

}  // namespace svira
