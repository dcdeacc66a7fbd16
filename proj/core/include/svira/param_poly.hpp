#pragma once

#include <string>
#include <vector>

#include "svira/poly.hpp"
#include "svira/rational.hpp"

namespace svira {

// Polynomials in the formal central parameter c.
using CPoly = Poly<Rational>;

// Polynomials in one formal variable X whose coefficients are CPoly.
// This is the value type of the twisted Zhu algebra image: X = [tau].
using ParamPoly = Poly<CPoly>;

// Polynomials in X after the central parameter has been specialized.
using XPoly = Poly<Rational>;

inline CPoly cpoly(const Rational& r) { return CPoly(r); }
inline CPoly cvar() { return CPoly::variable(); }

inline ParamPoly ppoly(const CPoly& p) { return ParamPoly(p); }
inline ParamPoly ppoly(const Rational& r) { return ParamPoly(CPoly(r)); }
inline ParamPoly xvar() { return ParamPoly::variable(); }

inline XPoly specialize_c(const ParamPoly& p, const Rational& cValue) {
    std::vector<Rational> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p.coeff(i).eval(cValue);
    return XPoly::fromCoeffs(std::move(out));
}

// Lifts an X-polynomial with rational coefficients into ParamPoly.
inline ParamPoly lift_x(const XPoly& p) {
    std::vector<CPoly> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = CPoly(p.coeff(i));
    return ParamPoly::fromCoeffs(std::move(out));
}

inline std::string poly_str(const XPoly& p, const std::string& var) {
    if (p.isZero()) return "0";
    std::string s;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        const Rational& a = p.coeff(i);
        if (a.isZero()) continue;
        Rational mag = abs(a);
        if (first) {
            if (a.sign() < 0) s += "-";
            first = false;
        } else {
            s += a.sign() < 0 ? " - " : " + ";
        }
        bool unitMag = mag.isOne();
        if (i == 0 || !unitMag) s += mag.str();
        if (i > 0) {
            if (!unitMag) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

inline std::string poly_str(const ParamPoly& p, const std::string& xv = "X", const std::string& cv = "c") {
    if (p.isZero()) return "0";
    std::string s;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        const CPoly& a = p.coeff(i);
        if (a.isZero()) continue;
        if (!first) s += " + ";
        first = false;
        std::string coeffStr = poly_str(a, cv);
        bool needParens = a.degree() > 0 || coeffStr.find('-') != std::string::npos ||
                          coeffStr.find('+') != std::string::npos;
        if (i == 0) {
            s += needParens && a.degree() > 0 ? "(" + coeffStr + ")" : coeffStr;
            continue;
        }
        if (coeffStr == "1") {
            // coefficient one: just the monomial
        } else if (needParens) {
            s += "(" + coeffStr + ")*";
        } else {
            s += coeffStr + "*";
        }
        s += xv;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace svira
