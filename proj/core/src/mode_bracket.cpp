#include "svira/mode_bracket.hpp"

#include <sstream>
#include <stdexcept>

namespace svira {

IndexPoly IndexPoly::constant(CPoly v) {
    IndexPoly p;
    if (!v.isZero()) p.terms_[{0, 0}] = std::move(v);
    return p;
}

IndexPoly IndexPoly::alpha() {
    IndexPoly p;
    p.terms_[{1, 0}] = CPoly(Rational(1));
    return p;
}

IndexPoly IndexPoly::beta() {
    IndexPoly p;
    p.terms_[{0, 1}] = CPoly(Rational(1));
    return p;
}

IndexPoly IndexPoly::fromAlphaPoly(const Poly<CPoly>& p) {
    IndexPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        if (!p.coeff(i).isZero()) r.terms_[{static_cast<int>(i), 0}] = p.coeff(i);
    return r;
}

IndexPoly& IndexPoly::operator+=(const IndexPoly& o) {
    for (const auto& [k, v] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = v;
        } else {
            it->second += v;
            if (it->second.isZero()) terms_.erase(it);
        }
    }
    return *this;
}

IndexPoly& IndexPoly::operator-=(const IndexPoly& o) { return *this += o.scaled(CPoly(Rational(-1))); }

IndexPoly operator*(const IndexPoly& a, const IndexPoly& b) {
    IndexPoly r;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            CPoly prod = va * vb;
            if (it == r.terms_.end()) {
                if (!prod.isZero()) r.terms_[k] = std::move(prod);
            } else {
                it->second += prod;
                if (it->second.isZero()) r.terms_.erase(it);
            }
        }
    return r;
}

IndexPoly IndexPoly::scaled(const CPoly& s) const {
    IndexPoly r;
    if (s.isZero()) return r;
    for (const auto& [k, v] : terms_) {
        CPoly p = v * s;
        if (!p.isZero()) r.terms_[k] = std::move(p);
    }
    return r;
}

CPoly IndexPoly::eval(const Rational& alphaVal, const Rational& betaVal) const {
    CPoly r;
    for (const auto& [k, v] : terms_) {
        Rational scalar = pow(alphaVal, k.first) * pow(betaVal, k.second);
        r += v.scaled(scalar);
    }
    return r;
}

std::string IndexPoly::str(const std::string& aName, const std::string& bName) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string coeff = poly_str(v, "c");
        bool wrap = coeff.find('+') != std::string::npos || coeff.find('-') != std::string::npos ||
                    coeff.find('/') != std::string::npos;
        if (k.first == 0 && k.second == 0) {
            os << coeff;
            continue;
        }
        if (coeff != "1") os << (wrap ? "(" + coeff + ")" : coeff) << "*";
        if (k.first > 0) {
            os << aName;
            if (k.first > 1) os << "^" << k.first;
            if (k.second > 0) os << "*";
        }
        if (k.second > 0) {
            os << bName;
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

Poly<CPoly> binomial_poly(const Rational& shift, unsigned long k) {
    // C(alpha + shift, k) = prod_{t=0}^{k-1} (alpha + shift - t) / k!
    Poly<CPoly> r(CPoly(Rational(1)));
    for (unsigned long t = 0; t < k; ++t) {
        Poly<CPoly> lin = Poly<CPoly>::fromCoeffs({CPoly(shift - Rational(static_cast<long>(t))),
                                                   CPoly(Rational(1))});
        r = r * lin;
        r = r.scaled(CPoly(Rational(1, static_cast<long>(t + 1))));
    }
    return r;
}

void ModeExpr::addField(const std::string& sym, const IndexPoly& p) {
    if (p.isZero()) return;
    auto it = fieldTerms.find(sym);
    if (it == fieldTerms.end()) {
        fieldTerms[sym] = p;
    } else {
        it->second += p;
        if (it->second.isZero()) fieldTerms.erase(it);
    }
}

void ModeExpr::addCentral(const Rational& K, const Poly<CPoly>& p) {
    if (p.isZero()) return;
    auto it = centralTerms.find(K);
    if (it == centralTerms.end()) {
        centralTerms[K] = p;
    } else {
        it->second += p;
        if (it->second.isZero()) centralTerms.erase(it);
    }
}

ModeExpr::SampledValue ModeExpr::sample(const Rational& alphaVal, const Rational& betaVal) const {
    SampledValue out;
    for (const auto& [sym, p] : fieldTerms) {
        CPoly v = p.eval(alphaVal, betaVal);
        if (!v.isZero()) out.fields[sym] = std::move(v);
    }
    auto it = centralTerms.find(alphaVal + betaVal);
    if (it != centralTerms.end()) out.central = it->second.eval(CPoly(alphaVal));
    return out;
}

std::string ModeExpr::str(const std::string& aName, const std::string& bName) const {
    std::ostringstream os;
    os << (anticommutator ? "{A(" : "[A(") << aName << "), B(" << bName << ")"
       << (anticommutator ? "} = " : "] = ");
    bool first = true;
    for (const auto& [sym, p] : fieldTerms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str(aName, bName) << ")*" << sym << "(" << aName << "+" << bName << ")";
    }
    for (const auto& [K, p] : centralTerms) {
        if (!first) os << " + ";
        first = false;
        os << "delta_{" << aName << "+" << bName << "," << K.str() << "}*(" << poly_str(p, aName) << ")";
    }
    if (first) os << "0";
    return os.str();
}

void FieldAlgebra::defineField(FieldSpec spec) {
    fields_[spec.name] = std::move(spec);
}

const FieldSpec& FieldAlgebra::field(const std::string& name) const {
    auto it = fields_.find(name);
    if (it == fields_.end()) throw std::invalid_argument("FieldAlgebra: unknown field " + name);
    return it->second;
}

bool FieldAlgebra::hasProducts(const std::string& a, const std::string& b) const {
    return products_.count({a, b}) != 0;
}

void FieldAlgebra::defineProducts(const std::string& a, const std::string& b,
                                  std::map<long, std::vector<FieldTerm>> table) {
    const FieldSpec& A = field(a);
    const FieldSpec& B = field(b);
    for (const auto& [i, terms] : table) {
        if (i < 0) throw std::invalid_argument("FieldAlgebra: product index must be >= 0");
        Rational wOut = A.weight + B.weight - Rational(i) - Rational(1);
        for (const auto& t : terms) {
            if (t.coeff.isZero()) continue;
            if (Rational(i) >= A.weight + B.weight)
                throw std::invalid_argument("FieldAlgebra: nonzero product above the weight bound");
            switch (t.kind) {
                case FieldTerm::Kind::Field:
                    if (field(t.symbol).weight != wOut)
                        throw std::invalid_argument("FieldAlgebra: weight mismatch in " + a + "_(" +
                                                    std::to_string(i) + ")" + b);
                    break;
                case FieldTerm::Kind::Deriv:
                    if (field(t.symbol).weight + Rational(1) != wOut)
                        throw std::invalid_argument("FieldAlgebra: derivative weight mismatch in " + a +
                                                    "_(" + std::to_string(i) + ")" + b);
                    break;
                case FieldTerm::Kind::Vacuum:
                    if (!wOut.isZero())
                        throw std::invalid_argument("FieldAlgebra: vacuum term at nonzero weight in " + a +
                                                    "_(" + std::to_string(i) + ")" + b);
                    break;
            }
        }
    }
    products_[{a, b}] = std::move(table);
}

ModeExpr FieldAlgebra::bracket(const std::string& a, const std::string& b) const {
    const FieldSpec& A = field(a);
    const FieldSpec& B = field(b);
    auto it = products_.find({a, b});
    if (it == products_.end())
        throw std::domain_error("FieldAlgebra: product table for (" + a + ", " + b +
                                ") not specified (incomplete specification)");
    ModeExpr out;
    out.anticommutator = A.odd && B.odd;
    for (const auto& [i, terms] : it->second) {
        // Physics-mode coefficient C(alpha + wt(A) - 1, i); each term in
        // a_(i)b lands on the combined mode alpha + beta of its own field.
        Poly<CPoly> C = binomial_poly(A.weight - Rational(1), static_cast<unsigned long>(i));
        IndexPoly Cpoly = IndexPoly::fromAlphaPoly(C);
        for (const auto& t : terms) {
            if (t.coeff.isZero()) continue;
            switch (t.kind) {
                case FieldTerm::Kind::Field:
                    out.addField(t.symbol, Cpoly.scaled(t.coeff));
                    break;
                case FieldTerm::Kind::Deriv: {
                    // (d u)_(k) = -k u_(k-1): at physics mode alpha+beta the
                    // factor is -(alpha + beta + wt(u)).
                    Rational wu = field(t.symbol).weight;
                    IndexPoly factor;
                    factor -= IndexPoly::alpha();
                    factor -= IndexPoly::beta();
                    factor -= IndexPoly::constant(wu);
                    out.addField(t.symbol, (Cpoly * factor).scaled(t.coeff));
                    break;
                }
                case FieldTerm::Kind::Vacuum: {
                    Rational K = Rational(i) + Rational(1) - A.weight - B.weight;
                    out.addCentral(K, C.scaled(t.coeff));
                    break;
                }
            }
        }
    }
    return out;
}

void define_virasoro(FieldAlgebra& alg, const std::string& name, const CPoly& central) {
    alg.defineField({name, Rational(2), false});
    std::map<long, std::vector<FieldTerm>> table;
    table[0] = {{FieldTerm::Kind::Deriv, name, CPoly(Rational(1))}};
    table[1] = {{FieldTerm::Kind::Field, name, CPoly(Rational(2))}};
    table[3] = {{FieldTerm::Kind::Vacuum, "", central.scaled(Rational(1, 2))}};
    alg.defineProducts(name, name, std::move(table));
}

void define_free_fermion(FieldAlgebra& alg, const std::string& name) {
    alg.defineField({name, Rational(1, 2), true});
    std::map<long, std::vector<FieldTerm>> table;
    table[0] = {{FieldTerm::Kind::Vacuum, "", CPoly(Rational(1))}};
    alg.defineProducts(name, name, std::move(table));
}

FieldAlgebra ns_pair_algebra(const Rational& c_f) {
    if (c_f.isZero()) throw std::invalid_argument("ns_pair_algebra: c_f must be nonzero");
    FieldAlgebra alg;
    define_virasoro(alg, "f", CPoly(c_f));
    alg.defineField({"a", Rational(3, 2), true});
    // f is conformal for a: f_(0)a = da, f_(1)a = (3/2) a.
    std::map<long, std::vector<FieldTerm>> fa;
    fa[0] = {{FieldTerm::Kind::Deriv, "a", CPoly(Rational(1))}};
    fa[1] = {{FieldTerm::Kind::Field, "a", CPoly(Rational(3, 2))}};
    alg.defineProducts("f", "a", std::move(fa));
    // The derived products of the characterization proof.
    std::map<long, std::vector<FieldTerm>> aa;
    aa[0] = {{FieldTerm::Kind::Field, "f", CPoly(Rational(2))}};
    aa[2] = {{FieldTerm::Kind::Vacuum, "", CPoly(Rational(2) * c_f / Rational(3))}};
    alg.defineProducts("a", "a", std::move(aa));
    return alg;
}

namespace {

ModeExpr expected_virasoro(const std::string& name, const CPoly& central) {
    ModeExpr e;
    e.anticommutator = false;
    e.addField(name, IndexPoly::alpha() - IndexPoly::beta());
    // central/12 * (alpha^3 - alpha) on alpha+beta = 0
    Poly<CPoly> p = Poly<CPoly>::fromCoeffs(
        {CPoly(), central.scaled(Rational(-1, 12)), CPoly(), central.scaled(Rational(1, 12))});
    e.addCentral(Rational(0), p);
    return e;
}

ModeExpr expected_lg(const std::string& gname) {
    ModeExpr e;
    e.anticommutator = false;
    IndexPoly p = IndexPoly::alpha().scaled(CPoly(Rational(1, 2)));
    p -= IndexPoly::beta();
    e.addField(gname, p);
    return e;
}

ModeExpr expected_gg(const std::string& lname, const CPoly& central) {
    ModeExpr e;
    e.anticommutator = true;
    e.addField(lname, IndexPoly::constant(Rational(2)));
    // central/3 * (alpha^2 - 1/4) on alpha+beta = 0
    Poly<CPoly> p = Poly<CPoly>::fromCoeffs(
        {central.scaled(Rational(-1, 12)), CPoly(), central.scaled(Rational(1, 3))});
    e.addCentral(Rational(0), p);
    return e;
}

bool grid_agrees(const ModeExpr& got, const ModeExpr& want, int points, bool halfInteger) {
    for (int i = 0; i < points; ++i) {
        for (int j = 0; j < points; ++j) {
            Rational m = Rational(i - points / 2);
            Rational r = Rational(j - points / 2);
            if (halfInteger) {
                m += Rational(1, 2);
                r += Rational(1, 2);
            }
            if (!(got.sample(m, r) == want.sample(m, r))) return false;
        }
    }
    return true;
}

}  // namespace

NsVerifyReport verify_ns(const Rational& c_f, int gridPointsPerIndex) {
    FieldAlgebra alg = ns_pair_algebra(c_f);
    NsVerifyReport rep;
    auto addCheck = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
        rep.pass = rep.pass && pass;
    };

    CPoly central(c_f);

    ModeExpr ll = alg.bracket("f", "f");
    ModeExpr llWant = expected_virasoro("f", central);
    addCheck("[L^f(m), L^f(n)]", ll == llWant, ll.str("m", "n"));
    addCheck("[L^f,L^f] grid", grid_agrees(ll, llWant, gridPointsPerIndex, false) == (ll == llWant),
             "sampled grid agrees with the symbolic verdict");

    ModeExpr lg = alg.bracket("f", "a");
    ModeExpr lgWant = expected_lg("a");
    addCheck("[L^f(m), G^a(r)]", lg == lgWant, lg.str("m", "r"));
    addCheck("[L^f,G^a] grid", grid_agrees(lg, lgWant, gridPointsPerIndex, false) == (lg == lgWant),
             "sampled grid agrees with the symbolic verdict");

    ModeExpr gg = alg.bracket("a", "a");
    ModeExpr ggWant = expected_gg("f", central);
    addCheck("{G^a(r), G^a(s)}", gg == ggWant, gg.str("r", "s"));
    addCheck("{G^a,G^a} grid", grid_agrees(gg, ggWant, gridPointsPerIndex, true) == (gg == ggWant),
             "sampled grid agrees with the symbolic verdict");

    addCheck("parity rule", !ll.anticommutator && !lg.anticommutator && gg.anticommutator,
             "anticommutator exactly when both fields are odd");
    return rep;
}

}  // namespace svira
