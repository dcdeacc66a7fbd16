#include "svira/zhu.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "svira/kac.hpp"

namespace svira {

bool PBWMonomial::isValid() const {
    for (size_t i = 0; i < L.size(); ++i) {
        if (L[i] < 2) return false;
        if (i > 0 && L[i - 1] < L[i]) return false;
    }
    for (size_t i = 0; i < G2.size(); ++i) {
        if (G2[i] < 3 || G2[i] % 2 == 0) return false;
        if (i > 0 && G2[i - 1] <= G2[i]) return false;
    }
    return true;
}

std::string PBWMonomial::str() const {
    if (isVacuum()) return "1";
    std::string s;
    for (long n : L) s += "L(-" + std::to_string(n) + ")";
    for (long g : G2) s += "G(-" + std::to_string(g) + "/2)";
    s += "1";
    return s;
}

void state_add(PBWState& dst, const PBWMonomial& m, const CPoly& coeff) {
    if (coeff.isZero()) return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst[m] = coeff;
    } else {
        it->second += coeff;
        if (it->second.isZero()) dst.erase(it);
    }
}

void state_add_scaled(PBWState& dst, const PBWState& src, const CPoly& s) {
    if (s.isZero()) return;
    for (const auto& [m, coeff] : src) state_add(dst, m, coeff * s);
}

std::string state_str(const PBWState& st) {
    if (st.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coeff] : st) {
        if (!first) os << " + ";
        first = false;
        std::string c = poly_str(coeff, "c");
        if (c == "1") {
            os << m.str();
        } else {
            bool wrap = c.find('+') != std::string::npos || c.find(' ') != std::string::npos;
            os << (wrap ? "(" + c + ")" : c) << "*" << m.str();
        }
    }
    return os.str();
}

std::string SuperGen::str() const {
    if (isL) return "L(" + std::to_string(idx2 / 2) + ")";
    std::string num = std::to_string(idx2);
    return "G(" + num + "/2)";
}

SuperWord parse_super_word(const std::string& spec) {
    SuperWord word;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        if (token.empty()) continue;
        char kind = token[0];
        if (kind != 'L' && kind != 'G')
            throw std::invalid_argument("monomial spec: token must start with L or G: " + token);
        std::string idx = token.substr(1);
        auto slash = idx.find('/');
        SuperGen g;
        g.isL = kind == 'L';
        try {
            if (slash == std::string::npos) {
                long v = std::stol(idx);
                g.idx2 = 2 * v;
            } else {
                long num = std::stol(idx.substr(0, slash));
                long den = std::stol(idx.substr(slash + 1));
                if (den != 2) throw std::invalid_argument("denominator must be 2");
                g.idx2 = num;
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("monomial spec: cannot parse index in token: " + token);
        }
        if (g.isL && g.idx2 % 2 != 0)
            throw std::invalid_argument("monomial spec: L index must be an integer: " + token);
        if (!g.isL && g.idx2 % 2 == 0)
            throw std::invalid_argument("monomial spec: G index must be half-odd: " + token);
        word.push_back(g);
    }
    if (word.empty()) throw std::invalid_argument("monomial spec: empty word");
    return word;
}

namespace {

// Straightening rules. States are linear combinations of PBW monomials;
// applying a generator rewrites with the relations
//   [L(m), L(n)] = (m-n) L(m+n) + delta_{m+n,0} (m^3-m)/12 c
//   [L(m), G(r)] = (m/2 - r) G(m+r)
//   {G(r), G(s)} = 2 L(r+s) + delta_{r+s,0} (r^2 - 1/4) c/3
// and vacuum annihilation.

PBWState applyLMono(long m, const PBWMonomial& mono);
PBWState applyGMono(long s2, const PBWMonomial& mono);

PBWState applyL(long m, const PBWState& st) {
    PBWState out;
    for (const auto& [mono, coeff] : st) state_add_scaled(out, applyLMono(m, mono), coeff);
    return out;
}

PBWState applyG(long s2, const PBWState& st) {
    PBWState out;
    for (const auto& [mono, coeff] : st) state_add_scaled(out, applyGMono(s2, mono), coeff);
    return out;
}

PBWMonomial tailOfL(const PBWMonomial& mono) {
    PBWMonomial t = mono;
    t.L.erase(t.L.begin());
    return t;
}

PBWMonomial tailOfG(const PBWMonomial& mono) {
    PBWMonomial t = mono;
    t.G2.erase(t.G2.begin());
    return t;
}

PBWState applyLMono(long m, const PBWMonomial& mono) {
    PBWState out;
    if (mono.isVacuum()) {
        if (m <= -2) {
            PBWMonomial r;
            r.L = {-m};
            state_add(out, r, CPoly(Rational(1)));
        }
        return out;
    }
    if (!mono.L.empty()) {
        long n1 = mono.L.front();
        if (m <= -n1) {
            PBWMonomial r = mono;
            r.L.insert(r.L.begin(), -m);
            state_add(out, r, CPoly(Rational(1)));
            return out;
        }
        PBWMonomial tail = tailOfL(mono);
        // L(m) L(-n1) = L(-n1) L(m) + (m+n1) L(m-n1) + delta_{m,n1} (m^3-m)/12 c
        PBWState inner = applyLMono(m, tail);
        state_add_scaled(out, applyL(-n1, inner), CPoly(Rational(1)));
        if (m + n1 != 0)
            state_add_scaled(out, applyLMono(m - n1, tail), CPoly(Rational(m + n1)));
        if (m == n1) {
            CPoly central = cvar().scaled(Rational(m * m * m - m, 12));
            state_add(out, tail, central);
        }
        return out;
    }
    // L-part empty, G-part nonempty.
    long g1 = mono.G2.front();
    if (m <= -2) {
        PBWMonomial r = mono;
        r.L.insert(r.L.begin(), -m);
        state_add(out, r, CPoly(Rational(1)));
        return out;
    }
    PBWMonomial tail = tailOfG(mono);
    // L(m) G(-r1) = G(-r1) L(m) + (m/2 + r1) G(m - r1)
    PBWState inner = applyLMono(m, tail);
    state_add_scaled(out, applyG(-g1, inner), CPoly(Rational(1)));
    state_add_scaled(out, applyGMono(2 * m - g1, tail), CPoly(Rational(m, 2) + Rational(g1, 2)));
    return out;
}

PBWState applyGMono(long s2, const PBWMonomial& mono) {
    PBWState out;
    if (mono.isVacuum()) {
        if (s2 <= -3) {
            PBWMonomial r;
            r.G2 = {-s2};
            state_add(out, r, CPoly(Rational(1)));
        }
        return out;
    }
    if (!mono.L.empty()) {
        long n1 = mono.L.front();
        PBWMonomial tail = tailOfL(mono);
        // G(s) L(-n1) = L(-n1) G(s) + (n1/2 + s) G(s - n1)
        PBWState inner = applyGMono(s2, tail);
        state_add_scaled(out, applyL(-n1, inner), CPoly(Rational(1)));
        state_add_scaled(out, applyGMono(s2 - 2 * n1, tail), CPoly(Rational(n1, 2) + Rational(s2, 2)));
        return out;
    }
    long g1 = mono.G2.front();
    if (s2 <= -3 && -s2 > g1) {
        PBWMonomial r = mono;
        r.G2.insert(r.G2.begin(), -s2);
        state_add(out, r, CPoly(Rational(1)));
        return out;
    }
    PBWMonomial tail = tailOfG(mono);
    if (-s2 == g1) {
        // G(s)^2 = L(2s), the central term vanishing since s != 0.
        state_add_scaled(out, applyLMono(s2, tail), CPoly(Rational(1)));
        return out;
    }
    // G(s) G(-r1) = -G(-r1) G(s) + 2 L(s - r1) + delta_{s,r1} (s^2-1/4) c/3
    PBWState inner = applyGMono(s2, tail);
    state_add_scaled(out, applyG(-g1, inner), CPoly(Rational(-1)));
    state_add_scaled(out, applyLMono((s2 - g1) / 2, tail), CPoly(Rational(2)));
    if (s2 == g1) {
        // (s^2 - 1/4) c/3 with s = s2/2
        Rational s = Rational(s2, 2);
        CPoly central = cvar().scaled((s * s - Rational(1, 4)) / Rational(3));
        state_add_scaled(out, PBWState{{tail, CPoly(Rational(1))}}, central);
    }
    return out;
}

}  // namespace

PBWState apply_gen(const SuperGen& g, const PBWState& st) {
    if (g.isL) {
        if (g.idx2 % 2 != 0) throw std::invalid_argument("apply_gen: L with half-odd index");
        return applyL(g.idx2 / 2, st);
    }
    if (g.idx2 % 2 == 0) throw std::invalid_argument("apply_gen: G with integer index");
    return applyG(g.idx2, st);
}

PBWState normal_order(const SuperWord& word) {
    PBWState st{{PBWMonomial{}, CPoly(Rational(1))}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) st = apply_gen(*it, st);
    return st;
}

ParamPoly ZhuReducer::reduce(const PBWMonomial& m) {
    if (!m.isValid()) throw std::invalid_argument("ZhuReducer: not a PBW monomial: " + m.str());
    auto hit = memo_.find(m);
    if (hit != memo_.end()) return hit->second;

    ParamPoly res;
    if (m.isVacuum()) {
        res = ppoly(Rational(1));
    } else if (!m.L.empty()) {
        // [L(-n) a] = (-1)^n ((n-1) [a]*[omega] + [L(0) a]) with
        // [omega] = X^2 + c/24 and [L(0)a] = wt(a) [a]; the star product in
        // the polynomial image is plain multiplication.
        long n1 = m.L.front();
        PBWMonomial tail = m;
        tail.L.erase(tail.L.begin());
        ParamPoly p = reduce(tail);
        ParamPoly omega = xvar() * xvar() + ppoly(cvar().scaled(Rational(1, 24)));
        ParamPoly r = (p * omega).scaled(CPoly(Rational(n1 - 1)));
        r += p.scaled(CPoly(tail.weight()));
        if (n1 % 2 != 0) r = r.scaled(CPoly(Rational(-1)));
        res = r;
    } else if (m.G2.size() == 1 && m.G2.front() == 3) {
        res = xvar();  // [tau] = X
    } else {
        // [G(-r) a] = -sum_{s<r} C(3/2, r-s) [G(-s) a]; G(-s)a vanishes once
        // its weight drops below zero, which bounds the sum from below.
        long g1 = m.G2.front();
        PBWMonomial tail = m;
        tail.G2.erase(tail.G2.begin());
        long tailW2 = tail.weight2();
        ParamPoly r;
        for (long s2 = g1 - 2; s2 >= -tailW2; s2 -= 2) {
            Rational coeff = binomial(Rational(3, 2), static_cast<unsigned long>((g1 - s2) / 2));
            if (coeff.isZero()) continue;
            PBWState moved = applyGMono(s2, tail);
            if (moved.empty()) continue;
            ParamPoly term = reduce(moved);
            r -= term.scaled(CPoly(coeff));
        }
        res = r;
    }
    memo_[m] = res;
    return res;
}

ParamPoly ZhuReducer::reduce(const PBWState& st) {
    ParamPoly out;
    for (const auto& [mono, coeff] : st) {
        // Reduction strictly decreases the (weight, length) measure; guard it.
        out += reduce(mono) * ppoly(coeff);
    }
    return out;
}

std::vector<PBWMonomial> pbw_basis(long w2) {
    std::vector<PBWMonomial> out;
    if (w2 < 0) return out;
    // Enumerate G-parts (strictly decreasing odd >= 3) and L-partitions of the rest.
    std::vector<long> gpart;
    std::vector<long> lpart;

    // Collect L-partitions of m2/2 into parts >= 2, weakly decreasing.
    auto emitL = [&](auto&& self, long rem, long maxPart) -> void {
        if (rem == 0) {
            PBWMonomial mono;
            mono.L = lpart;
            mono.G2 = gpart;
            out.push_back(mono);
            return;
        }
        for (long p = std::min(rem, maxPart); p >= 2; --p) {
            lpart.push_back(p);
            self(self, rem - p, p);
            lpart.pop_back();
        }
    };
    auto emitG = [&](auto&& self, long rem2, long maxG) -> void {
        if (rem2 % 2 == 0) {
            emitL(emitL, rem2 / 2, rem2 / 2);
        }
        long start = std::min(maxG, rem2);
        if (start % 2 == 0) --start;
        for (long g = start; g >= 3; g -= 2) {
            gpart.push_back(g);
            self(self, rem2 - g, g - 2);
            gpart.pop_back();
        }
    };
    emitG(emitG, w2, w2);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PBWMonomial> pbw_basis_up_to(long w2) {
    std::vector<PBWMonomial> out;
    for (long w = 0; w <= w2; ++w) {
        auto part = pbw_basis(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

long minimal_poly_degree(long n) {
    return n % 2 == 1 ? (n + 1) * (n + 3) / 2 : n * (n + 4) / 2 + 1;
}

XPoly minimal_poly(long n) {
    if (n < 1) throw std::invalid_argument("minimal_poly: n must be >= 1");
    XPoly out = XPoly::one();
    XPoly x2 = XPoly::variable() * XPoly::variable();
    long a = n + 2, b = n + 4;
    bool sawZero = false;
    for (long r = 1; r <= n + 1; ++r) {
        for (long s = 1; s <= n + 3; ++s) {
            if ((r - s) % 2 == 0) continue;
            long D = s * a - r * b;
            if (D == 0) {
                if (sawZero) throw std::logic_error("minimal_poly: repeated zero root");
                sawZero = true;
                out = out * XPoly::variable();
            } else if (D > 0) {
                // pair (r,s) with its mirror carrying -Delta: (X-D8)(X+D8) = X^2 - D^2/(8ab)
                Rational d2 = Rational(D * D, 8 * a * b);
                XPoly factor = x2 - XPoly(d2);
                out = out * factor;
            }
        }
    }
    if (out.degree() != minimal_poly_degree(n))
        throw std::logic_error("minimal_poly: degree mismatch against the parity formula");
    return out;
}

VermaAction::VermaAction(Rational c, Rational levelBound) : c_(std::move(c)) {
    Rational w2 = levelBound * Rational(2);
    if (!w2.isInteger() || w2.sign() < 0)
        throw std::invalid_argument("VermaAction: level bound must be a non-negative half-integer");
    maxW2_ = w2.toLong();
}

const std::vector<PBWMonomial>& VermaAction::basis(long w2) const {
    auto it = basis_.find(w2);
    if (it == basis_.end()) it = basis_.emplace(w2, pbw_basis(w2)).first;
    return it->second;
}

RatMatrix VermaAction::matrix(const SuperGen& op, long w2) const {
    if (w2 > maxW2_) throw std::invalid_argument("VermaAction: weight beyond the configured bound");
    auto key = std::make_pair(std::make_pair(op.isL, op.idx2), w2);
    auto hit = mats_.find(key);
    if (hit != mats_.end()) return hit->second;

    long targetW2 = w2 - op.idx2;  // op lowers weight by idx2/2 (doubled: idx2)
    const auto& src = basis(w2);
    const auto& dst = basis(targetW2);
    std::map<PBWMonomial, size_t> index;
    for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;

    RatMatrix m(dst.size(), std::vector<Rational>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        PBWState img = apply_gen(op, PBWState{{src[j], CPoly(Rational(1))}});
        for (const auto& [mono, coeff] : img) {
            auto it = index.find(mono);
            if (it == index.end())
                throw std::logic_error("VermaAction: image outside the target stratum");
            m[it->second][j] = coeff.eval(c_);
        }
    }
    mats_[key] = m;
    return m;
}

std::string SingularVector::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms) {
        if (!first) os << " + ";
        first = false;
        if (coeff.isOne()) {
            os << mono.str();
        } else {
            std::string c = coeff.str();
            os << (c.find('/') != std::string::npos || coeff.sign() < 0 ? "(" + c + ")" : c) << "*"
               << mono.str();
        }
    }
    return os.str();
}

SingularVector singular_vector(long n) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("singular_vector: supported for n = 1, 2, 3 only");
    long w2 = (n + 1) * (n + 3);
    Rational c = central_charge_n1(n);
    VermaAction act(c, Rational(w2, 2));

    const auto& src = act.basis(w2);
    const SuperGen ops[4] = {{true, 2}, {true, 4}, {false, 1}, {false, 3}};
    RatMatrix stacked;
    for (const auto& op : ops) {
        RatMatrix m = act.matrix(op, w2);
        for (auto& row : m) stacked.push_back(std::move(row));
    }
    auto kernel = nullspace(stacked);
    if (kernel.size() != 1)
        throw std::domain_error("singular_vector: kernel dimension is " +
                                std::to_string(kernel.size()) + ", expected 1 (n=" +
                                std::to_string(n) + ")");
    // Normalize to integral coefficients with positive leading entry.
    std::vector<Rational>& v = kernel[0];
    Integer lcmDen(1);
    for (const auto& x : v) {
        Integer d = x.den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), lcmDen.get_mpz_t(), d.get_mpz_t());
        lcmDen = lcmDen / g * d;
    }
    Rational scale = Rational(lcmDen, Integer(1));
    for (auto& x : v) x *= scale;
    for (const auto& x : v) {
        if (!x.isZero()) {
            if (x.sign() < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }

    SingularVector out;
    out.weight2 = w2;
    out.c = c;
    for (size_t i = 0; i < src.size(); ++i)
        if (!v[i].isZero()) out.terms.push_back({src[i], v[i]});
    return out;
}

}  // namespace svira
