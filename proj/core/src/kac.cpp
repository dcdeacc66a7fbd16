#include "svira/kac.hpp"

#include <algorithm>
#include <stdexcept>

namespace svira {

Rational central_charge_n0(long n) {
    if (n < 1) throw std::invalid_argument("central_charge_n0: n must be >= 1");
    return Rational(1) - Rational(6, (n + 2) * (n + 3));
}

Rational central_charge_n1(long n) {
    if (n < 1) throw std::invalid_argument("central_charge_n1: n must be >= 1");
    return Rational(3, 2) * (Rational(1) - Rational(8, (n + 2) * (n + 4)));
}

std::tuple<Rational, Rational, Rational> central_charges(long n) {
    return {central_charge_n0(n), central_charge_n0(n + 1), central_charge_n1(n)};
}

void check_label(const KacLabel& a) {
    if (a.n < 1) throw std::invalid_argument("KacLabel: n must be >= 1");
    if (a.r < 1 || a.r > a.n + 1 || a.s < 1 || a.s > a.n + 2)
        throw std::invalid_argument("KacLabel out of range: n=" + std::to_string(a.n) + " " + a.str());
}

KacLabel mirror(const KacLabel& a) { return {a.n, a.n + 2 - a.r, a.n + 3 - a.s}; }

KacLabel canonical(const KacLabel& a) {
    check_label(a);
    KacLabel m = mirror(a);
    if (m.r < a.r || (m.r == a.r && m.s < a.s)) return m;
    return a;
}

Rational weight_n0(const KacLabel& a) {
    check_label(a);
    long d = a.r * (a.n + 3) - a.s * (a.n + 2);
    return Rational(d * d - 1, 4 * (a.n + 2) * (a.n + 3));
}

std::vector<KacLabel> fuse(const KacLabel& a, const KacLabel& b) {
    check_label(a);
    check_label(b);
    if (a.n != b.n) throw std::invalid_argument("fuse: labels from different series");
    long n = a.n;
    long M = std::min(std::min(a.r, b.r), std::min(n + 2 - a.r, n + 2 - b.r));
    long N = std::min(std::min(a.s, b.s), std::min(n + 3 - a.s, n + 3 - b.s));
    std::vector<KacLabel> out;
    for (long i = 1; i <= M; ++i)
        for (long j = 1; j <= N; ++j)
            out.push_back(canonical({n, std::labs(a.r - b.r) + 2 * i - 1, std::labs(a.s - b.s) + 2 * j - 1}));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<KacLabel> sigma_set(long n) {
    if (n < 1) throw std::invalid_argument("sigma_set: n must be >= 1");
    std::vector<KacLabel> out;
    if (n % 2 == 0) {
        for (long s = 1; s <= n + 2; ++s) out.push_back({n, 1, s});
    } else {
        for (long r = 1; r <= n + 1; ++r) out.push_back({n, r, 1});
    }
    return out;
}

bool in_sigma_set(const KacLabel& a) {
    KacLabel c = canonical(a);
    // P_n consists of (1,s) labels for even n and (r,1) labels for odd n;
    // membership is a property of the module, so test both representatives.
    KacLabel m = mirror(c);
    if (a.n % 2 == 0) return c.r == 1 || m.r == 1;
    return c.s == 1 || m.s == 1;
}

int tau_sign(const KacLabel& a) {
    check_label(a);
    long idx = a.n % 2 == 0 ? a.r : a.s;
    return idx % 2 == 1 ? 1 : -1;
}

int sigma_sign(const KacLabel& a) {
    if (!in_sigma_set(a))
        throw std::domain_error("sigma_sign: label " + a.str() + " is not in P_n");
    // Normalize to the P_n-shaped representative before applying the rule.
    KacLabel c = canonical(a);
    if (a.n % 2 == 0) {
        if (c.r != 1) c = mirror(c);
        return c.s % 2 == 1 ? 1 : -1;
    }
    if (c.s != 1) c = mirror(c);
    return c.r % 2 == 1 ? 1 : -1;
}

InvolutionSigns involution_signs(const KacLabel& a) {
    InvolutionSigns out{tau_sign(a), std::nullopt};
    if (in_sigma_set(a)) out.sigma = sigma_sign(a);
    return out;
}

void check_super_label(const SuperLabel& a) {
    if (a.n < 1) throw std::invalid_argument("SuperLabel: n must be >= 1");
    if (a.twop != 0 && a.twop != 1) throw std::invalid_argument("SuperLabel: p must be 0 or 1/2");
    if (a.r < 1 || a.r > a.n + 1 || a.s < 1 || a.s > a.n + 3)
        throw std::invalid_argument("SuperLabel out of range: n=" + std::to_string(a.n) + " " + a.str());
    if (((a.r - a.s) % 2 + 2) % 2 != a.twop)
        throw std::invalid_argument("SuperLabel parity violation: " + a.str() +
                                    " needs r-s == 2p (mod 2)");
}

SuperLabel super_mirror(const SuperLabel& a) { return {a.n, a.n + 2 - a.r, a.n + 4 - a.s, a.twop}; }

SuperLabel canonical_ns(const SuperLabel& a) {
    check_super_label(a);
    if (!a.isNS()) throw std::invalid_argument("canonical_ns: not an NS label");
    SuperLabel m = super_mirror(a);
    if (m.r < a.r || (m.r == a.r && m.s < a.s)) return m;
    return a;
}

QuadExt super_delta(const SuperLabel& a) {
    check_super_label(a);
    long num = a.s * (a.n + 2) - a.r * (a.n + 4);
    Rational d = Rational(1, 8 * (a.n + 2) * (a.n + 4));
    return QuadExt(Rational(0), Rational(num), d);
}

Rational weight_n1(const SuperLabel& a) {
    check_super_label(a);
    long num = a.r * (a.n + 4) - a.s * (a.n + 2);
    return Rational(num * num - 4, 8 * (a.n + 2) * (a.n + 4)) + Rational(a.twop, 8);
}

std::pair<QuadExt, Rational> super_data(const SuperLabel& a) {
    return {super_delta(a), weight_n1(a)};
}

SectorCatalogs sector_catalogs(long n) {
    if (n < 1) throw std::invalid_argument("sector_catalogs: n must be >= 1");
    SectorCatalogs out;
    std::set<SuperLabel> nsSeen;
    for (long r = 1; r <= n + 1; ++r) {
        for (long s = 1; s <= n + 3; ++s) {
            if ((r - s) % 2 == 0) {
                ++out.nsRawCount;
                SuperLabel c = canonical_ns({n, r, s, 0});
                if (nsSeen.insert(c).second) out.ns.push_back(c);
            } else {
                // R labels keep both members of each +-Delta pair; the n-even
                // fixed point (r,s) = ((n+2)/2,(n+4)/2) occurs once by itself.
                out.ramond.push_back({n, r, s, 1});
            }
        }
    }
    std::sort(out.ns.begin(), out.ns.end());
    std::sort(out.ramond.begin(), out.ramond.end());
    return out;
}

Rational ramond_embedding_weight(long n, long r, long s, long i) {
    if (n < 1) throw std::invalid_argument("ramond_embedding_weight: n must be >= 1");
    long a = n + 2, b = n + 4;
    long num;
    if (((i % 2) + 2) % 2 == 0) {
        num = (i * a + r) * b - s * a;
    } else {
        num = ((i - 1) * a + r) * b + s * a;
    }
    return Rational(num * num - 4, 8 * a * b) + Rational(1, 16);
}

std::set<Rational> ramond_embedding_weights(long n, long r, long s, long iBound) {
    std::set<Rational> out;
    for (long i = -iBound; i <= iBound; ++i) {
        if (i == 0) continue;
        out.insert(ramond_embedding_weight(n, r, s, i));
    }
    return out;
}

DisjointnessReport ramond_weight_sets_disjoint(long n, long iBound) {
    DisjointnessReport rep;
    SectorCatalogs cat = sector_catalogs(n);
    std::vector<std::pair<SuperLabel, Rational>> hws;
    for (const auto& lab : cat.ramond) hws.push_back({lab, weight_n1(lab)});
    for (const auto& lab : cat.ramond) {
        std::set<Rational> H = ramond_embedding_weights(n, lab.r, lab.s, iBound);
        for (const auto& [other, h] : hws) {
            if (H.count(h)) {
                rep.pass = false;
                rep.detail += "h of " + other.str() + " lies in H of " + lab.str() + " (n=" +
                              std::to_string(n) + "); ";
            }
        }
    }
    if (rep.pass)
        rep.detail = "all Ramond highest weights avoid every embedding-weight set, n=" +
                     std::to_string(n) + ", |i| <= " + std::to_string(iBound);
    return rep;
}

}  // namespace svira
