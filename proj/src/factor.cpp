#include "univoq/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>

namespace univoq {

namespace {

// ---------------------------------------------------------------------------
// arithmetic in GF(p)[x], p an odd prime < 2^31, coefficients in [0, p)
// ---------------------------------------------------------------------------

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // constant term first, no trailing zeros

void pnorm(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod_u(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod_u(a % p, p - 2, p); }

ModPoly pmul(const ModPoly& a, const ModPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    pnorm(r);
    return r;
}

ModPoly pscale(const ModPoly& a, u64 c, u64 p) {
    ModPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
    pnorm(r);
    return r;
}

ModPoly psub(const ModPoly& a, const ModPoly& b, u64 p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    pnorm(r);
    return r;
}

// remainder of a by b (b nonzero, any leading coefficient)
ModPoly prem(ModPoly a, const ModPoly& b, u64 p) {
    u64 inv = invmod(b.back(), p);
    while (pdeg(a) >= pdeg(b)) {
        u64 q = mulmod(a.back(), inv, p);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = (a[off + i] + p - mulmod(q, b[i], p)) % p;
        pnorm(a);
        if (a.empty()) break;
    }
    return a;
}

ModPoly pmonic(ModPoly a, u64 p) {
    if (a.empty() || a.back() == 1) return a;
    return pscale(a, invmod(a.back(), p), p);
}

ModPoly pgcd(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        ModPoly r = prem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

ModPoly pderiv(const ModPoly& a, u64 p) {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
    pnorm(r);
    return r;
}

// base^e mod f, with a big-integer exponent
ModPoly ppowmod(ModPoly base, const Int& e, const ModPoly& f, u64 p) {
    ModPoly r{1};
    base = prem(std::move(base), f, p);
    for (size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
        r = prem(pmul(r, r, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)))
            r = prem(pmul(r, base, p), f, p);
    }
    return r;
}

ModPoly to_mod(const IntPoly& a, u64 p) {
    ModPoly r(a.degree() + 1);
    Int m;
    for (int i = 0; i <= a.degree(); ++i) {
        mpz_mod_ui(m.get_mpz_t(), a[i].get_mpz_t(), p);
        r[i] = m.get_ui();
    }
    pnorm(r);
    return r;
}

// distinct-degree factorization of a squarefree monic f: list of (product of
// all irreducible factors of degree d, d)
std::vector<std::pair<ModPoly, int>> ddf(ModPoly f, u64 p) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly h{0, 1};  // x
    int d = 0;
    while (pdeg(f) > 0) {
        ++d;
        if (2 * d > pdeg(f)) {
            out.emplace_back(f, pdeg(f));
            break;
        }
        h = ppowmod(std::move(h), Int(static_cast<unsigned long>(p)), f, p);
        ModPoly g = pgcd(psub(h, ModPoly{0, 1}, p), f, p);
        if (pdeg(g) > 0) {
            out.emplace_back(g, d);
            // divide f by g (exact)
            ModPoly q;
            {
                ModPoly a = f;
                u64 inv = invmod(g.back(), p);
                q.assign(a.size() - g.size() + 1, 0);
                while (pdeg(a) >= pdeg(g)) {
                    u64 c = mulmod(a.back(), inv, p);
                    size_t off = a.size() - g.size();
                    q[off] = c;
                    for (size_t i = 0; i < g.size(); ++i)
                        a[off + i] = (a[off + i] + p - mulmod(c, g[i], p)) % p;
                    pnorm(a);
                    if (a.empty()) break;
                }
                pnorm(q);
            }
            f = std::move(q);
            h = prem(std::move(h), f, p);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting: f = product of irreducibles all
// of degree d; appends them to out
void edf(const ModPoly& f, int d, u64 p, std::mt19937_64& rng,
         std::vector<ModPoly>& out) {
    if (pdeg(f) == d) {
        out.push_back(pmonic(f, p));
        return;
    }
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        ModPoly a(pdeg(f) + 1);
        for (auto& c : a) c = rng() % p;
        pnorm(a);
        if (pdeg(a) < 1) continue;
        ModPoly g = pgcd(a, f, p);
        if (pdeg(g) == 0) {
            g = ppowmod(a, e, f, p);
            if (g.empty()) continue;
            g[0] = (g[0] + p - 1) % p;
            pnorm(g);
            g = pgcd(g, f, p);
        }
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            // split: recurse on g and f/g
            ModPoly q;
            {
                ModPoly rest = f;
                u64 inv = invmod(g.back(), p);
                q.assign(rest.size() - g.size() + 1, 0);
                while (pdeg(rest) >= pdeg(g)) {
                    u64 c = mulmod(rest.back(), inv, p);
                    size_t off = rest.size() - g.size();
                    q[off] = c;
                    for (size_t i = 0; i < g.size(); ++i)
                        rest[off + i] = (rest[off + i] + p - mulmod(c, g[i], p)) % p;
                    pnorm(rest);
                    if (rest.empty()) break;
                }
                pnorm(q);
            }
            edf(g, d, p, rng, out);
            edf(q, d, p, rng, out);
            return;
        }
    }
}

std::vector<ModPoly> factor_mod_p(const ModPoly& f, u64 p, std::mt19937_64& rng) {
    std::vector<ModPoly> out;
    for (auto& [g, d] : ddf(pmonic(f, p), p)) edf(g, d, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// polynomials with coefficients in Z/m, m a large prime power (mpz residues
// in [0, m)), used for Hensel lifting; all divisors are monic so plain
// synthetic division is exact
// ---------------------------------------------------------------------------

using MPoly = std::vector<Int>;

void mnorm(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

MPoly mreduce(const IntPoly& a, const Int& m) {
    MPoly r(a.degree() + 1);
    for (int i = 0; i <= a.degree(); ++i) {
        mpz_mod(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    }
    mnorm(r);
    return r;
}

MPoly mlift(const ModPoly& a) {
    MPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    mnorm(r);
    return r;
}

MPoly madd(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
        mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    }
    mnorm(r);
    return r;
}

MPoly msub(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
        mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    }
    mnorm(r);
    return r;
}

// division by a monic b: a = q*b + r with deg r < deg b
void mdivmod(const MPoly& a, const MPoly& b, const Int& m, MPoly& q, MPoly& r) {
    r = a;
    if (r.size() < b.size()) {
        q.clear();
        mnorm(r);
        return;
    }
    q.assign(r.size() - b.size() + 1, Int(0));
    for (size_t off = r.size() - b.size() + 1; off-- > 0;) {
        Int c = r[off + b.size() - 1];  // b is monic
        if (c == 0) continue;
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            r[off + i] -= c * b[i];
            mpz_mod(r[off + i].get_mpz_t(), r[off + i].get_mpz_t(), m.get_mpz_t());
        }
    }
    r.resize(b.size() - 1);
    mnorm(r);
    mnorm(q);
}

// one quadratic Hensel step: given f = g*h (mod m) with h, g monic and
// s*g + t*h = 1 (mod m), produce the same data mod m^2 (in place)
void hensel_step(const MPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t,
                 const Int& m) {
    Int m2 = m * m;
    MPoly e = msub(f, mmul(g, h, m2), m2);
    MPoly q, r;
    mdivmod(mmul(s, e, m2), h, m2, q, r);
    MPoly g1 = madd(g, madd(mmul(t, e, m2), mmul(q, g, m2), m2), m2);
    MPoly h1 = madd(h, r, m2);
    // refresh the Bezout pair
    MPoly b = msub(madd(mmul(s, g1, m2), mmul(t, h1, m2), m2), MPoly{Int(1)}, m2);
    MPoly q2, r2;
    mdivmod(mmul(s, b, m2), h1, m2, q2, r2);
    MPoly s1 = msub(s, r2, m2);
    MPoly t1 = msub(t, madd(mmul(t, b, m2), mmul(q2, g1, m2), m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// extended gcd in GF(p)[x]: returns (s, t) with s*a + t*b = 1 (a, b coprime)
std::pair<ModPoly, ModPoly> pbezout(const ModPoly& a, const ModPoly& b, u64 p) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // r0 = q*r1 + r
        ModPoly q(std::max<size_t>(1, r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1), 0);
        ModPoly rr = r0;
        u64 inv = invmod(r1.back(), p);
        while (pdeg(rr) >= pdeg(r1)) {
            u64 c = mulmod(rr.back(), inv, p);
            size_t off = rr.size() - r1.size();
            q[off] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rr[off + i] = (rr[off + i] + p - mulmod(c, r1[i], p)) % p;
            pnorm(rr);
            if (rr.empty()) break;
        }
        pnorm(q);
        ModPoly s2 = psub(s0, pmul(q, s1, p), p);
        ModPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant; scale to make it 1
    u64 inv = invmod(r0[0], p);
    return {pscale(s0, inv, p), pscale(t0, inv, p)};
}

// lift the monic factorization f = prod(fac[i]) (mod p) to mod p^(2^K) >= target,
// returning the lifted factors and the final modulus
std::pair<std::vector<MPoly>, Int> hensel_tree(const IntPoly& f, u64 p,
                                               const std::vector<ModPoly>& fac,
                                               const Int& target) {
    Int modulus = static_cast<unsigned long>(p);
    int steps = 0;
    while (modulus < target) {
        modulus = modulus * modulus;
        ++steps;
    }
    // recursive pair lifting over a balanced split of the factor list
    struct Lifter {
        u64 p;
        int steps;
        std::vector<MPoly> leaves;
        void run(const IntPoly& fz, const std::vector<ModPoly>& part) {
            if (part.size() == 1) {
                // the full lift of a single factor is fz itself reduced mod p^(2^steps)
                Int m = static_cast<unsigned long>(p);
                for (int i = 0; i < steps; ++i) m = m * m;
                leaves.push_back(mreduce(fz, m));
                return;
            }
            size_t half = part.size() / 2;
            std::vector<ModPoly> L(part.begin(), part.begin() + half);
            std::vector<ModPoly> R(part.begin() + half, part.end());
            ModPoly gl{1}, gr{1};
            for (auto& q : L) gl = pmul(gl, q, p);
            for (auto& q : R) gr = pmul(gr, q, p);
            auto [s, t] = pbezout(gl, gr, p);
            Int m = static_cast<unsigned long>(p);
            MPoly G = mlift(gl), H = mlift(gr), S = mlift(s), T = mlift(t);
            for (int i = 0; i < steps; ++i) {
                Int m2 = m * m;
                hensel_step(mreduce(fz, m2), G, H, S, T, m);
                m = m2;
            }
            // convert the two halves back to integer polynomials (symmetric lift
            // not needed here: the recursion only ever reduces them again)
            IntPoly gz(std::vector<Int>(G.begin(), G.end()));
            IntPoly hz(std::vector<Int>(H.begin(), H.end()));
            run(gz, L);
            run(hz, R);
        }
    } lifter{p, steps, {}};
    lifter.run(f, fac);
    return {std::move(lifter.leaves), modulus};
}

// symmetric representative in (-m/2, m/2]
Int symmetric(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

// ---------------------------------------------------------------------------
// Zassenhaus driver for a primitive squarefree MONIC polynomial of degree >= 2
// ---------------------------------------------------------------------------

std::vector<IntPoly> zassenhaus_monic(IntPoly f) {
    const int n = f.degree();
    // factor-coefficient bound (Mignotte-style, deliberately generous):
    // any monic divisor of f has |coeff| <= 2^n * (n+1) * H(f)
    Int H = 0;
    for (int i = 0; i <= n; ++i) {
        Int a = abs(f[i]);
        if (a > H) H = a;
    }
    Int bound = (H * (n + 1)) << n;
    Int target = 2 * bound + 1;

    // pick an odd prime keeping f squarefree
    u64 p = 0;
    {
        Int q = 2;
        for (;;) {
            mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
            u64 cand = q.get_ui();
            if (mpz_divisible_ui_p(f.lc().get_mpz_t(), cand)) continue;
            ModPoly fm = to_mod(f, cand);
            if (pdeg(fm) != n) continue;
            ModPoly g = pgcd(fm, pderiv(fm, cand), cand);
            if (pdeg(g) == 0) {
                p = cand;
                break;
            }
        }
    }

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<u64>(n));
    std::vector<ModPoly> mod_factors = factor_mod_p(to_mod(f, p), p, rng);
    if (mod_factors.size() == 1) return {f};

    auto [lifted, modulus] = hensel_tree(f, p, mod_factors, target);

    // subset recombination, smallest cardinality first
    std::vector<IntPoly> out;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);

    auto symm_poly = [&](const MPoly& a) {
        std::vector<Int> c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = symmetric(a[i], modulus);
        return IntPoly(c);
    };

    int d = 1;
    while (2 * d <= static_cast<int>(live.size())) {
        // iterate over cardinality-d subsets of live indices
        std::vector<int> idx(d);
        for (int i = 0; i < d; ++i) idx[i] = i;
        bool removed = false;
        for (;;) {
            // constant-term quick test: prod of constants must divide f(0)
            Int c0 = 1;
            for (int i : idx) {
                const MPoly& g = lifted[live[i]];
                c0 = c0 * (g.empty() ? Int(0) : g[0]);
                mpz_mod(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
            }
            c0 = symmetric(c0, modulus);
            bool plausible = (c0 != 0) && mpz_divisible_p(f[0].get_mpz_t(), c0.get_mpz_t());
            if (plausible) {
                MPoly prod{Int(1)};
                for (int i : idx) prod = mmul(prod, lifted[live[i]], modulus);
                IntPoly cand = symm_poly(prod);
                IntPoly quot;
                if (f.try_divexact(cand, &quot)) {
                    out.push_back(cand);
                    f = quot;
                    // drop the used indices (descending so positions stay valid)
                    for (int i = d - 1; i >= 0; --i)
                        live.erase(live.begin() + idx[i]);
                    removed = true;
                    break;
                }
            }
            // next subset
            int i = d - 1;
            while (i >= 0 && idx[i] == static_cast<int>(live.size()) - d + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!removed) ++d;
    }
    if (f.degree() > 0) out.push_back(f);
    return out;
}

// factor a primitive squarefree polynomial of degree >= 2 with positive lc;
// non-monic inputs are routed through the monic transform
// g(x) -> lc^(n-1) g(x/lc)
std::vector<IntPoly> factor_squarefree(const IntPoly& g) {
    if (g.is_monic()) return zassenhaus_monic(g);
    const int n = g.degree();
    const Int l = g.lc();
    std::vector<Int> c(n + 1);
    c[n] = 1;  // l^(n-1) * l / l^n
    Int pw = 1;  // l^(n-1-i), built downward from i = n-1
    for (int i = n - 1; i >= 0; --i) {
        c[i] = g[i] * pw;
        pw = pw * l;
    }
    IntPoly ghat(c);
    std::vector<IntPoly> out;
    for (auto& h : zassenhaus_monic(ghat)) {
        // map back: x -> l*x, then take the primitive part
        std::vector<Int> b(h.degree() + 1);
        Int q = 1;
        for (int i = 0; i <= h.degree(); ++i) {
            b[i] = h[i] * q;
            q = q * l;
        }
        out.push_back(IntPoly(b).primitive_part());
    }
    // sanity: the mapped-back factors must multiply to g
    IntPoly check = IntPoly::constant(1);
    for (auto& h : out) check = check * h;
    if (!(check == g))
        throw std::logic_error("factor: non-monic transform lost a unit");
    return out;
}

}  // namespace

IntPoly cyclotomic(int n) {
    static std::map<int, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    IntPoly num = IntPoly::monomial(1, n) - IntPoly::constant(1);
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = num.divexact(cyclotomic(d));
    }
    cache.emplace(n, num);
    return num;
}

Factorization factorize(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
    Factorization out;
    Int cont = p.content();
    if (p.lc() < 0) cont = -cont;
    out.content = cont;
    IntPoly f = p.primitive_part();
    if (f.degree() == 0) return out;

    // strip powers of x
    int val = 0;
    while (f[0] == 0) {
        f = IntPoly(std::vector<Int>(f.coeffs().begin() + 1, f.coeffs().end()));
        ++val;
    }
    if (val > 0) out.factors.emplace_back(IntPoly({0, 1}), val);

    if (f.degree() >= 1) {
        // Yun squarefree decomposition: f = prod a_i^i with a_i squarefree
        std::vector<std::pair<IntPoly, int>> sqf;
        {
            IntPoly d = f.derivative();
            IntPoly g = poly_gcd(f, d);
            IntPoly w = f.divexact(g);
            IntPoly y = d.divexact(g);
            int i = 1;
            for (;;) {
                IntPoly z = y - w.derivative();
                if (z.is_zero()) {
                    if (w.degree() > 0) sqf.emplace_back(w, i);
                    break;
                }
                IntPoly a = poly_gcd(w, z);
                if (a.degree() > 0) sqf.emplace_back(a, i);
                w = w.divexact(a);
                y = z.divexact(a);
                ++i;
            }
        }

        for (auto& [part0, mult] : sqf) {
            IntPoly part = part0;
            // rational roots: candidates num/den with num | part(0), den | lc
            // (an optimization only, so skip it when trial division would be
            // slow; Zassenhaus finds linear factors regardless)
            if (abs(part[0]) < 1000000 && abs(part.lc()) < 1000000) {
                auto divisors = [](const Int& v) {
                    std::vector<Int> ds;
                    Int a = abs(v);
                    for (Int i = 1; i * i <= a; ++i) {
                        if (mpz_divisible_p(a.get_mpz_t(), i.get_mpz_t())) {
                            ds.push_back(i);
                            if (i * i != a) ds.push_back(a / i);
                        }
                    }
                    return ds;
                };
                bool progress = true;
                while (progress && part.degree() >= 2) {
                    progress = false;
                    for (const Int& den : divisors(part.lc())) {
                        for (const Int& num : divisors(part[0])) {
                            for (int s : {1, -1}) {
                                Rat r(num * s, den);
                                r.canonicalize();
                                if (part.eval(r) == 0) {
                                    IntPoly lin(std::vector<Int>{-s * num, den});
                                    lin = lin.primitive_part();
                                    part = part.divexact(lin);
                                    out.factors.emplace_back(lin, mult);
                                    progress = true;
                                }
                                if (progress) break;
                            }
                            if (progress) break;
                        }
                        if (progress) break;
                    }
                }
            }
            if (part.degree() == 1) {
                out.factors.emplace_back(part.primitive_part(), mult);
                continue;
            }
            if (part.degree() == 0) continue;
            // cyclotomic pre-strip (cheap, catches x^m - 1 style cofactors)
            if (part.is_monic()) {
                for (int m = 2; m <= 150; ++m) {
                    IntPoly cm = cyclotomic(m);
                    if (cm.degree() > part.degree()) continue;
                    IntPoly q;
                    while (part.try_divexact(cm, &q)) {
                        part = q;
                        out.factors.emplace_back(cm, mult);
                    }
                    if (part.degree() < 2) break;
                }
            }
            if (part.degree() == 1)
                out.factors.emplace_back(part.primitive_part(), mult);
            else if (part.degree() >= 2)
                for (auto& irr : factor_squarefree(part))
                    out.factors.emplace_back(irr, mult);
        }
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  return a.first.to_string() < b.first.to_string();
              });

    // final product check
    IntPoly check = IntPoly::constant(out.content);
    for (auto& [fac, mult] : out.factors)
        for (int i = 0; i < mult; ++i) check = check * fac;
    if (!(check == p)) throw std::logic_error("factorize: product check failed");
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.degree() < 1) return false;
    auto fac = factorize(p);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace univoq
