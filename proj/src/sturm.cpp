#include "univoq/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace univoq {

namespace {

// -(m * f mod g) for a positive multiplier m = lc(g)^(k or k+1), scaled back
// to a primitive polynomial by a positive factor so that chain signs are
// preserved at every evaluation point.
IntPoly signed_prem(const IntPoly& f, const IntPoly& g) {
    int k = f.degree() - g.degree() + 1;
    if (g.lc() < 0 && (k % 2) != 0) ++k;  // keep the multiplier positive
    IntPoly r = f;
    int steps = k;
    while (steps > 0 && !r.is_zero() && r.degree() >= g.degree()) {
        Int fc = r.lc();
        int off = r.degree() - g.degree();
        std::vector<Int> rc(r.coeffs());
        for (auto& v : rc) v *= g.lc();
        for (int j = 0; j <= g.degree(); ++j) rc[off + j] -= fc * g[j];
        r = IntPoly(std::move(rc));
        --steps;
    }
    // remaining multiplier applications only scale by a positive constant
    // (lc^steps could be negative when lc < 0 and steps is odd, but steps
    // reaching zero is guaranteed once deg r < deg g only after enough
    // rounds; apply the leftover parity explicitly)
    if (steps > 0 && g.lc() < 0 && (steps % 2) != 0) r = -r;
    r = -r;
    if (r.is_zero()) return r;
    Int c = r.content();
    std::vector<Int> rc(r.coeffs());
    for (auto& v : rc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(rc));
}

std::vector<IntPoly> build_signed_chain(IntPoly f0, IntPoly f1) {
    std::vector<IntPoly> chain;
    chain.push_back(std::move(f0));
    if (f1.is_zero()) return chain;
    chain.push_back(std::move(f1));
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        if (a.degree() < b.degree() && chain.size() == 2) {
            // allowed for Cauchy-index chains; division handles it anyway
        }
        IntPoly nxt = signed_prem(a, b);
        if (nxt.is_zero()) break;
        chain.push_back(std::move(nxt));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
    IntPoly sf = squarefree_part(p);
    if (sf.degree() < 1) {
        chain_.push_back(sf.is_zero() ? IntPoly() : IntPoly::constant(Int(1)));
        return;
    }
    chain_ = build_signed_chain(sf, sf.derivative());
}

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(p.sign_at(x));
    return variations(s);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(p.sign_at_pos_inf());
    return variations(s);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(p.sign_at_neg_inf());
    return variations(s);
}

int SturmChain::count(const Rat& lo, const Rat& hi) const {
    if (lo >= hi) return 0;
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

namespace {

// isolate roots of the squarefree poly sp inside (lo, hi); both endpoints are
// guaranteed non-roots of sp by the caller
void isolate_rec(const IntPoly& sp, const SturmChain& ch, const Rat& lo,
                 const Rat& hi, int cnt,
                 std::vector<std::pair<Rat, Rat>>* out) {
    if (cnt == 0) return;
    if (cnt == 1) {
        out->emplace_back(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (sp.sign_at(mid) == 0) {
        // midpoint is itself a root: carve out a bracket around it first
        Rat a = (lo + mid) / 2, b = (mid + hi) / 2;
        while (sp.sign_at(a) == 0 || sp.sign_at(b) == 0 || ch.count(a, b) != 1) {
            a = (a + mid) / 2;
            b = (mid + b) / 2;
        }
        out->emplace_back(a, b);
        isolate_rec(sp, ch, lo, a, ch.count(lo, a), out);
        isolate_rec(sp, ch, b, hi, ch.count(b, hi), out);
        return;
    }
    int left = ch.count(lo, mid);
    isolate_rec(sp, ch, lo, mid, left, out);
    isolate_rec(sp, ch, mid, hi, cnt - left, out);
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p, const Rat& lo,
                                                    const Rat& hi) {
    std::vector<std::pair<Rat, Rat>> out;
    IntPoly sp = squarefree_part(p);
    if (sp.degree() < 1 || lo >= hi) return out;
    SturmChain ch(sp);
    Rat a = lo, b = hi;
    // nudge endpoints off roots; the nudged interval must not lose or gain
    // interior roots, which the count conditions below enforce
    if (sp.sign_at(a) == 0) {
        Rat step = (hi - lo) / 4;
        Rat a2 = a + step;
        while (sp.sign_at(a2) == 0 || ch.count(a, a2) != 0) {
            step /= 2;
            a2 = a + step;
        }
        a = a2;
    }
    if (sp.sign_at(b) == 0) {
        Rat step = (b - a) / 4;
        Rat b2 = b - step;
        while (sp.sign_at(b2) == 0 || ch.count(b2, b) != 1) {
            step /= 2;
            b2 = b - step;
        }
        b = b2;
    }
    isolate_rec(sp, ch, a, b, ch.count(a, b), &out);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

int cauchy_index(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) throw std::domain_error("cauchy index with zero denominator");
    if (q.is_zero()) return 0;
    std::vector<IntPoly> chain = build_signed_chain(p, q);
    std::vector<int> at_neg, at_pos;
    at_neg.reserve(chain.size());
    at_pos.reserve(chain.size());
    for (const auto& f : chain) {
        at_neg.push_back(f.sign_at_neg_inf());
        at_pos.push_back(f.sign_at_pos_inf());
    }
    return variations(at_neg) - variations(at_pos);
}

}  // namespace univoq
