#include "univoq/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace univoq {

namespace {

Rat pow10(int e) {
    Int t(1);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) t *= 10;
    return e >= 0 ? Rat(t) : Rat(Int(1), t);
}

}  // namespace

AlgebraicReal::AlgebraicReal(const IntPoly& p, const Rat& lo, const Rat& hi) {
    IntPoly sf = squarefree_part(p);
    if (sf.degree() < 1) throw std::invalid_argument("constant polynomial has no roots");
    SturmChain chain(sf);
    Rat a = lo, b = hi;
    bool direct = sf.sign_at(a) != 0 && sf.sign_at(b) != 0 && chain.count(a, b) == 1;
    if (!direct) {
        auto brackets = isolate_real_roots(sf, lo, hi);
        if (brackets.size() != 1)
            throw std::invalid_argument("interval does not isolate one root");
        a = brackets[0].first;
        b = brackets[0].second;
    }
    rep_ = std::make_shared<Rep>(std::move(sf), std::move(chain), std::move(a),
                                 std::move(b));
}

std::pair<Rat, Rat> AlgebraicReal::interval() const {
    std::lock_guard<std::mutex> lock(rep_->mtx);
    return {rep_->lo, rep_->hi};
}

void AlgebraicReal::bisect_once() const {
    // caller holds the lock
    Rat m = (rep_->lo + rep_->hi) / 2;
    int sm = rep_->poly.sign_at(m);
    if (sm == 0) {
        // the root is exactly m; shrink symmetrically around it
        rep_->lo = (rep_->lo + m) / 2;
        rep_->hi = (m + rep_->hi) / 2;
        return;
    }
    if (sm == rep_->poly.sign_at(rep_->lo))
        rep_->lo = m;
    else
        rep_->hi = m;
}

std::pair<Rat, Rat> AlgebraicReal::refine(const Rat& width) const {
    std::lock_guard<std::mutex> lock(rep_->mtx);
    while (rep_->hi - rep_->lo > width) bisect_once();
    return {rep_->lo, rep_->hi};
}

int AlgebraicReal::compare(const Rat& q) const {
    std::lock_guard<std::mutex> lock(rep_->mtx);
    if (q <= rep_->lo) return 1;
    if (q >= rep_->hi) return -1;
    int sq = rep_->poly.sign_at(q);
    if (sq == 0) return 0;
    // one simple root inside, so endpoint signs differ; q sits left of the
    // root exactly when it still carries the lo-side sign
    return sq == rep_->poly.sign_at(rep_->lo) ? 1 : -1;
}

int AlgebraicReal::sign_of(const IntPoly& g) const {
    if (g.is_zero()) return 0;
    std::lock_guard<std::mutex> lock(rep_->mtx);
    IntPoly c = poly_gcd(rep_->poly, g);
    if (c.degree() >= 1) {
        SturmChain cc(c);
        if (cc.count(rep_->lo, rep_->hi) == 1) return 0;
    }
    // g has no root at our number; shrink until g is root-free on the
    // interval, then the sign at any interior point is the answer
    SturmChain gc(squarefree_part(g));
    while (g.sign_at(rep_->lo) == 0 || g.sign_at(rep_->hi) == 0 ||
           gc.count(rep_->lo, rep_->hi) != 0)
        bisect_once();
    Rat m = (rep_->lo + rep_->hi) / 2;
    int s = g.sign_at(m);
    while (s == 0) {
        // midpoint happens to be a root of g^k's cofactor; bisect and retry
        bisect_once();
        m = (rep_->lo + rep_->hi) / 2;
        s = g.sign_at(m);
    }
    return s;
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    if (rep_ == o.rep_) return 0;
    IntPoly c = poly_gcd(defining(), o.defining());
    if (c.degree() >= 1) {
        auto [lo1, hi1] = interval();
        auto [lo2, hi2] = o.interval();
        Rat a = std::max(lo1, lo2), b = std::min(hi1, hi2);
        if (a < b) {
            SturmChain cc(c);
            if (c.sign_at(a) != 0 && c.sign_at(b) != 0 && cc.count(a, b) == 1)
                return 0;
        }
    }
    // distinct numbers: refine until the intervals separate
    Rat w = interval().second - interval().first;
    while (true) {
        auto [lo1, hi1] = interval();
        auto [lo2, hi2] = o.interval();
        if (hi1 <= lo2) return -1;
        if (hi2 <= lo1) return 1;
        w /= 2;
        refine(w);
        o.refine(w);
    }
}

std::string AlgebraicReal::decimal(int significant_digits) const {
    if (significant_digits < 1) throw std::invalid_argument("need at least one digit");
    if (compare(Rat(0)) <= 0)
        throw std::domain_error("decimal printing implemented for positive values");
    // leading-digit exponent e: 10^e <= value < 10^(e+1)
    int e = 0;
    while (compare(pow10(e + 1)) >= 0) ++e;
    while (compare(pow10(e)) < 0) --e;
    // scale so that the correctly rounded integer carries all wanted digits
    int shift = significant_digits - 1 - e;
    Rat scale = pow10(shift);
    Rat width = Rat(Int(1), Int(4)) / scale;
    Int digits;
    while (true) {
        auto [lo, hi] = refine(width);
        Rat slo = lo * scale, shi = hi * scale;
        Int flo, fhi;
        mpz_fdiv_q(flo.get_mpz_t(), slo.get_num().get_mpz_t(),
                   slo.get_den().get_mpz_t());
        mpz_fdiv_q(fhi.get_mpz_t(), shi.get_num().get_mpz_t(),
                   shi.get_den().get_mpz_t());
        Int rlo = (slo > Rat(2 * flo + 1, 2)) ? flo + 1 : flo;
        Int rhi = (shi > Rat(2 * fhi + 1, 2)) ? fhi + 1 : fhi;
        if (rlo == rhi) {
            digits = rlo;
            break;
        }
        // ambiguous: the value might sit exactly on a rounding boundary
        Rat tie = Rat(2 * fhi + 1, 2) / scale;
        if (compare(tie) == 0) {
            digits = (fhi % 2 == 0) ? fhi : fhi + 1;  // round half to even
            break;
        }
        width /= 16;
    }
    std::string raw = digits.get_str();
    // rounding can carry into one extra digit (e.g. 9.99... -> 10.0...)
    if (static_cast<int>(raw.size()) > significant_digits) {
        raw.pop_back();
        ++e;
    }
    std::ostringstream out;
    if (e >= 0 && e < significant_digits) {
        out << raw.substr(0, e + 1);
        if (e + 1 < static_cast<int>(raw.size())) out << "." << raw.substr(e + 1);
    } else {
        out << raw.substr(0, 1);
        if (raw.size() > 1) out << "." << raw.substr(1);
        out << "e" << e;
    }
    return out.str();
}

double AlgebraicReal::approx() const {
    auto [lo, hi] = refine(Rat(Int(1), Int("100000000000000000")));
    Rat mid = (lo + hi) / 2;
    return mid.get_d();
}

std::vector<AlgebraicReal> isolate_roots(const IntPoly& p, const Rat& lo,
                                         const Rat& hi) {
    std::vector<AlgebraicReal> out;
    for (const auto& [a, b] : isolate_real_roots(p, lo, hi))
        out.emplace_back(p, a, b);
    return out;
}

}  // namespace univoq
