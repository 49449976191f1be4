#include "univoq/field.hpp"

#include <sstream>
#include <stdexcept>

#include "univoq/factor.hpp"
#include "univoq/sturm.hpp"

namespace univoq {

namespace {

// small dense rational-polynomial helpers for the extended Euclid in inverse()
using RatPoly = std::vector<Rat>;  // constant first, may carry trailing zeros

void rnorm(RatPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RatPoly rmul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    rnorm(r);
    return r;
}

RatPoly rsub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    rnorm(r);
    return r;
}

// a = q*b + r
void rdivmod(RatPoly a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    rnorm(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        rnorm(a);
    }
    r = std::move(a);
}

}  // namespace

struct NumberField::Rep {
    IntPoly minpoly;
    AlgebraicReal root;
    int deg;
    // integer coordinates of beta^(deg+i) over the power basis, i = 0..deg-2
    std::vector<std::vector<Int>> pow;
};

NumberField::NumberField(const IntPoly& minpoly, const AlgebraicReal& root) {
    if (minpoly.degree() < 1 || !minpoly.is_monic())
        throw std::invalid_argument("NumberField: monic polynomial required");
    if (!is_irreducible(minpoly))
        throw std::invalid_argument("NumberField: reducible polynomial");
    if (root.sign_of(minpoly) != 0)
        throw std::invalid_argument("NumberField: root does not satisfy polynomial");
    auto rep = std::make_shared<Rep>(Rep{minpoly, root, minpoly.degree(), {}});
    const int d = rep->deg;
    // beta^d = -(a_0 + a_1 beta + ... + a_{d-1} beta^{d-1})
    std::vector<Int> row(d);
    for (int i = 0; i < d; ++i) row[i] = -minpoly[i];
    for (int k = 0; k + 2 <= d; ++k) {
        rep->pow.push_back(row);
        // beta^(d+k+1) = beta * beta^(d+k): shift then fold the top term
        std::vector<Int> next(d, Int(0));
        Int top = row[d - 1];
        for (int i = 1; i < d; ++i) next[i] = row[i - 1];
        for (int i = 0; i < d; ++i) next[i] += top * (-minpoly[i]);
        row = std::move(next);
    }
    rep_ = std::move(rep);
}

NumberField NumberField::adjoin_root(const IntPoly& p, const Rat& lo, const Rat& hi) {
    auto roots = isolate_roots(p, lo, hi);
    if (roots.size() != 1)
        throw std::invalid_argument("adjoin_root: interval must isolate exactly one root");
    auto [a, b] = roots[0].interval();
    for (auto& [f, mult] : factorize(p).factors) {
        if (f.degree() < 1) continue;
        SturmChain chain(f);
        if (chain.count(a, b) == 1) {
            IntPoly g = f;
            if (!g.is_monic())
                throw std::invalid_argument("adjoin_root: root is not an algebraic integer");
            return NumberField(g, roots[0]);
        }
    }
    throw std::logic_error("adjoin_root: no factor claims the root");
}

int NumberField::degree() const { return rep_->deg; }
const IntPoly& NumberField::minpoly() const { return rep_->minpoly; }
const AlgebraicReal& NumberField::root() const { return rep_->root; }

FieldElement NumberField::zero() const { return from_rat(0); }
FieldElement NumberField::one() const { return from_rat(1); }

FieldElement NumberField::from_rat(const Rat& q) const {
    std::vector<Rat> co(rep_->deg, Rat(0));
    co[0] = q;
    return FieldElement(rep_, std::move(co));
}

FieldElement NumberField::beta() const {
    std::vector<Rat> co(rep_->deg, Rat(0));
    if (rep_->deg == 1) {
        co[0] = -Rat(rep_->minpoly[0]);  // rational root of x + a_0
    } else {
        co[1] = 1;
    }
    return FieldElement(rep_, std::move(co));
}

FieldElement NumberField::from_coords(std::vector<Rat> co) const {
    if (co.size() > static_cast<size_t>(rep_->deg))
        throw std::invalid_argument("from_coords: too many coordinates");
    co.resize(rep_->deg, Rat(0));
    return FieldElement(rep_, std::move(co));
}

bool NumberField::same_field(const NumberField& o) const {
    return rep_ == o.rep_ ||
           (rep_->minpoly == o.rep_->minpoly &&
            rep_->root.compare(o.rep_->root) == 0);
}

FieldElement::FieldElement(std::shared_ptr<const NumberField::Rep> rep,
                           std::vector<Rat> co)
    : rep_(std::move(rep)), co_(std::move(co)) {}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    std::vector<Rat> co(co_);
    for (size_t i = 0; i < co.size(); ++i) co[i] += o.co_[i];
    return FieldElement(rep_, std::move(co));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    std::vector<Rat> co(co_);
    for (size_t i = 0; i < co.size(); ++i) co[i] -= o.co_[i];
    return FieldElement(rep_, std::move(co));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rat> co(co_);
    for (auto& c : co) c = -c;
    return FieldElement(rep_, std::move(co));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const int d = rep_->deg;
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (co_[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] += co_[i] * o.co_[j];
    }
    std::vector<Rat> co(prod.begin(), prod.begin() + d);
    for (int k = d; k <= 2 * d - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = rep_->pow[k - d];
        for (int i = 0; i < d; ++i) co[i] += prod[k] * Rat(row[i]);
    }
    return FieldElement(rep_, std::move(co));
}

FieldElement FieldElement::operator*(const Rat& q) const {
    std::vector<Rat> co(co_);
    for (auto& c : co) c *= q;
    return FieldElement(rep_, std::move(co));
}

FieldElement FieldElement::operator+(const Rat& q) const {
    std::vector<Rat> co(co_);
    co[0] += q;
    return FieldElement(rep_, std::move(co));
}

FieldElement FieldElement::operator-(const Rat& q) const {
    std::vector<Rat> co(co_);
    co[0] -= q;
    return FieldElement(rep_, std::move(co));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
    // extended Euclid in Q[x]: s*g + t*minpoly = 1, inverse = s(beta)
    RatPoly g(co_);
    rnorm(g);
    RatPoly m(rep_->deg + 1);
    for (int i = 0; i <= rep_->deg; ++i) m[i] = Rat(rep_->minpoly[i]);
    RatPoly r0 = m, r1 = g;
    RatPoly s0{}, s1{Rat(1)};  // coefficients of g in the combinations
    while (!r1.empty()) {
        RatPoly q, rr;
        rdivmod(r0, r1, q, rr);
        RatPoly s2 = rsub(s0, rmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant (minpoly irreducible, g nonzero of lower degree)
    if (r0.size() != 1)
        throw std::logic_error("FieldElement: inverse gcd not constant");
    std::vector<Rat> co(rep_->deg, Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) co[i] = s0[i] / r0[0];
    return FieldElement(rep_, std::move(co));
}

bool FieldElement::operator==(const FieldElement& o) const { return co_ == o.co_; }

bool FieldElement::is_zero() const {
    for (const auto& c : co_)
        if (c != 0) return false;
    return true;
}

int FieldElement::sign() const {
    // clear denominators to an integer polynomial and ask the root for a sign
    Int den = 1;
    for (const auto& c : co_) den = lcm(den, Int(c.get_den()));
    std::vector<Int> ic(co_.size());
    for (size_t i = 0; i < co_.size(); ++i) {
        Rat scaled = co_[i] * Rat(den);
        ic[i] = Int(scaled.get_num());
    }
    IntPoly g(ic);
    if (g.is_zero()) return 0;
    return rep_->root.sign_of(g);
}

int FieldElement::compare(const FieldElement& o) const { return (*this - o).sign(); }

int FieldElement::compare(const Rat& q) const { return (*this - q).sign(); }

std::pair<Rat, Rat> FieldElement::enclosure(const Rat& w) const {
    // interval Horner over a shrinking bracket of the generator
    Rat width = w;
    for (;;) {
        auto [a, b] = rep_->root.interval();
        Rat lo = 0, hi = 0;
        for (size_t i = co_.size(); i-- > 0;) {
            // [lo,hi] * [a,b] by corner enumeration, then + c_i
            Rat p1 = lo * a, p2 = lo * b, p3 = hi * a, p4 = hi * b;
            Rat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
            Rat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
            lo = nlo + co_[i];
            hi = nhi + co_[i];
        }
        if (hi - lo <= width) return {lo, hi};
        rep_->root.refine((b - a) / 2);
    }
}

Int FieldElement::floor() const {
    Rat width(1, 4);
    for (;;) {
        auto [lo, hi] = enclosure(width);
        Int flo, fhi;
        mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        if (flo == fhi) return flo;
        if (fhi - flo == 1) {
            // the bracket straddles the integer fhi: settle exactly
            int s = compare(Rat(fhi));
            return s >= 0 ? fhi : flo;
        }
        width /= 4;
    }
}

Int FieldElement::ceil() const { return -((-*this).floor()); }

std::string FieldElement::key() const {
    std::ostringstream out;
    for (size_t i = 0; i < co_.size(); ++i) {
        if (i) out << ',';
        out << co_[i].get_str();
    }
    return out.str();
}

}  // namespace univoq
