#include "univoq/pisot_salem.hpp"

#include <stdexcept>

#include "univoq/factor.hpp"
#include "univoq/sturm.hpp"

namespace univoq {

namespace {

// complex polynomial with integer coefficients, kept as (real, imaginary)
struct CPoly {
    IntPoly re, im;
};

// multiply by (i + s): (re + i im)(s + i) = (re s - im) + i (im s + re)
CPoly mul_i_plus_s(const CPoly& a) {
    return {a.re.shift_up(1) - a.im, a.im.shift_up(1) + a.re};
}

// multiply by (i - s): (re + i im)(-s + i) = (-re s - im) + i (-im s + re)
CPoly mul_i_minus_s(const CPoly& a) {
    return {-(a.re.shift_up(1)) - a.im, -(a.im.shift_up(1)) + a.re};
}

// the number of real roots of p in (1, oo), each counted once
int real_roots_above_one(const IntPoly& p) {
    SturmChain chain(squarefree_part(p));
    Rat bound = p.root_bound();
    if (bound <= 1) return 0;
    return chain.count(1, bound);
}

}  // namespace

int open_disk_count(const IntPoly& p) {
    const int d = p.degree();
    if (d <= 0) return 0;
    if (p.eval(Int(-1)) == 0)
        throw std::invalid_argument("open_disk_count: input vanishes at -1");
    // map the disk to the upper half plane with z = (i - s)/(i + s) and
    // expand p(z) (i + s)^d = A(s) + i B(s)
    std::vector<CPoly> plus(d + 1), minus(d + 1);
    plus[0] = minus[0] = {IntPoly::constant(1), IntPoly()};
    for (int k = 1; k <= d; ++k) {
        plus[k] = mul_i_plus_s(plus[k - 1]);
        minus[k] = mul_i_minus_s(minus[k - 1]);
    }
    IntPoly A, B;
    for (int k = 0; k <= d; ++k) {
        if (p[k] == 0) continue;
        // a_k (i - s)^k (i + s)^(d - k)
        IntPoly re = minus[k].re * plus[d - k].re - minus[k].im * plus[d - k].im;
        IntPoly im = minus[k].re * plus[d - k].im + minus[k].im * plus[d - k].re;
        A = A + re * p[k];
        B = B + im * p[k];
    }
    // upper-half-plane roots of A + iB; valid when no real roots exist,
    // which is exactly "no roots of p on the unit circle"
    return (d - cauchy_index(A, B)) / 2;
}

bool has_unit_circle_root(const IntPoly& p) {
    if (p.degree() <= 0) return false;
    if (p.eval(Int(1)) == 0 || p.eval(Int(-1)) == 0) return true;
    // circle roots other than +-1 pair up with their inverses, so they show
    // up in gcd(p, reciprocal(p)); conversely that gcd may also pick up
    // reciprocal off-circle pairs, which the trace substitution filters out
    IntPoly sf = squarefree_part(p);
    IntPoly g = poly_gcd(sf, sf.reciprocal());
    if (g.degree() <= 0) return false;
    // g is squarefree with inverse-closed roots and no root at +-1, hence
    // self-reciprocal of even degree
    if (!(g == g.reciprocal().primitive_part()) || g.degree() % 2 != 0)
        throw std::logic_error("has_unit_circle_root: gcd not reciprocal");
    IntPoly q = trace_polynomial(g);
    // w = z + 1/z sends circle pairs to real w in (-2, 2); real or complex
    // off-circle pairs land outside that window or off the real line
    SturmChain chain(squarefree_part(q));
    return chain.count(-2, 2) > 0;
}

IntPoly trace_polynomial(const IntPoly& p) {
    const int d = p.degree();
    if (d <= 0 || d % 2 != 0)
        throw std::invalid_argument("trace_polynomial: even positive degree required");
    if (!(p == p.reciprocal()))
        throw std::invalid_argument("trace_polynomial: input not self-reciprocal");
    const int m = d / 2;
    // x^j + x^(-j) = T_j(w) with T_0 = 2, T_1 = w, T_j = w T_{j-1} - T_{j-2}
    IntPoly w({0, 1});
    IntPoly t_prev = IntPoly::constant(2);
    IntPoly t_cur = w;
    IntPoly q = IntPoly::constant(p[m]);
    for (int j = 1; j <= m; ++j) {
        q = q + t_cur * p[m + j];
        IntPoly t_next = w * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return q;
}

PisotCheck is_pisot(const IntPoly& p) {
    PisotCheck out;
    const int d = p.degree();
    if (d < 1 || !p.is_monic()) return out;  // not an algebraic integer
    if (!is_irreducible(p)) {
        out.status = PisotStatus::Reducible;
        return out;
    }
    auto accept = [&]() {
        auto roots = isolate_roots(p, 1, p.root_bound());
        if (roots.size() != 1)
            throw std::logic_error("is_pisot: witness extraction failed");
        out.status = PisotStatus::Pisot;
        out.root = roots[0];
    };
    // self-reciprocal minimal polynomials pair conjugates with their
    // inverses; beyond degree 2 that forces a conjugate of modulus >= 1
    if (p == p.reciprocal() || p == -(p.reciprocal())) {
        if (d == 2 && real_roots_above_one(p) == 1) accept();
        return out;
    }
    // irreducible and not self-reciprocal: no roots on the unit circle
    // (such a root would force p to divide its reciprocal), so the disk
    // count is exact; d - 1 inside leaves one conjugate outside, which must
    // be real, and we require it to lie in (1, oo)
    if (open_disk_count(p) != d - 1) return out;
    if (real_roots_above_one(p) != 1) return out;
    accept();
    return out;
}

SalemCheck is_salem(const IntPoly& p) {
    SalemCheck out;
    const int d = p.degree();
    if (d < 4 || d % 2 != 0 || !p.is_monic()) return out;
    if (!(p == p.reciprocal())) return out;
    if (!is_irreducible(p)) return out;
    IntPoly q = trace_polynomial(p);
    // one conjugate pair (theta, 1/theta) off the circle means one root of
    // the trace polynomial in (2, oo); every other pair stays on the circle,
    // giving m - 1 real roots in (-2, 2); q(+-2) != 0 since p(+-1) != 0
    const int m = d / 2;
    SturmChain chain(squarefree_part(q));
    Rat bound = q.root_bound();
    if (chain.count(-2, 2) != m - 1) return out;
    if (bound <= 2 || chain.count(2, bound) != 1) return out;
    auto roots = isolate_roots(p, 1, p.root_bound());
    if (roots.size() != 1)
        throw std::logic_error("is_salem: witness extraction failed");
    out.salem = true;
    out.root = roots[0];
    return out;
}

}  // namespace univoq
