// Real algebraic numbers: a defining integer polynomial plus a rational
// isolating interval, refinable on demand. Sign determination against the
// defining polynomial is exact, so comparisons never rely on floating point.
#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "univoq/intpoly.hpp"
#include "univoq/sturm.hpp"

namespace univoq {

class AlgebraicReal {
public:
    // interval (lo, hi) must contain exactly one real root of p
    AlgebraicReal(const IntPoly& p, const Rat& lo, const Rat& hi);

    const IntPoly& defining() const { return rep_->poly; }
    std::pair<Rat, Rat> interval() const;

    // shrink the isolating interval until hi - lo <= width; returns it
    std::pair<Rat, Rat> refine(const Rat& width) const;

    // exact three-way comparison against a rational: -1, 0, +1
    int compare(const Rat& q) const;
    // exact sign of g evaluated at this number
    int sign_of(const IntPoly& g) const;
    // exact three-way comparison against another algebraic real
    int compare(const AlgebraicReal& o) const;

    // correctly rounded decimal with the given number of significant digits
    // (round half to even on ties)
    std::string decimal(int significant_digits) const;
    double approx() const;

private:
    struct Rep {
        IntPoly poly;        // squarefree, primitive, positive leading coeff
        SturmChain chain;
        mutable Rat lo, hi;  // isolating interval, only ever shrinks
        mutable std::mutex mtx;
        Rep(IntPoly p, SturmChain c, Rat l, Rat h)
            : poly(std::move(p)), chain(std::move(c)), lo(std::move(l)),
              hi(std::move(h)) {}
    };
    std::shared_ptr<Rep> rep_;

    void bisect_once() const;
};

// one AlgebraicReal per distinct real root of p in (lo, hi), ascending
std::vector<AlgebraicReal> isolate_roots(const IntPoly& p, const Rat& lo,
                                         const Rat& hi);

}  // namespace univoq
