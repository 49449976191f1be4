#include "univoq/expansion.hpp"

#include <cassert>
#include <unordered_map>
#include <utility>

namespace univoq {

namespace {

int to_small_int(const Int& v) {
    assert(v.fits_sint_p());
    return static_cast<int>(v.get_si());
}

// alphabet ceiling floor(beta), validated for the digit-word representation
int alphabet_floor(const NumberField& field) {
    Int f = field.beta().floor();
    if (f < 1 || f > 9)
        throw std::invalid_argument("expansion base out of supported range");
    return to_small_int(f);
}

// iterate r -> step(r) from r = 1 until the remainder repeats or vanishes,
// collecting one digit per step; keys are exact coordinate strings
template <typename StepFn>
ExpansionResult run_orbit(const NumberField& field, ExpansionKind kind,
                          int step_cap, StepFn step) {
    int amax = alphabet_floor(field);
    std::unordered_map<std::string, int> seen;
    std::vector<int> digits;
    FieldElement r = field.one();
    for (int n = 0;; ++n) {
        if (r.is_zero())
            return {kind, DigitWord::make(amax, digits, {}), n};
        auto [it, fresh] = seen.emplace(r.key(), n);
        if (!fresh) {
            int cut = it->second;
            std::vector<int> pre(digits.begin(), digits.begin() + cut);
            std::vector<int> per(digits.begin() + cut, digits.end());
            return {kind, DigitWord::make(amax, pre, per), n};
        }
        if (n >= step_cap) throw StepLimitExceeded(step_cap);
        auto [x, next] = step(r);
        assert(0 <= x && x <= amax);
        digits.push_back(x);
        r = next;
    }
}

int max_digit(const DigitWord& w) {
    int m = 0;
    for (int d : w.preperiod()) m = std::max(m, d);
    for (int d : w.period()) m = std::max(m, d);
    return m;
}

// number of shifts that exhausts all distinct tails of w
size_t shift_span(const DigitWord& w) {
    return w.preperiod().size() + std::max<size_t>(w.period().size(), 1);
}

}  // namespace

StepLimitExceeded::StepLimitExceeded(int cap)
    : std::runtime_error("no periodicity within " + std::to_string(cap) +
                         " steps"),
      cap_(cap) {}

NumberField beta_field(const IntPoly& p, const Rat& lo, const Rat& hi) {
    NumberField field = NumberField::adjoin_root(p, lo, hi);
    if (field.root().compare(Rat(1)) <= 0)
        throw std::invalid_argument("expansion base must exceed 1");
    if (field.degree() == 1 && field.beta().floor() == field.beta().ceil())
        throw std::invalid_argument("expansion base must not be an integer");
    return field;
}

ExpansionResult greedy_expand(const NumberField& field, int step_cap) {
    FieldElement beta = field.beta();
    return run_orbit(field, ExpansionKind::Greedy, step_cap,
                     [&](const FieldElement& r) {
                         FieldElement t = r * beta;
                         Int x = t.floor();
                         return std::pair(to_small_int(x), t - Rat(x));
                     });
}

ExpansionResult lazy_expand(const NumberField& field, int step_cap) {
    FieldElement beta = field.beta();
    Rat amax{Int(alphabet_floor(field))};
    FieldElement big = (beta - Rat(1)).inverse() * amax;  // value sum amax/b^n
    return run_orbit(field, ExpansionKind::Lazy, step_cap,
                     [&](const FieldElement& r) {
                         FieldElement t = r * beta;
                         Int x = (t - big).ceil();
                         if (x < 0) x = 0;
                         return std::pair(to_small_int(x), t - Rat(x));
                     });
}

ExpansionResult star_expand(const NumberField& field, int step_cap) {
    ExpansionResult g = greedy_expand(field, step_cap);
    return {ExpansionKind::Star, greedy_to_star(g.word), g.steps_to_period};
}

FieldElement word_value(const DigitWord& w, const NumberField& field) {
    FieldElement ib = field.beta().inverse();
    auto horner = [&](const std::vector<int>& digits) {
        // sum digits[i] ib^(i+1) evaluated inner-first
        FieldElement acc = field.zero();
        for (size_t i = digits.size(); i-- > 0;)
            acc = (acc + Rat(digits[i])) * ib;
        return acc;
    };
    FieldElement value = horner(w.preperiod());
    if (!w.period().empty()) {
        FieldElement ibp = field.one();
        for (size_t i = 0; i < w.preperiod().size(); ++i) ibp = ibp * ib;
        FieldElement ibq = field.one();
        for (size_t i = 0; i < w.period().size(); ++i) ibq = ibq * ib;
        FieldElement tail =
            horner(w.period()) * (field.one() - ibq).inverse();
        value = value + ibp * tail;
    }
    return value;
}

bool is_valid_greedy(const DigitWord& w, const NumberField& field) {
    if (w.is_zero()) return false;
    if (max_digit(w) > alphabet_floor(field)) return false;
    for (size_t k = 1; k <= shift_span(w); ++k)
        if (lex_compare(shift(w, k), w) != Ordering::Less) return false;
    return word_value(w, field) == field.one();
}

bool is_valid_lazy(const DigitWord& w, const NumberField& field) {
    int amax = alphabet_floor(field);
    if (max_digit(w) > amax) return false;
    // minimality: a digit could be lowered iff the slack behind it reaches a
    // full unit, so every nonzero position needs tail value > B - 1 where
    // B = amax/(beta-1) is the largest value a tail can carry
    FieldElement bm1 =
        (field.beta() - Rat(1)).inverse() * Rat(amax) - field.one();
    for (size_t k = 1; k <= shift_span(w); ++k) {
        if (w.digit_at(k - 1) == 0) continue;
        if (word_value(shift(w, k), field).compare(bm1) <= 0) return false;
    }
    return word_value(w, field) == field.one();
}

BetaClass classify_beta(const NumberField& field, int step_cap) {
    if (alphabet_floor(field) != 1)
        throw std::invalid_argument("classification requires beta in (1,2)");
    DigitWord g = greedy_expand(field, step_cap).word;
    DigitWord l = lazy_expand(field, step_cap).word;
    bool equal = g == l;
    bool strict = bracket_classify(g).tag == BracketTag::Strict;
    if (equal != strict)
        throw std::logic_error("univoque criteria disagree");  // unreachable
    if (equal) return {BetaTag::Univoque, g, l};
    if (g.finite() &&
        bracket_classify(greedy_to_star(g)).tag == BracketTag::Periodic)
        return {BetaTag::PeriodicSelfBracketed, g, l};
    return {BetaTag::Neither, g, l};
}

bool unit_check(const IntPoly& p) {
    if (p.degree() < 1 || !p.is_monic())
        throw std::invalid_argument("unit_check expects a monic polynomial");
    return p[0] == 1 || p[0] == -1;
}

}  // namespace univoq
