// Greedy, lazy, and quasi-greedy expansions of 1 in base beta, computed with
// exact field arithmetic and cycle detection on the remainder state, plus the
// lexicographic validity predicates and the univoque classification.
#pragma once

#include <stdexcept>

#include "univoq/field.hpp"
#include "univoq/words.hpp"

namespace univoq {

enum class ExpansionKind { Greedy, Lazy, Star };

struct ExpansionResult {
    ExpansionKind kind;
    DigitWord word;
    int steps_to_period;  // digits consumed before the remainder state repeated
};

enum class BetaTag { Univoque, PeriodicSelfBracketed, Neither };

struct BetaClass {
    BetaTag tag;
    DigitWord greedy;
    DigitWord lazy;
};

// raised when no remainder repeat is found within the step cap; this signals a
// possibly aperiodic expansion, not an internal failure
class StepLimitExceeded : public std::runtime_error {
public:
    explicit StepLimitExceeded(int cap);
    int cap() const { return cap_; }

private:
    int cap_;
};

// build Q(beta) from the unique root of p in (lo, hi); rejects roots <= 1 and
// integer roots (their expansions are degenerate)
NumberField beta_field(const IntPoly& p, const Rat& lo, const Rat& hi);

// d_beta(1): x_n = floor(beta r), r' = beta r - x_n, starting from r = 1
ExpansionResult greedy_expand(const NumberField& field, int step_cap = 100000);

// l_beta(1): x_n = max(0, ceil(beta r - B)) with B = floor(beta)/(beta - 1)
ExpansionResult lazy_expand(const NumberField& field, int step_cap = 100000);

// quasi-greedy d*_beta(1): the greedy word, periodized if finite
ExpansionResult star_expand(const NumberField& field, int step_cap = 100000);

// exact value of sum w_i beta^(-i) as an element of Q(beta)
FieldElement word_value(const DigitWord& w, const NumberField& field);

// true iff w is d_beta(1): digits within the alphabet, every proper shift
// strictly below the word itself, and exact value 1
bool is_valid_greedy(const DigitWord& w, const NumberField& field);

// true iff w is l_beta(1): every shift of the complement strictly below the
// word itself, and exact value 1
bool is_valid_lazy(const DigitWord& w, const NumberField& field);

// univoque iff greedy = lazy (cross-checked against the bracket criterion);
// periodic self-bracketed iff greedy is finite and its periodization passes
// the bracket test with an equality witness; requires beta in (1,2)
BetaClass classify_beta(const NumberField& field, int step_cap = 100000);

// |constant term| = 1 for monic p; cheap pre-filter used by searches
bool unit_check(const IntPoly& p);

}  // namespace univoq
