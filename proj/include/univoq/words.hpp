// Eventually periodic digit words with exact lexicographic machinery: the
// canonical (preperiod, period) form, shift and complement, the
// self-bracketed classification used for univoque tests, the doubling map on
// periodic words, and Thue-Morse prefixes.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace univoq {

class DigitWord {
public:
    DigitWord() = default;  // the all-zero word over the binary alphabet

    // canonicalizes: minimal period, shortest preperiod, all-zero period
    // dropped (finite word), finite words stripped of trailing zeros
    static DigitWord make(int alphabet_max, std::vector<int> pre,
                          std::vector<int> per);

    // text form: digits, optional "(digits)^inf" tail, e.g. "11(10)^inf";
    // alphabet_max -1 means infer as max(1, largest digit)
    static DigitWord parse(const std::string& text, int alphabet_max = -1);
    std::string format() const;

    int alphabet_max() const { return amax_; }
    const std::vector<int>& preperiod() const { return pre_; }
    const std::vector<int>& period() const { return per_; }
    bool finite() const { return per_.empty(); }
    bool is_zero() const { return pre_.empty() && per_.empty(); }

    int digit_at(size_t n) const;  // 0-based index into the infinite word

    bool operator==(const DigitWord& o) const {
        return amax_ == o.amax_ && pre_ == o.pre_ && per_ == o.per_;
    }
    bool operator!=(const DigitWord& o) const { return !(*this == o); }

private:
    int amax_ = 1;
    std::vector<int> pre_, per_;
};

enum class Ordering { Less, Equal, Greater };

// exact comparison of the two infinite sequences (same alphabet required)
Ordering lex_compare(const DigitWord& a, const DigitWord& b);

DigitWord shift(const DigitWord& w, size_t k);

DigitWord complement(const DigitWord& w);

enum class BracketTag { Strict, Periodic, None };

struct BracketClass {
    BracketTag tag = BracketTag::None;
    // shift index k breaking the bracket (None) or achieving equality
    // (Periodic); absent for Strict
    std::optional<int> witness;
};

// tests complement(w) <= shift^k(w) <= w for all k >= 1 on a binary word:
// Strict when always strict, Periodic when an equality occurs, None when
// some inequality fails
BracketClass bracket_classify(const DigitWord& w);

// true iff the longest 0-run strictly exceeds the longest 1-run; a cheap
// certificate that bracket_classify would return None
bool run_length_reject(const DigitWord& w);

// (z0)^inf -> (z 1 zbar 0)^inf; input must be purely periodic with minimal
// period ending in 0
DigitWord phi_map(const DigitWord& b);

// first `digits` digits of the limit of phi_map iteration
std::vector<int> phi_limit(const DigitWord& b, int digits);

// t_1..t_n of the Thue-Morse word t_k = parity of popcount(k)
std::vector<int> thue_morse_shifted(int n);

// (w0)^inf -> w1 0^inf and its inverse; greedy_to_star is the identity on
// infinite words
DigitWord star_to_greedy(const DigitWord& a);
DigitWord greedy_to_star(const DigitWord& b);

}  // namespace univoq
