#include "univoq/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace univoq {

namespace {

bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int d) { return d == 0; });
}

// minimal q such that (per)^inf is q-periodic; q always divides |per|
size_t minimal_period(const std::vector<int>& per) {
    const size_t n = per.size();
    for (size_t q = 1; q < n; ++q) {
        if (n % q != 0) continue;
        bool ok = true;
        for (size_t i = q; i < n && ok; ++i) ok = per[i] == per[i - q];
        if (ok) return q;
    }
    return n;
}

}  // namespace

DigitWord DigitWord::make(int alphabet_max, std::vector<int> pre,
                          std::vector<int> per) {
    if (alphabet_max < 1 || alphabet_max > 9)
        throw std::invalid_argument("DigitWord: alphabet_max out of range");
    for (int d : pre)
        if (d < 0 || d > alphabet_max)
            throw std::invalid_argument("DigitWord: digit out of range");
    for (int d : per)
        if (d < 0 || d > alphabet_max)
            throw std::invalid_argument("DigitWord: digit out of range");

    if (!per.empty()) {
        size_t q = minimal_period(per);
        per.resize(q);
        if (all_zero(per)) per.clear();
    }
    if (per.empty()) {
        while (!pre.empty() && pre.back() == 0) pre.pop_back();
    } else {
        // absorb the period boundary leftward as far as it goes
        while (!pre.empty() && pre.back() == per.back()) {
            per.insert(per.begin(), per.back());
            per.pop_back();
            pre.pop_back();
        }
    }
    DigitWord w;
    w.amax_ = alphabet_max;
    w.pre_ = std::move(pre);
    w.per_ = std::move(per);
    return w;
}

DigitWord DigitWord::parse(const std::string& text, int alphabet_max) {
    std::vector<int> pre, per;
    size_t i = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        pre.push_back(text[i++] - '0');
    if (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("DigitWord: unexpected character in '" +
                                        text + "'");
        ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            per.push_back(text[i++] - '0');
        if (per.empty() || text.compare(i, std::string::npos, ")^inf") != 0)
            throw std::invalid_argument("DigitWord: malformed period in '" +
                                        text + "'");
        i = text.size();
    }
    if (pre.empty() && per.empty())
        throw std::invalid_argument("DigitWord: empty word text");
    if (alphabet_max < 0) {
        alphabet_max = 1;
        for (int d : pre) alphabet_max = std::max(alphabet_max, d);
        for (int d : per) alphabet_max = std::max(alphabet_max, d);
    }
    return make(alphabet_max, std::move(pre), std::move(per));
}

std::string DigitWord::format() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (int d : pre_) out << d;
    if (!per_.empty()) {
        out << '(';
        for (int d : per_) out << d;
        out << ")^inf";
    }
    return out.str();
}

int DigitWord::digit_at(size_t n) const {
    if (n < pre_.size()) return pre_[n];
    if (per_.empty()) return 0;
    return per_[(n - pre_.size()) % per_.size()];
}

Ordering lex_compare(const DigitWord& a, const DigitWord& b) {
    if (a.alphabet_max() != b.alphabet_max())
        throw std::invalid_argument("lex_compare: different alphabets");
    size_t qa = std::max<size_t>(a.period().size(), 1);
    size_t qb = std::max<size_t>(b.period().size(), 1);
    size_t bound = std::max(a.preperiod().size(), b.preperiod().size()) +
                   std::lcm(qa, qb);
    for (size_t i = 0; i < bound; ++i) {
        int da = a.digit_at(i), db = b.digit_at(i);
        if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

DigitWord shift(const DigitWord& w, size_t k) {
    const auto& pre = w.preperiod();
    const auto& per = w.period();
    if (k <= pre.size()) {
        std::vector<int> npre(pre.begin() + k, pre.end());
        return DigitWord::make(w.alphabet_max(), std::move(npre), per);
    }
    if (per.empty()) return DigitWord::make(w.alphabet_max(), {}, {});
    size_t r = (k - pre.size()) % per.size();
    std::vector<int> nper(per.begin() + r, per.end());
    nper.insert(nper.end(), per.begin(), per.begin() + r);
    return DigitWord::make(w.alphabet_max(), {}, std::move(nper));
}

DigitWord complement(const DigitWord& w) {
    std::vector<int> pre = w.preperiod(), per = w.period();
    for (int& d : pre) d = w.alphabet_max() - d;
    for (int& d : per) d = w.alphabet_max() - d;
    if (per.empty()) {
        // the implicit 0^inf tail complements to (alphabet_max)^inf
        per.assign(1, w.alphabet_max());
    }
    return DigitWord::make(w.alphabet_max(), std::move(pre), std::move(per));
}

BracketClass bracket_classify(const DigitWord& w) {
    if (w.alphabet_max() != 1)
        throw std::invalid_argument("bracket_classify: binary alphabet required");
    BracketClass out;
    DigitWord bar = complement(w);
    size_t p = w.preperiod().size();
    size_t q = std::max<size_t>(w.period().size(), 1);
    std::optional<int> equality;
    for (size_t k = 1; k <= p + q; ++k) {
        DigitWord s = shift(w, k);
        Ordering upper = lex_compare(s, w);
        Ordering lower = lex_compare(bar, s);
        if (upper == Ordering::Greater || lower == Ordering::Greater) {
            out.tag = BracketTag::None;
            out.witness = static_cast<int>(k);
            return out;
        }
        if (!equality && (upper == Ordering::Equal || lower == Ordering::Equal))
            equality = static_cast<int>(k);
    }
    if (equality) {
        out.tag = BracketTag::Periodic;
        out.witness = equality;
    } else {
        out.tag = BracketTag::Strict;
    }
    return out;
}

bool run_length_reject(const DigitWord& w) {
    if (w.alphabet_max() != 1)
        throw std::invalid_argument("run_length_reject: binary alphabet required");
    if (w.finite()) return true;  // trailing 0^inf beats any finite 1-run
    // canonical periods are never all-zero; all-one means an infinite 1-run
    if (std::all_of(w.period().begin(), w.period().end(),
                    [](int d) { return d == 1; }))
        return false;
    // runs of the eventually periodic word all appear in pre + 3 copies of
    // the period (a wrapped run spans fewer than two periods)
    std::vector<int> scan = w.preperiod();
    for (int copy = 0; copy < 3; ++copy)
        scan.insert(scan.end(), w.period().begin(), w.period().end());
    size_t longest[2] = {0, 0};
    size_t i = 0;
    while (i < scan.size()) {
        size_t j = i;
        while (j < scan.size() && scan[j] == scan[i]) ++j;
        longest[scan[i]] = std::max(longest[scan[i]], j - i);
        i = j;
    }
    return longest[0] > longest[1];
}

DigitWord phi_map(const DigitWord& b) {
    if (b.alphabet_max() != 1)
        throw std::invalid_argument("phi_map: binary alphabet required");
    if (!b.preperiod().empty() || b.period().empty() || b.period().back() != 0)
        throw std::invalid_argument(
            "phi_map: input must be purely periodic of the form (z0)^inf");
    std::vector<int> z(b.period().begin(), b.period().end() - 1);
    std::vector<int> per = z;
    per.push_back(1);
    for (int d : z) per.push_back(1 - d);
    per.push_back(0);
    return DigitWord::make(1, {}, std::move(per));
}

std::vector<int> phi_limit(const DigitWord& b, int digits) {
    if (digits < 0) throw std::invalid_argument("phi_limit: negative length");
    DigitWord cur = b;
    // successive images agree on |period| - 1 digits, and the period doubles
    // each step, so iterate until the period alone covers the request
    while (cur.period().size() < static_cast<size_t>(digits) + 1)
        cur = phi_map(cur);
    std::vector<int> out(digits);
    for (int i = 0; i < digits; ++i) out[i] = cur.digit_at(i);
    return out;
}

std::vector<int> thue_morse_shifted(int n) {
    if (n < 1) throw std::invalid_argument("thue_morse_shifted: n >= 1 required");
    std::vector<int> t(n);
    for (int k = 1; k <= n; ++k)
        t[k - 1] = __builtin_popcount(static_cast<unsigned>(k)) & 1;
    return t;
}

DigitWord star_to_greedy(const DigitWord& a) {
    if (!a.preperiod().empty() || a.period().empty() || a.period().back() != 0)
        throw std::invalid_argument(
            "star_to_greedy: input must be purely periodic of the form (w0)^inf");
    std::vector<int> pre(a.period().begin(), a.period().end() - 1);
    pre.push_back(1);
    return DigitWord::make(a.alphabet_max(), std::move(pre), {});
}

DigitWord greedy_to_star(const DigitWord& b) {
    if (!b.finite()) return b;
    if (b.is_zero())
        throw std::invalid_argument("greedy_to_star: zero word has no star form");
    std::vector<int> per = b.preperiod();
    per.back() -= 1;
    return DigitWord::make(b.alphabet_max(), {}, std::move(per));
}

}  // namespace univoq
