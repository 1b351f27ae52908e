#include "cleanwords/words.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cleanwords/errors.hpp"

namespace cleanwords {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty())
        throw ValidationError("alphabet must contain at least one letter");
    std::set<std::string> seen;
    for (const auto& tok : letters_) {
        if (tok.empty())
            throw ValidationError("alphabet letter tokens must be nonempty");
        if (!seen.insert(tok).second)
            throw ValidationError("duplicate alphabet letter '" + tok + "'");
    }
    single_char_ = std::all_of(letters_.begin(), letters_.end(),
                               [](const std::string& s) { return s.size() == 1; });
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == token) return static_cast<Letter>(i);
    return std::nullopt;
}

PatternSet::PatternSet(std::vector<Word> patterns, const Alphabet& alphabet)
    : patterns_(std::move(patterns)) {
    if (patterns_.empty()) return;
    length_ = static_cast<int>(patterns_.front().size());
    if (length_ <= 1)
        throw ValidationError("patterns must have length >= 2 (length-1 patterns would delete "
                              "letters from the alphabet, which is unsupported)");
    for (const Word& p : patterns_) {
        if (static_cast<int>(p.size()) != length_)
            throw ValidationError("all patterns must have the same length");
        for (Letter l : p)
            if (l < 0 || l >= alphabet.size())
                throw ValidationError("pattern letter index out of range");
    }
    std::sort(patterns_.begin(), patterns_.end());
    if (std::adjacent_find(patterns_.begin(), patterns_.end()) != patterns_.end())
        throw ValidationError("duplicate pattern");
}

bool PatternSet::matches_at(const Word& w, std::size_t pos) const {
    for (const Word& p : patterns_)
        if (std::equal(p.begin(), p.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
            return true;
    return false;
}

bool PatternSet::last_window_dirty(const Word& w) const {
    if (empty() || static_cast<int>(w.size()) < length_) return false;
    return matches_at(w, w.size() - static_cast<std::size_t>(length_));
}

bool is_clean(const Word& w, const PatternSet& m) {
    if (m.empty()) return true;
    const auto L = static_cast<std::size_t>(m.length());
    if (w.size() < L) return true;
    for (std::size_t i = 0; i + L <= w.size(); ++i)
        if (m.matches_at(w, i)) return false;
    return true;
}

std::vector<Word> clean_words(const Alphabet& a, const PatternSet& m, int n) {
    std::vector<Word> out;
    Word w;
    w.reserve(static_cast<std::size_t>(n));
    // depth-first in letter order yields lexicographic output
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n) {
            out.push_back(w);
            return;
        }
        for (Letter l = 0; l < a.size(); ++l) {
            w.push_back(l);
            if (!m.last_window_dirty(w)) self(self);
            w.pop_back();
        }
    };
    extend(extend);
    return out;
}

std::vector<Word> neighbors(const Word& w, const Alphabet& a) {
    std::vector<Word> out;
    out.reserve(w.size() * static_cast<std::size_t>(a.size() - 1));
    for (std::size_t p = 0; p < w.size(); ++p) {
        for (Letter l = 0; l < a.size(); ++l) {
            if (l == w[p]) continue;
            Word u = w;
            u[p] = l;
            out.push_back(std::move(u));
        }
    }
    return out;
}

int ncn(const Word& w, const Alphabet& a, const PatternSet& m) {
    int count = 0;
    Word u = w;
    for (std::size_t p = 0; p < w.size(); ++p) {
        const Letter orig = u[p];
        for (Letter l = 0; l < a.size(); ++l) {
            if (l == orig) continue;
            u[p] = l;
            if (is_clean(u, m)) ++count;
        }
        u[p] = orig;
    }
    return count;
}

mpz_class clean_count(const Alphabet& a, const PatternSet& m, int n) {
    // suffix-state DP: state = last min(length, L-1) letters of a clean word
    const int suffix_len = m.empty() ? 0 : m.length() - 1;
    std::map<Word, mpz_class> states;
    states[Word{}] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<Word, mpz_class> next;
        for (const auto& [suffix, cnt] : states) {
            for (Letter l = 0; l < a.size(); ++l) {
                Word w = suffix;
                w.push_back(l);
                if (m.last_window_dirty(w)) continue;
                if (static_cast<int>(w.size()) > suffix_len)
                    w.erase(w.begin(), w.end() - suffix_len);
                next[w] += cnt;
            }
        }
        states = std::move(next);
    }
    mpz_class total = 0;
    for (const auto& [suffix, cnt] : states) total += cnt;
    return total;
}

ProblemSpec::ProblemSpec(Alphabet alphabet, PatternSet patterns, Options options)
    : alphabet_(std::move(alphabet)), patterns_(std::move(patterns)), options_(options) {
    const int L = patterns_.length();
    max_k_ = options_.max_k > 0 ? options_.max_k : std::max(2 * L, 1);
    if (!patterns_.empty() && max_k_ < L - 1)
        throw ValidationError("max_k must be at least L-1 = " + std::to_string(L - 1));
    verify_order_ = options_.verify_order >= 0 ? options_.verify_order
                                               : (alphabet_.size() <= 2 ? 10 : 8);
}

} // namespace cleanwords
