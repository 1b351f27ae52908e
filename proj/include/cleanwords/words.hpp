#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cleanwords {

/// Index of a letter within an Alphabet.
using Letter = int;

/// A word is a sequence of letter indices. The empty word is valid.
/// vector's operator< gives lexicographic order by index, which is the
/// canonical order used everywhere.
using Word = std::vector<Letter>;

/// An ordered list of distinct letter tokens. Order is fixed as given.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::string& letter(Letter i) const { return letters_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& letters() const { return letters_; }

    /// True when every token is one character long, so words can be written
    /// contiguously ("10101").
    bool single_char_letters() const { return single_char_; }

    std::optional<Letter> find(std::string_view token) const;

private:
    std::vector<std::string> letters_;
    bool single_char_;
};

/// A set of forbidden substrings, all of the same length L >= 2.
/// May be empty (then every word is clean).
class PatternSet {
public:
    PatternSet() = default;
    PatternSet(std::vector<Word> patterns, const Alphabet& alphabet);

    bool empty() const { return patterns_.empty(); }
    int length() const { return length_; } ///< L; 0 when the set is empty.
    const std::vector<Word>& patterns() const { return patterns_; }

    /// Does w[pos .. pos+L) match one of the patterns? pos must leave room.
    bool matches_at(const Word& w, std::size_t pos) const;

    /// Checks only the window ending at the last letter of w (used when
    /// extending an already-clean prefix). False when |w| < L or M empty.
    bool last_window_dirty(const Word& w) const;

private:
    std::vector<Word> patterns_; // sorted, duplicate-free
    int length_ = 0;
};

/// True iff no pattern of m occurs in w as a consecutive substring.
/// Words shorter than L are always clean; everything is clean when m is empty.
bool is_clean(const Word& w, const PatternSet& m);

/// All clean words of length n, in lexicographic order by letter index.
/// For n = 0 returns the singleton list holding the empty word.
std::vector<Word> clean_words(const Alphabet& a, const PatternSet& m, int n);

/// All words at Hamming distance exactly 1 from w, ordered by position and
/// then by replacement letter index. Exactly n*(|A|-1) of them.
std::vector<Word> neighbors(const Word& w, const Alphabet& a);

/// The number of clean neighbors of w (defined for any w, clean or not).
int ncn(const Word& w, const Alphabet& a, const PatternSet& m);

/// |clean_words(a, m, n)| computed by dynamic programming over (L-1)-letter
/// suffix states, usable far beyond enumeration range.
mpz_class clean_count(const Alphabet& a, const PatternSet& m, int n);

/// Tunables carried by a ProblemSpec. Zero/negative values mean "auto".
struct Options {
    int max_k = 0;          ///< auto: 2L (at least 1)
    bool track_letters = false;
    int verify_order = -1;  ///< auto: 10 when |A| <= 2, 8 otherwise
};

/// A validated problem instance: alphabet, forbidden patterns, options.
class ProblemSpec {
public:
    ProblemSpec(Alphabet alphabet, PatternSet patterns, Options options = {});

    const Alphabet& alphabet() const { return alphabet_; }
    const PatternSet& patterns() const { return patterns_; }
    bool track_letters() const { return options_.track_letters; }
    int max_k() const { return max_k_; }             ///< resolved, >= 1
    int verify_order() const { return verify_order_; } ///< resolved, >= 0

private:
    Alphabet alphabet_;
    PatternSet patterns_;
    Options options_;
    int max_k_;
    int verify_order_;
};

} // namespace cleanwords
