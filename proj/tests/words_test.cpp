#include <doctest.h>

#include "cleanwords/errors.hpp"
#include "cleanwords/textio.hpp"
#include "cleanwords/words.hpp"
#include "support.hpp"

using namespace cleanwords;
using cwtest::binary;
using cwtest::ternary;

namespace {

PatternSet patterns_of(const Alphabet& a, std::initializer_list<const char*> texts) {
    std::vector<Word> pats;
    for (const char* t : texts) pats.push_back(parse_word(t, a));
    return PatternSet(std::move(pats), a);
}

} // namespace

TEST_CASE("is_clean detects forbidden substrings") {
    const Alphabet a = ternary();
    const PatternSet m = patterns_of(a, {"123", "213"});
    CHECK_FALSE(is_clean(parse_word("12212312", a), m));
    CHECK(is_clean(parse_word("111222333", a), m));
    CHECK(is_clean(Word{}, m));
    CHECK(is_clean(parse_word("12", a), m)); // shorter than L
    CHECK(is_clean(parse_word("12212312", a), PatternSet{}));
}

TEST_CASE("clean_words enumerates in lexicographic order") {
    const Alphabet a = binary();
    const PatternSet m = patterns_of(a, {"11"});
    const auto words = clean_words(a, m, 3);
    REQUIRE(words.size() == 5);
    std::vector<std::string> got;
    for (const Word& w : words) got.push_back(format_word(w, a));
    CHECK(got == std::vector<std::string>{"000", "001", "010", "100", "101"});

    const auto empty_len = clean_words(a, m, 0);
    REQUIRE(empty_len.size() == 1);
    CHECK(empty_len[0].empty());

    CHECK(clean_words(a, m, 6).size() == 21); // F_8
}

TEST_CASE("neighbors: position order, then replacement letter order") {
    const Alphabet t = ternary();
    const Word w = parse_word("111", t);
    const auto ns = neighbors(w, t);
    REQUIRE(ns.size() == 6); // 3 * (3-1)
    std::vector<std::string> got;
    for (const Word& n : ns) got.push_back(format_word(n, t));
    CHECK(got == std::vector<std::string>{"211", "311", "121", "131", "112", "113"});

    CHECK(neighbors(Word{}, binary()).empty());

    const Alphabet b = binary();
    const auto ns2 = neighbors(parse_word("00", b), b);
    std::vector<std::string> got2;
    for (const Word& n : ns2) got2.push_back(format_word(n, b));
    CHECK(got2 == std::vector<std::string>{"10", "01"});
}

TEST_CASE("ncn on the Fibonacci instance") {
    const Alphabet a = binary();
    const PatternSet m = patterns_of(a, {"11"});
    CHECK(ncn(parse_word("10101", a), a, m) == 3);
    CHECK(ncn(parse_word("00", a), a, m) == 2);
    CHECK(ncn(Word{}, a, m) == 0);
}

TEST_CASE("clean_count agrees with the Fibonacci numbers") {
    const Alphabet a = binary();
    const PatternSet m = patterns_of(a, {"11"});
    CHECK(clean_count(a, m, 10) == 144); // F_12
    CHECK(clean_count(a, m, 0) == 1);
    CHECK(clean_count(a, patterns_of(a, {"000", "111"}), 3) == 6);
    CHECK(clean_count(a, PatternSet{}, 40) == mpz_class("1099511627776")); // 2^40
}

TEST_CASE("neighbor count and ncn bounds") {
    std::mt19937 rng(2023);
    const Alphabet a = ternary();
    const PatternSet m = patterns_of(a, {"12", "21"});
    for (int trial = 0; trial < 40; ++trial) {
        const int n = trial % 8;
        const Word w = cwtest::random_word(rng, a, n);
        CHECK(neighbors(w, a).size() == static_cast<std::size_t>(n * (a.size() - 1)));
        const int c = ncn(w, a, m);
        CHECK(c >= 0);
        CHECK(c <= n * (a.size() - 1));
        CHECK(ncn(w, a, PatternSet{}) == n * (a.size() - 1));
    }
}

TEST_CASE("clean_words output is clean and agrees with clean_count") {
    const Alphabet a = binary();
    const PatternSet m = patterns_of(a, {"11"});
    for (int n = 0; n <= 14; ++n) {
        const auto words = clean_words(a, m, n);
        CHECK(mpz_class(words.size()) == clean_count(a, m, n));
        for (const Word& w : words) {
            CHECK(w.size() == static_cast<std::size_t>(n));
            CHECK(is_clean(w, m));
        }
    }
    const PatternSet m2 = patterns_of(a, {"010"});
    for (int n = 0; n <= 10; ++n)
        CHECK(mpz_class(clean_words(a, m2, n).size()) == clean_count(a, m2, n));
}

TEST_CASE("ncn is invariant under relabeling and reversal") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const auto prob = cwtest::random_problem(rng);
        const Word w = cwtest::random_word(rng, prob.alphabet, 1 + trial % 7);
        const auto perm = cwtest::random_permutation(rng, prob.alphabet.size());
        const PatternSet pm = cwtest::permute_patterns(prob.patterns, perm, prob.alphabet);
        CHECK(ncn(cwtest::apply_permutation(w, perm), prob.alphabet, pm) ==
              ncn(w, prob.alphabet, prob.patterns));

        Word r = w;
        std::reverse(r.begin(), r.end());
        CHECK(ncn(r, prob.alphabet, cwtest::reverse_patterns(prob.patterns, prob.alphabet)) ==
              ncn(w, prob.alphabet, prob.patterns));
    }
}

TEST_CASE("validation rejects malformed inputs") {
    CHECK_THROWS_AS(Alphabet({}), ValidationError);
    CHECK_THROWS_AS(Alphabet({"0", "0"}), ValidationError);
    CHECK_THROWS_AS(Alphabet({"0", ""}), ValidationError);

    const Alphabet a = binary();
    SUBCASE("length-1 patterns have a distinct error") {
        try {
            PatternSet({Word{0}}, a);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("length >= 2") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(PatternSet({Word{0, 1}, Word{0, 0, 0}}, a), ValidationError); // mixed length
    CHECK_THROWS_AS(PatternSet({Word{0, 1}, Word{0, 1}}, a), ValidationError);    // duplicate
    CHECK_THROWS_AS(PatternSet({Word{0, 7}}, a), ValidationError);                // out of range

    Options o;
    o.max_k = 1;
    CHECK_THROWS_AS(ProblemSpec(a, patterns_of(a, {"000"}), o), ValidationError); // max_k < L-1
}

TEST_CASE("option defaults resolve by alphabet size") {
    const ProblemSpec p2(binary(), patterns_of(binary(), {"11"}));
    CHECK(p2.max_k() == 4); // 2L
    CHECK(p2.verify_order() == 10);
    const ProblemSpec p3(ternary(), patterns_of(ternary(), {"123"}));
    CHECK(p3.max_k() == 6);
    CHECK(p3.verify_order() == 8);
    const ProblemSpec pe(binary(), PatternSet{});
    CHECK(pe.max_k() == 1);
}
