#pragma once

// Shared helpers for the unit and acceptance suites: compact builders for
// words/polynomials and seeded random generators for the property tests.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cleanwords/enumerator.hpp"
#include "cleanwords/linear_system.hpp"
#include "cleanwords/polynomial.hpp"
#include "cleanwords/rational.hpp"
#include "cleanwords/words.hpp"

namespace cwtest {

using namespace cleanwords;

inline Alphabet binary() { return Alphabet({"0", "1"}); }
inline Alphabet ternary() { return Alphabet({"1", "2", "3"}); }

inline Polynomial poly(const VarsPtr& vars,
                       std::vector<std::pair<long, Exponents>> terms) {
    Polynomial p(vars);
    for (auto& [c, e] : terms) p += Polynomial::monomial(vars, std::move(e), c);
    return p;
}

// the two displayed closed forms, built term by term
inline RationalFunction fibonacci_formula() {
    const VarsPtr v = VariableTable::length_only();
    // -(x^2 y^2 - x^2 y - x y - 1) / (x^3 y^2 - x^3 y - x^2 y - x y + 1)
    const Polynomial num = poly(v, {{-1, {2, 2}}, {1, {2, 1}}, {1, {1, 1}}, {1, {0, 0}}});
    const Polynomial den =
        poly(v, {{1, {3, 2}}, {-1, {3, 1}}, {-1, {2, 1}}, {-1, {1, 1}}, {1, {0, 0}}});
    return RationalFunction(num, den);
}

inline RationalFunction avoid_000_111_formula() {
    const VarsPtr v = VariableTable::length_only();
    const Polynomial num = poly(v, {{2, {5, 4}},  {-4, {5, 3}}, {2, {5, 2}}, {-2, {4, 3}},
                                    {4, {4, 2}},  {-2, {4, 1}}, {-1, {3, 2}}, {2, {3, 1}},
                                    {-4, {2, 2}}, {-1, {3, 0}}, {2, {2, 1}}, {1, {2, 0}},
                                    {-2, {1, 1}}, {1, {1, 0}},  {-1, {0, 0}}});
    const Polynomial den =
        poly(v, {{1, {3, 2}}, {-1, {3, 0}}, {1, {2, 0}}, {1, {1, 0}}, {-1, {0, 0}}});
    return RationalFunction(num, den);
}

inline mpz_class random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(-1'000'000'000'000'000'000LL,
                                               1'000'000'000'000'000'000LL);
    long long c = d(rng);
    if (c == 0) c = 1;
    return mpz_class(std::to_string(c));
}

inline Polynomial random_poly(std::mt19937& rng, const VarsPtr& vars, int max_terms, int max_exp,
                              bool small_coeffs = false) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> small(-9, 9);
    Polynomial p(vars);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(vars->size()), 0);
        for (auto& x : e) x = exp(rng);
        mpz_class c = small_coeffs ? mpz_class(small(rng)) : random_coeff(rng);
        p += Polynomial::monomial(vars, std::move(e), std::move(c));
    }
    return p;
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const VarsPtr& vars, int max_terms,
                                      int max_exp, bool small_coeffs = false) {
    while (true) {
        Polynomial p = random_poly(rng, vars, max_terms, max_exp, small_coeffs);
        if (!p.is_zero()) return p;
    }
}

inline Word random_word(std::mt19937& rng, const Alphabet& a, int length) {
    std::uniform_int_distribution<int> letter(0, a.size() - 1);
    Word w(static_cast<std::size_t>(length));
    for (auto& l : w) l = letter(rng);
    return w;
}

// random problem instance within the property-test space
struct RandomProblem {
    Alphabet alphabet;
    PatternSet patterns;
};

inline RandomProblem random_problem(std::mt19937& rng, int max_q = 3, int max_len = 3,
                                    int max_patterns = 3) {
    std::uniform_int_distribution<int> qd(2, max_q);
    std::uniform_int_distribution<int> ld(2, max_len);
    std::uniform_int_distribution<int> md(1, max_patterns);
    const int q = qd(rng);
    std::vector<std::string> letters;
    for (int i = 0; i < q; ++i) letters.push_back(std::to_string(i));
    Alphabet alphabet(std::move(letters));
    const int len = ld(rng);
    const int want = md(rng);
    std::vector<Word> pats;
    for (int tries = 0; static_cast<int>(pats.size()) < want && tries < 50; ++tries) {
        Word p = random_word(rng, alphabet, len);
        if (std::find(pats.begin(), pats.end(), p) == pats.end()) pats.push_back(p);
    }
    PatternSet patterns(std::move(pats), alphabet);
    return RandomProblem{std::move(alphabet), std::move(patterns)};
}

inline Word apply_permutation(const Word& w, const std::vector<Letter>& perm) {
    Word out = w;
    for (auto& l : out) l = perm[static_cast<std::size_t>(l)];
    return out;
}

inline PatternSet permute_patterns(const PatternSet& m, const std::vector<Letter>& perm,
                                   const Alphabet& a) {
    std::vector<Word> out;
    for (const Word& p : m.patterns()) out.push_back(apply_permutation(p, perm));
    return PatternSet(std::move(out), a);
}

inline PatternSet reverse_patterns(const PatternSet& m, const Alphabet& a) {
    std::vector<Word> out;
    for (Word p : m.patterns()) {
        std::reverse(p.begin(), p.end());
        out.push_back(std::move(p));
    }
    return PatternSet(std::move(out), a);
}

inline std::vector<Letter> random_permutation(std::mt19937& rng, int q) {
    std::vector<Letter> perm(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// random system whose transition coefficients all carry a factor of x, so
// I - T is guaranteed nonsingular
inline LinearSystem random_monomial_system(std::mt19937& rng, int n) {
    const VarsPtr vars = VariableTable::length_only();
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> xe(1, 2);
    std::uniform_int_distribution<int> ye(0, 2);
    std::uniform_int_distribution<int> density(0, 99);
    LinearSystem s;
    s.vars = vars;
    for (int i = 0; i < n; ++i) {
        s.unknown_ids.push_back("w" + std::to_string(i));
        LinearRow row{{}, random_poly(rng, vars, 2, 3, true)};
        for (int j = 0; j < n; ++j) {
            if (density(rng) >= 40) continue;
            const int c = coeff(rng);
            if (c == 0) continue;
            row.terms.push_back(LinearTerm{
                j, RationalFunction(Polynomial::monomial(vars, {xe(rng), ye(rng)}, c))});
        }
        s.rows.push_back(std::move(row));
    }
    return s;
}

} // namespace cwtest
