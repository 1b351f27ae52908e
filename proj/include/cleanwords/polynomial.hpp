#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cleanwords/words.hpp"

namespace cleanwords {

class VariableTable;
using VarsPtr = std::shared_ptr<const VariableTable>;

/// Ordered list of distinct variable names. The order is fixed for a given
/// computation: x, then y, then (letter-tracking only) t and one x_<letter>
/// per alphabet letter.
class VariableTable {
public:
    explicit VariableTable(std::vector<std::string> names);

    static VarsPtr length_only();                        ///< {x, y}
    static VarsPtr letter_tracking(const Alphabet& a);   ///< {x, y, t, x_a...}
    static VarsPtr make(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(std::string_view name) const;

    bool operator==(const VariableTable& o) const { return names_ == o.names_; }

    // Fixed positions used by the enumerator pipeline.
    static constexpr int kX = 0;
    static constexpr int kY = 1;
    static constexpr int kT = 2;
    static constexpr int letter_var(Letter a) { return 3 + a; }

private:
    std::vector<std::string> names_;
};

/// One exponent per variable, nonnegative.
using Exponents = std::vector<int>;

/// Graded-lexicographic comparison, descending, so that the first term of a
/// term map is the leading term: higher total degree first, ties broken
/// lexicographically with earlier variables more significant.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. No zero coefficients are stored; the zero polynomial is the
/// empty term map. Immutable value semantics apart from compound assignment.
class Polynomial {
public:
    using TermMap = std::map<Exponents, mpz_class, GradedLexGreater>;

    explicit Polynomial(VarsPtr vars); ///< the zero polynomial
    static Polynomial constant(VarsPtr vars, mpz_class c);
    static Polynomial variable(VarsPtr vars, int var, int power = 1);
    static Polynomial monomial(VarsPtr vars, Exponents exps, mpz_class c);

    const VarsPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    mpz_class constant_term() const;
    mpz_class coefficient(const Exponents& exps) const;
    mpz_class leading_coefficient() const; ///< of the graded-lex leading term; 0 if zero
    int degree_in(int var) const;          ///< -1 for the zero polynomial
    int total_degree() const;              ///< -1 for the zero polynomial

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const mpz_class& c);
    Polynomial operator-() const;
    Polynomial pow(int e) const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class integer_content() const;

    /// Splits p by powers of `var`: result[d] is the coefficient of var^d,
    /// a polynomial with zero exponent on var. Only nonzero entries present.
    std::map<int, Polynomial> coefficients_in(int var) const;

    /// Exact substitution var -> polynomial (over the same table) for each
    /// entry of `assignment`; unlisted variables are kept.
    Polynomial substitute(const std::map<int, Polynomial>& assignment) const;

    /// Exact division: returns p/d if d divides p, nullopt otherwise.
    std::optional<Polynomial> divided_by(const Polynomial& d) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical text rendering: terms in decreasing graded-lex order with
    /// explicit signs, '*' between factors, '^' for powers.
    std::string str() const;
    /// LaTeX rendering of the same term order ("2 x^{5} y^{4} - ...").
    std::string latex() const;

private:
    VarsPtr vars_;
    TermMap terms_;

    void add_term(const Exponents& exps, const mpz_class& c);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const mpz_class& c, const Polynomial& p);

/// Greatest common divisor in Z[vars]: primitive-part recursion on the last
/// variable with subresultant remainder sequences. Includes the integer
/// content gcd; sign-normalized so the graded-lex leading coefficient is
/// positive. gcd(p, 0) is p with positive leading coefficient.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Re-expresses p over `target`, which must contain every variable of p's
/// table (matched by name).
Polynomial embed(const Polynomial& p, const VarsPtr& target);

/// Throws std::logic_error when the two operands disagree on variables.
void require_same_vars(const Polynomial& p, const Polynomial& q);

} // namespace cleanwords
