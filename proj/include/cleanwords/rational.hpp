#pragma once

#include <map>
#include <vector>

#include "cleanwords/polynomial.hpp"

namespace cleanwords {

/// An exact rational function num/den over a shared VariableTable.
/// Always kept normalized: gcd(num, den) = 1 and the denominator has a
/// positive constant term (it is +1 for every generating function this
/// artifact produces) or, when the constant term is zero, a positive
/// graded-lex leading coefficient.
class RationalFunction {
public:
    /* implicit */ RationalFunction(Polynomial numerator); ///< p / 1
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction zero(const VarsPtr& vars);
    static RationalFunction one(const VarsPtr& vars);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VarsPtr& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;

    /// Exact substitution applied to numerator and denominator, then
    /// renormalized. Throws if the denominator vanishes.
    RationalFunction substitute(const std::map<int, Polynomial>& assignment) const;

private:
    Polynomial num_, den_;
    void normalize();
};

RationalFunction operator+(RationalFunction f, const RationalFunction& g);
RationalFunction operator-(RationalFunction f, const RationalFunction& g);
RationalFunction operator*(RationalFunction f, const RationalFunction& g);
RationalFunction operator/(RationalFunction f, const RationalFunction& g);

/// Equality by cross-multiplication (f.num*g.den == g.num*f.den), not by
/// comparing normal forms; works across tables when one variable list embeds
/// into the other.
bool rf_equal(const RationalFunction& f, const RationalFunction& g);

RationalFunction embed(const RationalFunction& f, const VarsPtr& target);

/// Truncated power-series expansion of f in the variable named "x":
/// coefficients p_0 ... p_order with zero exponent on x, computed by the
/// linear recurrence induced by the denominator. Requires the denominator's
/// x^0 coefficient to be the constant 1; the identity
/// den * series == num (mod x^{order+1}) is re-verified before returning.
std::vector<Polynomial> series_in_x(const RationalFunction& f, int order);

} // namespace cleanwords
