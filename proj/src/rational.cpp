#include "cleanwords/rational.hpp"

#include <stdexcept>

#include "cleanwords/errors.hpp"

namespace cleanwords {

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.vars(), 1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    require_same_vars(num_, den_);
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::zero(const VarsPtr& vars) {
    return RationalFunction(Polynomial(vars));
}

RationalFunction RationalFunction::one(const VarsPtr& vars) {
    return RationalFunction(Polynomial::constant(vars, 1));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.vars(), 1);
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
        auto qn = num_.divided_by(g);
        auto qd = den_.divided_by(g);
        if (!qn || !qd) throw std::logic_error("gcd does not divide its arguments");
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    const mpz_class c0 = den_.constant_term();
    const bool flip = c0 != 0 ? c0 < 0 : den_.leading_coefficient() < 0;
    if (flip) {
        num_ = -num_;
        den_ = -den_;
    }
}

namespace {
Polynomial divide_checked(const Polynomial& p, const Polynomial& d) {
    auto q = p.divided_by(d);
    if (!q) throw std::logic_error("gcd division was not exact");
    return std::move(*q);
}
} // namespace

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    require_same_vars(num_, o.num_);
    // reduce through g = gcd(den, o.den) to keep intermediates small
    const Polynomial g = gcd(den_, o.den_);
    const Polynomial rd = divide_checked(den_, g);
    const Polynomial od = divide_checked(o.den_, g);
    num_ = num_ * od + o.num_ * rd;
    den_ = rd * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    require_same_vars(num_, o.num_);
    // cross-reduce before multiplying
    if (is_zero() || o.is_zero()) {
        num_ = Polynomial(num_.vars());
        den_ = Polynomial::constant(num_.vars(), 1);
        return *this;
    }
    const Polynomial g1 = gcd(num_, o.den_);
    const Polynomial g2 = gcd(o.num_, den_);
    num_ = divide_checked(num_, g1) * divide_checked(o.num_, g2);
    den_ = divide_checked(den_, g2) * divide_checked(o.den_, g1);
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by the zero rational function");
    RationalFunction inv(o.den_, o.num_);
    return *this *= inv;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(RationalFunction f, const RationalFunction& g) { return f += g; }
RationalFunction operator-(RationalFunction f, const RationalFunction& g) { return f -= g; }
RationalFunction operator*(RationalFunction f, const RationalFunction& g) { return f *= g; }
RationalFunction operator/(RationalFunction f, const RationalFunction& g) { return f /= g; }

RationalFunction RationalFunction::substitute(const std::map<int, Polynomial>& assignment) const {
    Polynomial n = num_.substitute(assignment);
    Polynomial d = den_.substitute(assignment);
    if (d.is_zero()) throw ValidationError("substitution maps the denominator to zero");
    return RationalFunction(std::move(n), std::move(d));
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g) {
    if (*f.vars() == *g.vars())
        return f.num() * g.den() == g.num() * f.den();
    // embed the smaller variable list into the larger one
    const auto contains = [](const VarsPtr& big, const VarsPtr& small) {
        for (const std::string& n : small->names())
            if (!big->index_of(n)) return false;
        return true;
    };
    if (contains(g.vars(), f.vars())) return rf_equal(embed(f, g.vars()), g);
    if (contains(f.vars(), g.vars())) return rf_equal(f, embed(g, f.vars()));
    throw std::logic_error("rf_equal: incompatible variable tables");
}

RationalFunction embed(const RationalFunction& f, const VarsPtr& target) {
    return RationalFunction(embed(f.num(), target), embed(f.den(), target));
}

std::vector<Polynomial> series_in_x(const RationalFunction& f, int order) {
    if (order < 0) throw std::logic_error("negative series order");
    const auto xi = f.vars()->index_of("x");
    if (!xi) throw std::logic_error("series_in_x: no variable named x");

    const std::map<int, Polynomial> qc = f.den().coefficients_in(*xi);
    const auto q0 = qc.find(0);
    if (q0 == qc.end() || !q0->second.is_one())
        throw ValidationError(
            "denominator constant term at x=0 is not 1; f is not a power series in x");
    const std::map<int, Polynomial> pc = f.num().coefficients_in(*xi);

    const auto num_coeff = [&](int n) {
        const auto it = pc.find(n);
        return it == pc.end() ? Polynomial(f.vars()) : it->second;
    };

    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Polynomial pn = num_coeff(n);
        for (const auto& [j, qj] : qc) {
            if (j == 0 || j > n) continue;
            pn -= qj * out[static_cast<std::size_t>(n - j)];
        }
        out.push_back(std::move(pn));
    }

    // re-multiplication identity: den * series == num (mod x^{order+1})
    for (int n = 0; n <= order; ++n) {
        Polynomial acc(f.vars());
        for (const auto& [j, qj] : qc) {
            if (j > n) continue;
            acc += qj * out[static_cast<std::size_t>(n - j)];
        }
        if (acc != num_coeff(n))
            throw std::logic_error("series re-multiplication check failed");
    }
    return out;
}

} // namespace cleanwords
