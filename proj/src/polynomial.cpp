#include "cleanwords/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cleanwords/errors.hpp"

namespace cleanwords {

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::logic_error("empty variable name");
        if (!seen.insert(n).second) throw std::logic_error("duplicate variable name " + n);
    }
}

VarsPtr VariableTable::make(std::vector<std::string> names) {
    return std::make_shared<const VariableTable>(std::move(names));
}

VarsPtr VariableTable::length_only() {
    static const VarsPtr table = make({"x", "y"});
    return table;
}

VarsPtr VariableTable::letter_tracking(const Alphabet& a) {
    std::vector<std::string> names{"x", "y", "t"};
    for (const std::string& tok : a.letters()) names.push_back("x_" + tok);
    return make(std::move(names));
}

std::optional<int> VariableTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b; // lexicographic, earlier variables more significant
}

Polynomial::Polynomial(VarsPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw std::logic_error("polynomial requires a variable table");
}

Polynomial Polynomial::constant(VarsPtr vars, mpz_class c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(p.vars_->size()), 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(VarsPtr vars, int var, int power) {
    Polynomial p(std::move(vars));
    Exponents e(static_cast<std::size_t>(p.vars_->size()), 0);
    e.at(static_cast<std::size_t>(var)) = power;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

Polynomial Polynomial::monomial(VarsPtr vars, Exponents exps, mpz_class c) {
    Polynomial p(std::move(vars));
    if (static_cast<int>(exps.size()) != p.vars_->size())
        throw std::logic_error("exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw std::logic_error("negative exponent");
    if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Polynomial::is_one() const { return is_constant() && constant_term() == 1; }

mpz_class Polynomial::constant_term() const {
    if (terms_.empty()) return 0;
    const auto it = terms_.rbegin(); // smallest term in descending order
    if (std::all_of(it->first.begin(), it->first.end(), [](int x) { return x == 0; }))
        return it->second;
    return 0;
}

mpz_class Polynomial::coefficient(const Exponents& exps) const {
    const auto it = terms_.find(exps);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class Polynomial::leading_coefficient() const {
    return terms_.empty() ? mpz_class(0) : terms_.begin()->second;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(static_cast<std::size_t>(var)));
    return terms_.empty() ? -1 : std::max(d, 0);
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.begin()->first; // graded order: leading term has max degree
    return std::accumulate(lead.begin(), lead.end(), 0);
}

void Polynomial::add_term(const Exponents& exps, const mpz_class& c) {
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void require_same_vars(const Polynomial& p, const Polynomial& q) {
    if (p.vars() == q.vars()) return;
    if (*p.vars() == *q.vars()) return;
    throw std::logic_error("polynomial operands use different variable tables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    Polynomial r(p);
    r += q;
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    Polynomial r(p);
    r -= q;
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_same_vars(p, q);
    Polynomial r(p.vars());
    Exponents e(static_cast<std::size_t>(p.vars()->size()), 0);
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

Polynomial operator*(const mpz_class& c, const Polynomial& p) {
    Polynomial r(p);
    r *= c;
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::logic_error("negative polynomial power");
    Polynomial r = constant(vars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

mpz_class Polynomial::integer_content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::map<int, Polynomial> Polynomial::coefficients_in(int var) const {
    std::map<int, Polynomial> out;
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const int d = rest[v];
        rest[v] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Polynomial(vars_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& assignment) const {
    for (const auto& [var, value] : assignment) require_same_vars(*this, value);
    // power ladders for each substituted variable
    std::map<int, std::vector<Polynomial>> powers;
    for (const auto& [var, value] : assignment) {
        const int maxe = degree_in(var);
        std::vector<Polynomial> ladder{constant(vars_, 1)};
        for (int i = 1; i <= maxe; ++i) ladder.push_back(ladder.back() * value);
        powers.emplace(var, std::move(ladder));
    }
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents kept = e;
        Polynomial term = constant(vars_, c);
        bool plain = true;
        for (const auto& [var, ladder] : powers) {
            const auto v = static_cast<std::size_t>(var);
            if (kept[v] == 0) continue;
            term = term * ladder[static_cast<std::size_t>(kept[v])];
            kept[v] = 0;
            plain = false;
        }
        if (plain) {
            out.add_term(e, c);
        } else {
            out += term * monomial(vars_, kept, 1);
        }
    }
    return out;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& d) const {
    require_same_vars(*this, d);
    if (d.is_zero()) throw std::logic_error("division by the zero polynomial");
    Polynomial rem(*this);
    Polynomial quot(vars_);
    const Exponents& de = d.terms_.begin()->first;
    const mpz_class& dc = d.terms_.begin()->second;
    Exponents shift(static_cast<std::size_t>(vars_->size()), 0);
    while (!rem.is_zero()) {
        const Exponents& re = rem.terms_.begin()->first;
        const mpz_class& rc = rem.terms_.begin()->second;
        for (std::size_t i = 0; i < shift.size(); ++i) {
            shift[i] = re[i] - de[i];
            if (shift[i] < 0) return std::nullopt;
        }
        if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
        mpz_class qc = rc / dc;
        Polynomial t = monomial(vars_, shift, qc);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_vars(*this, o);
    return terms_ == o.terms_;
}

// ---------------------------------------------------------------------------
// gcd: primitive-part recursion on the last variable, subresultant PRS
// ---------------------------------------------------------------------------

namespace {

Polynomial with_positive_lead(Polynomial p) {
    if (p.leading_coefficient() < 0) return -p;
    return p;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
    auto q = p.divided_by(d);
    if (!q) throw std::logic_error("exact polynomial division failed");
    return *q;
}

int last_variable(const Polynomial& p, const Polynomial& q) {
    for (int v = p.vars()->size() - 1; v >= 0; --v)
        if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return v;
    return -1;
}

// leading coefficient of p viewed as univariate in z (z-exponent zeroed out)
Polynomial z_lead(const Polynomial& p, int z) {
    const int d = p.degree_in(z);
    Polynomial out(p.vars());
    Exponents e(static_cast<std::size_t>(p.vars()->size()), 0);
    for (const auto& [exps, c] : p.terms()) {
        if (exps[static_cast<std::size_t>(z)] != d) continue;
        e = exps;
        e[static_cast<std::size_t>(z)] = 0;
        out += Polynomial::monomial(p.vars(), e, c);
    }
    return out;
}

// gcd of the z-coefficients
Polynomial z_content(const Polynomial& p, int z) {
    Polynomial g(p.vars());
    for (const auto& [d, coeff] : p.coefficients_in(z)) {
        g = gcd(g, coeff);
        if (g.is_one()) break;
    }
    return g;
}

// pseudo-remainder of a by b, both univariate in z with polynomial
// coefficients: lc(b)^(delta+1) * a = q*b + prem
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, int z) {
    const int db = b.degree_in(z);
    const Polynomial d = z_lead(b, z);
    int e = a.degree_in(z) - db + 1;
    while (!a.is_zero() && a.degree_in(z) >= db) {
        const Polynomial lca = z_lead(a, z);
        const Polynomial zshift =
            Polynomial::variable(a.vars(), z, a.degree_in(z) - db);
        a = d * a - lca * zshift * b;
        --e;
    }
    for (; e > 0; --e) a = d * a;
    return a;
}

} // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    require_same_vars(p, q);
    if (p.is_zero()) return with_positive_lead(q);
    if (q.is_zero()) return with_positive_lead(p);

    // monomial fast path: exponentwise min, integer content gcd
    if (p.is_monomial() || q.is_monomial()) {
        Exponents e(static_cast<std::size_t>(p.vars()->size()), 0);
        const Exponents& me = (p.is_monomial() ? p : q).terms().begin()->first;
        const Polynomial& other = p.is_monomial() ? q : p;
        for (std::size_t i = 0; i < e.size(); ++i) {
            int m = me[i];
            for (const auto& [oe, oc] : other.terms()) m = std::min(m, oe[i]);
            e[i] = m;
        }
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), p.integer_content().get_mpz_t(),
                q.integer_content().get_mpz_t());
        return Polynomial::monomial(p.vars(), std::move(e), std::move(c));
    }
    if (p == q) return with_positive_lead(p);

    const int z = last_variable(p, q);
    if (z < 0) { // both constant
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), p.constant_term().get_mpz_t(), q.constant_term().get_mpz_t());
        return Polynomial::constant(p.vars(), c);
    }
    if (p.degree_in(z) == 0) return gcd(p, z_content(q, z));
    if (q.degree_in(z) == 0) return gcd(z_content(p, z), q);

    const Polynomial cont_p = z_content(p, z);
    const Polynomial cont_q = z_content(q, z);
    const Polynomial cont = gcd(cont_p, cont_q);

    Polynomial a = exact_div(p, cont_p);
    Polynomial b = exact_div(q, cont_q);
    if (a.degree_in(z) < b.degree_in(z)) std::swap(a, b);

    const Polynomial one = Polynomial::constant(p.vars(), 1);
    Polynomial g = one;
    Polynomial h = one;
    bool coprime = false;
    while (true) {
        const int delta = a.degree_in(z) - b.degree_in(z);
        Polynomial r = pseudo_rem(a, b, z);
        if (r.is_zero()) break;
        if (r.degree_in(z) == 0) {
            coprime = true; // primitive parts share no z-dependent factor
            break;
        }
        a = b;
        b = exact_div(r, g * h.pow(delta));
        g = z_lead(a, z);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_div(g.pow(delta), h.pow(delta - 1));
        }
    }
    Polynomial result = cont;
    if (!coprime) result = result * exact_div(b, z_content(b, z));
    return with_positive_lead(result);
}

Polynomial embed(const Polynomial& p, const VarsPtr& target) {
    if (*p.vars() == *target) return p;
    std::vector<int> where(static_cast<std::size_t>(p.vars()->size()));
    for (int i = 0; i < p.vars()->size(); ++i) {
        const auto idx = target->index_of(p.vars()->name(i));
        if (!idx) throw std::logic_error("cannot embed: variable " + p.vars()->name(i) +
                                         " missing from target table");
        where[static_cast<std::size_t>(i)] = *idx;
    }
    Polynomial out(target);
    Exponents e(static_cast<std::size_t>(target->size()), 0);
    for (const auto& [exps, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) e[static_cast<std::size_t>(where[i])] = exps[i];
        out += Polynomial::monomial(target, e, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

namespace {

std::string term_text(const mpz_class& c, const Exponents& e, const VariableTable& vars,
                      bool latex) {
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!factors.empty()) factors += latex ? " " : "*";
        const std::string& n = vars.name(static_cast<int>(i));
        if (latex && n.size() > 2 && n.rfind("x_", 0) == 0) {
            factors += "x_{" + n.substr(2) + "}";
        } else {
            factors += n;
        }
        if (e[i] != 1)
            factors += latex ? ("^{" + std::to_string(e[i]) + "}") : ("^" + std::to_string(e[i]));
    }
    const mpz_class mag = abs(c);
    if (factors.empty()) return mag.get_str();
    if (mag == 1) return factors;
    return mag.get_str() + (latex ? " " : "*") + factors;
}

std::string poly_text(const Polynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_text(c, e, *p.vars(), latex);
    }
    return out;
}

} // namespace

std::string Polynomial::str() const { return poly_text(*this, false); }
std::string Polynomial::latex() const { return poly_text(*this, true); }

} // namespace cleanwords
