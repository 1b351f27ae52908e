#include "cleanwords/enumerator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cleanwords/errors.hpp"
#include "cleanwords/oracle.hpp"

namespace cleanwords {

namespace {

std::string word_key(const Word& w, const Alphabet& a) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += a.single_char_letters() ? "" : ",";
        out += a.letter(w[i]);
    }
    return out;
}

Word drop_first(const Word& w) { return Word(w.begin() + 1, w.end()); }

} // namespace

std::string AlphaInconsistency::describe(const Alphabet& a) const {
    std::ostringstream os;
    os << "alpha(" << word_key(state, a) << ", " << a.letter(letter) << ") is not constant: "
       << "extension \"" << word_key(extension_a, a) << "\" gives " << diff_a
       << " but extension \"" << word_key(extension_b, a) << "\" gives " << diff_b;
    return os.str();
}

std::optional<int> AlphaTable::get(int state, Letter a) const {
    const auto it = entries_.find({state, a});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

int alpha_check_depth(const PatternSet& m, int k) {
    if (m.empty()) return 1;
    return std::max(2 * m.length() - 1 - k, m.length());
}

std::variant<int, AlphaInconsistency> alpha(const Word& v, Letter a, const Alphabet& alphabet,
                                            const PatternSet& m, int depth) {
    Word with = v;      // v + a + w
    with.push_back(a);
    if (!is_clean(with, m)) throw std::logic_error("alpha requires v+a to be clean");
    Word without = drop_first(with); // v[1..] + a + w

    // Because k >= L-1 and v+a is clean, v+a+w is clean exactly when
    // v[1..]+a+w is, so one tree walk enumerates both families.
    std::optional<int> common;
    Word first_ext;
    std::optional<AlphaInconsistency> bad;
    Word ext;
    auto visit = [&](auto&& self) -> bool {
        const int diff = ncn(with, alphabet, m) - ncn(without, alphabet, m);
        if (!common) {
            common = diff;
            first_ext = ext;
        } else if (diff != *common) {
            bad = AlphaInconsistency{v, a, first_ext, *common, ext, diff};
            return false;
        }
        if (static_cast<int>(ext.size()) == depth) return true;
        for (Letter l = 0; l < alphabet.size(); ++l) {
            ext.push_back(l);
            with.push_back(l);
            without.push_back(l);
            const bool keep_going = m.last_window_dirty(without) || self(self);
            ext.pop_back();
            with.pop_back();
            without.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    visit(visit);
    if (bad) return *bad;
    return *common;
}

AlphaBuildResult build_alpha_table(const Alphabet& alphabet, const PatternSet& m,
                                   const PrefixConfig& cfg, int depth) {
    AlphaBuildResult out;
    out.table.set_depth_tested(depth);
    for (std::size_t i = 0; i < cfg.states.size(); ++i) {
        const Word& v = cfg.states[i];
        for (Letter a = 0; a < alphabet.size(); ++a) {
            Word extended = v;
            extended.push_back(a);
            if (!is_clean(extended, m)) continue;
            auto result = alpha(v, a, alphabet, m, depth);
            if (auto* inconsistency = std::get_if<AlphaInconsistency>(&result)) {
                out.failure = *inconsistency;
                return out;
            }
            out.table.set(static_cast<int>(i), a, std::get<int>(result));
        }
    }
    return out;
}

std::pair<PrefixConfig, AlphaTable> choose_k(const Alphabet& alphabet, const PatternSet& m,
                                             int max_k) {
    if (max_k < 1) throw ValidationError("max_k must be at least 1");
    const int L = m.length();
    const int k_start = m.empty() ? 1 : std::max(L - 1, 1);
    std::optional<AlphaInconsistency> last_failure;
    for (int k = k_start; k <= max_k; ++k) {
        PrefixConfig cfg{k, clean_words(alphabet, m, k)};
        AlphaBuildResult built = build_alpha_table(alphabet, m, cfg, alpha_check_depth(m, k));
        if (built.ok()) return {std::move(cfg), std::move(built.table)};
        last_failure = built.failure;
    }
    std::ostringstream os;
    os << "no prefix length k <= " << max_k << " has constant increments";
    if (last_failure) os << " (" << last_failure->describe(alphabet) << ")";
    if (!m.empty() && max_k >= 2 * L - 2)
        // the windowing bound guarantees k = 2L-2 verifies; reaching this is a bug
        throw std::logic_error(os.str());
    os << "; raise max_k to at least " << (m.empty() ? 1 : 2 * L - 2);
    throw VerificationError(os.str());
}

LinearSystem build_system(const Alphabet& alphabet, const PatternSet& m, const PrefixConfig& cfg,
                          const AlphaTable& alphas, WeightMode mode) {
    const VarsPtr vars = mode == WeightMode::length_only
                             ? VariableTable::length_only()
                             : VariableTable::letter_tracking(alphabet);

    std::map<Word, int> index;
    for (std::size_t i = 0; i < cfg.states.size(); ++i)
        index.emplace(cfg.states[i], static_cast<int>(i));

    const auto word_weight = [&](const Word& w, int y_power) {
        Exponents e(static_cast<std::size_t>(vars->size()), 0);
        if (mode == WeightMode::length_only) {
            e[VariableTable::kX] = static_cast<int>(w.size());
        } else {
            e[VariableTable::kT] = static_cast<int>(w.size());
            for (Letter l : w) ++e[static_cast<std::size_t>(VariableTable::letter_var(l))];
        }
        e[VariableTable::kY] = y_power;
        return Polynomial::monomial(vars, std::move(e), 1);
    };

    // x * y^alpha (or x_{v1} * t * y^alpha); negative alpha goes in the denominator
    const auto edge_coeff = [&](Letter first_letter, int a_val) {
        Exponents num(static_cast<std::size_t>(vars->size()), 0);
        if (mode == WeightMode::length_only) {
            num[VariableTable::kX] = 1;
        } else {
            num[VariableTable::kT] = 1;
            num[static_cast<std::size_t>(VariableTable::letter_var(first_letter))] = 1;
        }
        Exponents den(static_cast<std::size_t>(vars->size()), 0);
        (a_val >= 0 ? num : den)[VariableTable::kY] = std::abs(a_val);
        return RationalFunction(Polynomial::monomial(vars, std::move(num), 1),
                                Polynomial::monomial(vars, std::move(den), 1));
    };

    LinearSystem system;
    system.vars = vars;
    for (std::size_t i = 0; i < cfg.states.size(); ++i) {
        const Word& v = cfg.states[i];
        system.unknown_ids.push_back(word_key(v, alphabet));
        LinearRow row{{}, word_weight(v, ncn(v, alphabet, m))};
        for (Letter a = 0; a < alphabet.size(); ++a) {
            const auto a_val = alphas.get(static_cast<int>(i), a);
            if (!a_val) continue; // appending a makes v dirty
            Word succ = drop_first(v);
            succ.push_back(a);
            row.terms.push_back(LinearTerm{index.at(succ), edge_coeff(v.front(), *a_val)});
        }
        system.rows.push_back(std::move(row));
    }
    return system;
}

GenFuncResult assemble_f(const Alphabet& alphabet, const PatternSet& m, const PrefixConfig& cfg,
                         const Solution& solution, WeightMode mode) {
    const VarsPtr vars = mode == WeightMode::length_only
                             ? VariableTable::length_only()
                             : VariableTable::letter_tracking(alphabet);
    RationalFunction f = RationalFunction::zero(vars);
    // words shorter than k, by direct enumeration
    for (int i = 0; i < cfg.k; ++i) {
        Polynomial boundary(vars);
        for (const Word& w : clean_words(alphabet, m, i)) {
            Exponents e(static_cast<std::size_t>(vars->size()), 0);
            if (mode == WeightMode::length_only) {
                e[VariableTable::kX] = i;
            } else {
                e[VariableTable::kT] = i;
                for (Letter l : w) ++e[static_cast<std::size_t>(VariableTable::letter_var(l))];
            }
            e[VariableTable::kY] = ncn(w, alphabet, m);
            boundary += Polynomial::monomial(vars, std::move(e), 1);
        }
        f += RationalFunction(std::move(boundary));
    }
    for (const RationalFunction& value : solution.values) f += value;
    return GenFuncResult{std::move(f), cfg.k, AlphaReport{true, 0}, mode};
}

namespace {

GenFuncResult run_pipeline(const ProblemSpec& spec, WeightMode mode, const FaultInjection& fault) {
    auto [cfg, table] = choose_k(spec.alphabet(), spec.patterns(), spec.max_k());
    if (fault.perturb_first_alpha && !table.entries().empty()) {
        const auto& [key, value] = *table.entries().begin();
        table.set(key.first, key.second, value + 1);
    }
    const LinearSystem system = build_system(spec.alphabet(), spec.patterns(), cfg, table, mode);
    const Solution solution = solve(system);
    GenFuncResult result = assemble_f(spec.alphabet(), spec.patterns(), cfg, solution, mode);
    result.alpha_report.extension_depth_tested = table.depth_tested();

    if (spec.verify_order() > 0) {
        const CoeffTable oracle =
            brute_table(spec.alphabet(), spec.patterns(), spec.verify_order());
        GenFuncResult for_check = result;
        if (mode == WeightMode::letter_tracking) {
            // specialize x_a -> 1, t -> x before comparing against the oracle
            const VarsPtr vars = result.f.vars();
            std::map<int, Polynomial> assignment;
            assignment.emplace(VariableTable::kT,
                               Polynomial::variable(vars, VariableTable::kX));
            for (Letter l = 0; l < spec.alphabet().size(); ++l)
                assignment.emplace(VariableTable::letter_var(l),
                                   Polynomial::constant(vars, 1));
            for_check.f = result.f.substitute(assignment);
        }
        const CompareReport report = compare_series(for_check, oracle);
        if (!report.ok)
            throw VerificationError("generating function disagrees with the brute-force oracle: " +
                                    report.message);
    }
    return result;
}

} // namespace

GenFuncResult wte_s(const ProblemSpec& spec, const FaultInjection& fault) {
    return run_pipeline(spec, WeightMode::length_only, fault);
}

GenFuncResult wte_g(const ProblemSpec& spec, const FaultInjection& fault) {
    return run_pipeline(spec, WeightMode::letter_tracking, fault);
}

} // namespace cleanwords
