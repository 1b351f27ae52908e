#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cleanwords/enumerator.hpp"
#include "cleanwords/errors.hpp"
#include "cleanwords/oracle.hpp"
#include "cleanwords/textio.hpp"

namespace cw = cleanwords;

namespace {

struct ProblemArgs {
    std::string alphabet_csv;
    std::string patterns_text;
    std::string problem_path;
    int max_k = 0;
    int verify_order = -1;
    bool track_letters = false;
    std::uint64_t budget = cw::kDefaultEnumerationBudget;

    CLI::Option* alphabet_opt = nullptr;
    CLI::Option* patterns_opt = nullptr;
    CLI::Option* max_k_opt = nullptr;
    CLI::Option* verify_order_opt = nullptr;
    CLI::Option* track_letters_opt = nullptr;
};

void add_problem_flags(CLI::App* cmd, ProblemArgs& a) {
    a.alphabet_opt = cmd->add_option("--alphabet", a.alphabet_csv,
                                     "Comma-separated letter tokens, e.g. \"0,1\"");
    a.patterns_opt = cmd->add_option(
        "--patterns", a.patterns_text,
        "Forbidden substrings, all the same length (\"11\" or \"000,111\"); "
        "for multi-character alphabets separate patterns with ';'");
    cmd->add_option("--problem", a.problem_path, "Problem file (alphabet/patterns/options lines)")
        ->excludes(a.alphabet_opt);
    a.max_k_opt = cmd->add_option("--max-k", a.max_k, "Largest prefix length to try (default 2L)")
                      ->check(CLI::PositiveNumber);
    a.verify_order_opt =
        cmd->add_option("--verify-order", a.verify_order,
                        "Check the series against brute force up to this length; 0 disables "
                        "(default 10, or 8 for alphabets larger than 2)")
            ->check(CLI::NonNegativeNumber);
    a.track_letters_opt =
        cmd->add_flag("--track-letters", a.track_letters,
                      "Track individual letters (variables t and x_a) instead of length only");
    cmd->add_option("--budget", a.budget, "Enumeration budget, a cap on |A|^n")
        ->check(CLI::PositiveNumber);
}

cw::ProblemSpec build_spec(const ProblemArgs& a) {
    if (!a.problem_path.empty()) {
        cw::ProblemSpec from_file = cw::load_problem_file(a.problem_path);
        // explicit flags override file options
        cw::Options opts;
        opts.max_k = a.max_k_opt->count() ? a.max_k : from_file.max_k();
        opts.verify_order = a.verify_order_opt->count() ? a.verify_order : from_file.verify_order();
        opts.track_letters = a.track_letters_opt->count() ? a.track_letters
                                                          : from_file.track_letters();
        return cw::ProblemSpec(from_file.alphabet(), from_file.patterns(), opts);
    }
    if (a.alphabet_opt->count() == 0)
        throw cw::ValidationError("no problem given: use --alphabet (with --patterns) or --problem");
    std::vector<std::string> tokens;
    std::string tok;
    std::istringstream in(a.alphabet_csv);
    while (std::getline(in, tok, ',')) tokens.push_back(tok);
    cw::Alphabet alphabet(std::move(tokens));
    std::vector<cw::Word> patterns;
    if (a.patterns_opt->count() > 0)
        patterns = cw::parse_pattern_list(a.patterns_text, alphabet);
    cw::Options opts{a.max_k, a.track_letters, a.verify_order};
    return cw::ProblemSpec(alphabet, cw::PatternSet(std::move(patterns), alphabet), opts);
}

void check_budget(const cw::Alphabet& a, int n, std::uint64_t budget) {
    const auto q = static_cast<std::uint64_t>(a.size());
    std::uint64_t total = 1;
    int affordable = 0;
    while (affordable < n && total <= budget / q) {
        total *= q;
        ++affordable;
    }
    if (affordable < n)
        throw cw::BudgetError("enumeration budget exceeded: |A|^" + std::to_string(n) + " > " +
                              std::to_string(budget) + "; largest affordable length is " +
                              std::to_string(affordable));
}

void print_metadata(std::ostream& os, const cw::GenFuncResult& r, int verify_order) {
    os << "# mode: "
       << (r.mode == cw::WeightMode::length_only ? "length-only" : "letter-tracking")
       << "  k_used: " << r.k_used << "  alpha_verified: "
       << (r.alpha_report.verified ? "true" : "false")
       << "  depth_tested: " << r.alpha_report.extension_depth_tested
       << "  verify_order: " << verify_order << "\n";
}

void dump_pipeline(std::ostream& os, const cw::ProblemSpec& spec, cw::WeightMode mode) {
    auto [cfg, table] = cw::choose_k(spec.alphabet(), spec.patterns(), spec.max_k());
    const cw::LinearSystem system =
        cw::build_system(spec.alphabet(), spec.patterns(), cfg, table, mode);
    os << "# alpha table: k=" << cfg.k << " depth=" << table.depth_tested() << "\n";
    for (const auto& [key, value] : table.entries())
        os << "# alpha[" << system.unknown_ids[static_cast<std::size_t>(key.first)] << ", "
           << spec.alphabet().letter(key.second) << "] = " << value << "\n";
    os << "# system: " << system.size() << " unknowns\n";
    for (int i = 0; i < system.size(); ++i) {
        os << "# W[" << system.unknown_ids[static_cast<std::size_t>(i)]
           << "] = " << system.rows[static_cast<std::size_t>(i)].constant.str();
        for (const auto& t : system.rows[static_cast<std::size_t>(i)].terms)
            os << " + (" << cw::render_text(t.coeff) << ")*W["
               << system.unknown_ids[static_cast<std::size_t>(t.unknown)] << "]";
        os << "\n";
    }
}

nlohmann::json dump_json(const cw::ProblemSpec& spec, cw::WeightMode mode) {
    auto [cfg, table] = cw::choose_k(spec.alphabet(), spec.patterns(), spec.max_k());
    const cw::LinearSystem system =
        cw::build_system(spec.alphabet(), spec.patterns(), cfg, table, mode);
    nlohmann::json alphas = nlohmann::json::array();
    for (const auto& [key, value] : table.entries())
        alphas.push_back({{"state", system.unknown_ids[static_cast<std::size_t>(key.first)]},
                          {"letter", spec.alphabet().letter(key.second)},
                          {"alpha", value}});
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < system.size(); ++i) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : system.rows[static_cast<std::size_t>(i)].terms)
            terms.push_back({{"unknown", system.unknown_ids[static_cast<std::size_t>(t.unknown)]},
                             {"coeff", cw::render_text(t.coeff)}});
        rows.push_back({{"unknown", system.unknown_ids[static_cast<std::size_t>(i)]},
                        {"constant", system.rows[static_cast<std::size_t>(i)].constant.str()},
                        {"terms", terms}});
    }
    return {{"k", cfg.k},
            {"depth_tested", table.depth_tested()},
            {"alpha_table", alphas},
            {"system", rows}};
}

int cmd_gf(const ProblemArgs& args, const std::string& format, bool dump, bool inject_fault) {
    const cw::ProblemSpec spec = build_spec(args);
    cw::FaultInjection fault{inject_fault};
    const cw::GenFuncResult result =
        spec.track_letters() ? cw::wte_g(spec, fault) : cw::wte_s(spec, fault);
    const cw::WeightMode mode =
        spec.track_letters() ? cw::WeightMode::letter_tracking : cw::WeightMode::length_only;
    if (format == "json") {
        nlohmann::json j = cw::result_to_json(result, spec.verify_order());
        if (dump) j["pipeline"] = dump_json(spec, mode);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << (format == "latex" ? cw::render_latex(result.f) : cw::render_text(result.f))
              << "\n";
    print_metadata(std::cout, result, spec.verify_order());
    if (dump) dump_pipeline(std::cout, spec, mode);
    return 0;
}

int cmd_enumerate(const ProblemArgs& args, int length) {
    const cw::ProblemSpec spec = build_spec(args);
    check_budget(spec.alphabet(), length, args.budget);
    for (const cw::Word& w : cw::clean_words(spec.alphabet(), spec.patterns(), length))
        std::cout << cw::format_word(w, spec.alphabet()) << "\n";
    return 0;
}

int cmd_ncn(const ProblemArgs& args, const std::string& word_text) {
    const cw::ProblemSpec spec = build_spec(args);
    const cw::Word w = cw::parse_word(word_text, spec.alphabet());
    std::cout << cw::ncn(w, spec.alphabet(), spec.patterns()) << "\n";
    return 0;
}

int cmd_series(const ProblemArgs& args, int order, bool table) {
    const cw::ProblemSpec spec = build_spec(args);
    const cw::GenFuncResult result = cw::wte_s(spec);
    const std::vector<cw::Polynomial> series = cw::series_in_x(result.f, order);
    const auto yi = result.f.vars()->index_of("y");
    for (std::size_t n = 0; n < series.size(); ++n) {
        if (table) {
            std::map<int, mpz_class> row;
            for (const auto& [e, c] : series[n].terms())
                row.emplace(e[static_cast<std::size_t>(*yi)], c);
            for (const auto& [k, c] : row)
                std::cout << n << " " << k << " " << c.get_str() << "\n";
        } else {
            std::cout << "p_" << n << " = " << series[n].str() << "\n";
        }
    }
    return 0;
}

int cmd_selfcheck(const ProblemArgs& args, bool inject_fault) {
    const cw::ProblemSpec spec = build_spec(args);
    const cw::Alphabet& alphabet = spec.alphabet();
    const cw::PatternSet& patterns = spec.patterns();
    bool all_ok = true;
    const auto report = [&all_ok](const std::string& name, bool ok, const std::string& detail) {
        std::cout << "check " << name << ": " << (ok ? "pass" : "fail");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) all_ok = false;
    };

    // alpha constancy
    std::optional<std::pair<cw::PrefixConfig, cw::AlphaTable>> chosen;
    try {
        chosen = cw::choose_k(alphabet, patterns, spec.max_k());
        report("alpha-verification", true,
               "k=" + std::to_string(chosen->first.k) +
                   ", depth=" + std::to_string(chosen->second.depth_tested()) +
                   ", states=" + std::to_string(chosen->first.states.size()));
    } catch (const cw::VerificationError& e) {
        report("alpha-verification", false, e.what());
        std::cout << "overall: fail\n";
        return 2;
    }
    auto& [cfg, table] = *chosen;
    if (inject_fault && !table.entries().empty()) {
        const auto& [key, value] = *table.entries().begin();
        table.set(key.first, key.second, value + 1);
    }

    const cw::LinearSystem system =
        cw::build_system(alphabet, patterns, cfg, table, cw::WeightMode::length_only);
    const cw::Solution solution = cw::solve(system);
    cw::GenFuncResult result =
        cw::assemble_f(alphabet, patterns, cfg, solution, cw::WeightMode::length_only);
    result.alpha_report.extension_depth_tested = table.depth_tested();

    // oracle comparison
    if (spec.verify_order() > 0) {
        try {
            const cw::CoeffTable oracle =
                cw::brute_table(alphabet, patterns, spec.verify_order(), args.budget);
            const cw::CompareReport cmp = cw::compare_series(result, oracle);
            report("oracle-series (n <= " + std::to_string(spec.verify_order()) + ")", cmp.ok,
                   cmp.message);
        } catch (const cw::BudgetError& e) {
            report("oracle-series", false, e.what());
        }
    } else {
        std::cout << "check oracle-series: skipped (verify_order = 0)\n";
    }

    // straight count at y = 1
    {
        const cw::VarsPtr vars = result.f.vars();
        const auto yi = vars->index_of("y");
        std::map<int, cw::Polynomial> to_one;
        to_one.emplace(*yi, cw::Polynomial::constant(vars, 1));
        const cw::RationalFunction at_one = result.f.substitute(to_one);
        const int upto = 20;
        bool ok = true;
        std::string detail = "n <= " + std::to_string(upto);
        try {
            const std::vector<cw::Polynomial> counts = cw::series_in_x(at_one, upto);
            for (int n = 0; n <= upto && ok; ++n) {
                const cw::Polynomial& p = counts[static_cast<std::size_t>(n)];
                if (!p.is_constant() ||
                    p.constant_term() != cw::clean_count(alphabet, patterns, n)) {
                    ok = false;
                    detail = "first failure at n = " + std::to_string(n);
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        report("straight-count y=1", ok, detail);
    }

    // letter-tracking specialization
    if (spec.track_letters()) {
        const cw::LinearSystem gsystem =
            cw::build_system(alphabet, patterns, cfg, table, cw::WeightMode::letter_tracking);
        const cw::GenFuncResult gres = cw::assemble_f(alphabet, patterns, cfg, cw::solve(gsystem),
                                                      cw::WeightMode::letter_tracking);
        const cw::VarsPtr gvars = gres.f.vars();
        std::map<int, cw::Polynomial> assignment;
        assignment.emplace(cw::VariableTable::kT,
                           cw::Polynomial::variable(gvars, cw::VariableTable::kX));
        for (cw::Letter l = 0; l < alphabet.size(); ++l)
            assignment.emplace(cw::VariableTable::letter_var(l),
                               cw::Polynomial::constant(gvars, 1));
        const bool ok = cw::rf_equal(gres.f.substitute(assignment), result.f);
        report("letter-specialization", ok, "x_a -> 1, t -> x reproduces the length-only result");
    }

    // closed form for the unconstrained case
    if (patterns.empty()) {
        const cw::VarsPtr vars = cw::VariableTable::length_only();
        const int q = alphabet.size();
        cw::Exponents e{1, q - 1};
        const cw::Polynomial den =
            cw::Polynomial::constant(vars, 1) -
            q * cw::Polynomial::monomial(vars, e, 1);
        const bool ok =
            cw::rf_equal(result.f, cw::RationalFunction(cw::Polynomial::constant(vars, 1), den));
        report("empty-pattern closed form", ok, "f = 1/(1 - |A| x y^(|A|-1))");
    }

    std::cout << "overall: " << (all_ok ? "pass" : "fail") << "\n";
    return all_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating functions for pattern-avoiding words counted by length and "
                 "number of clean Hamming neighbors"};
    app.require_subcommand(1);

    ProblemArgs gf_args, enum_args, ncn_args, series_args, check_args;
    std::string format = "text";
    bool dump = false, gf_fault = false, check_fault = false;
    int length = 0, order = 10;
    bool as_table = false;
    std::string word_text;

    CLI::App* gf = app.add_subcommand("gf", "Compute the generating function f(x,y)");
    add_problem_flags(gf, gf_args);
    gf->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    gf->add_flag("--dump", dump, "Also print the alpha table and the linear system");
    gf->add_flag("--inject-alpha-fault", gf_fault)->group(""); // test hook

    CLI::App* en = app.add_subcommand("enumerate", "List the clean words of a given length");
    add_problem_flags(en, enum_args);
    en->add_option("--length", length, "Word length")->required()->check(CLI::NonNegativeNumber);

    CLI::App* nc = app.add_subcommand("ncn", "Count the clean neighbors of a word");
    add_problem_flags(nc, ncn_args);
    nc->add_option("--word", word_text, "The word to examine")->required();

    CLI::App* se = app.add_subcommand("series", "Expand f(x,y) as a power series in x");
    add_problem_flags(se, series_args);
    se->add_option("--order", order, "Largest power of x")->check(CLI::NonNegativeNumber);
    se->add_flag("--table", as_table, "Print 'n k count' triples instead of polynomials");

    CLI::App* sc = app.add_subcommand("selfcheck", "Run the full pipeline plus every cross-check");
    add_problem_flags(sc, check_args);
    sc->add_flag("--inject-alpha-fault", check_fault)->group(""); // test hook

    try {
        app.parse(argc, argv);
        if (gf->parsed()) return cmd_gf(gf_args, format, dump, gf_fault);
        if (en->parsed()) return cmd_enumerate(enum_args, length);
        if (nc->parsed()) return cmd_ncn(ncn_args, word_text);
        if (se->parsed()) return cmd_series(series_args, order, as_table);
        if (sc->parsed()) return cmd_selfcheck(check_args, check_fault);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cw::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cw::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const cw::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
