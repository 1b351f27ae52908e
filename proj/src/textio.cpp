#include "cleanwords/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cleanwords/errors.hpp"

namespace cleanwords {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

std::string format_word(const Word& w, const Alphabet& a) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !a.single_char_letters()) out += ",";
        out += a.letter(w[i]);
    }
    return out;
}

Word parse_word(std::string_view text, const Alphabet& a) {
    text = trim(text);
    Word w;
    if (text.empty()) return w;
    if (text.find(',') != std::string_view::npos || !a.single_char_letters()) {
        for (std::string_view tok : split(text, ',')) {
            tok = trim(tok);
            if (tok.empty()) throw ValidationError("empty letter token in word");
            const auto l = a.find(tok);
            if (!l) throw ValidationError("'" + std::string(tok) + "' is not an alphabet letter");
            w.push_back(*l);
        }
        return w;
    }
    for (char c : text) {
        const auto l = a.find(std::string_view(&c, 1));
        if (!l) throw ValidationError("'" + std::string(1, c) + "' is not an alphabet letter");
        w.push_back(*l);
    }
    return w;
}

std::vector<Word> parse_pattern_list(std::string_view text, const Alphabet& a) {
    const char sep = a.single_char_letters() ? ',' : ';';
    std::vector<Word> out;
    for (std::string_view tok : split(text, sep)) {
        tok = trim(tok);
        if (tok.empty()) throw ValidationError("empty pattern token");
        out.push_back(parse_word(tok, a));
    }
    return out;
}

namespace {

Options parse_option_pairs(std::string_view text, Options base, int line_no) {
    const auto fail = [line_no](const std::string& what) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + what);
    };
    std::istringstream in{std::string(text)};
    std::string pair;
    while (in >> pair) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos) fail("expected key=value, got '" + pair + "'");
        const std::string key = pair.substr(0, eq);
        const std::string value = pair.substr(eq + 1);
        try {
            if (key == "max_k") {
                base.max_k = std::stoi(value);
            } else if (key == "verify_order") {
                base.verify_order = std::stoi(value);
            } else if (key == "track_letters") {
                if (value == "true" || value == "1") base.track_letters = true;
                else if (value == "false" || value == "0") base.track_letters = false;
                else fail("track_letters must be true or false");
            } else {
                fail("unknown option '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            fail("option '" + key + "' needs an integer, got '" + value + "'");
        } catch (const std::out_of_range&) {
            fail("option '" + key + "' value out of range");
        }
    }
    return base;
}

} // namespace

ProblemSpec parse_problem_file(std::istream& in, Options defaults) {
    std::optional<Alphabet> alphabet;
    std::optional<std::string> patterns_text;
    int patterns_line = 0;
    Options options = defaults;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (const auto hash = s.find('#'); hash != std::string_view::npos)
            s = trim(s.substr(0, hash));
        if (s.empty()) continue;
        const auto space = s.find_first_of(" \t");
        const std::string_view key = space == std::string_view::npos ? s : s.substr(0, space);
        const std::string_view rest =
            space == std::string_view::npos ? std::string_view{} : trim(s.substr(space + 1));
        if (key == "alphabet") {
            if (alphabet) throw ValidationError("line " + std::to_string(line_no) +
                                                ": duplicate alphabet line");
            std::vector<std::string> tokens;
            for (std::string_view tok : split(rest, ',')) {
                tok = trim(tok);
                if (tok.empty())
                    throw ValidationError("line " + std::to_string(line_no) +
                                          ": empty alphabet token");
                tokens.emplace_back(tok);
            }
            try {
                alphabet.emplace(std::move(tokens));
            } catch (const ValidationError& e) {
                throw ValidationError("line " + std::to_string(line_no) + ": " +
                                      std::string(e.what()));
            }
        } else if (key == "patterns") {
            if (patterns_text) throw ValidationError("line " + std::to_string(line_no) +
                                                     ": duplicate patterns line");
            patterns_text = std::string(rest);
            patterns_line = line_no;
        } else if (key == "options") {
            options = parse_option_pairs(rest, options, line_no);
        } else {
            throw ValidationError("line " + std::to_string(line_no) + ": unknown key '" +
                                  std::string(key) + "' (expected alphabet/patterns/options)");
        }
    }
    if (!alphabet) throw ValidationError("problem file has no alphabet line");
    std::vector<Word> patterns;
    if (patterns_text && !trim(*patterns_text).empty()) {
        try {
            patterns = parse_pattern_list(*patterns_text, *alphabet);
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(patterns_line) + ": " +
                                  std::string(e.what()));
        }
    }
    return ProblemSpec(*alphabet, PatternSet(std::move(patterns), *alphabet), options);
}

ProblemSpec load_problem_file(const std::string& path, Options defaults) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open problem file '" + path + "'");
    return parse_problem_file(in, defaults);
}

std::string render_text(const RationalFunction& f) {
    if (f.den().is_one()) return f.num().str();
    return "(" + f.num().str() + ") / (" + f.den().str() + ")";
}

std::string render_latex(const RationalFunction& f) {
    if (f.den().is_one()) return f.num().latex();
    return "\\frac{" + f.num().latex() + "}{" + f.den().latex() + "}";
}

namespace {

nlohmann::json poly_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"coeff", c.get_str()}, {"exponents", e}});
    }
    return terms;
}

Polynomial poly_from_json(const nlohmann::json& terms, const VarsPtr& vars) {
    Polynomial p(vars);
    for (const auto& term : terms) {
        const std::string coeff = term.at("coeff").get<std::string>();
        Exponents e = term.at("exponents").get<Exponents>();
        p += Polynomial::monomial(vars, std::move(e), mpz_class(coeff));
    }
    return p;
}

} // namespace

nlohmann::json rf_to_json(const RationalFunction& f) {
    return {{"variables", f.vars()->names()},
            {"numerator", poly_to_json(f.num())},
            {"denominator", poly_to_json(f.den())}};
}

RationalFunction rf_from_json(const nlohmann::json& j) {
    const VarsPtr vars = VariableTable::make(j.at("variables").get<std::vector<std::string>>());
    return RationalFunction(poly_from_json(j.at("numerator"), vars),
                            poly_from_json(j.at("denominator"), vars));
}

nlohmann::json result_to_json(const GenFuncResult& r, int verify_order) {
    nlohmann::json j = rf_to_json(r.f);
    j["text"] = render_text(r.f);
    j["mode"] = r.mode == WeightMode::length_only ? "length-only" : "letter-tracking";
    j["k_used"] = r.k_used;
    j["alpha"] = {{"verified", r.alpha_report.verified},
                  {"extension_depth_tested", r.alpha_report.extension_depth_tested}};
    j["verify_order"] = verify_order;
    return j;
}

} // namespace cleanwords
