#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cleanwords/enumerator.hpp"
#include "cleanwords/rational.hpp"
#include "cleanwords/words.hpp"

namespace cleanwords {

// Word syntax: when every alphabet token is a single character, words are
// written contiguously ("10101"); otherwise letters are comma-separated
// ("ab,cd,ab"). Parsing then printing any word is the identity.

std::string format_word(const Word& w, const Alphabet& a);
Word parse_word(std::string_view text, const Alphabet& a);

/// Pattern lists: comma-separated patterns for single-character alphabets,
/// semicolon-separated (with comma-separated letters) otherwise.
std::vector<Word> parse_pattern_list(std::string_view text, const Alphabet& a);

/// Problem files: an "alphabet" line of comma-separated tokens, a "patterns"
/// line, and optional "options" lines of key=value pairs (max_k,
/// verify_order, track_letters). '#' starts a comment. Errors carry the
/// offending line number.
ProblemSpec parse_problem_file(std::istream& in, Options defaults = {});
ProblemSpec load_problem_file(const std::string& path, Options defaults = {});

/// "(num) / (den)", or just "num" for polynomial values.
std::string render_text(const RationalFunction& f);
/// "\frac{num}{den}" with graded-lex term order.
std::string render_latex(const RationalFunction& f);

/// Term-list encoding: coefficients as decimal strings, exponent vectors in
/// the declared variable order, the variable order embedded in the payload.
nlohmann::json rf_to_json(const RationalFunction& f);
/// Rebuilds the rational function (and its variable table) from rf_to_json
/// output; the result is rf_equal to the original.
RationalFunction rf_from_json(const nlohmann::json& j);

/// Full gf-command payload: rendered fraction plus k_used, the alpha
/// verification report, mode, and the verify order that was used.
nlohmann::json result_to_json(const GenFuncResult& r, int verify_order);

} // namespace cleanwords
