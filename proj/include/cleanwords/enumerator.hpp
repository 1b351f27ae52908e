#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cleanwords/linear_system.hpp"
#include "cleanwords/words.hpp"

namespace cleanwords {

/// Which weight the pipeline tracks: x^n y^ncn, or t^n (prod x_a) y^ncn.
enum class WeightMode { length_only, letter_tracking };

/// The verified prefix length k together with the ordered list of prefix
/// states (exactly the clean words of length k).
struct PrefixConfig {
    int k;
    std::vector<Word> states;
};

/// Witnesses of a non-constant increment: two clean extensions of
/// state[1..]+letter whose ncn differences disagree. Signals that k is too
/// small; the caller retries with a larger k.
struct AlphaInconsistency {
    Word state;
    Letter letter;
    Word extension_a;
    int diff_a;
    Word extension_b;
    int diff_b;

    std::string describe(const Alphabet& a) const;
};

/// The verified constant increments alpha(v, a), keyed by (state index,
/// letter). An entry exists iff appending the letter keeps the state clean.
class AlphaTable {
public:
    void set(int state, Letter a, int alpha) { entries_[{state, a}] = alpha; }
    std::optional<int> get(int state, Letter a) const;
    const std::map<std::pair<int, Letter>, int>& entries() const { return entries_; }

    int depth_tested() const { return depth_tested_; }
    void set_depth_tested(int d) { depth_tested_ = d; }

private:
    std::map<std::pair<int, Letter>, int> entries_;
    int depth_tested_ = 0;
};

/// The common value of ncn(v+a+w) - ncn(v[1..]+a+w) over every clean
/// extension w with |w| <= depth (the empty extension included), or the
/// inconsistency witnesses when the differences disagree.
/// Precondition: v clean and v+a clean.
std::variant<int, AlphaInconsistency> alpha(const Word& v, Letter a, const Alphabet& alphabet,
                                            const PatternSet& m, int depth);

/// Extension depth guaranteeing soundness for k >= 2L-2: max(2L-1-k, L)
/// (1 when m is empty). A single-letter flip only touches pattern windows
/// within L-1 positions, and the deleted first letter only windows covering
/// position 1, so letters beyond position 2L-1 of the word cannot matter.
int alpha_check_depth(const PatternSet& m, int k);

struct AlphaBuildResult {
    AlphaTable table;
    std::optional<AlphaInconsistency> failure;
    bool ok() const { return !failure.has_value(); }
};

/// Computes and verifies alpha for every (state, letter) pair with a clean
/// extension, at the given depth.
AlphaBuildResult build_alpha_table(const Alphabet& alphabet, const PatternSet& m,
                                   const PrefixConfig& cfg, int depth);

/// The smallest k in [max(L-1,1), max_k] whose alpha table verifies, with the
/// table itself. Any k >= 2L-2 must verify; exhausting max_k below that bound
/// raises VerificationError with guidance.
std::pair<PrefixConfig, AlphaTable> choose_k(const Alphabet& alphabet, const PatternSet& m,
                                             int max_k);

/// One unknown per state v. Row v: constant weight of v itself
/// (x^k y^ncn(v), or t^k prod_i x_{v_i} y^ncn(v)) plus, for each letter a
/// keeping v clean, the coefficient x y^alpha(v,a) (or x_{v_1} t y^alpha)
/// on the unknown of the successor state v[1..]+a.
LinearSystem build_system(const Alphabet& alphabet, const PatternSet& m, const PrefixConfig& cfg,
                          const AlphaTable& alphas, WeightMode mode);

struct AlphaReport {
    bool verified = false;
    int extension_depth_tested = 0;
};

struct GenFuncResult {
    RationalFunction f;
    int k_used;
    AlphaReport alpha_report;
    WeightMode mode;
};

/// f = sum of the weights of clean words shorter than k (direct enumeration)
/// plus the solved weight of every prefix-state class.
GenFuncResult assemble_f(const Alphabet& alphabet, const PatternSet& m, const PrefixConfig& cfg,
                         const Solution& solution, WeightMode mode);

/// Test hook: corrupt the pipeline after alpha verification so the oracle
/// comparison must catch it.
struct FaultInjection {
    bool perturb_first_alpha = false;
};

/// Full length-only pipeline: choose_k -> alpha table -> system -> solve ->
/// assemble. When spec.verify_order() > 0 the series is checked against the
/// brute-force oracle before returning; a mismatch raises VerificationError.
GenFuncResult wte_s(const ProblemSpec& spec, const FaultInjection& fault = {});

/// Letter-tracking pipeline (variables x, y, t, x_a). Verified by oracle
/// comparison of the specialization x_a -> 1, t -> x.
GenFuncResult wte_g(const ProblemSpec& spec, const FaultInjection& fault = {});

} // namespace cleanwords
