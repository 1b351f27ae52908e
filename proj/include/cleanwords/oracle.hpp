#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "cleanwords/enumerator.hpp"
#include "cleanwords/words.hpp"

namespace cleanwords {

/// Hard cap on |A|^n_max for brute-force enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 20'000'000;

/// Exhaustively computed f_{n,k}: the number of clean words of length n with
/// exactly k clean neighbors, for every n <= n_max. Absent keys are zero.
struct CoeffTable {
    std::map<std::pair<int, int>, std::uint64_t> entries;
    int n_max = 0;

    std::uint64_t count(int n, int k) const;
};

/// Enumerates the clean-word tree (extending only clean prefixes) and tallies
/// ncn for every word of length <= n_max. Throws BudgetError, reporting the
/// largest affordable n_max, when |A|^n_max exceeds the budget.
CoeffTable brute_table(const Alphabet& a, const PatternSet& m, int n_max,
                       std::uint64_t budget = kDefaultEnumerationBudget);

struct CompareReport {
    bool ok = false;
    int n = -1; ///< first mismatch position when !ok
    int k = -1;
    mpz_class expected;
    mpz_class got;
    std::string message;
};

/// Expands f via series_in_x to table.n_max and compares every coefficient
/// of x^n y^k against the table. Mismatch is data, not an error; callers
/// promote it as needed.
CompareReport compare_series(const GenFuncResult& f, const CoeffTable& table);

/// Delimited text export, one "n k count" line per entry.
std::string export_table(const CoeffTable& table);

} // namespace cleanwords
