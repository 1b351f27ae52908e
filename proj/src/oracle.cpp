#include "cleanwords/oracle.hpp"

#include <set>
#include <sstream>

#include "cleanwords/errors.hpp"
#include "cleanwords/rational.hpp"

namespace cleanwords {

std::uint64_t CoeffTable::count(int n, int k) const {
    const auto it = entries.find({n, k});
    return it == entries.end() ? 0 : it->second;
}

CoeffTable brute_table(const Alphabet& a, const PatternSet& m, int n_max, std::uint64_t budget) {
    if (n_max < 0) throw ValidationError("n_max must be nonnegative");
    // budget gate on |A|^n_max
    const auto q = static_cast<std::uint64_t>(a.size());
    std::uint64_t total = 1;
    int affordable = 0;
    while (affordable < n_max && total <= budget / q) {
        total *= q;
        ++affordable;
    }
    if (affordable < n_max) {
        std::ostringstream os;
        os << "enumeration budget exceeded: |A|^" << n_max << " > " << budget
           << "; the largest affordable n_max is " << affordable;
        throw BudgetError(os.str());
    }

    CoeffTable table;
    table.n_max = n_max;
    Word w;
    w.reserve(static_cast<std::size_t>(n_max));
    auto walk = [&](auto&& self) -> void {
        ++table.entries[{static_cast<int>(w.size()), ncn(w, a, m)}];
        if (static_cast<int>(w.size()) == n_max) return;
        for (Letter l = 0; l < a.size(); ++l) {
            w.push_back(l);
            if (!m.last_window_dirty(w)) self(self);
            w.pop_back();
        }
    };
    walk(walk);
    return table;
}

CompareReport compare_series(const GenFuncResult& f, const CoeffTable& table) {
    const VarsPtr vars = f.f.vars();
    const auto yi = vars->index_of("y");
    if (!yi) throw std::logic_error("compare_series: no variable named y");

    const std::vector<Polynomial> series = series_in_x(f.f, table.n_max);
    for (int n = 0; n <= table.n_max; ++n) {
        // collect the series coefficients of x^n as k -> count
        std::map<int, mpz_class> got;
        for (const auto& [e, c] : series[static_cast<std::size_t>(n)].terms()) {
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (static_cast<int>(v) != *yi && e[v] != 0) {
                    CompareReport r;
                    r.n = n;
                    r.message = "series coefficient of x^" + std::to_string(n) +
                                " involves a variable other than y";
                    return r;
                }
            }
            got.emplace(e[static_cast<std::size_t>(*yi)], c);
        }
        // union of observed and expected k values
        std::map<int, mpz_class> expected;
        for (const auto& [nk, count] : table.entries)
            if (nk.first == n) expected.emplace(nk.second, mpz_class(count));
        std::set<int> ks;
        for (const auto& [k, c] : got) ks.insert(k);
        for (const auto& [k, c] : expected) ks.insert(k);
        for (int k : ks) {
            const auto g = got.find(k);
            const auto x = expected.find(k);
            const mpz_class gv = g == got.end() ? mpz_class(0) : g->second;
            const mpz_class xv = x == expected.end() ? mpz_class(0) : x->second;
            if (gv != xv) {
                CompareReport r;
                r.n = n;
                r.k = k;
                r.expected = xv;
                r.got = gv;
                std::ostringstream os;
                os << "f_{" << n << "," << k << "}: oracle " << xv.get_str() << ", series "
                   << gv.get_str();
                r.message = os.str();
                return r;
            }
        }
    }
    CompareReport r;
    r.ok = true;
    r.message = "series matches the brute-force table up to n = " + std::to_string(table.n_max);
    return r;
}

std::string export_table(const CoeffTable& table) {
    std::ostringstream os;
    for (const auto& [nk, count] : table.entries)
        os << nk.first << " " << nk.second << " " << count << "\n";
    return os.str();
}

} // namespace cleanwords
