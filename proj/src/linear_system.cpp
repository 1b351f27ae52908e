#include "cleanwords/linear_system.hpp"

#include <limits>
#include <map>
#include <stdexcept>

#include "cleanwords/errors.hpp"

namespace cleanwords {

namespace {

void check_shape(const LinearSystem& s) {
    const int n = s.size();
    if (static_cast<int>(s.unknown_ids.size()) != n)
        throw std::logic_error("linear system is not square");
    for (const LinearRow& row : s.rows)
        for (const LinearTerm& t : row.terms)
            if (t.unknown < 0 || t.unknown >= n)
                throw std::logic_error("linear system references an unknown that does not exist");
}

} // namespace

Solution solve(const LinearSystem& system) {
    check_shape(system);
    const int n = system.size();
    const VarsPtr vars = system.vars;

    // rows of (I - T) and the right-hand side
    std::vector<std::map<int, RationalFunction>> a(static_cast<std::size_t>(n));
    std::vector<RationalFunction> rhs;
    rhs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = a[static_cast<std::size_t>(i)];
        row.emplace(i, RationalFunction::one(vars));
        for (const LinearTerm& t : system.rows[static_cast<std::size_t>(i)].terms) {
            auto it = row.find(t.unknown);
            if (it == row.end()) {
                row.emplace(t.unknown, -t.coeff);
            } else {
                it->second -= t.coeff;
                if (it->second.is_zero()) row.erase(it);
            }
        }
        rhs.emplace_back(system.rows[static_cast<std::size_t>(i)].constant);
    }

    std::vector<bool> row_done(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> pivots; // (row, col) in elimination order
    pivots.reserve(static_cast<std::size_t>(n));

    for (int step = 0; step < n; ++step) {
        // Markowitz: minimize (row_nnz-1)*(col_nnz-1); ties by column, then row
        std::vector<int> col_nnz(static_cast<std::size_t>(n), 0);
        for (int r = 0; r < n; ++r) {
            if (row_done[static_cast<std::size_t>(r)]) continue;
            for (const auto& [c, v] : a[static_cast<std::size_t>(r)])
                ++col_nnz[static_cast<std::size_t>(c)];
        }
        long long best = std::numeric_limits<long long>::max();
        int pr = -1, pc = -1;
        for (int r = 0; r < n; ++r) {
            if (row_done[static_cast<std::size_t>(r)]) continue;
            const auto& row = a[static_cast<std::size_t>(r)];
            const long long rn = static_cast<long long>(row.size());
            for (const auto& [c, v] : row) {
                const long long cost = (rn - 1) * (col_nnz[static_cast<std::size_t>(c)] - 1);
                if (cost < best || (cost == best && (c < pc || (c == pc && r < pr)))) {
                    best = cost;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0)
            throw VerificationError("singular linear system: no pivot available at stage " +
                                    std::to_string(step + 1) + " of " + std::to_string(n));

        const RationalFunction pivot = a[static_cast<std::size_t>(pr)].at(pc);
        for (int r = 0; r < n; ++r) {
            if (r == pr || row_done[static_cast<std::size_t>(r)]) continue;
            auto& row = a[static_cast<std::size_t>(r)];
            const auto hit = row.find(pc);
            if (hit == row.end()) continue;
            const RationalFunction factor = hit->second / pivot;
            row.erase(hit);
            for (const auto& [c, v] : a[static_cast<std::size_t>(pr)]) {
                if (c == pc) continue;
                auto it = row.find(c);
                if (it == row.end()) {
                    RationalFunction nv = -(factor * v);
                    if (!nv.is_zero()) row.emplace(c, std::move(nv));
                } else {
                    it->second -= factor * v;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
            rhs[static_cast<std::size_t>(r)] -= factor * rhs[static_cast<std::size_t>(pr)];
        }
        row_done[static_cast<std::size_t>(pr)] = true;
        pivots.emplace_back(pr, pc);
    }

    // retired row i holds its pivot column plus columns pivoted later, so the
    // reverse pivot order is a valid back-substitution order
    std::vector<RationalFunction> values(static_cast<std::size_t>(n),
                                         RationalFunction::zero(vars));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto [r, c] = *it;
        RationalFunction acc = rhs[static_cast<std::size_t>(r)];
        for (const auto& [c2, v] : a[static_cast<std::size_t>(r)]) {
            if (c2 == c) continue;
            acc -= v * values[static_cast<std::size_t>(c2)];
        }
        values[static_cast<std::size_t>(c)] = acc / a[static_cast<std::size_t>(r)].at(c);
    }

    Solution sol{std::move(values)};
    if (!verify(system, sol))
        throw std::logic_error("solver postcondition failed: back-substitution check");
    return sol;
}

bool verify(const LinearSystem& system, const Solution& sol) {
    check_shape(system);
    if (sol.values.size() != system.rows.size()) return false;
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        RationalFunction rhs(system.rows[i].constant);
        for (const LinearTerm& t : system.rows[i].terms)
            rhs += t.coeff * sol.values[static_cast<std::size_t>(t.unknown)];
        if (!rf_equal(sol.values[i], rhs)) return false;
    }
    return true;
}

} // namespace cleanwords
