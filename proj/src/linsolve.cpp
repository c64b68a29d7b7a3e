#include "qonsager/linsolve.hpp"

#include <stdexcept>

namespace qonsager {

void LinearSystem::add_row(std::vector<ScalarFraction> coeffs, ScalarFraction b) {
    if (coeffs.size() != width)
        throw std::invalid_argument("LinearSystem: row width mismatch");
    rows.push_back(std::move(coeffs));
    rhs.push_back(std::move(b));
}

namespace {

std::size_t complexity(const ScalarFraction& x) {
    return x.num().term_count() + x.den().term_count();
}

// --- modular row preselection -------------------------------------------
// Large stacked systems carry many dependent rows; eliminating them with
// exact fractions is the dominant cost. A projection to GF(p) picks a
// full-rank row subset first; the exact solve then runs on a square
// system and the leftover rows are verified by substitution.

constexpr std::uint64_t kP = (std::uint64_t(1) << 61) - 1;

std::uint64_t pmul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
}

std::uint64_t ppow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = pmul(r, a);
        a = pmul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t pmod(const BigInt& c) {
    BigInt m = c % kP;
    if (m < 0) m += kP;
    return m.convert_to<std::uint64_t>();
}

std::uint64_t eval_mod(const MultiPoly& p, std::uint64_t qc, std::uint64_t rc) {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : p.terms()) {
        std::uint64_t t = pmul(pmod(c), pmul(ppow(qc, e.eq), ppow(rc, e.er)));
        acc = (acc + t) % kP;
    }
    return acc;
}

std::optional<std::uint64_t> project_frac(const ScalarFraction& x, std::uint64_t qc,
                                          std::uint64_t rc) {
    std::uint64_t d = eval_mod(x.den(), qc, rc);
    if (d == 0) return std::nullopt;
    return pmul(eval_mod(x.num(), qc, rc), ppow(d, kP - 2));
}

// Indices of a row subset of full modular rank (at most `want` rows), or
// nullopt when the projection degenerates.
std::optional<std::vector<std::size_t>> modular_preselect(
    const std::vector<std::vector<ScalarFraction>>& rows, std::size_t width,
    std::size_t want, std::uint64_t qc, std::uint64_t rc) {
    std::vector<std::vector<std::uint64_t>> reduced;  // eliminated pivot rows
    std::vector<std::size_t> pivot_col;
    std::vector<std::size_t> chosen;
    for (std::size_t ri = 0; ri < rows.size() && chosen.size() < want; ++ri) {
        std::vector<std::uint64_t> v(width);
        for (std::size_t j = 0; j < width; ++j) {
            auto pj = project_frac(rows[ri][j], qc, rc);
            if (!pj) return std::nullopt;
            v[j] = *pj;
        }
        // eliminate against existing pivots
        for (std::size_t t = 0; t < reduced.size(); ++t) {
            std::uint64_t f = v[pivot_col[t]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < width; ++j) {
                std::uint64_t sub = pmul(f, reduced[t][j]);
                v[j] = (v[j] + kP - sub) % kP;
            }
        }
        std::size_t pc = width;
        for (std::size_t j = 0; j < width; ++j)
            if (v[j] != 0) {
                pc = j;
                break;
            }
        if (pc == width) continue;  // dependent row
        const std::uint64_t inv = ppow(v[pc], kP - 2);
        for (auto& x : v) x = pmul(x, inv);
        reduced.push_back(std::move(v));
        pivot_col.push_back(pc);
        chosen.push_back(ri);
    }
    return chosen;
}

// Row-reduce in place; returns pivot column of each pivot row.
// aug == true treats the last entry of each row as a right-hand side
// (it is never chosen as pivot).
std::vector<std::size_t> rref(std::vector<std::vector<ScalarFraction>>& m,
                              std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        // Pick the simplest nonzero pivot to limit coefficient growth.
        std::size_t best = m.size();
        std::size_t best_cost = SIZE_MAX;
        for (std::size_t i = row; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            std::size_t cost = complexity(m[i][col]);
            if (cost < best_cost) {
                best_cost = cost;
                best = i;
            }
        }
        if (best == m.size()) continue;
        std::swap(m[row], m[best]);
        const ScalarFraction inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const ScalarFraction f = m[i][col];
            for (std::size_t j = col; j < m[i].size(); ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

namespace {

SolveResult solve_plain(std::vector<std::vector<ScalarFraction>> m, std::size_t n);

}  // namespace

SolveResult solve(LinearSystem system) {
    const std::size_t n = system.width;
    if (system.rows.size() > n + 4 && n > 0) {
        // Try the preselected square subsystem first.
        auto chosen = modular_preselect(system.rows, n, n, 1296000017u, 7u);
        if (!chosen) chosen = modular_preselect(system.rows, n, n, 33550337u, 65537u);
        if (chosen && chosen->size() == n) {
            std::vector<std::vector<ScalarFraction>> sq;
            sq.reserve(n);
            for (std::size_t ri : *chosen) {
                auto row = system.rows[ri];
                row.push_back(system.rhs[ri]);
                sq.push_back(std::move(row));
            }
            SolveResult res = solve_plain(std::move(sq), n);
            if (res.status == SolveResult::Status::Unique) {
                // verify the rows the subsystem skipped
                std::vector<bool> used(system.rows.size(), false);
                for (std::size_t ri : *chosen) used[ri] = true;
                for (std::size_t ri = 0; ri < system.rows.size(); ++ri) {
                    if (used[ri]) continue;
                    ScalarFraction dot(0);
                    for (std::size_t j = 0; j < n; ++j) {
                        if (system.rows[ri][j].is_zero()) continue;
                        dot += system.rows[ri][j] * res.solution[j];
                    }
                    if (!(dot == system.rhs[ri])) {
                        res.status = SolveResult::Status::Inconsistent;
                        res.solution.clear();
                        return res;
                    }
                }
                return res;
            }
            // fall through to the exact full elimination on surprises
        }
    }
    std::vector<std::vector<ScalarFraction>> m;
    m.reserve(system.rows.size());
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        auto row = std::move(system.rows[i]);
        row.push_back(std::move(system.rhs[i]));
        m.push_back(std::move(row));
    }
    return solve_plain(std::move(m), n);
}

namespace {

SolveResult solve_plain(std::vector<std::vector<ScalarFraction>> m, std::size_t n) {
    auto pivots = rref(m, n);
    SolveResult out;
    out.rank = pivots.size();
    // Any row 0 = nonzero means inconsistent.
    for (std::size_t i = pivots.size(); i < m.size(); ++i) {
        if (!m[i][n].is_zero()) {
            out.status = SolveResult::Status::Inconsistent;
            return out;
        }
    }
    if (pivots.size() < n) {
        out.status = SolveResult::Status::Underdetermined;
        return out;
    }
    out.status = SolveResult::Status::Unique;
    out.solution.assign(n, ScalarFraction(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = m[i][n];
    return out;
}

}  // namespace

std::vector<std::vector<ScalarFraction>> nullspace(
    std::size_t width, std::vector<std::vector<ScalarFraction>> rows) {
    auto pivots = rref(rows, width);
    std::vector<bool> is_pivot(width, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<ScalarFraction>> basis;
    for (std::size_t fc = 0; fc < width; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<ScalarFraction> v(width, ScalarFraction(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qonsager
