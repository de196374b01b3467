#include "mult/lp.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace mult {

LPStats& lp_stats() {
    static LPStats stats;
    return stats;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau over the columns [structural | slack | artificial | rhs].
// Rows are kept in "basis form": each row has exactly one basic column with
// coefficient 1, and obj holds reduced costs with obj.back() == -value.
struct Tableau {
    std::size_t num_structural = 0;
    std::size_t num_slack = 0;
    std::size_t num_cols = 0;  // total including rhs
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> basis;  // basic column per row
    std::vector<Rational> obj;
    std::vector<bool> banned;  // columns excluded from entering

    std::size_t rhs_col() const { return num_cols - 1; }

    void pivot(std::size_t prow, std::size_t pcol) {
        std::vector<Rational>& piv = rows[prow];
        const Rational inv = piv[pcol];
        for (auto& entry : piv) entry /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == prow) continue;
            eliminate(rows[i], piv, pcol);
        }
        eliminate(obj, piv, pcol);
        basis[prow] = pcol;
    }

    static void eliminate(std::vector<Rational>& target,
                          const std::vector<Rational>& piv, std::size_t pcol) {
        if (target[pcol] == 0) return;
        const Rational factor = target[pcol];
        for (std::size_t j = 0; j < target.size(); ++j) {
            if (piv[j] != 0) target[j] -= factor * piv[j];
        }
        target[pcol] = 0;
    }

    // Bland: entering column is the smallest-index column with positive
    // reduced cost; leaving row minimizes the ratio with the smallest basic
    // column index as tie-break.  Returns false at optimality, throws
    // UnboundedSignal when a ray is found.
    struct UnboundedSignal {};

    bool step() {
        std::size_t enter = kNone;
        for (std::size_t j = 0; j + 1 < num_cols; ++j) {
            if (!banned[j] && obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == kNone) return false;

        std::size_t leave = kNone;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& coeff = rows[i][enter];
            if (coeff <= 0) continue;
            Rational ratio = rows[i][rhs_col()] / coeff;
            if (leave == kNone || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == kNone) throw UnboundedSignal{};
        pivot(leave, enter);
        return true;
    }

    void run_to_optimum() {
        while (step()) {
        }
    }

    // Rebuild reduced costs for the given objective over current basis.
    void load_objective(const std::vector<Rational>& costs) {
        obj.assign(num_cols, Rational(0));
        for (std::size_t j = 0; j < costs.size(); ++j) obj[j] = costs[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            eliminate(obj, rows[i], basis[i]);
        }
    }
};

}  // namespace

LPOutcome solve_max(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.constraint_matrix.size();
    if (lp.rhs.size() != m) throw std::invalid_argument("rhs size mismatch");
    if (lp.objective.size() != n) throw std::invalid_argument("objective size mismatch");
    for (const auto& row : lp.constraint_matrix) {
        if (row.size() != n) throw std::invalid_argument("constraint row size mismatch");
    }

    Tableau t;
    t.num_structural = n;
    t.num_slack = m;

    std::vector<std::size_t> artificial_rows;
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.rhs[i] < 0) artificial_rows.push_back(i);
    }
    const std::size_t num_art = artificial_rows.size();
    t.num_cols = n + m + num_art + 1;
    t.banned.assign(t.num_cols, false);
    t.banned[t.rhs_col()] = true;

    t.rows.assign(m, std::vector<Rational>(t.num_cols, Rational(0)));
    t.basis.assign(m, kNone);
    std::size_t next_art = n + m;
    for (std::size_t i = 0; i < m; ++i) {
        const bool negate = lp.rhs[i] < 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& a = lp.constraint_matrix[i][j];
            t.rows[i][j] = negate ? -a : a;
        }
        t.rows[i][n + i] = negate ? Rational(-1) : Rational(1);
        t.rows[i][t.rhs_col()] = negate ? -lp.rhs[i] : lp.rhs[i];
        if (negate) {
            t.rows[i][next_art] = 1;
            t.basis[i] = next_art;
            ++next_art;
        } else {
            t.basis[i] = n + i;
        }
    }

    LPOutcome out;

    if (num_art > 0) {
        std::vector<Rational> phase1(n + m + num_art, Rational(0));
        for (std::size_t k = 0; k < num_art; ++k) phase1[n + m + k] = -1;
        t.load_objective(phase1);
        try {
            t.run_to_optimum();
        } catch (const Tableau::UnboundedSignal&) {
            throw std::logic_error("phase-1 objective cannot be unbounded");
        }
        if (t.obj[t.rhs_col()] != 0) {  // -value != 0 means some artificial stuck positive
            out.status = LPStatus::Infeasible;
            return out;
        }
        // Drive artificials out of the basis; a row that cannot pivot is a
        // redundant constraint and is dropped (its dual multiplier is zero).
        for (std::size_t i = t.rows.size(); i-- > 0;) {
            if (t.basis[i] < n + m) continue;
            std::size_t pcol = kNone;
            for (std::size_t j = 0; j < n + m; ++j) {
                if (t.rows[i][j] != 0) {
                    pcol = j;
                    break;
                }
            }
            if (pcol == kNone) {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                t.pivot(i, pcol);
            }
        }
        for (std::size_t k = 0; k < num_art; ++k) t.banned[n + m + k] = true;
    }

    std::vector<Rational> phase2(lp.objective);
    phase2.resize(n + m + num_art, Rational(0));
    t.load_objective(phase2);
    try {
        t.run_to_optimum();
    } catch (const Tableau::UnboundedSignal&) {
        out.status = LPStatus::Unbounded;
        return out;
    }

    out.status = LPStatus::Optimal;
    out.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] < n) out.solution[t.basis[i]] = t.rows[i][t.rhs_col()];
    }
    out.value = 0;
    for (std::size_t j = 0; j < n; ++j) out.value += lp.objective[j] * out.solution[j];
    // The reduced cost of row i's slack column is -z_i regardless of whether
    // the row was negated during setup (the negation flips both the slack
    // sign and the multiplier's).
    out.dual_solution.assign(m, Rational(0));
    for (std::size_t orig = 0; orig < m; ++orig) out.dual_solution[orig] = -t.obj[n + orig];

    lp_stats().solves.fetch_add(1, std::memory_order_relaxed);
    if (!check_certificates(lp, out)) {
        throw std::logic_error("simplex produced an uncertifiable optimum");
    }
    lp_stats().certified.fetch_add(1, std::memory_order_relaxed);
    return out;
}

bool check_certificates(const LinearProgram& lp, const LPOutcome& outcome) {
    if (outcome.status != LPStatus::Optimal) return false;
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.constraint_matrix.size();
    if (outcome.solution.size() != n) return false;
    if (outcome.dual_solution.size() != m) return false;
    if (lp.rhs.size() != m || lp.objective.size() != n) return false;
    for (const auto& row : lp.constraint_matrix) {
        if (row.size() != n) return false;
    }

    for (const Rational& y : outcome.solution) {
        if (y < 0) return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
        Rational lhs(0);
        for (std::size_t j = 0; j < n; ++j) lhs += lp.constraint_matrix[i][j] * outcome.solution[j];
        if (lhs > lp.rhs[i]) return false;
    }

    for (const Rational& z : outcome.dual_solution) {
        if (z < 0) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational col(0);
        for (std::size_t i = 0; i < m; ++i) col += lp.constraint_matrix[i][j] * outcome.dual_solution[i];
        if (col < lp.objective[j]) return false;
    }

    Rational primal(0);
    for (std::size_t j = 0; j < n; ++j) primal += lp.objective[j] * outcome.solution[j];
    Rational dual(0);
    for (std::size_t i = 0; i < m; ++i) dual += lp.rhs[i] * outcome.dual_solution[i];
    return primal == outcome.value && dual == outcome.value;
}

}  // namespace mult
