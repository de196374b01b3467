#ifndef MULT_LP_HPP
#define MULT_LP_HPP

#include "mult/rational.hpp"

#include <atomic>
#include <cstddef>
#include <vector>

namespace mult {

// maximize objective . y  subject to  constraint_matrix y <= rhs, y >= 0
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<std::vector<Rational>> constraint_matrix;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    std::vector<Rational> solution;       // primal point, num_vars entries
    std::vector<Rational> dual_solution;  // one multiplier per constraint row
};

// Exact two-phase simplex with Bland's rule.  Every Optimal outcome is passed
// through check_certificates before being returned; a failure there is a
// solver bug and raises logic_error.
LPOutcome solve_max(const LinearProgram& lp);

// Re-derives optimality from scratch: primal feasibility, dual feasibility,
// and matching objective values.  Pure; never throws on bad input, just
// returns false.
bool check_certificates(const LinearProgram& lp, const LPOutcome& outcome);

struct LPStats {
    std::atomic<unsigned long long> solves{0};
    std::atomic<unsigned long long> certified{0};
};

LPStats& lp_stats();

}  // namespace mult

#endif
