#ifndef MULT_ORACLES_HPP
#define MULT_ORACLES_HPP

#include "mult/monomial.hpp"
#include "mult/newton.hpp"
#include "mult/rational.hpp"

#include <vector>

namespace mult {

// Independent geometric route to mu for two-variable ideals: builds the
// staircase's lower hull and minimizes over facet evaluations instead of
// solving a linear program.
ScaleValue staircase_mu_2d(const MonomialIdeal& a, const std::vector<Rational>& v);

// Literal region scan: tests every lattice point of the bounding box and
// minimalizes afterwards, bypassing the frontier shortcut.
MonomialIdeal multiplier_ideal_boxscan(const MonomialIdeal& a, const Rational& c);

// Distinct scaling values <= limit over the bounding box, bypassing the
// jump-walk shortcut.
std::vector<Rational> jumping_numbers_boxscan(const MonomialIdeal& a, const Rational& limit);

// Sum of products of multiplier ideals over the full 1/L grid on [0, gamma],
// L = lcm of all jump denominators of both factors and of gamma itself; the
// grid passes through every breakpoint, so this is exhaustive.
MonomialIdeal finite_sum_grid(const MonomialIdeal& a, const MonomialIdeal& b,
                              const Rational& gamma);

}  // namespace mult

#endif
