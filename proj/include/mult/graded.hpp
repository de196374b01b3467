#ifndef MULT_GRADED_HPP
#define MULT_GRADED_HPP

#include "mult/monomial.hpp"
#include "mult/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mult {

class NewtonPolyhedron;

// A multiplicative system of nonzero ideals indexed by level p = 1..p_max:
// members[p-1] * members[q-1] ⊆ members[p+q-1] whenever p + q <= p_max.
struct GradedSystem {
    std::size_t arity = 0;
    unsigned p_max = 0;
    std::vector<MonomialIdeal> members;

    const MonomialIdeal& at(unsigned p) const;
};

// Empty result means the system is well-formed and multiplicative.
std::vector<std::string> validate(const GradedSystem& system);

GradedSystem powers_system(const MonomialIdeal& a, unsigned p_max);

// Level m of the sum system: a_m + b_m + sum of a_i * b_j over i + j = m.
GradedSystem sum_systems(const GradedSystem& a, const GradedSystem& b);

struct AsymptoticResult {
    MonomialIdeal ideal;
    // True when some level q with doubled level 2q <= q_max already attains
    // the maximal truncated member and the doubled level agrees with it.
    bool stabilized = false;
    // False when no truncated member contains all the others, so no maximal
    // member can be named at this truncation.
    bool conclusive = true;
};

// Containment-maximal member of q -> multiplier_ideal(members[p*q], gamma/q)
// for q = 1..q_max; requires p >= 1, q_max >= 1, p * q_max <= p_max.
AsymptoticResult asymptotic_multiplier_ideal(const GradedSystem& system, unsigned p,
                                             const Rational& gamma, unsigned q_max);

// Same computation with the levels' polyhedra held onto, for evaluating many
// coefficients against one system.
class AsymptoticEvaluator {
  public:
    AsymptoticEvaluator(const GradedSystem& system, unsigned p, unsigned q_max);
    ~AsymptoticEvaluator();
    AsymptoticResult at(const Rational& gamma) const;
    unsigned truncation() const { return q_max_; }
    const MonomialIdeal& level_ideal(unsigned q) const;  // the ideal at p*q

  private:
    unsigned q_max_;
    std::vector<MonomialIdeal> level_ideals_;
    std::vector<std::unique_ptr<NewtonPolyhedron>> polys_;
};

}  // namespace mult

#endif
