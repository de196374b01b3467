#ifndef MULT_HARNESS_HPP
#define MULT_HARNESS_HPP

#include "mult/graded.hpp"
#include "mult/monomial.hpp"
#include "mult/newton.hpp"
#include "mult/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mult {

enum class TheoremId {
    SumInclusion,      // one ideal sum, one coefficient
    AsymptoticSum,     // graded systems, truncated
    ProductEquality,   // disjoint variable blocks, equality
    MainInclusion,     // families with power hypotheses
    SumIntersection,   // finite sum equals intersection form
    Approximation,     // maximal-ideal fattening controls the error term
    Subvariety,        // restriction to a coordinate subspace
    JumpShift          // jumping numbers shift by the codimension
};

enum class Verdict { Holds, HoldsWithEquality, Fails, Inconclusive };

std::string to_string(TheoremId id);
std::string to_string(Verdict v);

struct VerificationReport {
    TheoremId theorem = TheoremId::SumInclusion;
    std::string instance;
    std::vector<MonomialIdeal> lhs_ideals;
    std::vector<MonomialIdeal> rhs_ideals;
    std::vector<Rational> lhs_values;
    std::vector<Rational> rhs_values;
    Verdict verdict = Verdict::Holds;
    std::optional<Exponent> witness_monomial;
    std::optional<Rational> witness_value;
    std::string note;
};

// Sorted distinct sample coefficients in [0, gamma]: the endpoints, every
// jump of a up to gamma, gamma minus every jump of b, and the midpoint of
// each consecutive pair.  The summand pair is constant between consecutive
// breakpoints, so evaluating at these samples evaluates every possible term.
struct AlphaSamples {
    std::vector<Rational> values;
};

AlphaSamples critical_alphas(const MonomialIdeal& a, const MonomialIdeal& b,
                             const Rational& gamma);

// Adds the quarter points of each consecutive pair; used to assert that
// refining the sample set never changes a finite sum.
AlphaSamples densify(const AlphaSamples& samples);

MonomialIdeal finite_sum(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& gamma);
MonomialIdeal finite_sum_with_samples(const MonomialIdeal& a, const MonomialIdeal& b,
                                      const Rational& gamma, const AlphaSamples& samples);

VerificationReport verify_sum_inclusion(const MonomialIdeal& a, const MonomialIdeal& b,
                                        const Rational& gamma);

// a and b live in disjoint variable blocks of a product ring.
VerificationReport verify_product_equality(const MonomialIdeal& a, const MonomialIdeal& b,
                                           const Rational& gamma);

VerificationReport verify_sum_equals_intersection(const MonomialIdeal& a, const MonomialIdeal& b,
                                                  const Rational& gamma);

// Levels 1..m plus level n, all in one ring (or in disjoint blocks when
// product_space is set).  Hypothesis checked: member(i)^(n/i) ⊆ member(n)
// for every i = 1..m dividing n.
struct IdealFamily {
    std::map<unsigned, MonomialIdeal> members;
};

VerificationReport verify_main_inclusion(const IdealFamily& a, const IdealFamily& b, unsigned m,
                                         unsigned n, const Rational& gamma, bool product_space);

VerificationReport verify_asymptotic(const GradedSystem& a, const GradedSystem& b, unsigned p,
                                     const Rational& gamma, unsigned q_max);

VerificationReport verify_approximation(const MonomialIdeal& a, unsigned p, const Rational& gamma,
                                        const Rational& eps);

// a viewed in r extra variables, plus the ideal those variables generate.
MonomialIdeal extend_by_coordinate_subspace(const MonomialIdeal& a, std::size_t r);

// b must contain the ideal of the last r variables.
VerificationReport verify_subvariety(const MonomialIdeal& b, std::size_t r, const Rational& gamma);

VerificationReport verify_jumping_shift(const MonomialIdeal& a, std::size_t r,
                                        const Rational& limit);

struct InstanceParams {
    std::size_t arity_min = 1;
    std::size_t arity_max = 3;
    unsigned gens_max = 4;
    unsigned deg_max = 6;
    unsigned gamma_max = 3;
    unsigned gamma_den_max = 6;
};

struct RandomInstance {
    MonomialIdeal a;
    MonomialIdeal b;
    Rational gamma;
};

// Deterministic across platforms: driven by a splitmix-style generator, no
// standard-library distributions.
RandomInstance random_instance(std::uint64_t seed, const InstanceParams& params);

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform-ish in [0, bound)

  private:
    std::uint64_t state_;
};

MonomialIdeal random_ideal(SplitMix64& rng, std::size_t arity, unsigned gens_max,
                           unsigned deg_max);
Rational random_gamma(SplitMix64& rng, unsigned gamma_max, unsigned gamma_den_max);

std::vector<std::string> default_var_names(std::size_t arity);
std::string render_ideal(const MonomialIdeal& a, const std::vector<std::string>& names);
std::string render_ideal(const MonomialIdeal& a);

std::uint64_t derive_instance_seed(std::uint64_t base_seed, TheoremId id, unsigned index);

// The canonical seeded trial for one statement: draws an instance sized so
// exact arithmetic stays fast, then runs the matching verifier.  Trials for
// a fixed (base_seed, id, index) are identical everywhere they are run.
VerificationReport random_trial(TheoremId id, std::uint64_t base_seed, unsigned index);

}  // namespace mult

#endif
