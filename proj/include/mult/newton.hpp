#ifndef MULT_NEWTON_HPP
#define MULT_NEWTON_HPP

#include "mult/lp.hpp"
#include "mult/monomial.hpp"
#include "mult/rational.hpp"

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mult {

// A nonnegative rational that may be +infinity (reachable only through the
// unit ideal).
class ScaleValue {
  public:
    static ScaleValue infinity() {
        ScaleValue s;
        s.infinite_ = true;
        return s;
    }
    static ScaleValue finite(Rational v) {
        ScaleValue s;
        s.value_ = std::move(v);
        return s;
    }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const;

    bool operator==(const ScaleValue& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool greater_than(const Rational& c) const { return infinite_ || value_ > c; }

  private:
    bool infinite_ = false;
    Rational value_;
};

// The convex hull of the generator exponents plus the nonnegative orthant,
// with a memo of scaling factors at lattice points.  Shareable across
// threads.  Construction from the zero ideal is a domain error.
class NewtonPolyhedron {
  public:
    explicit NewtonPolyhedron(const MonomialIdeal& a);

    std::size_t arity() const { return ideal_.arity(); }
    const MonomialIdeal& ideal() const { return ideal_; }
    bool from_unit_ideal() const { return ideal_.is_unit(); }

    // mu(v) = max { t >= 0 : v lies in t-times-this polyhedron }, +infinity
    // for the unit ideal.  Lattice queries are cached.
    ScaleValue mu_lattice(const Exponent& v) const;
    ScaleValue mu_point(const std::vector<Rational>& v) const;

  private:
    Rational solve_mu(const std::vector<Rational>& v) const;

    MonomialIdeal ideal_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<Exponent, Rational, ExponentHash> cache_;
};

ScaleValue mu(const MonomialIdeal& a, const std::vector<Rational>& v);

// Strict membership of v (all coordinates > 0) in the open interior of the
// c-scaled polyhedron; equivalent to mu(v) > c.
bool in_interior(const NewtonPolyhedron& P, const std::vector<Rational>& v, const Rational& c);
bool in_interior(const MonomialIdeal& a, const std::vector<Rational>& v, const Rational& c);

// Every minimal generator of multiplier_ideal(a, c) has each exponent at most
// this bound (ceil of c times the maximum generator degree of a).
unsigned generator_box_bound(const MonomialIdeal& a, const Rational& c);

// Minimal monomial generators w of the region mu(w + (1,..,1)) > c together
// with their mu values.  Requires a proper polyhedron and c >= 0.
std::vector<std::pair<Exponent, Rational>> minimal_generators_with_mu(const NewtonPolyhedron& P,
                                                                      const Rational& c);

MonomialIdeal multiplier_ideal(const NewtonPolyhedron& P, const Rational& c);
MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c);

ScaleValue lct(const MonomialIdeal& a);

std::vector<Rational> jumping_numbers(const NewtonPolyhedron& P, const Rational& limit);
std::vector<Rational> jumping_numbers(const MonomialIdeal& a, const Rational& limit);

// Half the gap up to the next jumping number past gamma: multiplier_ideal of
// a is constant on [gamma, gamma + epsilon].
Rational stability_epsilon(const MonomialIdeal& a, const Rational& gamma);

}  // namespace mult

#endif
