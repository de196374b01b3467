#ifndef MULT_MONOMIAL_HPP
#define MULT_MONOMIAL_HPP

#include <cstddef>
#include <vector>

namespace mult {

// Exponent vector of a monomial; index = variable position.
using Exponent = std::vector<unsigned>;

bool divides(const Exponent& a, const Exponent& b);  // X^a divides X^b

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept;
};

// A monomial ideal in a fixed number of variables, stored as the unique
// minimal generating antichain, lexicographically sorted.  The zero ideal has
// no generators; the unit ideal is generated by the zero exponent.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(std::size_t arity);
    static MonomialIdeal unit(std::size_t arity);
    static MonomialIdeal make(std::size_t arity, std::vector<Exponent> gens);
    // For generator sets already known to be a sorted antichain (e.g. frontier
    // scans); checked in debug builds only.
    static MonomialIdeal from_antichain(std::size_t arity, std::vector<Exponent> gens);

    std::size_t arity() const { return arity_; }
    const std::vector<Exponent>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_zero() && !is_unit(); }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  private:
    std::size_t arity_ = 0;
    std::vector<Exponent> gens_;
};

// X^w ∈ a
bool contains_monomial(const MonomialIdeal& a, const Exponent& w);
// b ⊆ a
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// ⟨x_1,…,x_arity⟩^p, the unit ideal when p <= 0.
MonomialIdeal max_ideal_power(std::size_t arity, long p);

// View a in a larger ring of total_arity variables, its variables occupying
// positions [offset, offset + a.arity()).
MonomialIdeal embed_product(const MonomialIdeal& a, std::size_t offset, std::size_t total_arity);

// Image of a in the subring of the variables listed in keep (ascending
// positions): generators supported on keep survive, projected to those
// coordinates; the rest are dropped.
MonomialIdeal restrict_to_subspace(const MonomialIdeal& a, const std::vector<std::size_t>& keep);

}  // namespace mult

#endif
