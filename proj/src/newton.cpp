#include "mult/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace mult {

const Rational& ScaleValue::value() const {
    if (infinite_) throw std::domain_error("no finite value on an infinite scale");
    return value_;
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& a) : ideal_(a) {
    if (a.is_zero()) throw std::domain_error("newton polyhedron of the zero ideal");
}

Rational NewtonPolyhedron::solve_mu(const std::vector<Rational>& v) const {
    const auto& gens = ideal_.generators();
    LinearProgram lp;
    lp.num_vars = gens.size();
    lp.objective.assign(gens.size(), Rational(1));
    lp.constraint_matrix.assign(arity(), std::vector<Rational>(gens.size()));
    for (std::size_t j = 0; j < arity(); ++j) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            lp.constraint_matrix[j][i] = static_cast<long>(gens[i][j]);
        }
    }
    lp.rhs = v;
    LPOutcome out = solve_max(lp);
    if (out.status != LPStatus::Optimal) {
        throw std::logic_error("scaling program must be bounded for a proper ideal");
    }
    return out.value;
}

ScaleValue NewtonPolyhedron::mu_lattice(const Exponent& v) const {
    if (v.size() != arity()) throw std::invalid_argument("point arity mismatch");
    if (from_unit_ideal()) return ScaleValue::infinity();
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(v);
        if (it != cache_.end()) return ScaleValue::finite(it->second);
    }
    std::vector<Rational> point(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) point[i] = static_cast<long>(v[i]);
    Rational r = solve_mu(point);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.emplace(v, r);
    }
    return ScaleValue::finite(r);
}

ScaleValue NewtonPolyhedron::mu_point(const std::vector<Rational>& v) const {
    if (v.size() != arity()) throw std::invalid_argument("point arity mismatch");
    for (const Rational& x : v) {
        if (x < 0) throw std::domain_error("mu is defined on the nonnegative orthant");
    }
    if (from_unit_ideal()) return ScaleValue::infinity();
    return ScaleValue::finite(solve_mu(v));
}

ScaleValue mu(const MonomialIdeal& a, const std::vector<Rational>& v) {
    return NewtonPolyhedron(a).mu_point(v);
}

bool in_interior(const NewtonPolyhedron& P, const std::vector<Rational>& v, const Rational& c) {
    for (const Rational& x : v) {
        if (x <= 0) throw std::domain_error("interior test needs a strictly positive point");
    }
    return P.mu_point(v).greater_than(c);
}

bool in_interior(const MonomialIdeal& a, const std::vector<Rational>& v, const Rational& c) {
    return in_interior(NewtonPolyhedron(a), v, c);
}

unsigned generator_box_bound(const MonomialIdeal& a, const Rational& c) {
    if (a.is_zero()) throw std::domain_error("box bound of the zero ideal");
    if (c <= 0) return 0;
    unsigned max_degree = 0;
    for (const Exponent& g : a.generators()) {
        unsigned deg = 0;
        for (unsigned e : g) deg += e;
        max_degree = std::max(max_degree, deg);
    }
    Int bound = ceil_rational(c * Rational(max_degree));
    return static_cast<unsigned>(bound);
}

namespace {

// Enumerates the lattice box [0,cap]^arity in ascending total degree,
// lexicographic within a degree: a linear extension of divisibility, so a
// point's divisors are all visited before it.
template <typename Visit>
void scan_box(std::size_t arity, unsigned cap, Visit&& visit) {
    const unsigned long total_max = static_cast<unsigned long>(cap) * arity;
    Exponent cur(arity, 0);
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == arity) {
            if (remaining <= cap) {
                cur[pos] = remaining;
                visit(cur);
            }
            return;
        }
        const unsigned hi = std::min(cap, remaining);
        for (unsigned v = 0; v <= hi; ++v) {
            if (remaining - v > cap * (arity - pos - 1)) continue;
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (arity == 0) return;
    for (unsigned long s = 0; s <= total_max; ++s) {
        rec(rec, 0, static_cast<unsigned>(s));
    }
}

Exponent shifted_by_one(const Exponent& w) {
    Exponent v(w);
    for (unsigned& x : v) ++x;
    return v;
}

}  // namespace

std::vector<std::pair<Exponent, Rational>> minimal_generators_with_mu(const NewtonPolyhedron& P,
                                                                      const Rational& c) {
    if (P.from_unit_ideal()) throw std::domain_error("frontier scan needs a proper ideal");
    if (c < 0) throw std::invalid_argument("frontier scan needs c >= 0");
    const unsigned cap = generator_box_bound(P.ideal(), c);
    std::vector<std::pair<Exponent, Rational>> found;
    scan_box(P.arity(), cap, [&](const Exponent& w) {
        for (const auto& gv : found) {
            if (divides(gv.first, w)) return;
        }
        ScaleValue val = P.mu_lattice(shifted_by_one(w));
        if (val.value() > c) found.emplace_back(w, val.value());
    });
    return found;
}

MonomialIdeal multiplier_ideal(const NewtonPolyhedron& P, const Rational& c) {
    if (c <= 0) return MonomialIdeal::unit(P.arity());
    if (P.from_unit_ideal()) return MonomialIdeal::unit(P.arity());
    std::vector<Exponent> gens;
    for (auto& gv : minimal_generators_with_mu(P, c)) gens.push_back(std::move(gv.first));
    return MonomialIdeal::from_antichain(P.arity(), std::move(gens));
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c) {
    if (a.is_zero()) {
        if (c == 0) return MonomialIdeal::unit(a.arity());
        throw std::domain_error("multiplier ideal of the zero ideal at a nonzero coefficient");
    }
    if (c <= 0) return MonomialIdeal::unit(a.arity());
    return multiplier_ideal(NewtonPolyhedron(a), c);
}

ScaleValue lct(const MonomialIdeal& a) {
    if (a.is_zero()) throw std::domain_error("log canonical threshold of the zero ideal");
    if (a.is_unit()) return ScaleValue::infinity();
    NewtonPolyhedron P(a);
    return P.mu_lattice(Exponent(a.arity(), 1));
}

std::vector<Rational> jumping_numbers(const NewtonPolyhedron& P, const Rational& limit) {
    if (limit < 0) throw std::invalid_argument("jumping numbers need a nonnegative limit");
    std::vector<Rational> jumps;
    if (P.from_unit_ideal()) return jumps;
    Rational at(0);
    for (;;) {
        auto frontier = minimal_generators_with_mu(P, at);
        Rational next = frontier.front().second;
        for (const auto& gv : frontier) next = std::min(next, gv.second);
        if (next > limit) break;
        jumps.push_back(next);
        at = next;
    }
    return jumps;
}

std::vector<Rational> jumping_numbers(const MonomialIdeal& a, const Rational& limit) {
    if (a.is_zero()) throw std::domain_error("jumping numbers of the zero ideal");
    if (a.is_unit()) return {};
    return jumping_numbers(NewtonPolyhedron(a), limit);
}

Rational stability_epsilon(const MonomialIdeal& a, const Rational& gamma) {
    if (!a.is_proper()) throw std::invalid_argument("stability gap needs a proper ideal");
    if (gamma < 0) throw std::invalid_argument("stability gap needs gamma >= 0");
    NewtonPolyhedron P(a);
    auto frontier = minimal_generators_with_mu(P, gamma);
    Rational next = frontier.front().second;
    for (const auto& gv : frontier) next = std::min(next, gv.second);
    return (next - gamma) / 2;
}

}  // namespace mult
