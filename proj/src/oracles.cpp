#include "mult/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace mult {

namespace {

long long cross(long long ax, long long ay, long long bx, long long by) {
    return ax * by - ay * bx;
}

// Vertices of the lower-left hull of an antichain of 2-D points, x ascending.
std::vector<Exponent> lower_hull(std::vector<Exponent> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<Exponent> chain;
    for (const Exponent& p : pts) {
        while (chain.size() >= 2) {
            const Exponent& a = chain[chain.size() - 2];
            const Exponent& b = chain[chain.size() - 1];
            const long long abx = static_cast<long long>(b[0]) - a[0];
            const long long aby = static_cast<long long>(b[1]) - a[1];
            const long long apx = static_cast<long long>(p[0]) - a[0];
            const long long apy = static_cast<long long>(p[1]) - a[1];
            if (cross(abx, aby, apx, apy) <= 0) {
                chain.pop_back();
            } else {
                break;
            }
        }
        chain.push_back(p);
    }
    return chain;
}

}  // namespace

ScaleValue staircase_mu_2d(const MonomialIdeal& a, const std::vector<Rational>& v) {
    if (a.arity() != 2) throw std::invalid_argument("staircase route is two-variable only");
    if (a.is_zero()) throw std::domain_error("staircase of the zero ideal");
    if (v.size() != 2) throw std::invalid_argument("point arity mismatch");
    if (v[0] < 0 || v[1] < 0) throw std::domain_error("mu is defined on the nonnegative orthant");
    if (a.is_unit()) return ScaleValue::infinity();

    const std::vector<Exponent> chain = lower_hull(a.generators());
    bool have = false;
    Rational best;
    auto consider = [&](const Rational& candidate) {
        if (!have || candidate < best) {
            best = candidate;
            have = true;
        }
    };
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const Exponent& p = chain[i];
        const Exponent& q = chain[i + 1];
        const Int fa = Int(p[1]) - Int(q[1]);
        const Int fb = Int(q[0]) - Int(p[0]);
        const Int fc = fa * Int(p[0]) + fb * Int(p[1]);
        consider((Rational(fa) * v[0] + Rational(fb) * v[1]) / Rational(fc));
    }
    const unsigned x_min = chain.front()[0];
    const unsigned y_min = chain.back()[1];
    if (x_min > 0) consider(v[0] / Rational(x_min));
    if (y_min > 0) consider(v[1] / Rational(y_min));
    if (!have) throw std::logic_error("a proper staircase must have at least one facet");
    return ScaleValue::finite(best);
}

MonomialIdeal multiplier_ideal_boxscan(const MonomialIdeal& a, const Rational& c) {
    if (a.is_zero()) throw std::domain_error("region scan of the zero ideal");
    if (c <= 0 || a.is_unit()) return MonomialIdeal::unit(a.arity());
    const unsigned cap = generator_box_bound(a, c);
    const NewtonPolyhedron P(a);
    std::vector<Exponent> members;
    Exponent cur(a.arity(), 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == a.arity()) {
            Exponent shifted(cur);
            for (unsigned& x : shifted) ++x;
            if (P.mu_lattice(shifted).greater_than(c)) members.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= cap; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return MonomialIdeal::make(a.arity(), std::move(members));
}

std::vector<Rational> jumping_numbers_boxscan(const MonomialIdeal& a, const Rational& limit) {
    if (a.is_zero()) throw std::domain_error("region scan of the zero ideal");
    if (limit < 0) throw std::invalid_argument("jumping numbers need a nonnegative limit");
    std::vector<Rational> values;
    if (a.is_unit()) return values;
    const unsigned cap = generator_box_bound(a, limit);
    const NewtonPolyhedron P(a);
    Exponent cur(a.arity(), 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == a.arity()) {
            Exponent shifted(cur);
            for (unsigned& x : shifted) ++x;
            const Rational val = P.mu_lattice(shifted).value();
            if (val <= limit) values.push_back(val);
            return;
        }
        for (unsigned v = 0; v <= cap; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

MonomialIdeal finite_sum_grid(const MonomialIdeal& a, const MonomialIdeal& b,
                              const Rational& gamma) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    if (gamma < 0) throw std::invalid_argument("grid sum needs gamma >= 0");
    Int denominators = denominator(gamma);
    for (const Rational& j : jumping_numbers(a, gamma)) {
        denominators = lcm_int(denominators, denominator(j));
    }
    for (const Rational& j : jumping_numbers(b, gamma)) {
        denominators = lcm_int(denominators, denominator(j));
    }
    const Int steps = numerator(gamma * Rational(denominators));
    const NewtonPolyhedron Pa(a);
    const NewtonPolyhedron Pb(b);
    MonomialIdeal acc = MonomialIdeal::zero(a.arity());
    for (Int k = 0; k <= steps; ++k) {
        const Rational alpha = make_rational(k, denominators);
        acc = sum(acc, product(multiplier_ideal(Pa, alpha), multiplier_ideal(Pb, gamma - alpha)));
    }
    return acc;
}

}  // namespace mult
