#include "mult/graded.hpp"

#include "mult/newton.hpp"

#include <stdexcept>

namespace mult {

const MonomialIdeal& GradedSystem::at(unsigned p) const {
    if (p < 1 || p > p_max) throw std::out_of_range("graded level out of range");
    return members[p - 1];
}

std::vector<std::string> validate(const GradedSystem& system) {
    std::vector<std::string> problems;
    if (system.p_max == 0) problems.push_back("p_max must be at least 1");
    if (system.members.size() != system.p_max) {
        problems.push_back("expected one member per level 1..p_max");
        return problems;
    }
    for (unsigned p = 1; p <= system.p_max; ++p) {
        const MonomialIdeal& m = system.members[p - 1];
        if (m.arity() != system.arity) {
            problems.push_back("level " + std::to_string(p) + " has the wrong arity");
        }
        if (m.is_zero()) {
            problems.push_back("level " + std::to_string(p) + " is the zero ideal");
        }
    }
    if (!problems.empty()) return problems;
    for (unsigned p = 1; p <= system.p_max; ++p) {
        for (unsigned q = p; p + q <= system.p_max; ++q) {
            if (!contains(system.at(p + q), product(system.at(p), system.at(q)))) {
                problems.push_back("levels " + std::to_string(p) + " and " + std::to_string(q) +
                                   " break multiplicativity");
            }
        }
    }
    return problems;
}

GradedSystem powers_system(const MonomialIdeal& a, unsigned p_max) {
    if (a.is_zero()) throw std::invalid_argument("powers system needs a nonzero ideal");
    if (p_max == 0) throw std::invalid_argument("powers system needs p_max >= 1");
    GradedSystem s;
    s.arity = a.arity();
    s.p_max = p_max;
    s.members.reserve(p_max);
    MonomialIdeal acc = a;
    for (unsigned p = 1; p <= p_max; ++p) {
        s.members.push_back(acc);
        if (p < p_max) acc = product(acc, a);
    }
    return s;
}

GradedSystem sum_systems(const GradedSystem& a, const GradedSystem& b) {
    if (a.arity != b.arity) throw std::invalid_argument("system arity mismatch");
    if (a.p_max != b.p_max) throw std::invalid_argument("system level mismatch");
    GradedSystem s;
    s.arity = a.arity;
    s.p_max = a.p_max;
    s.members.reserve(s.p_max);
    for (unsigned m = 1; m <= s.p_max; ++m) {
        MonomialIdeal level = sum(a.at(m), b.at(m));
        for (unsigned i = 1; i < m; ++i) {
            level = sum(level, product(a.at(i), b.at(m - i)));
        }
        s.members.push_back(std::move(level));
    }
    return s;
}

AsymptoticEvaluator::AsymptoticEvaluator(const GradedSystem& system, unsigned p,
                                         unsigned q_max)
    : q_max_(q_max) {
    if (p < 1) throw std::invalid_argument("level p must be at least 1");
    if (q_max < 1) throw std::invalid_argument("truncation must be at least 1");
    if (static_cast<unsigned long long>(p) * q_max > system.p_max) {
        throw std::invalid_argument("truncation exceeds the system's levels");
    }
    for (unsigned q = 1; q <= q_max; ++q) {
        level_ideals_.push_back(system.at(p * q));
        polys_.push_back(std::make_unique<NewtonPolyhedron>(level_ideals_.back()));
    }
}

AsymptoticEvaluator::~AsymptoticEvaluator() = default;

const MonomialIdeal& AsymptoticEvaluator::level_ideal(unsigned q) const {
    if (q < 1 || q > q_max_) throw std::out_of_range("truncation level out of range");
    return level_ideals_[q - 1];
}

AsymptoticResult AsymptoticEvaluator::at(const Rational& gamma) const {
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    std::vector<MonomialIdeal> member_ideals;
    member_ideals.reserve(q_max_);
    for (unsigned q = 1; q <= q_max_; ++q) {
        member_ideals.push_back(multiplier_ideal(*polys_[q - 1], gamma / Rational(q)));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < member_ideals.size(); ++i) {
        if (contains(member_ideals[i], member_ideals[best])) best = i;
    }
    AsymptoticResult result;
    result.ideal = member_ideals[best];
    for (const MonomialIdeal& m : member_ideals) {
        if (!contains(result.ideal, m)) {
            result.conclusive = false;
            break;
        }
    }
    if (result.conclusive) {
        for (unsigned q = 1; 2 * q <= q_max_; ++q) {
            if (member_ideals[q - 1] == result.ideal &&
                member_ideals[2 * q - 1] == result.ideal) {
                result.stabilized = true;
                break;
            }
        }
    }
    return result;
}

AsymptoticResult asymptotic_multiplier_ideal(const GradedSystem& system, unsigned p,
                                             const Rational& gamma, unsigned q_max) {
    return AsymptoticEvaluator(system, p, q_max).at(gamma);
}

}  // namespace mult
