#include "mult/harness.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace mult {

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::SumInclusion: return "sum-inclusion";
        case TheoremId::AsymptoticSum: return "asymptotic-sum";
        case TheoremId::ProductEquality: return "product-equality";
        case TheoremId::MainInclusion: return "main-inclusion";
        case TheoremId::SumIntersection: return "sum-intersection";
        case TheoremId::Approximation: return "approximation";
        case TheoremId::Subvariety: return "subvariety";
        case TheoremId::JumpShift: return "jump-shift";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::HoldsWithEquality: return "HoldsWithEquality";
        case Verdict::Fails: return "FAILS";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

std::vector<std::string> default_var_names(std::size_t arity) {
    static const char* base[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    names.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        if (i < 4) {
            names.emplace_back(base[i]);
        } else {
            names.push_back("v" + std::to_string(i + 1));
        }
    }
    return names;
}

std::string render_ideal(const MonomialIdeal& a, const std::vector<std::string>& names) {
    if (names.size() != a.arity()) throw std::invalid_argument("variable name count mismatch");
    if (a.is_zero()) return "<0>";
    std::ostringstream out;
    out << "<";
    bool first_gen = true;
    for (const Exponent& g : a.generators()) {
        if (!first_gen) out << ", ";
        first_gen = false;
        bool all_zero = true;
        bool first_factor = true;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0) continue;
            all_zero = false;
            if (!first_factor) out << "*";
            first_factor = false;
            out << names[i];
            if (g[i] > 1) out << "^" << g[i];
        }
        if (all_zero) out << "1";
    }
    out << ">";
    return out.str();
}

std::string render_ideal(const MonomialIdeal& a) {
    return render_ideal(a, default_var_names(a.arity()));
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    return next() % bound;
}

MonomialIdeal random_ideal(SplitMix64& rng, std::size_t arity, unsigned gens_max,
                           unsigned deg_max) {
    const std::uint64_t count = 1 + rng.below(gens_max);
    std::vector<Exponent> gens;
    for (std::uint64_t k = 0; k < count; ++k) {
        Exponent g(arity, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < arity; ++i) {
            g[i] = static_cast<unsigned>(rng.below(deg_max + 1));
            nonzero = nonzero || g[i] > 0;
        }
        if (!nonzero) g[rng.below(arity)] = 1 + static_cast<unsigned>(rng.below(deg_max));
        gens.push_back(std::move(g));
    }
    return MonomialIdeal::make(arity, std::move(gens));
}

Rational random_gamma(SplitMix64& rng, unsigned gamma_max, unsigned gamma_den_max) {
    const std::uint64_t den = 1 + rng.below(gamma_den_max);
    const std::uint64_t num = 1 + rng.below(gamma_max * den);
    return make_rational(Int(num), Int(den));
}

RandomInstance random_instance(std::uint64_t seed, const InstanceParams& params) {
    if (params.arity_min < 1 || params.arity_min > params.arity_max) {
        throw std::invalid_argument("bad arity range");
    }
    SplitMix64 rng(seed);
    RandomInstance inst;
    const std::size_t arity =
        params.arity_min + rng.below(params.arity_max - params.arity_min + 1);
    inst.a = random_ideal(rng, arity, params.gens_max, params.deg_max);
    inst.b = random_ideal(rng, arity, params.gens_max, params.deg_max);
    inst.gamma = random_gamma(rng, params.gamma_max, params.gamma_den_max);
    return inst;
}

namespace {

// multiplier_ideal with the zero-ideal convention folded in, holding onto the
// polyhedron so repeated coefficients reuse its cache.
class MiCache {
  public:
    explicit MiCache(const MonomialIdeal& a) : ideal_(a) {
        if (!ideal_.is_zero()) poly_.emplace(ideal_);
    }

    const MonomialIdeal& ideal() const { return ideal_; }

    MonomialIdeal at(const Rational& c) const {
        if (ideal_.is_zero()) {
            return c == 0 ? MonomialIdeal::unit(ideal_.arity())
                          : MonomialIdeal::zero(ideal_.arity());
        }
        return multiplier_ideal(*poly_, c);
    }

    std::vector<Rational> jumps_up_to(const Rational& limit) const {
        if (ideal_.is_zero() || ideal_.is_unit()) return {};
        return jumping_numbers(*poly_, limit);
    }

  private:
    MonomialIdeal ideal_;
    std::optional<NewtonPolyhedron> poly_;
};

std::vector<Rational> with_midpoints(std::vector<Rational> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Rational> out;
    out.reserve(points.size() * 2);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) out.push_back((points[i - 1] + points[i]) / 2);
        out.push_back(points[i]);
    }
    return out;
}

AlphaSamples samples_from_breakpoints(std::vector<Rational> breakpoints) {
    AlphaSamples s;
    s.values = with_midpoints(std::move(breakpoints));
    return s;
}

AlphaSamples critical_alphas_caches(const MiCache& a, const MiCache& b, const Rational& gamma) {
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    std::vector<Rational> pts{Rational(0), gamma};
    for (const Rational& j : a.jumps_up_to(gamma)) pts.push_back(j);
    for (const Rational& j : b.jumps_up_to(gamma)) pts.push_back(gamma - j);
    return samples_from_breakpoints(std::move(pts));
}

struct InclusionCheck {
    bool holds = true;
    std::optional<Exponent> witness;
};

// every generator of inner lies in outer
InclusionCheck included(const MonomialIdeal& outer, const MonomialIdeal& inner) {
    InclusionCheck check;
    for (const Exponent& g : inner.generators()) {
        if (!contains_monomial(outer, g)) {
            check.holds = false;
            check.witness = g;
            break;
        }
    }
    return check;
}

void settle_inclusion(VerificationReport& report, const MonomialIdeal& lhs,
                      const MonomialIdeal& rhs, bool demand_equality) {
    report.lhs_ideals = {lhs};
    report.rhs_ideals = {rhs};
    const InclusionCheck forward = included(rhs, lhs);
    if (!forward.holds) {
        report.verdict = Verdict::Fails;
        report.witness_monomial = forward.witness;
        report.note = "left side is not inside the right side";
        return;
    }
    const InclusionCheck backward = included(lhs, rhs);
    if (backward.holds) {
        report.verdict = Verdict::HoldsWithEquality;
        return;
    }
    if (demand_equality) {
        report.verdict = Verdict::Fails;
        report.witness_monomial = backward.witness;
        report.note = "right side is not inside the left side";
        return;
    }
    report.verdict = Verdict::Holds;
}

std::string describe_pair(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& gamma) {
    std::ostringstream out;
    out << "a=" << render_ideal(a) << " b=" << render_ideal(b) << " gamma=" << to_string(gamma);
    return out.str();
}

// For instances on a product of variable blocks: a keeps the leading names,
// b gets the continuation, so the description reads like one shared ring.
std::string describe_block_pair(const MonomialIdeal& a, const MonomialIdeal& b,
                                const Rational& gamma) {
    const std::vector<std::string> names = default_var_names(a.arity() + b.arity());
    const std::vector<std::string> names_a(names.begin(), names.begin() + a.arity());
    const std::vector<std::string> names_b(names.begin() + a.arity(), names.end());
    std::ostringstream out;
    out << "a=" << render_ideal(a, names_a) << " (" << a.arity() << " vars) b="
        << render_ideal(b, names_b) << " (" << b.arity() << " vars) gamma=" << to_string(gamma);
    return out.str();
}

}  // namespace

AlphaSamples critical_alphas(const MonomialIdeal& a, const MonomialIdeal& b,
                             const Rational& gamma) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    MiCache ca(a), cb(b);
    return critical_alphas_caches(ca, cb, gamma);
}

AlphaSamples densify(const AlphaSamples& samples) {
    std::vector<Rational> pts = samples.values;
    for (std::size_t i = 1; i < samples.values.size(); ++i) {
        pts.push_back((samples.values[i - 1] * 3 + samples.values[i]) / 4);
        pts.push_back((samples.values[i - 1] + samples.values[i] * 3) / 4);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    AlphaSamples out;
    out.values = std::move(pts);
    return out;
}

MonomialIdeal finite_sum_with_samples(const MonomialIdeal& a, const MonomialIdeal& b,
                                      const Rational& gamma, const AlphaSamples& samples) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    MiCache ca(a), cb(b);
    MonomialIdeal acc = MonomialIdeal::zero(a.arity());
    for (const Rational& alpha : samples.values) {
        acc = sum(acc, product(ca.at(alpha), cb.at(gamma - alpha)));
    }
    return acc;
}

MonomialIdeal finite_sum(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& gamma) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    MiCache ca(a), cb(b);
    const AlphaSamples samples = critical_alphas_caches(ca, cb, gamma);
    MonomialIdeal acc = MonomialIdeal::zero(a.arity());
    for (const Rational& alpha : samples.values) {
        acc = sum(acc, product(ca.at(alpha), cb.at(gamma - alpha)));
    }
    return acc;
}

VerificationReport verify_sum_inclusion(const MonomialIdeal& a, const MonomialIdeal& b,
                                        const Rational& gamma) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    VerificationReport report;
    report.theorem = TheoremId::SumInclusion;
    report.instance = describe_pair(a, b, gamma);

    MiCache ca(a), cb(b);
    MiCache csum(sum(a, b));
    const MonomialIdeal lhs = csum.at(gamma);
    const AlphaSamples samples = critical_alphas_caches(ca, cb, gamma);
    MonomialIdeal rhs = MonomialIdeal::zero(a.arity());
    for (const Rational& alpha : samples.values) {
        rhs = sum(rhs, product(ca.at(alpha), cb.at(gamma - alpha)));
    }
    settle_inclusion(report, lhs, rhs, false);
    return report;
}

VerificationReport verify_product_equality(const MonomialIdeal& a, const MonomialIdeal& b,
                                           const Rational& gamma) {
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    VerificationReport report;
    report.theorem = TheoremId::ProductEquality;
    report.instance = describe_block_pair(a, b, gamma);

    const std::size_t total = a.arity() + b.arity();
    MiCache ca(a), cb(b);
    MiCache cjoint(sum(embed_product(a, 0, total), embed_product(b, a.arity(), total)));
    const MonomialIdeal lhs = cjoint.at(gamma);

    const AlphaSamples samples = critical_alphas_caches(ca, cb, gamma);
    MonomialIdeal rhs = MonomialIdeal::zero(total);
    for (const Rational& alpha : samples.values) {
        rhs = sum(rhs, product(embed_product(ca.at(alpha), 0, total),
                               embed_product(cb.at(gamma - alpha), a.arity(), total)));
    }
    settle_inclusion(report, lhs, rhs, true);
    return report;
}

VerificationReport verify_sum_equals_intersection(const MonomialIdeal& a, const MonomialIdeal& b,
                                                  const Rational& gamma) {
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    VerificationReport report;
    report.theorem = TheoremId::SumIntersection;
    report.instance = describe_block_pair(a, b, gamma);

    // both sides live on the product of the two variable blocks
    const std::size_t total = a.arity() + b.arity();
    MiCache ca(a), cb(b);
    const AlphaSamples samples = critical_alphas_caches(ca, cb, gamma);
    MonomialIdeal sum_side = MonomialIdeal::zero(total);
    bool have_intersection = false;
    MonomialIdeal intersection_side = MonomialIdeal::unit(total);
    for (const Rational& alpha : samples.values) {
        const MonomialIdeal left = embed_product(ca.at(alpha), 0, total);
        const MonomialIdeal right = embed_product(cb.at(gamma - alpha), a.arity(), total);
        sum_side = sum(sum_side, product(left, right));
        const MonomialIdeal joined = sum(left, right);
        intersection_side = have_intersection ? intersect(intersection_side, joined) : joined;
        have_intersection = true;
    }
    settle_inclusion(report, sum_side, intersection_side, true);
    return report;
}

MonomialIdeal extend_by_coordinate_subspace(const MonomialIdeal& a, std::size_t r) {
    const std::size_t total = a.arity() + r;
    std::vector<Exponent> vars;
    for (std::size_t k = 0; k < r; ++k) {
        Exponent g(total, 0);
        g[a.arity() + k] = 1;
        vars.push_back(std::move(g));
    }
    return sum(embed_product(a, 0, total), MonomialIdeal::make(total, std::move(vars)));
}

namespace {

const MonomialIdeal& family_member(const IdealFamily& fam, unsigned key) {
    auto it = fam.members.find(key);
    if (it == fam.members.end()) {
        throw std::invalid_argument("family is missing level " + std::to_string(key));
    }
    return it->second;
}

void check_family(const IdealFamily& fam, unsigned m, unsigned n, const char* label) {
    const std::size_t arity = family_member(fam, 1).arity();
    for (unsigned i = 1; i <= m; ++i) {
        const MonomialIdeal& member = family_member(fam, i);
        if (member.arity() != arity) {
            throw std::invalid_argument(std::string(label) + ": member arities disagree");
        }
        if (member.is_zero()) {
            throw std::invalid_argument(std::string(label) + ": members must be nonzero");
        }
    }
    const MonomialIdeal& top = family_member(fam, n);
    if (top.arity() != arity || top.is_zero()) {
        throw std::invalid_argument(std::string(label) + ": bad top member");
    }
    for (unsigned i = 1; i <= m; ++i) {
        if (n % i != 0) continue;
        if (!contains(top, power(family_member(fam, i), n / i))) {
            throw std::invalid_argument(std::string(label) + ": power hypothesis fails at level " +
                                        std::to_string(i));
        }
    }
}

}  // namespace

VerificationReport verify_main_inclusion(const IdealFamily& a, const IdealFamily& b, unsigned m,
                                         unsigned n, const Rational& gamma, bool product_space) {
    if (m < 1 || n < 1) throw std::invalid_argument("levels must be at least 1");
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    check_family(a, m, n, "first family");
    check_family(b, m, n, "second family");
    const std::size_t arity_a = family_member(a, 1).arity();
    const std::size_t arity_b = family_member(b, 1).arity();
    if (!product_space && arity_a != arity_b) {
        throw std::invalid_argument("families must share a ring unless blocks are disjoint");
    }

    VerificationReport report;
    report.theorem = TheoremId::MainInclusion;
    {
        std::ostringstream txt;
        txt << "m=" << m << " n=" << n << " gamma=" << to_string(gamma)
            << (product_space ? " blocks=disjoint" : " blocks=shared")
            << " a_1=" << render_ideal(family_member(a, 1))
            << " a_n=" << render_ideal(family_member(a, n))
            << " b_1=" << render_ideal(family_member(b, 1))
            << " b_n=" << render_ideal(family_member(b, n));
        report.instance = txt.str();
    }

    const std::size_t total = product_space ? arity_a + arity_b : arity_a;
    auto lift_a = [&](const MonomialIdeal& ideal) {
        return product_space ? embed_product(ideal, 0, total) : ideal;
    };
    auto lift_b = [&](const MonomialIdeal& ideal) {
        return product_space ? embed_product(ideal, arity_a, total) : ideal;
    };

    MonomialIdeal mixed = sum(lift_a(family_member(a, m)), lift_b(family_member(b, m)));
    for (unsigned i = 1; i < m; ++i) {
        mixed = sum(mixed, product(lift_a(family_member(a, i)), lift_b(family_member(b, m - i))));
    }
    const MonomialIdeal lhs = multiplier_ideal(mixed, gamma / Rational(m));

    MiCache ca(family_member(a, n)), cb(family_member(b, n));
    std::vector<Rational> pts{Rational(0), gamma};
    for (const Rational& j : ca.jumps_up_to(gamma / Rational(n))) pts.push_back(j * Rational(n));
    for (const Rational& j : cb.jumps_up_to(gamma / Rational(n))) {
        pts.push_back(gamma - j * Rational(n));
    }
    const AlphaSamples samples = samples_from_breakpoints(std::move(pts));
    MonomialIdeal rhs = MonomialIdeal::zero(total);
    for (const Rational& alpha : samples.values) {
        rhs = sum(rhs, product(lift_a(ca.at(alpha / Rational(n))),
                               lift_b(cb.at((gamma - alpha) / Rational(n)))));
    }
    settle_inclusion(report, lhs, rhs, false);
    return report;
}

VerificationReport verify_asymptotic(const GradedSystem& a, const GradedSystem& b, unsigned p,
                                     const Rational& gamma, unsigned q_max) {
    for (const std::string& problem : validate(a)) {
        throw std::invalid_argument("first system: " + problem);
    }
    for (const std::string& problem : validate(b)) {
        throw std::invalid_argument("second system: " + problem);
    }
    if (a.arity != b.arity) throw std::invalid_argument("system arity mismatch");
    if (a.p_max != b.p_max) throw std::invalid_argument("system level mismatch");
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");

    VerificationReport report;
    report.theorem = TheoremId::AsymptoticSum;
    {
        std::ostringstream txt;
        txt << "p=" << p << " q_max=" << q_max << " gamma=" << to_string(gamma)
            << " a_1=" << render_ideal(a.at(1)) << " b_1=" << render_ideal(b.at(1))
            << " p_max=" << a.p_max;
        report.instance = txt.str();
    }

    const GradedSystem joint = sum_systems(a, b);
    const AsymptoticEvaluator eval_joint(joint, p, q_max);
    const AsymptoticEvaluator eval_a(a, p, q_max);
    const AsymptoticEvaluator eval_b(b, p, q_max);

    bool truncated = false;
    std::string truncation_note;
    auto settled = [&](const AsymptoticResult& r, const char* which) -> MonomialIdeal {
        if (!r.conclusive || !r.stabilized) {
            if (!truncated) {
                truncation_note = std::string(which) +
                                  (r.conclusive ? " did not stabilize" : " has no maximal member");
            }
            truncated = true;
        }
        return r.ideal;
    };

    const AsymptoticResult lhs_res = eval_joint.at(gamma);
    const MonomialIdeal lhs = settled(lhs_res, "the sum system");

    std::vector<Rational> pts{Rational(0), gamma};
    for (unsigned q = 1; q <= q_max; ++q) {
        MiCache ca(eval_a.level_ideal(q));
        for (const Rational& j : ca.jumps_up_to(gamma / Rational(q))) {
            pts.push_back(j * Rational(q));
        }
        MiCache cb(eval_b.level_ideal(q));
        for (const Rational& j : cb.jumps_up_to(gamma / Rational(q))) {
            pts.push_back(gamma - j * Rational(q));
        }
    }
    const AlphaSamples samples = samples_from_breakpoints(std::move(pts));

    MonomialIdeal rhs = MonomialIdeal::zero(a.arity);
    for (const Rational& alpha : samples.values) {
        const MonomialIdeal left = settled(eval_a.at(alpha), "the first system");
        const MonomialIdeal right = settled(eval_b.at(gamma - alpha), "the second system");
        rhs = sum(rhs, product(left, right));
    }

    settle_inclusion(report, lhs, rhs, false);
    if (truncated && report.verdict != Verdict::Fails) {
        report.verdict = Verdict::Inconclusive;
        report.note = truncation_note;
    }
    return report;
}

VerificationReport verify_approximation(const MonomialIdeal& a, unsigned p, const Rational& gamma,
                                        const Rational& eps) {
    if (a.is_zero()) throw std::invalid_argument("the ideal must be nonzero");
    if (p < 1) throw std::invalid_argument("p must be at least 1");
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");

    VerificationReport report;
    report.theorem = TheoremId::Approximation;
    {
        std::ostringstream txt;
        txt << "a=" << render_ideal(a) << " p=" << p << " gamma=" << to_string(gamma)
            << " eps=" << to_string(eps);
        report.instance = txt.str();
    }

    const long n = static_cast<long>(a.arity());
    const MonomialIdeal fattened = sum(a, max_ideal_power(a.arity(), static_cast<long>(p)));
    const MonomialIdeal lhs = multiplier_ideal(fattened, gamma + eps);
    const long shift = static_cast<long>(floor_rational(Rational(p) * eps)) - n + 1;
    const MonomialIdeal rhs =
        sum(multiplier_ideal(a, gamma), max_ideal_power(a.arity(), shift));
    settle_inclusion(report, lhs, rhs, false);
    return report;
}

VerificationReport verify_subvariety(const MonomialIdeal& b, std::size_t r,
                                     const Rational& gamma) {
    if (r < 1 || r > b.arity()) throw std::invalid_argument("codimension out of range");
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    const std::size_t n = b.arity() - r;
    std::vector<Exponent> vars;
    for (std::size_t k = 0; k < r; ++k) {
        Exponent g(b.arity(), 0);
        g[n + k] = 1;
        vars.push_back(std::move(g));
    }
    const MonomialIdeal subspace_ideal = MonomialIdeal::make(b.arity(), std::move(vars));
    if (!contains(b, subspace_ideal) || b == subspace_ideal) {
        throw std::invalid_argument("the ideal must strictly contain the subspace ideal");
    }

    VerificationReport report;
    report.theorem = TheoremId::Subvariety;
    {
        std::ostringstream txt;
        txt << "b=" << render_ideal(b) << " r=" << r << " gamma=" << to_string(gamma);
        report.instance = txt.str();
    }

    std::vector<std::size_t> keep(n);
    for (std::size_t i = 0; i < n; ++i) keep[i] = i;
    const MonomialIdeal lhs =
        restrict_to_subspace(multiplier_ideal(b, gamma + Rational(static_cast<long>(r))), keep);
    const MonomialIdeal rhs = multiplier_ideal(restrict_to_subspace(b, keep), gamma);
    settle_inclusion(report, lhs, rhs, true);
    return report;
}

VerificationReport verify_jumping_shift(const MonomialIdeal& a, std::size_t r,
                                        const Rational& limit) {
    if (a.is_zero()) throw std::invalid_argument("the ideal must be nonzero");
    if (r < 1) throw std::invalid_argument("codimension must be at least 1");
    if (limit < 0) throw std::invalid_argument("the limit must be nonnegative");

    VerificationReport report;
    report.theorem = TheoremId::JumpShift;
    {
        std::ostringstream txt;
        txt << "a=" << render_ideal(a) << " r=" << r << " limit=" << to_string(limit);
        report.instance = txt.str();
    }

    const Rational shift(static_cast<long>(r));
    std::vector<Rational> lhs_values;
    if (!a.is_unit()) {
        for (const Rational& j : jumping_numbers(a, limit)) lhs_values.push_back(j + shift);
    }
    const MonomialIdeal extended = extend_by_coordinate_subspace(a, r);
    std::vector<Rational> rhs_values;
    if (!extended.is_unit()) {
        for (const Rational& j : jumping_numbers(extended, limit + shift)) {
            if (j > shift) rhs_values.push_back(j);
        }
    }
    report.lhs_values = lhs_values;
    report.rhs_values = rhs_values;
    if (lhs_values == rhs_values) {
        report.verdict = Verdict::Holds;
    } else {
        report.verdict = Verdict::Fails;
        std::vector<Rational> diff;
        std::set_symmetric_difference(lhs_values.begin(), lhs_values.end(), rhs_values.begin(),
                                      rhs_values.end(), std::back_inserter(diff));
        if (!diff.empty()) report.witness_value = diff.front();
        report.note = "shifted jump sets disagree";
    }
    return report;
}

std::uint64_t derive_instance_seed(std::uint64_t base_seed, TheoremId id, unsigned index) {
    SplitMix64 rng(base_seed + 0x9e3779b97f4a7c15ull * (static_cast<unsigned>(id) + 1) + index);
    return rng.next();
}

VerificationReport random_trial(TheoremId id, std::uint64_t base_seed, unsigned index) {
    const std::uint64_t seed = derive_instance_seed(base_seed, id, index);
    SplitMix64 rng(seed);
    switch (id) {
        case TheoremId::SumInclusion: {
            const RandomInstance inst = random_instance(seed, InstanceParams{});
            return verify_sum_inclusion(inst.a, inst.b, inst.gamma);
        }
        case TheoremId::ProductEquality: {
            const std::size_t arity_a = 1 + rng.below(2);
            const std::size_t arity_b = 1 + rng.below(2);
            const MonomialIdeal a = random_ideal(rng, arity_a, 3, 4);
            const MonomialIdeal b = random_ideal(rng, arity_b, 3, 4);
            const Rational gamma = random_gamma(rng, 2, 6);
            return verify_product_equality(a, b, gamma);
        }
        case TheoremId::SumIntersection: {
            const std::size_t arity_a = 1 + rng.below(2);
            const std::size_t arity_b = 1 + rng.below(2);
            const MonomialIdeal a = random_ideal(rng, arity_a, 3, 4);
            const MonomialIdeal b = random_ideal(rng, arity_b, 3, 4);
            const Rational gamma = random_gamma(rng, 2, 6);
            return verify_sum_equals_intersection(a, b, gamma);
        }
        case TheoremId::MainInclusion: {
            const std::size_t arity = 1 + rng.below(2);
            const MonomialIdeal base_a = random_ideal(rng, arity, 3, 3);
            const MonomialIdeal base_b = random_ideal(rng, arity, 3, 3);
            const Rational gamma = random_gamma(rng, 3, 6);
            const unsigned m = 1 + index % 3;
            const unsigned lcm_table[] = {1, 2, 6};
            const unsigned n = lcm_table[m - 1];
            IdealFamily fam_a, fam_b;
            for (unsigned i = 1; i <= m; ++i) {
                fam_a.members.emplace(i, power(base_a, i));
                fam_b.members.emplace(i, power(base_b, i));
            }
            fam_a.members.emplace(n, power(base_a, n));
            fam_b.members.emplace(n, power(base_b, n));
            return verify_main_inclusion(fam_a, fam_b, m, n, gamma, false);
        }
        case TheoremId::AsymptoticSum: {
            const std::size_t arity = 1 + rng.below(2);
            const MonomialIdeal base_a = random_ideal(rng, arity, 3, 3);
            const MonomialIdeal base_b = random_ideal(rng, arity, 3, 3);
            const Rational gamma = random_gamma(rng, 2, 4);
            return verify_asymptotic(powers_system(base_a, 2), powers_system(base_b, 2), 1, gamma,
                                     2);
        }
        case TheoremId::Approximation: {
            const std::size_t arity = 1 + rng.below(3);
            const MonomialIdeal a = random_ideal(rng, arity, 4, 4);
            const Rational gamma = random_gamma(rng, 2, 6);
            const unsigned p = 1 + index % 4;
            const Rational eps =
                (index / 4) % 2 == 0 ? make_rational(1, 2) : Rational(1);
            return verify_approximation(a, p, gamma, eps);
        }
        case TheoremId::Subvariety: {
            const std::size_t arity = 1 + rng.below(2);
            const MonomialIdeal base = random_ideal(rng, arity, 3, 4);
            const std::size_t r = 1 + index % 2;
            const Rational gamma = random_gamma(rng, 2, 6);
            return verify_subvariety(extend_by_coordinate_subspace(base, r), r, gamma);
        }
        case TheoremId::JumpShift: {
            const std::size_t arity = 1 + rng.below(2);
            const MonomialIdeal a = random_ideal(rng, arity, 3, 4);
            const std::size_t r = 1 + index % 2;
            const long limit_num[] = {1, 3, 2, 3};
            const long limit_den[] = {1, 2, 1, 1};
            const Rational limit = make_rational(limit_num[index % 4], limit_den[index % 4]);
            return verify_jumping_shift(a, r, limit);
        }
    }
    throw std::logic_error("unknown statement id");
}

}  // namespace mult
