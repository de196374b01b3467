#ifndef MULT_REPORT_HPP
#define MULT_REPORT_HPP

#include "mult/harness.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace mult {

std::string render_monomial(const Exponent& g, const std::vector<std::string>& names);
std::string render_monomial(const Exponent& g);

std::string render_values(const std::vector<Rational>& values);

nlohmann::json report_to_json(const VerificationReport& report);

struct VerdictCounts {
    unsigned holds = 0;
    unsigned equality = 0;
    unsigned fails = 0;
    unsigned inconclusive = 0;

    void add(Verdict v);
    unsigned total() const { return holds + equality + fails + inconclusive; }
    bool any_fails() const { return fails > 0; }
    bool any_inconclusive() const { return inconclusive > 0; }
    Verdict aggregate() const;
    std::string summary() const;
};

}  // namespace mult

#endif
