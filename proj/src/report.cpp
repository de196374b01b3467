#include "mult/report.hpp"

#include <sstream>

namespace mult {

std::string render_monomial(const Exponent& g, const std::vector<std::string>& names) {
    if (names.size() != g.size()) throw std::invalid_argument("variable name count mismatch");
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << names[i];
        if (g[i] > 1) out << "^" << g[i];
    }
    if (first) out << "1";
    return out.str();
}

std::string render_monomial(const Exponent& g) {
    return render_monomial(g, default_var_names(g.size()));
}

std::string render_values(const std::vector<Rational>& values) {
    if (values.empty()) return "none";
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i];
    }
    return out.str();
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["theorem"] = to_string(report.theorem);
    j["instance"] = report.instance;
    j["verdict"] = to_string(report.verdict);
    if (!report.lhs_ideals.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const MonomialIdeal& m : report.lhs_ideals) arr.push_back(render_ideal(m));
        j["lhs"] = std::move(arr);
    }
    if (!report.rhs_ideals.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const MonomialIdeal& m : report.rhs_ideals) arr.push_back(render_ideal(m));
        j["rhs"] = std::move(arr);
    }
    if (!report.lhs_values.empty()) j["lhs_values"] = render_values(report.lhs_values);
    if (!report.rhs_values.empty()) j["rhs_values"] = render_values(report.rhs_values);
    if (report.witness_monomial) j["witness"] = render_monomial(*report.witness_monomial);
    if (report.witness_value) j["witness_value"] = to_string(*report.witness_value);
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

void VerdictCounts::add(Verdict v) {
    switch (v) {
        case Verdict::Holds: ++holds; break;
        case Verdict::HoldsWithEquality: ++equality; break;
        case Verdict::Fails: ++fails; break;
        case Verdict::Inconclusive: ++inconclusive; break;
    }
}

Verdict VerdictCounts::aggregate() const {
    if (fails > 0) return Verdict::Fails;
    if (inconclusive > 0) return Verdict::Inconclusive;
    if (holds == 0 && equality > 0) return Verdict::HoldsWithEquality;
    return Verdict::Holds;
}

std::string VerdictCounts::summary() const {
    std::ostringstream out;
    out << total() << " instances, " << holds << " Holds, " << equality
        << " HoldsWithEquality, " << fails << " FAILS, " << inconclusive << " Inconclusive";
    return out.str();
}

}  // namespace mult
