#include "mult/cli.hpp"

#include "mult/graded.hpp"
#include "mult/harness.hpp"
#include "mult/monomial.hpp"
#include "mult/newton.hpp"
#include "mult/oracles.hpp"
#include "mult/parser.hpp"
#include "mult/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

namespace mult::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFails = 2;
constexpr int kExitInconclusive = 3;

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Fails: return kExitFails;
        case Verdict::Inconclusive: return kExitInconclusive;
        default: return kExitOk;
    }
}

class Timer {
  public:
    long long elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i];
    }
    return out;
}

// Runs fn(0..count-1) on worker_threads() threads; results land in a slot per
// index so output order never depends on scheduling.
void parallel_for(unsigned count, const std::function<void(unsigned)>& fn) {
    const unsigned threads = std::min(worker_threads(), count == 0 ? 1u : count);
    if (threads <= 1) {
        for (unsigned i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<unsigned> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const unsigned i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

struct VerifyStatement {
    std::string token;
    TheoremId id;
};

const VerifyStatement kStatements[] = {
    {"thm1", TheoremId::SumInclusion},
    {"thm2", TheoremId::AsymptoticSum},
    {"equality", TheoremId::ProductEquality},
    {"lemma", TheoremId::SumIntersection},
    {"main", TheoremId::MainInclusion},
    {"approx", TheoremId::Approximation},
    {"subvariety", TheoremId::Subvariety},
    {"jumpshift", TheoremId::JumpShift},
};

std::optional<TheoremId> statement_from_token(const std::string& token) {
    for (const VerifyStatement& s : kStatements) {
        if (s.token == token) return s.id;
    }
    return std::nullopt;
}

void print_report_lines(std::ostream& out, const VerificationReport& report) {
    out << "verdict: " << to_string(report.verdict) << "\n";
    out << "instance: " << report.instance << "\n";
    if (!report.lhs_ideals.empty()) {
        out << "lhs:";
        for (const MonomialIdeal& m : report.lhs_ideals) out << " " << render_ideal(m);
        out << "\n";
    }
    if (!report.rhs_ideals.empty()) {
        out << "rhs:";
        for (const MonomialIdeal& m : report.rhs_ideals) out << " " << render_ideal(m);
        out << "\n";
    }
    if (!report.lhs_values.empty()) out << "lhs: " << render_values(report.lhs_values) << "\n";
    if (!report.rhs_values.empty()) out << "rhs: " << render_values(report.rhs_values) << "\n";
    if (report.witness_monomial) {
        out << "witness: " << render_monomial(*report.witness_monomial) << "\n";
    }
    if (report.witness_value) out << "witness: " << to_string(*report.witness_value) << "\n";
    if (!report.note.empty()) out << "note: " << report.note << "\n";
}

struct CommonFlags {
    std::string vars;
    bool as_json = false;
    bool oracle = false;
};

json make_command_json(const std::string& command, json inputs, json result) {
    json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- lct ----

int run_lct(const std::string& ideal_text, const CommonFlags& flags, std::ostream& out,
            std::ostream& err) {
    Timer timer;
    const std::vector<std::string> names = parse_var_names(flags.vars);
    const MonomialIdeal a = parse_ideal(ideal_text, names);
    if (a.is_zero()) {
        err << "error: the zero ideal has no log canonical threshold\n";
        return kExitUsage;
    }
    const ScaleValue value = lct(a);
    const std::string rendered = value.is_infinite() ? "infinity" : to_string(value.value());

    std::string oracle_note;
    if (flags.oracle) {
        if (a.arity() == 2 && !a.is_unit()) {
            const ScaleValue other = staircase_mu_2d(a, {Rational(1), Rational(1)});
            if (!(other == value)) {
                err << "oracle mismatch: staircase route disagrees\n";
                return kExitFails;
            }
            oracle_note = "ok";
        } else {
            oracle_note = "skipped (needs two variables)";
        }
    }

    if (flags.as_json) {
        json inputs{{"vars", join_names(names)}, {"ideal", render_ideal(a, names)}};
        json result{{"lct", rendered}};
        if (!oracle_note.empty()) result["oracle"] = oracle_note;
        json j = make_command_json("lct", std::move(inputs), std::move(result));
        j["timing_ms"] = timer.elapsed_ms();
        emit_json(out, j);
    } else {
        out << rendered << "\n";
        if (!oracle_note.empty()) out << "oracle: " << oracle_note << "\n";
    }
    return kExitOk;
}

// ---- mi ----

int run_mi(const std::string& ideal_text, const std::string& coeff_text,
           const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    Timer timer;
    const std::vector<std::string> names = parse_var_names(flags.vars);
    const MonomialIdeal a = parse_ideal(ideal_text, names);
    const Rational c = parse_rational(coeff_text);
    if (a.is_zero() && c != 0) {
        err << "error: the zero ideal only scales by zero\n";
        return kExitUsage;
    }
    const MonomialIdeal result = a.is_zero() ? MonomialIdeal::unit(a.arity())
                                             : multiplier_ideal(a, c);

    std::string oracle_note;
    if (flags.oracle) {
        if (!a.is_zero()) {
            const MonomialIdeal other = multiplier_ideal_boxscan(a, c);
            bool ok = other == result;
            if (ok && a.arity() == 2 && !a.is_unit()) {
                const NewtonPolyhedron P(a);
                for (const Exponent& g : result.generators()) {
                    std::vector<Rational> shifted;
                    for (unsigned e : g) shifted.push_back(Rational(e) + 1);
                    Exponent lattice(g);
                    for (unsigned& e : lattice) ++e;
                    if (!(staircase_mu_2d(a, shifted) == P.mu_lattice(lattice))) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) {
                err << "oracle mismatch: region scan disagrees\n";
                return kExitFails;
            }
        }
        oracle_note = "ok";
    }

    if (flags.as_json) {
        json inputs{{"vars", join_names(names)},
                    {"ideal", render_ideal(a, names)},
                    {"coeff", to_string(c)}};
        json payload{{"ideal", render_ideal(result, names)}};
        if (!oracle_note.empty()) payload["oracle"] = oracle_note;
        json j = make_command_json("mi", std::move(inputs), std::move(payload));
        j["timing_ms"] = timer.elapsed_ms();
        emit_json(out, j);
    } else {
        out << render_ideal(result, names) << "\n";
        if (!oracle_note.empty()) out << "oracle: " << oracle_note << "\n";
    }
    return kExitOk;
}

// ---- jn ----

int run_jn(const std::string& ideal_text, const std::string& limit_text,
           const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    Timer timer;
    const std::vector<std::string> names = parse_var_names(flags.vars);
    const MonomialIdeal a = parse_ideal(ideal_text, names);
    const Rational limit = parse_rational(limit_text);
    if (a.is_zero()) {
        err << "error: the zero ideal has no jumping numbers\n";
        return kExitUsage;
    }
    const std::vector<Rational> jumps = jumping_numbers(a, limit);

    std::string oracle_note;
    if (flags.oracle) {
        if (jumping_numbers_boxscan(a, limit) != jumps) {
            err << "oracle mismatch: region scan disagrees\n";
            return kExitFails;
        }
        oracle_note = "ok";
    }

    if (flags.as_json) {
        json inputs{{"vars", join_names(names)},
                    {"ideal", render_ideal(a, names)},
                    {"max", to_string(limit)}};
        json values = json::array();
        for (const Rational& j : jumps) values.push_back(to_string(j));
        json payload{{"jumping_numbers", std::move(values)}};
        if (!oracle_note.empty()) payload["oracle"] = oracle_note;
        json j = make_command_json("jn", std::move(inputs), std::move(payload));
        j["timing_ms"] = timer.elapsed_ms();
        emit_json(out, j);
    } else {
        out << render_values(jumps) << "\n";
        if (!oracle_note.empty()) out << "oracle: " << oracle_note << "\n";
    }
    return kExitOk;
}

// ---- amult ----

int run_amult(const std::string& file, const std::string& powers_text, unsigned p_max,
              const std::string& coeff_text, unsigned level, unsigned q_max,
              const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    Timer timer;
    const std::vector<std::string> names = parse_var_names(flags.vars);
    const Rational gamma = parse_rational(coeff_text);

    GradedSystem system;
    json inputs{{"vars", join_names(names)}, {"coeff", to_string(gamma)}};
    if (!file.empty() && !powers_text.empty()) {
        err << "error: give either a system file or --powers, not both\n";
        return kExitUsage;
    }
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            err << "error: cannot open '" << file << "'\n";
            return kExitUsage;
        }
        std::ostringstream text;
        text << in.rdbuf();
        system = parse_graded_system(text.str(), names);
        inputs["file"] = file;
    } else if (!powers_text.empty()) {
        if (p_max == 0) {
            err << "error: --powers needs --pmax\n";
            return kExitUsage;
        }
        const MonomialIdeal base = parse_ideal(powers_text, names);
        if (base.is_zero()) {
            err << "error: the zero ideal does not generate a system\n";
            return kExitUsage;
        }
        system = powers_system(base, p_max);
        inputs["powers"] = render_ideal(base, names);
        inputs["pmax"] = p_max;
    } else {
        err << "error: give a system file or --powers\n";
        return kExitUsage;
    }

    const std::vector<std::string> problems = validate(system);
    if (!problems.empty()) {
        for (const std::string& p : problems) err << "error: " << p << "\n";
        return kExitUsage;
    }

    inputs["level"] = level;
    inputs["qmax"] = q_max;
    const AsymptoticResult result = asymptotic_multiplier_ideal(system, level, gamma, q_max);

    if (flags.as_json) {
        json payload{{"ideal", render_ideal(result.ideal, names)},
                     {"stabilized", result.stabilized},
                     {"conclusive", result.conclusive}};
        json j = make_command_json("amult", std::move(inputs), std::move(payload));
        j["timing_ms"] = timer.elapsed_ms();
        emit_json(out, j);
    } else {
        if (!result.conclusive) {
            out << "inconclusive: no containment-maximal member at truncation " << q_max << "\n";
        } else {
            out << render_ideal(result.ideal, names) << "\n";
            out << "stabilized: " << (result.stabilized ? "yes" : "no") << "\n";
        }
    }
    return result.conclusive && result.stabilized ? kExitOk : kExitInconclusive;
}

// ---- verify ----

struct VerifyFlags {
    std::string statement;
    unsigned trials = 0;
    bool trials_given = false;
    std::uint64_t seed = 0;
    std::string a_text, b_text;
    std::string vars, vars_b;
    std::string coeff_text;
    std::string eps_text;
    std::string max_text;
    unsigned r = 1;
    unsigned p_max = 0;
    unsigned level = 1;
    unsigned q_max = 2;
    bool as_json = false;
    bool oracle = false;
};

VerificationReport explicit_report(TheoremId id, const VerifyFlags& flags) {
    const auto need = [&](const std::string& value, const char* what) -> const std::string& {
        if (value.empty()) {
            throw std::invalid_argument(std::string("explicit instances need ") + what);
        }
        return value;
    };
    const std::vector<std::string> names = parse_var_names(need(flags.vars, "--vars"));
    switch (id) {
        case TheoremId::SumInclusion: {
            const MonomialIdeal a = parse_ideal(need(flags.a_text, "--a"), names);
            const MonomialIdeal b = parse_ideal(need(flags.b_text, "--b"), names);
            const Rational gamma = parse_rational(need(flags.coeff_text, "--coeff"));
            return verify_sum_inclusion(a, b, gamma);
        }
        case TheoremId::SumIntersection:
        case TheoremId::ProductEquality: {
            const std::vector<std::string> names_b =
                parse_var_names(need(flags.vars_b, "--vars-b"));
            const MonomialIdeal a = parse_ideal(need(flags.a_text, "--a"), names);
            const MonomialIdeal b = parse_ideal(need(flags.b_text, "--b"), names_b);
            const Rational gamma = parse_rational(need(flags.coeff_text, "--coeff"));
            return id == TheoremId::ProductEquality
                       ? verify_product_equality(a, b, gamma)
                       : verify_sum_equals_intersection(a, b, gamma);
        }
        case TheoremId::MainInclusion: {
            const MonomialIdeal a = parse_ideal(need(flags.a_text, "--a"), names);
            const MonomialIdeal b = parse_ideal(need(flags.b_text, "--b"), names);
            const Rational gamma = parse_rational(need(flags.coeff_text, "--coeff"));
            const unsigned m = flags.p_max == 0 ? 1 : flags.p_max;
            unsigned n = 1;
            for (unsigned i = 2; i <= m; ++i) n = std::lcm(n, i);
            IdealFamily fa, fb;
            for (unsigned i = 1; i <= m; ++i) {
                fa.members.emplace(i, power(a, i));
                fb.members.emplace(i, power(b, i));
            }
            fa.members.emplace(n, power(a, n));
            fb.members.emplace(n, power(b, n));
            return verify_main_inclusion(fa, fb, m, n, gamma, false);
        }
        case TheoremId::AsymptoticSum: {
            const MonomialIdeal a = parse_ideal(need(flags.a_text, "--a"), names);
            const MonomialIdeal b = parse_ideal(need(flags.b_text, "--b"), names);
            const Rational gamma = parse_rational(need(flags.coeff_text, "--coeff"));
            const unsigned p_max =
                flags.p_max == 0 ? flags.level * flags.q_max : flags.p_max;
            return verify_asymptotic(powers_system(a, p_max), powers_system(b, p_max),
                                     flags.level, gamma, flags.q_max);
        }
        case TheoremId::Approximation: {
            const MonomialIdeal a = parse_ideal(need(flags.a_text, "--a"), names);
            const Rational gamma = parse_rational(need(flags.coeff_text, "--coeff"));
            const Rational eps = parse_rational(need(flags.eps_text, "--eps"));
            const unsigned p = flags.p_max == 0 ? 1 : flags.p_max;
            return verify_approximation(a, p, gamma, eps);
        }
        case TheoremId::Subvariety: {
            const MonomialIdeal b = parse_ideal(need(flags.b_text, "--b"), names);
            const Rational gamma = parse_rational(need(flags.coeff_text, "--coeff"));
            return verify_subvariety(b, flags.r, gamma);
        }
        case TheoremId::JumpShift: {
            const MonomialIdeal a = parse_ideal(need(flags.a_text, "--a"), names);
            const Rational limit = parse_rational(need(flags.max_text, "--max"));
            return verify_jumping_shift(a, flags.r, limit);
        }
    }
    throw std::logic_error("unknown statement id");
}

int oracle_crosscheck(TheoremId id, const VerifyFlags& flags, std::ostream& err) {
    if (id != TheoremId::SumInclusion && id != TheoremId::SumIntersection) {
        err << "error: --oracle applies to thm1 and lemma\n";
        return kExitUsage;
    }
    const std::vector<std::string> names = parse_var_names(flags.vars);
    MonomialIdeal a = parse_ideal(flags.a_text, names);
    MonomialIdeal b;
    if (id == TheoremId::SumIntersection) {
        // lives on the product of the blocks; run the oracle on the embeddings
        b = parse_ideal(flags.b_text, parse_var_names(flags.vars_b));
        const std::size_t total = a.arity() + b.arity();
        MonomialIdeal ea = embed_product(a, 0, total);
        b = embed_product(b, a.arity(), total);
        a = std::move(ea);
    } else {
        b = parse_ideal(flags.b_text, names);
    }
    const Rational gamma = parse_rational(flags.coeff_text);
    const MonomialIdeal sampled = finite_sum(a, b, gamma);
    if (finite_sum_grid(a, b, gamma) != sampled) {
        err << "oracle mismatch: grid sum disagrees with the sampled sum\n";
        return kExitFails;
    }
    const AlphaSamples dense = densify(critical_alphas(a, b, gamma));
    if (finite_sum_with_samples(a, b, gamma, dense) != sampled) {
        err << "oracle mismatch: refining the samples changed the sum\n";
        return kExitFails;
    }
    return kExitOk;
}

int run_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
    Timer timer;
    const std::optional<TheoremId> id = statement_from_token(flags.statement);
    if (!id) {
        err << "error: unknown statement '" << flags.statement << "'\n";
        return kExitUsage;
    }

    if (!flags.trials_given) {
        const VerificationReport report = explicit_report(*id, flags);
        if (flags.oracle) {
            const int rc = oracle_crosscheck(*id, flags, err);
            if (rc != kExitOk) return rc;
        }
        if (flags.as_json) {
            json inputs{{"statement", flags.statement}};
            if (!flags.vars.empty()) inputs["vars"] = flags.vars;
            if (!flags.a_text.empty()) inputs["a"] = flags.a_text;
            if (!flags.b_text.empty()) inputs["b"] = flags.b_text;
            if (!flags.coeff_text.empty()) inputs["coeff"] = flags.coeff_text;
            if (!flags.eps_text.empty()) inputs["eps"] = flags.eps_text;
            if (!flags.max_text.empty()) inputs["max"] = flags.max_text;
            json j = make_command_json("verify " + flags.statement, std::move(inputs),
                                       report_to_json(report));
            j["verdict"] = to_string(report.verdict);
            if (report.witness_monomial) j["witness"] = render_monomial(*report.witness_monomial);
            if (report.witness_value) j["witness"] = to_string(*report.witness_value);
            j["timing_ms"] = timer.elapsed_ms();
            emit_json(out, j);
        } else {
            print_report_lines(out, report);
            if (flags.oracle) out << "oracle: ok\n";
        }
        return verdict_exit(report.verdict);
    }

    if (flags.oracle) {
        err << "error: --oracle needs an explicit instance\n";
        return kExitUsage;
    }
    std::vector<VerificationReport> reports(flags.trials);
    parallel_for(flags.trials,
                 [&](unsigned i) { reports[i] = random_trial(*id, flags.seed, i); });

    VerdictCounts counts;
    for (const VerificationReport& r : reports) counts.add(r.verdict);

    if (flags.as_json) {
        json arr = json::array();
        for (const VerificationReport& r : reports) arr.push_back(report_to_json(r));
        json inputs{{"statement", flags.statement}, {"trials", flags.trials}};
        json j = make_command_json("verify " + flags.statement, std::move(inputs),
                                   json{{"reports", std::move(arr)}});
        j["verdict"] = to_string(counts.aggregate());
        for (const VerificationReport& r : reports) {
            if (r.verdict == Verdict::Fails) {
                if (r.witness_monomial) j["witness"] = render_monomial(*r.witness_monomial);
                if (r.witness_value) j["witness"] = to_string(*r.witness_value);
                break;
            }
        }
        j["seed"] = flags.seed;
        j["timing_ms"] = timer.elapsed_ms();
        emit_json(out, j);
    } else {
        for (unsigned i = 0; i < reports.size(); ++i) {
            out << "[" << i << "] " << to_string(reports[i].verdict) << " "
                << reports[i].instance << "\n";
            if (reports[i].verdict == Verdict::Fails) {
                if (reports[i].witness_monomial) {
                    out << "    witness: " << render_monomial(*reports[i].witness_monomial)
                        << "\n";
                }
                if (reports[i].witness_value) {
                    out << "    witness: " << to_string(*reports[i].witness_value) << "\n";
                }
            }
        }
        out << "verify " << flags.statement << ": " << counts.summary() << "\n";
    }
    return verdict_exit(counts.aggregate());
}

// ---- campaign ----

struct CampaignSection {
    std::string token;
    TheoremId id;
};

int run_campaign(unsigned trials, std::uint64_t seed, bool as_json, std::ostream& out,
                 std::ostream& err) {
    VerdictCounts counts;
    json sections = json::array();
    std::ostringstream text;
    text << "campaign: seed=" << seed << " trials=" << trials << "\n";

    // pinned strict instance: both summands the maximal ideal, coefficient 2
    {
        const std::vector<Exponent> gens{{1, 0}, {0, 1}};
        const MonomialIdeal m = MonomialIdeal::make(2, gens);
        const VerificationReport pinned = verify_sum_inclusion(m, m, Rational(2));
        const bool strict_ok = pinned.verdict == Verdict::Holds;
        counts.add(strict_ok ? pinned.verdict : Verdict::Fails);
        text << "thm1 pinned strict: " << (strict_ok ? "Holds" : "FAILS (expected strictness)")
             << "\n";
        if (as_json) {
            json j = report_to_json(pinned);
            j["pinned"] = "strict sum inclusion";
            j["strict"] = strict_ok;
            sections.push_back(json{{"theorem", "thm1-pinned"}, {"reports", json::array({j})}});
        }
    }

    for (const VerifyStatement& s : kStatements) {
        std::vector<VerificationReport> reports(trials);
        parallel_for(trials, [&](unsigned i) { reports[i] = random_trial(s.id, seed, i); });
        json arr = json::array();
        for (unsigned i = 0; i < reports.size(); ++i) {
            counts.add(reports[i].verdict);
            text << "[" << s.token << " " << i << "] " << to_string(reports[i].verdict) << " "
                 << reports[i].instance << "\n";
            if (as_json) arr.push_back(report_to_json(reports[i]));
        }
        if (as_json) sections.push_back(json{{"theorem", s.token}, {"reports", std::move(arr)}});
    }

    const CorpusResult corpus = replay_corpus();
    text << "corpus: " << corpus.total << " commands, " << corpus.mismatched << " mismatches\n";
    if (corpus.mismatched > 0) {
        err << corpus.diagnostics;
    }
    text << "campaign: " << counts.summary() << "\n";

    const bool corpus_broken = corpus.mismatched > 0;
    if (as_json) {
        json j;
        j["command"] = "campaign";
        j["inputs"] = json{{"trials", trials}, {"seed", seed}};
        j["result"] = json{{"sections", std::move(sections)},
                           {"corpus", json{{"total", corpus.total},
                                           {"mismatched", corpus.mismatched}}},
                           {"summary", counts.summary()}};
        j["verdict"] = corpus_broken ? "FAILS" : to_string(counts.aggregate());
        j["seed"] = seed;
        emit_json(out, j);
    } else {
        out << text.str();
    }
    if (corpus_broken || counts.any_fails()) return kExitFails;
    if (counts.any_inconclusive()) return kExitInconclusive;
    return kExitOk;
}

}  // namespace

unsigned worker_threads() {
    const char* env = std::getenv("MULTCTL_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || value == 0 || value > 256) return 1;
    return static_cast<unsigned>(value);
}

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(std::move(line));
    }
    std::vector<CorpusEntry> entries;
    std::size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].rfind("$ ", 0) != 0) {
            ++i;
            continue;
        }
        CorpusEntry entry;
        entry.command_line = lines[i].substr(2);
        entry.argv = split_command_line(entry.command_line);
        ++i;
        std::string expected;
        while (i < lines.size() && lines[i].rfind("$ ", 0) != 0) {
            if (lines[i].rfind("!exit ", 0) == 0) {
                entry.expected_exit = std::stoi(lines[i].substr(6));
            } else {
                expected += lines[i];
                expected += "\n";
            }
            ++i;
        }
        // trailing blank lines separate entries visually and carry no meaning
        while (expected == "\n" ||
               (expected.size() >= 2 && expected[expected.size() - 1] == '\n' &&
                expected[expected.size() - 2] == '\n')) {
            expected.pop_back();
        }
        entry.expected_output = std::move(expected);
        entries.push_back(std::move(entry));
    }
    return entries;
}

CorpusResult replay_corpus() {
    CorpusResult result;
    const std::vector<CorpusEntry> entries = parse_corpus(regression_corpus_text());
    for (const CorpusEntry& entry : entries) {
        ++result.total;
        std::ostringstream out, err;
        const int code = run(entry.argv, out, err);
        if (out.str() != entry.expected_output || code != entry.expected_exit) {
            ++result.mismatched;
            std::ostringstream diag;
            diag << "corpus mismatch: $ " << entry.command_line << "\n";
            diag << "  expected exit " << entry.expected_exit << ", got " << code << "\n";
            diag << "--- expected ---\n" << entry.expected_output;
            diag << "--- actual ---\n" << out.str();
            if (!err.str().empty()) diag << "--- stderr ---\n" << err.str();
            result.diagnostics += diag.str();
        }
    }
    return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monomial multiplier-ideal toolkit"};
    app.require_subcommand(1);

    // lct
    CommonFlags lct_flags;
    std::string lct_ideal;
    CLI::App* lct_cmd = app.add_subcommand("lct", "log canonical threshold");
    lct_cmd->add_option("ideal", lct_ideal)->required();
    lct_cmd->add_option("--vars", lct_flags.vars)->required();
    lct_cmd->add_flag("--json", lct_flags.as_json);
    lct_cmd->add_flag("--oracle", lct_flags.oracle);

    // mi
    CommonFlags mi_flags;
    std::string mi_ideal, mi_coeff;
    CLI::App* mi_cmd = app.add_subcommand("mi", "multiplier ideal at a coefficient");
    mi_cmd->add_option("ideal", mi_ideal)->required();
    mi_cmd->add_option("--vars", mi_flags.vars)->required();
    mi_cmd->add_option("--coeff", mi_coeff)->required();
    mi_cmd->add_flag("--json", mi_flags.as_json);
    mi_cmd->add_flag("--oracle", mi_flags.oracle);

    // jn
    CommonFlags jn_flags;
    std::string jn_ideal, jn_limit;
    CLI::App* jn_cmd = app.add_subcommand("jn", "jumping numbers up to a limit");
    jn_cmd->add_option("ideal", jn_ideal)->required();
    jn_cmd->add_option("--vars", jn_flags.vars)->required();
    jn_cmd->add_option("--max", jn_limit)->required();
    jn_cmd->add_flag("--json", jn_flags.as_json);
    jn_cmd->add_flag("--oracle", jn_flags.oracle);

    // amult
    CommonFlags am_flags;
    std::string am_file, am_powers, am_coeff;
    unsigned am_pmax = 0, am_level = 1, am_qmax = 2;
    CLI::App* am_cmd = app.add_subcommand("amult", "asymptotic multiplier ideal, truncated");
    am_cmd->add_option("file", am_file);
    am_cmd->add_option("--powers", am_powers);
    am_cmd->add_option("--pmax", am_pmax);
    am_cmd->add_option("--vars", am_flags.vars)->required();
    am_cmd->add_option("--coeff", am_coeff)->required();
    am_cmd->add_option("--level", am_level);
    am_cmd->add_option("--qmax", am_qmax);
    am_cmd->add_flag("--json", am_flags.as_json);

    // verify
    VerifyFlags vf;
    CLI::App* v_cmd = app.add_subcommand("verify", "machine-check a statement");
    v_cmd->add_option("statement", vf.statement)->required();
    CLI::Option* trials_opt = v_cmd->add_option("--trials", vf.trials);
    v_cmd->add_option("--seed", vf.seed);
    v_cmd->add_option("--a", vf.a_text);
    v_cmd->add_option("--b", vf.b_text);
    v_cmd->add_option("--vars", vf.vars);
    v_cmd->add_option("--vars-b", vf.vars_b);
    v_cmd->add_option("--coeff", vf.coeff_text);
    v_cmd->add_option("--eps", vf.eps_text);
    v_cmd->add_option("--max", vf.max_text);
    v_cmd->add_option("--r", vf.r);
    v_cmd->add_option("--pmax", vf.p_max);
    v_cmd->add_option("--level", vf.level);
    v_cmd->add_option("--qmax", vf.q_max);
    v_cmd->add_flag("--json", vf.as_json);
    v_cmd->add_flag("--oracle", vf.oracle);

    // campaign
    unsigned camp_trials = 5;
    std::uint64_t camp_seed = 0;
    bool camp_json = false;
    CLI::App* c_cmd = app.add_subcommand("campaign", "full verification sweep plus corpus");
    c_cmd->add_option("--trials", camp_trials);
    c_cmd->add_option("--seed", camp_seed);
    c_cmd->add_flag("--json", camp_json);

    std::vector<std::string> argv_copy(args);
    try {
        std::vector<const char*> argv;
        argv.push_back("multctl");
        for (const std::string& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help goes to stdout and is a success
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (lct_cmd->parsed()) return run_lct(lct_ideal, lct_flags, out, err);
        if (mi_cmd->parsed()) return run_mi(mi_ideal, mi_coeff, mi_flags, out, err);
        if (jn_cmd->parsed()) return run_jn(jn_ideal, jn_limit, jn_flags, out, err);
        if (am_cmd->parsed()) {
            return run_amult(am_file, am_powers, am_pmax, am_coeff, am_level, am_qmax, am_flags,
                             out, err);
        }
        if (v_cmd->parsed()) {
            vf.trials_given = trials_opt->count() > 0;
            return run_verify(vf, out, err);
        }
        if (c_cmd->parsed()) return run_campaign(camp_trials, camp_seed, camp_json, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command given\n";
    return kExitUsage;
}

}  // namespace mult::cli
