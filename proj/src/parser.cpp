#include "mult/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace mult {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", pos);
        }
        ++pos;
    }
    bool accept(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_name(Cursor& cur) {
    cur.skip_ws();
    const std::size_t start = cur.pos;
    if (start >= cur.text.size() || !name_start(cur.text[start])) {
        throw ParseError("expected a variable name", start);
    }
    std::size_t end = start;
    while (end < cur.text.size() && name_char(cur.text[end])) ++end;
    cur.pos = end;
    return cur.text.substr(start, end - start);
}

unsigned long read_uint(Cursor& cur) {
    cur.skip_ws();
    const std::size_t start = cur.pos;
    if (start >= cur.text.size() || !std::isdigit(static_cast<unsigned char>(cur.text[start]))) {
        throw ParseError("expected a number", start);
    }
    std::size_t end = start;
    while (end < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[end]))) ++end;
    cur.pos = end;
    const std::string digits = cur.text.substr(start, end - start);
    if (digits.size() > 9) throw ParseError("number is too large", start);
    return std::stoul(digits);
}

Exponent parse_term(Cursor& cur, const std::vector<std::string>& var_names) {
    Exponent g(var_names.size(), 0);
    if (cur.peek() == '1') {
        ++cur.pos;
        return g;
    }
    for (;;) {
        const std::size_t name_pos = cur.pos;
        const std::string name = read_name(cur);
        const auto it = std::find(var_names.begin(), var_names.end(), name);
        if (it == var_names.end()) {
            throw ParseError("unknown variable '" + name + "'", name_pos);
        }
        const std::size_t index = static_cast<std::size_t>(it - var_names.begin());
        unsigned long exponent = 1;
        cur.skip_ws();
        if (cur.accept('^')) exponent = read_uint(cur);
        if (g[index] + exponent > 1000000ul) throw ParseError("exponent is too large", name_pos);
        g[index] += static_cast<unsigned>(exponent);
        cur.skip_ws();
        if (!cur.accept('*')) break;
    }
    return g;
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& var_names) {
    Cursor cur{text};
    cur.expect('<');
    cur.skip_ws();
    if (cur.accept('0')) {
        cur.expect('>');
        if (!cur.done()) throw ParseError("trailing input after the ideal", cur.pos);
        return MonomialIdeal::zero(var_names.size());
    }
    std::vector<Exponent> gens;
    gens.push_back(parse_term(cur, var_names));
    while (cur.accept(',')) gens.push_back(parse_term(cur, var_names));
    cur.expect('>');
    if (!cur.done()) throw ParseError("trailing input after the ideal", cur.pos);
    return MonomialIdeal::make(var_names.size(), std::move(gens));
}

Rational parse_rational(const std::string& text) {
    Cursor cur{text};
    cur.skip_ws();
    const bool negative = cur.accept('-');
    const Int num(read_uint(cur));
    Int den(1);
    cur.skip_ws();
    if (cur.accept('/')) {
        den = Int(read_uint(cur));
        if (den == 0) throw ParseError("denominator must be positive", cur.pos);
    }
    if (!cur.done()) throw ParseError("trailing input after the number", cur.pos);
    return make_rational(negative ? -num : num, den);
}

std::vector<std::string> parse_var_names(const std::string& text) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    Cursor cur{text};
    for (;;) {
        const std::string name = read_name(cur);
        if (!seen.insert(name).second) {
            throw ParseError("duplicate variable '" + name + "'", cur.pos);
        }
        names.push_back(name);
        cur.skip_ws();
        if (!cur.accept(',')) break;
    }
    if (!cur.done()) throw ParseError("trailing input after the variable list", cur.pos);
    return names;
}

GradedSystem parse_graded_system(const std::string& text,
                                 const std::vector<std::string>& var_names) {
    std::istringstream in(text);
    std::string line;
    bool have_arity = false;
    bool have_p_max = false;
    unsigned long arity = 0;
    unsigned long p_max = 0;
    std::map<unsigned long, MonomialIdeal> levels;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("line " + std::to_string(line_number) + ": expected 'key = value'",
                             0);
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        const auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        if (key == "arity") {
            Cursor cur{value};
            arity = read_uint(cur);
            if (!cur.done()) throw ParseError("bad arity value", cur.pos);
            have_arity = true;
        } else if (key == "p_max") {
            Cursor cur{value};
            p_max = read_uint(cur);
            if (!cur.done()) throw ParseError("bad p_max value", cur.pos);
            have_p_max = true;
        } else {
            Cursor cur{key};
            const unsigned long level = read_uint(cur);
            if (!cur.done()) {
                throw ParseError("line " + std::to_string(line_number) + ": unknown key '" + key +
                                     "'",
                                 0);
            }
            if (levels.count(level)) {
                throw ParseError("level " + std::to_string(level) + " appears twice", 0);
            }
            levels.emplace(level, parse_ideal(value, var_names));
        }
    }
    if (!have_arity) throw ParseError("missing arity header", 0);
    if (!have_p_max) throw ParseError("missing p_max header", 0);
    if (arity != var_names.size()) {
        throw ParseError("arity header disagrees with the variable list", 0);
    }
    if (p_max == 0) throw ParseError("p_max must be at least 1", 0);
    GradedSystem system;
    system.arity = arity;
    system.p_max = static_cast<unsigned>(p_max);
    for (unsigned long p = 1; p <= p_max; ++p) {
        const auto it = levels.find(p);
        if (it == levels.end()) {
            throw ParseError("missing level " + std::to_string(p), 0);
        }
        system.members.push_back(it->second);
    }
    if (levels.size() != p_max) {
        throw ParseError("levels beyond p_max are not allowed", 0);
    }
    return system;
}

std::vector<std::string> split_command_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::string token;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            if (line[i] == '"') {
                const auto close = line.find('"', i + 1);
                if (close == std::string::npos) {
                    throw ParseError("unterminated quote", i);
                }
                token += line.substr(i + 1, close - i - 1);
                i = close + 1;
            } else {
                token += line[i];
                ++i;
            }
        }
        tokens.push_back(std::move(token));
    }
    return tokens;
}

}  // namespace mult
