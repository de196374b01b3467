#ifndef MULT_PARSER_HPP
#define MULT_PARSER_HPP

#include "mult/graded.hpp"
#include "mult/monomial.hpp"
#include "mult/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mult {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// ideal  := "<" term ("," term)* ">" | "<0>"
// term   := "1" | factor ("*" factor)*
// factor := varname ("^" uint)?
// Whitespace between tokens is permitted.
MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& var_names);

// "p" or "p/q", optional leading minus, q > 0.
Rational parse_rational(const std::string& text);

// Comma-separated distinct names matching [A-Za-z_][A-Za-z0-9_]*.
std::vector<std::string> parse_var_names(const std::string& text);

// Key/value lines: "arity = <uint>", "p_max = <uint>", then one
// "<level> = <ideal>" line per level 1..p_max.  Blank lines and lines
// starting with '#' are skipped.
GradedSystem parse_graded_system(const std::string& text,
                                 const std::vector<std::string>& var_names);

// Whitespace-separated tokens; double quotes group a token, no escapes.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace mult

#endif
