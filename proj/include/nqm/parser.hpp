#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nqm/algebra.hpp"
#include "nqm/kashiwara.hpp"

namespace nqm {

/// Position-annotated syntax error; the CLI maps it to exit code 1.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(size_t position, const std::string& message)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Grammar (whitespace insensitive):
///   sum     := ['-'] product (('+'|'-') product)*
///   product := factor ('*' factor)*
///   factor  := 'xm(' int ')' | 'Wpsi(' int ')' | 'gam(' int '/2)'
///            | rational | 'q^' exponent | 'gam^' exponent | '(' sum ')'
///   exponent:= int | '(' int '/2)' | '(' int ')'
///   rational:= int ['/' int]
///
/// parse_element interprets words in the module algebra (normalizing with
/// the rewrite rules, folding gam factors into coefficients) and rejects
/// Wpsi; parse_kelement keeps free operator words.
Element parse_element(std::string_view text);
KElement parse_kelement(std::string_view text);

}  // namespace nqm
