#ifndef HEIGHTLAB_PARSE_HPP
#define HEIGHTLAB_PARSE_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "heightlab/bivar_poly.hpp"

namespace hl {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Polynomial expressions in X and Y: integer and rational (a/b) literals,
/// + - * ^, parentheses, unary minus; whitespace-insensitive. Implicit
/// multiplication is allowed between a literal and a variable ("2X^3").
/// Round-trips with BivarPoly::str().
BivarPoly parse_poly(const std::string& text);

/// Rational literal "a", "-a", or "a/b".
Rat parse_rational(const std::string& text);

struct CurveSpec {
    std::string name;
    std::string poly_text;
    BivarPoly poly;
    bool abs_irreducible = false;  // user assertion, not verified
};

/// key=value file with keys: name, poly, abs_irreducible (true/false).
/// Lines starting with '#' and blank lines are ignored.
CurveSpec parse_curve_file(const std::string& path);
CurveSpec parse_curve_text(const std::string& text, const std::string& origin);

/// Generic key=value file (same comment rules).
std::map<std::string, std::string> parse_kv_file(const std::string& path);
std::map<std::string, std::string> parse_kv_text(const std::string& text,
                                                 const std::string& origin);

}  // namespace hl

#endif
