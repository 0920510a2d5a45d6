#ifndef PERIODS_CLI_PARSE_HPP
#define PERIODS_CLI_PARSE_HPP

#include "periods/numkernel/laurent.hpp"

#include <stdexcept>
#include <string>

namespace periods::cli {

// Malformed command-line input; maps to the usage exit code.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The numkernel parsers with surrounding blanks trimmed and DomainError
// turned into ParseError.
Rational read_rational(const std::string& s);
RatLaurent read_laurent(const std::string& s);
RatPoly read_poly(const std::string& s);

} // namespace periods::cli

#endif
