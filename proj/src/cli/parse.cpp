#include "periods/cli/parse.hpp"

#include "periods/numkernel/errors.hpp"

namespace periods::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

template <class F>
auto as_parse_error(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

} // namespace

Rational read_rational(const std::string& s)
{
    return as_parse_error([&] { return parse_rational(trim(s)); });
}

RatLaurent read_laurent(const std::string& s)
{
    return as_parse_error([&] { return parse_laurent(trim(s)); });
}

RatPoly read_poly(const std::string& s)
{
    return as_parse_error([&] { return parse_poly(trim(s)); });
}

} // namespace periods::cli
