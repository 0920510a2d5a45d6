#include "periods/numkernel/laurent.hpp"

#include "periods/numkernel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace periods {

RatLaurent::RatLaurent(int min_deg, std::vector<Rational> coeffs) : min_(min_deg), c_(std::move(coeffs))
{
    trim();
}

RatLaurent::RatLaurent(const RatPoly& p) : min_(0), c_(p.coeffs()) { trim(); }

RatLaurent::RatLaurent(const Rational& c)
{
    if (c != 0) c_.push_back(c);
}

RatLaurent::RatLaurent(long c)
{
    if (c != 0) c_.emplace_back(c);
}

RatLaurent RatLaurent::monomial(const Rational& c, int degree) { return RatLaurent(degree, {c}); }

void RatLaurent::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_ += static_cast<int>(lead);
    }
    if (c_.empty()) min_ = 0;
}

Rational RatLaurent::coeff(int k) const
{
    int i = k - min_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

RatLaurent RatLaurent::derivative() const
{
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * (min_ + static_cast<int>(i));
    return RatLaurent(min_ - 1, std::move(v));
}

RatLaurent RatLaurent::antiderivative() const
{
    if (coeff(-1) != 0) throw DomainError("antiderivative of a Laurent polynomial with an x^-1 term");
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int k = min_ + static_cast<int>(i);
        if (k != -1) v[i] = c_[i] / (k + 1);
    }
    return RatLaurent(min_ + 1, std::move(v));
}

RatLaurent RatLaurent::invert_variable() const
{
    if (c_.empty()) return {};
    std::vector<Rational> v(c_.rbegin(), c_.rend());
    return RatLaurent(-max_deg(), std::move(v));
}

Rational RatLaurent::eval(const Rational& x) const
{
    if (x == 0 && !c_.empty() && min_ < 0) throw DomainError("Laurent polynomial evaluated at its pole");
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    if (min_ > 0) {
        Rational p = 1;
        for (int k = 0; k < min_; ++k) p *= x;
        r *= p;
    } else if (min_ < 0) {
        Rational p = 1;
        for (int k = 0; k < -min_; ++k) p *= x;
        r /= p;
    }
    return r;
}

RatPoly RatLaurent::polynomial_part() const
{
    if (c_.empty()) return {};
    std::vector<Rational> v;
    for (int k = 0; k <= max_deg(); ++k) v.push_back(coeff(k));
    return RatPoly(std::move(v));
}

RatLaurent& RatLaurent::operator+=(const RatLaurent& o)
{
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    int lo = std::min(min_, o.min_);
    int hi = std::max(max_deg(), o.max_deg());
    std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(min_ - lo) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[static_cast<std::size_t>(o.min_ - lo) + i] += o.c_[i];
    min_ = lo;
    c_ = std::move(v);
    trim();
    return *this;
}

RatLaurent& RatLaurent::operator-=(const RatLaurent& o) { return *this += -o; }

RatLaurent& RatLaurent::operator*=(const RatLaurent& o)
{
    if (c_.empty() || o.c_.empty()) return *this = RatLaurent();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    min_ += o.min_;
    c_ = std::move(v);
    trim();
    return *this;
}

RatLaurent& RatLaurent::operator*=(const Rational& s)
{
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

RatLaurent RatLaurent::operator-() const
{
    RatLaurent r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string RatLaurent::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (int k = max_deg(); k >= min_; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (k == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += var;
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

RatLaurent operator+(const RatLaurent& a, const RatLaurent& b) { RatLaurent r(a); r += b; return r; }
RatLaurent operator-(const RatLaurent& a, const RatLaurent& b) { RatLaurent r(a); r -= b; return r; }
RatLaurent operator*(const RatLaurent& a, const RatLaurent& b) { RatLaurent r(a); r *= b; return r; }
RatLaurent operator*(const Rational& s, const RatLaurent& p) { RatLaurent r(p); r *= s; return r; }

namespace {

class TermParser {
public:
    TermParser(const std::string& text, const std::string& var) : s_(text), var_(var) {}

    RatLaurent parse()
    {
        std::map<int, Rational> terms;
        skip_ws();
        if (at_end()) fail("empty expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [c, k] = term();
            terms[k] += sign * c;
            first = false;
            skip_ws();
        }
        RatLaurent r;
        for (const auto& [k, c] : terms) r += RatLaurent::monomial(c, k);
        return r;
    }

private:
    std::pair<Rational, int> term()
    {
        Rational c = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            have_coeff = true;
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                Rational d = number();
                if (d == 0) fail("zero denominator");
                c /= d;
                skip_ws();
            }
            if (peek() == '*') {
                get();
                skip_ws();
                if (!starts_var()) fail("expected '" + var_ + "' after '*'");
            }
        }
        if (!starts_var()) {
            if (!have_coeff) fail("expected a number or '" + var_ + "'");
            return {c, 0};
        }
        pos_ += var_.size();
        skip_ws();
        int k = 1;
        if (peek() == '^') {
            get();
            skip_ws();
            int sign = 1;
            if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
            Rational e = number();
            if (e > 10000) fail("exponent too large");
            k = sign * static_cast<int>(e.get_num().get_si());
        }
        return {c, k};
    }

    Rational number()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Rational(Integer(s_.substr(start, pos_ - start)));
    }

    bool starts_var() const { return s_.compare(pos_, var_.size(), var_) == 0; }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw DomainError("parse error at position " + std::to_string(pos_) + " in '" + s_ + "': " + why);
    }

    const std::string& s_;
    const std::string& var_;
    std::size_t pos_ = 0;
};

} // namespace

RatLaurent parse_laurent(const std::string& text, const std::string& var) { return TermParser(text, var).parse(); }

RatPoly parse_poly(const std::string& text, const std::string& var)
{
    RatLaurent l = parse_laurent(text, var);
    if (!l.is_zero() && l.min_deg() < 0) throw DomainError("negative exponent in a polynomial: '" + text + "'");
    return l.polynomial_part();
}

} // namespace periods
