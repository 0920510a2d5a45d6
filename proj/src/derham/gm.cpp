#include "periods/derham/gm.hpp"

#include "periods/numkernel/errors.hpp"

namespace periods::derham {

GmReduction reduce_gm(const RatLaurent& form)
{
    Rational c = form.coeff(-1);
    RatLaurent rest = form - RatLaurent::monomial(c, -1);
    return {c, rest.antiderivative()};
}

RelativeClass relative_coboundary(const Rational& q, const RatLaurent& h)
{
    return {h.derivative(), h.eval(1), h.eval(q)};
}

RelativeReduction reduce_relative_log(const Rational& q, const RelativeClass& cls)
{
    if (q == 0 || q == 1) throw DomainError("relative log needs q != 0, 1");
    GmReduction g = reduce_gm(cls.form);
    // What is left after removing beta dx/x and a(h1) is (0, u', v').
    Rational u1 = cls.u - g.primitive.eval(1);
    Rational v1 = cls.v - g.primitive.eval(q);
    // a(v') removes the value at q, and (0, w, 0) = w (dx/(q-1), 0, 0) - a(w (x-q)/(q-1)).
    Rational w = u1 - v1;
    RatLaurent line(0, {-q / (q - 1), Rational(1) / (q - 1)});
    RatLaurent h = g.primitive + RatLaurent(v1) - w * line;
    return {w, g.coefficient, h};
}

bool certificate_holds(const Rational& q, const RelativeClass& cls, const RelativeReduction& r)
{
    RelativeClass ah = relative_coboundary(q, r.h);
    RatLaurent form = ah.form + RatLaurent::monomial(r.alpha / (q - 1), 0) + RatLaurent::monomial(r.beta, -1);
    return form == cls.form && ah.u == cls.u && ah.v == cls.v;
}

} // namespace periods::derham
