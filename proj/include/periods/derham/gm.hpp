#ifndef PERIODS_DERHAM_GM_HPP
#define PERIODS_DERHAM_GM_HPP

#include "periods/numkernel/laurent.hpp"

namespace periods::derham {

// form dx = coefficient * dx/x + d(primitive) on G_m.
struct GmReduction {
    Rational coefficient;
    RatLaurent primitive;
};

GmReduction reduce_gm(const RatLaurent& form);

// A relative class on (G_m, {1, q}): the form P(x) dx with values u at 1 and v at q.
struct RelativeClass {
    RatLaurent form;
    Rational u;
    Rational v;
};

// Coboundary a(h) = (h' dx, h(1), h(q)).
RelativeClass relative_coboundary(const Rational& q, const RatLaurent& h);

// class = alpha * (dx/(q-1), 0, 0) + beta * (dx/x, 0, 0) + a(h).
struct RelativeReduction {
    Rational alpha;
    Rational beta;
    RatLaurent h;
};

// Needs q != 0, 1.
RelativeReduction reduce_relative_log(const Rational& q, const RelativeClass& cls);

bool certificate_holds(const Rational& q, const RelativeClass& cls, const RelativeReduction& r);

} // namespace periods::derham

#endif
