#ifndef PERIODS_TESTS_GENERATORS_HPP
#define PERIODS_TESTS_GENERATORS_HPP

#include "periods/numkernel/laurent.hpp"

#include <random>

namespace periods::testing {

inline Rational random_rational(std::mt19937_64& rng, long range = 12)
{
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, range);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline RatPoly random_poly(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.push_back(random_rational(rng));
    return RatPoly(std::move(c));
}

// Laurent polynomial with exponents in [lo, hi].
inline RatLaurent random_laurent(std::mt19937_64& rng, int lo, int hi)
{
    std::vector<Rational> c;
    for (int k = lo; k <= hi; ++k) c.push_back(random_rational(rng));
    return RatLaurent(lo, std::move(c));
}

} // namespace periods::testing

#endif
