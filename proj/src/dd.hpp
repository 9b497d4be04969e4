// dd.hpp — minimal double-double helpers (error-free transforms via fma)

#pragma once

#include <cmath>

namespace qzeno::detail {

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return DD{s, err};
}

inline DD two_prod(double a, double b)
{
    const double p = a * b;
    return DD{p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b)
{
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return two_sum(s.hi, s.lo);
}

inline DD dd_add(DD a, double b)
{
    DD s = two_sum(a.hi, b);
    s.lo += a.lo;
    return two_sum(s.hi, s.lo);
}

inline DD dd_sub(DD a, DD b)
{
    return dd_add(a, DD{-b.hi, -b.lo});
}

inline DD dd_mul(DD a, DD b)
{
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD a, double b)
{
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return two_sum(p.hi, p.lo);
}

} // namespace qzeno::detail
