#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hoch {

using Scalar = mpq_class;

// Accepts "p/q", "p" and a leading '+'.
inline Scalar parse_scalar(std::string s)
{
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    Scalar q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline int parity(long x) { return static_cast<int>(x & 1); }

inline Scalar sign(long e) { return (e & 1) ? Scalar(-1) : Scalar(1); }

inline Scalar factorial(int n)
{
    Scalar r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace hoch
