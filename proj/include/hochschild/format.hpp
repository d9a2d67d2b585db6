#pragma once

#include "ainfinity.hpp"

#include <sstream>

namespace hoch {

inline std::string chain_str(const GradedAlgebra& A, const Chain& c)
{
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "⊗" : "") + A.basis_name(c[i]);
    return s;
}

// (a,b)->c for an elementary cochain, "c" for a 0-cochain
inline std::string elem_str(const GradedAlgebra& A, const Elem& e)
{
    if (e.in.empty())
        return A.basis_name(e.out);
    std::string s = "(";
    for (std::size_t i = 0; i < e.in.size(); ++i)
        s += (i ? "," : "") + A.basis_name(e.in[i]);
    return s + ")->" + A.basis_name(e.out);
}

template <class K, class F>
std::string lin_str(const Lin<K>& v, F&& key_str)
{
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << to_string(c) << "*";
        os << "[" << key_str(k) << "]";
    }
    return os.str();
}

inline std::string cochain_str(const GradedAlgebra& A, const Cochain& D)
{
    return lin_str(D, [&](const Elem& e) { return elem_str(A, e); });
}

inline std::string chainvec_str(const GradedAlgebra& A, const ChainVec& v)
{
    return lin_str(v, [&](const Chain& c) { return chain_str(A, c); });
}

template <class K, class F>
std::string series_str(const USeries<K>& s, F&& key_str)
{
    std::string out;
    for (const auto& [u, v] : s.at) {
        if (v.empty())
            continue;
        if (!out.empty())
            out += " + ";
        out += "u^" + std::to_string(u) + "(" + lin_str(v, key_str) + ")";
    }
    return out.empty() ? "0" : out;
}

inline std::string cyclic_str(const GradedAlgebra& A, const CyclicChain& s)
{
    return series_str(s, [&](const Chain& c) { return chain_str(A, c); });
}

inline std::string ccword_str(const GradedAlgebra& A, const CCWord& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? " ⊗ " : "") + elem_str(A, w[i]);
    return s;
}

} // namespace hoch
