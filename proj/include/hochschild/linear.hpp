#pragma once

#include "scalar.hpp"

#include <climits>
#include <map>
#include <utility>

namespace hoch {

// Finite formal sum of basis keys with exact coefficients. Zero coefficients
// are never stored, so map equality is equality of vectors.
template <class K>
class Lin {
public:
    using map_type = std::map<K, Scalar>;

    Lin() = default;
    Lin(const K& k, const Scalar& c = 1) { add(k, c); }

    void add(const K& k, const Scalar& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                t_.erase(it);
        }
    }
    void add(const Lin& o, const Scalar& c = 1)
    {
        if (c == 0)
            return;
        for (const auto& [k, v] : o.t_)
            add(k, v * c);
    }

    Lin& operator+=(const Lin& o) { add(o, 1); return *this; }
    Lin& operator-=(const Lin& o) { add(o, -1); return *this; }
    Lin& operator*=(const Scalar& c)
    {
        if (c == 0)
            t_.clear();
        else
            for (auto& kv : t_)
                kv.second *= c;
        return *this;
    }
    friend Lin operator+(Lin a, const Lin& b) { return a += b; }
    friend Lin operator-(Lin a, const Lin& b) { return a -= b; }
    friend Lin operator*(const Scalar& c, Lin a) { return a *= c; }
    bool operator==(const Lin& o) const { return t_ == o.t_; }

    Scalar coeff(const K& k) const
    {
        auto it = t_.find(k);
        return it == t_.end() ? Scalar(0) : it->second;
    }
    bool empty() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }
    const map_type& terms() const { return t_; }
    auto lower_bound(const K& k) const { return t_.lower_bound(k); }

    template <class F>
    Lin map_linear(F&& f) const
    {
        Lin r;
        for (const auto& [k, v] : t_)
            r.add(f(k), v);
        return r;
    }

private:
    map_type t_;
};

// Apply a basis-level linear map f : K -> Lin<K2> to a vector.
template <class K2, class K, class F>
Lin<K2> apply_linear(const Lin<K>& v, F&& f)
{
    Lin<K2> r;
    for (const auto& [k, c] : v)
        r.add(f(k), c);
    return r;
}

// Element of V[[u]] or V((u)) truncated to a window. Coefficients above
// valid_hi are unknown (they depend on input that was cut off); everything at
// or below valid_hi is exact.
template <class K>
struct USeries {
    std::map<int, Lin<K>> at;
    int valid_hi = INT_MAX;

    USeries() = default;
    USeries(int u, const Lin<K>& v) { add(u, v); }

    void add(int u, const K& k, const Scalar& c)
    {
        auto& l = at[u];
        l.add(k, c);
        if (l.empty())
            at.erase(u);
    }
    void add(int u, const Lin<K>& v, const Scalar& c = 1)
    {
        if (v.empty() || c == 0)
            return;
        auto& l = at[u];
        l.add(v, c);
        if (l.empty())
            at.erase(u);
    }
    void add(const USeries& o, const Scalar& c = 1, int shift = 0)
    {
        for (const auto& [u, v] : o.at)
            add(u + shift, v, c);
        if (o.valid_hi != INT_MAX)
            valid_hi = std::min(valid_hi, o.valid_hi + shift);
    }
    const Lin<K>& coeff(int u) const
    {
        static const Lin<K> zero;
        auto it = at.find(u);
        return it == at.end() ? zero : it->second;
    }
    bool empty() const { return at.empty(); }
    int lowest() const { return at.empty() ? INT_MAX : at.begin()->first; }
    int highest() const { return at.empty() ? INT_MIN : at.rbegin()->first; }

    // Drop coefficients above hi; they become unknown.
    void truncate_above(int hi)
    {
        for (auto it = at.upper_bound(hi); it != at.end();)
            it = at.erase(it);
        valid_hi = std::min(valid_hi, hi);
    }
    USeries& operator*=(const Scalar& c)
    {
        if (c == 0)
            at.clear();
        else
            for (auto& kv : at)
                kv.second *= c;
        return *this;
    }
    USeries shifted(int du) const
    {
        USeries r;
        for (const auto& [u, v] : at)
            r.at.emplace(u + du, v);
        r.valid_hi = valid_hi == INT_MAX ? INT_MAX : valid_hi + du;
        return r;
    }
};

// Equality on the range where both sides are exact, optionally capped.
template <class K>
bool equal_upto(const USeries<K>& a, const USeries<K>& b, int cap = INT_MAX)
{
    int hi = std::min({a.valid_hi, b.valid_hi, cap});
    auto ia = a.at.begin();
    auto ib = b.at.begin();
    for (;;) {
        while (ia != a.at.end() && ia->first <= hi && ia->second.empty())
            ++ia;
        while (ib != b.at.end() && ib->first <= hi && ib->second.empty())
            ++ib;
        bool ea = ia == a.at.end() || ia->first > hi;
        bool eb = ib == b.at.end() || ib->first > hi;
        if (ea || eb)
            return ea && eb;
        if (ia->first != ib->first || !(ia->second == ib->second))
            return false;
        ++ia;
        ++ib;
    }
}

template <class K>
bool is_zero_upto(const USeries<K>& a, int cap = INT_MAX)
{
    return equal_upto(a, USeries<K>{}, cap);
}

// Apply a u-linear operator given on basis keys as f : K -> USeries<K2>.
template <class K2, class K, class F>
USeries<K2> apply_series(const USeries<K>& s, F&& f)
{
    USeries<K2> r;
    for (const auto& [u, v] : s.at)
        for (const auto& [k, c] : v)
            r.add(f(k), c, u);
    r.valid_hi = s.valid_hi;
    return r;
}

} // namespace hoch
