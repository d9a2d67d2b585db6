#pragma once

#include <hochschild/cochain.hpp>
#include <hochschild/chain.hpp>

#include <random>

namespace hoch::testing {

// Seeded generators for property tests.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Scalar small_rational()
    {
        int p = uniform(-3, 3);
        int q = uniform(1, 2);
        Scalar r(p, q);
        r.canonicalize();
        return r;
    }

    Elem elem(const GradedAlgebra& A, int max_arity)
    {
        int d = A.dim() > 1 ? uniform(0, max_arity) : 0;
        Elem e;
        for (int i = 0; i < d; ++i)
            e.in.push_back(uniform(1, A.dim() - 1));
        e.out = uniform(0, A.dim() - 1);
        return e;
    }

    // Homogeneous cochain with a few terms of the degree of a random seed term.
    Cochain cochain(const GradedAlgebra& A, int max_arity, int terms = 3)
    {
        Elem seed = elem(A, max_arity);
        int d = edeg(A, seed);
        Cochain c(seed, 1);
        for (int t = 1; t < terms * 4 && static_cast<int>(c.size()) < terms; ++t) {
            Elem e = elem(A, max_arity);
            if (edeg(A, e) == d)
                c.add(e, small_rational());
        }
        return c;
    }

    Chain chain(const GradedAlgebra& A, int max_len)
    {
        int n = A.dim() > 1 ? uniform(0, max_len) : 0;
        Chain c{uniform(0, A.dim() - 1)};
        for (int i = 0; i < n; ++i)
            c.push_back(uniform(1, A.dim() - 1));
        return c;
    }
};

} // namespace hoch::testing

#include <hochschild/ainfinity.hpp>

namespace hoch::testing {

inline CCWord ccword(Gen& g, const GradedAlgebra& A, int max_len, int max_arity, bool unit_head = false)
{
    CCWord w{unit_head ? unit_elem() : g.elem(A, max_arity)};
    int L = A.dim() > 1 ? g.uniform(unit_head ? 1 : 0, max_len) : 0;
    for (int i = 0; i < L; ++i) {
        Elem e = g.elem(A, max_arity);
        while (is_unit(e))
            e = g.elem(A, max_arity);
        w.push_back(e);
    }
    return w;
}

} // namespace hoch::testing
