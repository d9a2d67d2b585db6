#pragma once

#include "chain.hpp"

#include <optional>

namespace hoch {

// Incremental exact echelon form over ℚ. Vectors are sparse (Vec); every
// stored pivot vector remembers its expression in the inserted columns, so
// kernels and preimages come out of the same elimination.
class Reducer {
public:
    explicit Reducer(std::size_t max_entries = 20000) : cap_(max_entries) {}

    // Inserts column number `col`; returns the kernel relation it closes, if any.
    std::optional<Vec> insert(const Vec& v, int col)
    {
        entries_ += v.size();
        if (entries_ > cap_)
            throw std::length_error("matrix exceeds the entry cap of " + std::to_string(cap_));
        Vec r = v, combo(col, Scalar(1));
        reduce(r, combo);
        ++cols_;
        if (r.empty())
            return combo;
        auto [row, lead] = *r.begin();
        Scalar inv = Scalar(1) / lead;
        r *= inv;
        combo *= inv;
        pivots_.emplace(row, Pivot{std::move(r), std::move(combo)});
        return std::nullopt;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    int columns() const { return cols_; }

    // x with Σ x_j col_j = target, or nullopt; `residual` receives the reduced
    // remainder, nonzero exactly when target is outside the column span.
    std::optional<Vec> preimage(const Vec& target, Vec* residual = nullptr) const
    {
        Vec r = target, combo;
        combo.add(-1, 1); // marker for the target itself
        reduce(r, combo);
        if (residual)
            *residual = r;
        if (!r.empty())
            return std::nullopt;
        Vec x;
        for (const auto& [j, c] : combo)
            if (j >= 0)
                x.add(j, -c);
        return x;
    }

private:
    struct Pivot {
        Vec vec, combo;
    };
    std::map<int, Pivot> pivots_;
    std::size_t cap_, entries_ = 0;
    int cols_ = 0;

    void reduce(Vec& r, Vec& combo) const
    {
        auto it = r.begin();
        while (it != r.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const int row = it->first;
            Scalar f = it->second;
            for (const auto& [k, c] : p->second.vec)
                r.add(k, -f * c);
            for (const auto& [k, c] : p->second.combo)
                combo.add(k, -f * c);
            it = r.lower_bound(row);
        }
    }
};

// A sparse exact matrix stored by columns.
struct ExactMatrix {
    int rows = 0, cols = 0;
    std::vector<Vec> columns;

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

    static ExactMatrix dense(const std::vector<std::vector<Scalar>>& m)
    {
        ExactMatrix M(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
        for (int i = 0; i < M.rows; ++i)
            for (int j = 0; j < M.cols; ++j)
                M.columns[j].add(i, m[i][j]);
        return M;
    }
    static ExactMatrix identity(int n)
    {
        ExactMatrix M(n, n);
        for (int i = 0; i < n; ++i)
            M.columns[i].add(i, 1);
        return M;
    }
    Scalar at(int i, int j) const { return columns.at(j).coeff(i); }
};

struct Elimination {
    Reducer red;
    std::vector<Vec> kernel;
};

inline Elimination eliminate(const ExactMatrix& M, std::size_t cap = 20000)
{
    Elimination e{Reducer(cap), {}};
    for (int j = 0; j < M.cols; ++j)
        if (auto k = e.red.insert(M.columns[j], j))
            e.kernel.push_back(std::move(*k));
    return e;
}

inline int rank(const ExactMatrix& M, std::size_t cap = 20000) { return eliminate(M, cap).red.rank(); }

inline std::vector<Vec> kernel_basis(const ExactMatrix& M, std::size_t cap = 20000)
{
    return eliminate(M, cap).kernel;
}

// A finite window of a chain complex: dims[n] = dim C_n, d[n] : C_{n+1} -> C_n.
struct ComplexWindow {
    std::vector<int> dims;
    std::vector<ExactMatrix> d;
    std::size_t cap = 20000;
};

inline ExactMatrix multiply(const ExactMatrix& X, const ExactMatrix& Y)
{
    ExactMatrix R(X.rows, Y.cols);
    for (int j = 0; j < Y.cols; ++j)
        for (const auto& [k, c] : Y.columns[j])
            for (const auto& [i, v] : X.columns[k])
                R.columns[j].add(i, c * v);
    return R;
}

// dim H_n for the slots whose outgoing and incoming maps are both present:
// n = 0 … dims.size() - 2 (slot 0 has no outgoing map).
inline std::vector<int> homology_dims(const ComplexWindow& W)
{
    for (std::size_t n = 0; n + 1 < W.d.size(); ++n) {
        ExactMatrix sq = multiply(W.d[n], W.d[n + 1]);
        for (const auto& col : sq.columns)
            if (!col.empty())
                throw std::runtime_error("d^2 != 0 in slot " + std::to_string(n + 2));
    }
    std::vector<int> ranks;
    for (const auto& m : W.d)
        ranks.push_back(rank(m, W.cap));
    std::vector<int> out;
    for (std::size_t n = 0; n + 1 < W.dims.size() && n < W.d.size(); ++n) {
        int ker = W.dims[n] - (n == 0 ? 0 : ranks[n - 1]);
        out.push_back(ker - ranks[n]);
    }
    return out;
}

// Primitive p with d p = z for d : C_{n+1} -> C_n, or nullopt (the cycle is
// nonzero in homology; `residual` receives its reduced form).
inline std::optional<Vec> is_boundary(const ExactMatrix& d, const Vec& z, Vec* residual = nullptr,
                                      std::size_t cap = 20000)
{
    return eliminate(d, cap).red.preimage(z, residual);
}

// Generic keyed variants: columns given as images of labelled sources.
template <class Src, class Tgt>
struct KeyedSystem {
    std::vector<Src> sources;
    std::map<Tgt, int> row_index;
    Reducer red;
    std::vector<Lin<Src>> kernel;

    explicit KeyedSystem(std::size_t cap = 20000) : red(cap) {}

    void add(const Src& s, const Lin<Tgt>& image)
    {
        Vec col;
        for (const auto& [t, c] : image)
            col.add(row(t), c);
        const int j = static_cast<int>(sources.size());
        sources.push_back(s);
        if (auto k = red.insert(col, j)) {
            Lin<Src> v;
            for (const auto& [i, c] : *k)
                v.add(sources[i], c);
            kernel.push_back(std::move(v));
        }
    }

    std::optional<Lin<Src>> preimage(const Lin<Tgt>& target, Lin<Tgt>* residual = nullptr)
    {
        Vec col;
        for (const auto& [t, c] : target)
            col.add(row(t), c);
        Vec res;
        auto x = red.preimage(col, &res);
        if (residual) {
            std::vector<Tgt> keys(row_index.size());
            for (const auto& [t, i] : row_index)
                keys[i] = t;
            *residual = Lin<Tgt>();
            for (const auto& [i, c] : res)
                residual->add(keys[i], c);
        }
        if (!x)
            return std::nullopt;
        Lin<Src> out;
        for (const auto& [j, c] : *x)
            out.add(sources[j], c);
        return out;
    }

private:
    int row(const Tgt& t)
    {
        auto [it, fresh] = row_index.emplace(t, static_cast<int>(row_index.size()));
        (void)fresh;
        return it->second;
    }
};

// ---- Hochschild homology -------------------------------------------------

struct ChainBasis {
    std::vector<Chain> basis;
    std::map<Chain, int> index;
};

inline ChainBasis chain_basis(const GradedAlgebra& A, int n, bool normalized)
{
    ChainBasis cb;
    cb.basis = chains_of_length(A, n, normalized);
    for (std::size_t i = 0; i < cb.basis.size(); ++i)
        cb.index.emplace(cb.basis[i], static_cast<int>(i));
    return cb;
}

// The b-complex C_0 … C_{top} (normalized or not) as a window.
inline ComplexWindow hochschild_window(const GradedAlgebra& A, int top, bool normalized,
                                       std::size_t cap = 20000)
{
    if (A.has_differential())
        throw std::invalid_argument("hochschild_window: algebra '" + A.name +
                                    "' has a differential; length does not grade b + δ");
    ComplexWindow W;
    W.cap = cap;
    std::vector<ChainBasis> bases;
    for (int n = 0; n <= top; ++n) {
        bases.push_back(chain_basis(A, n, normalized));
        W.dims.push_back(static_cast<int>(bases.back().basis.size()));
    }
    for (int n = 0; n < top; ++n) {
        ExactMatrix M(W.dims[n], W.dims[n + 1]);
        for (int j = 0; j < W.dims[n + 1]; ++j)
            for (const auto& [c, v] : b_op(A, bases[n + 1].basis[j], normalized))
                M.columns[j].add(bases[n].index.at(c), v);
        W.d.push_back(std::move(M));
    }
    return W;
}

// dim HH_n(A) for n = 0 … nmax.
inline std::vector<int> hh_dims(const GradedAlgebra& A, int nmax, bool normalized = true,
                                std::size_t cap = 20000)
{
    return homology_dims(hochschild_window(A, nmax + 1, normalized, cap));
}

} // namespace hoch
