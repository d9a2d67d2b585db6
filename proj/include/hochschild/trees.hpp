#pragma once

#include "cochain.hpp"

#include <cctype>
#include <map>

namespace hoch {

// Planar rooted tree whose vertices are either marked by a cochain label or
// unmarked (label -1), the latter standing for m'(a,b) = (-1)^{|a|}ab.
struct MarkedTree {
    int label = -1;
    std::vector<MarkedTree> children;

    bool marked() const { return label >= 0; }
    bool operator==(const MarkedTree&) const = default;
};

inline int tree_size(const MarkedTree& t)
{
    int n = 1;
    for (const auto& c : t.children)
        n += tree_size(c);
    return n;
}

inline void tree_preorder(const MarkedTree& t, std::vector<const MarkedTree*>& out)
{
    out.push_back(&t);
    for (const auto& c : t.children)
        tree_preorder(c, out);
}

inline bool tree_has_marked(const MarkedTree& t)
{
    if (t.marked())
        return true;
    return std::any_of(t.children.begin(), t.children.end(), tree_has_marked);
}

// Valid: some marked vertex, every unmarked vertex has at least two children.
inline void check_tree(const MarkedTree& t)
{
    if (!tree_has_marked(t))
        throw std::invalid_argument("tree has no marked vertex");
    std::vector<const MarkedTree*> vs;
    tree_preorder(t, vs);
    for (auto* v : vs)
        if (!v->marked() && v->children.size() < 2)
            throw std::invalid_argument("unmarked vertex with fewer than two children");
}

inline std::string tree_to_string(const MarkedTree& t, const std::vector<std::string>& names)
{
    std::string s = t.marked() ? names.at(t.label) : "m";
    if (!t.children.empty()) {
        s += "(";
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i)
                s += ", ";
            s += tree_to_string(t.children[i], names);
        }
        s += ")";
    }
    return s;
}

// Parses "m(D, E(F))". The identifier m is the unmarked vertex; other
// identifiers are looked up in (or appended to) names.
inline MarkedTree parse_tree(const std::string& src, std::vector<std::string>& names)
{
    std::size_t i = 0;
    auto ws = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i])))
            ++i;
    };
    std::function<MarkedTree()> node = [&]() -> MarkedTree {
        ws();
        std::size_t st = i;
        while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '\''))
            ++i;
        if (st == i)
            throw std::invalid_argument("tree syntax: expected a name at position " + std::to_string(st));
        std::string id = src.substr(st, i - st);
        MarkedTree t;
        if (id != "m") {
            auto it = std::find(names.begin(), names.end(), id);
            if (it == names.end()) {
                names.push_back(id);
                t.label = static_cast<int>(names.size()) - 1;
            } else {
                t.label = static_cast<int>(it - names.begin());
            }
        }
        ws();
        if (i < src.size() && src[i] == '(') {
            ++i;
            for (;;) {
                t.children.push_back(node());
                ws();
                if (i < src.size() && src[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < src.size() && src[i] == ')') {
                    ++i;
                    break;
                }
                throw std::invalid_argument("tree syntax: expected ',' or ')' at position " + std::to_string(i));
            }
        }
        return t;
    };
    MarkedTree t = node();
    ws();
    if (i != src.size())
        throw std::invalid_argument("tree syntax: trailing input at position " + std::to_string(i));
    check_tree(t);
    return t;
}

namespace detail {

inline Cochain tree_eval(const GradedAlgebra& A, const MarkedTree& t, const std::vector<Cochain>& labels,
                         const Cochain& mprime, int& counter, int override_at, const Cochain* override_with)
{
    const int me = counter++;
    std::vector<Cochain> kids;
    for (const auto& c : t.children)
        kids.push_back(tree_eval(A, c, labels, mprime, counter, override_at, override_with));
    if (!t.marked()) {
        if (t.children.size() != 2)
            return {};
        return m_pair(A, kids[0], kids[1]);
    }
    const Cochain& D = (me == override_at && override_with) ? *override_with : labels.at(t.label);
    return brace(A, D, kids);
}

} // namespace detail

// O_T evaluated on the label cochains: nested braces, m' at unmarked vertices.
// The vertex with preorder index override_at may be given another cochain.
inline Cochain tree_op(const GradedAlgebra& A, const MarkedTree& t, const std::vector<Cochain>& labels,
                       int override_at = -1, const Cochain* override_with = nullptr)
{
    int counter = 0;
    Cochain mp;
    return detail::tree_eval(A, t, labels, mp, counter, override_at, override_with);
}

inline Vec tree_op_at(const GradedAlgebra& A, const MarkedTree& t, const std::vector<Cochain>& labels,
                      const std::vector<int>& args)
{
    return evaluate(tree_op(A, t, labels), args);
}

struct BoundaryTerm {
    MarkedTree tree;
    int parity;
};

namespace detail {

// Tree with node ids attached so the Koszul sign of a re-nesting can be read
// off the preorder sequences.
struct IdTree {
    int id;
    int label;
    std::vector<IdTree> children;
};

inline IdTree attach_ids(const MarkedTree& t, int& counter)
{
    IdTree r{counter++, t.label, {}};
    for (const auto& c : t.children)
        r.children.push_back(attach_ids(c, counter));
    return r;
}

inline MarkedTree strip_ids(const IdTree& t)
{
    MarkedTree r{t.label, {}};
    for (const auto& c : t.children)
        r.children.push_back(strip_ids(c));
    return r;
}

inline void id_preorder(const IdTree& t, std::vector<int>& out)
{
    out.push_back(t.id);
    for (const auto& c : t.children)
        id_preorder(c, out);
}

} // namespace detail

// All T' that contract to T along one edge adjacent to a new unmarked binary
// vertex m' (id -1), for a marked vertex X of T with children c_1..c_r:
//   m' above X taking c_r (or c_1) away from X, sign -κ;
//   m' below X swallowing two consecutive children c_j, c_{j+1}, sign +κ;
// κ is the Koszul sign of (m', preorder of T) -> preorder of T' with the
// shifted parities |D|+1 (m' odd). label_par[l] is the parity of label l.
inline std::vector<BoundaryTerm> tree_boundary(const MarkedTree& T, const std::vector<int>& label_par)
{
    int counter = 0;
    detail::IdTree root = detail::attach_ids(T, counter);
    const int n = counter;
    std::vector<int> par(n + 1, 1);
    {
        std::vector<const MarkedTree*> vs;
        tree_preorder(T, vs);
        for (int i = 0; i < n; ++i)
            par[i + 1] = vs[i]->marked() ? label_par.at(vs[i]->label) & 1 : 1;
    }
    std::vector<BoundaryTerm> out;
    auto emit = [&](const detail::IdTree& t2, int base) {
        std::vector<int> pre;
        detail::id_preorder(t2, pre);
        std::vector<int> perm;
        for (int id : pre)
            perm.push_back(id + 1);
        int k = koszul_parity(perm, par);
        out.push_back({detail::strip_ids(t2), k ^ base});
    };
    // Rebuild the whole tree with the node `target` replaced by `repl`.
    std::function<detail::IdTree(const detail::IdTree&, int, const detail::IdTree&)> replace =
        [&](const detail::IdTree& t, int target, const detail::IdTree& repl) -> detail::IdTree {
        if (t.id == target)
            return repl;
        detail::IdTree r{t.id, t.label, {}};
        for (const auto& c : t.children)
            r.children.push_back(replace(c, target, repl));
        return r;
    };
    std::function<void(const detail::IdTree&)> visit = [&](const detail::IdTree& X) {
        for (const auto& c : X.children)
            visit(c);
        if (X.label < 0)
            return;
        const int r = static_cast<int>(X.children.size());
        if (r >= 1) {
            detail::IdTree left{X.id, X.label, {X.children.begin(), X.children.end() - 1}};
            detail::IdTree M{-1, -1, {left, X.children.back()}};
            emit(replace(root, X.id, M), 1);
            detail::IdTree right{X.id, X.label, {X.children.begin() + 1, X.children.end()}};
            detail::IdTree M2{-1, -1, {X.children.front(), right}};
            emit(replace(root, X.id, M2), 1);
        }
        for (int j = 0; j + 1 < r; ++j) {
            detail::IdTree Y{X.id, X.label, {}};
            for (int i = 0; i < j; ++i)
                Y.children.push_back(X.children[i]);
            Y.children.push_back(detail::IdTree{-1, -1, {X.children[j], X.children[j + 1]}});
            for (int i = j + 2; i < r; ++i)
                Y.children.push_back(X.children[i]);
            emit(replace(root, X.id, Y), 0);
        }
    };
    visit(root);
    return out;
}

// δ(O_T) - Σ_v (-1)^{parities of labels before v} O_T(.., δD_v, ..) minus
// Σ ± O_{T'}; zero when the boundary formula holds for these labels.
inline Cochain tree_boundary_defect(const GradedAlgebra& A, const MarkedTree& T, const std::vector<Cochain>& labels)
{
    std::vector<int> lp;
    for (const auto& D : labels)
        lp.push_back(lie_parity(A, D));
    Cochain res = delta(A, tree_op(A, T, labels));
    std::vector<const MarkedTree*> vs;
    tree_preorder(T, vs);
    int before = 0;
    for (int v = 0; v < static_cast<int>(vs.size()); ++v) {
        if (vs[v]->marked()) {
            Cochain dD = delta(A, labels[vs[v]->label]);
            res.add(tree_op(A, T, labels, v, &dD), -sign(before));
            before ^= lp[vs[v]->label];
        } else {
            before ^= 1;
        }
    }
    for (const auto& bt : tree_boundary(T, lp))
        res.add(tree_op(A, bt.tree, labels), -sign(bt.parity));
    return res;
}

} // namespace hoch
