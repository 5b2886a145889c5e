#ifndef FSL_WEDGE_HPP
#define FSL_WEDGE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenmap.hpp"
#include "fflv.hpp"
#include "lattice.hpp"
#include "rootsys.hpp"

namespace fsl
{
/// Strictly increasing tuple of basis indices (1-based) naming e_{k_1} ^ ... ^ e_{k_i}.
using WedgeIndex = std::vector< int >;

/// Finite linear combination of basis wedges with exact coefficients; no zero terms are stored.
template < typename Coeff >
class BasicWedge
{
public:
    using Terms = std::map< WedgeIndex, Coeff >;

    BasicWedge() = default;

    /// e_{k_1} ^ ... ^ e_{k_i}; the indices may be given in any order.
    static BasicWedge basis(WedgeIndex idx)
    {
        BasicWedge w;
        w.add_unsorted(std::move(idx), Coeff(1));
        return w;
    }

    /// e_1 ^ ... ^ e_k
    static BasicWedge highest(int k)
    {
        WedgeIndex idx(static_cast< std::size_t >(k));
        for (int r = 0; r < k; ++r)
            idx[static_cast< std::size_t >(r)] = r + 1;
        return basis(std::move(idx));
    }

    const Terms& terms() const noexcept { return terms_; }
    bool         is_zero() const noexcept { return terms_.empty(); }

    Coeff coefficient(const WedgeIndex& idx) const
    {
        auto it = terms_.find(idx);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /// Adds c * (wedge of idx), sorting idx and tracking the sign; repeated indices vanish.
    void add_unsorted(WedgeIndex idx, const Coeff& c)
    {
        int sign = 1;
        for (std::size_t a = 1; a < idx.size(); ++a)
            for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b)
            {
                if (idx[b - 1] == idx[b])
                    return;
                std::swap(idx[b - 1], idx[b]);
                sign = -sign;
            }
        add(idx, sign > 0 ? c : Coeff(-c));
    }

    BasicWedge& operator+=(const BasicWedge& o)
    {
        for (const auto& [idx, c] : o.terms_)
            add(idx, c);
        return *this;
    }

    friend bool operator==(const BasicWedge&, const BasicWedge&) = default;

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [idx, c] : terms_)
        {
            if (!out.empty())
                out += " + ";
            out += "(" + to_str(c) + ")";
            for (std::size_t k = 0; k < idx.size(); ++k)
                out += (k ? "^e" : "e") + std::to_string(idx[k]);
        }
        return out;
    }

private:
    static std::string to_str(const Coeff& c)
    {
        if constexpr (std::is_integral_v< Coeff >)
            return std::to_string(c);
        else
            return c.str();
    }

    void add(const WedgeIndex& idx, const Coeff& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (!inserted)
        {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Terms terms_;
};

using WedgeVector = BasicWedge< Rational >;

/// Action of the lowering generators of A_m or C_m on exterior powers of the natural
/// module C^d (d = m+1 or 2m). Type C is realized in the reordered basis in which f_j
/// acts as E_{j+1,j} + E_{2m-j+1,2m-j} (j < m) and f_m as E_{m+1,m}.
class WedgeAction
{
public:
    WedgeAction(Family family, int m) : family_(family), m_(m)
    {
        if (m < 1)
            throw std::invalid_argument("WedgeAction: rank must be >= 1");
    }

    Family family() const noexcept { return family_; }
    int    rank() const noexcept { return m_; }
    int    dimension() const noexcept { return family_ == Family::A ? m_ + 1 : 2 * m_; }

    /// Elementary operators e_k -> e_{k+1} making up f_j.
    std::vector< int > elementary(int j) const
    {
        if (j < 1 || j > m_)
            throw std::out_of_range("WedgeAction: generator index " + std::to_string(j) + " out of range");
        if (family_ == Family::A)
            return {j};
        return unfold_letter(j, m_);
    }

    /// f_j acting by the Leibniz rule.
    template < typename Coeff >
    BasicWedge< Coeff > act_simple(int j, const BasicWedge< Coeff >& v) const
    {
        BasicWedge< Coeff > out;
        for (int k : elementary(j))
            for (const auto& [idx, c] : v.terms())
                for (std::size_t s = 0; s < idx.size(); ++s)
                {
                    if (idx[s] != k)
                        continue;
                    WedgeIndex moved = idx;
                    moved[s]         = k + 1;
                    out.add_unsorted(std::move(moved), c);
                }
        return out;
    }

    /// f_{a_1} f_{a_2} ... f_{a_k} v, with f_{a_k} applied first.
    template < typename Coeff >
    BasicWedge< Coeff > act_word(const std::vector< int >& ops, BasicWedge< Coeff > v) const
    {
        for (auto it = ops.rbegin(); it != ops.rend() && !v.is_zero(); ++it)
            v = act_simple(*it, v);
        return v;
    }

    /// All basis wedges of Lambda^i C^d.
    std::vector< WedgeIndex > basis(int i) const
    {
        std::vector< WedgeIndex > out;
        WedgeIndex                cur;
        auto rec = [&](auto& self, int next) -> void {
            if (static_cast< int >(cur.size()) == i)
            {
                out.push_back(cur);
                return;
            }
            for (int k = next; k <= dimension(); ++k)
            {
                cur.push_back(k);
                self(self, k + 1);
                cur.pop_back();
            }
        };
        rec(rec, 1);
        return out;
    }

private:
    Family family_;
    int    m_;
};

inline WedgeAction target_action(const LieType& type)
{
    const LieType t = type.target();
    return WedgeAction(t.family, t.rank);
}

/// The operator word f_{i_1}^{x_1} ... f_{i_N}^{x_N} of a monomial in Pi_w.
inline std::vector< int > monomial_word(const ReducedWord& word, const ExponentVector& x)
{
    if (x.size() != word.size())
        throw std::invalid_argument("monomial_word: exponent vector length does not match the word");
    std::vector< int > ops;
    for (std::size_t k = 0; k < word.size(); ++k)
    {
        if (x[k] < 0)
            throw std::invalid_argument("monomial_word: negative exponent");
        for (std::int64_t r = 0; r < x[k]; ++r)
            ops.push_back(word[k]);
    }
    return ops;
}

/// x.v := f^x(v) for the word of the given type, acting through the rank 2n-1 algebra.
template < typename Coeff >
BasicWedge< Coeff > act_monomial(const LieType& type, const ExponentVector& x, const BasicWedge< Coeff >& v)
{
    return target_action(type).act_word(monomial_word(reduced_word(type), x), v);
}

// ---------------------------------------------------------------------------
// The relation f ~_i g

enum class SimResult
{
    Equivalent,
    /// g = r f on all of Lambda^i with a single r < 0.
    NegativelyProportional,
    NotEquivalent
};

/// Whether r * f(v) = g(v) for one r > 0 and every basis wedge v of Lambda^i C^d.
inline SimResult sim_check(const WedgeAction& action, const std::vector< int >& f, const std::vector< int >& g, int i)
{
    std::optional< Rational > ratio;
    for (const auto& idx : action.basis(i))
    {
        const auto v  = WedgeVector::basis(idx);
        const auto fv = action.act_word(f, v);
        const auto gv = action.act_word(g, v);
        if (fv.is_zero())
        {
            if (!gv.is_zero())
                return SimResult::NotEquivalent;
            continue;
        }
        const auto& [key, fc] = *fv.terms().begin();
        const Rational r       = gv.coefficient(key) / fc;
        if (r == 0 || (ratio && *ratio != r))
            return SimResult::NotEquivalent;
        for (const auto& [k, c] : fv.terms())
            if (gv.coefficient(k) != r * c)
                return SimResult::NotEquivalent;
        if (gv.terms().size() != fv.terms().size())
            return SimResult::NotEquivalent;
        ratio = r;
    }
    if (!ratio || *ratio > 0)
        return SimResult::Equivalent;
    return SimResult::NegativelyProportional;
}

/// sim_check for two Pi_w monomials of the given type.
inline SimResult sim_check(const LieType& type, const ExponentVector& x, const ExponentVector& y, int i)
{
    const auto word = reduced_word(type);
    return sim_check(target_action(type), monomial_word(word, x), monomial_word(word, y), i);
}

// ---------------------------------------------------------------------------
// Oracle checks for fundamental weights

/// Whether f^x does not annihilate e_1 ^ ... ^ e_{2i-1}. Vectors with negative
/// entries are not monomials and count as annihilating.
inline bool acts_nonzero(const LieType& type, const ExponentVector& x, int i)
{
    for (auto v : x)
        if (v < 0)
            return false;
    return !act_monomial(type, x, WedgeVector::highest(2 * i - 1)).is_zero();
}

inline bool nonannihilation_check(const LieType& type, int i, const ExponentVector& p)
{
    const auto x = degeneration_map(type, DominantWeight::fundamental(type.rank, i))(p);
    return acts_nonzero(type, x, i);
}

/// Label positions (l,j) with l <= i <= j: the i x (n-i+1) block carrying the
/// string points of omega_i in type A.
inline std::vector< std::size_t > restriction_block(int n, int i)
{
    const auto                 labels = build_labels(LieType(Family::A, n));
    std::vector< std::size_t > out;
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k].row <= i && i <= labels[k].col)
            out.push_back(k);
    return out;
}

namespace detail
{
    /// Calls fn(x) for every 0/1 vector supported on the restriction block.
    template < typename Fn >
    void for_each_block_monomial(int n, int i, Fn&& fn)
    {
        const auto        block = restriction_block(n, i);
        const std::size_t N     = num_labels(LieType(Family::A, n));
        if (block.size() > 24)
            throw std::length_error("restriction block too large for exhaustive sweep");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << block.size()); ++mask)
        {
            ExponentVector x(N, 0);
            for (std::size_t b = 0; b < block.size(); ++b)
                if (mask >> b & 1U)
                    x[block[b]] = 1;
            fn(x);
        }
    }
} // namespace detail

/// Whether x acts nonzero and no lexicographically larger 0/1 block monomial of the
/// same weight acts nonzero (neglex minimality).
inline bool is_neglex_minimal_A(int n, int i, const ExponentVector& x)
{
    const LieType type(Family::A, n);
    if (!acts_nonzero(type, x, i))
        return false;
    const auto lambda = DominantWeight::fundamental(n, i);
    const auto wt     = string_weight(type, lambda, x);
    bool       minimal = true;
    detail::for_each_block_monomial(n, i, [&](const ExponentVector& y) {
        if (minimal && y > x && string_weight(type, lambda, y) == wt && acts_nonzero(type, y, i))
            minimal = false;
    });
    return minimal;
}

inline bool minimality_check_A(int n, int i, const ExponentVector& p)
{
    const LieType type(Family::A, n);
    return is_neglex_minimal_A(n, i, degeneration_map(type, DominantWeight::fundamental(n, i))(p));
}

/// String points of omega_i in type A rebuilt from the wedge action alone: per weight,
/// the lexicographically largest nonzero-acting 0/1 block monomial.
inline LatticePointSet oracle_string_points_A(int n, int i)
{
    const LieType type(Family::A, n);
    const auto    lambda = DominantWeight::fundamental(n, i);
    std::map< Weight, ExponentVector > best;
    detail::for_each_block_monomial(n, i, [&](const ExponentVector& x) {
        if (!acts_nonzero(type, x, i))
            return;
        auto [it, inserted] = best.try_emplace(string_weight(type, lambda, x), x);
        if (!inserted && x > it->second)
            it->second = x;
    });
    LatticePointSet out(num_labels(type));
    for (auto& [wt, x] : best)
        out.insert(std::move(x));
    return out;
}

/// Whether every wedge occurring in f^a(v) (type A_{2m-1} word) occurs with positive
/// coefficient in the unfolded action of f^{fold(a)} (type C_m word) on v.
template < typename Coeff >
bool unfold_contains(int m, const ExponentVector& a, const BasicWedge< Coeff >& v)
{
    const auto a_side = act_monomial(LieType(Family::A, 2 * m - 1), a, v);
    const auto c_side = act_monomial(LieType(Family::C, m), fold_vector(a, m), v);
    for (const auto& [idx, c] : c_side.terms())
        if (c < 0)
            return false;
    for (const auto& [idx, c] : a_side.terms())
        if (c_side.coefficient(idx) <= 0)
            return false;
    return true;
}
} // namespace fsl

#endif // FSL_WEDGE_HPP
