#ifndef FSL_CRYSTAL_HPP
#define FSL_CRYSTAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "rootsys.hpp"

namespace fsl
{
/// Letter of the vector crystal. Type A_m uses 1..m+1; type C_m uses 1..2m with
/// k-bar encoded as 2m+1-k, so 1 < ... < m < m-bar < ... < 1-bar numerically.
using CrystalLetter = std::uint8_t;
inline constexpr CrystalLetter no_letter = 0;

/// Tensor word b_1 (x) b_2 (x) ... (x) b_k.
using CrystalElement = std::vector< CrystalLetter >;

/// The crystal of the natural representation of A_m or C_m.
class VectorCrystal
{
public:
    VectorCrystal(Family family, int m) : family_(family), m_(m)
    {
        if (m < 1)
            throw std::invalid_argument("VectorCrystal: rank must be >= 1");
        if (size() > 250)
            throw std::invalid_argument("VectorCrystal: rank too large");
    }

    Family family() const noexcept { return family_; }
    int    rank() const noexcept { return m_; }
    int    size() const noexcept { return family_ == Family::A ? m_ + 1 : 2 * m_; }

    /// Letter k-bar for type C.
    CrystalLetter bar(int k) const { return static_cast< CrystalLetter >(2 * m_ + 1 - k); }

    CrystalLetter f(int j, CrystalLetter b) const
    {
        check_index(j);
        if (b == j)
            return static_cast< CrystalLetter >(j + 1);
        if (family_ == Family::C && j < m_ && b == 2 * m_ - j)
            return static_cast< CrystalLetter >(b + 1);
        return no_letter;
    }

    CrystalLetter e(int j, CrystalLetter b) const
    {
        check_index(j);
        if (b == j + 1)
            return static_cast< CrystalLetter >(j);
        if (family_ == Family::C && j < m_ && b == 2 * m_ + 1 - j)
            return static_cast< CrystalLetter >(b - 1);
        return no_letter;
    }

    /// Weight of a letter in epsilon coordinates (length m+1 for A, m for C).
    IntVector epsilon_weight(CrystalLetter b) const
    {
        IntVector w(static_cast< std::size_t >(family_ == Family::A ? m_ + 1 : m_), 0);
        if (b < 1 || b > size())
            throw std::out_of_range("VectorCrystal: letter out of range");
        if (family_ == Family::A || b <= m_)
            w[static_cast< std::size_t >(b - 1)] = 1;
        else
            w[static_cast< std::size_t >(2 * m_ - b)] = -1;
        return w;
    }

private:
    void check_index(int j) const
    {
        if (j < 1 || j > m_)
            throw std::out_of_range("crystal operator index " + std::to_string(j) + " out of range");
    }

    Family family_;
    int    m_;
};

/// Two standard conventions for the tensor product rule.
enum class SignatureRule
{
    /// 1 (x) 2 (x) ... (x) k is highest weight; f acts on the leftmost unmatched +.
    LeftToRight,
    /// Kashiwara's convention: the mirror image of LeftToRight.
    Kashiwara
};

/// How F_{i_1} ... F_{i_N} is applied to the highest weight element.
enum class ClosureOrder
{
    /// F_{i_N} first, F_{i_1} last.
    RightToLeft,
    LeftToRight
};

struct CrystalConventions
{
    SignatureRule rule  = SignatureRule::LeftToRight;
    ClosureOrder  order = ClosureOrder::RightToLeft;

    friend bool operator==(const CrystalConventions&, const CrystalConventions&) = default;
};

inline std::string to_string(const CrystalConventions& c)
{
    return std::string(c.rule == SignatureRule::LeftToRight ? "left-to-right" : "kashiwara") + "/" +
           (c.order == ClosureOrder::RightToLeft ? "right-to-left" : "left-to-right");
}

/// Tensor powers of a vector crystal with the signature rule.
class TensorCrystal
{
public:
    TensorCrystal(VectorCrystal base, SignatureRule rule) : base_(base), rule_(rule) {}

    const VectorCrystal& base() const noexcept { return base_; }
    SignatureRule        rule() const noexcept { return rule_; }

    /// Position acted on by f_j, or nullopt if f_j kills b.
    std::optional< std::size_t > f_position(int j, const CrystalElement& b) const
    {
        const auto s = signature(j, b);
        if (s.plus.empty())
            return std::nullopt;
        return rule_ == SignatureRule::LeftToRight ? s.plus.front() : s.plus.back();
    }

    std::optional< std::size_t > e_position(int j, const CrystalElement& b) const
    {
        const auto s = signature(j, b);
        if (s.minus.empty())
            return std::nullopt;
        return rule_ == SignatureRule::LeftToRight ? s.minus.back() : s.minus.front();
    }

    std::optional< CrystalElement > f(int j, const CrystalElement& b) const
    {
        const auto pos = f_position(j, b);
        if (!pos)
            return std::nullopt;
        CrystalElement out = b;
        out[*pos]          = base_.f(j, b[*pos]);
        return out;
    }

    std::optional< CrystalElement > e(int j, const CrystalElement& b) const
    {
        const auto pos = e_position(j, b);
        if (!pos)
            return std::nullopt;
        CrystalElement out = b;
        out[*pos]          = base_.e(j, b[*pos]);
        return out;
    }

    /// max { k : e_j^k b != 0 }
    int epsilon(int j, const CrystalElement& b) const { return static_cast< int >(signature(j, b).minus.size()); }
    /// max { k : f_j^k b != 0 }
    int phi(int j, const CrystalElement& b) const { return static_cast< int >(signature(j, b).plus.size()); }

    bool is_highest_weight(const CrystalElement& b) const
    {
        for (int j = 1; j <= base_.rank(); ++j)
            if (epsilon(j, b) != 0)
                return false;
        return true;
    }

    /// Weight in fundamental-weight coordinates of the rank-m algebra.
    Weight weight(const CrystalElement& b) const
    {
        IntVector eps(static_cast< std::size_t >(base_.family() == Family::A ? base_.rank() + 1 : base_.rank()), 0);
        for (auto letter : b)
        {
            const auto w = base_.epsilon_weight(letter);
            for (std::size_t k = 0; k < eps.size(); ++k)
                eps[k] += w[k];
        }
        const auto m = static_cast< std::size_t >(base_.rank());
        Weight     out(m);
        for (std::size_t k = 0; k < m; ++k)
            out[k] = (base_.family() == Family::C && k + 1 == m) ? eps[k] : eps[k] - eps[k + 1];
        return out;
    }

private:
    struct Signature
    {
        std::vector< std::size_t > minus; // unmatched, ascending positions
        std::vector< std::size_t > plus;  // unmatched, ascending positions
    };

    // Each letter contributes its '-' (e defined) before its '+' (f defined);
    // a '+' cancels against the nearest later '-' (earlier '-' for Kashiwara).
    Signature signature(int j, const CrystalElement& b) const
    {
        Signature                  s;
        std::vector< std::size_t > open;
        auto step = [&](std::size_t pos, bool has_minus, bool has_plus) {
            if (has_minus)
            {
                if (!open.empty())
                    open.pop_back();
                else
                    s.minus.push_back(pos);
            }
            if (has_plus)
                open.push_back(pos);
        };
        const std::size_t len = b.size();
        for (std::size_t k = 0; k < len; ++k)
        {
            const std::size_t pos = rule_ == SignatureRule::LeftToRight ? k : len - 1 - k;
            step(pos, base_.e(j, b[pos]) != no_letter, base_.f(j, b[pos]) != no_letter);
        }
        s.plus = std::move(open);
        if (rule_ == SignatureRule::Kashiwara)
        {
            std::reverse(s.minus.begin(), s.minus.end());
            std::reverse(s.plus.begin(), s.plus.end());
        }
        return s;
    }

    VectorCrystal base_;
    SignatureRule rule_;
};

/// Highest weight word of lambda-tilde: for each i, a_i copies of the column 1 (x) 2 (x) ... (x) (2i-1).
inline CrystalElement build_highest(const LieType& type, const DominantWeight& lambda)
{
    check_weight_rank(type, lambda);
    CrystalElement b;
    for (int i = 1; i <= type.rank; ++i)
        for (std::int64_t c = 0; c < lambda[static_cast< std::size_t >(i - 1)]; ++c)
            for (int k = 1; k <= 2 * i - 1; ++k)
                b.push_back(static_cast< CrystalLetter >(k));
    return b;
}

inline TensorCrystal target_crystal(const LieType& type, SignatureRule rule)
{
    const LieType t = type.target();
    return TensorCrystal(VectorCrystal(t.family, t.rank), rule);
}

/// F_j(S) = { f_j^k b : b in S, k >= 0 }
inline std::set< CrystalElement > f_closure(const TensorCrystal& crystal, int j, const std::set< CrystalElement >& S)
{
    std::set< CrystalElement > out;
    for (const auto& b : S)
    {
        std::optional< CrystalElement > cur = b;
        while (cur)
        {
            out.insert(*cur);
            cur = crystal.f(j, *cur);
        }
    }
    return out;
}

/// Demazure crystal B_w(lambda-tilde) for the word of the given type, without the dimension gate.
inline std::set< CrystalElement > demazure_closure(const LieType& type, const DominantWeight& lambda,
                                                   const CrystalConventions& conv)
{
    const auto                 crystal = target_crystal(type, conv.rule);
    const auto                 word    = reduced_word(type);
    std::set< CrystalElement > S{build_highest(type, lambda)};
    if (conv.order == ClosureOrder::RightToLeft)
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            S = f_closure(crystal, *it, S);
    else
        for (int j : word)
            S = f_closure(crystal, j, S);
    return S;
}

/// Greedy raising along the word: q_k = epsilon_{i_k}(b), then b <- e_{i_k}^{q_k} b.
/// Returns nullopt if the result is not the expected highest weight element.
inline std::optional< ExponentVector > try_extract_string(const TensorCrystal& crystal, CrystalElement b,
                                                          const ReducedWord& word, const CrystalElement& highest)
{
    ExponentVector q(word.size(), 0);
    for (std::size_t k = 0; k < word.size(); ++k)
    {
        const int j = word[k];
        const int c = crystal.epsilon(j, b);
        for (int r = 0; r < c; ++r)
            b = *crystal.e(j, b);
        q[k] = c;
    }
    if (b != highest)
        return std::nullopt;
    return q;
}

inline ExponentVector extract_string(const TensorCrystal& crystal, const CrystalElement& b, const ReducedWord& word,
                                     const CrystalElement& highest)
{
    auto q = try_extract_string(crystal, b, word, highest);
    if (!q)
        throw GateFailure("string-extraction", "greedy raising did not reach the highest weight element");
    return *q;
}

/// f_{i_1}^{q_1} ... f_{i_N}^{q_N} applied to b (f_{i_N} first); nullopt if some step is undefined.
inline std::optional< CrystalElement > replay_string(const TensorCrystal& crystal, CrystalElement b, const ReducedWord& word,
                                                     const ExponentVector& q)
{
    for (std::size_t k = word.size(); k-- > 0;)
        for (std::int64_t r = 0; r < q[k]; ++r)
        {
            auto next = crystal.f(word[k], b);
            if (!next)
                return std::nullopt;
            b = std::move(*next);
        }
    return b;
}

/// f_{i_1}^max ... f_{i_N}^max u: the extremal element of the Demazure crystal.
inline CrystalElement lowest_element(const TensorCrystal& crystal, CrystalElement b, const ReducedWord& word)
{
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        while (auto next = crystal.f(*it, b))
            b = std::move(*next);
    return b;
}

namespace detail
{
    /// Runs the smoke cases under one convention; true iff all gates hold.
    inline bool conventions_validate(const CrystalConventions& conv)
    {
        const std::vector< std::pair< LieType, DominantWeight > > smoke = {
            {LieType(Family::A, 1), DominantWeight({1})},
            {LieType(Family::A, 2), DominantWeight({1, 0})},
            {LieType(Family::A, 2), DominantWeight({0, 1})},
            {LieType(Family::A, 2), DominantWeight({1, 1})},
            {LieType(Family::C, 2), DominantWeight({0, 1})},
        };
        for (const auto& [type, lambda] : smoke)
        {
            const auto crystal = target_crystal(type, conv.rule);
            const auto highest = build_highest(type, lambda);
            if (!crystal.is_highest_weight(highest))
                return false;
            const auto S = demazure_closure(type, lambda, conv);
            if (S.size() != weyl_dim(type, lambda))
                return false;
            const auto word = reduced_word(type);
            for (const auto& b : S)
                if (!try_extract_string(crystal, b, word, highest))
                    return false;
        }
        return true;
    }
} // namespace detail

/// All four convention pairs, each flagged with whether it passes the smoke gates.
inline std::vector< std::pair< CrystalConventions, bool > > evaluate_conventions()
{
    std::vector< std::pair< CrystalConventions, bool > > out;
    for (auto rule : {SignatureRule::LeftToRight, SignatureRule::Kashiwara})
        for (auto order : {ClosureOrder::RightToLeft, ClosureOrder::LeftToRight})
        {
            const CrystalConventions c{rule, order};
            out.emplace_back(c, detail::conventions_validate(c));
        }
    return out;
}

/// The unique convention pair that passes the smoke gates; computed once.
inline const CrystalConventions& calibrated_conventions()
{
    static const CrystalConventions conv = [] {
        std::optional< CrystalConventions > found;
        for (const auto& [c, ok] : evaluate_conventions())
        {
            if (!ok)
                continue;
            if (found)
                throw GateFailure("crystal-conventions", "more than one convention passes the smoke gates");
            found = c;
        }
        if (!found)
            throw GateFailure("crystal-conventions", "no convention passes the smoke gates");
        return *found;
    }();
    return conv;
}

/// Demazure crystal for the word of the given type, gated on the source Weyl dimension.
inline std::set< CrystalElement > demazure_set(const LieType& type, const DominantWeight& lambda,
                                               const CrystalConventions& conv = calibrated_conventions())
{
    auto       S        = demazure_closure(type, lambda, conv);
    const auto expected = weyl_dim(type, lambda);
    if (S.size() != expected)
        throw GateFailure("demazure-dimension", type.name() + " lambda=" + to_string(lambda.coeffs()) + ": " +
                                                    std::to_string(S.size()) + " elements, Weyl dimension " +
                                                    std::to_string(expected));
    return S;
}

/// String lattice points Q_w(lambda-tilde)^Z, indexed by word positions.
inline LatticePointSet string_points(const LieType& type, const DominantWeight& lambda,
                                     const CrystalConventions& conv = calibrated_conventions())
{
    const auto crystal = target_crystal(type, conv.rule);
    const auto word    = reduced_word(type);
    const auto highest = build_highest(type, lambda);
    const auto S       = demazure_set(type, lambda, conv);
    LatticePointSet out(word.size());
    for (const auto& b : S)
        if (!out.insert(extract_string(crystal, b, word, highest)))
            throw GateFailure("string-injectivity", "two Demazure elements share a string vector");
    return out;
}
} // namespace fsl

#endif // FSL_CRYSTAL_HPP
