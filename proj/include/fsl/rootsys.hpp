#ifndef FSL_ROOTSYS_HPP
#define FSL_ROOTSYS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "common.hpp"

namespace fsl
{
enum class Family
{
    A,
    C
};

inline char family_char(Family f) { return f == Family::A ? 'A' : 'C'; }

/// Cartan type X_n. Family C with rank 1 is accepted and behaves as A_1.
struct LieType
{
    Family family = Family::A;
    int    rank   = 1;

    LieType() = default;
    LieType(Family f, int n) : family(f), rank(n)
    {
        if (n < 1)
            throw std::invalid_argument("LieType: rank must be >= 1");
    }

    /// The algebra of the same family and rank 2n-1 that carries the Demazure modules.
    LieType target() const { return LieType(family, 2 * rank - 1); }

    std::string name() const { return std::string(1, family_char(family)) + std::to_string(rank); }

    friend bool operator==(const LieType&, const LieType&) = default;
    friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Index (row, col) of a positive root alpha_{row,col}; barred columns only occur in type C.
struct RootLabel
{
    int  row    = 1;
    int  col    = 1;
    bool barred = false;

    friend bool operator==(const RootLabel&, const RootLabel&) = default;
};

/// Position of a column in the order 1 < 2 < ... < n = n-bar < (n-1)-bar < ... < 1-bar.
inline int column_key(const RootLabel& l, int n) { return l.barred ? 2 * n - l.col : l.col; }

/// Inverse of column_key: the column with key k in rank n.
inline RootLabel label_from_key(int row, int key, int n)
{
    if (key <= n)
        return {row, key, false};
    return {row, 2 * n - key, true};
}

inline bool is_valid_label(const LieType& type, const RootLabel& l)
{
    const int n = type.rank;
    if (l.row < 1 || l.col < 1)
        return false;
    if (l.barred)
        return type.family == Family::C && l.row <= l.col && l.col <= n - 1;
    return l.row <= l.col && l.col <= n;
}

/// (a,b) <= (c,d)  iff  b < d, or b = d and a >= c  (columns compared by key).
inline bool label_precedes(const RootLabel& x, const RootLabel& y, int n)
{
    const int kx = column_key(x, n);
    const int ky = column_key(y, n);
    return kx < ky || (kx == ky && x.row >= y.row);
}

inline std::string to_string(const RootLabel& l)
{
    return "(" + std::to_string(l.row) + "," + std::to_string(l.col) + (l.barred ? "~" : "") + ")";
}

/// H(X_n) sorted descending with respect to label_precedes.
inline std::vector< RootLabel > build_labels(const LieType& type)
{
    const int n = type.rank;
    const int max_key = type.family == Family::A ? n : 2 * n - 1;
    std::vector< RootLabel > out;
    for (int key = max_key; key >= 1; --key)
    {
        const int max_row = std::min(key, 2 * n - key);
        for (int row = 1; row <= max_row; ++row)
            out.push_back(label_from_key(row, key, n));
    }
    return out;
}

inline std::size_t num_labels(const LieType& type)
{
    const auto n = static_cast< std::size_t >(type.rank);
    return type.family == Family::A ? n * (n + 1) / 2 : n * n;
}

inline std::size_t label_index(const std::vector< RootLabel >& labels, const RootLabel& l)
{
    const auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end())
        throw std::out_of_range("label " + to_string(l) + " not in H(X_n)");
    return static_cast< std::size_t >(it - labels.begin());
}

/// Simple reflection index carried by a label in the reduced word.
inline int word_letter(const RootLabel& l, int n) { return l.row + column_key(l, n) - 1; }

// ---------------------------------------------------------------------------
// Reduced words

using ReducedWord = std::vector< int >;

/// s_j s_{j+1} ... s_{last}
inline void append_run(ReducedWord& w, int first, int last)
{
    for (int k = first; k <= last; ++k)
        w.push_back(k);
}

/// tau_{2n-1} ... tau_{n+1} sigma_n ... sigma_1 for C, sigma_n ... sigma_1 for A,
/// where tau_j = s_j ... s_{2n-1} and sigma_j = s_j ... s_{2j-1}.
inline ReducedWord reduced_word(const LieType& type)
{
    const int   n = type.rank;
    ReducedWord w;
    if (type.family == Family::C)
        for (int j = 2 * n - 1; j >= n + 1; --j)
            append_run(w, j, 2 * n - 1);
    for (int j = n; j >= 1; --j)
        append_run(w, j, 2 * j - 1);
    return w;
}

// ---------------------------------------------------------------------------
// Weights. All weights are integer vectors in the fundamental-weight basis.

using Weight = IntVector;

class DominantWeight
{
public:
    DominantWeight() = default;
    explicit DominantWeight(IntVector coeffs) : coeffs_(std::move(coeffs))
    {
        for (auto a : coeffs_)
            if (a < 0)
                throw std::invalid_argument("DominantWeight: negative coefficient");
    }

    static DominantWeight zero(int n) { return DominantWeight(IntVector(static_cast< std::size_t >(n), 0)); }
    static DominantWeight fundamental(int n, int i)
    {
        if (i < 1 || i > n)
            throw std::out_of_range("fundamental weight index out of range");
        IntVector c(static_cast< std::size_t >(n), 0);
        c[static_cast< std::size_t >(i - 1)] = 1;
        return DominantWeight(std::move(c));
    }

    const IntVector& coeffs() const noexcept { return coeffs_; }
    int              rank() const noexcept { return static_cast< int >(coeffs_.size()); }
    std::int64_t     operator[](std::size_t i) const { return coeffs_[i]; }
    std::int64_t     level() const
    {
        std::int64_t s = 0;
        for (auto a : coeffs_)
            s += a;
        return s;
    }
    bool is_zero() const { return level() == 0; }

    DominantWeight scaled(std::int64_t k) const
    {
        IntVector c = coeffs_;
        for (auto& a : c)
            a *= k;
        return DominantWeight(std::move(c));
    }

    friend DominantWeight operator+(const DominantWeight& x, const DominantWeight& y)
    {
        if (x.rank() != y.rank())
            throw std::invalid_argument("DominantWeight: rank mismatch");
        IntVector c = x.coeffs_;
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] += y.coeffs_[k];
        return DominantWeight(std::move(c));
    }

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
    friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

private:
    IntVector coeffs_;
};

inline void check_weight_rank(const LieType& type, const DominantWeight& lambda)
{
    if (lambda.rank() != type.rank)
        throw std::invalid_argument("weight has " + std::to_string(lambda.rank()) + " coefficients, expected " +
                                    std::to_string(type.rank));
}

/// All dominant weights of the given rank with coefficient sum <= level, in lexicographic order.
inline std::vector< DominantWeight > dominant_weights_up_to(int n, std::int64_t level)
{
    std::vector< DominantWeight > out;
    IntVector                     c(static_cast< std::size_t >(n), 0);
    auto rec = [&](auto& self, std::size_t pos, std::int64_t budget) -> void {
        if (pos == c.size())
        {
            out.emplace_back(c);
            return;
        }
        for (std::int64_t a = 0; a <= budget; ++a)
        {
            c[pos] = a;
            self(self, pos + 1, budget - a);
        }
        c[pos] = 0;
    };
    rec(rec, 0, level);
    std::sort(out.begin(), out.end());
    return out;
}

/// Cartan matrix with entry (r,k) = <alpha_r^vee, alpha_k>; alpha_n is the long root in type C.
inline IntMatrix cartan_matrix(const LieType& type)
{
    const auto n = static_cast< std::size_t >(type.rank);
    IntMatrix  m(n, IntVector(n, 0));
    for (std::size_t k = 0; k < n; ++k)
    {
        m[k][k] = 2;
        if (k + 1 < n)
            m[k][k + 1] = m[k + 1][k] = -1;
    }
    if (type.family == Family::C && n >= 2)
        m[n - 2][n - 1] = -2;
    return m;
}

/// alpha_k (1-based) in fundamental-weight coordinates.
inline Weight simple_root(const LieType& type, int k)
{
    const auto m = cartan_matrix(type);
    Weight     out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        out[r] = m[r][static_cast< std::size_t >(k - 1)];
    return out;
}

/// s_k(mu) = mu - <alpha_k^vee, mu> alpha_k
inline Weight reflect(const LieType& type, int k, Weight mu)
{
    const auto pairing = mu[static_cast< std::size_t >(k - 1)];
    const auto root    = simple_root(type, k);
    for (std::size_t r = 0; r < mu.size(); ++r)
        mu[r] -= pairing * root[r];
    return mu;
}

/// Simple-root expansion of the positive root with the given label.
inline IntVector root_coefficients(const LieType& type, const RootLabel& l)
{
    if (!is_valid_label(type, l))
        throw std::out_of_range("label " + to_string(l) + " not in H(" + type.name() + ")");
    const int n = type.rank;
    IntVector c(static_cast< std::size_t >(n), 0);
    for (int key = l.row; key <= column_key(l, n); ++key)
        ++c[static_cast< std::size_t >((key <= n ? key : 2 * n - key) - 1)];
    return c;
}

/// Converts a weight given in simple-root coordinates to fundamental-weight coordinates.
inline Weight from_root_coords(const LieType& type, const IntVector& coeffs)
{
    const auto m = cartan_matrix(type);
    Weight     out(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t k = 0; k < m.size(); ++k)
            out[r] += m[r][k] * coeffs[k];
    return out;
}

/// Exact simple-root coordinates of a weight, via the inverse Cartan matrix.
inline std::vector< Rational > to_root_coords(const LieType& type, const Weight& mu)
{
    const auto                            cm = cartan_matrix(type);
    const std::size_t                     n  = cm.size();
    std::vector< std::vector< Rational > > a(n, std::vector< Rational >(n + 1));
    for (std::size_t r = 0; r < n; ++r)
    {
        for (std::size_t k = 0; k < n; ++k)
            a[r][k] = cm[r][k];
        a[r][n] = mu[r];
    }
    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t piv = col;
        while (a[piv][col] == 0)
            ++piv;
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < n; ++r)
        {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k <= n; ++k)
                a[r][k] -= f * a[col][k];
        }
    }
    std::vector< Rational > out(n);
    for (std::size_t r = 0; r < n; ++r)
        out[r] = a[r][n] / a[r][r];
    return out;
}

/// lambda-tilde = sum a_i omega_{2i-1} in the rank 2n-1 algebra.
inline Weight lift_weight(const LieType& type, const DominantWeight& lambda)
{
    check_weight_rank(type, lambda);
    Weight out(static_cast< std::size_t >(2 * type.rank - 1), 0);
    for (int i = 1; i <= type.rank; ++i)
        out[static_cast< std::size_t >(2 * i - 2)] = lambda[static_cast< std::size_t >(i - 1)];
    return out;
}

/// Weight of f^p v_lambda: lambda - sum p_{l,j} alpha_{l,j}.
inline Weight fflv_weight(const LieType& type, const DominantWeight& lambda, const IntVector& p)
{
    check_weight_rank(type, lambda);
    const auto labels = build_labels(type);
    if (p.size() != labels.size())
        throw std::invalid_argument("fflv_weight: exponent vector has wrong length");
    IntVector root_sum(static_cast< std::size_t >(type.rank), 0);
    for (std::size_t k = 0; k < labels.size(); ++k)
    {
        if (p[k] == 0)
            continue;
        const auto c = root_coefficients(type, labels[k]);
        for (std::size_t r = 0; r < c.size(); ++r)
            root_sum[r] += p[k] * c[r];
    }
    Weight out          = lambda.coeffs();
    const auto subtract = from_root_coords(type, root_sum);
    for (std::size_t r = 0; r < out.size(); ++r)
        out[r] -= subtract[r];
    return out;
}

/// Weight of f_{i_1}^{q_1} ... f_{i_N}^{q_N} v_{lambda-tilde} in the target algebra.
inline Weight string_weight(const LieType& type, const DominantWeight& lambda, const IntVector& q)
{
    const auto word = reduced_word(type);
    if (q.size() != word.size())
        throw std::invalid_argument("string_weight: string vector length " + std::to_string(q.size()) +
                                    " does not match word length " + std::to_string(word.size()));
    const LieType target = type.target();
    IntVector     root_sum(static_cast< std::size_t >(target.rank), 0);
    for (std::size_t k = 0; k < word.size(); ++k)
        root_sum[static_cast< std::size_t >(word[k] - 1)] += q[k];
    Weight     out      = lift_weight(type, lambda);
    const auto subtract = from_root_coords(target, root_sum);
    for (std::size_t r = 0; r < out.size(); ++r)
        out[r] -= subtract[r];
    return out;
}

// ---------------------------------------------------------------------------
// Weyl dimension formula, evaluated in epsilon coordinates.

inline std::uint64_t weyl_dim(const LieType& type, const DominantWeight& lambda)
{
    check_weight_rank(type, lambda);
    const int n = type.rank;
    // (lambda + rho) and rho in epsilon coordinates
    const std::size_t dim = type.family == Family::A ? static_cast< std::size_t >(n + 1) : static_cast< std::size_t >(n);
    std::vector< BigInt > x(dim, 0), rho(dim, 0);
    for (int i = 1; i <= n; ++i)
        for (int k = i; k <= n; ++k)
        {
            x[static_cast< std::size_t >(i - 1)] += lambda[static_cast< std::size_t >(k - 1)] + 1;
            rho[static_cast< std::size_t >(i - 1)] += 1;
        }
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
        {
            num *= x[i] - x[j];
            den *= rho[i] - rho[j];
            if (type.family == Family::C)
            {
                num *= x[i] + x[j];
                den *= rho[i] + rho[j];
            }
        }
    if (type.family == Family::C)
        for (std::size_t i = 0; i < dim; ++i)
        {
            num *= x[i];
            den *= rho[i];
        }
    if (num % den != 0)
        throw GateFailure("weyl-dimension", "non-integral quotient");
    const BigInt q = num / den;
    if (q > std::numeric_limits< std::uint64_t >::max())
        throw std::overflow_error("weyl_dim exceeds 64 bits");
    return static_cast< std::uint64_t >(q);
}

// ---------------------------------------------------------------------------
// Weyl group elements as signed permutations of the epsilon basis.

/// w(eps_i) = sign[i] * eps_{perm[i]}.
struct SignedPermutation
{
    std::vector< int > perm;
    std::vector< int > sign;
};

inline SignedPermutation weyl_element(const LieType& type, const ReducedWord& word)
{
    const int         n   = type.rank;
    const std::size_t dim = type.family == Family::A ? static_cast< std::size_t >(n + 1) : static_cast< std::size_t >(n);
    SignedPermutation w;
    w.perm.resize(dim);
    w.sign.assign(dim, 1);
    for (std::size_t i = 0; i < dim; ++i)
        w.perm[i] = static_cast< int >(i);
    // compose left to right: w = s_{i1} ... s_{iN}; w(eps) = s_{i1}(...s_{iN}(eps))
    for (auto it = word.rbegin(); it != word.rend(); ++it)
    {
        const int k = *it;
        if (k < 1 || k > n)
            throw std::out_of_range("reflection index out of range");
        for (std::size_t i = 0; i < dim; ++i)
        {
            int& p = w.perm[i];
            if (type.family == Family::C && k == n)
            {
                if (p == n - 1)
                    w.sign[i] = -w.sign[i];
            }
            else if (p == k - 1)
                p = k;
            else if (p == k)
                p = k - 1;
        }
    }
    return w;
}

/// Number of positive roots sent to negative roots, i.e. the Coxeter length.
inline std::size_t weyl_length(const LieType& type, const ReducedWord& word)
{
    const auto        w   = weyl_element(type, word);
    const std::size_t dim = w.perm.size();
    auto              apply = [&](const std::vector< int >& v) {
        std::vector< int > out(dim, 0);
        for (std::size_t i = 0; i < dim; ++i)
            out[static_cast< std::size_t >(w.perm[i])] += w.sign[i] * v[i];
        return out;
    };
    auto negative = [](const std::vector< int >& v) {
        for (int c : v)
            if (c != 0)
                return c < 0;
        return false;
    };
    std::size_t count = 0;
    for (std::size_t i = 0; i < dim; ++i)
    {
        for (std::size_t j = i + 1; j < dim; ++j)
        {
            std::vector< int > root(dim, 0);
            root[i] = 1;
            root[j] = -1;
            count += negative(apply(root));
            if (type.family == Family::C)
            {
                root[j] = 1;
                count += negative(apply(root));
            }
        }
        if (type.family == Family::C)
        {
            std::vector< int > root(dim, 0);
            root[i] = 2;
            count += negative(apply(root));
        }
    }
    return count;
}

inline bool is_reduced(const LieType& type, const ReducedWord& word) { return weyl_length(type, word) == word.size(); }
} // namespace fsl

#endif // FSL_ROOTSYS_HPP
