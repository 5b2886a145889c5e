#ifndef FSL_DEGENMAP_HPP
#define FSL_DEGENMAP_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "rootsys.hpp"

namespace fsl
{
// ---------------------------------------------------------------------------
// Exact integer linear algebra

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    std::vector< std::vector< BigInt > > a(n, std::vector< BigInt >(n));
    for (std::size_t r = 0; r < n; ++r)
    {
        if (m[r].size() != n)
            throw std::invalid_argument("determinant: matrix is not square");
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = m[r][c];
    }
    BigInt prev = 1;
    int    sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (a[k][k] == 0)
        {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r)
            for (std::size_t c = k + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline IntVector mat_vec(const IntMatrix& m, const IntVector& v)
{
    IntVector out(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
            out[r] += m[r][c] * v[c];
    return out;
}

// ---------------------------------------------------------------------------
// The linear part

namespace detail
{
    inline void add_label(IntVector& col, const std::vector< RootLabel >& labels, const LieType& type, int row, int key,
                          std::int64_t coeff)
    {
        const RootLabel l = label_from_key(row, key, type.rank);
        col[label_index(labels, l)] += coeff;
    }

    /// Image of e_{a,b} (b given by its column key) as a column vector.
    inline IntVector image_of(const LieType& type, const std::vector< RootLabel >& labels, int a, int b)
    {
        const int n = type.rank;
        IntVector col(labels.size(), 0);
        if (type.family == Family::A)
        {
            for (int c = b; c <= n; ++c)
                add_label(col, labels, type, a, c, -1);
            for (int c = 1; c < a; ++c)
                add_label(col, labels, type, c, b, -1);
            return col;
        }
        const int abar = 2 * n - a; // key of the column a-bar (a-bar = a when a = n)
        if (abar == b)
        {
            add_label(col, labels, type, a, abar, -1);
            for (int c = 1; c < a; ++c)
                add_label(col, labels, type, c, b, -2);
            return col;
        }
        for (int c = b; c <= abar; ++c)
            add_label(col, labels, type, a, c, -1);
        for (int c = 1; c < a; ++c)
        {
            add_label(col, labels, type, c, b, -1);
            add_label(col, labels, type, c, abar, -1);
        }
        return col;
    }

    inline IntMatrix compute_matrix(const LieType& type)
    {
        const auto labels = build_labels(type);
        const auto N      = labels.size();
        IntMatrix  m(N, IntVector(N, 0));
        for (std::size_t c = 0; c < N; ++c)
        {
            const auto col = image_of(type, labels, labels[c].row, column_key(labels[c], type.rank));
            for (std::size_t r = 0; r < N; ++r)
                m[r][c] = col[r];
        }
        return m;
    }
} // namespace detail

/// Entries in {0,-1,-2} (only {0,-1} for type A) and |det| = 1.
inline void check_degeneration_matrix(const LieType& type, const IntMatrix& m)
{
    for (const auto& row : m)
        for (auto v : row)
            if (v != 0 && v != -1 && !(v == -2 && type.family == Family::C))
                throw GateFailure("matrix-entries", type.name() + ": entry " + std::to_string(v));
    const auto det = determinant(m);
    if (det != 1 && det != -1)
        throw GateFailure("unimodularity", type.name() + ": det = " + det.str());
}

/// Matrix of X_n in the descending label basis (column c = image of the c-th label).
inline const IntMatrix& build_matrix(const LieType& type)
{
    static std::mutex                         mutex;
    static std::map< LieType, IntMatrix >     cache;
    std::lock_guard< std::mutex >             lock(mutex);
    if (auto it = cache.find(type); it != cache.end())
        return it->second;
    IntMatrix m = detail::compute_matrix(type);
    check_degeneration_matrix(type, m);
    return cache.emplace(type, std::move(m)).first->second;
}

/// The triangularizing basis (e_{1,1-bar}, e_{1,2-bar}, e_{2,2-bar}, ..., e_{n-1,(n-1)-bar},
/// e_{1,n}, ..., e_{n,n}, e_{1,n-1}, ..., e_{1,2}, e_{2,2}, e_{1,1}); the barred part only for C.
inline std::vector< RootLabel > triangular_basis(const LieType& type)
{
    const int                n = type.rank;
    std::vector< RootLabel > basis;
    if (type.family == Family::C)
        for (int j = 1; j <= n - 1; ++j)
            for (int l = 1; l <= j; ++l)
                basis.push_back({l, j, true});
    for (int j = n; j >= 1; --j)
        for (int l = 1; l <= j; ++l)
            basis.push_back({l, j, false});
    return basis;
}

/// Whether -X_n, written in triangular_basis, is upper triangular with unit diagonal.
inline bool is_unit_upper_triangular_in_basis(const LieType& type, const IntMatrix& m)
{
    const auto labels = build_labels(type);
    const auto basis  = triangular_basis(type);
    std::vector< std::size_t > idx;
    for (const auto& l : basis)
        idx.push_back(label_index(labels, l));
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c <= r; ++c)
        {
            const auto v = -m[idx[r]][idx[c]];
            if ((r == c && v != 1) || (r != c && v != 0))
                return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Translation vectors

/// Coefficient of e_{l,j} in t_{X_n, omega_i}; key is the column key of j.
inline std::int64_t translation_coefficient(const LieType& type, int i, int l, int key)
{
    if (type.family == Family::A)
        return (key >= i && l <= i) ? 1 : 0;
    const int n     = type.rank;
    const int ibar  = 2 * n - i;
    const int lbar  = 2 * n - l;
    if (i <= key && key < ibar && l <= i)
        return 1;
    if (lbar == key && l <= i)
        return 1;
    if (lbar > key && ibar <= key)
        return 2;
    return 0;
}

inline IntVector fundamental_translation(const LieType& type, int i)
{
    if (i < 1 || i > type.rank)
        throw std::out_of_range("fundamental_translation: index out of range");
    const auto labels = build_labels(type);
    IntVector  t(labels.size(), 0);
    for (std::size_t k = 0; k < labels.size(); ++k)
        t[k] = translation_coefficient(type, i, labels[k].row, column_key(labels[k], type.rank));
    return t;
}

/// t_{X_n, lambda} = sum a_i t_{X_n, omega_i}.
inline IntVector build_translation(const LieType& type, const DominantWeight& lambda)
{
    check_weight_rank(type, lambda);
    IntVector t(num_labels(type), 0);
    for (int i = 1; i <= type.rank; ++i)
    {
        const auto a = lambda[static_cast< std::size_t >(i - 1)];
        if (a == 0)
            continue;
        const auto ti = fundamental_translation(type, i);
        for (std::size_t k = 0; k < t.size(); ++k)
            t[k] += a * ti[k];
    }
    return t;
}

// ---------------------------------------------------------------------------
// The affine map

/// y -> matrix * y + translation, on integer vectors.
struct AffineLatticeMap
{
    IntMatrix matrix;
    IntVector translation;

    ExponentVector operator()(const ExponentVector& p) const
    {
        if (p.size() != translation.size())
            throw std::invalid_argument("AffineLatticeMap: input of wrong length");
        auto out = mat_vec(matrix, p);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] += translation[k];
        return out;
    }

    LatticePointSet image(const LatticePointSet& S) const
    {
        std::vector< ExponentVector > pts;
        pts.reserve(S.size());
        for (const auto& p : S)
            pts.push_back((*this)(p));
        return LatticePointSet(translation.size(), std::move(pts));
    }
};

/// T_{X_n, lambda}(y) = X_n(y) + t_{X_n, lambda}.
inline AffineLatticeMap degeneration_map(const LieType& type, const DominantWeight& lambda)
{
    return {build_matrix(type), build_translation(type, lambda)};
}

/// T applied to an FFLV point; a negative entry is a gate failure.
inline ExponentVector apply_T(const LieType& type, const DominantWeight& lambda, const ExponentVector& p)
{
    const auto q = degeneration_map(type, lambda)(p);
    for (auto v : q)
        if (v < 0)
            throw GateFailure("T-nonnegative", type.name() + ": T" + to_string(p) + " = " + to_string(q));
    return q;
}

// ---------------------------------------------------------------------------
// fold / unfold between C_m and A_{2m-1}

/// Label of H(A_{2m-1}) -> label of H(C_m).
inline RootLabel fold(const RootLabel& a_label, int m)
{
    if (a_label.barred || a_label.row < 1 || a_label.row > a_label.col || a_label.col > 2 * m - 1)
        throw std::out_of_range("fold: " + to_string(a_label) + " not in H(A_" + std::to_string(2 * m - 1) + ")");
    if (a_label.row + a_label.col <= 2 * m)
        return label_from_key(a_label.row, a_label.col, m);
    return label_from_key(2 * m - a_label.col, 2 * m - a_label.row, m);
}

/// Canonical (non-folding) image of a C_m label in H(A_{2m-1}).
inline RootLabel embed_label(const RootLabel& c_label, int m)
{
    if (!is_valid_label(LieType(Family::C, m), c_label))
        throw std::out_of_range("embed_label: " + to_string(c_label) + " not in H(C_" + std::to_string(m) + ")");
    return {c_label.row, column_key(c_label, m), false};
}

/// Exponent vector on H(A_{2m-1}) -> exponent vector on H(C_m), summing over fold.
inline ExponentVector fold_vector(const ExponentVector& x, int m)
{
    const auto a_labels = build_labels(LieType(Family::A, 2 * m - 1));
    const auto c_labels = build_labels(LieType(Family::C, m));
    if (x.size() != a_labels.size())
        throw std::invalid_argument("fold_vector: wrong length");
    ExponentVector out(c_labels.size(), 0);
    for (std::size_t k = 0; k < x.size(); ++k)
        out[label_index(c_labels, fold(a_labels[k], m))] += x[k];
    return out;
}

/// Exponent vector on H(C_m) -> exponent vector on H(A_{2m-1}) via embed_label.
inline ExponentVector embed_vector(const ExponentVector& p, int m)
{
    const auto a_labels = build_labels(LieType(Family::A, 2 * m - 1));
    const auto c_labels = build_labels(LieType(Family::C, m));
    if (p.size() != c_labels.size())
        throw std::invalid_argument("embed_vector: wrong length");
    ExponentVector out(a_labels.size(), 0);
    for (std::size_t k = 0; k < p.size(); ++k)
        out[label_index(a_labels, embed_label(c_labels[k], m))] += p[k];
    return out;
}

/// The type A letters replacing the C_m letter j: {j, 2m-j} for j < m, {m} for j = m.
inline std::vector< int > unfold_letter(int j, int m)
{
    if (j < 1 || j > m)
        throw std::out_of_range("unfold_letter: index out of range");
    if (j == m)
        return {m};
    return {j, 2 * m - j};
}

// ---------------------------------------------------------------------------
// Weight twist

/// Affine map mu -> linear * mu + shift between weight lattices, over the rationals.
struct WeightTwist
{
    std::vector< std::vector< Rational > > linear; // target_rank x source_rank
    std::vector< Rational >                shift;
    /// Whether the source weights affinely span, so that the map is determined.
    bool                                   unique = false;

    IntVector apply_exact(const Weight& mu) const
    {
        IntVector out(shift.size());
        for (std::size_t r = 0; r < shift.size(); ++r)
        {
            Rational v = shift[r];
            for (std::size_t c = 0; c < mu.size(); ++c)
                v += linear[r][c] * mu[c];
            if (denominator(v) != 1)
                throw std::domain_error("WeightTwist: non-integral value");
            out[r] = static_cast< std::int64_t >(numerator(v));
        }
        return out;
    }

    bool fits(const Weight& mu, const Weight& nu) const
    {
        for (std::size_t r = 0; r < shift.size(); ++r)
        {
            Rational v = shift[r];
            for (std::size_t c = 0; c < mu.size(); ++c)
                v += linear[r][c] * mu[c];
            if (v != nu[r])
                return false;
        }
        return true;
    }
};

struct WeightTwistResult
{
    std::optional< WeightTwist >               twist;
    /// First pair not fitted by the particular solution.
    std::optional< std::pair< Weight, Weight > > counterexample;
};

/// Finds one affine map fitting all (source weight, target weight) pairs exactly.
inline WeightTwistResult weight_twist_solve(const std::vector< std::pair< Weight, Weight > >& pairs)
{
    WeightTwistResult result;
    if (pairs.empty())
        return result;
    const std::set< std::pair< Weight, Weight > > distinct(pairs.begin(), pairs.end());
    const std::size_t src = pairs.front().first.size();
    const std::size_t tgt = pairs.front().second.size();
    const std::size_t cols = src + 1;

    // Gauss-Jordan on [x 1 | y]
    std::vector< std::vector< Rational > > a;
    for (const auto& [mu, nu] : distinct)
    {
        if (mu.size() != src || nu.size() != tgt)
            throw std::invalid_argument("weight_twist_solve: inconsistent weight lengths");
        std::vector< Rational > row(cols + tgt);
        for (std::size_t c = 0; c < src; ++c)
            row[c] = mu[c];
        row[src] = 1;
        for (std::size_t r = 0; r < tgt; ++r)
            row[cols + r] = nu[r];
        a.push_back(std::move(row));
    }
    std::vector< std::size_t > pivot_cols;
    std::size_t                prow = 0;
    for (std::size_t c = 0; c < cols && prow < a.size(); ++c)
    {
        std::size_t piv = prow;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[prow]);
        const Rational inv = 1 / a[prow][c];
        for (auto& v : a[prow])
            v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r)
        {
            if (r == prow || a[r][c] == 0)
                continue;
            const Rational f = a[r][c];
            for (std::size_t k = c; k < a[r].size(); ++k)
                a[r][k] -= f * a[prow][k];
        }
        pivot_cols.push_back(c);
        ++prow;
    }

    WeightTwist w;
    w.linear.assign(tgt, std::vector< Rational >(src, 0));
    w.shift.assign(tgt, 0);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
    {
        const std::size_t c = pivot_cols[k];
        for (std::size_t r = 0; r < tgt; ++r)
        {
            if (c < src)
                w.linear[r][c] = a[k][cols + r];
            else
                w.shift[r] = a[k][cols + r];
        }
    }
    w.unique = pivot_cols.size() == cols;
    for (const auto& [mu, nu] : pairs)
        if (!w.fits(mu, nu))
        {
            result.counterexample = std::make_pair(mu, nu);
            return result;
        }
    result.twist = std::move(w);
    return result;
}
} // namespace fsl

#endif // FSL_DEGENMAP_HPP
