// Independent reference computations used by the tests. Nothing here calls into the
// library's own algorithms; every value is derived from a separate closed formula or
// from brute force over a small search space.
#ifndef FSL_TESTS_ORACLES_HPP
#define FSL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t t = 1; t <= k; ++t)
        r = r * (n - k + t) / t;
    return r;
}

/// dim V(lambda) for sl_{n+1} via the partition form of the Weyl formula:
/// prod_{i<j} (mu_i - mu_j + j - i) / (j - i), mu_i = a_i + ... + a_n.
inline std::int64_t dim_A(const std::vector< std::int64_t >& a)
{
    const std::size_t           n = a.size();
    std::vector< std::int64_t > mu(n + 1, 0);
    for (std::size_t i = n; i-- > 0;)
        mu[i] = mu[i + 1] + a[i];
    __int128 num = 1, den = 1;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
        {
            num *= mu[i] - mu[j] + static_cast< std::int64_t >(j - i);
            den *= static_cast< std::int64_t >(j - i);
        }
    return static_cast< std::int64_t >(num / den);
}

/// dim V(lambda) for sp_{2n}: product over the roots e_i - e_j, e_i + e_j, 2e_i of
/// <lambda + rho, alpha> / <rho, alpha> with lambda_i = a_i + ... + a_n, rho_i = n - i + 1.
inline std::int64_t dim_C(const std::vector< std::int64_t >& a)
{
    const std::size_t           n = a.size();
    std::vector< std::int64_t > l(n, 0), r(n, 0);
    std::int64_t                s = 0;
    for (std::size_t i = n; i-- > 0;)
    {
        s += a[i];
        l[i] = s + static_cast< std::int64_t >(n - i);
        r[i] = static_cast< std::int64_t >(n - i);
    }
    __int128 num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
    {
        num *= 2 * l[i];
        den *= 2 * r[i];
        for (std::size_t j = i + 1; j < n; ++j)
        {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (r[i] - r[j]) * (r[i] + r[j]);
        }
    }
    return static_cast< std::int64_t >(num / den);
}

/// dim V(omega_k) for sp_{2n}: binom(2n, k) - binom(2n, k - 2).
inline std::int64_t dim_C_fundamental(int n, int k) { return binomial(2 * n, k) - binomial(2 * n, k - 2); }

/// Labels written as (row, column position) with column positions 1..n for j and
/// 2n - j for j-bar; this is the symplectic column order.
using Label = std::pair< int, int >;

/// FFLV points of omega_i by brute force over all subsets of labels: a subset is a
/// point iff, sorted by row descending, rows strictly decrease, columns strictly
/// increase, the first row is <= i and the first column is >= i.
inline std::set< std::vector< int > > fflv_fundamental_bruteforce(const std::vector< Label >& labels, int i)
{
    std::set< std::vector< int > > out;
    const std::size_t              N = labels.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask)
    {
        std::vector< Label > chosen;
        for (std::size_t k = 0; k < N; ++k)
            if (mask >> k & 1U)
                chosen.push_back(labels[k]);
        std::sort(chosen.begin(), chosen.end(), [](const Label& x, const Label& y) { return x.first > y.first; });
        bool ok = true;
        for (std::size_t k = 0; k < chosen.size() && ok; ++k)
        {
            if (k == 0)
                ok = chosen[0].first <= i && chosen[0].second >= i;
            else
                ok = chosen[k].first < chosen[k - 1].first && chosen[k].second > chosen[k - 1].second;
        }
        if (!ok)
            continue;
        std::vector< int > v(N, 0);
        for (std::size_t k = 0; k < N; ++k)
            v[k] = mask >> k & 1U;
        out.insert(v);
    }
    return out;
}

/// H(A_n) or H(C_n) in the descending order: column position descending, ties by row ascending.
inline std::vector< Label > labels(bool type_c, int n)
{
    std::vector< Label > out;
    const int            max_col = type_c ? 2 * n - 1 : n;
    for (int c = max_col; c >= 1; --c)
        for (int r = 1; r <= n; ++r)
            if (r <= c && (c <= n || r <= 2 * n - c))
                out.push_back({r, c});
    return out;
}
} // namespace oracle

#endif // FSL_TESTS_ORACLES_HPP
