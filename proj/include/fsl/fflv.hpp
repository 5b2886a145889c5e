#ifndef FSL_FFLV_HPP
#define FSL_FFLV_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "rootsys.hpp"

namespace fsl
{
/// Lattice points of P(omega_i): all sums e_{l_1,j_1} + ... + e_{l_s,j_s} with
/// l_s < ... < l_1 <= i <= j_1 < ... < j_s (columns in the symplectic order).
inline LatticePointSet fundamental_points(const LieType& type, int i)
{
    const int n = type.rank;
    if (i < 1 || i > n)
        throw std::out_of_range("fundamental_points: index " + std::to_string(i) + " out of range for " + type.name());
    const auto        labels  = build_labels(type);
    const int         max_key = type.family == Family::A ? n : 2 * n - 1;
    std::vector< ExponentVector > pts;
    ExponentVector    current(labels.size(), 0);

    // next pair must have row < prev_row and column key > prev_key
    auto extend = [&](auto& self, int prev_row, int prev_key) -> void {
        pts.push_back(current);
        for (int row = prev_row - 1; row >= 1; --row)
            for (int key = prev_key + 1; key <= max_key; ++key)
            {
                const RootLabel l = label_from_key(row, key, n);
                if (!is_valid_label(type, l))
                    continue;
                const auto pos = label_index(labels, l);
                current[pos]   = 1;
                self(self, row, key);
                current[pos] = 0;
            }
    };
    // the first pair satisfies l_1 <= i <= j_1, i.e. row < i+1 and key > i-1
    extend(extend, i + 1, i - 1);

    LatticePointSet out(labels.size(), std::move(pts));
    const auto      expected = weyl_dim(type, DominantWeight::fundamental(n, i));
    if (out.size() != expected)
        throw GateFailure("fflv-dimension", type.name() + " omega_" + std::to_string(i) + ": " +
                                                std::to_string(out.size()) + " points, Weyl dimension " +
                                                std::to_string(expected));
    return out;
}

/// Lattice points of P(lambda) as the iterated Minkowski sum of the fundamental sets.
inline LatticePointSet points(const LieType& type, const DominantWeight& lambda)
{
    check_weight_rank(type, lambda);
    const std::size_t N   = num_labels(type);
    LatticePointSet   acc = origin_set(N);
    for (int i = 1; i <= type.rank; ++i)
    {
        const auto a = lambda[static_cast< std::size_t >(i - 1)];
        if (a == 0)
            continue;
        const auto fund = fundamental_points(type, i);
        for (std::int64_t c = 0; c < a; ++c)
            acc = minkowski_sum(acc, fund);
    }
    const auto expected = weyl_dim(type, lambda);
    if (acc.size() != expected)
        throw GateFailure("fflv-dimension", type.name() + " lambda=" + to_string(lambda.coeffs()) + ": " +
                                                std::to_string(acc.size()) + " points, Weyl dimension " +
                                                std::to_string(expected));
    return acc;
}

namespace detail
{
    /// Dyck paths (as label-index lists) from (l,l) to (j,j) in H(A_n).
    inline std::vector< std::vector< std::size_t > > dyck_paths(const std::vector< RootLabel >& labels, int l, int j)
    {
        std::vector< std::vector< std::size_t > > out;
        std::vector< std::size_t >                path;
        auto walk = [&](auto& self, int a, int b) -> void {
            path.push_back(label_index(labels, {a, b, false}));
            if (a == j && b == j)
                out.push_back(path);
            else
            {
                if (b < j)
                    self(self, a, b + 1);
                if (a + 1 <= b)
                    self(self, a + 1, b);
            }
            path.pop_back();
        };
        walk(walk, l, l);
        return out;
    }
} // namespace detail

/// Checks S against the type A Dyck-path description of P(lambda)^Z in both directions:
/// every point of S satisfies all path inequalities, and every lattice point of the
/// bounding box satisfying them lies in S.
inline bool dyck_check_A(int n, const DominantWeight& lambda, const LatticePointSet& S)
{
    const LieType type(Family::A, n);
    check_weight_rank(type, lambda);
    const auto labels = build_labels(type);
    if (S.dimension() != labels.size())
        return false;

    struct Inequality
    {
        std::vector< std::size_t > support;
        std::int64_t               bound;
    };
    std::vector< Inequality > ineqs;
    for (int l = 1; l <= n; ++l)
        for (int j = l; j <= n; ++j)
        {
            std::int64_t bound = 0;
            for (int k = l; k <= j; ++k)
                bound += lambda[static_cast< std::size_t >(k - 1)];
            for (auto& path : detail::dyck_paths(labels, l, j))
                ineqs.push_back({std::move(path), bound});
        }

    auto satisfies = [&](const ExponentVector& p) {
        for (auto v : p)
            if (v < 0)
                return false;
        for (const auto& ineq : ineqs)
        {
            std::int64_t s = 0;
            for (auto k : ineq.support)
                s += p[k];
            if (s > ineq.bound)
                return false;
        }
        return true;
    };

    for (const auto& p : S)
        if (!satisfies(p))
            return false;

    // coordinate (l,j) is bounded by a_l + ... + a_j via any path through it
    ExponentVector box(labels.size());
    double         volume = 1;
    for (std::size_t k = 0; k < labels.size(); ++k)
    {
        for (int c = labels[k].row; c <= labels[k].col; ++c)
            box[k] += lambda[static_cast< std::size_t >(c - 1)];
        volume *= static_cast< double >(box[k] + 1);
    }
    if (volume > 5e7)
        throw std::length_error("dyck_check_A: bounding box too large for exhaustive enumeration");

    ExponentVector p(labels.size(), 0);
    std::size_t    found = 0;
    auto enumerate = [&](auto& self, std::size_t pos) -> bool {
        if (pos == p.size())
        {
            if (!satisfies(p))
                return true;
            ++found;
            return S.contains(p);
        }
        for (std::int64_t v = 0; v <= box[pos]; ++v)
        {
            p[pos] = v;
            if (!self(self, pos + 1))
                return false;
        }
        p[pos] = 0;
        return true;
    };
    return enumerate(enumerate, 0) && found == S.size();
}
} // namespace fsl

#endif // FSL_FFLV_HPP
