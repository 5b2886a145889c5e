#ifndef FSL_LATTICE_HPP
#define FSL_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <string>
#include <stdexcept>
#include <vector>

#include "common.hpp"

namespace fsl
{
/// Dense exponent vector indexed by the descending label sequence of H(X_n).
/// Doubles as a lattice point and as a monomial exponent.
using ExponentVector = IntVector;

inline ExponentVector operator+(const ExponentVector& x, const ExponentVector& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("exponent vectors of different length");
    ExponentVector out(x);
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += y[k];
    return out;
}

inline ExponentVector unit_vector(std::size_t length, std::size_t pos)
{
    ExponentVector e(length, 0);
    e.at(pos) = 1;
    return e;
}

/// Finite, duplicate-free set of equal-length integer vectors kept in
/// lexicographically ascending order.
class LatticePointSet
{
public:
    using const_iterator = std::vector< ExponentVector >::const_iterator;

    LatticePointSet() = default;
    explicit LatticePointSet(std::size_t dimension) : dimension_(dimension) {}
    LatticePointSet(std::size_t dimension, std::vector< ExponentVector > pts) : dimension_(dimension), points_(std::move(pts))
    {
        for (const auto& p : points_)
            check_length(p);
        normalize();
    }
    LatticePointSet(std::size_t dimension, std::initializer_list< ExponentVector > pts)
        : LatticePointSet(dimension, std::vector< ExponentVector >(pts))
    {}

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool        empty() const noexcept { return points_.empty(); }

    const_iterator begin() const { return points_.begin(); }
    const_iterator end() const { return points_.end(); }
    const ExponentVector& operator[](std::size_t k) const { return points_[k]; }
    const std::vector< ExponentVector >& points() const noexcept { return points_; }

    bool contains(const ExponentVector& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    /// Adds a point; returns false if it was already present.
    bool insert(ExponentVector p)
    {
        check_length(p);
        auto it = std::lower_bound(points_.begin(), points_.end(), p);
        if (it != points_.end() && *it == p)
            return false;
        points_.insert(it, std::move(p));
        return true;
    }

    bool is_subset_of(const LatticePointSet& other) const
    {
        return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
    }

    /// Points of *this not present in other.
    std::vector< ExponentVector > difference(const LatticePointSet& other) const
    {
        std::vector< ExponentVector > out;
        std::set_difference(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                            std::back_inserter(out));
        return out;
    }

    friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

private:
    void check_length(const ExponentVector& p) const
    {
        if (p.size() != dimension_)
            throw std::invalid_argument("lattice point of length " + std::to_string(p.size()) + " in a set of dimension " +
                                        std::to_string(dimension_));
    }
    void normalize()
    {
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    }

    std::size_t                   dimension_ = 0;
    std::vector< ExponentVector > points_;
};

/// Pointwise Minkowski sum {x + y}.
inline LatticePointSet minkowski_sum(const LatticePointSet& x, const LatticePointSet& y)
{
    if (x.dimension() != y.dimension())
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector< ExponentVector > pts;
    pts.reserve(x.size() * y.size());
    for (const auto& a : x)
        for (const auto& b : y)
            pts.push_back(a + b);
    return LatticePointSet(x.dimension(), std::move(pts));
}

/// {0}, the neutral element of minkowski_sum.
inline LatticePointSet origin_set(std::size_t dimension)
{
    return LatticePointSet(dimension, {ExponentVector(dimension, 0)});
}
} // namespace fsl

#endif // FSL_LATTICE_HPP
