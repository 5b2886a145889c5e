#ifndef FSL_COMMON_HPP
#define FSL_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsl
{
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer vector in a weight lattice or exponent lattice.
using IntVector = std::vector< std::int64_t >;
using IntMatrix = std::vector< IntVector >;

/// Raised when one of the built-in verification gates (dimension counts,
/// unimodularity, string extraction, ...) does not hold.
class GateFailure : public std::runtime_error
{
public:
    GateFailure(std::string gate, const std::string& detail)
        : std::runtime_error(gate + ": " + detail), gate_(std::move(gate))
    {}

    const std::string& gate() const noexcept { return gate_; }

private:
    std::string gate_;
};

inline std::string to_string(const IntVector& v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
    {
        if (k)
            out += ",";
        out += std::to_string(v[k]);
    }
    return out + ")";
}
} // namespace fsl

#endif // FSL_COMMON_HPP
