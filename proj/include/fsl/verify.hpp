#ifndef FSL_VERIFY_HPP
#define FSL_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "degenmap.hpp"
#include "fflv.hpp"
#include "wedge.hpp"

namespace fsl
{
/// Maximum number of witness points kept per list; totals are always exact.
inline constexpr std::size_t witness_cap = 10;

struct CaseDescriptor
{
    LieType        type;
    DominantWeight lambda;

    std::string str() const { return type.name() + " " + to_string(lambda.coeffs()); }

    friend bool operator==(const CaseDescriptor&, const CaseDescriptor&) = default;
    friend auto operator<=>(const CaseDescriptor&, const CaseDescriptor&) = default;
};

enum class Status
{
    Pass,
    Fail,
    Skipped
};

inline const char* to_string(Status s)
{
    switch (s)
    {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "?";
}

/// Test-only perturbation of one entry of the linear part of T.
struct MatrixMutation
{
    std::size_t  row   = 0;
    std::size_t  col   = 0;
    std::int64_t delta = -1;
};

/// The first entry that is zero on or above the diagonal, turned into -1.
inline std::optional< MatrixMutation > default_mutation(const IntMatrix& m)
{
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = r + 1; c < m.size(); ++c)
            if (m[r][c] == 0)
                return MatrixMutation{r, c, -1};
    return std::nullopt;
}

struct VerifyOptions
{
    /// Cases whose Weyl dimension exceeds this are reported as skipped.
    std::uint64_t                 max_dim = 200000;
    bool                          corrupt_matrix = false;
    CrystalConventions            conventions    = calibrated_conventions();
};

struct WitnessList
{
    std::vector< ExponentVector > points; // at most witness_cap
    std::size_t                   total = 0;

    bool empty() const { return total == 0; }
};

inline WitnessList make_witnesses(std::vector< ExponentVector > pts)
{
    WitnessList w;
    w.total = pts.size();
    if (pts.size() > witness_cap)
        pts.resize(witness_cap);
    w.points = std::move(pts);
    return w;
}

struct VerificationReport
{
    CaseDescriptor                              descriptor;
    Status                                      status       = Status::Fail;
    std::uint64_t                               fflv_count   = 0;
    std::uint64_t                               string_count = 0;
    std::uint64_t                               weyl_dim     = 0;
    bool                                        equal        = false;
    /// String points not hit by T(P(lambda)^Z).
    WitnessList                                 missing;
    /// Points of T(P(lambda)^Z) that are not string points.
    WitnessList                                 extra;
    std::optional< WeightTwist >                weight_twist;
    std::optional< std::pair< Weight, Weight > > twist_counterexample;
    std::optional< MatrixMutation >             mutation;
    std::string                                 message;
    std::chrono::duration< double >             elapsed{0};

    bool passed() const { return status == Status::Pass; }
};

/// Compares T(P(lambda)^Z) with Q_w(lambda-tilde)^Z, gating both counts on the Weyl dimension.
// ---------------------------------------------------------------------------
// Weight twist: the string weight of T(p) determines the FFLV weight of p

namespace detail
{
inline Weight weight_difference(Weight a, const Weight& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] -= b[k];
    return a;
}

/// (string weight, FFLV weight) pairs over P(lambda), transported by the affine map T.
inline std::vector< std::pair< Weight, Weight > > twist_pairs(const LieType& type, const DominantWeight& lambda,
                                                               const LatticePointSet& P, const AffineLatticeMap& T)
{
    std::vector< std::pair< Weight, Weight > > pairs;
    pairs.reserve(P.size());
    for (const auto& p : P)
        pairs.emplace_back(string_weight(type, lambda, T(p)), fflv_weight(type, lambda, p));
    return pairs;
}
} // namespace detail

/// The linear part of the weight twist of a type, fitted on the fundamental weights.
/// Differences within each fundamental case are pooled, so the fit carries no shift;
/// the result is the same for every dominant weight of the type.
inline const std::vector< std::vector< Rational > >& twist_linear_part(const LieType& type)
{
    static std::mutex                                                    mutex;
    static std::map< LieType, std::vector< std::vector< Rational > > > cache;
    std::lock_guard< std::mutex >                                        lock(mutex);
    if (auto it = cache.find(type); it != cache.end())
        return it->second;
    std::vector< std::pair< Weight, Weight > > pooled;
    for (int i = 1; i <= type.rank; ++i)
    {
        const auto lambda = DominantWeight::fundamental(type.rank, i);
        const auto pairs  = detail::twist_pairs(type, lambda, points(type, lambda), degeneration_map(type, lambda));
        const auto& [nu0, mu0] = pairs.front();
        if (pooled.empty())
            pooled.emplace_back(Weight(nu0.size(), 0), Weight(mu0.size(), 0));
        for (const auto& [nu, mu] : pairs)
            pooled.emplace_back(detail::weight_difference(nu, nu0), detail::weight_difference(mu, mu0));
    }
    auto solved = weight_twist_solve(pooled);
    if (!solved.twist || !solved.twist->unique)
        throw GateFailure("weight-twist", type.name() + ": fundamental weights do not determine a unique linear part");
    return cache.emplace(type, std::move(solved.twist->linear)).first->second;
}

/// Fits the type's twist linear part plus one shift to all (string weight, FFLV weight) pairs.
inline WeightTwistResult weight_twist_fit(const LieType& type, const std::vector< std::pair< Weight, Weight > >& pairs)
{
    WeightTwistResult result;
    if (pairs.empty())
        return result;
    WeightTwist w;
    w.linear              = twist_linear_part(type);
    w.unique              = true;
    const auto& [nu0, mu0] = pairs.front();
    w.shift.assign(mu0.size(), 0);
    for (std::size_t r = 0; r < mu0.size(); ++r)
    {
        Rational v = mu0[r];
        for (std::size_t c = 0; c < nu0.size(); ++c)
            v -= w.linear[r][c] * nu0[c];
        w.shift[r] = v;
    }
    for (const auto& [nu, mu] : pairs)
        if (!w.fits(nu, mu))
        {
            result.counterexample = std::make_pair(nu, mu);
            return result;
        }
    result.twist = std::move(w);
    return result;
}

inline VerificationReport check_main(const LieType& type, const DominantWeight& lambda, const VerifyOptions& opts = {})
{
    const auto         start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.descriptor = {type, lambda};
    rep.weyl_dim   = weyl_dim(type, lambda);
    auto finish    = [&] {
        rep.elapsed = std::chrono::steady_clock::now() - start;
        return rep;
    };
    if (rep.weyl_dim > opts.max_dim)
    {
        rep.status  = Status::Skipped;
        rep.message = "Weyl dimension " + std::to_string(rep.weyl_dim) + " exceeds budget " + std::to_string(opts.max_dim);
        return finish();
    }
    try
    {
        const auto P = points(type, lambda);
        const auto Q = string_points(type, lambda, opts.conventions);
        auto       T = degeneration_map(type, lambda);
        if (opts.corrupt_matrix)
        {
            rep.mutation = default_mutation(T.matrix);
            if (rep.mutation)
                T.matrix[rep.mutation->row][rep.mutation->col] += rep.mutation->delta;
        }
        const auto image = T.image(P);
        rep.fflv_count   = P.size();
        rep.string_count = Q.size();
        rep.missing      = make_witnesses(Q.difference(image));
        rep.extra        = make_witnesses(image.difference(Q));
        rep.equal        = rep.missing.empty() && rep.extra.empty();

        auto solved              = weight_twist_fit(type, detail::twist_pairs(type, lambda, P, T));
        rep.weight_twist         = std::move(solved.twist);
        rep.twist_counterexample = std::move(solved.counterexample);

        const bool counts_ok = rep.fflv_count == rep.weyl_dim && rep.string_count == rep.weyl_dim &&
                               image.size() == rep.weyl_dim;
        const bool twist_ok = rep.weight_twist.has_value();
        rep.status          = rep.equal && counts_ok && twist_ok ? Status::Pass : Status::Fail;
        if (!rep.equal)
            rep.message = "T(P) != Q: " + std::to_string(rep.missing.total) + " missing, " +
                          std::to_string(rep.extra.total) + " extra";
        else if (!counts_ok)
            rep.message = "counts disagree with the Weyl dimension";
        else if (!twist_ok)
            rep.message = "no weight twist with the type's linear part fits all points";
    }
    catch (const GateFailure& e)
    {
        rep.status  = Status::Fail;
        rep.message = e.what();
    }
    return finish();
}

// ---------------------------------------------------------------------------

struct MinkowskiReport
{
    CaseDescriptor first;
    DominantWeight second;
    WitnessList    fflv_outside;   // points of P(l1)+P(l2) outside P(l1+l2)
    WitnessList    string_outside; // points of Q(l1)+Q(l2) outside Q(l1+l2)

    bool passed() const { return fflv_outside.empty() && string_outside.empty(); }
};

/// S(l1) + S(l2) contained in S(l1 + l2), on the FFLV side and on the string side.
inline MinkowskiReport check_minkowski(const LieType& type, const DominantWeight& l1, const DominantWeight& l2,
                                       const VerifyOptions& opts = {})
{
    MinkowskiReport rep{{type, l1}, l2, {}, {}};
    const auto      sum  = l1 + l2;
    const auto      pfl  = minkowski_sum(points(type, l1), points(type, l2));
    const auto      qfl  = minkowski_sum(string_points(type, l1, opts.conventions), string_points(type, l2, opts.conventions));
    rep.fflv_outside     = make_witnesses(pfl.difference(points(type, sum)));
    rep.string_outside   = make_witnesses(qfl.difference(string_points(type, sum, opts.conventions)));
    return rep;
}

struct DilationEntry
{
    std::int64_t  k            = 0;
    std::uint64_t fflv_count   = 0;
    std::uint64_t string_count = 0;
    std::uint64_t weyl_dim     = 0;
    bool          equal        = false;

    bool passed() const { return equal && fflv_count == weyl_dim && string_count == weyl_dim; }
};

struct DilationReport
{
    CaseDescriptor               descriptor;
    std::vector< DilationEntry > entries;

    bool passed() const
    {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); });
    }
};

/// For k = 1..k_max: |Q(k lambda)^Z| = |P(k lambda)^Z| = dim V(k lambda) and T(P) = Q.
inline DilationReport check_lattice_corollary(const LieType& type, const DominantWeight& lambda, std::int64_t k_max,
                                              const VerifyOptions& opts = {})
{
    DilationReport rep{{type, lambda}, {}};
    for (std::int64_t k = 1; k <= k_max; ++k)
    {
        const auto    klam = lambda.scaled(k);
        const auto    P    = points(type, klam);
        const auto    Q    = string_points(type, klam, opts.conventions);
        DilationEntry e;
        e.k            = k;
        e.fflv_count   = P.size();
        e.string_count = Q.size();
        e.weyl_dim     = weyl_dim(type, klam);
        e.equal        = degeneration_map(type, klam).image(P) == Q;
        rep.entries.push_back(e);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Grids

struct GridEntry
{
    Family       family    = Family::A;
    int          rank      = 1;
    std::int64_t max_level = 1;
};

struct GridConfig
{
    std::vector< GridEntry > entries;
    unsigned                 threads = 1;
    VerifyOptions            options;
};

/// Worker count from FSL_THREADS, or the fallback when the variable is unset or empty.
/// Throws std::invalid_argument when the value is not a positive integer.
inline unsigned threads_from_env(unsigned fallback = 1)
{
    const char* s = std::getenv("FSL_THREADS");
    if (s == nullptr || *s == '\0')
        return fallback;
    const std::string text(s);
    unsigned          value = 0;
    const auto [end, ec]    = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
        throw std::invalid_argument("FSL_THREADS must be a positive integer, got '" + text + "'");
    return value;
}

inline std::vector< CaseDescriptor > grid_cases(const GridConfig& config)
{
    std::vector< CaseDescriptor > cases;
    for (const auto& g : config.entries)
    {
        const LieType type(g.family, g.rank);
        for (auto& lambda : dominant_weights_up_to(g.rank, g.max_level))
            cases.push_back({type, std::move(lambda)});
    }
    std::sort(cases.begin(), cases.end());
    cases.erase(std::unique(cases.begin(), cases.end()), cases.end());
    return cases;
}

/// Runs check_main over every case of the grid; the result is sorted by case and
/// independent of the thread count.
inline std::vector< VerificationReport > run_grid(const GridConfig& config)
{
    const auto                        cases = grid_cases(config);
    std::vector< VerificationReport > reports(cases.size());
    if (cases.empty())
        return reports;
    // resolve shared caches before fanning out
    (void)calibrated_conventions();

    std::atomic< std::size_t > next{0};
    std::exception_ptr         failure;
    std::mutex                 failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < cases.size(); k = next++)
        {
            try
            {
                reports[k] = check_main(cases[k].type, cases[k].lambda, config.options);
            }
            catch (...)
            {
                std::lock_guard< std::mutex > lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned             n = std::max(1U, std::min< unsigned >(config.threads, static_cast< unsigned >(cases.size())));
    std::vector< std::thread > pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return reports;
}

inline bool all_passed(const std::vector< VerificationReport >& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

// ---------------------------------------------------------------------------
// Property sweeps

struct UnimodularRow
{
    LieType type;
    BigInt  det;
    bool    entries_ok = false;
    bool    triangular = false;

    bool passed() const { return (det == 1 || det == -1) && entries_ok && triangular; }
};

inline std::vector< UnimodularRow > unimodular_sweep(int max_rank)
{
    std::vector< UnimodularRow > rows;
    for (auto family : {Family::A, Family::C})
        for (int n = 1; n <= max_rank; ++n)
        {
            const LieType type(family, n);
            const auto    m = detail::compute_matrix(type);
            UnimodularRow row{type, determinant(m), true, is_unit_upper_triangular_in_basis(type, m)};
            for (const auto& r : m)
                for (auto v : r)
                    if (v != 0 && v != -1 && !(v == -2 && family == Family::C))
                        row.entries_ok = false;
            rows.push_back(std::move(row));
        }
    return rows;
}

struct FoldRow
{
    int  rank = 0; // rank n of C_n
    int  i    = 0;
    bool translation_folds = false; // fold(t_{A_{2n-1}, omega_i}) = t_{C_n, omega_i}

    bool passed() const { return translation_folds; }
};

inline std::vector< FoldRow > fold_sweep(int max_rank)
{
    std::vector< FoldRow > rows;
    for (int n = 1; n <= max_rank; ++n)
    {
        const LieType c(Family::C, n), a(Family::A, 2 * n - 1);
        for (int i = 1; i <= n; ++i)
            rows.push_back({n, i, fold_vector(fundamental_translation(a, i), n) == fundamental_translation(c, i)});
    }
    return rows;
}

struct CommRow
{
    Family family = Family::A;
    int    rank   = 1; // rank m of the algebra acting on C^d
    int    l = 1, j = 1, i = 1;
    bool   not_adjacent = false; // |l - j| != 1
    bool   pointwise    = false; // f_l f_j = f_j f_l on C^d
    bool   sim          = false; // f_l f_j ~_i f_j f_l

    bool passed() const { return not_adjacent == pointwise && pointwise == sim; }
};

/// Three-way equivalence table for commuting lowering operators, for both families.
inline std::vector< CommRow > comm_sweep(int max_rank)
{
    std::vector< CommRow > rows;
    for (auto family : {Family::A, Family::C})
        for (int m = 1; m <= max_rank; ++m)
        {
            const WedgeAction act(family, m);
            for (int l = 1; l <= m; ++l)
                for (int j = 1; j <= m; ++j)
                {
                    bool pointwise = true;
                    for (const auto& idx : act.basis(1))
                    {
                        const auto v = WedgeVector::basis(idx);
                        pointwise &= act.act_word({l, j}, v) == act.act_word({j, l}, v);
                    }
                    for (int i = 1; i < act.dimension(); ++i)
                        rows.push_back({family, m, l, j, i, std::abs(l - j) != 1, pointwise,
                                        sim_check(act, {l, j}, {j, l}, i) == SimResult::Equivalent});
                }
        }
    return rows;
}
} // namespace fsl

#endif // FSL_VERIFY_HPP
