#ifndef FSL_CLI_HPP
#define FSL_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "verify.hpp"

namespace fsl
{
namespace exit_code
{
    inline constexpr int success      = 0;
    inline constexpr int verification = 1;
    inline constexpr int usage        = 2;
    inline constexpr int gate         = 3;
} // namespace exit_code

namespace detail
{
    /// Thrown for arguments that parse but do not make sense together.
    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct CliOptions
    {
        std::string                 type = "A";
        int                         rank = 1;
        std::vector< std::int64_t > weight;
        std::string                 out_file;
        std::string                 json_file;
        std::int64_t                max_level = 0;
        std::int64_t                max_k     = 2;
        int                         max_rank  = 1;
        unsigned                    threads   = 1;
        std::uint64_t               max_dim   = VerifyOptions{}.max_dim;
        bool                        corrupt   = false;
    };

    inline LieType cli_type(const CliOptions& o) { return LieType(parse_family(o.type), o.rank); }

    inline DominantWeight cli_weight(const CliOptions& o)
    {
        if (o.weight.size() != static_cast< std::size_t >(o.rank))
            throw UsageError("--weight has " + std::to_string(o.weight.size()) + " entries, --rank is " +
                             std::to_string(o.rank));
        return DominantWeight(o.weight);
    }

    inline void write_text(const std::string& text, const std::string& file, std::ostream& out)
    {
        if (file.empty())
        {
            out << text;
            return;
        }
        std::ofstream f(file, std::ios::binary);
        if (!f)
            throw UsageError("cannot open '" + file + "' for writing");
        f << text;
        if (!f)
            throw UsageError("failed writing '" + file + "'");
    }

    inline void print_witnesses(std::ostream& os, const char* what, const WitnessList& w)
    {
        if (w.empty())
            return;
        os << "    " << what << " (" << w.total << " total):";
        for (const auto& p : w.points)
            os << ' ' << to_string(p);
        if (w.total > w.points.size())
            os << " ...";
        os << '\n';
    }

    inline int cmd_verify_main(const CliOptions& o, std::ostream& out)
    {
        if (o.max_level < 0)
            throw UsageError("--max-level must be >= 0");
        GridConfig cfg;
        cfg.entries                = {{parse_family(o.type), o.rank, o.max_level}};
        cfg.threads                = o.threads;
        cfg.options.max_dim        = o.max_dim;
        cfg.options.corrupt_matrix = o.corrupt;
        const auto reports         = run_grid(cfg);

        out << std::left << std::setw(20) << "case" << std::right << std::setw(8) << "fflv" << std::setw(8)
            << "string" << std::setw(8) << "weyl" << std::setw(7) << "equal" << std::setw(11) << "twist"
            << std::setw(9) << "status" << std::setw(10) << "ms" << '\n';
        for (const auto& r : reports)
        {
            const char* twist = r.weight_twist ? "fits" : "-";
            out << std::left << std::setw(20) << r.descriptor.str() << std::right << std::setw(8) << r.fflv_count
                << std::setw(8) << r.string_count << std::setw(8) << r.weyl_dim << std::setw(7)
                << (r.equal ? "yes" : "no") << std::setw(11) << twist << std::setw(9) << to_string(r.status)
                << std::setw(10) << std::fixed << std::setprecision(1) << r.elapsed.count() * 1000.0 << '\n';
            if (r.status == Status::Fail)
            {
                if (!r.message.empty())
                    out << "    " << r.message << '\n';
                if (r.mutation)
                    out << "    matrix entry (" << r.mutation->row << "," << r.mutation->col << ") perturbed by "
                        << r.mutation->delta << '\n';
                print_witnesses(out, "missing", r.missing);
                print_witnesses(out, "extra", r.extra);
            }
        }
        std::size_t passed = 0, skipped = 0;
        for (const auto& r : reports)
        {
            passed += r.status == Status::Pass;
            skipped += r.status == Status::Skipped;
        }
        out << passed << "/" << reports.size() << " cases pass";
        if (skipped)
            out << ", " << skipped << " skipped";
        out << '\n';
        if (!o.json_file.empty())
            write_text(dump(to_json(reports)), o.json_file, out);
        return passed == reports.size() ? exit_code::success : exit_code::verification;
    }

    inline int cmd_verify_unimodular(const CliOptions& o, std::ostream& out, std::ostream& err)
    {
        bool ok = true;
        for (const auto& row : unimodular_sweep(o.max_rank))
        {
            out << std::left << std::setw(5) << row.type.name() << " det=" << std::setw(3) << row.det.str()
                << " entries=" << (row.entries_ok ? "ok " : "bad") << " triangular=" << (row.triangular ? "yes" : "no")
                << '\n';
            if (!row.passed())
            {
                ok = false;
                err << "unimodularity fails for " << row.type.name() << '\n';
            }
        }
        return ok ? exit_code::success : exit_code::verification;
    }

    inline int cmd_verify_fold(const CliOptions& o, std::ostream& out, std::ostream& err)
    {
        bool ok = true;
        for (const auto& row : fold_sweep(o.max_rank))
        {
            const LieType c(Family::C, row.rank);
            out << c.name() << " i=" << row.i << "  fold(t_A" << (2 * row.rank - 1) << ") = t_" << c.name() << ": "
                << (row.passed() ? "yes" : "no") << '\n';
            if (!row.passed())
            {
                ok = false;
                err << "fold fails for rank " << row.rank << ", i=" << row.i << '\n';
            }
        }
        return ok ? exit_code::success : exit_code::verification;
    }

    inline int cmd_verify_comm(const CliOptions& o, std::ostream& out, std::ostream& err)
    {
        const auto rows = comm_sweep(o.max_rank);
        bool       ok   = true;
        // one output line per (family, rank, l, j); the i column summarizes all exterior powers
        for (std::size_t k = 0; k < rows.size();)
        {
            const auto& first = rows[k];
            std::size_t sims = 0, count = 0;
            bool        group_ok = true;
            for (; k < rows.size() && rows[k].family == first.family && rows[k].rank == first.rank &&
                   rows[k].l == first.l && rows[k].j == first.j;
                 ++k, ++count)
            {
                sims += rows[k].sim;
                if (!rows[k].passed())
                {
                    group_ok = false;
                    err << "comm table mismatch: " << LieType(first.family, first.rank).name() << " l=" << first.l
                        << " j=" << first.j << " i=" << rows[k].i << '\n';
                }
            }
            ok &= group_ok;
            const char* sim = sims == count ? "yes" : sims == 0 ? "no" : "mixed";
            out << std::left << std::setw(4) << LieType(first.family, first.rank).name() << " l=" << first.l
                << " j=" << first.j << "  |l-j|!=1: " << std::setw(4) << (first.not_adjacent ? "yes" : "no")
                << " pointwise: " << std::setw(4) << (first.pointwise ? "yes" : "no") << " sim: " << std::setw(6)
                << sim << (group_ok ? "ok" : "MISMATCH") << '\n';
        }
        return ok ? exit_code::success : exit_code::verification;
    }

    inline int cmd_verify_minkowski(const CliOptions& o, std::ostream& out)
    {
        const auto type = cli_type(o);
        bool       ok   = true;
        for (int i = 1; i <= o.rank; ++i)
            for (int j = i; j <= o.rank; ++j)
            {
                const auto r = check_minkowski(type, DominantWeight::fundamental(o.rank, i),
                                               DominantWeight::fundamental(o.rank, j));
                out << type.name() << " omega_" << i << " + omega_" << j << ": " << (r.passed() ? "contained" : "NOT contained")
                    << '\n';
                print_witnesses(out, "fflv outside", r.fflv_outside);
                print_witnesses(out, "string outside", r.string_outside);
                ok &= r.passed();
            }
        return ok ? exit_code::success : exit_code::verification;
    }

    inline int cmd_verify_dilation(const CliOptions& o, std::ostream& out)
    {
        const auto r = check_lattice_corollary(cli_type(o), cli_weight(o), o.max_k);
        for (const auto& e : r.entries)
            out << r.descriptor.str() << " k=" << e.k << " fflv=" << e.fflv_count << " string=" << e.string_count
                << " weyl=" << e.weyl_dim << " equal=" << (e.equal ? "yes" : "no") << '\n';
        return r.passed() ? exit_code::success : exit_code::verification;
    }
} // namespace detail

/// Entry point of the command-line tool; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    detail::CliOptions o;
    CLI::App           app{"Lattice points of FFLV and string polytopes and the unimodular map between them", "fsl"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* threads_opt = app.add_option("--threads", o.threads, "Worker threads for grid runs (default: FSL_THREADS or 1)")
                            ->check(CLI::PositiveNumber);

    auto add_type = [&](CLI::App* sub) {
        sub->add_option("--type", o.type, "Cartan type")->required()->check(CLI::IsMember({"A", "C"}));
        sub->add_option("--rank", o.rank, "Rank n")->required()->check(CLI::PositiveNumber);
    };
    auto add_weight = [&](CLI::App* sub) {
        sub->add_option("--weight", o.weight, "Coefficients a1,...,an of lambda")
            ->required()
            ->delimiter(',')
            ->check(CLI::NonNegativeNumber);
    };

    auto* fflv     = app.add_subcommand("fflv", "FFLV lattice points")->require_subcommand(1);
    auto* fflv_pts = fflv->add_subcommand("points", "Write the FFLV lattice points of P(lambda) as JSON");
    add_type(fflv_pts);
    add_weight(fflv_pts);
    fflv_pts->add_option("--out", o.out_file, "Output file (default stdout)");

    auto* sp     = app.add_subcommand("stringpoly", "String polytope lattice points")->require_subcommand(1);
    auto* sp_pts = sp->add_subcommand("points", "Write the string points of the Demazure module for lambda as JSON");
    add_type(sp_pts);
    add_weight(sp_pts);
    sp_pts->add_option("--out", o.out_file, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Exhaustive verification runs")->require_subcommand(1);
    auto* vmain  = verify->add_subcommand("main", "Compare T(P(lambda)) with the string points for all small lambda");
    add_type(vmain);
    vmain->add_option("--max-level", o.max_level, "Largest a1+...+an")->required();
    vmain->add_option("--json", o.json_file, "Write the JSON report array here");
    vmain->add_option("--max-dim", o.max_dim, "Skip cases whose dimension exceeds this");
    vmain->add_flag("--corrupt-fixture", o.corrupt)->group("");

    auto* vuni  = verify->add_subcommand("unimodular", "Determinant, entries and triangularity of the linear part");
    auto* vfold = verify->add_subcommand("fold", "Folding of the type A translation vectors onto type C");
    auto* vcomm = verify->add_subcommand("comm", "Commutation table of lowering operators on exterior powers");
    for (auto* sub : {vuni, vfold, vcomm})
        sub->add_option("--max-rank", o.max_rank, "Largest rank")->required()->check(CLI::PositiveNumber);

    auto* vmink = verify->add_subcommand("minkowski", "Minkowski containment for all pairs of fundamental weights");
    add_type(vmink);
    auto* vdil = verify->add_subcommand("dilation", "Counts of the dilated lattice-point sets k*lambda");
    add_type(vdil);
    add_weight(vdil);
    vdil->add_option("--max-k", o.max_k, "Largest dilation factor")->check(CLI::PositiveNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_code::success : exit_code::usage;
    }

    try
    {
        if (threads_opt->count() == 0)
        {
            try
            {
                o.threads = threads_from_env(1);
            }
            catch (const std::invalid_argument& e)
            {
                throw detail::UsageError(e.what());
            }
        }
        if (fflv_pts->parsed())
        {
            detail::write_text(dump(to_json(make_fflv_document(detail::cli_type(o), detail::cli_weight(o)))),
                               o.out_file, out);
            return exit_code::success;
        }
        if (sp_pts->parsed())
        {
            detail::write_text(dump(to_json(make_string_document(detail::cli_type(o), detail::cli_weight(o)))),
                               o.out_file, out);
            return exit_code::success;
        }
        if (vmain->parsed())
            return detail::cmd_verify_main(o, out);
        if (vuni->parsed())
            return detail::cmd_verify_unimodular(o, out, err);
        if (vfold->parsed())
            return detail::cmd_verify_fold(o, out, err);
        if (vcomm->parsed())
            return detail::cmd_verify_comm(o, out, err);
        if (vmink->parsed())
            return detail::cmd_verify_minkowski(o, out);
        if (vdil->parsed())
            return detail::cmd_verify_dilation(o, out);
    }
    catch (const detail::UsageError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    catch (const GateFailure& e)
    {
        err << "verification gate failed: " << e.what() << '\n';
        return exit_code::gate;
    }
    catch (const std::exception& e)
    {
        err << "internal error: " << e.what() << '\n';
        return exit_code::gate;
    }
    err << "error: no command given\n";
    return exit_code::usage;
}
} // namespace fsl

#endif // FSL_CLI_HPP
