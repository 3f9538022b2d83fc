/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/bounds.hh>
#include <zsschur/checker.hh>
#include <zsschur/cli.hh>
#include <zsschur/constructions.hh>
#include <zsschur/solver.hh>
#include <zsschur/text_format.hh>
#include <zsschur/verify.hh>

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace zsschur
{
    namespace
    {
        struct Flags
        {
            int k = 0;
            int r = 0;
            string variant = "full";
            string out_path;
            string file;
            bool oracle = false;

            optional<std::uint64_t> max_nodes;
            optional<double> timeout;
            unsigned threads = 1;
            int split_depth = 0;
            bool deterministic = false;
            string cert_out;

            string suite = "small";
            bool inject_fault = false;
        };

        auto run_bounds(const Flags & f, ostream & out) -> int
        {
            auto report = theoretical_bounds(f.k, f.r, parse_palette(f.variant));
            out << format_bounds(report);
            return exit_code::success;
        }

        auto run_construct(const Flags & f, ostream & out) -> int
        {
            auto spec = ProblemSpec::make(f.k, f.r);
            auto chi = construct_lower_bound(spec.k, spec.r);
            if (f.out_path.empty()) {
                out << "# n=" << chi.n() << '\n';
                write_coloring(out, chi, spec.k);
            }
            else {
                write_coloring_file(f.out_path, chi, spec.k);
                out << "n=" << chi.n() << '\n';
            }
            return exit_code::success;
        }

        auto run_check(const Flags & f, ostream & out, ostream & err) -> int
        {
            auto file = f.file == "-" ? read_coloring(std::cin) : read_coloring_file(f.file);
            if (file.k != f.k)
                err << "warning: file header has k=" << file.k << ", checking with k=" << f.k << '\n';

            auto spec = ProblemSpec::make(f.k, file.coloring.r());
            auto witness = f.oracle ? brute_force_oracle(file.coloring, spec) : find_zero_sum_solution(file.coloring, spec);
            if (! witness) {
                out << "FREE\n";
                return exit_code::success;
            }
            out << format_witness(*witness) << '\n';
            return exit_code::failure;
        }

        auto run_solve(const Flags & f, ostream & out) -> int
        {
            auto spec = ProblemSpec::make(f.k, f.r, parse_palette(f.variant));
            SearchConfig cfg;
            cfg.max_nodes = f.max_nodes;
            if (f.timeout)
                cfg.timeout = std::chrono::duration<double>(*f.timeout);
            cfg.threads = f.threads;
            cfg.deterministic = f.deterministic;
            cfg.split_depth = f.split_depth;

            auto result = solve_exact(spec, cfg);

            out << "status=" << exact_status_name(result.status) << " value=" << result.value.to_string() << '\n';
            out << "lower=" << result.lower.to_string() << " upper=" << result.upper.to_string() << '\n';
            out << "nodes=" << result.stats.nodes << " prunes=" << result.stats.prunes
                << " max_depth=" << result.stats.max_depth
                << " elapsed_ms=" << std::chrono::duration<double, std::milli>(result.stats.elapsed).count() << '\n';

            if (! f.cert_out.empty() && result.certificate) {
                write_coloring_file(f.cert_out, *result.certificate, spec.k);
                out << "certificate=" << f.cert_out << " n=" << result.certificate->n() << '\n';
            }

            return result.status == ExactStatus::BudgetExhausted ? exit_code::budget : exit_code::success;
        }

        auto run_verify_command(const Flags & f, ostream & out) -> int
        {
            VerifyOptions options;
            options.suite = parse_suite(f.suite);
            options.inject_fault = f.inject_fault;
            if (f.max_nodes)
                options.extended_max_nodes = *f.max_nodes;
            options.extended_timeout_seconds = f.timeout;
            return run_verify(options, out);
        }

        auto add_kr(CLI::App * cmd, Flags & f, bool with_r = true) -> void
        {
            cmd->add_option("--k", f.k, "number of terms in x_1 + ... + x_{k-1} = x_k")->required();
            if (with_r)
                cmd->add_option("--r", f.r, "modulus / number of colours")->required();
        }
    }

    auto run_cli(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Zero-sum generalised Schur numbers: bounds, constructions, checking and exact search", "zsschur"};
        app.require_subcommand(1);

        Flags f;

        auto bounds = app.add_subcommand("bounds", "print every theorem-backed bound for (k, r)");
        add_kr(bounds, f);
        bounds->add_option("--variant", f.variant, "full or binary")->check(CLI::IsMember({"full", "binary"}));

        auto construct = app.add_subcommand("construct", "write the lower-bound colouring for (k, r)");
        add_kr(construct, f);
        construct->add_option("--out", f.out_path, "output file (default: stdout)");

        auto check = app.add_subcommand("check", "look for a zero-sum solution in a colouring file");
        add_kr(check, f, false);
        check->add_option("file", f.file, "colouring file, or - for stdin")->required();
        check->add_flag("--oracle", f.oracle, "use exhaustive enumeration instead of the reach table");

        auto solve = app.add_subcommand("solve", "compute S_z(k, r) by exhaustive search");
        add_kr(solve, f);
        solve->add_option("--variant", f.variant, "full or binary")->check(CLI::IsMember({"full", "binary"}));
        solve->add_option("--max-nodes", f.max_nodes, "budget on search nodes");
        solve->add_option("--timeout", f.timeout, "budget in seconds")->check(CLI::PositiveNumber);
        solve->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1u, 1024u));
        solve->add_option("--split-depth", f.split_depth, "frontier depth for threaded search (0 = auto)")->check(CLI::NonNegativeNumber);
        solve->add_flag("--deterministic", f.deterministic, "reproducible certificates");
        solve->add_option("--cert-out", f.cert_out, "write the extremal colouring here");

        auto verify = app.add_subcommand("verify", "replay the acceptance criteria");
        verify->add_option("--suite", f.suite, "small or paper")->check(CLI::IsMember({"small", "paper"}));
        verify->add_option("--max-nodes", f.max_nodes, "node budget for the extended search");
        verify->add_option("--timeout", f.timeout, "time budget in seconds for the extended search")->check(CLI::PositiveNumber);
        verify->add_flag("--inject-fault", f.inject_fault, "corrupt one construction; the suite must fail");

        vector<const char *> argv{"zsschur"};
        for (auto & a : args)
            argv.push_back(a.c_str());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_code::success : exit_code::invalid;
        }

        try {
            if (bounds->parsed())
                return run_bounds(f, out);
            if (construct->parsed())
                return run_construct(f, out);
            if (check->parsed())
                return run_check(f, out, err);
            if (solve->parsed())
                return run_solve(f, out);
            if (verify->parsed())
                return run_verify_command(f, out);
        }
        catch (const ParameterError & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::invalid;
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::invalid;
        }
        catch (const ContradictionError & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::invalid;
        }

        return exit_code::invalid;
    }
}
