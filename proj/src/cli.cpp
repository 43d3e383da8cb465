#include "hanoi/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hanoi/bounds.hpp"
#include "hanoi/config.hpp"
#include "hanoi/counts.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/partition.hpp"
#include "hanoi/sequence_io.hpp"
#include "hanoi/solvers.hpp"

namespace hanoi {

namespace {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("HANOI_STATE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0) {
            return parsed;
        }
    }
    return OracleOptions{}.state_budget;
}

void print_report(const CheckReport& report, const std::string& name, std::ostream& out) {
    out << name << ": " << report.checks << " checks, " << report.violations.size()
        << " violations\n";
    for (const auto& violation : report.violations) {
        out << "  violation: " << violation << '\n';
    }
    for (const auto& note : report.notes) {
        out << "  note: " << note << '\n';
    }
}

struct SolveArgs {
    int h = 4;
    DiskSize n = 0;
    int s = 1;
    int d = 0;
    int a_lo = 0;
    int a_hi = 0;
    std::string algo = "auto";
    bool count_only = false;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    const PegInterval pegs{args.a_lo > 0 ? args.a_lo : 1, args.a_hi > 0 ? args.a_hi : args.h};
    if (pegs.lo < 1 || pegs.hi > args.h || pegs.lo > pegs.hi) {
        err << "error: available interval outside 1.." << args.h << '\n';
        return 2;
    }
    if (args.s < pegs.lo || args.s > pegs.hi || args.d < pegs.lo || args.d > pegs.hi) {
        err << "error: source/destination outside the available interval\n";
        return 2;
    }
    const Block block = Block::whole(args.n);
    const bool ends_14 = (args.s == 1 && args.d == 4) || (args.s == 4 && args.d == 1);
    const bool four_task = args.h == 4 && ends_14 && pegs == PegInterval{1, 4};
    const bool ends_task = (args.s == pegs.lo && args.d == pegs.hi) ||
                           (args.s == pegs.hi && args.d == pegs.lo);
    std::string algo = args.algo;
    if (algo == "auto") {
        algo = four_task ? "four" : "general";
    }
    if (algo == "four" && !four_task) {
        err << "error: --algo four requires h=4, task 1<->4, full interval\n";
        return 2;
    }
    if (algo == "farthest" && !ends_task) {
        err << "error: --algo farthest requires the task to span the interval ends\n";
        return 2;
    }
    if (algo != "four" && algo != "farthest" && algo != "general") {
        err << "error: unknown --algo '" << args.algo << "'\n";
        return 2;
    }

    if (args.count_only) {
        if (args.s == args.d) {
            out << 0 << '\n';
        } else if (algo == "four") {
            out << four_move_count(args.n) << '\n';
        } else {
            // normalize to the available interval
            out << general_count(pegs.width(), args.n, args.s - pegs.lo + 1,
                                 args.d - pegs.lo + 1)
                << '\n';
        }
        return 0;
    }

    if (args.s == args.d) {
        return 0; // the empty sequence is the identity
    }
    std::optional<MoveStream> stream;
    if (algo == "four") {
        stream = args.s == 1 ? four_move(block) : inverse(four_move(block));
    } else if (algo == "farthest") {
        stream = args.s < args.d ? farthest_move(block, args.s, args.d)
                                 : inverse(farthest_move(block, args.d, args.s));
    } else {
        stream = solve_task(block, args.s, args.d, pegs);
    }
    write_moves(out, *stream);
    return 0;
}

int run_verify(int h, DiskSize n, int s, int d, std::istream& in, std::ostream& out,
               std::ostream& err) {
    Replayer replay(Configuration::perfect(h, s, n));
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream fields(line);
        Move move;
        std::string extra;
        if (!(fields >> move.disk >> move.from >> move.to) || (fields >> extra)) {
            err << "error: line " << line_no << ": expected '<disk> <from> <to>'\n";
            return 1;
        }
        try {
            replay.apply(move);
        } catch (const IllegalMoveError& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
    }
    if (!(replay.current() == Configuration::perfect(h, d, n))) {
        err << "error: sequence does not end with all " << n << " disks on peg " << d << '\n';
        return 1;
    }
    out << "ok: " << replay.moves_applied() << " moves transfer " << n << " disks from peg "
        << s << " to peg " << d << '\n';
    return 0;
}

void print_approx(const CountValue& value, std::ostream& out) {
    if (value <= 0) {
        out << "approx 0 (log3 undefined)\n";
        return;
    }
    const Interval iv = Interval::of_count(value, kDefaultPrecision);
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", iv.log3().midpoint_double());
    out << "approx " << iv.upper_decimal(7) << " (log3 = " << buffer << ")\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Tower of Hanoi on a row of pegs: solvers, exact counts, BFS oracle, bounds"};
    app.require_subcommand(1);
    // the option name --h collides with the default -h help short flag
    app.set_help_flag("--help", "print help");
    auto add_sub = [&app](const char* name, const char* description) {
        auto* sub = app.add_subcommand(name, description);
        sub->set_help_flag("--help", "print help");
        return sub;
    };

    SolveArgs solve_args;
    auto* solve_cmd = add_sub("solve", "Stream a move sequence for a perfect task");
    solve_cmd->add_option("--h", solve_args.h, "number of pegs")->required()->check(CLI::Range(2, 1024));
    solve_cmd->add_option("--n", solve_args.n, "number of disks")->required()
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--s", solve_args.s, "source peg")->required();
    solve_cmd->add_option("--d", solve_args.d, "destination peg")->required();
    solve_cmd->add_option("--a-min", solve_args.a_lo, "leftmost available peg (default 1)");
    solve_cmd->add_option("--a-max", solve_args.a_hi, "rightmost available peg (default h)");
    solve_cmd->add_option("--algo", solve_args.algo, "auto|four|farthest|general")
        ->default_str("auto");
    solve_cmd->add_flag("--count-only", solve_args.count_only,
                        "print the exact move count instead of the sequence");

    struct {
        int h = 4;
        DiskSize n = 0;
        int s = 1;
        int d = 0;
    } verify_args;
    auto* verify_cmd =
        add_sub("verify", "Replay a move sequence from stdin against a task");
    verify_cmd->add_option("--h", verify_args.h, "number of pegs")->required();
    verify_cmd->add_option("--n", verify_args.n, "number of disks")->required();
    verify_cmd->add_option("--s", verify_args.s, "source peg")->required();
    verify_cmd->add_option("--d", verify_args.d, "destination peg")->required();

    struct {
        std::string kind;
        int h = 4;
        DiskSize n = 0;
        int s = 1;
        int d = 0;
        bool approx = false;
    } count_args;
    auto* count_cmd = add_sub("count", "Print an exact move count");
    count_cmd->add_option("--kind", count_args.kind, "T (four_move), F (farthest), G (general)")
        ->required()
        ->check(CLI::IsMember({"T", "F", "G"}));
    count_cmd->add_option("--h", count_args.h, "number of pegs (F, G)");
    count_cmd->add_option("--n", count_args.n, "number of disks")->required();
    count_cmd->add_option("--s", count_args.s, "source peg (G)");
    count_cmd->add_option("--d", count_args.d, "destination peg (G)");
    count_cmd->add_flag("--approx", count_args.approx, "also print a scientific approximation");

    struct {
        int h = 4;
        DiskSize n = 0;
        int s = 0;
        int d = 0;
        std::uint64_t budget = 0;
    } oracle_args;
    auto* oracle_cmd = add_sub("oracle", "Exact minimal distance by BFS");
    oracle_cmd->add_option("--h", oracle_args.h, "number of pegs")->required();
    oracle_cmd->add_option("--n", oracle_args.n, "number of disks")->required();
    oracle_cmd->add_option("--s", oracle_args.s, "source peg")->required();
    oracle_cmd->add_option("--d", oracle_args.d, "destination peg")->required();
    oracle_cmd->add_option("--budget", oracle_args.budget,
                           "state budget (default HANOI_STATE_BUDGET or 1e8)");

    struct {
        DiskSize n = 11;
        std::string format = "text";
        std::uint64_t budget = 0;
    } table1_args;
    auto* table1_cmd = add_sub("table1", "Minimal moves for all four-peg perfect tasks");
    table1_cmd->add_option("--n", table1_args.n, "largest disk count (default 11)");
    table1_cmd->add_option("--format", table1_args.format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    table1_cmd->add_option("--budget", table1_args.budget, "state budget override");

    struct {
        int h = 4;
        DiskSize n = 50;
        std::string format = "text";
        DiskSize value_at = 0;
        int precision = 50;
    } bounds_args;
    auto* bounds_cmd =
        add_sub("bounds", "Closed-form upper bound versus exact counts");
    bounds_cmd->add_option("--h", bounds_args.h, "number of pegs")->required();
    bounds_cmd->add_option("--n", bounds_args.n, "largest disk count (default 50)");
    bounds_cmd->add_option("--format", bounds_args.format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    bounds_cmd->add_option("--value-at", bounds_args.value_at,
                           "print the bound value at this n and exit");
    bounds_cmd->add_option("--precision", bounds_args.precision,
                           "significant digits for --value-at (default 50)");

    struct {
        int h = 4;
        DiskSize n = 0;
    } partition_args;
    auto* partition_cmd = add_sub("partition", "Block sizes used by the solvers");
    partition_cmd->add_option("--h", partition_args.h, "number of pegs")->required();
    partition_cmd->add_option("--n", partition_args.n, "number of disks")->required();

    struct {
        int h_max = 8;
        DiskSize n_max = 300;
        DiskSize bfs_n = 11;
        std::uint64_t budget = 0;
    } check_args;
    auto* check_cmd = add_sub("check", "Run the identity, structure and bound suites");
    check_cmd->add_option("--h-max", check_args.h_max, "largest peg count (default 8)");
    check_cmd->add_option("--n-max", check_args.n_max, "largest disk count (default 300)");
    check_cmd->add_option("--bfs-n", check_args.bfs_n, "largest BFS disk count (default 11)");
    check_cmd->add_option("--budget", check_args.budget, "state budget override");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (solve_cmd->parsed()) {
            return run_solve(solve_args, out, err);
        }

        if (verify_cmd->parsed()) {
            return run_verify(verify_args.h, verify_args.n, verify_args.s, verify_args.d, in,
                              out, err);
        }

        if (count_cmd->parsed()) {
            CountValue value;
            if (count_args.kind == "T") {
                value = four_move_count(count_args.n);
            } else if (count_args.kind == "F") {
                value = farthest_count(count_args.h, count_args.n);
            } else {
                if (count_args.s == count_args.d) {
                    err << "error: kind G requires distinct --s and --d\n";
                    return 2;
                }
                value = general_count(count_args.h, count_args.n, count_args.s, count_args.d);
            }
            out << value << '\n';
            if (count_args.approx) {
                print_approx(value, out);
            }
            return 0;
        }

        if (oracle_cmd->parsed()) {
            OracleOptions options;
            options.state_budget =
                oracle_args.budget > 0 ? oracle_args.budget : default_budget();
            out << perfect_distance(oracle_args.h, oracle_args.n, oracle_args.s, oracle_args.d,
                                    options)
                << '\n';
            return 0;
        }

        if (table1_cmd->parsed()) {
            OracleOptions options;
            options.state_budget =
                table1_args.budget > 0 ? table1_args.budget : default_budget();
            const auto rows = regenerate_table1(table1_args.n, options);
            out << (table1_args.format == "csv" ? table1_csv(rows) : table1_text(rows));
            return 0;
        }

        if (bounds_cmd->parsed()) {
            if (bounds_args.value_at > 0) {
                const Interval u = upper_bound_u(bounds_args.h, bounds_args.value_at,
                                                 kDefaultPrecision + 4 * bounds_args.precision);
                out << u.upper_decimal(bounds_args.precision) << '\n';
                return 0;
            }
            const auto result = compare_bounds(bounds_args.h, bounds_args.n);
            if (bounds_args.format == "csv") {
                out << bounds_csv(bounds_args.h, result.rows);
            } else {
                out << "n  log3(count)  log3(bound)  ratio\n";
                for (const auto& row : result.rows) {
                    out << row.n << "  " << row.log3_count << "  " << row.log3_bound << "  "
                        << row.ratio << '\n';
                }
                const Interval exponent =
                    informational_lower_exponent(bounds_args.h, bounds_args.n);
                out << "complete-graph lower-bound exponent at n=" << bounds_args.n << ": "
                    << exponent.upper_decimal(6)
                    << " (informational only; the 2^((1+o(1))e) lower bound has an unspecified"
                       " o(1) term)\n";
            }
            for (const auto& violation : result.report.violations) {
                err << "violation: " << violation << '\n';
            }
            return result.report.ok() ? 0 : 1;
        }

        if (partition_cmd->parsed()) {
            const BlockPartition result =
                partition(partition_args.h, Block::whole(partition_args.n));
            for (std::size_t j = 0; j < result.blocks.size(); ++j) {
                const Block& block = result.blocks[j];
                out << 'B' << (j + 1) << ": ";
                if (block.is_empty()) {
                    out << "empty\n";
                } else {
                    out << '[' << block.min << ',' << block.max << "] size " << block.size()
                        << '\n';
                }
            }
            return 0;
        }

        if (check_cmd->parsed()) {
            OracleOptions options;
            options.state_budget = check_args.budget > 0 ? check_args.budget : default_budget();
            const CheckReport counts_report =
                check_count_identities(check_args.h_max, check_args.n_max);
            print_report(counts_report, "count identities", out);
            const CheckReport structure_report = check_structure(4, check_args.bfs_n, options);
            print_report(structure_report, "structure (BFS)", out);
            CheckReport bounds_report;
            for (int h = 3; h <= check_args.h_max; ++h) {
                bounds_report.merge(compare_bounds(h, check_args.n_max).report);
            }
            print_report(bounds_report, "closed-form bounds", out);
            const bool ok =
                counts_report.ok() && structure_report.ok() && bounds_report.ok();
            out << (ok ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace hanoi
