// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
//   1. four-peg distance table reproduced exactly by BFS (n = 1..11)
//   2. solver sequences replay legally for h = 3..6, n = 0..10, all s < d
//   3. emitted lengths equal the exact counts on that sweep (+ four_move n <= 16)
//   4. pinned recurrence values (table column and 3^n - 1)
//   5. four_move_count(n) < 1.6 sqrt(n) 3^sqrt(2n) for n <= 500
//   6. farthest_count(h,n) <= U(h,n) for h = 3..8, n <= 300
//   7. structural identities and inequalities (BFS chain + count level)
//   8. partition properties for h <= 8, n <= 500

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hanoi/bounds.hpp"
#include "hanoi/config.hpp"
#include "hanoi/counts.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/partition.hpp"
#include "hanoi/solvers.hpp"

using namespace hanoi;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (problem.empty()) {
        std::printf("criterion %d (%s): PASS [%lld ms]\n", number, name.c_str(),
                    static_cast<long long>(elapsed));
    } else {
        ++failures;
        std::printf("criterion %d (%s): FAIL - %s [%lld ms]\n", number, name.c_str(),
                    problem.c_str(), static_cast<long long>(elapsed));
    }
    std::fflush(stdout);
}

template <typename... Parts>
std::string cat(Parts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

struct KnownRow {
    std::int64_t t23, t12, t13, t14;
    const char* ratio;
};

// the published minimal numbers of moves for the four perfect tasks
const KnownRow kTable[11] = {
    {1, 1, 2, 3, "0.634"},        {4, 4, 6, 10, "0.786"},      {7, 9, 12, 19, "0.744"},
    {14, 18, 22, 34, "0.760"},    {23, 29, 36, 57, "0.790"},   {34, 44, 54, 88, "0.799"},
    {53, 69, 78, 123, "0.762"},   {78, 96, 112, 176, "0.768"}, {105, 133, 158, 253, "0.798"},
    {138, 182, 212, 342, "0.795"}, {187, 241, 272, 449, "0.783"},
};

std::string check_table1() {
    const auto rows = regenerate_table1(11);
    if (rows.size() != 11) return "expected 11 rows";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& got = rows[i];
        const auto& want = kTable[i];
        if (got.t23 != want.t23 || got.t12 != want.t12 || got.t13 != want.t13 ||
            got.t14 != want.t14) {
            return cat("distance mismatch at n=", i + 1, ": got (", got.t23, ",", got.t12, ",",
                       got.t13, ",", got.t14, ")");
        }
        if (got.ratio != want.ratio) {
            return cat("ratio mismatch at n=", i + 1, ": got ", got.ratio, " want ",
                       want.ratio);
        }
    }
    return "";
}

std::string check_solver_sweep() {
    for (int h = 3; h <= 6; ++h) {
        for (DiskSize n = 0; n <= 10; ++n) {
            for (int s = 1; s <= h; ++s) {
                for (int d = s + 1; d <= h; ++d) {
                    auto stream = general_move(Block::whole(n), s, d, PegInterval{1, h});
                    try {
                        const auto final_config =
                            apply_stream(Configuration::perfect(h, s, n), stream);
                        if (!(final_config == Configuration::perfect(h, d, n))) {
                            return cat("wrong final configuration at h=", h, " n=", n,
                                       " s=", s, " d=", d);
                        }
                    } catch (const IllegalMoveError& e) {
                        return cat("illegal move at h=", h, " n=", n, " s=", s, " d=", d, ": ",
                                   e.what());
                    }
                    // farthest_move must emit the identical sequence at the ends
                    if (s == 1 && d == h) {
                        auto a = materialize(farthest_move(Block::whole(n), 1, h));
                        auto b = materialize(general_move(Block::whole(n), 1, h,
                                                          PegInterval{1, h}));
                        if (!(a == b)) {
                            return cat("farthest/general sequences differ at h=", h, " n=", n);
                        }
                    }
                }
            }
        }
    }
    return "";
}

std::string check_length_agreement() {
    for (int h = 3; h <= 6; ++h) {
        for (DiskSize n = 0; n <= 10; ++n) {
            {
                auto stream = farthest_move(Block::whole(n), 1, h);
                while (stream.next()) {
                }
                if (CountValue(stream.emitted()) != farthest_count(h, n)) {
                    return cat("farthest length mismatch at h=", h, " n=", n);
                }
            }
            for (int s = 1; s <= h; ++s) {
                for (int d = s + 1; d <= h; ++d) {
                    auto stream = general_move(Block::whole(n), s, d, PegInterval{1, h});
                    while (stream.next()) {
                    }
                    if (CountValue(stream.emitted()) != general_count(h, n, s, d)) {
                        return cat("general length mismatch at h=", h, " n=", n, " s=", s,
                                   " d=", d);
                    }
                }
            }
        }
    }
    for (DiskSize n = 0; n <= 16; ++n) {
        auto stream = four_move(Block::whole(n));
        while (stream.next()) {
        }
        if (CountValue(stream.emitted()) != four_move_count(n)) {
            return cat("four_move length mismatch at n=", n);
        }
    }
    return "";
}

std::string check_recurrence_values() {
    if (four_move_count(1) != 3 || four_move_count(2) != 10 || four_move_count(3) != 19) {
        return "four_move_count does not match the table column at n = 1..3";
    }
    CountValue power = 1;
    for (DiskSize n = 0; n <= 200; ++n) {
        if (farthest_count(3, n) != power - 1) {
            return cat("farthest_count(3,", n, ") != 3^n - 1");
        }
        power *= 3;
    }
    return "";
}

std::string check_four_peg_bound() {
    for (DiskSize n = 1; n <= 500; ++n) {
        if (!count_below_log3(four_move_count(n),
                              [n](mpfr_prec_t p) { return log3_four_peg_bound(n, p); },
                              /*strict=*/true)) {
            return cat("four_move_count(", n, ") not strictly below the bound");
        }
    }
    return "";
}

std::string check_closed_form_bound() {
    for (int h = 3; h <= 8; ++h) {
        const auto result = compare_bounds(h, 300);
        if (!result.report.ok()) {
            return result.report.violations.front();
        }
    }
    return "";
}

std::string check_structural() {
    const auto bfs_report = check_structure(4, 11);
    if (!bfs_report.ok()) {
        return bfs_report.violations.front();
    }
    const auto count_report = check_count_identities(8, 300);
    if (!count_report.ok()) {
        return count_report.violations.front();
    }
    // solver lengths dominate the exact optimum over the BFS-reachable range;
    // the dedicated four-peg procedure is optimal exactly up to three disks
    for (DiskSize n = 1; n <= 11; ++n) {
        const auto from1 = perfect_distances(4, n, 1, {2, 3, 4});
        const auto from2 = perfect_distances(4, n, 2, {3});
        const std::int64_t dists[] = {from2[0], from1[0], from1[1], from1[2]};
        const int pairs[][2] = {{2, 3}, {1, 2}, {1, 3}, {1, 4}};
        for (int k = 0; k < 4; ++k) {
            if (general_count(4, n, pairs[k][0], pairs[k][1]) < dists[k]) {
                return cat("solver beats the exact optimum at n=", n, " task ",
                           pairs[k][0], "->", pairs[k][1]);
            }
        }
        if (four_move_count(n) < from1[2]) {
            return cat("four_move beats the exact optimum at n=", n);
        }
        if (n <= 3 && four_move_count(n) != from1[2]) {
            return cat("four_move not optimal at n=", n);
        }
    }
    return "";
}

std::string check_partition_properties() {
    for (int h = 3; h <= 8; ++h) {
        for (DiskSize n = 1; n <= 500; ++n) {
            const DiskSize m = remainder(h, n);
            if (m < 1 || m > n) return cat("remainder out of range at h=", h, " n=", n);
            if (h == 3 && m != 1) return cat("three-peg remainder not 1 at n=", n);
            if (h >= 4 && n > 1 && n < h && m != n - 1) {
                return cat("below-h remainder not n-1 at h=", h, " n=", n);
            }
            if (h >= 4 && n >= h && m < 2) {
                return cat("remainder below 2 at h=", h, " n=", n);
            }
        }
    }
    for (int h = 2; h <= 8; ++h) {
        for (DiskSize n = 1; n <= 500; ++n) {
            if (h == 2 && n > 1) continue;
            const auto part = partition(h, Block::whole(n));
            if (part.blocks.size() != static_cast<std::size_t>(h - 1)) {
                return cat("wrong block count at h=", h, " n=", n);
            }
            if (!(part.blocks.back() == Block::range(n, n))) {
                return cat("last block not the largest singleton at h=", h, " n=", n);
            }
            DiskSize total = 0;
            DiskSize previous_max = 0;
            for (std::size_t j = 0; j < part.blocks.size(); ++j) {
                const Block& b = part.blocks[j];
                total += b.size();
                if (j + 1 < part.blocks.size() && b.size() > n - 1) {
                    return cat("oversized block at h=", h, " n=", n, " j=", j + 1);
                }
                if (!b.is_empty()) {
                    if (b.min != previous_max + 1) {
                        return cat("ordering violated at h=", h, " n=", n, " j=", j + 1);
                    }
                    previous_max = b.max;
                }
            }
            if (total != n || previous_max != n) {
                return cat("blocks do not partition at h=", h, " n=", n);
            }
            for (int i = 1; i <= h - 1; ++i) {
                for (int j = 1; j <= h - i; ++j) {
                    if (!shift_identity_holds(h, n, i, j)) {
                        return cat("shift identity failed at h=", h, " n=", n, " i=", i,
                                   " j=", j);
                    }
                }
            }
        }
    }
    return "";
}

} // namespace

int main() {
    criterion(1, "four-peg distance table", check_table1);
    criterion(2, "solver correctness sweep", check_solver_sweep);
    criterion(3, "count-sequence agreement", check_length_agreement);
    criterion(4, "recurrence values", check_recurrence_values);
    criterion(5, "four-peg strict bound to n=500", check_four_peg_bound);
    criterion(6, "closed-form bound h=3..8 to n=300", check_closed_form_bound);
    criterion(7, "structural inequalities", check_structural);
    criterion(8, "partition properties to n=500", check_partition_properties);
    if (failures != 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
