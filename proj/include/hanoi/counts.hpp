#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "hanoi/types.hpp"

namespace hanoi {

// Exact move counts. Subexponential in n but astronomically large (F(3,n) is
// 3^n - 1), so always arbitrary precision.
using CountValue = boost::multiprecision::cpp_int;

// Memoized evaluation of the move-count recurrences. Thread-safe: lookups and
// insertions are serialized, recomputation races are idempotent. Two tables
// always agree (the recurrences are deterministic).
class CountTable {
  public:
    // Moves emitted by four_move for n disks.
    //   T(0) = 0,  T(n) = 3 T(n-m) + (7*3^m - 3)/6  with m = round(sqrt(2n)).
    CountValue four_move_count(DiskSize n);

    // Moves emitted by farthest_move over h pegs: h-1 moves of the largest
    // disk plus, per block j, three far-moves and j-1 one-peg shifts.
    // Requires n <= 1 when h = 2.
    CountValue farthest_count(int h, DiskSize n);

    // Moves emitted by general_move from s to d over pegs [1, h]; s != d in
    // any order (a reversed task costs the same as its inverse).
    CountValue general_count(int h, DiskSize n, int s, int d);

    // Moves of the n(i) largest disks within farthest_move (1 <= i <= h-1,
    // n >= 1).
    CountValue farthest_suffix_count(int h, DiskSize n, int i);

  private:
    CountValue general_count_impl(int h, DiskSize n, int s, int d);

    std::mutex mutex_;
    std::unordered_map<DiskSize, CountValue> t_memo_;
    std::unordered_map<std::uint64_t, CountValue> f_memo_;
    std::unordered_map<std::uint64_t, CountValue> g_memo_;
};

// Process-wide table behind the free functions.
CountTable& shared_counts();

CountValue four_move_count(DiskSize n);
CountValue farthest_count(int h, DiskSize n);
CountValue general_count(int h, DiskSize n, int s, int d);

// Evaluates every count-level identity and inequality over the sweep
// h in 3..h_max, n in 1..n_max and reports violations (expected: none):
// the suffix-count split identities at every split point, the 3-peg halving
// identity, the neighbor-task bound 3G <= 2F - 3, the shift-sum bound
// 9*sum <= 2F, the two-term upper recurrence, and G < F for interior tasks.
CheckReport check_count_identities(int h_max, DiskSize n_max,
                                   CountTable& table = shared_counts());

} // namespace hanoi
