#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hanoi/config.hpp"
#include "hanoi/types.hpp"

namespace hanoi {

struct OracleOptions {
    // A run must satisfy h^n <= state_budget before any allocation happens.
    std::uint64_t state_budget = 100'000'000;
};

class StateBudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exact minimal number of moves between two configurations of the same
// (h, n), by bidirectional breadth-first search over the implicit graph of
// all h^n configurations. The graph is connected, so a distance always
// exists. Throws StateBudgetError when h^n exceeds the budget.
std::int64_t bfs_distance(const Configuration& from, const Configuration& to,
                          const OracleOptions& options = {});

// Distance between the perfect configurations on pegs `from_peg` and
// `to_peg`.
std::int64_t perfect_distance(int h, DiskSize n, int from_peg, int to_peg,
                              const OracleOptions& options = {});

// Plain single-source BFS from the perfect configuration on `from_peg`,
// returning the distances to the perfect configurations on `to_pegs`
// (stops once all targets are reached).
std::vector<std::int64_t> perfect_distances(int h, DiskSize n, int from_peg,
                                            const std::vector<int>& to_pegs,
                                            const OracleOptions& options = {});

struct Table1Row {
    DiskSize n;
    std::int64_t t23, t12, t13, t14;
    std::string ratio; // t14 / (sqrt(n) 3^sqrt(2n)), half-up to 3 decimals
};

// The four perfect-task distance columns for n = 1..n_max on four pegs,
// plus the ratio column.
std::vector<Table1Row> regenerate_table1(DiskSize n_max = 11,
                                         const OracleOptions& options = {});

std::string table1_text(const std::vector<Table1Row>& rows);
// CSV: n,t23,t12,t13,t14,ratio
std::string table1_csv(const std::vector<Table1Row>& rows);

// For n = 1..n_max verifies by BFS, on perfect configurations:
//  - h = 4: every perfect task other than 1->4 is strictly shorter than
//    1->4 (so 1->4 is the hardest task);
//  - any h: for a tower on peg i <= h-2 (pegs h-1, h empty), reaching peg
//    h-2 or peg h-1 is strictly cheaper than reaching peg h.
// The two empirically observed (but unproven) orderings 1->2 < 1->3 and
// 2->3 < 1->2 for n >= 3 are reported as notes, never asserted.
CheckReport check_structure(int h, DiskSize n_max,
                            const OracleOptions& options = {});

} // namespace hanoi
