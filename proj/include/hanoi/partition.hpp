#pragma once

#include <vector>

#include "hanoi/types.hpp"

namespace hanoi {

// Size of the remainder (the disks NOT going into the next block) when
// splitting n disks with h pegs available. Requires h >= 3 and n >= 1;
// always returns a value in [1, n].
//   n < h   -> max{n-1, 1}
//   h = 4   -> min{n, round(sqrt(2n))}, round ties upward (never hit here)
//   h >= 5  -> min{n, ceil(((h-2)!)^a / (h-3)! * n^a)}, a = (h-3)/(h-2)
// The h=4 branch compares (2m-1)^2 against 8n and the h>=5 branch compares
// (k*(h-3)!)^(h-2) against ((h-2)!*n)^(h-3) in exact integer arithmetic: the
// result decides block boundaries, so it must be bit-exact.
DiskSize remainder(int h, DiskSize n);

// round(sqrt(2n)) with ties rounding up. 2n is never an exact odd half
// square, so ties cannot occur; evaluated by exact integer comparison.
DiskSize round_sqrt_2n(DiskSize n);

// Sizes of the h-1 blocks the solvers split n disks into (h >= 2). The last
// size is always 1. For h = 2 requires n = 1.
std::vector<DiskSize> partition_sizes(int h, DiskSize n);

// The ordered tuple (B_1, ..., B_{h-1}): B_1 holds the smallest disks, the
// final block is the singleton {B_max}; some blocks may be empty.
struct BlockPartition {
    std::vector<Block> blocks;
    std::vector<DiskSize> sizes;

    // n(i) = total size of blocks i..h-1 (1-based i).
    DiskSize suffix_size(int i) const;
    // Union of blocks i..h-1; contiguous by construction.
    Block suffix_block(int i) const;
};

// Splits a non-empty block into h-1 sub-blocks (h >= 2). For h = 2 the block
// must be a singleton.
BlockPartition partition(int h, Block block);

// Whether block sizes commute with taking the suffix: the j-th size of the
// (h-i+1)-peg partition of the n(i) largest disks equals size i+j-1 of the
// h-peg partition. Requires 1 <= i <= h-1 and 1 <= j <= h-i.
bool shift_identity_holds(int h, DiskSize n, int i, int j);

} // namespace hanoi
