#include "hanoi/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hanoi {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Largest integer whose square is <= x.
DiskSize integer_sqrt(DiskSize x) {
    if (x < 0) {
        throw std::invalid_argument("integer_sqrt of negative value");
    }
    auto r = static_cast<DiskSize>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// ceil((((h-2)!) n)^((h-3)/(h-2)) / (h-3)!) as the least k with
// (k (h-3)!)^(h-2) >= ((h-2)! n)^(h-3); exact, including the case where the
// (h-2)-th root is an integer.
DiskSize ceil_fractional_power(int h, DiskSize n) {
    const BigInt q = factorial(h - 3);
    const BigInt rhs = boost::multiprecision::pow(factorial(h - 2) * n,
                                                  static_cast<unsigned>(h - 3));
    auto satisfied = [&](DiskSize k) {
        return boost::multiprecision::pow(k * q, static_cast<unsigned>(h - 2)) >= rhs;
    };
    if (!satisfied(n)) {
        return n + 1; // caller takes min{n, .}
    }
    DiskSize lo = 1, hi = n;
    while (lo < hi) {
        DiskSize mid = lo + (hi - lo) / 2;
        if (satisfied(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

} // namespace

DiskSize round_sqrt_2n(DiskSize n) {
    if (n < 0) {
        throw std::invalid_argument("round_sqrt_2n requires n >= 0");
    }
    DiskSize m = integer_sqrt(2 * n);
    DiskSize odd = 2 * m + 1;
    return (odd * odd < 8 * n) ? m + 1 : m;
}

DiskSize remainder(int h, DiskSize n) {
    if (h < 3) {
        throw std::invalid_argument("remainder requires h >= 3");
    }
    if (n < 1) {
        throw std::invalid_argument("remainder requires n >= 1");
    }
    if (n < h) {
        return std::max<DiskSize>(n - 1, 1);
    }
    if (h == 4) {
        return std::min(n, round_sqrt_2n(n));
    }
    return std::min(n, ceil_fractional_power(h, n));
}

std::vector<DiskSize> partition_sizes(int h, DiskSize n) {
    if (h < 2) {
        throw std::invalid_argument("partition requires h >= 2");
    }
    if (n < 1) {
        throw std::invalid_argument("partition requires a non-empty block");
    }
    std::vector<DiskSize> sizes;
    sizes.reserve(static_cast<std::size_t>(h - 1));
    DiskSize current = n;
    for (int j = 1; j <= h - 2; ++j) {
        DiskSize m = remainder(h - j + 1, current);
        sizes.push_back(current - m);
        current = m;
    }
    if (current != 1) {
        // only reachable for h = 2 with more than one disk
        throw std::invalid_argument("a 2-peg partition can only hold a single disk (got " +
                                    std::to_string(n) + ")");
    }
    sizes.push_back(1);
    return sizes;
}

DiskSize BlockPartition::suffix_size(int i) const {
    DiskSize total = 0;
    for (std::size_t j = static_cast<std::size_t>(i - 1); j < sizes.size(); ++j) {
        total += sizes[j];
    }
    return total;
}

Block BlockPartition::suffix_block(int i) const {
    const Block last = blocks.back();
    return Block::range(last.max - suffix_size(i) + 1, last.max);
}

BlockPartition partition(int h, Block block) {
    if (block.is_empty()) {
        throw std::invalid_argument("partition requires a non-empty block");
    }
    BlockPartition result;
    result.sizes = partition_sizes(h, block.size());
    result.blocks.reserve(result.sizes.size());
    DiskSize next = block.min;
    for (DiskSize size : result.sizes) {
        if (size == 0) {
            result.blocks.push_back(Block::empty());
        } else {
            result.blocks.push_back(Block::range(next, next + size - 1));
            next += size;
        }
    }
    return result;
}

bool shift_identity_holds(int h, DiskSize n, int i, int j) {
    if (i < 1 || i > h - 1) {
        throw std::invalid_argument("shift identity requires 1 <= i <= h-1");
    }
    if (j < 1 || j > h - i) {
        throw std::invalid_argument("shift identity requires 1 <= j <= h-i");
    }
    const auto sizes = partition_sizes(h, n);
    DiskSize suffix = 0;
    for (std::size_t k = static_cast<std::size_t>(i - 1); k < sizes.size(); ++k) {
        suffix += sizes[k];
    }
    const auto sub = partition_sizes(h - i + 1, suffix);
    return sizes[static_cast<std::size_t>(j + i - 2)] == sub[static_cast<std::size_t>(j - 1)];
}

} // namespace hanoi
