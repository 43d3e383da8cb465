#include "hanoi/counts.hpp"

#include <sstream>
#include <stdexcept>

#include "hanoi/partition.hpp"

namespace hanoi {

namespace {

constexpr DiskSize kMaxMemoN = DiskSize{1} << 40;

std::uint64_t pack_key(int h, DiskSize n, int s, int d) {
    if (n >= kMaxMemoN || h > 0xFF || s > 0xFF || d > 0xFF) {
        throw std::invalid_argument("count arguments out of supported range");
    }
    return (static_cast<std::uint64_t>(h) << 56) | (static_cast<std::uint64_t>(s) << 48) |
           (static_cast<std::uint64_t>(d) << 40) | static_cast<std::uint64_t>(n);
}

CountValue pow3(DiskSize e) {
    return boost::multiprecision::pow(CountValue(3), static_cast<unsigned>(e));
}

} // namespace

CountValue CountTable::four_move_count(DiskSize n) {
    if (n < 0) {
        throw std::invalid_argument("four_move_count requires n >= 0");
    }
    if (n == 0) {
        return 0;
    }
    {
        std::lock_guard lock(mutex_);
        if (auto it = t_memo_.find(n); it != t_memo_.end()) {
            return it->second;
        }
    }
    const DiskSize m = round_sqrt_2n(n);
    // (7/6)*3^m - 1/2 is the integer (7*3^m - 3)/6 for m >= 1
    CountValue value = 3 * four_move_count(n - m) + (7 * pow3(m) - 3) / 6;
    std::lock_guard lock(mutex_);
    return t_memo_.emplace(n, std::move(value)).first->second;
}

CountValue CountTable::farthest_count(int h, DiskSize n) {
    if (h < 2) {
        throw std::invalid_argument("farthest_count requires h >= 2");
    }
    if (n < 0) {
        throw std::invalid_argument("farthest_count requires n >= 0");
    }
    if (n == 0) {
        return 0;
    }
    if (h == 2) {
        if (n > 1) {
            throw std::invalid_argument("two pegs can carry at most one disk");
        }
        return 1;
    }
    const std::uint64_t key = pack_key(h, n, 0, 0);
    {
        std::lock_guard lock(mutex_);
        if (auto it = f_memo_.find(key); it != f_memo_.end()) {
            return it->second;
        }
    }
    const auto sizes = partition_sizes(h, n);
    // h-1 moves of the largest disk; per block: three far-moves plus j-1
    // one-peg shifts, each shift costing the same as a 1->2 task.
    CountValue value = h - 1;
    for (int j = 1; j <= h - 2; ++j) {
        const DiskSize size_j = sizes[static_cast<std::size_t>(j - 1)];
        value += 3 * farthest_count(h - j + 1, size_j);
        if (j > 1) {
            value += (j - 1) * general_count(h - j + 1, size_j, 1, 2);
        }
    }
    std::lock_guard lock(mutex_);
    return f_memo_.emplace(key, std::move(value)).first->second;
}

CountValue CountTable::general_count(int h, DiskSize n, int s, int d) {
    if (s > d) {
        std::swap(s, d); // a reversed task is the inverse sequence, same length
    }
    if (h < 2 || s < 1 || d > h || s == d) {
        throw std::invalid_argument("general_count requires 1 <= s != d <= h");
    }
    if (n < 0) {
        throw std::invalid_argument("general_count requires n >= 0");
    }
    if (n == 0) {
        return 0;
    }
    if (s == 1 && d == h) {
        return farthest_count(h, n);
    }
    const std::uint64_t key = pack_key(h, n, s, d);
    {
        std::lock_guard lock(mutex_);
        if (auto it = g_memo_.find(key); it != g_memo_.end()) {
            return it->second;
        }
    }
    CountValue value = general_count_impl(h, n, s, d);
    std::lock_guard lock(mutex_);
    return g_memo_.emplace(key, std::move(value)).first->second;
}

CountValue CountTable::general_count_impl(int h, DiskSize n, int s, int d) {
    const auto sizes = partition_sizes(h, n);
    auto size_of = [&](int j) { return sizes[static_cast<std::size_t>(j - 1)]; };
    const int suffix_start = s + h - d;
    CountValue value = 0;
    // left-spread + right-accumulate of blocks 1..s-1, both over pegs [j, h]
    for (int j = 1; j <= s - 1; ++j) {
        value += general_count(h - j + 1, size_of(j), 1, s - j + 1);
        value += general_count(h - j + 1, size_of(j), 1, d - j + 1);
    }
    // right-spread far-move + left-accumulate of blocks s..h'-1
    for (int j = s; j <= suffix_start - 1; ++j) {
        value += farthest_count(h - j + 1, size_of(j));
        value += general_count(h - j + 1, size_of(j), d - s + 1, h - j + 1);
    }
    // remainder far-move over [s, d]
    DiskSize suffix = 0;
    for (std::size_t j = static_cast<std::size_t>(suffix_start - 1); j < sizes.size(); ++j) {
        suffix += sizes[j];
    }
    value += farthest_count(d - s + 1, suffix);
    return value;
}

CountValue CountTable::farthest_suffix_count(int h, DiskSize n, int i) {
    if (h < 2 || n < 1) {
        throw std::invalid_argument("farthest_suffix_count requires h >= 2, n >= 1");
    }
    if (i < 1 || i > h - 1) {
        throw std::invalid_argument("farthest_suffix_count requires 1 <= i <= h-1");
    }
    const auto sizes = partition_sizes(h, n);
    CountValue value = h - 1;
    for (int j = i; j <= h - 2; ++j) {
        const DiskSize size_j = sizes[static_cast<std::size_t>(j - 1)];
        value += 3 * farthest_count(h - j + 1, size_j);
        if (j > 1) {
            value += (j - 1) * general_count(h - j + 1, size_j, 1, 2);
        }
    }
    return value;
}

CountTable& shared_counts() {
    static CountTable table;
    return table;
}

CountValue four_move_count(DiskSize n) { return shared_counts().four_move_count(n); }

CountValue farthest_count(int h, DiskSize n) { return shared_counts().farthest_count(h, n); }

CountValue general_count(int h, DiskSize n, int s, int d) {
    return shared_counts().general_count(h, n, s, d);
}

namespace {

template <typename... Parts>
std::string cat(Parts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

} // namespace

CheckReport check_count_identities(int h_max, DiskSize n_max, CountTable& table) {
    if (h_max < 4) {
        throw std::invalid_argument("identity sweep requires h_max >= 4");
    }
    CheckReport report;
    auto fail = [&](std::string message) { report.violations.push_back(std::move(message)); };

    for (int h = 3; h <= h_max; ++h) {
        for (DiskSize n = 1; n <= n_max; ++n) {
            const auto sizes = partition_sizes(h, n);
            auto size_of = [&](int j) { return sizes[static_cast<std::size_t>(j - 1)]; };
            const CountValue f = table.farthest_count(h, n);

            if (h == 3) {
                // neighbor tasks cost exactly half of an end-to-end task
                ++report.checks;
                if (2 * table.general_count(3, n, 1, 2) != f) {
                    fail(cat("3-peg halving failed at n=", n));
                }
            }

            // suffix-count identity and full split, for every split point k
            for (int k = 1; k <= h - 1; ++k) {
                CountValue shift_sum = 0;
                DiskSize suffix = 0;
                for (int j = k; j <= h - 1; ++j) {
                    shift_sum += table.general_count(h - j + 1, size_of(j), 1, 2);
                    suffix += size_of(j);
                }
                const CountValue lhs = table.farthest_suffix_count(h, n, k);
                const CountValue rhs =
                    table.farthest_count(h - k + 1, suffix) + (k - 1) * shift_sum;
                ++report.checks;
                if (lhs != rhs) {
                    fail(cat("suffix-count identity failed at h=", h, " n=", n, " k=", k));
                }
                CountValue head = 0;
                for (int j = 1; j <= k - 1; ++j) {
                    head += 3 * table.farthest_count(h - j + 1, size_of(j));
                    head += (j - 1) * table.general_count(h - j + 1, size_of(j), 1, 2);
                }
                ++report.checks;
                if (f != head + rhs) {
                    fail(cat("split identity failed at h=", h, " n=", n, " k=", k));
                }
            }

            if (h >= 4) {
                // G_{1->2} <= (2/3) F - 1, compared as 3G <= 2F - 3
                ++report.checks;
                if (3 * table.general_count(h, n, 1, 2) > 2 * f - 3) {
                    fail(cat("neighbor-task bound failed at h=", h, " n=", n));
                }
            }
            if (h >= 4 && n >= 2) {
                // sum of shift costs <= (2/9) F, compared as 9*sum <= 2F
                CountValue shift_sum = 0;
                for (int j = 1; j <= h - 1; ++j) {
                    shift_sum += table.general_count(h - j + 1, size_of(j), 1, 2);
                }
                ++report.checks;
                if (9 * shift_sum > 2 * f) {
                    fail(cat("shift-sum bound failed at h=", h, " n=", n));
                }
            }
            if (h >= 5 && n >= h) {
                // F(h,n) <= 3F(h,s1) + (11/9)F(h-1,n-s1), compared x9
                const DiskSize s1 = size_of(1);
                ++report.checks;
                if (9 * f > 27 * table.farthest_count(h, s1) +
                                11 * table.farthest_count(h - 1, n - s1)) {
                    fail(cat("two-term recurrence bound failed at h=", h, " n=", n));
                }
            }
            // interior tasks are strictly cheaper than end-to-end
            for (int s = 1; s < h; ++s) {
                for (int d = s + 1; d <= h; ++d) {
                    if (d - s + 1 >= h) continue;
                    ++report.checks;
                    if (table.general_count(h, n, s, d) >= f) {
                        fail(cat("interior-task bound failed at h=", h, " n=", n, " s=", s,
                                 " d=", d));
                    }
                }
            }
        }
    }
    return report;
}

} // namespace hanoi
