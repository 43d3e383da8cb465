#pragma once

#include <vector>

#include "hanoi/types.hpp"

namespace hanoi {

// A legal distribution of disks 1..n among pegs 1..h. Each peg holds a stack
// ordered bottom-to-top by strictly decreasing size. Immutable after
// construction; all operations on it are pure.
class Configuration {
  public:
    // Validates the peg contents: every size 1..n exactly once, descending
    // within each peg. Throws std::invalid_argument otherwise.
    Configuration(int peg_count, std::vector<std::vector<DiskSize>> pegs);

    // All n disks stacked on peg `peg` (1-based), other pegs empty.
    static Configuration perfect(int peg_count, int peg, DiskSize disk_count);

    int peg_count() const { return h_; }
    DiskSize disk_count() const { return n_; }
    const std::vector<DiskSize>& peg(int i) const; // 1-based

    // Canonical encoding: disk -> peg (index k holds the peg of disk k+1).
    std::vector<int> disk_to_peg() const;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.h_ == b.h_ && a.pegs_ == b.pegs_;
    }

  private:
    friend class Replayer;
    struct Unchecked {};
    Configuration(Unchecked, int peg_count, std::vector<std::vector<DiskSize>> pegs);

    int h_;
    DiskSize n_;
    std::vector<std::vector<DiskSize>> pegs_;
};

// New configuration with the move applied. Throws IllegalMoveError naming the
// violated rule; the input is never modified.
Configuration apply_move(const Configuration& config, const Move& move);

// Applies the whole sequence in order. On the first illegal move, throws
// IllegalMoveError carrying that move's index; never returns an illegal state.
Configuration apply_sequence(const Configuration& config, const MoveSequence& moves);

// Incremental legality-checked application, for streamed sequences. Owns a
// private copy of the start configuration and mutates it move by move.
class Replayer {
  public:
    explicit Replayer(const Configuration& start);

    // Throws IllegalMoveError with the running move index on violation.
    void apply(const Move& move);

    std::int64_t moves_applied() const { return applied_; }
    const Configuration& current() const { return config_; }

  private:
    Configuration config_;
    std::int64_t applied_ = 0;
};

} // namespace hanoi
