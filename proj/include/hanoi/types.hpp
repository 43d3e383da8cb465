#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hanoi {

using DiskSize = std::int64_t;

// A set of disks of consecutive sizes [min, max]. max < min encodes the empty
// block; the canonical empty block is {1, 0}.
struct Block {
    DiskSize min = 1;
    DiskSize max = 0;

    static Block whole(DiskSize n) { return Block{1, n}; }
    static Block range(DiskSize min, DiskSize max) { return Block{min, max}; }
    static Block empty() { return Block{1, 0}; }

    bool is_empty() const { return max < min; }
    DiskSize size() const { return is_empty() ? 0 : max - min + 1; }
    bool lighter_than(const Block& other) const {
        return !is_empty() && !other.is_empty() && max < other.min;
    }

    friend bool operator==(const Block&, const Block&) = default;
};

// One disk transfer between adjacent pegs. The disk size is carried
// redundantly so that sequences are self-describing in files and errors.
struct Move {
    DiskSize disk = 0;
    int from = 0;
    int to = 0;

    Move reversed() const { return Move{disk, to, from}; }

    friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

// Reversed order with each move reversed; undoes the original sequence.
MoveSequence inverted(const MoveSequence& moves);

enum class MoveRule {
    NonAdjacentPegs,
    PegOutOfRange,
    EmptySourcePeg,
    NotTopmost,
    SmallerBelow,
};

const char* to_string(MoveRule rule);

class IllegalMoveError : public std::runtime_error {
  public:
    IllegalMoveError(MoveRule rule, Move move, std::int64_t index = -1);

    MoveRule rule() const { return rule_; }
    const Move& move() const { return move_; }
    // Position of the offending move within the applied sequence, -1 when a
    // single move was applied directly.
    std::int64_t index() const { return index_; }

  private:
    MoveRule rule_;
    Move move_;
    std::int64_t index_;
};

// Result of a verification sweep: empty `violations` means everything held.
// `notes` carries observational findings that are reported but not asserted.
struct CheckReport {
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    std::int64_t checks = 0;

    bool ok() const { return violations.empty(); }
    void merge(const CheckReport& other);
};

} // namespace hanoi
