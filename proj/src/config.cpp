#include "hanoi/config.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hanoi {

namespace {

void validate_pegs(int h, const std::vector<std::vector<DiskSize>>& pegs, DiskSize n) {
    if (h < 2) {
        throw std::invalid_argument("configuration needs at least 2 pegs");
    }
    if (static_cast<int>(pegs.size()) != h) {
        throw std::invalid_argument("peg count does not match peg list");
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& peg : pegs) {
        DiskSize below = 0; // sentinel: bottom accepts any size
        for (DiskSize disk : peg) {
            if (disk < 1 || disk > n) {
                throw std::invalid_argument("disk size " + std::to_string(disk) +
                                            " outside 1.." + std::to_string(n));
            }
            if (below != 0 && disk >= below) {
                throw std::invalid_argument("peg not strictly decreasing at disk " +
                                            std::to_string(disk));
            }
            if (seen[static_cast<std::size_t>(disk)]) {
                throw std::invalid_argument("disk " + std::to_string(disk) +
                                            " appears more than once");
            }
            seen[static_cast<std::size_t>(disk)] = 1;
            below = disk;
        }
    }
    // every size present: counts match and duplicates were rejected
}

} // namespace

Configuration::Configuration(int peg_count, std::vector<std::vector<DiskSize>> pegs)
    : h_(peg_count), n_(0), pegs_(std::move(pegs)) {
    for (const auto& peg : pegs_) {
        n_ += static_cast<DiskSize>(peg.size());
    }
    validate_pegs(h_, pegs_, n_);
}

Configuration::Configuration(Unchecked, int peg_count,
                             std::vector<std::vector<DiskSize>> pegs)
    : h_(peg_count), n_(0), pegs_(std::move(pegs)) {
    for (const auto& peg : pegs_) {
        n_ += static_cast<DiskSize>(peg.size());
    }
}

Configuration Configuration::perfect(int peg_count, int peg, DiskSize disk_count) {
    if (peg_count < 2) {
        throw std::invalid_argument("configuration needs at least 2 pegs");
    }
    if (peg < 1 || peg > peg_count) {
        throw std::invalid_argument("peg index " + std::to_string(peg) +
                                    " outside 1.." + std::to_string(peg_count));
    }
    if (disk_count < 0) {
        throw std::invalid_argument("negative disk count");
    }
    std::vector<std::vector<DiskSize>> pegs(static_cast<std::size_t>(peg_count));
    auto& stack = pegs[static_cast<std::size_t>(peg - 1)];
    stack.resize(static_cast<std::size_t>(disk_count));
    for (DiskSize k = 0; k < disk_count; ++k) {
        stack[static_cast<std::size_t>(k)] = disk_count - k;
    }
    return Configuration(Unchecked{}, peg_count, std::move(pegs));
}

const std::vector<DiskSize>& Configuration::peg(int i) const {
    if (i < 1 || i > h_) {
        throw std::invalid_argument("peg index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(h_));
    }
    return pegs_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> Configuration::disk_to_peg() const {
    std::vector<int> map(static_cast<std::size_t>(n_));
    for (int p = 1; p <= h_; ++p) {
        for (DiskSize disk : pegs_[static_cast<std::size_t>(p - 1)]) {
            map[static_cast<std::size_t>(disk - 1)] = p;
        }
    }
    return map;
}

namespace {

// Shared legality check + in-place application.
void apply_in_place(std::vector<std::vector<DiskSize>>& pegs, int h, const Move& move,
                    std::int64_t index) {
    if (move.from < 1 || move.from > h || move.to < 1 || move.to > h) {
        throw IllegalMoveError(MoveRule::PegOutOfRange, move, index);
    }
    if (move.from - move.to != 1 && move.to - move.from != 1) {
        throw IllegalMoveError(MoveRule::NonAdjacentPegs, move, index);
    }
    auto& src = pegs[static_cast<std::size_t>(move.from - 1)];
    auto& dst = pegs[static_cast<std::size_t>(move.to - 1)];
    if (src.empty()) {
        throw IllegalMoveError(MoveRule::EmptySourcePeg, move, index);
    }
    if (src.back() != move.disk) {
        throw IllegalMoveError(MoveRule::NotTopmost, move, index);
    }
    if (!dst.empty() && dst.back() < move.disk) {
        throw IllegalMoveError(MoveRule::SmallerBelow, move, index);
    }
    src.pop_back();
    dst.push_back(move.disk);
}

} // namespace

Configuration apply_move(const Configuration& config, const Move& move) {
    Replayer replay(config);
    try {
        replay.apply(move);
    } catch (const IllegalMoveError& e) {
        throw IllegalMoveError(e.rule(), e.move()); // single move: no sequence index
    }
    return replay.current();
}

Configuration apply_sequence(const Configuration& config, const MoveSequence& moves) {
    Replayer replay(config);
    for (const Move& move : moves) {
        replay.apply(move);
    }
    return replay.current();
}

Replayer::Replayer(const Configuration& start) : config_(start) {}

void Replayer::apply(const Move& move) {
    apply_in_place(config_.pegs_, config_.h_, move, applied_);
    ++applied_;
}

} // namespace hanoi
