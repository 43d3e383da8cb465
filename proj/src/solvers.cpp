#include "hanoi/solvers.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hanoi/partition.hpp"

namespace hanoi {

namespace {

std::invalid_argument bad(const std::string& what) { return std::invalid_argument(what); }

} // namespace

MoveStream::MoveStream(Frame root) {
    if (root.kind == Frame::Kind::Emit || !root.block.is_empty()) {
        stack_.push_back(root);
    }
}

std::optional<Move> MoveStream::next() {
    while (!stack_.empty()) {
        Frame frame = stack_.back();
        stack_.pop_back();
        if (frame.kind == Frame::Kind::Emit) {
            ++emitted_;
            return frame.inverted ? frame.move.reversed() : frame.move;
        }
        expand(frame);
    }
    return std::nullopt;
}

// Children of a composite task, in forward emission order. Sub-tasks that the
// pseudocode inserts as inverses carry inverted = true here; empty blocks are
// dropped (they contribute no moves).
void MoveStream::append_children(std::vector<Frame>& out, const Frame& frame) {
    auto task = [&](Frame::Kind kind, Block block, int s, int d, int via, int lo, int hi,
                    bool inv) {
        if (block.is_empty()) return;
        Frame child;
        child.kind = kind;
        child.block = block;
        child.s = s;
        child.d = d;
        child.via = via;
        child.lo = lo;
        child.hi = hi;
        child.inverted = inv;
        out.push_back(child);
    };
    auto three = [&](Block b, int s, int d, int via, bool inv = false) {
        task(Frame::Kind::Three, b, s, d, via, 0, 0, inv);
    };
    auto four = [&](Block b, bool inv = false) {
        task(Frame::Kind::Four, b, 1, 4, 0, 1, 4, inv);
    };
    auto farthest = [&](Block b, int s, int d, bool inv = false) {
        task(Frame::Kind::Farthest, b, s, d, 0, s, d, inv);
    };
    auto general = [&](Block b, int s, int d, int lo, int hi, bool inv = false) {
        task(Frame::Kind::General, b, s, d, 0, lo, hi, inv);
    };
    auto emit = [&](DiskSize disk, int from, int to) {
        Frame child;
        child.kind = Frame::Kind::Emit;
        child.move = Move{disk, from, to};
        out.push_back(child);
    };

    const Block b = frame.block;
    switch (frame.kind) {
    case Frame::Kind::Emit:
        break;

    case Frame::Kind::Three: {
        // Pegs {s, d, via} are three consecutive pegs; tasks between the two
        // ends recurse end-to-end around the largest disk's two hops, tasks
        // between neighbors need a single hop.
        const Block rest = Block{b.min, b.max - 1};
        const int s = frame.s, d = frame.d, via = frame.via;
        if (std::abs(s - d) == 2) {
            three(rest, s, d, via);
            emit(b.max, s, via);
            three(rest, d, s, via);
            emit(b.max, via, d);
            three(rest, s, d, via);
        } else {
            three(rest, s, via, d);
            emit(b.max, s, d);
            three(rest, via, d, s);
        }
        break;
    }

    case Frame::Kind::Four: {
        const DiskSize n = b.size();
        const DiskSize m = round_sqrt_2n(n);
        const Block smallest = Block{b.min, b.max - m};
        const Block larger = Block{b.max - m + 1, b.max - 1};
        // Spread
        four(smallest);
        three(larger, 1, 3, 2);
        emit(b.max, 1, 2);
        // Circular shift
        four(smallest, true);
        three(larger, 3, 4, 2);
        emit(b.max, 2, 3);
        three(larger, 4, 2, 3);
        // Accumulate
        emit(b.max, 3, 4);
        three(larger, 2, 4, 3);
        four(smallest);
        break;
    }

    case Frame::Kind::Farthest: {
        const int s = frame.s, d = frame.d;
        const int hh = d - s + 1;
        if (hh == 2) {
            if (b.size() != 1) {
                throw std::logic_error("farthest task over two pegs with a multi-disk block");
            }
            emit(b.max, s, d);
            break;
        }
        const BlockPartition part = partition(hh, b);
        auto blk = [&](int j) { return part.blocks[static_cast<std::size_t>(j - 1)]; };
        // Spread: block j goes to the farthest available peg d-j+1.
        for (int j = 1; j <= hh - 2; ++j) {
            farthest(blk(j), s, d - j + 1);
        }
        // Reverse: the largest disk steps right once per round while each
        // round pulls the next block back to its reflected position and
        // shifts the heavier ones one peg right.
        emit(b.max, s, s + 1);
        for (int j = 1; j <= hh - 2; ++j) {
            farthest(blk(j), s + j - 1, d, true);
            for (int i = j + 1; i <= hh - 2; ++i) {
                general(blk(i), d + j - i, d + j + 1 - i, s + j, d + j + 1 - i);
            }
            emit(b.max, s + j, s + j + 1);
        }
        // Accumulate
        for (int j = 1; j <= hh - 2; ++j) {
            farthest(blk(hh - 1 - j), s + hh - 2 - j, d);
        }
        break;
    }

    case Frame::Kind::General: {
        const int s = frame.s, d = frame.d, lo = frame.lo, hi = frame.hi;
        if (s == lo && d == hi) {
            farthest(b, s, d);
            break;
        }
        const int width = hi - lo + 1;
        const BlockPartition part = partition(width, b);
        auto blk = [&](int j) { return part.blocks[static_cast<std::size_t>(j - 1)]; };
        const int suffix_start = width + s - d; // first block index moved directly
        // LeftSpread
        for (int j = 1; j <= s - lo; ++j) {
            general(blk(j), lo + j - 1, s, lo + j - 1, hi, true);
        }
        // RightSpread
        for (int j = 1; j <= hi - d; ++j) {
            farthest(blk(s - lo + j), s, hi - j + 1);
        }
        // MoveRemainder
        farthest(part.suffix_block(suffix_start), s, d);
        // LeftAccumulate
        for (int j = 1; j <= hi - d; ++j) {
            general(blk(suffix_start - j), d, d + j, s, d + j, true);
        }
        // RightAccumulate
        for (int j = 1; j <= s - lo; ++j) {
            general(blk(s - lo + 1 - j), s - j, d, s - j, hi);
        }
        break;
    }
    }
}

void MoveStream::expand(const Frame& frame) {
    std::vector<Frame> children;
    append_children(children, frame);
    if (frame.inverted) {
        for (Frame& child : children) {
            child.inverted = !child.inverted;
            stack_.push_back(child); // forward push => reversed emission
        }
    } else {
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
            stack_.push_back(*it);
        }
    }
}

namespace {

void require_disks(Block block) {
    if (!block.is_empty() && block.min < 1) {
        throw bad("disk sizes must be positive");
    }
}

} // namespace

MoveStream three_move(Block block, int s, int d, int via) {
    require_disks(block);
    int x = std::min({s, d, via});
    int z = std::max({s, d, via});
    int y = s + d + via - x - z;
    if (x < 1 || y != x + 1 || z != y + 1) {
        throw bad("three_move pegs {" + std::to_string(s) + "," + std::to_string(d) + "," +
                  std::to_string(via) + "} do not induce a path of three pegs");
    }
    MoveStream::Frame root;
    root.kind = MoveStream::Frame::Kind::Three;
    root.block = block;
    root.s = s;
    root.d = d;
    root.via = via;
    return MoveStream(root);
}

MoveStream four_move(Block block) {
    require_disks(block);
    MoveStream::Frame root;
    root.kind = MoveStream::Frame::Kind::Four;
    root.block = block;
    root.s = 1;
    root.d = 4;
    return MoveStream(root);
}

MoveStream farthest_move(Block block, int s, int d) {
    require_disks(block);
    if (s < 1 || d <= s) {
        throw bad("farthest_move requires 1 <= s < d");
    }
    if (d - s == 1 && block.size() > 1) {
        throw bad("farthest_move over two pegs can carry at most one disk");
    }
    MoveStream::Frame root;
    root.kind = MoveStream::Frame::Kind::Farthest;
    root.block = block;
    root.s = s;
    root.d = d;
    return MoveStream(root);
}

MoveStream general_move(Block block, int s, int d, PegInterval pegs) {
    require_disks(block);
    if (pegs.lo < 1 || pegs.hi < pegs.lo) {
        throw bad("general_move requires a valid peg interval");
    }
    if (s < pegs.lo || d > pegs.hi || s >= d) {
        throw bad("general_move requires lo <= s < d <= hi");
    }
    if (pegs.width() == 2 && block.size() > 1) {
        throw bad("general_move over two pegs can carry at most one disk");
    }
    MoveStream::Frame root;
    root.kind = MoveStream::Frame::Kind::General;
    root.block = block;
    root.s = s;
    root.d = d;
    root.lo = pegs.lo;
    root.hi = pegs.hi;
    return MoveStream(root);
}

MoveStream inverse(MoveStream&& stream) {
    if (stream.emitted_ != 0) {
        throw bad("inverse requires an unconsumed stream");
    }
    MoveStream out(std::move(stream));
    for (auto& frame : out.stack_) {
        frame.inverted = !frame.inverted;
    }
    std::reverse(out.stack_.begin(), out.stack_.end());
    return out;
}

MoveStream solve_task(Block block, int s, int d, PegInterval pegs) {
    if (s == d) {
        return MoveStream();
    }
    if (s < d) {
        return general_move(block, s, d, pegs);
    }
    return inverse(general_move(block, d, s, pegs));
}

MoveSequence materialize(MoveStream&& stream) {
    MoveSequence out;
    while (auto move = stream.next()) {
        out.push_back(*move);
    }
    return out;
}

Configuration apply_stream(const Configuration& start, MoveStream& stream) {
    Replayer replay(start);
    while (auto move = stream.next()) {
        replay.apply(*move);
    }
    return replay.current();
}

} // namespace hanoi
