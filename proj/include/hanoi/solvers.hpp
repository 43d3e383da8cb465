#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hanoi/config.hpp"
#include "hanoi/types.hpp"

namespace hanoi {

// Closed interval of pegs [lo, hi] available to a solver.
struct PegInterval {
    int lo = 0;
    int hi = 0;

    int width() const { return hi - lo + 1; }

    friend bool operator==(const PegInterval&, const PegInterval&) = default;
};

// Pull-based generator of a solver's move sequence. Sequences grow like
// 3^sqrt(2n), so they are produced lazily from an explicit stack of pending
// sub-tasks; memory stays proportional to the recursion depth, never to the
// sequence length. Single consumer; independent streams may run on different
// threads.
class MoveStream {
  public:
    // Next move, or nullopt once the sequence is exhausted.
    std::optional<Move> next();

    std::int64_t emitted() const { return emitted_; }

  private:
    struct Frame {
        enum class Kind : std::uint8_t { Emit, Three, Four, Farthest, General };
        Kind kind = Kind::Emit;
        bool inverted = false;
        Block block;
        int s = 0, d = 0, via = 0; // via: third peg of a Three task
        int lo = 0, hi = 0;        // available interval of a General task
        Move move;                 // Emit payload
    };

    MoveStream() = default;
    explicit MoveStream(Frame root);
    void expand(const Frame& frame);
    static void append_children(std::vector<Frame>& out, const Frame& frame);

    friend MoveStream three_move(Block, int, int, int);
    friend MoveStream four_move(Block);
    friend MoveStream farthest_move(Block, int, int);
    friend MoveStream general_move(Block, int, int, PegInterval);
    friend MoveStream solve_task(Block, int, int, PegInterval);
    friend MoveStream inverse(MoveStream&&);

    std::vector<Frame> stack_;
    std::int64_t emitted_ = 0;
};

// Shortest transfer of `block` from peg s to peg d with third peg `via`, the
// three pegs forming an induced path (three consecutive pegs). Takes 3^|B|-1
// moves between the two path ends and half that between neighboring pegs.
MoveStream three_move(Block block, int s, int d, int via);

// Moves `block` from peg 1 to peg 4 on four pegs, splitting it into smallest
// disks / larger disks / largest disk and cycling them through the phases
// spread, circular shift, accumulate. Emits exactly four_move_count(|B|)
// moves.
MoveStream four_move(Block block);

// Moves `block` from peg s to peg d > s using exactly the pegs [s, d]
// (spread, reverse, accumulate). If d - s = 1 the block must hold at most one
// disk. Emits exactly farthest_count(d-s+1, |B|) moves.
MoveStream farthest_move(Block block, int s, int d);

// Moves `block` from peg s to peg d > s using only pegs in `pegs`
// (s, d within it). When s and d are the interval ends this produces the
// identical sequence to farthest_move. A 2-peg interval can only carry a
// single disk. Emits exactly general_count(|pegs|, |B|, ...) moves.
MoveStream general_move(Block block, int s, int d, PegInterval pegs);

// The inverse sequence of a (fresh, unconsumed) stream.
MoveStream inverse(MoveStream&& stream);

// Task front end: any s != d (an s > d task is the inverse of the d < s one,
// per the reversal argument for undirected peg graphs); s == d yields the
// empty sequence.
MoveStream solve_task(Block block, int s, int d, PegInterval pegs);

// Drains the stream into a materialized sequence.
MoveSequence materialize(MoveStream&& stream);

// Replays the stream against `start`, validating every move. Returns the
// final configuration; throws IllegalMoveError on the first violation.
Configuration apply_stream(const Configuration& start, MoveStream& stream);

} // namespace hanoi
