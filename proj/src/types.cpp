#include "hanoi/types.hpp"

#include <algorithm>
#include <sstream>

namespace hanoi {

MoveSequence inverted(const MoveSequence& moves) {
    MoveSequence out;
    out.reserve(moves.size());
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        out.push_back(it->reversed());
    }
    return out;
}

const char* to_string(MoveRule rule) {
    switch (rule) {
    case MoveRule::NonAdjacentPegs: return "NonAdjacentPegs";
    case MoveRule::PegOutOfRange: return "PegOutOfRange";
    case MoveRule::EmptySourcePeg: return "EmptySourcePeg";
    case MoveRule::NotTopmost: return "NotTopmost";
    case MoveRule::SmallerBelow: return "SmallerBelow";
    }
    return "?";
}

namespace {

std::string describe(MoveRule rule, const Move& move, std::int64_t index) {
    std::ostringstream os;
    os << to_string(rule) << ": move (disk " << move.disk << ", " << move.from
       << " -> " << move.to << ")";
    if (index >= 0) {
        os << " at sequence index " << index;
    }
    return os.str();
}

} // namespace

IllegalMoveError::IllegalMoveError(MoveRule rule, Move move, std::int64_t index)
    : std::runtime_error(describe(rule, move, index)), rule_(rule), move_(move),
      index_(index) {}

void CheckReport::merge(const CheckReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    checks += other.checks;
}

} // namespace hanoi
