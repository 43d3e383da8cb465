#include "hanoi/sequence_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace hanoi {

void write_moves(std::ostream& out, const MoveSequence& moves) {
    for (const Move& move : moves) {
        out << move.disk << ' ' << move.from << ' ' << move.to << '\n';
    }
}

void write_moves(std::ostream& out, MoveStream& stream) {
    while (auto move = stream.next()) {
        out << move->disk << ' ' << move->from << ' ' << move->to << '\n';
    }
}

SequenceParseError::SequenceParseError(std::string message, std::int64_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::move(message)),
      line_(line) {}

MoveSequence read_moves(std::istream& in) {
    MoveSequence moves;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream fields(line);
        Move move;
        if (!(fields >> move.disk >> move.from >> move.to)) {
            throw SequenceParseError("expected '<disk> <from> <to>', got '" + line + "'",
                                     line_no);
        }
        std::string extra;
        if (fields >> extra) {
            throw SequenceParseError("trailing content '" + extra + "'", line_no);
        }
        if (move.disk < 1) {
            throw SequenceParseError("disk size must be positive", line_no);
        }
        moves.push_back(move);
    }
    return moves;
}

} // namespace hanoi
