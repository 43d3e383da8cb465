#pragma once

#include <iosfwd>

#include "hanoi/solvers.hpp"
#include "hanoi/types.hpp"

namespace hanoi {

// Interchange format: one move per line, "<disk> <from> <to>" in decimal,
// every line (including the last) terminated by '\n'.

void write_moves(std::ostream& out, const MoveSequence& moves);
void write_moves(std::ostream& out, MoveStream& stream);

class SequenceParseError : public std::runtime_error {
  public:
    SequenceParseError(std::string message, std::int64_t line);
    std::int64_t line() const { return line_; }

  private:
    std::int64_t line_;
};

// Reads moves until EOF. Blank lines are rejected; malformed lines raise
// SequenceParseError with the 1-based line number.
MoveSequence read_moves(std::istream& in);

} // namespace hanoi
