// Catalog of worked boards and the spiral-ring induction that produces
// engine-verified depth-2n spanning sets for every n in [5, 11].
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bingo/closure.hpp"

namespace bingo {

// A named board with its recorded closure behaviour: which cells start
// occupied, the step at which the closure reaches each remaining cell it
// reaches at all, the depth, and whether the closure is the whole board.
struct CatalogBoard {
  std::string name;
  BoardSize size;
  CellSet occupied;
  std::map<Cell, int> labels;
  int expected_depth;
  bool expected_spanning;
};

class ConstructionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The seven reference boards: board1..board4, boardS, board9, board10.
const std::vector<CatalogBoard>& catalog();
const CatalogBoard* find_catalog_board(std::string_view name);

// Runs the closure engine on the board and checks depth, spanning flag and
// the full label map. Throws ConstructionError on any deviation.
void verify_board(const CatalogBoard& board);

// True when each step after the first completes a line through a cell of
// the previous step.
bool trace_is_chain(const ClosureTrace& trace);

// The band of cells wrapped around a base board. Its empty gate cells fire
// in order, one per step, before the base board's own chain starts; the
// last gate sits over the column that starts the base chain.
struct RingSpec {
  int width;                     // 1 or 2
  std::vector<Cell> gate_cells;  // in firing order; 8 for width 2, 4 for width 1
  int base_first_column;
};
RingSpec ring_spec(const CatalogBoard& base, int width);

// Wraps a ring of the given width around a verified depth-2n spanning
// board whose chain starts on a column, producing a board of side n+2*width
// and depth 2n+4*width. The result is re-verified by running the closure
// engine; a deviating depth, spanning flag or label chain throws.
CatalogBoard wrap_ring(const CatalogBoard& base, int width);

// A spanning board of side n with engine-verified depth exactly 2n, built
// from board2 (odd n) or boardS (even n) by wrapping rings. ring_width 0
// picks widths greedily (2 where possible, 1 to fix parity); 1 or 2 forces
// that width for every ring and throws if the gap cannot be bridged.
CatalogBoard construct_max_depth(BoardSize size, int ring_width = 0);

// The four cells filled in the last three steps of a spanning trace, when
// they form the corners of an axis-aligned rectangle containing every cell
// of the final step. Returned in row-major order; absent when no such
// rectangle exists or the trace does not span or has depth < 3.
std::optional<std::array<Cell, 4>> final_rectangle(const ClosureTrace& trace);

}  // namespace bingo
