#include "bingo/constructions.hpp"

#include <algorithm>
#include <set>

namespace bingo {

namespace {

// Table encoding: 0 = occupied, k >= 1 = step at which the closure fills
// the cell, -1 = empty cell the closure never reaches.
CatalogBoard from_table(std::string name, int n, const int* table, int depth,
                        bool spanning) {
  BoardSize size(n);
  CatalogBoard board{std::move(name), size, CellSet(size), {}, depth, spanning};
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int v = table[r * n + c];
      if (v == 0) {
        board.occupied.set({r, c});
      } else if (v > 0) {
        board.labels.emplace(Cell{r, c}, v);
      }
    }
  }
  return board;
}

// A non-spanning set of depth 3 on the 5x5 board; the closure misses the
// eight cells marked -1.
constexpr int kBoard1[] = {
    0, -1, 0, -1, 0,  //
    0,  1, 2,  1, 0,  //
    1, -1, 0, -1, 1,  //
    0,  0, 1,  0, 0,  //
    0, -1, 3, -1, 0,  //
};

// A spanning set of depth 10 = 2n on the 5x5 board.
constexpr int kBoard2[] = {
    2,  0, 1, 0, 0,  //
    9,  0, 0, 8, 0,  //
    10, 0, 0, 9, 0,  //
    0,  5, 0, 0, 4,  //
    7,  6, 0, 0, 3,  //
};

// Depth 4 on the 3x3 board (the maximum for n = 3).
constexpr int kBoard3[] = {
    4, 4, 2,  //
    4, 3, 0,  //
    0, 0, 1,  //
};

// Depth 6 on the 4x4 board (the maximum for n = 4).
constexpr int kBoard4[] = {
    0, 1, 0, 2,  //
    6, 0, 5, 0,  //
    5, 0, 4, 0,  //
    4, 0, 0, 3,  //
};

// A spanning set of depth 12 = 2n on the 6x6 board.
constexpr int kBoardS[] = {
    2,  0, 0, 1,  0, 0,  //
    11, 0, 0, 0, 10, 0,  //
    12, 0, 0, 0, 11, 0,  //
    0,  6, 7, 0,  0, 0,  //
    0,  5, 0, 0,  0, 4,  //
    9,  0, 8, 0,  0, 3,  //
};

// board2 wrapped in a width-2 ring: depth 18 on the 9x9 board.
constexpr int kBoard9[] = {
    3, 0, 0,  0, 0, 0,  0, 4, 0,  //
    0, 7, 0,  0, 8, 0,  0, 0, 0,  //
    0, 0, 10, 0, 9, 0,  0, 0, 0,  //
    0, 0, 17, 0, 0, 16, 0, 0, 0,  //
    0, 0, 18, 0, 0, 17, 0, 0, 0,  //
    0, 0, 0, 13, 0, 0, 12, 0, 0,  //
    0, 0, 15, 14, 0, 0, 11, 0, 0,  //
    0, 6, 0,  0, 0, 0,  0, 5, 0,  //
    2, 0, 0,  0, 0, 0,  0, 0, 1,  //
};

// boardS wrapped in a width-2 ring: depth 20 on the 10x10 board.
constexpr int kBoard10[] = {
    3, 0, 0,  0,  0,  0, 0,  0, 4, 0,  //
    0, 7, 0,  0,  0,  8, 0,  0, 0, 0,  //
    0, 0, 10, 0,  0,  9, 0,  0, 0, 0,  //
    0, 0, 19, 0,  0,  0, 18, 0, 0, 0,  //
    0, 0, 20, 0,  0,  0, 19, 0, 0, 0,  //
    0, 0, 0,  14, 15, 0, 0,  0, 0, 0,  //
    0, 0, 0,  13, 0,  0, 0,  12, 0, 0,  //
    0, 0, 17, 0,  16, 0, 0,  11, 0, 0,  //
    0, 6, 0,  0,  0,  0, 0,  0, 5, 0,  //
    2, 0, 0,  0,  0,  0, 0,  0, 0, 1,  //
};

Cell first_step_cell(const CatalogBoard& board) {
  for (const auto& [cell, step] : board.labels) {
    if (step == 1) return cell;
  }
  throw ConstructionError(board.name + ": no cell is labelled with step 1");
}

}  // namespace

const std::vector<CatalogBoard>& catalog() {
  static const std::vector<CatalogBoard> boards = [] {
    std::vector<CatalogBoard> all;
    all.push_back(from_table("board1", 5, kBoard1, 3, false));
    all.push_back(from_table("board2", 5, kBoard2, 10, true));
    all.push_back(from_table("board3", 3, kBoard3, 4, true));
    all.push_back(from_table("board4", 4, kBoard4, 6, true));
    all.push_back(from_table("boardS", 6, kBoardS, 12, true));
    all.push_back(from_table("board9", 9, kBoard9, 18, true));
    all.push_back(from_table("board10", 10, kBoard10, 20, true));
    return all;
  }();
  return boards;
}

const CatalogBoard* find_catalog_board(std::string_view name) {
  for (const CatalogBoard& board : catalog()) {
    if (board.name == name) return &board;
  }
  return nullptr;
}

void verify_board(const CatalogBoard& board) {
  const ClosureTrace trace = closure(board.occupied);
  if (trace.depth() != board.expected_depth) {
    throw ConstructionError(board.name + ": depth " +
                            std::to_string(trace.depth()) + ", expected " +
                            std::to_string(board.expected_depth));
  }
  if (trace.final.is_full() != board.expected_spanning) {
    throw ConstructionError(board.name + (board.expected_spanning
                                              ? ": closure does not span"
                                              : ": closure unexpectedly spans"));
  }
  if (step_labels(trace) != board.labels) {
    throw ConstructionError(board.name +
                            ": closure fills cells at different steps than "
                            "the recorded labels");
  }
}

bool trace_is_chain(const ClosureTrace& trace) {
  for (size_t i = 1; i < trace.steps.size(); ++i) {
    const CellSet& previous = trace.steps[i - 1].added;
    bool linked = false;
    for (const auto& [cell, lines] : trace.steps[i].firing) {
      for (const LineRef& ref : lines) {
        const Line& line = line_for(trace.start.size(), ref);
        if ((line.mask & previous).count() > 0) {
          linked = true;
          break;
        }
      }
      if (linked) break;
    }
    if (!linked) return false;
  }
  return true;
}

RingSpec ring_spec(const CatalogBoard& base, int width) {
  if (width != 1 && width != 2) {
    throw ConstructionError("ring width must be 1 or 2");
  }
  const int n = base.size.value();
  const int big = n + 2 * width;
  const int first_col = first_step_cell(base).col;
  const int cstar = first_col + width;  // same column in the wrapped board
  RingSpec spec{width, {}, first_col};
  if (width == 2) {
    spec.gate_cells = {{big - 1, big - 1}, {big - 1, 0},     {0, 0},
                       {0, big - 2},       {big - 2, big - 2}, {big - 2, 1},
                       {1, 1},             {1, cstar}};
  } else {
    spec.gate_cells = {{big - 1, big - 1}, {big - 1, 0}, {0, 0}, {0, cstar}};
  }
  return spec;
}

CatalogBoard wrap_ring(const CatalogBoard& base, int width) {
  verify_board(base);
  const int n = base.size.value();
  if (!base.expected_spanning || base.expected_depth != 2 * n) {
    throw ConstructionError(base.name + ": ring needs a spanning base of depth " +
                            std::to_string(2 * n));
  }
  const ClosureTrace base_trace = closure(base.occupied);
  if (!trace_is_chain(base_trace)) {
    throw ConstructionError(base.name + ": base chain is broken");
  }
  const Cell first = first_step_cell(base);
  bool column_fires = false;
  for (const auto& [cell, lines] : base_trace.steps.front().firing) {
    if (cell != first) continue;
    for (const LineRef& ref : lines) {
      column_fires |= ref.kind == LineKind::Col && ref.index == first.col;
    }
  }
  if (!column_fires) {
    throw ConstructionError(base.name +
                            ": first step is not completed by its column");
  }

  const RingSpec spec = ring_spec(base, width);
  const int big = n + 2 * width;
  BoardSize size(big);
  CellSet gates(size);
  for (const Cell& gate : spec.gate_cells) gates.set(gate);

  CatalogBoard board{"", size, CellSet(size), {}, 2 * big, true};
  for (int r = 0; r < big; ++r) {
    for (int c = 0; c < big; ++c) {
      const bool in_ring = r < width || r >= big - width || c < width ||
                           c >= big - width;
      if (in_ring && !gates.test({r, c})) board.occupied.set({r, c});
    }
  }
  base.occupied.for_each([&](Cell cell) {
    board.occupied.set({cell.row + width, cell.col + width});
  });

  const int shift = static_cast<int>(spec.gate_cells.size());
  for (int i = 0; i < shift; ++i) {
    board.labels.emplace(spec.gate_cells[i], i + 1);
  }
  for (const auto& [cell, step] : base.labels) {
    board.labels.emplace(Cell{cell.row + width, cell.col + width},
                         step + shift);
  }
  board.name = "spiral" + std::to_string(big);

  verify_board(board);
  return board;
}

CatalogBoard construct_max_depth(BoardSize size, int ring_width) {
  const int n = size.value();
  if (n < 5) {
    throw std::invalid_argument("construct_max_depth needs a side of at least 5");
  }
  if (ring_width < 0 || ring_width > 2) {
    throw std::invalid_argument("ring width must be 0 (auto), 1 or 2");
  }
  const CatalogBoard* base = find_catalog_board(n % 2 != 0 ? "board2" : "boardS");
  CatalogBoard board = *base;
  int gap = n - board.size.value();
  if (ring_width == 0) {
    while (gap >= 4) {
      board = wrap_ring(board, 2);
      gap -= 4;
    }
    if (gap == 2) {
      board = wrap_ring(board, 1);
      gap -= 2;
    }
  } else {
    const int step = 2 * ring_width;
    if (gap % step != 0) {
      throw std::invalid_argument("rings of width " +
                                  std::to_string(ring_width) +
                                  " cannot grow " + base->name + " to side " +
                                  std::to_string(n));
    }
    for (; gap > 0; gap -= step) board = wrap_ring(board, ring_width);
  }
  verify_board(board);
  // Keep the catalog name when the construction lands on a cataloged board.
  for (const CatalogBoard& known : catalog()) {
    if (known.size == board.size && known.occupied == board.occupied &&
        known.labels == board.labels) {
      board.name = known.name;
      break;
    }
  }
  return board;
}

std::optional<std::array<Cell, 4>> final_rectangle(const ClosureTrace& trace) {
  if (!trace.final.is_full() || trace.depth() < 3) return std::nullopt;

  CellSet tail(trace.start.size());
  for (size_t i = trace.steps.size() - 3; i < trace.steps.size(); ++i) {
    tail |= trace.steps[i].added;
  }
  const CellSet& last = trace.steps.back().added;

  std::set<int> rows, cols;
  tail.for_each([&](Cell cell) {
    rows.insert(cell.row);
    cols.insert(cell.col);
  });

  std::optional<std::array<Cell, 4>> best;
  for (auto r1 = rows.begin(); r1 != rows.end(); ++r1) {
    for (auto r2 = std::next(r1); r2 != rows.end(); ++r2) {
      for (auto c1 = cols.begin(); c1 != cols.end(); ++c1) {
        for (auto c2 = std::next(c1); c2 != cols.end(); ++c2) {
          const std::array<Cell, 4> corners{Cell{*r1, *c1}, Cell{*r1, *c2},
                                            Cell{*r2, *c1}, Cell{*r2, *c2}};
          CellSet corner_set(trace.start.size());
          for (const Cell& corner : corners) corner_set.set(corner);
          if ((corner_set & tail) != corner_set) continue;
          if ((last & corner_set) != last) continue;
          if (!best || corners < *best) best = corners;
        }
      }
    }
  }
  return best;
}

}  // namespace bingo
