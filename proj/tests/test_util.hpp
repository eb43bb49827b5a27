#pragma once

#include <map>
#include <random>

#include "bingo/grid.hpp"

namespace testutil {

inline bingo::CellSet random_board(bingo::BoardSize size, std::mt19937_64& rng) {
  const bingo::CellSet full = bingo::CellSet::full(size);
  return bingo::CellSet::from_bits(size, rng() & full.word(0),
                                   rng() & full.word(1));
}

// The occupied set of a worked board given as its empty-cell label map.
inline bingo::CellSet board_from_labels(bingo::BoardSize size,
                                        const std::map<bingo::Cell, int>& labels) {
  bingo::CellSet occupied = bingo::CellSet::full(size);
  for (const auto& [cell, label] : labels) occupied.reset(cell);
  return occupied;
}

}  // namespace testutil
