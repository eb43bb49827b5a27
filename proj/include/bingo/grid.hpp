// Board geometry for the n x n Bingo grid: cells, lines, bit-parallel cell
// sets, the dihedral symmetries of the square, and board text parsing and
// rendering.
#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bingo {

// Side lengths above 11 would spill the n^2-bit cell set out of two words.
inline constexpr int kMaxSide = 11;

class BoardSize {
 public:
  explicit BoardSize(int side) : n_(side) {
    if (side < 1 || side > kMaxSide)
      throw std::out_of_range("board side must be in [1, " +
                              std::to_string(kMaxSide) + "], got " +
                              std::to_string(side));
  }
  int value() const { return n_; }
  int area() const { return n_ * n_; }
  bool operator==(const BoardSize&) const = default;

 private:
  int n_;
};

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// Row-major bit layout: cell (r, c) lives at bit r*n + c.
inline int cell_index(int side, Cell c) { return c.row * side + c.col; }
inline Cell cell_at(int side, int index) { return {index / side, index % side}; }

// A subset of the n^2 grid squares, stored as two 64-bit words.
// All set operations require both operands to share a side length.
class CellSet {
 public:
  explicit CellSet(BoardSize size) : side_(size.value()) {}

  static CellSet full(BoardSize size) {
    CellSet s(size);
    int area = size.area();
    s.words_[0] = area >= 64 ? ~0ull : ((1ull << area) - 1);
    s.words_[1] = area > 64 ? ((1ull << (area - 64)) - 1) : 0;
    return s;
  }

  static CellSet of(BoardSize size, std::initializer_list<Cell> cells) {
    CellSet s(size);
    for (Cell c : cells) s.set(c);
    return s;
  }

  // Builds a set from raw words; bits at or above n^2 must be clear.
  static CellSet from_bits(BoardSize size, std::uint64_t lo, std::uint64_t hi = 0) {
    CellSet s(size);
    s.words_[0] = lo;
    s.words_[1] = hi;
    assert((s & ~full(size)).none());
    return s;
  }

  BoardSize size() const { return BoardSize(side_); }
  int side() const { return side_; }

  bool test(int index) const {
    return (words_[index >> 6] >> (index & 63)) & 1;
  }
  bool test(Cell c) const { return test(check_cell(c)); }

  CellSet& set(Cell c) {
    int i = check_cell(c);
    words_[i >> 6] |= 1ull << (i & 63);
    return *this;
  }
  CellSet& reset(Cell c) {
    int i = check_cell(c);
    words_[i >> 6] &= ~(1ull << (i & 63));
    return *this;
  }

  int count() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  bool none() const { return words_[0] == 0 && words_[1] == 0; }
  bool is_full() const { return *this == full(size()); }
  bool contains(const CellSet& sub) const { return (sub & ~*this).none(); }

  CellSet operator|(const CellSet& o) const {
    assert(side_ == o.side_);
    CellSet r = *this;
    r.words_[0] |= o.words_[0];
    r.words_[1] |= o.words_[1];
    return r;
  }
  CellSet operator&(const CellSet& o) const {
    assert(side_ == o.side_);
    CellSet r = *this;
    r.words_[0] &= o.words_[0];
    r.words_[1] &= o.words_[1];
    return r;
  }
  CellSet operator-(const CellSet& o) const {  // set difference
    assert(side_ == o.side_);
    CellSet r = *this;
    r.words_[0] &= ~o.words_[0];
    r.words_[1] &= ~o.words_[1];
    return r;
  }
  CellSet operator~() const {  // complement within the board
    return full(size()) - *this;
  }
  CellSet& operator|=(const CellSet& o) { return *this = *this | o; }

  bool operator==(const CellSet& o) const {
    return side_ == o.side_ && words_ == o.words_;
  }
  // Numeric order on the bit pattern; the basis of canonical forms.
  bool operator<(const CellSet& o) const {
    assert(side_ == o.side_);
    return words_[1] != o.words_[1] ? words_[1] < o.words_[1]
                                    : words_[0] < o.words_[0];
  }

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(count());
    for_each([&](Cell c) { out.push_back(c); });
    return out;
  }

  template <typename F>
  void for_each(F&& fn) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int i = std::countr_zero(bits);
        fn(cell_at(side_, w * 64 + i));
        bits &= bits - 1;
      }
    }
  }

  std::uint64_t word(int i) const { return words_[i]; }

 private:
  int check_cell(Cell c) const {
    assert(c.row >= 0 && c.row < side_ && c.col >= 0 && c.col < side_);
    return cell_index(side_, c);
  }

  std::array<std::uint64_t, 2> words_{0, 0};
  int side_;
};

enum class LineKind { Row, Col, MainDiag, AntiDiag };

// Line identity. Diagonals carry index 0, so an n=1 board still has four
// distinct lines even though their masks coincide.
struct LineRef {
  LineKind kind;
  int index = 0;
  auto operator<=>(const LineRef&) const = default;
};

std::string to_string(LineRef ref);

struct Line {
  LineKind kind;
  int index;
  CellSet mask;
};

// The 2n+2 lines in canonical order: rows 0..n-1, cols 0..n-1, main
// diagonal, anti-diagonal. Every mask has exactly n cells.
std::vector<Line> make_lines(BoardSize size);

// Cached per-size line table; immutable after first use.
const std::vector<Line>& lines_for(BoardSize size);

const Line& line_for(BoardSize size, LineRef ref);

// One of the eight symmetries of the square, as a permutation of cell
// indices. Every symmetry maps the set of line masks onto itself.
class CellTransform {
 public:
  CellTransform(BoardSize size, std::string name,
                std::array<std::uint8_t, kMaxSide * kMaxSide> perm)
      : side_(size.value()), name_(std::move(name)), perm_(perm) {}

  Cell apply(Cell c) const { return cell_at(side_, perm_[cell_index(side_, c)]); }

  CellSet apply(const CellSet& s) const {
    assert(s.side() == side_);
    CellSet out(s.size());
    s.for_each([&](Cell c) { out.set(apply(c)); });
    return out;
  }

  const std::string& name() const { return name_; }

 private:
  int side_;
  std::string name_;
  std::array<std::uint8_t, kMaxSide * kMaxSide> perm_;
};

// Identity, rotations by 90/180/270, and the four reflections, in that order.
std::vector<CellTransform> dihedral_transforms(BoardSize size);

// Cached per-size transform table; immutable after first use.
const std::vector<CellTransform>& transforms_for(BoardSize size);

enum class ParseErrorKind {
  RaggedRows,       // rows of unequal length
  IllegalCharacter, // anything outside {'#', '.'} (or a bad n= header)
  SizeOutOfRange,   // inferred or declared n outside [1, kMaxSide]
  SizeMismatch,     // declared n contradicts the grid, or grid is not square
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Board file format: an optional first line "n=K", then n rows of n
// characters from {'#', '.'} ('#' = occupied). Whitespace between rows is
// ignored; the trailing newline is optional.
CellSet parse_board(std::string_view text);

// Compact rendering: '#' for occupied, '.' for empty, one row per line.
std::string render_board(const CellSet& set);

// Labeled rendering in the style of a worked trace: occupied cells as '#'
// ('•' when pretty), labeled cells as right-aligned numbers, other empty
// cells as '.'. Cells are space-separated when any label is present.
// Labels must sit on empty cells only.
std::string render_board(const CellSet& set, const std::map<Cell, int>& labels,
                         bool pretty = false);

}  // namespace bingo
