#include "bingo/grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace bingo {

std::string to_string(LineRef ref) {
  switch (ref.kind) {
    case LineKind::Row:      return "row " + std::to_string(ref.index);
    case LineKind::Col:      return "col " + std::to_string(ref.index);
    case LineKind::MainDiag: return "main diagonal";
    case LineKind::AntiDiag: return "anti-diagonal";
  }
  return "?";
}

std::vector<Line> make_lines(BoardSize size) {
  const int n = size.value();
  std::vector<Line> lines;
  lines.reserve(2 * n + 2);
  for (int r = 0; r < n; ++r) {
    CellSet mask(size);
    for (int c = 0; c < n; ++c) mask.set({r, c});
    lines.push_back({LineKind::Row, r, mask});
  }
  for (int c = 0; c < n; ++c) {
    CellSet mask(size);
    for (int r = 0; r < n; ++r) mask.set({r, c});
    lines.push_back({LineKind::Col, c, mask});
  }
  CellSet main_diag(size), anti_diag(size);
  for (int i = 0; i < n; ++i) {
    main_diag.set({i, i});
    anti_diag.set({i, n - 1 - i});
  }
  lines.push_back({LineKind::MainDiag, 0, main_diag});
  lines.push_back({LineKind::AntiDiag, 0, anti_diag});
  return lines;
}

const std::vector<Line>& lines_for(BoardSize size) {
  static const auto tables = [] {
    std::array<std::vector<Line>, kMaxSide + 1> t;
    for (int n = 1; n <= kMaxSide; ++n) t[n] = make_lines(BoardSize(n));
    return t;
  }();
  return tables[size.value()];
}

const Line& line_for(BoardSize size, LineRef ref) {
  const auto& lines = lines_for(size);
  const int n = size.value();
  switch (ref.kind) {
    case LineKind::Row:      return lines[ref.index];
    case LineKind::Col:      return lines[n + ref.index];
    case LineKind::MainDiag: return lines[2 * n];
    case LineKind::AntiDiag: return lines[2 * n + 1];
  }
  throw std::logic_error("bad LineRef");
}

std::vector<CellTransform> dihedral_transforms(BoardSize size) {
  const int n = size.value();
  struct Spec {
    const char* name;
    Cell (*map)(Cell, int);
  };
  static constexpr Spec specs[8] = {
      {"identity",  [](Cell c, int) { return c; }},
      {"rot90",     [](Cell c, int n) { return Cell{c.col, n - 1 - c.row}; }},
      {"rot180",    [](Cell c, int n) { return Cell{n - 1 - c.row, n - 1 - c.col}; }},
      {"rot270",    [](Cell c, int n) { return Cell{n - 1 - c.col, c.row}; }},
      {"flip_h",    [](Cell c, int n) { return Cell{c.row, n - 1 - c.col}; }},
      {"flip_v",    [](Cell c, int n) { return Cell{n - 1 - c.row, c.col}; }},
      {"transpose", [](Cell c, int) { return Cell{c.col, c.row}; }},
      {"anti_transpose",
                    [](Cell c, int n) { return Cell{n - 1 - c.col, n - 1 - c.row}; }},
  };
  std::vector<CellTransform> out;
  out.reserve(8);
  for (const Spec& s : specs) {
    std::array<std::uint8_t, kMaxSide * kMaxSide> perm{};
    for (int i = 0; i < n * n; ++i) {
      Cell from = cell_at(n, i);
      perm[i] = static_cast<std::uint8_t>(cell_index(n, s.map(from, n)));
    }
    out.emplace_back(size, s.name, perm);
  }
  return out;
}

const std::vector<CellTransform>& transforms_for(BoardSize size) {
  static const auto tables = [] {
    std::array<std::vector<CellTransform>, kMaxSide + 1> t;
    for (int n = 1; n <= kMaxSide; ++n) t[n] = dihedral_transforms(BoardSize(n));
    return t;
  }();
  return tables[size.value()];
}

namespace {

[[noreturn]] void fail(ParseErrorKind kind, const std::string& msg) {
  throw ParseError(kind, msg);
}

BoardSize checked_size(int n) {
  if (n < 1 || n > kMaxSide)
    fail(ParseErrorKind::SizeOutOfRange,
         "board side " + std::to_string(n) + " outside [1, " +
             std::to_string(kMaxSide) + "]");
  return BoardSize(n);
}

}  // namespace

CellSet parse_board(std::string_view text) {
  int declared = -1;

  // Optional "n=K" header on the first non-blank line.
  size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == 'n') {
    size_t eol = text.find('\n', pos);
    std::string_view head = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back())))
      head.remove_suffix(1);
    if (head.size() < 3 || head[1] != '=')
      fail(ParseErrorKind::IllegalCharacter, "malformed size header, expected n=K");
    int value = 0;
    auto [p, ec] = std::from_chars(head.data() + 2, head.data() + head.size(), value);
    if (ec != std::errc{} || p != head.data() + head.size())
      fail(ParseErrorKind::IllegalCharacter, "malformed size header, expected n=K");
    if (value < 1 || value > kMaxSide)
      fail(ParseErrorKind::SizeOutOfRange,
           "declared board side " + std::to_string(value) + " outside [1, " +
               std::to_string(kMaxSide) + "]");
    declared = value;
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
  }

  // Rows are maximal runs of non-whitespace characters.
  std::vector<std::string_view> rows;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    rows.push_back(text.substr(start, i - start));
  }

  for (std::string_view row : rows)
    for (char ch : row)
      if (ch != '#' && ch != '.')
        fail(ParseErrorKind::IllegalCharacter,
             std::string("illegal character '") + ch + "' in board");

  if (rows.empty()) {
    if (declared > 0)
      fail(ParseErrorKind::SizeMismatch,
           "declared n=" + std::to_string(declared) + " but found no rows");
    fail(ParseErrorKind::SizeOutOfRange, "empty board");
  }
  for (size_t r = 1; r < rows.size(); ++r)
    if (rows[r].size() != rows[0].size())
      fail(ParseErrorKind::RaggedRows,
           "row " + std::to_string(r) + " has length " +
               std::to_string(rows[r].size()) + ", expected " +
               std::to_string(rows[0].size()));

  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows[0].size());
  if (declared > 0 && (height != declared || width != declared))
    fail(ParseErrorKind::SizeMismatch,
         "declared n=" + std::to_string(declared) + " but grid is " +
             std::to_string(height) + "x" + std::to_string(width));
  if (height != width)
    fail(ParseErrorKind::SizeMismatch, "grid is " + std::to_string(height) +
                                           "x" + std::to_string(width) +
                                           ", expected a square");

  BoardSize size = checked_size(height);
  CellSet set(size);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (rows[r][c] == '#') set.set({r, c});
  return set;
}

std::string render_board(const CellSet& set) {
  const int n = set.side();
  std::string out;
  out.reserve(n * (n + 1));
  for (int r = 0; r < n; ++r) {
    if (r > 0) out.push_back('\n');
    for (int c = 0; c < n; ++c) out.push_back(set.test({r, c}) ? '#' : '.');
  }
  return out;
}

std::string render_board(const CellSet& set, const std::map<Cell, int>& labels,
                         bool pretty) {
  if (labels.empty() && !pretty) return render_board(set);

  int width = 1;
  for (const auto& [cell, label] : labels) {
    if (set.test(cell))
      throw std::invalid_argument("label on occupied cell (" +
                                  std::to_string(cell.row) + "," +
                                  std::to_string(cell.col) + ")");
    width = std::max(width, static_cast<int>(std::to_string(label).size()));
  }

  const int n = set.side();
  std::ostringstream out;
  for (int r = 0; r < n; ++r) {
    if (r > 0) out << '\n';
    for (int c = 0; c < n; ++c) {
      if (c > 0) out << ' ';
      std::string cell_text;
      if (set.test({r, c}))
        cell_text = pretty ? "•" : "#";
      else if (auto it = labels.find({r, c}); it != labels.end())
        cell_text = std::to_string(it->second);
      else
        cell_text = ".";
      // The bullet is multibyte but one display column wide.
      int display = cell_text == "•" ? 1 : static_cast<int>(cell_text.size());
      out << std::string(width - display, ' ') << cell_text;
    }
  }
  return out.str();
}

}  // namespace bingo
