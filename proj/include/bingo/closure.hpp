// The Bingo dependency map, its dolmatic extension, fixpoint closure, depth,
// full iteration traces, and the set-map law checkers.
//
// A square s is dependent on a set S when some line through s has all of its
// other cells in S. The dependency map phi sends S to the set of all squares
// dependent on S; it is isotone but not expansive. Its dolmatic extension
// phi*(S) = S | phi(S) is iterated to a fixpoint, the closure. The depth of
// S is the number of productive iterations.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bingo/grid.hpp"

namespace bingo {

// phi(state): every cell that completes a line with cells of `state`.
// Membership of a cell in `state` is irrelevant; a cell of a fully
// contained line is dependent, a cell whose lines are all two or more
// short is not.
CellSet dependent_set(const CellSet& state);

// phi*(state) = state | phi(state). All dependent cells join at once.
CellSet dolmatic_step(const CellSet& state);

// The general dolmatic extension, state | union of phi(S) over all
// S subset of state, evaluated literally by subset enumeration. For the
// Bingo map this collapses to dolmatic_step since phi is isotone; the
// literal form is kept as an independent oracle. Requires at most 18
// occupied cells; throws std::invalid_argument beyond that.
CellSet general_dolmatic_extension(const CellSet& state);

struct TraceStep {
  int index;      // 1-based iteration number
  CellSet added;  // cells new in this iteration, all added simultaneously
  // For each added cell (in cell-index order): the lines it completed with
  // the previous state. Every added cell has at least one.
  std::vector<std::pair<Cell, std::vector<LineRef>>> firing;
  // Lines fully contained in the state for the first time after this step.
  // A line can complete passively, without firing for any cell. At least
  // one line completes per step.
  std::vector<LineRef> completed;
  bool operator==(const TraceStep&) const = default;
};

struct ClosureTrace {
  CellSet start;
  std::vector<TraceStep> steps;  // productive iterations only
  CellSet final;
  int depth() const { return static_cast<int>(steps.size()); }
  bool operator==(const ClosureTrace&) const = default;
};

// Iterates dolmatic_step from `start` to its fixpoint, recording every
// productive step. Terminates within 2n+2 steps.
ClosureTrace closure(const CellSet& start);

// closure() without trace recording, for hot loops.
struct ClosureResult {
  CellSet final;
  int depth;
};
ClosureResult closure_fixpoint(const CellSet& start);

// Smallest d with phi*^(d+1)(start) = phi*^d(start); 0 iff start is closed.
int depth(const CellSet& start);

bool is_closed(const CellSet& set);

// True iff the closure of `set` is the whole board.
bool spans(const CellSet& set);

// Step number of every cell the closure added, keyed by cell.
std::map<Cell, int> step_labels(const ClosureTrace& trace);

enum class SetMap { Dependency, DolmaticStep };

struct LawReport {
  bool isotone = true;
  bool expansive = true;
  bool dolmatic = true;  // == isotone && expansive
  // First violation found: (A, B) with A subset of B and map(A) not a
  // subset of map(B) for isotonicity, or (A, map(A)) for expansivity.
  std::optional<std::pair<CellSet, CellSet>> counterexample;
};

// Tests the chosen map for isotonicity and expansivity: exhaustively over
// all nested pairs A <= B when n <= 2, otherwise over `budget` seeded
// random nested pairs. budget must be >= 1.
LawReport check_laws(BoardSize size, SetMap map, int budget, std::uint64_t seed);

enum class SweepMode { Exhaustive, Sampled };

struct LawViolation {
  std::string law;  // which law failed, e.g. "idempotent"
  CellSet a;
  std::optional<CellSet> b;  // second set for pairwise laws
};

// Closure-operator law sweep: extensive, idempotent and monotone on the
// closure, isotonicity of phi, expansivity and isotonicity of phi*, and
// agreement of general_dolmatic_extension with dolmatic_step (checked for
// n <= 5 on sets of at most 18 cells, capped at 500 sampled sets).
// Exhaustive mode enumerates all subsets (and nested pairs) and is
// accepted only for n <= 3. Returns all violations; expected empty.
std::vector<LawViolation> closure_law_sweep(BoardSize size, SweepMode mode,
                                            std::uint64_t samples,
                                            std::uint64_t seed);

}  // namespace bingo
