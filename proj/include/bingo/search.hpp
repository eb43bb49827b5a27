// Maximum-depth search (exhaustive and sampled) with dihedral symmetry
// reduction and deterministic parallel reduction, plus the depth-bound and
// closed-set verification sweeps.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bingo/closure.hpp"

namespace bingo {

enum class SearchScope { All, Spanning, NonSpanning };

struct SearchOptions {
  SearchScope scope = SearchScope::All;
  bool use_symmetry = true;  // exhaustive only; sampling draws ignore it
  // 0 = take BINGO_THREADS from the environment, else hardware concurrency.
  int threads = 0;
  int max_witnesses = 8;
  // Opt-in for the 2^25-board side-5 exhaustive sweep.
  bool allow_large = false;
  // Called with (boards scanned, total) at coarse intervals; may be empty.
  std::function<void(std::uint64_t, std::uint64_t)> on_progress;
};

// Results are a pure function of (size, scope, symmetry flag, and for
// sampling (samples, seed)): thread count and shard boundaries never change
// anything but elapsed_ms.
struct SearchReport {
  BoardSize size;
  SearchScope scope = SearchScope::All;
  // Largest depth among in-scope boards, -1 when none qualified.
  int max_depth = -1;
  // Canonical forms of maximizers, lexicographically smallest first, capped
  // at max_witnesses.
  std::vector<CellSet> witnesses;
  // All maximizers before symmetry reduction: whole orbits in exhaustive
  // mode, individual draws (duplicates included) in sampled mode.
  std::uint64_t witness_count = 0;
  // Boards whose closure was computed; orbit skips are not counted.
  std::uint64_t boards_examined = 0;
  std::int64_t elapsed_ms = 0;
  // Present on sampled reports only.
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

// Equality of everything except wall-clock time.
bool same_results(const SearchReport& a, const SearchReport& b);

// The lexicographically smallest image of the set under the 8 symmetries
// of the square; idempotent.
CellSet canonical_form(const CellSet& set);

// Number of distinct images under the 8 symmetries; divides 8.
int orbit_size(const CellSet& set);

// requested > 0 wins; else a positive integer BINGO_THREADS; else hardware
// concurrency; at least 1.
int resolve_thread_count(int requested);

// Depth of every subset of the n x n board (canonical orbit representatives
// only when use_symmetry). Sides above 5 are refused; side 5 requires
// allow_large.
SearchReport max_depth_exhaustive(BoardSize size, const SearchOptions& options = {});

// Depth of `samples` seeded random boards; draw i is a pure function of
// (seed, i), independent of thread count.
SearchReport max_depth_sampled(BoardSize size, std::uint64_t samples,
                               std::uint64_t seed,
                               const SearchOptions& options = {});

// A board whose depth exceeds its bound: 2n for spanning sets, 2n-2 for
// non-spanning ones.
struct BoundViolation {
  CellSet board;
  int observed_depth = 0;
  int bound = 0;
  bool spanning = false;
};

// Checks every examined board against the depth bounds; expected empty.
// Exhaustive mode enumerates all subsets and is accepted only for n <= 4;
// sampled mode examines `samples` seeded draws.
std::vector<BoundViolation> bound_sweep(BoardSize size, SweepMode mode,
                                        std::uint64_t samples = 0,
                                        std::uint64_t seed = 0);

// For every examined board S with closure K != X, asserts that K misses at
// least 4 cells and leaves at least 4 lines incomplete; returns the
// distinct offending closures (expected empty). Same mode rules as
// bound_sweep.
std::vector<CellSet> lemma1_sweep(BoardSize size, SweepMode mode,
                                  std::uint64_t samples = 0,
                                  std::uint64_t seed = 0);

}  // namespace bingo
