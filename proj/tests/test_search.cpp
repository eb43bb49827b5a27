#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "bingo/search.hpp"
#include "test_util.hpp"

using namespace bingo;

namespace {

SearchOptions with_threads(int threads) {
  SearchOptions options;
  options.threads = threads;
  return options;
}

}  // namespace

TEST_CASE("canonical_form picks the numerically smallest image") {
  const BoardSize two(2);
  CHECK(canonical_form(CellSet::of(two, {{0, 1}})) ==
        CellSet::of(two, {{0, 0}}));
  CHECK(canonical_form(CellSet::of(two, {{1, 0}})) ==
        CellSet::of(two, {{0, 0}}));

  std::mt19937_64 rng(7);
  for (int n = 2; n <= 9; ++n) {
    const BoardSize size(n);
    for (int i = 0; i < 20; ++i) {
      const CellSet board = testutil::random_board(size, rng);
      const CellSet canon = canonical_form(board);
      CHECK(canonical_form(canon) == canon);  // idempotent
      bool hit = false;
      for (const CellTransform& t : transforms_for(size)) {
        const CellSet image = t.apply(board);
        CHECK_FALSE(image < canon);
        hit |= image == canon;
        // Every member of the orbit shares the canonical form.
        CHECK(canonical_form(image) == canon);
      }
      CHECK(hit);
    }
  }
}

TEST_CASE("orbit_size counts distinct images") {
  const BoardSize three(3);
  CHECK(orbit_size(CellSet(three)) == 1);
  CHECK(orbit_size(CellSet::full(three)) == 1);
  CHECK(orbit_size(CellSet::of(three, {{1, 1}})) == 1);  // center is fixed
  CHECK(orbit_size(CellSet::of(three, {{0, 0}})) == 4);  // corners
  CHECK(orbit_size(CellSet::of(three, {{0, 1}})) == 4);  // edge midpoints

  // Orbit sizes of the distinct canonical forms partition the 2x2 power set.
  const BoardSize two(2);
  std::map<CellSet, int> orbits;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const CellSet board = CellSet::from_bits(two, bits);
    orbits.emplace(canonical_form(board), orbit_size(board));
  }
  CHECK(orbits.size() == 6);
  int covered = 0;
  for (const auto& [canon, size] : orbits) covered += size;
  CHECK(covered == 16);
}

TEST_CASE("exhaustive search certifies the small maxima") {
  const int expected[] = {0, 1, 1, 4, 6};
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const SearchReport report = max_depth_exhaustive(BoardSize(n));
    CHECK(report.max_depth == expected[n]);
    CHECK(report.scope == SearchScope::All);
    CHECK_FALSE(report.samples.has_value());
    CHECK_FALSE(report.seed.has_value());
    // Witnesses are canonical, sorted, and really attain the maximum.
    for (size_t i = 0; i < report.witnesses.size(); ++i) {
      const CellSet& w = report.witnesses[i];
      CHECK(depth(w) == report.max_depth);
      CHECK(canonical_form(w) == w);
      if (i > 0) CHECK(report.witnesses[i - 1] < w);
    }
    CHECK(report.witness_count >= report.witnesses.size());
  }
}

TEST_CASE("side-2 search is fully understood") {
  const SearchReport report = max_depth_exhaustive(BoardSize(2));
  const BoardSize two(2);
  CHECK(report.max_depth == 1);
  // Every set but the empty and the full one closes in exactly one step.
  CHECK(report.witness_count == 14);
  CHECK(report.boards_examined == 6);  // one representative per orbit
  CHECK(report.witnesses ==
        std::vector<CellSet>{CellSet::from_bits(two, 0b0001),
                             CellSet::from_bits(two, 0b0011),
                             CellSet::from_bits(two, 0b0110),
                             CellSet::from_bits(two, 0b0111)});

  SearchOptions raw;
  raw.use_symmetry = false;
  const SearchReport unreduced = max_depth_exhaustive(two, raw);
  CHECK(unreduced.boards_examined == 16);
  CHECK(unreduced.max_depth == report.max_depth);
  CHECK(unreduced.witness_count == report.witness_count);
  CHECK(unreduced.witnesses == report.witnesses);
}

TEST_CASE("side-1 search sees the single one-step board") {
  const SearchReport report = max_depth_exhaustive(BoardSize(1));
  CHECK(report.max_depth == 1);
  CHECK(report.witness_count == 1);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].none());
  CHECK(report.boards_examined == 2);
}

TEST_CASE("symmetry reduction changes the work, not the answer") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    SearchOptions raw;
    raw.use_symmetry = false;
    const SearchReport reduced = max_depth_exhaustive(BoardSize(n));
    const SearchReport full = max_depth_exhaustive(BoardSize(n), raw);
    CHECK(reduced.max_depth == full.max_depth);
    CHECK(reduced.witness_count == full.witness_count);
    CHECK(reduced.witnesses == full.witnesses);
    CHECK(reduced.boards_examined < full.boards_examined);
    CHECK(full.boards_examined == (1ull << (n * n)));
  }
}

TEST_CASE("scopes filter the eligible boards") {
  const BoardSize two(2);
  SearchOptions spanning;
  spanning.scope = SearchScope::Spanning;
  const SearchReport span = max_depth_exhaustive(two, spanning);
  CHECK(span.max_depth == 1);
  CHECK(span.witness_count == 14);
  CHECK(span.scope == SearchScope::Spanning);

  SearchOptions rest;
  rest.scope = SearchScope::NonSpanning;
  const SearchReport none = max_depth_exhaustive(two, rest);
  CHECK(none.max_depth == 0);  // only the empty set fails to span
  CHECK(none.witness_count == 1);
  REQUIRE(none.witnesses.size() == 1);
  CHECK(none.witnesses[0].none());
}

TEST_CASE("large exhaustive scans are opt-in") {
  CHECK_THROWS_AS(max_depth_exhaustive(BoardSize(5)), std::invalid_argument);
  SearchOptions large;
  large.allow_large = true;
  CHECK_THROWS_AS(max_depth_exhaustive(BoardSize(6), large),
                  std::invalid_argument);

  SearchOptions bad;
  bad.max_witnesses = -1;
  CHECK_THROWS_AS(max_depth_exhaustive(BoardSize(3), bad),
                  std::invalid_argument);
}

TEST_CASE("max_witnesses caps the list without touching the count") {
  const SearchReport full = max_depth_exhaustive(BoardSize(3));
  SearchOptions capped_options;
  capped_options.max_witnesses = 2;
  const SearchReport capped = max_depth_exhaustive(BoardSize(3), capped_options);
  CHECK(capped.max_depth == full.max_depth);
  CHECK(capped.witness_count == full.witness_count);
  REQUIRE(capped.witnesses.size() == 2);
  CHECK(capped.witnesses[0] == full.witnesses[0]);
  CHECK(capped.witnesses[1] == full.witnesses[1]);

  capped_options.max_witnesses = 0;
  const SearchReport bare = max_depth_exhaustive(BoardSize(3), capped_options);
  CHECK(bare.witnesses.empty());
  CHECK(bare.witness_count == full.witness_count);
}

TEST_CASE("thread count never changes exhaustive results") {
  const SearchReport one = max_depth_exhaustive(BoardSize(4), with_threads(1));
  const SearchReport two = max_depth_exhaustive(BoardSize(4), with_threads(2));
  const SearchReport eight = max_depth_exhaustive(BoardSize(4), with_threads(8));
  CHECK(same_results(one, two));
  CHECK(same_results(one, eight));
  CHECK(one.max_depth == 6);
}

TEST_CASE("sampled search is a pure function of samples and seed") {
  const BoardSize six(6);
  const SearchReport a = max_depth_sampled(six, 20000, 99, with_threads(1));
  const SearchReport b = max_depth_sampled(six, 20000, 99, with_threads(2));
  const SearchReport c = max_depth_sampled(six, 20000, 99, with_threads(8));
  CHECK(same_results(a, b));
  CHECK(same_results(a, c));
  CHECK(same_results(a, max_depth_sampled(six, 20000, 99)));

  CHECK(a.boards_examined == 20000);
  CHECK(a.samples == 20000);
  CHECK(a.seed == 99);
  CHECK(a.max_depth >= 1);
  for (const CellSet& w : a.witnesses) {
    CHECK(depth(w) == a.max_depth);
    CHECK(canonical_form(w) == w);
  }

  CHECK_THROWS_AS(max_depth_sampled(six, 0, 99), std::invalid_argument);
}

TEST_CASE("progress callbacks report the scanned totals") {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> calls;
  SearchOptions options = with_threads(1);
  options.on_progress = [&](std::uint64_t done, std::uint64_t total) {
    calls.emplace_back(done, total);
  };
  options.use_symmetry = false;
  max_depth_exhaustive(BoardSize(3), options);
  REQUIRE(calls.size() == 1);  // 512 boards arrive in one sub-tick block
  CHECK(calls[0] == std::pair<std::uint64_t, std::uint64_t>{512, 512});
}

TEST_CASE("bound sweeps find no violations") {
  CHECK(bound_sweep(BoardSize(3), SweepMode::Exhaustive).empty());
  CHECK(bound_sweep(BoardSize(4), SweepMode::Exhaustive).empty());
  CHECK(bound_sweep(BoardSize(2), SweepMode::Exhaustive).empty());
  CHECK(bound_sweep(BoardSize(6), SweepMode::Sampled, 5000, 17).empty());
  CHECK(bound_sweep(BoardSize(8), SweepMode::Sampled, 2000, 17).empty());
  CHECK_THROWS_AS(bound_sweep(BoardSize(5), SweepMode::Exhaustive),
                  std::invalid_argument);
  CHECK_THROWS_AS(bound_sweep(BoardSize(5), SweepMode::Sampled, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("lemma1 sweeps find no offending closures") {
  CHECK(lemma1_sweep(BoardSize(2), SweepMode::Exhaustive).empty());
  CHECK(lemma1_sweep(BoardSize(3), SweepMode::Exhaustive).empty());
  CHECK(lemma1_sweep(BoardSize(4), SweepMode::Exhaustive).empty());
  CHECK(lemma1_sweep(BoardSize(6), SweepMode::Sampled, 5000, 23).empty());
  CHECK(lemma1_sweep(BoardSize(8), SweepMode::Sampled, 2000, 23).empty());
  CHECK_THROWS_AS(lemma1_sweep(BoardSize(5), SweepMode::Exhaustive),
                  std::invalid_argument);
  CHECK_THROWS_AS(lemma1_sweep(BoardSize(5), SweepMode::Sampled, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("resolve_thread_count prefers the explicit request") {
  const char* saved = std::getenv("BINGO_THREADS");
  const std::string restore = saved ? saved : "";

  ::setenv("BINGO_THREADS", "5", 1);
  CHECK(resolve_thread_count(3) == 3);
  CHECK(resolve_thread_count(0) == 5);

  ::setenv("BINGO_THREADS", "zebra", 1);
  CHECK(resolve_thread_count(0) >= 1);
  ::setenv("BINGO_THREADS", "0", 1);
  CHECK(resolve_thread_count(0) >= 1);
  ::setenv("BINGO_THREADS", "7 ", 1);
  CHECK(resolve_thread_count(0) >= 1);  // trailing junk is ignored entirely

  ::unsetenv("BINGO_THREADS");
  CHECK(resolve_thread_count(0) >= 1);
  CHECK(resolve_thread_count(2) == 2);

  if (saved) {
    ::setenv("BINGO_THREADS", restore.c_str(), 1);
  }
}
