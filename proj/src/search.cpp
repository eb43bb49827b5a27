#include "bingo/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "sampling.hpp"

namespace bingo {

namespace {

bool in_scope(SearchScope scope, bool spanning) {
  return scope == SearchScope::All ||
         (scope == SearchScope::Spanning) == spanning;
}

// Cheaper than a full canonical_form: bail out at the first smaller image.
bool is_canonical(const CellSet& set,
                  const std::vector<CellTransform>& transforms) {
  for (size_t i = 1; i < transforms.size(); ++i) {
    if (transforms[i].apply(set) < set) return false;
  }
  return true;
}

// Per-shard accumulator. Merging is associative and commutative and each
// board's contribution is computed independently of its shard, so the
// folded result does not depend on shard boundaries or thread count.
struct Accum {
  int max_depth = -1;
  std::uint64_t witness_count = 0;
  std::vector<CellSet> witnesses;  // sorted, distinct, capped
  std::uint64_t examined = 0;
};

// Keeps the cap smallest distinct witnesses: any witness in the global
// top-cap is in its own shard's top-cap, so truncation loses nothing.
void add_witness(std::vector<CellSet>& witnesses, const CellSet& w, int cap) {
  const auto it = std::lower_bound(witnesses.begin(), witnesses.end(), w);
  if (it != witnesses.end() && *it == w) return;
  witnesses.insert(it, w);
  if (static_cast<int>(witnesses.size()) > cap) witnesses.pop_back();
}

void record(Accum& acc, int depth, const CellSet& canonical,
            std::uint64_t weight, int cap) {
  if (depth > acc.max_depth) {
    acc.max_depth = depth;
    acc.witness_count = weight;
    acc.witnesses.clear();
  } else if (depth < acc.max_depth) {
    return;
  } else {
    acc.witness_count += weight;
  }
  if (cap > 0) add_witness(acc.witnesses, canonical, cap);
}

void merge(Accum& into, const Accum& from, int cap) {
  into.examined += from.examined;
  if (from.max_depth > into.max_depth) {
    into.max_depth = from.max_depth;
    into.witness_count = from.witness_count;
    into.witnesses = from.witnesses;
  } else if (from.max_depth == into.max_depth) {
    into.witness_count += from.witness_count;
    for (const CellSet& w : from.witnesses) add_witness(into.witnesses, w, cap);
  }
}

// Scans boards board_at(0) .. board_at(total-1), sharded across workers.
template <typename BoardAt>
SearchReport scan_boards(BoardSize size, const SearchOptions& options,
                         std::uint64_t total, bool symmetry,
                         BoardAt&& board_at) {
  if (options.max_witnesses < 0) {
    throw std::invalid_argument("max_witnesses must be non-negative");
  }
  const auto started = std::chrono::steady_clock::now();
  const int workers = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(resolve_thread_count(options.threads)),
      total));

  std::atomic<std::uint64_t> scanned{0};
  std::mutex progress_mutex;
  constexpr std::uint64_t kTick = 1u << 20;
  auto tick = [&](std::uint64_t block) {
    if (!options.on_progress || block == 0) return;
    const std::uint64_t done = scanned.fetch_add(block) + block;
    const std::lock_guard<std::mutex> lock(progress_mutex);
    options.on_progress(done, total);
  };

  auto shard = [&](std::uint64_t begin, std::uint64_t end) {
    const auto& transforms = transforms_for(size);
    Accum acc;
    std::uint64_t pending = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      if (++pending == kTick) {
        tick(pending);
        pending = 0;
      }
      const CellSet board = board_at(i);
      std::uint64_t weight = 1;
      if (symmetry) {
        if (!is_canonical(board, transforms)) continue;
        weight = static_cast<std::uint64_t>(orbit_size(board));
      }
      const ClosureResult result = closure_fixpoint(board);
      ++acc.examined;
      if (!in_scope(options.scope, result.final.is_full())) continue;
      if (result.depth < acc.max_depth) continue;
      record(acc, result.depth, symmetry ? board : canonical_form(board),
             weight, options.max_witnesses);
    }
    tick(pending);
    return acc;
  };

  std::vector<Accum> parts(static_cast<size_t>(workers));
  if (workers <= 1) {
    parts[0] = shard(0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * static_cast<std::uint64_t>(w) /
                                  static_cast<std::uint64_t>(workers);
      const std::uint64_t end = total * (static_cast<std::uint64_t>(w) + 1) /
                                static_cast<std::uint64_t>(workers);
      pool.emplace_back(
          [&parts, &shard, w, begin, end] { parts[static_cast<size_t>(w)] = shard(begin, end); });
    }
    for (std::thread& t : pool) t.join();
  }

  Accum folded;
  for (const Accum& part : parts) merge(folded, part, options.max_witnesses);

  SearchReport report{size, options.scope};
  report.max_depth = folded.max_depth;
  report.witnesses = std::move(folded.witnesses);
  report.witness_count = folded.witness_count;
  report.boards_examined = folded.examined;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

template <typename Check>
void sweep_boards(BoardSize size, SweepMode mode, std::uint64_t samples,
                  std::uint64_t seed, Check&& check) {
  if (mode == SweepMode::Exhaustive) {
    if (size.value() > 4) {
      throw std::invalid_argument("exhaustive sweeps are limited to sides 1..4");
    }
    const std::uint64_t total = 1ull << size.area();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      check(CellSet::from_bits(size, bits));
    }
  } else {
    if (samples == 0) {
      throw std::invalid_argument("sampled sweeps need at least one sample");
    }
    for (std::uint64_t i = 0; i < samples; ++i) {
      check(detail::sample_board(size, seed, i));
    }
  }
}

}  // namespace

bool same_results(const SearchReport& a, const SearchReport& b) {
  return a.size == b.size && a.scope == b.scope && a.max_depth == b.max_depth &&
         a.witnesses == b.witnesses && a.witness_count == b.witness_count &&
         a.boards_examined == b.boards_examined && a.samples == b.samples &&
         a.seed == b.seed;
}

CellSet canonical_form(const CellSet& set) {
  const auto& transforms = transforms_for(set.size());
  CellSet best = set;
  for (size_t i = 1; i < transforms.size(); ++i) {
    const CellSet image = transforms[i].apply(set);
    if (image < best) best = image;
  }
  return best;
}

int orbit_size(const CellSet& set) {
  const auto& transforms = transforms_for(set.size());
  std::array<std::pair<std::uint64_t, std::uint64_t>, 8> seen;
  int distinct = 0;
  for (const CellTransform& t : transforms) {
    const CellSet image = t.apply(set);
    const std::pair<std::uint64_t, std::uint64_t> key{image.word(0),
                                                      image.word(1)};
    bool duplicate = false;
    for (int i = 0; i < distinct; ++i) duplicate |= seen[i] == key;
    if (!duplicate) seen[static_cast<size_t>(distinct++)] = key;
  }
  return distinct;
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BINGO_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SearchReport max_depth_exhaustive(BoardSize size, const SearchOptions& options) {
  const int n = size.value();
  if (n > 5) {
    throw std::invalid_argument("exhaustive search is limited to sides 1..5");
  }
  if (n == 5 && !options.allow_large) {
    throw std::invalid_argument(
        "side-5 exhaustive search scans 2^25 boards; set allow_large to run it");
  }
  const std::uint64_t total = 1ull << size.area();
  return scan_boards(size, options, total, options.use_symmetry,
                     [size](std::uint64_t bits) {
                       return CellSet::from_bits(size, bits);
                     });
}

SearchReport max_depth_sampled(BoardSize size, std::uint64_t samples,
                               std::uint64_t seed,
                               const SearchOptions& options) {
  if (samples == 0) {
    throw std::invalid_argument("sampled search needs at least one sample");
  }
  SearchReport report =
      scan_boards(size, options, samples, /*symmetry=*/false,
                  [size, seed](std::uint64_t i) {
                    return detail::sample_board(size, seed, i);
                  });
  report.samples = samples;
  report.seed = seed;
  return report;
}

std::vector<BoundViolation> bound_sweep(BoardSize size, SweepMode mode,
                                        std::uint64_t samples,
                                        std::uint64_t seed) {
  const int n = size.value();
  std::vector<BoundViolation> violations;
  sweep_boards(size, mode, samples, seed, [&](const CellSet& board) {
    const ClosureResult result = closure_fixpoint(board);
    const bool spanning = result.final.is_full();
    const int bound = spanning ? 2 * n : 2 * n - 2;
    if (result.depth > bound) {
      violations.push_back({board, result.depth, bound, spanning});
    }
  });
  return violations;
}

std::vector<CellSet> lemma1_sweep(BoardSize size, SweepMode mode,
                                  std::uint64_t samples, std::uint64_t seed) {
  std::vector<CellSet> offending;
  sweep_boards(size, mode, samples, seed, [&](const CellSet& board) {
    const CellSet closed = closure_fixpoint(board).final;
    if (closed.is_full()) return;
    const int missing = size.area() - closed.count();
    int open_lines = 0;
    for (const Line& line : lines_for(size)) {
      if (!closed.contains(line.mask)) ++open_lines;
    }
    if (missing >= 4 && open_lines >= 4) return;
    if (std::find(offending.begin(), offending.end(), closed) ==
        offending.end()) {
      offending.push_back(closed);
    }
  });
  return offending;
}

}  // namespace bingo
