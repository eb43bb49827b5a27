#include "bingo/closure.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

#include "sampling.hpp"

namespace bingo {

CellSet dependent_set(const CellSet& state) {
  CellSet result(state.size());
  for (const Line& line : lines_for(state.size())) {
    CellSet missing = line.mask - state;
    if (missing.none())
      result |= line.mask;  // a contained line makes all its cells dependent
    else if (missing.count() == 1)
      result |= missing;
  }
  return result;
}

CellSet dolmatic_step(const CellSet& state) {
  return state | dependent_set(state);
}

CellSet general_dolmatic_extension(const CellSet& state) {
  const std::vector<Cell> cells = state.cells();
  if (cells.size() > 18)
    throw std::invalid_argument(
        "general_dolmatic_extension: subset budget exceeded (" +
        std::to_string(cells.size()) + " cells, limit 18)");
  CellSet result = state;
  for (std::uint64_t bits = 0; bits < (1ull << cells.size()); ++bits) {
    CellSet subset(state.size());
    std::uint64_t b = bits;
    while (b) {
      subset.set(cells[std::countr_zero(b)]);
      b &= b - 1;
    }
    result |= dependent_set(subset);
  }
  return result;
}

ClosureTrace closure(const CellSet& start) {
  const auto& lines = lines_for(start.size());
  ClosureTrace trace{start, {}, start};
  CellSet state = start;
  for (;;) {
    const CellSet next = dolmatic_step(state);
    const CellSet added = next - state;
    if (added.none()) break;

    TraceStep step{static_cast<int>(trace.steps.size()) + 1, added, {}, {}};
    added.for_each([&](Cell c) {
      std::vector<LineRef> fired;
      for (const Line& line : lines) {
        if (!line.mask.test(c)) continue;
        CellSet others = line.mask;
        others.reset(c);
        if (state.contains(others)) fired.push_back({line.kind, line.index});
      }
      assert(!fired.empty());
      step.firing.emplace_back(c, std::move(fired));
    });
    for (const Line& line : lines)
      if (next.contains(line.mask) && !state.contains(line.mask))
        step.completed.push_back({line.kind, line.index});
    assert(!step.completed.empty());

    trace.steps.push_back(std::move(step));
    state = next;
  }
  trace.final = state;
  assert(trace.depth() <= 2 * start.side() + 2);
  return trace;
}

ClosureResult closure_fixpoint(const CellSet& start) {
  const auto& lines = lines_for(start.size());
  const int line_count = static_cast<int>(lines.size());
  std::uint32_t pending = (1u << line_count) - 1;  // lines not yet contained
  CellSet state = start;
  int steps = 0;
  for (;;) {
    CellSet adds(start.size());
    std::uint32_t scan = pending;
    while (scan) {
      const int li = std::countr_zero(scan);
      scan &= scan - 1;
      const CellSet missing = lines[li].mask - state;
      if (missing.none())
        pending &= ~(1u << li);
      else if (missing.count() == 1)
        adds |= missing;
    }
    if (adds.none()) break;
    state |= adds;
    ++steps;
  }
  return {state, steps};
}

int depth(const CellSet& start) { return closure_fixpoint(start).depth; }

bool is_closed(const CellSet& set) { return set.contains(dependent_set(set)); }

bool spans(const CellSet& set) { return closure_fixpoint(set).final.is_full(); }

std::map<Cell, int> step_labels(const ClosureTrace& trace) {
  std::map<Cell, int> labels;
  for (const TraceStep& step : trace.steps)
    step.added.for_each([&](Cell c) { labels[c] = step.index; });
  return labels;
}

namespace {

CellSet apply_map(SetMap map, const CellSet& s) {
  return map == SetMap::Dependency ? dependent_set(s) : dolmatic_step(s);
}

}  // namespace

LawReport check_laws(BoardSize size, SetMap map, int budget, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("check_laws: budget must be >= 1");

  LawReport report;
  auto note = [&](const CellSet& a, const CellSet& b) {
    if (!report.counterexample) report.counterexample = {a, b};
  };
  auto check_expansive = [&](const CellSet& s) {
    if (!report.expansive) return;
    const CellSet image = apply_map(map, s);
    if (!image.contains(s)) {
      report.expansive = false;
      note(s, image);
    }
  };
  auto check_isotone = [&](const CellSet& a, const CellSet& b) {
    if (!report.isotone) return;
    if (!apply_map(map, b).contains(apply_map(map, a))) {
      report.isotone = false;
      note(a, b);
    }
  };

  const int area = size.area();
  if (size.value() <= 2) {
    // Exhaustive over all nested pairs A <= B.
    for (std::uint64_t b_bits = 0; b_bits < (1ull << area); ++b_bits) {
      const CellSet b = CellSet::from_bits(size, b_bits);
      check_expansive(b);
      std::uint64_t a_bits = b_bits;
      for (;;) {
        check_isotone(CellSet::from_bits(size, a_bits), b);
        if (a_bits == 0) break;
        a_bits = (a_bits - 1) & b_bits;
      }
      if (!report.isotone && !report.expansive) break;
    }
  } else {
    for (int i = 0; i < budget; ++i) {
      const CellSet b = detail::sample_board(size, seed, i, 0);
      const CellSet a = b & detail::sample_board(size, seed, i, 1);
      check_expansive(a);
      check_expansive(b);
      check_isotone(a, b);
      if (!report.isotone && !report.expansive) break;
    }
  }

  report.dolmatic = report.isotone && report.expansive;
  return report;
}

std::vector<LawViolation> closure_law_sweep(BoardSize size, SweepMode mode,
                                            std::uint64_t samples,
                                            std::uint64_t seed) {
  if (mode == SweepMode::Exhaustive && size.value() > 3)
    throw std::invalid_argument("closure_law_sweep: exhaustive mode needs n <= 3");

  std::vector<LawViolation> out;
  auto check_single = [&](const CellSet& s) {
    const CellSet cl = closure_fixpoint(s).final;
    if (!cl.contains(s)) out.push_back({"extensive", s, std::nullopt});
    if (closure_fixpoint(cl).final != cl) out.push_back({"idempotent", s, std::nullopt});
    if (!dolmatic_step(s).contains(s)) out.push_back({"phi_star_expansive", s, std::nullopt});
  };
  auto check_pair = [&](const CellSet& a, const CellSet& b) {  // a <= b
    if (!dependent_set(b).contains(dependent_set(a)))
      out.push_back({"phi_isotone", a, b});
    if (!dolmatic_step(b).contains(dolmatic_step(a)))
      out.push_back({"phi_star_isotone", a, b});
    if (!closure_fixpoint(b).final.contains(closure_fixpoint(a).final))
      out.push_back({"monotone", a, b});
  };
  auto check_oracle = [&](const CellSet& s) {
    if (general_dolmatic_extension(s) != dolmatic_step(s))
      out.push_back({"oracle_equivalence", s, std::nullopt});
  };

  const int area = size.area();
  if (mode == SweepMode::Exhaustive) {
    for (std::uint64_t b_bits = 0; b_bits < (1ull << area); ++b_bits) {
      const CellSet b = CellSet::from_bits(size, b_bits);
      check_single(b);
      check_oracle(b);
      std::uint64_t a_bits = b_bits;
      for (;;) {
        check_pair(CellSet::from_bits(size, a_bits), b);
        if (a_bits == 0) break;
        a_bits = (a_bits - 1) & b_bits;
      }
    }
  } else {
    for (std::uint64_t i = 0; i < samples; ++i) {
      check_single(detail::sample_board(size, seed, i, 0));
      const CellSet b = detail::sample_board(size, seed, i, 1);
      check_pair(b & detail::sample_board(size, seed, i, 2), b);
    }
    if (size.value() <= 5) {
      const std::uint64_t oracle_budget = std::min<std::uint64_t>(samples, 500);
      for (std::uint64_t i = 0; i < oracle_budget; ++i) {
        CellSet s = detail::sample_board(size, seed, i, 3);
        for (std::uint64_t retry = 4; s.count() > 18; ++retry)
          s = detail::sample_board(size, seed, i, retry);
        check_oracle(s);
      }
    }
  }
  return out;
}

}  // namespace bingo
