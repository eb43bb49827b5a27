#include "bingo/json_io.hpp"

#include <stdexcept>
#include <string>

namespace bingo {

namespace {

using nlohmann::ordered_json;

std::string kind_name(LineKind kind) {
  switch (kind) {
    case LineKind::Row:      return "row";
    case LineKind::Col:      return "col";
    case LineKind::MainDiag: return "main_diag";
    case LineKind::AntiDiag: return "anti_diag";
  }
  throw std::logic_error("bad LineKind");
}

LineKind kind_from_string(const std::string& name) {
  if (name == "row") return LineKind::Row;
  if (name == "col") return LineKind::Col;
  if (name == "main_diag") return LineKind::MainDiag;
  if (name == "anti_diag") return LineKind::AntiDiag;
  throw std::invalid_argument("unknown line kind '" + name + "'");
}

ordered_json line_to_json(LineRef ref) {
  ordered_json j;
  j["kind"] = kind_name(ref.kind);
  j["index"] = ref.index;
  return j;
}

LineRef line_from_json(const ordered_json& j) {
  return {kind_from_string(j.at("kind").get<std::string>()),
          j.at("index").get<int>()};
}

}  // namespace

std::string to_string(SearchScope scope) {
  switch (scope) {
    case SearchScope::All:         return "all";
    case SearchScope::Spanning:    return "spanning";
    case SearchScope::NonSpanning: return "nonspanning";
  }
  throw std::logic_error("bad SearchScope");
}

SearchScope scope_from_string(std::string_view name) {
  if (name == "all") return SearchScope::All;
  if (name == "spanning") return SearchScope::Spanning;
  if (name == "nonspanning") return SearchScope::NonSpanning;
  throw std::invalid_argument("unknown scope '" + std::string(name) + "'");
}

nlohmann::ordered_json trace_to_json(const ClosureTrace& trace) {
  ordered_json doc;
  doc["n"] = trace.start.side();
  doc["start"] = render_board(trace.start);
  doc["depth"] = trace.depth();
  doc["steps"] = ordered_json::array();
  for (const TraceStep& step : trace.steps) {
    ordered_json js;
    js["index"] = step.index;
    js["added"] = ordered_json::array();
    js["firing"] = ordered_json::array();
    for (const auto& [cell, lines] : step.firing) {
      js["added"].push_back({cell.row, cell.col});
      ordered_json fired = ordered_json::array();
      for (const LineRef& line : lines) fired.push_back(line_to_json(line));
      js["firing"].push_back(fired);
    }
    js["completed"] = ordered_json::array();
    for (const LineRef& line : step.completed) {
      js["completed"].push_back(line_to_json(line));
    }
    doc["steps"].push_back(js);
  }
  doc["final"] = render_board(trace.final);
  return doc;
}

ClosureTrace trace_from_json(const nlohmann::ordered_json& doc) {
  const CellSet start = parse_board(doc.at("start").get<std::string>());
  if (doc.at("n").get<int>() != start.side()) {
    throw std::invalid_argument("trace field n contradicts the start board");
  }
  ClosureTrace trace{start, {}, parse_board(doc.at("final").get<std::string>())};
  for (const ordered_json& js : doc.at("steps")) {
    TraceStep step{js.at("index").get<int>(), CellSet(start.size()), {}, {}};
    const ordered_json& added = js.at("added");
    const ordered_json& firing = js.at("firing");
    if (firing.size() != added.size()) {
      throw std::invalid_argument("trace step firing must parallel added");
    }
    for (size_t i = 0; i < added.size(); ++i) {
      const Cell cell{added[i].at(0).get<int>(), added[i].at(1).get<int>()};
      step.added.set(cell);
      std::vector<LineRef> lines;
      for (const ordered_json& lj : firing[i]) {
        lines.push_back(line_from_json(lj));
      }
      step.firing.emplace_back(cell, std::move(lines));
    }
    for (const ordered_json& lj : js.at("completed")) {
      step.completed.push_back(line_from_json(lj));
    }
    trace.steps.push_back(std::move(step));
  }
  if (trace.depth() != doc.at("depth").get<int>()) {
    throw std::invalid_argument("trace field depth contradicts the step list");
  }
  return trace;
}

nlohmann::ordered_json report_to_json(const SearchReport& report) {
  ordered_json doc;
  doc["n"] = report.size.value();
  doc["scope"] = to_string(report.scope);
  doc["max_depth"] = report.max_depth;
  doc["witness_count"] = report.witness_count;
  doc["witnesses"] = ordered_json::array();
  for (const CellSet& witness : report.witnesses) {
    doc["witnesses"].push_back(render_board(witness));
  }
  doc["boards_examined"] = report.boards_examined;
  doc["elapsed_ms"] = report.elapsed_ms;
  if (report.seed) doc["seed"] = *report.seed;
  return doc;
}

}  // namespace bingo
