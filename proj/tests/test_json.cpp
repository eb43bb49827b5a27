#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "bingo/constructions.hpp"
#include "bingo/json_io.hpp"
#include "test_util.hpp"

using namespace bingo;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> keys_of(const ordered_json& doc) {
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  return keys;
}

ClosureTrace board1_trace() {
  return closure(find_catalog_board("board1")->occupied);
}

}  // namespace

TEST_CASE("scope names round trip") {
  for (SearchScope scope : {SearchScope::All, SearchScope::Spanning,
                            SearchScope::NonSpanning}) {
    CHECK(scope_from_string(to_string(scope)) == scope);
  }
  CHECK(to_string(SearchScope::All) == "all");
  CHECK(to_string(SearchScope::Spanning) == "spanning");
  CHECK(to_string(SearchScope::NonSpanning) == "nonspanning");
  CHECK_THROWS_AS(scope_from_string("everything"), std::invalid_argument);
}

TEST_CASE("trace documents carry the fixed field layout") {
  const ordered_json doc = trace_to_json(board1_trace());

  CHECK(keys_of(doc) ==
        std::vector<std::string>{"n", "start", "depth", "steps", "final"});
  CHECK(doc["n"] == 5);
  CHECK(doc["depth"] == 3);
  REQUIRE(doc["steps"].size() == 3);

  const ordered_json& first = doc["steps"][0];
  CHECK(keys_of(first) ==
        std::vector<std::string>{"index", "added", "firing", "completed"});
  CHECK(first["index"] == 1);
  CHECK(first["added"] ==
        ordered_json::array({{1, 1}, {1, 3}, {2, 0}, {2, 4}, {3, 2}}));
  REQUIRE(first["firing"].size() == 5);
  CHECK(first["firing"][0] ==
        ordered_json::array({{{"kind", "main_diag"}, {"index", 0}}}));
  CHECK(first["firing"][2] ==
        ordered_json::array({{{"kind", "col"}, {"index", 0}}}));
  REQUIRE(first["completed"].size() == 5);
  CHECK(first["completed"][0] == ordered_json{{"kind", "row"}, {"index", 3}});
  CHECK(first["completed"][4] ==
        ordered_json{{"kind", "anti_diag"}, {"index", 0}});

  CHECK(parse_board(doc["start"].get<std::string>()) ==
        find_catalog_board("board1")->occupied);
  CHECK(parse_board(doc["final"].get<std::string>()).count() == 19);
}

TEST_CASE("trace documents round trip exactly") {
  const ClosureTrace original = board1_trace();
  CHECK(trace_from_json(trace_to_json(original)) == original);

  const ClosureTrace deep = closure(find_catalog_board("board2")->occupied);
  CHECK(trace_from_json(trace_to_json(deep)) == deep);

  std::mt19937_64 rng(31);
  for (int n = 1; n <= 8; ++n) {
    const BoardSize size(n);
    for (int i = 0; i < 10; ++i) {
      const ClosureTrace trace = closure(testutil::random_board(size, rng));
      CHECK(trace_from_json(trace_to_json(trace)) == trace);
    }
  }
}

TEST_CASE("serialization is deterministic") {
  const std::string once = trace_to_json(board1_trace()).dump(2);
  const std::string twice = trace_to_json(board1_trace()).dump(2);
  CHECK(once == twice);
}

TEST_CASE("report documents keep seed only for sampled runs") {
  const SearchReport exhaustive = max_depth_exhaustive(BoardSize(3));
  const ordered_json doc = report_to_json(exhaustive);
  CHECK(keys_of(doc) ==
        std::vector<std::string>{"n", "scope", "max_depth", "witness_count",
                                 "witnesses", "boards_examined", "elapsed_ms"});
  CHECK(doc["n"] == 3);
  CHECK(doc["scope"] == "all");
  CHECK(doc["max_depth"] == 4);
  CHECK(doc["witness_count"].get<std::uint64_t>() == exhaustive.witness_count);
  REQUIRE(doc["witnesses"].size() == exhaustive.witnesses.size());
  for (size_t i = 0; i < exhaustive.witnesses.size(); ++i) {
    const CellSet parsed =
        parse_board(doc["witnesses"][i].get<std::string>());
    CHECK(parsed == exhaustive.witnesses[i]);
    CHECK(depth(parsed) == 4);
  }

  const SearchReport sampled = max_depth_sampled(BoardSize(6), 500, 77);
  const ordered_json sampled_doc = report_to_json(sampled);
  CHECK(keys_of(sampled_doc) ==
        std::vector<std::string>{"n", "scope", "max_depth", "witness_count",
                                 "witnesses", "boards_examined", "elapsed_ms",
                                 "seed"});
  CHECK(sampled_doc["seed"] == 77);
  CHECK(sampled_doc["boards_examined"] == 500);
}

TEST_CASE("malformed trace documents are rejected") {
  const ordered_json good = trace_to_json(board1_trace());
  CHECK_NOTHROW(trace_from_json(good));

  ordered_json missing = good;
  missing.erase("depth");
  CHECK_THROWS(trace_from_json(missing));

  ordered_json wrong_n = good;
  wrong_n["n"] = 4;
  CHECK_THROWS_AS(trace_from_json(wrong_n), std::invalid_argument);

  ordered_json wrong_depth = good;
  wrong_depth["depth"] = 7;
  CHECK_THROWS_AS(trace_from_json(wrong_depth), std::invalid_argument);

  ordered_json ragged_firing = good;
  ragged_firing["steps"][0]["firing"].erase(0);
  CHECK_THROWS_AS(trace_from_json(ragged_firing), std::invalid_argument);

  ordered_json bad_kind = good;
  bad_kind["steps"][0]["completed"][0]["kind"] = "diag";
  CHECK_THROWS_AS(trace_from_json(bad_kind), std::invalid_argument);
}
