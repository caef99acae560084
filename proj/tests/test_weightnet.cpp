#include <doctest.h>

#include <random>
#include <set>

#include "support/test_support.hpp"
#include "topoprobe/weightnet.hpp"

using namespace topoprobe;

namespace {

const char* kSmallest = R"({"format_version":1,"name":"tiny","output_size":1,"used_outputs":[0],
  "layers":[{"rows":2,"cols":2,"weights":[[0.5,-1.0],[2.0,0.25]]},
            {"rows":2,"cols":1,"weights":[[1.0],[3.0]]}]})";

ParseError::Kind parse_failure(const std::string& text) {
  try {
    parse_weights(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseError::Kind::syntax;
}

NetworkModel zero_model(std::vector<std::size_t> sizes) {
  NetworkModel m;
  m.name = "zeros";
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    m.layers.push_back({sizes[k], sizes[k + 1], std::vector<double>(sizes[k] * sizes[k + 1], 0.0)});
  }
  m.output_size = sizes.back();
  return m;
}

}  // namespace

TEST_CASE("smallest chained network parses") {
  const auto m = parse_weights(kSmallest);
  CHECK(m.layers.size() == 2);
  CHECK(m.output_size == 1);
  CHECK(m.used_outputs == std::vector<std::size_t>{0});
  CHECK(m.layers[0].at(1, 0) == 2.0);
  CHECK(m.layers[0].at(0, 1) == -1.0);
}

TEST_CASE("parse errors are distinguished") {
  CHECK(parse_failure("{not json") == ParseError::Kind::syntax);
  CHECK(parse_failure(R"({"format_version":1,"name":"x","output_size":1,"used_outputs":[],
     "layers":[{"rows":2,"cols":2,"weights":[[1,1],[1,1]]},{"rows":3,"cols":1,"weights":[[1],[1],[1]]}]})") ==
        ParseError::Kind::shape_mismatch);
  CHECK(parse_failure(R"({"format_version":1,"name":"x","used_outputs":[],"layers":[]})") ==
        ParseError::Kind::missing_key);
  CHECK(parse_failure(R"({"format_version":1,"name":"x","output_size":1,"used_outputs":[],
     "layers":[{"rows":1,"cols":1,"weights":[[1e999]]}]})") == ParseError::Kind::non_finite);
  CHECK(parse_failure(R"({"format_version":1,"name":"x","output_size":1,"used_outputs":[3],
     "layers":[{"rows":1,"cols":1,"weights":[[1]]}]})") == ParseError::Kind::bad_value);
  CHECK(parse_failure(R"({"format_version":1,"name":"x","output_size":2,"used_outputs":[],
     "layers":[{"rows":1,"cols":1,"weights":[[1]]}]})") == ParseError::Kind::shape_mismatch);
  CHECK(parse_failure(R"({"format_version":1,"name":"x","output_size":1,"used_outputs":[],
     "layers":[{"rows":1,"cols":2,"weights":[[1]]}]})") == ParseError::Kind::shape_mismatch);
}

TEST_CASE("error message names the offending entry") {
  try {
    parse_weights(R"({"format_version":1,"name":"x","output_size":1,"used_outputs":[],
       "layers":[{"rows":2,"cols":1,"weights":[[1],["a"]]}]})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("layer 0 entry [1][0]") != std::string::npos);
  }
}

TEST_CASE("unknown top-level keys are ignored") {
  const auto m = parse_weights(R"({"format_version":1,"name":"x","output_size":1,"used_outputs":[0],
     "trained_on":"digits","layers":[{"rows":1,"cols":1,"weights":[[2]]}]})");
  CHECK(m.layers[0].weights == std::vector<double>{2.0});
}

TEST_CASE("global numbering runs from the output layer toward the input") {
  SUBCASE("2 inputs, 2 hidden, 1 output") {
    const NetworkGraph g(parse_weights(kSmallest));
    REQUIRE(g.size() == 5);
    CHECK(g.depth_of(0) == 0);
    CHECK(g.depth_of(1) == 1);
    CHECK(g.depth_of(2) == 1);
    CHECK(g.depth_of(3) == 2);
    CHECK(g.depth_of(4) == 2);
    // input 1 -> hidden 0 carries weight 2.0 in the file
    CHECK(g.weight(4, 1) == 2.0);
    CHECK(g.weight(2, 0) == 3.0);
    CHECK(g.weight(3, 0) == 0.0);  // not adjacent layers
    CHECK(g.weight(0, 1) == 0.0);  // backward
  }
  SUBCASE("single layer 2 -> 3") {
    const NetworkGraph g(zero_model({2, 3}));
    CHECK(g.size() == 5);
    for (NeuronId v : {0u, 1u, 2u}) CHECK(g.depth_of(v) == 0);
    for (NeuronId v : {3u, 4u}) CHECK(g.depth_of(v) == 1);
  }
  SUBCASE("784-300-100-10") {
    const NetworkGraph g(zero_model({784, 300, 100, 10}));
    CHECK(g.size() == 1194);
    CHECK(g.first_id(0) == 0);
    CHECK(g.first_id(1) == 10);
    CHECK(g.first_id(2) == 110);
    CHECK(g.first_id(3) == 410);
    CHECK(g.depth_of(9) == 0);
    CHECK(g.depth_of(109) == 1);
    CHECK(g.depth_of(409) == 2);
    CHECK(g.depth_of(1193) == 3);
  }
}

TEST_CASE("unused outputs are the complement of used_outputs") {
  auto m = zero_model({3, 4});
  m.used_outputs = {0, 2};
  const NetworkGraph g(m);
  CHECK(std::vector<NeuronId>(g.unused_output_ids().begin(), g.unused_output_ids().end()) ==
        std::vector<NeuronId>{1, 3});
  CHECK(g.output_ids().size() == 4);
}

TEST_CASE("property: edges point from higher to lower ids and numbering is a bijection") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const NetworkGraph g(testing::random_model(rng, 30));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (NeuronId i = 0; i < g.size(); ++i) {
      const auto loc = g.locate(i);
      CHECK(g.id_of(loc.first, loc.second) == i);
      seen.insert(loc);
      for (NeuronId j = 0; j < g.size(); ++j) {
        if (g.weight(i, j) != 0.0) {
          CHECK(i > j);
          CHECK(g.depth_of(i) == g.depth_of(j) + 1);
        }
      }
    }
    CHECK(seen.size() == g.size());
  }
}

TEST_CASE("property: parse(serialize(model)) == model") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = testing::random_model(rng, 20);
    m.name = "trial " + std::to_string(trial);
    CHECK(parse_weights(serialize_weights(m)) == m);
  }
}
