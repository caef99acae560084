#include <doctest.h>

#include <random>

#include "support/test_support.hpp"
#include "topoprobe/complexes.hpp"

using namespace topoprobe;
using testing::cells_of;

namespace {

RelevanceMatrix three_vertex(double r10, double r20, double r21) {
  RelevanceMatrix m(3, RelevanceKind::extended);
  m.at(1, 0) = r10;
  m.at(2, 0) = r20;
  m.at(2, 1) = r21;
  return m;
}

using Cells = std::set<std::vector<NeuronId>>;

}  // namespace

TEST_CASE("schedule anchors") {
  const auto& s = threshold_schedule();
  CHECK(s.threshold(1) == 1.0);
  CHECK(s.threshold(2) == 0.9);
  CHECK(s.threshold(6) == 0.5);
  CHECK(s.threshold(9) == 0.2);
  CHECK(s.threshold(10) == 0.1);
  CHECK(s.threshold(11) == 0.09);
  CHECK(s.threshold(19) == 0.01);
  CHECK(s.threshold(64) == 1e-7);
  for (int n = 1; n < kScheduleLength; ++n) CHECK(s.threshold(n) > s.threshold(n + 1));
}

TEST_CASE("schedule matches its closed form") {
  for (int n = 1; n <= kScheduleLength; ++n) {
    const int m = (n - 1) / 9, l = (n - 1) % 9;
    const double expected = (1.0 - 0.1 * l) * std::pow(10.0, -m);
    CHECK(threshold_schedule().threshold(n) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("threshold_index inverts the schedule") {
  CHECK(threshold_index(1.0) == 1);
  CHECK(threshold_index(0.95) == 2);
  CHECK(threshold_index(0.9) == 2);
  CHECK(threshold_index(0.5) == 6);
  CHECK(threshold_index(0.75) == 4);
  CHECK(threshold_index(1e-7) == 64);
  CHECK_FALSE(threshold_index(5e-8).has_value());
  CHECK_FALSE(threshold_index(0.0).has_value());
  CHECK_THROWS_AS(threshold_index(-0.1), DomainError);
  CHECK_THROWS_AS(threshold_index(1.5), DomainError);
  CHECK_THROWS_AS(threshold_index(std::nan("")), DomainError);

  for (int n = 1; n <= kScheduleLength; ++n) {
    const double t = threshold_schedule().threshold(n);
    CHECK(threshold_index(t) == n);
    // an ulp of rounding below a threshold still meets it
    CHECK(threshold_index(std::nextafter(t, 0.0)) == n);
    // a scan agrees with the binary search clearly below each threshold
    const double below = t * (1.0 - 1e-9);
    std::optional<int> scan;
    for (int k = 1; k <= kScheduleLength && !scan; ++k) {
      if (threshold_schedule().threshold(k) <= below) scan = k;
    }
    CHECK(threshold_index(below) == scan);
  }
  CHECK(threshold_index(3.0 / 15.0) == 9);
  CHECK(threshold_index(0.3 * 7.1 / (1.5 * 7.1)) == 9);
}

TEST_CASE("flag complex of fully relevant triangle") {
  const auto fc = build_filtered_complex(three_vertex(1.0, 1.0, 1.0));
  REQUIRE(fc.simplices.size() == 7);
  for (const auto& s : fc.simplices) CHECK(s.filt_index == 1);
  CHECK(fc.simplices.back() == Simplex::triangle(0, 1, 2, 1));
  CHECK(fc.n_vertices == 3);
}

TEST_CASE("triangle enters with its latest edge") {
  const auto fc = build_filtered_complex(three_vertex(1.0, 0.5, 1.0));
  const std::vector<Simplex> expected{Simplex::vertex(0, 1),  Simplex::vertex(1, 1),  Simplex::vertex(2, 1),
                                      Simplex::edge(0, 1, 1), Simplex::edge(1, 2, 1), Simplex::edge(0, 2, 6),
                                      Simplex::triangle(0, 1, 2, 6)};
  CHECK(fc.simplices == expected);

  CHECK(cells_of(complex_at(fc, 5)) == Cells{{0}, {1}, {2}, {0, 1}, {1, 2}});
  CHECK(cells_of(complex_at(fc, 6)).count({0, 1, 2}) == 1);
  CHECK(complex_at(fc, 1).size() == 5);
  CHECK_THROWS_AS(complex_at(fc, 0), DomainError);
  CHECK_THROWS_AS(complex_at(fc, 65), DomainError);
}

TEST_CASE("relevances below the last threshold give a vertex-only complex") {
  const auto fc = build_filtered_complex(three_vertex(5e-8, 1e-9, 0.0));
  CHECK(fc.simplices.size() == 3);
  for (const auto& s : fc.simplices) CHECK(s.dim == 0);
}

TEST_CASE("flag construction rejects direct relevance and unsupported dimensions") {
  CHECK_THROWS_AS(build_filtered_complex(RelevanceMatrix(3, RelevanceKind::direct)), std::invalid_argument);
  CHECK_THROWS_AS(build_filtered_complex(three_vertex(1, 1, 1), 3), std::invalid_argument);
}

TEST_CASE("property: the filtration matches the per-threshold rule and is a nested complex") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const NetworkGraph g(testing::random_model(rng));
    const auto ext = extended_relevance(direct_relevance(g), g);
    const auto fc = build_filtered_complex(ext);
    REQUIRE(std::is_sorted(fc.simplices.begin(), fc.simplices.end()));

    Cells previous;
    for (int n = 1; n <= kScheduleLength; ++n) {
      const auto stage = cells_of(complex_at(fc, n));
      REQUIRE(stage == testing::threshold_complex_oracle(ext, threshold_schedule().threshold(n)));
      CHECK(std::includes(stage.begin(), stage.end(), previous.begin(), previous.end()));
      previous = stage;
    }

    // faces enter no later than cofaces; triangles take their latest edge
    std::map<std::vector<NeuronId>, int> index;
    for (const auto& s : fc.simplices) index[{s.verts().begin(), s.verts().end()}] = s.filt_index;
    for (const auto& s : fc.simplices) {
      if (s.dim == 0) CHECK(s.filt_index == 1);
      if (s.dim == 1) {
        CHECK(index.at({s.vertices[0]}) <= s.filt_index);
        CHECK(index.at({s.vertices[1]}) <= s.filt_index);
      }
      if (s.dim == 2) {
        const auto& v = s.vertices;
        const int e01 = index.at({v[0], v[1]}), e02 = index.at({v[0], v[2]}), e12 = index.at({v[1], v[2]});
        CHECK(s.filt_index == std::max({e01, e02, e12}));
      }
    }
  }
}

TEST_CASE("parallel construction is bit-identical to the serial reference") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const NetworkGraph g(testing::random_model(rng, 60));
    const auto ext = extended_relevance(direct_relevance(g), g);
    const auto reference = serial::build_filtered_complex(ext);
    for (int workers : {1, 2, 3, 8}) CHECK(build_filtered_complex(ext, 2, workers) == reference);
  }
}

TEST_CASE("path-walk enumerator on a three-vertex chain") {
  RelevanceMatrix m(3, RelevanceKind::direct);
  m.at(2, 1) = 0.5;
  m.at(1, 0) = 0.5;

  const auto at_quarter = enumerate_simplices_from_vertex(m, 2, 0.25);
  const Cells quarter(at_quarter.begin(), at_quarter.end());
  CHECK(quarter == Cells{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});

  const auto at_point3 = enumerate_simplices_from_vertex(m, 2, 0.3);
  const Cells point3(at_point3.begin(), at_point3.end());
  CHECK(point3 == Cells{{1}, {2}, {1, 2}});

  RelevanceMatrix isolated(3, RelevanceKind::direct);
  CHECK(enumerate_simplices_from_vertex(isolated, 1, 0.5) == std::vector<std::vector<NeuronId>>{{1}});
  CHECK(enumerate_simplices_from_vertex(m, 2, 0.25, 2).size() == 6);
}

TEST_CASE("property: path-walk filtration equals the per-threshold enumerator") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const NetworkGraph g(testing::random_model(rng, 12));
    const auto direct = direct_relevance(g);
    const auto fc = build_algorithm1_complex(direct);
    for (int n = 1; n <= kScheduleLength; n += 3) {
      Cells expected;
      for (NeuronId s = 0; s < g.size(); ++s) {
        for (auto& c : enumerate_simplices_from_vertex(direct, s, threshold_schedule().threshold(n))) {
          expected.insert(c);
        }
      }
      REQUIRE(cells_of(complex_at(fc, n)) == expected);
    }
  }
}

TEST_CASE("property: path-walk output on extended relevance satisfies the pairwise rule") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 60; ++trial) {
    const NetworkGraph g(testing::random_model(rng));
    const auto ext = extended_relevance(direct_relevance(g), g);
    for (int n : {1, 6, 10, 19, 28, 46, 64}) {
      const double t = threshold_schedule().threshold(n);
      const auto oracle = testing::threshold_complex_oracle(ext, t);
      for (NeuronId s = 0; s < g.size(); ++s) {
        for (const auto& c : enumerate_simplices_from_vertex(ext, s, t)) CHECK(oracle.count(c) == 1);
      }
    }
  }
}

TEST_CASE("path-walk filtration is a complex closed under faces") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 40; ++trial) {
    const NetworkGraph g(testing::random_model(rng));
    const auto fc = build_algorithm1_complex(direct_relevance(g));
    std::map<std::vector<NeuronId>, int> index;
    for (const auto& s : fc.simplices) index[{s.verts().begin(), s.verts().end()}] = s.filt_index;
    for (const auto& s : fc.simplices) {
      const auto v = s.verts();
      for (std::size_t drop = 0; s.dim > 0 && drop < v.size(); ++drop) {
        std::vector<NeuronId> face;
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (k != drop) face.push_back(v[k]);
        }
        REQUIRE(index.count(face) == 1);
        CHECK(index[face] <= s.filt_index);
      }
    }
  }
}

TEST_CASE("path-walk filtration refuses large graphs") {
  CHECK_THROWS_AS(build_algorithm1_complex(RelevanceMatrix(kAlgorithm1MaxNeurons + 1, RelevanceKind::direct)), SizeError);
}

TEST_CASE("simplex CSV round-trips and leaves trailing fields empty") {
  const auto fc = build_filtered_complex(three_vertex(1.0, 0.5, 1.0));
  const auto csv = simplices_csv(fc);
  CHECK(csv ==
        "filt_index,dim,v0,v1,v2\n"
        "1,0,0,,\n1,0,1,,\n1,0,2,,\n1,1,0,1,\n1,1,1,2,\n6,1,0,2,\n6,2,0,1,2\n");
  CHECK(parse_simplices_csv(csv) == fc);
  CHECK_THROWS_AS(parse_simplices_csv("filt_index,dim,v0,v1,v2\n6,1,0,2,\n1,0,0,,\n"), ParseError);
}
