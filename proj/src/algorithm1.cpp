#include <algorithm>
#include <map>
#include <set>

#include "topoprobe/complexes.hpp"

namespace topoprobe {

namespace {

using VertexSet = std::vector<NeuronId>;

// Every nonempty subset of `path` with at most `max_vertices` members.
void add_combinations(const VertexSet& path, std::size_t max_vertices, std::set<VertexSet>& out) {
  VertexSet sorted = path;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();
  VertexSet pick;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) out.insert(pick);
    if (pick.size() == max_vertices) return;
    for (std::size_t i = from; i < k; ++i) {
      pick.push_back(sorted[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
}

std::set<VertexSet> get_simplex(const RelevanceMatrix& m, const VertexSet& s, double t, std::size_t max_vertices) {
  double relevance = 1.0;
  NeuronId origin = s.front();
  for (NeuronId dest : s) {
    relevance *= m(origin, dest);
    origin = dest;
  }

  std::set<VertexSet> result;
  if (meets_threshold(relevance, t)) {
    add_combinations(s, max_vertices, result);
    const NeuronId last = s.back();
    for (NeuronId i = 0; i < m.size(); ++i) {
      // the membership test only matters for cyclic inputs; on a DAG the
      // walk can never revisit a vertex
      if (m(last, i) > 0.0 && i != last && std::find(s.begin(), s.end(), i) == s.end()) {
        VertexSet ss = s;
        ss.push_back(i);
        for (const auto& e : get_simplex(m, ss, t, max_vertices)) add_combinations(e, max_vertices, result);
      }
    }
  }
  return result;
}

using CellKey = std::pair<std::uint8_t, std::array<NeuronId, 3>>;

struct EarliestIndex {
  const RelevanceMatrix& m;
  std::map<CellKey, int> best;
  std::vector<NeuronId> path;

  void record(std::array<NeuronId, 3> v, std::uint8_t dim, int idx) {
    std::sort(v.begin(), v.begin() + dim + 1);
    auto [it, inserted] = best.try_emplace(CellKey{dim, v}, idx);
    if (!inserted) it->second = std::min(it->second, idx);
  }

  // A walked path qualifies at threshold t iff its product is >= t, and the
  // product never grows along the walk, so one traversal gives the earliest
  // index for every combination. Combinations without the last vertex were
  // already recorded on a prefix with an index no larger.
  void walk(double product) {
    if (product < 0.0 || product > 1.0) throw DomainError("path product outside [0, 1]");
    const auto idx = threshold_index(product);
    if (!idx) return;
    const NeuronId last = path.back();
    record({last, 0, 0}, 0, *idx);
    for (std::size_t x = 0; x + 1 < path.size(); ++x) {
      record({path[x], last, 0}, 1, *idx);
      for (std::size_t y = x + 1; y + 1 < path.size(); ++y) record({path[x], path[y], last}, 2, *idx);
    }
    for (NeuronId i = 0; i < m.size(); ++i) {
      if (m(last, i) > 0.0 && i != last && std::find(path.begin(), path.end(), i) == path.end()) {
        path.push_back(i);
        walk(product * m(last, i));
        path.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<std::vector<NeuronId>> enumerate_simplices_from_vertex(const RelevanceMatrix& m, NeuronId start,
                                                                   double threshold, std::size_t max_vertices) {
  if (start >= m.size()) throw std::out_of_range("start vertex out of range");
  if (max_vertices == 0) return {};
  const auto found = get_simplex(m, {start}, threshold, max_vertices);
  return {found.begin(), found.end()};
}

FilteredComplex build_algorithm1_complex(const RelevanceMatrix& m) {
  if (m.size() > kAlgorithm1MaxNeurons) {
    throw SizeError("path-walk enumeration is limited to " + std::to_string(kAlgorithm1MaxNeurons) +
                    " neurons, graph has " + std::to_string(m.size()));
  }
  EarliestIndex state{m, {}, {}};
  for (NeuronId s = 0; s < m.size(); ++s) {
    state.path = {s};
    state.walk(m(s, s));
  }

  FilteredComplex fc;
  fc.n_vertices = m.size();
  for (const auto& [key, idx] : state.best) {
    const auto& [dim, v] = key;
    Simplex s;
    s.vertices = v;
    s.dim = dim;
    s.filt_index = static_cast<std::uint8_t>(idx);
    fc.simplices.push_back(s);
  }
  std::sort(fc.simplices.begin(), fc.simplices.end());
  return fc;
}

}  // namespace topoprobe
