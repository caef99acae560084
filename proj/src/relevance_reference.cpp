#include <algorithm>
#include <vector>

#include "topoprobe/relevance.hpp"

namespace topoprobe {

namespace {

struct PathWalker {
  const RelevanceMatrix& direct;
  const std::vector<std::vector<NeuronId>>& successors;
  RelevanceMatrix& out;
  NeuronId source;

  void walk(NeuronId at, double product) {
    for (NeuronId next : successors[at]) {
      const double p = product * direct(at, next);
      out.at(source, next) = std::max(out(source, next), p);
      walk(next, p);
    }
  }
};

}  // namespace

RelevanceMatrix brute_force_extended_relevance(const RelevanceMatrix& direct, const NetworkGraph& g) {
  if (g.size() > kBruteForceMaxNeurons) {
    throw SizeError("brute-force path enumeration is limited to " + std::to_string(kBruteForceMaxNeurons) +
                    " neurons, graph has " + std::to_string(g.size()));
  }
  const std::size_t n = g.size();
  std::vector<std::vector<NeuronId>> successors(n);
  for (NeuronId i = 0; i < n; ++i) {
    for (NeuronId j = 0; j < n; ++j) {
      if (i != j && g.weight(i, j) != 0.0) successors[i].push_back(j);
    }
  }

  RelevanceMatrix out(n, RelevanceKind::extended);
  for (NeuronId i = 0; i < n; ++i) PathWalker{direct, successors, out, i}.walk(i, 1.0);
  return out;
}

}  // namespace topoprobe
