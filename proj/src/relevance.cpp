#include "topoprobe/relevance.hpp"

#include <algorithm>

#include "topoprobe/parallel.hpp"

namespace topoprobe {

namespace {

// Column j of the direct relevance: normalized positive incoming weights.
void direct_column(const NetworkGraph& g, NeuronId j, RelevanceMatrix& out) {
  const std::size_t depth = g.depth_of(j);
  if (depth + 1 >= g.depth_count()) return;  // input layer: nothing flows in
  const NeuronId first = g.first_id(depth + 1);
  const std::size_t count = g.layer_size(depth + 1);

  double total = 0.0;
  for (std::size_t k = 0; k < count; ++k) total += std::max(0.0, g.weight(first + k, j));
  if (total <= 0.0) return;
  for (std::size_t k = 0; k < count; ++k) {
    const double w = g.weight(first + k, j);
    if (w > 0.0) out.at(first + k, j) = w / total;
  }
}

// Row i of the extended relevance. Depths are visited from the source
// toward the output so every predecessor value is final when read.
void extended_row(const RelevanceMatrix& direct, const NetworkGraph& g, NeuronId i, RelevanceMatrix& out) {
  const std::size_t source_depth = g.depth_of(i);
  double* row = out.row(i);
  for (std::size_t d = source_depth; d-- > 0;) {
    const NeuronId first = g.first_id(d);
    const NeuronId prev_first = g.first_id(d + 1);
    const std::size_t prev_count = g.layer_size(d + 1);
    for (std::size_t q = 0; q < g.layer_size(d); ++q) {
      const NeuronId j = first + static_cast<NeuronId>(q);
      double best = 0.0;
      for (std::size_t k = 0; k < prev_count; ++k) {
        const NeuronId mid = prev_first + static_cast<NeuronId>(k);
        const double reach = row[mid];
        if (reach == 0.0) continue;
        best = std::max(best, reach * direct(mid, j));
      }
      row[j] = best;
    }
  }
}

void require_direct(const RelevanceMatrix& direct, const NetworkGraph& g) {
  if (direct.kind() != RelevanceKind::direct) throw std::invalid_argument("expected a direct relevance matrix");
  if (direct.size() != g.size()) throw std::invalid_argument("relevance matrix does not match graph size");
}

}  // namespace

RelevanceMatrix direct_relevance(const NetworkGraph& g, int workers) {
  RelevanceMatrix out(g.size(), RelevanceKind::direct);
  const auto n = static_cast<std::int64_t>(g.size());
  // Each destination column is written by exactly one iteration.
#pragma omp parallel for num_threads(resolve_workers(workers)) schedule(static)
  for (std::int64_t j = 0; j < n; ++j) direct_column(g, static_cast<NeuronId>(j), out);
  return out;
}

RelevanceMatrix extended_relevance(const RelevanceMatrix& direct, const NetworkGraph& g, int workers) {
  require_direct(direct, g);
  RelevanceMatrix out(g.size(), RelevanceKind::extended);
  const auto n = static_cast<std::int64_t>(g.size());
  // Rows are independent; per-row arithmetic is identical to the serial path.
#pragma omp parallel for num_threads(resolve_workers(workers)) schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) extended_row(direct, g, static_cast<NeuronId>(i), out);
  return out;
}

namespace serial {

RelevanceMatrix direct_relevance(const NetworkGraph& g) {
  RelevanceMatrix out(g.size(), RelevanceKind::direct);
  for (std::size_t j = 0; j < g.size(); ++j) direct_column(g, static_cast<NeuronId>(j), out);
  return out;
}

RelevanceMatrix extended_relevance(const RelevanceMatrix& direct, const NetworkGraph& g) {
  require_direct(direct, g);
  RelevanceMatrix out(g.size(), RelevanceKind::extended);
  for (std::size_t i = 0; i < g.size(); ++i) extended_row(direct, g, static_cast<NeuronId>(i), out);
  return out;
}

}  // namespace serial

}  // namespace topoprobe
