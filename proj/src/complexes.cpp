#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "topoprobe/complexes.hpp"
#include "topoprobe/parallel.hpp"

namespace topoprobe {

Simplex Simplex::vertex(NeuronId a, int filt) {
  Simplex s;
  s.vertices = {a, 0, 0};
  s.dim = 0;
  s.filt_index = static_cast<std::uint8_t>(filt);
  return s;
}

Simplex Simplex::edge(NeuronId a, NeuronId b, int filt) {
  if (a == b) throw std::invalid_argument("edge needs two distinct vertices");
  Simplex s;
  s.vertices = {std::min(a, b), std::max(a, b), 0};
  s.dim = 1;
  s.filt_index = static_cast<std::uint8_t>(filt);
  return s;
}

Simplex Simplex::triangle(NeuronId a, NeuronId b, NeuronId c, int filt) {
  std::array<NeuronId, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw std::invalid_argument("triangle needs three distinct vertices");
  Simplex s;
  s.vertices = v;
  s.dim = 2;
  s.filt_index = static_cast<std::uint8_t>(filt);
  return s;
}

std::string to_string(const Simplex& s) {
  std::string out;
  for (NeuronId v : s.verts()) {
    if (!out.empty()) out += '-';
    out += std::to_string(v);
  }
  return out;
}

namespace {

// Entry (a, b), a > b: filtration index of edge {b, a}, 0 when absent.
std::vector<std::uint8_t> edge_index_table(const RelevanceMatrix& extended) {
  const std::size_t n = extended.size();
  std::vector<std::uint8_t> table(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (auto idx = threshold_index(extended(a, b))) table[a * n + b] = static_cast<std::uint8_t>(*idx);
    }
  }
  return table;
}

// All simplices whose largest vertex is `apex`.
void simplices_with_apex(const std::vector<std::uint8_t>& table, std::size_t n, NeuronId apex, int max_dim,
                         std::vector<NeuronId>& lower, std::vector<Simplex>& out) {
  out.push_back(Simplex::vertex(apex, 1));
  if (max_dim < 1) return;

  lower.clear();
  const std::uint8_t* row = table.data() + static_cast<std::size_t>(apex) * n;
  for (NeuronId b = 0; b < apex; ++b) {
    if (row[b] != 0) {
      lower.push_back(b);
      out.push_back(Simplex::edge(b, apex, row[b]));
    }
  }
  if (max_dim < 2) return;

  for (std::size_t x = 0; x < lower.size(); ++x) {
    const NeuronId b = lower[x];
    const std::uint8_t* brow = table.data() + static_cast<std::size_t>(b) * n;
    for (std::size_t y = 0; y < x; ++y) {
      const NeuronId c = lower[y];
      if (brow[c] == 0) continue;
      const int filt = std::max({row[b], row[c], brow[c]});
      out.push_back(Simplex::triangle(c, b, apex, filt));
    }
  }
}

void check_input(const RelevanceMatrix& extended, int max_dim) {
  if (extended.kind() != RelevanceKind::extended) {
    throw std::invalid_argument("flag complex needs an extended relevance matrix");
  }
  if (max_dim < 0 || max_dim > 2) throw std::invalid_argument("only dimensions up to 2 are supported");
  if (extended.size() > UINT32_MAX) throw std::invalid_argument("too many vertices");
}

}  // namespace

FilteredComplex build_filtered_complex(const RelevanceMatrix& extended, int max_dim, int workers) {
  check_input(extended, max_dim);
  const std::size_t n = extended.size();
  const auto table = edge_index_table(extended);

  std::vector<std::vector<Simplex>> per_apex(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel num_threads(resolve_workers(workers))
  {
    std::vector<NeuronId> lower;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t a = 0; a < count; ++a) {
      simplices_with_apex(table, n, static_cast<NeuronId>(a), max_dim, lower, per_apex[static_cast<std::size_t>(a)]);
    }
  }

  FilteredComplex fc;
  fc.n_vertices = n;
  std::size_t total = 0;
  for (const auto& part : per_apex) total += part.size();
  fc.simplices.reserve(total);
  for (auto& part : per_apex) fc.simplices.insert(fc.simplices.end(), part.begin(), part.end());
  std::sort(fc.simplices.begin(), fc.simplices.end());
  return fc;
}

namespace serial {

FilteredComplex build_filtered_complex(const RelevanceMatrix& extended, int max_dim) {
  check_input(extended, max_dim);
  const std::size_t n = extended.size();
  const auto table = edge_index_table(extended);

  FilteredComplex fc;
  fc.n_vertices = n;
  std::vector<NeuronId> lower;
  for (std::size_t a = 0; a < n; ++a) {
    simplices_with_apex(table, n, static_cast<NeuronId>(a), max_dim, lower, fc.simplices);
  }
  std::sort(fc.simplices.begin(), fc.simplices.end());
  return fc;
}

}  // namespace serial

std::span<const Simplex> complex_at(const FilteredComplex& fc, int n) {
  if (n < 1 || n > kScheduleLength) throw DomainError("filtration index must be in 1..64");
  auto end = std::partition_point(fc.simplices.begin(), fc.simplices.end(),
                                  [n](const Simplex& s) { return s.filt_index <= n; });
  return {fc.simplices.data(), static_cast<std::size_t>(end - fc.simplices.begin())};
}

}  // namespace topoprobe
