#include <map>

#include "topoprobe/persistence.hpp"

namespace topoprobe {

namespace {

// Rank over Z/2 of a dense 0/1 matrix given as packed rows.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t n_cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_cols && rank < rows.size(); ++col) {
    const std::size_t word = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][word] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][word] & bit)) {
        for (std::size_t w = word; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

// Rank of the boundary map from dimension `dim` cells to dimension dim-1.
std::size_t boundary_rank(const std::vector<Simplex>& cells, const std::vector<Simplex>& faces) {
  if (cells.empty() || faces.empty()) return 0;
  std::map<std::vector<NeuronId>, std::size_t> face_index;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    face_index.emplace(std::vector<NeuronId>(faces[k].verts().begin(), faces[k].verts().end()), k);
  }
  const std::size_t words = (faces.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(cells.size());
  for (const auto& cell : cells) {
    std::vector<std::uint64_t> row(words, 0);
    const auto v = cell.verts();
    for (std::size_t drop = 0; drop < v.size(); ++drop) {
      std::vector<NeuronId> face;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != drop) face.push_back(v[k]);
      }
      auto it = face_index.find(face);
      if (it == face_index.end()) throw ConsistencyError("stage is not closed under faces");
      row[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
    }
    rows.push_back(std::move(row));
  }
  return gf2_rank(std::move(rows), faces.size());
}

}  // namespace

int betti_brute_force(const FilteredComplex& fc, int n, int p) {
  if (p != 0 && p != 1) throw std::invalid_argument("betti_brute_force supports dimensions 0 and 1");
  const auto stage = complex_at(fc, n);
  if (stage.size() > kBruteForceMaxSimplices) {
    throw SizeError("stage has " + std::to_string(stage.size()) + " simplices, limit is " +
                    std::to_string(kBruteForceMaxSimplices));
  }
  std::array<std::vector<Simplex>, 3> by_dim;
  for (const auto& s : stage) by_dim[s.dim].push_back(s);

  const std::size_t cells = by_dim[static_cast<std::size_t>(p)].size();
  const std::size_t rank_down = p == 0 ? 0 : boundary_rank(by_dim[1], by_dim[0]);
  const std::size_t rank_up = boundary_rank(by_dim[static_cast<std::size_t>(p + 1)], by_dim[static_cast<std::size_t>(p)]);
  return static_cast<int>(cells - rank_down - rank_up);
}

}  // namespace topoprobe
