#include <algorithm>
#include <map>

#include "topoprobe/persistence.hpp"

namespace topoprobe {

namespace {

using CellKey = std::pair<std::uint8_t, std::array<NeuronId, 3>>;

}  // namespace

BoundaryMatrix boundary_matrix(const FilteredComplex& fc) {
  BoundaryMatrix bm;
  bm.simplices = fc.simplices;
  bm.columns.resize(fc.simplices.size());

  std::map<CellKey, std::uint32_t> position;
  for (std::uint32_t k = 0; k < fc.simplices.size(); ++k) {
    const Simplex& s = fc.simplices[k];
    auto lookup = [&](std::array<NeuronId, 3> face, std::uint8_t dim) {
      auto it = position.find({dim, face});
      if (it == position.end()) {
        throw ConsistencyError("face of " + to_string(s) + " missing or out of order");
      }
      return it->second;
    };

    auto& col = bm.columns[k];
    const auto& v = s.vertices;
    if (s.dim == 1) {
      col = {lookup({v[0], 0, 0}, 0), lookup({v[1], 0, 0}, 0)};
    } else if (s.dim == 2) {
      col = {lookup({v[0], v[1], 0}, 1), lookup({v[0], v[2], 0}, 1), lookup({v[1], v[2], 0}, 1)};
    } else if (s.dim != 0) {
      throw ConsistencyError("simplex of unsupported dimension");
    }
    std::sort(col.begin(), col.end());
    if (!position.emplace(CellKey{s.dim, v}, k).second) {
      throw ConsistencyError("duplicate simplex " + to_string(s));
    }
  }
  return bm;
}

}  // namespace topoprobe
