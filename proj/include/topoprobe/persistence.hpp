#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topoprobe/complexes.hpp"

namespace topoprobe {

// Z/2 boundary matrix in filtration order. Column k lists, ascending, the
// positions of the codimension-1 faces of simplices[k].
struct BoundaryMatrix {
  std::vector<Simplex> simplices;
  std::vector<std::vector<std::uint32_t>> columns;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BoundaryMatrix boundary_matrix(const FilteredComplex& fc);

struct PersistencePair {
  int dim = 0;
  int birth = 1;
  std::optional<int> death;  // nullopt for essential classes
  Simplex creator;
  std::optional<Simplex> destroyer;
  // Dimension-1 classes only: edges whose Z/2 sum is a cycle born at `birth`.
  std::optional<std::vector<Simplex>> representative;

  bool essential() const { return !death.has_value(); }
  bool operator==(const PersistencePair&) const = default;
};

struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;             // finite with birth < death, plus essentials
  std::vector<PersistencePair> zero_persistence;  // finite pairs with birth == death
  // Birth indices of triangles that reduce to zero (H2 of the truncated
  // skeleton). Never reported as classes.
  std::vector<int> dim2_creator_births;
  std::size_t n_simplices = 0;

  bool operator==(const PersistenceDiagram&) const = default;
};

// Column reduction with clearing: triangles are reduced first, the edges
// they pair with are cleared, then the remaining edges are reduced.
// Finite dimension-1 pairs take the reduced destroyer column as their
// representative; essential ones take the accumulated chain of additions.
PersistenceDiagram reduce(const BoundaryMatrix& bm);

inline PersistenceDiagram compute_persistence(const FilteredComplex& fc) { return reduce(boundary_matrix(fc)); }

// beta_p(n) = #{classes with birth <= n < death}, n = 1..64 (index n-1).
std::array<int, kScheduleLength> betti_curve(const PersistenceDiagram& pd, int p);

inline constexpr std::size_t kBruteForceMaxSimplices = 5000;

// beta_p of complex_at(fc, n) via ranks of boundary maps over Z/2.
// Throws SizeError when the stage has more than kBruteForceMaxSimplices.
int betti_brute_force(const FilteredComplex& fc, int n, int p);

// Pairs CSV: `dim,birth,death,essential,creator,destroyer,representative`,
// sorted by (dim, birth, death) with essentials last in each dimension.
std::string pairs_csv(const PersistenceDiagram& pd, bool include_zero_persistence = false);
PersistenceDiagram parse_pairs_csv(std::string_view text);

}  // namespace topoprobe
