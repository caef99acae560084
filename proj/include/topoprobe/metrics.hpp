#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "topoprobe/persistence.hpp"

namespace topoprobe {

// Band offsets in filtration-index units.
inline constexpr int kNearDiagonalOffset = 5;  // death <= birth + 5
inline constexpr int kBeltUpperOffset = 20;    // belt: birth + 5 < death < birth + 20

struct DiagramMetrics {
  int dim = 0;
  long total_points = 0;  // finite pairs, with multiplicity
  long near_diagonal = 0;
  long belt = 0;
  long above_belt = 0;
  long essential = 0;
  long c1 = 0;
  long c2 = 0;
  long c1_and_c2 = 0;
  double hull_area = 0.0;

  bool operator==(const DiagramMetrics&) const = default;
};

enum class Band { near_diagonal, belt, above_belt };

Band classify_band(int birth, int death);

// Counts over the finite pairs of `dim`; essentials counted separately.
DiagramMetrics diagram_stats(const PersistenceDiagram& pd, int dim);

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairFlags {
  bool c1 = false;  // representative touches an unused output neuron
  bool c2 = false;  // death <= birth + 5
};

struct Classification {
  std::vector<PairFlags> flags;  // one per finite dimension-1 pair, in diagram order
  long total = 0;
  long c1 = 0;
  long c2 = 0;
  long c1_and_c2 = 0;
};

// Flags every finite dimension-1 pair. Throws ClassificationError when a
// pair has no representative.
Classification classify_pairs(const PersistenceDiagram& pd, std::span<const NeuronId> unused);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  auto operator<=>(const Point2&) const = default;
};

// Area of the convex hull (Andrew's monotone chain + shoelace). Duplicate
// points are collapsed; fewer than three non-collinear points give 0.
double convex_hull_area(std::vector<Point2> points);

// Hull of the finite (birth, death) points of `dim`.
double convex_hull_area(const PersistenceDiagram& pd, int dim);

// Full metrics record: counts, hull area, and for dim 1 the c1/c2
// classification. Dimension-0 pairs carry no cycle, so c1 is 0 there.
DiagramMetrics compute_metrics(const PersistenceDiagram& pd, int dim, std::span<const NeuronId> unused);

std::string metrics_json(const DiagramMetrics& m);

}  // namespace topoprobe
