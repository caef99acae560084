#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "topoprobe/persistence.hpp"

namespace topoprobe {

// Layout and styling for the SVG plots. Axes run 0..65 in filtration-index
// units: 1..64 for the schedule, 65 for the row/column of essential classes.
struct PlotSpec {
  int width = 520;
  int height = 520;
  int margin = 48;
  double axis_max = 65.0;
  std::array<std::string, 2> colors{"#d62728", "#2ca02c"};  // dim 0 red, dim 1 green
  std::vector<int> dims{0, 1};

  static constexpr int kEssentialCoordinate = 65;
};

// Multiplicity shade bucket: 0 for 1, 1 for 2-9, 2 for 10-99, 3 for >= 100.
int multiplicity_bucket(std::size_t count);

// Scatter of distinct (birth, death) coordinates with the diagonal; shade
// encodes multiplicity, essentials are diamonds on the death = 65 row.
std::string diagram_svg(const PersistenceDiagram& pd, const PlotSpec& spec = {});

// One horizontal bar per class, sorted by (dim, birth, death); essentials
// run to the right edge.
std::string barcode_svg(const PersistenceDiagram& pd, const PlotSpec& spec = {});

}  // namespace topoprobe
