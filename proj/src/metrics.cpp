#include "topoprobe/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace topoprobe {

Band classify_band(int birth, int death) {
  if (death <= birth + kNearDiagonalOffset) return Band::near_diagonal;
  if (death < birth + kBeltUpperOffset) return Band::belt;
  return Band::above_belt;
}

DiagramMetrics diagram_stats(const PersistenceDiagram& pd, int dim) {
  DiagramMetrics m;
  m.dim = dim;
  for (const auto& p : pd.pairs) {
    if (p.dim != dim) continue;
    if (p.essential()) {
      ++m.essential;
      continue;
    }
    ++m.total_points;
    switch (classify_band(p.birth, *p.death)) {
      case Band::near_diagonal: ++m.near_diagonal; break;
      case Band::belt: ++m.belt; break;
      case Band::above_belt: ++m.above_belt; break;
    }
  }
  m.c2 = m.near_diagonal;
  return m;
}

Classification classify_pairs(const PersistenceDiagram& pd, std::span<const NeuronId> unused) {
  std::vector<NeuronId> lookup(unused.begin(), unused.end());
  std::sort(lookup.begin(), lookup.end());

  Classification out;
  for (const auto& p : pd.pairs) {
    if (p.dim != 1 || p.essential()) continue;
    if (!p.representative) {
      throw ClassificationError("dimension-1 pair born at " + std::to_string(p.birth) + " has no representative");
    }
    PairFlags f;
    for (const auto& s : *p.representative) {
      for (NeuronId v : s.verts()) {
        if (std::binary_search(lookup.begin(), lookup.end(), v)) f.c1 = true;
      }
    }
    f.c2 = classify_band(p.birth, *p.death) == Band::near_diagonal;
    ++out.total;
    out.c1 += f.c1;
    out.c2 += f.c2;
    out.c1_and_c2 += f.c1 && f.c2;
    out.flags.push_back(f);
  }
  return out;
}

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

double convex_hull_area(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n < 3) return 0.0;

  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) return 0.0;

  double twice = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice) / 2.0;
}

double convex_hull_area(const PersistenceDiagram& pd, int dim) {
  std::vector<Point2> points;
  for (const auto& p : pd.pairs) {
    if (p.dim == dim && !p.essential()) points.push_back({double(p.birth), double(*p.death)});
  }
  return convex_hull_area(std::move(points));
}

DiagramMetrics compute_metrics(const PersistenceDiagram& pd, int dim, std::span<const NeuronId> unused) {
  DiagramMetrics m = diagram_stats(pd, dim);
  m.hull_area = convex_hull_area(pd, dim);
  if (dim == 1) {
    const auto c = classify_pairs(pd, unused);
    m.c1 = c.c1;
    m.c2 = c.c2;
    m.c1_and_c2 = c.c1_and_c2;
  }
  return m;
}

std::string metrics_json(const DiagramMetrics& m) {
  nlohmann::ordered_json j;
  j["dim"] = m.dim;
  j["total"] = m.total_points;
  j["near_diagonal"] = m.near_diagonal;
  j["belt"] = m.belt;
  j["above_belt"] = m.above_belt;
  j["essential"] = m.essential;
  j["c1"] = m.c1;
  j["c2"] = m.c2;
  j["c1_and_c2"] = m.c1_and_c2;
  j["hull_area"] = m.hull_area;
  return j.dump(2) + "\n";
}

}  // namespace topoprobe
