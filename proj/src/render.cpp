#include "topoprobe/render.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <fmt/format.h>

namespace topoprobe {

namespace {

constexpr std::array<double, 4> kBucketOpacity{0.3, 0.5, 0.75, 1.0};
constexpr std::array<int, 8> kTicks{1, 10, 19, 28, 37, 46, 55, 64};  // 1, 0.1, ..., 1e-7

struct Frame {
  const PlotSpec& spec;

  double plot_w() const { return spec.width - 2.0 * spec.margin; }
  double plot_h() const { return spec.height - 2.0 * spec.margin; }
  double x(double v) const { return spec.margin + v / spec.axis_max * plot_w(); }
  double y(double v) const { return spec.height - spec.margin - v / spec.axis_max * plot_h(); }
};

bool wanted(const PlotSpec& spec, int dim) {
  return std::find(spec.dims.begin(), spec.dims.end(), dim) != spec.dims.end();
}

void open_document(std::string& out, const PlotSpec& spec, const char* title) {
  out += fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n"
      "<title>{2}</title>\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
      spec.width, spec.height, title);
}

void x_axis(std::string& out, const Frame& f, const char* label) {
  const auto& s = f.spec;
  out += fmt::format("<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n");
  out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", f.x(0), f.y(0),
                     f.x(s.axis_max), f.y(0));
  for (int t : kTicks) {
    out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\"/>\n", f.x(t), f.y(0),
                       f.y(0) + 4);
  }
  out += "</g>\n<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (int t : kTicks) {
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", f.x(t), f.y(0) + 15, t);
  }
  out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n</g>\n", f.x(s.axis_max / 2), s.height - 8.0,
                     label);
}

}  // namespace

int multiplicity_bucket(std::size_t count) {
  if (count <= 1) return 0;
  if (count < 10) return 1;
  if (count < 100) return 2;
  return 3;
}

std::string diagram_svg(const PersistenceDiagram& pd, const PlotSpec& spec) {
  const Frame f{spec};
  std::string out;
  open_document(out, spec, "persistence diagram");
  x_axis(out, f, "birth");

  out += fmt::format("<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n");
  out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", f.x(0), f.y(0), f.x(0),
                     f.y(spec.axis_max));
  for (int t : kTicks) {
    out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\"/>\n", f.x(0), f.y(t),
                       f.x(0) - 4);
  }
  out += "</g>\n<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">\n";
  for (int t : kTicks) out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", f.x(0) - 6, f.y(t) + 3, t);
  out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">inf</text>\n", f.x(0) - 6,
                     f.y(PlotSpec::kEssentialCoordinate) + 3);
  out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" transform=\"rotate(-90 {:.2f} {:.2f})\" "
                     "text-anchor=\"middle\">death</text>\n</g>\n",
                     12.0, f.y(spec.axis_max / 2), 12.0, f.y(spec.axis_max / 2));

  out += fmt::format(
      "<line class=\"diagonal\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"gray\" "
      "stroke-width=\"1\"/>\n",
      f.x(0), f.y(0), f.x(spec.axis_max), f.y(spec.axis_max));
  out += fmt::format(
      "<line class=\"essential-row\" x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"gray\" "
      "stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n",
      f.x(0), f.y(PlotSpec::kEssentialCoordinate), f.x(spec.axis_max));

  // (dim, birth, death-or-65, essential) -> multiplicity
  std::map<std::tuple<int, int, int, bool>, std::size_t> points;
  for (const auto& p : pd.pairs) {
    if (!wanted(spec, p.dim)) continue;
    ++points[{p.dim, p.birth, p.death.value_or(PlotSpec::kEssentialCoordinate), p.essential()}];
  }

  out += "<g class=\"points\">\n";
  for (const auto& [key, count] : points) {
    const auto& [dim, birth, death, essential] = key;
    const int bucket = multiplicity_bucket(count);
    const double cx = f.x(birth), cy = f.y(death);
    const auto& color = spec.colors[static_cast<std::size_t>(dim)];
    if (essential) {
      out += fmt::format(
          "<path class=\"pt essential dim-{} bucket-{}\" data-count=\"{}\" d=\"M {:.2f} {:.2f} l 4 4 l -4 4 l -4 -4 "
          "z\" fill=\"{}\" fill-opacity=\"{}\" stroke=\"{}\"/>\n",
          dim, bucket, count, cx, cy - 4, color, kBucketOpacity[static_cast<std::size_t>(bucket)], color);
    } else {
      out += fmt::format(
          "<circle class=\"pt dim-{} bucket-{}\" data-count=\"{}\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\" "
          "fill-opacity=\"{}\"/>\n",
          dim, bucket, count, cx, cy, color, kBucketOpacity[static_cast<std::size_t>(bucket)]);
    }
  }
  out += "</g>\n";

  out += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (std::size_t d = 0; d < spec.colors.size(); ++d) {
    const double ly = spec.margin / 2.0 + 12.0 * static_cast<double>(d);
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>\n", spec.width - 90.0, ly,
                       spec.colors[d]);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">H{}</text>\n", spec.width - 82.0, ly + 3, d);
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string barcode_svg(const PersistenceDiagram& pd, const PlotSpec& spec) {
  const Frame f{spec};
  std::string out;
  open_document(out, spec, "persistence barcode");
  x_axis(out, f, "filtration index");

  std::vector<const PersistencePair*> bars;
  for (const auto& p : pd.pairs) {
    if (wanted(spec, p.dim)) bars.push_back(&p);
  }
  std::stable_sort(bars.begin(), bars.end(), [](const PersistencePair* a, const PersistencePair* b) {
    return std::tuple(a->dim, a->birth, a->death.value_or(PlotSpec::kEssentialCoordinate)) <
           std::tuple(b->dim, b->birth, b->death.value_or(PlotSpec::kEssentialCoordinate));
  });

  const double step = f.plot_h() / static_cast<double>(std::max<std::size_t>(bars.size(), 1));
  const double thickness = std::clamp(step * 0.7, 0.2, 6.0);
  out += "<g class=\"bars\">\n";
  for (std::size_t k = 0; k < bars.size(); ++k) {
    const auto& p = *bars[k];
    const double x0 = f.x(p.birth);
    const double x1 = p.essential() ? f.x(spec.axis_max) : f.x(*p.death);
    const double y = spec.margin + step * (static_cast<double>(k) + 0.5);
    out += fmt::format(
        "<line class=\"bar dim-{}{}\" x1=\"{:.2f}\" y1=\"{:.3f}\" x2=\"{:.2f}\" y2=\"{:.3f}\" stroke=\"{}\" "
        "stroke-width=\"{:.3f}\"/>\n",
        p.dim, p.essential() ? " essential" : "", x0, y, x1, y, spec.colors[static_cast<std::size_t>(p.dim)],
        thickness);
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace topoprobe
