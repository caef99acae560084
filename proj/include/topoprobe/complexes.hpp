#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topoprobe/relevance.hpp"
#include "topoprobe/weightnet.hpp"

namespace topoprobe {

inline constexpr int kScheduleLength = 64;

// The 64 relevance thresholds t_1 > t_2 > ... > t_64, 1-based.
// t_n = (1 - 0.1 l) 10^-m with m = (n-1) / 9, l = (n-1) % 9, which gives
// 1.0, 0.9, ..., 0.2, 0.1, 0.09, ..., 1e-7.
class FiltrationSchedule {
 public:
  FiltrationSchedule();

  double threshold(int index) const { return thresholds_.at(static_cast<std::size_t>(index - 1)); }
  const std::array<double, kScheduleLength>& thresholds() const { return thresholds_; }

 private:
  std::array<double, kScheduleLength> thresholds_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

const FiltrationSchedule& threshold_schedule();

// Relevances are ratios and products computed in floating point, so a value
// that equals a threshold exactly (3/15 against 0.2) can land an ulp either
// side of it. Comparisons against thresholds absorb that much rounding.
inline constexpr double kThresholdRelTolerance = 1e-12;

// r >= t up to kThresholdRelTolerance.
inline bool meets_threshold(double r, double t) { return r >= t * (1.0 - kThresholdRelTolerance); }

// Smallest n with meets_threshold(r, t_n), or nullopt when r falls short of
// t_64. Throws DomainError for r outside [0, 1].
std::optional<int> threshold_index(double r);

// A simplex of dimension <= 2 with its filtration index. Vertices are
// stored ascending; unused slots are zero.
struct Simplex {
  std::array<NeuronId, 3> vertices{};
  std::uint8_t dim = 0;
  std::uint8_t filt_index = 1;

  std::span<const NeuronId> verts() const { return {vertices.data(), static_cast<std::size_t>(dim) + 1}; }

  static Simplex vertex(NeuronId a, int filt);
  static Simplex edge(NeuronId a, NeuronId b, int filt);
  static Simplex triangle(NeuronId a, NeuronId b, NeuronId c, int filt);

  // Filtration order: index, then dimension, then lexicographic vertices.
  friend auto operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.filt_index <=> b.filt_index; c != 0) return c;
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.vertices <=> b.vertices;
  }
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

// Same vertex set, ignoring filtration index.
inline bool same_cell(const Simplex& a, const Simplex& b) { return a.dim == b.dim && a.vertices == b.vertices; }

std::string to_string(const Simplex& s);  // "a-b-c"

struct FilteredComplex {
  std::vector<Simplex> simplices;  // sorted in filtration order
  std::size_t n_vertices = 0;

  bool operator==(const FilteredComplex&) const = default;
};

// Flag complex of the extended relevance, capped at dimension 2. Vertices
// enter at index 1, edge {b, a} (a > b) at threshold_index(r(a, b)), and a
// triangle at the latest of its three edges.
FilteredComplex build_filtered_complex(const RelevanceMatrix& extended, int max_dim = 2, int workers = 0);

namespace serial {
FilteredComplex build_filtered_complex(const RelevanceMatrix& extended, int max_dim = 2);
}  // namespace serial

// Prefix of the complex with filt_index <= n, 1 <= n <= 64.
std::span<const Simplex> complex_at(const FilteredComplex& fc, int n);

// Recursive path walk from vertex `start`: follows entries M[last][i] > 0,
// multiplies relevance along the walked path, and for every path whose
// product reaches `threshold` emits all vertex combinations of the path
// with at most `max_vertices` members. Result sorted and deduplicated;
// each combination is sorted ascending.
std::vector<std::vector<NeuronId>> enumerate_simplices_from_vertex(const RelevanceMatrix& m, NeuronId start,
                                                                   double threshold, std::size_t max_vertices = 3);

inline constexpr std::size_t kAlgorithm1MaxNeurons = 256;

// Filtration produced by the path-walk enumerator: each simplex enters at
// the earliest index whose threshold admits some walked path containing it.
// Limited to kAlgorithm1MaxNeurons neurons (throws SizeError).
FilteredComplex build_algorithm1_complex(const RelevanceMatrix& m);

// CSV with header `filt_index,dim,v0,v1,v2`, trailing fields empty.
std::string simplices_csv(const FilteredComplex& fc);
FilteredComplex parse_simplices_csv(std::string_view text);

}  // namespace topoprobe
