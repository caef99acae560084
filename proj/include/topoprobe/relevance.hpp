#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topoprobe/weightnet.hpp"

namespace topoprobe {

enum class RelevanceKind { direct, extended };

// Dense n x n relevance table; entry (i, j) is the relevance of neuron i
// to neuron j. The diagonal is always 1.
class RelevanceMatrix {
 public:
  RelevanceMatrix() = default;
  RelevanceMatrix(std::size_t n, RelevanceKind kind) : n_(n), kind_(kind), values_(n * n, 0.0) {
    for (std::size_t i = 0; i < n; ++i) values_[i * n + i] = 1.0;
  }

  std::size_t size() const { return n_; }
  RelevanceKind kind() const { return kind_; }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  const double* row(std::size_t i) const { return values_.data() + i * n_; }
  double* row(std::size_t i) { return values_.data() + i * n_; }

  bool operator==(const RelevanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  RelevanceKind kind_ = RelevanceKind::direct;
  std::vector<double> values_;
};

class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// r(i,j) = max(0, w_ij) / sum_i' max(0, w_i'j). A neuron with no positive
// incoming weight gets r(., j) = 0 from every source.
RelevanceMatrix direct_relevance(const NetworkGraph& g, int workers = 0);

// Max-product relevance over all forward paths i -> ... -> j, computed by
// dynamic programming from each source toward the output layer. Only
// entries with i > j (and the diagonal) can be nonzero.
RelevanceMatrix extended_relevance(const RelevanceMatrix& direct, const NetworkGraph& g, int workers = 0);

namespace serial {
RelevanceMatrix direct_relevance(const NetworkGraph& g);
RelevanceMatrix extended_relevance(const RelevanceMatrix& direct, const NetworkGraph& g);
}  // namespace serial

inline constexpr std::size_t kBruteForceMaxNeurons = 14;

// Exhaustive path enumeration; reference for extended_relevance on small
// graphs. Throws SizeError above kBruteForceMaxNeurons neurons.
RelevanceMatrix brute_force_extended_relevance(const RelevanceMatrix& direct, const NetworkGraph& g);

// CSV with header `i,j,value`, one row per positive entry in (i, j) order.
std::string relevance_csv(const RelevanceMatrix& m);
RelevanceMatrix parse_relevance_csv(std::string_view text, RelevanceKind kind);

}  // namespace topoprobe
