#include <algorithm>
#include <tuple>

#include "topoprobe/persistence.hpp"

namespace topoprobe {

namespace {

using Column = std::vector<std::uint32_t>;
constexpr std::int64_t kNoOwner = -1;

// target <- target + source over Z/2 (both sorted ascending).
void add_column(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

std::vector<Simplex> to_simplices(const BoundaryMatrix& bm, const Column& positions) {
  std::vector<Simplex> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(bm.simplices[p]);
  return out;
}

auto pair_order_key(const PersistencePair& p) {
  const int death = p.death.value_or(kScheduleLength + 1);
  return std::tuple(p.dim, p.birth, death, p.creator);
}

}  // namespace

PersistenceDiagram reduce(const BoundaryMatrix& bm) {
  const std::size_t n = bm.simplices.size();
  if (bm.columns.size() != n) throw ConsistencyError("column count does not match simplex count");

  std::vector<std::int64_t> owner_of_low(n, kNoOwner);
  std::vector<Column> reduced(n);
  std::vector<char> cleared(n, 0);
  std::vector<Column> chain(n);
  Column scratch;

  PersistenceDiagram pd;
  pd.n_simplices = n;

  // Triangles first. Each nonzero reduced triangle kills the edge at its
  // lowest entry; that edge is a creator and needs no reduction of its own.
  for (std::size_t j = 0; j < n; ++j) {
    if (bm.simplices[j].dim != 2) continue;
    Column col = bm.columns[j];
    while (!col.empty()) {
      const auto owner = owner_of_low[col.back()];
      if (owner == kNoOwner) break;
      add_column(col, reduced[static_cast<std::size_t>(owner)], scratch);
    }
    if (col.empty()) {
      pd.dim2_creator_births.push_back(bm.simplices[j].filt_index);
    } else {
      owner_of_low[col.back()] = static_cast<std::int64_t>(j);
      cleared[col.back()] = 1;
      reduced[j] = std::move(col);
    }
  }

  std::vector<PersistencePair> all;
  for (std::size_t j = 0; j < n; ++j) {
    if (bm.simplices[j].dim != 1 || cleared[j]) continue;
    Column col = bm.columns[j];
    Column v{static_cast<std::uint32_t>(j)};
    while (!col.empty()) {
      const auto owner = owner_of_low[col.back()];
      if (owner == kNoOwner) break;
      add_column(col, reduced[static_cast<std::size_t>(owner)], scratch);
      add_column(v, chain[static_cast<std::size_t>(owner)], scratch);
    }
    if (col.empty()) {
      // never cleared, so nothing kills it
      PersistencePair p;
      p.dim = 1;
      p.birth = bm.simplices[j].filt_index;
      p.creator = bm.simplices[j];
      p.representative = to_simplices(bm, v);
      all.push_back(std::move(p));
    } else {
      owner_of_low[col.back()] = static_cast<std::int64_t>(j);
      reduced[j] = std::move(col);
      chain[j] = std::move(v);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Simplex& s = bm.simplices[i];
    if (s.dim == 2) continue;
    const auto owner = owner_of_low[i];
    PersistencePair p;
    p.dim = s.dim;
    p.birth = s.filt_index;
    p.creator = s;
    if (owner != kNoOwner) {
      const Simplex& killer = bm.simplices[static_cast<std::size_t>(owner)];
      p.death = killer.filt_index;
      p.destroyer = killer;
      if (s.dim == 1) p.representative = to_simplices(bm, reduced[static_cast<std::size_t>(owner)]);
    } else if (s.dim == 1) {
      continue;  // creator edges without a killer were handled above
    }
    all.push_back(std::move(p));
  }

  std::sort(all.begin(), all.end(),
            [](const PersistencePair& a, const PersistencePair& b) { return pair_order_key(a) < pair_order_key(b); });
  for (auto& p : all) {
    if (p.death && *p.death == p.birth) pd.zero_persistence.push_back(std::move(p));
    else pd.pairs.push_back(std::move(p));
  }
  std::sort(pd.dim2_creator_births.begin(), pd.dim2_creator_births.end());
  return pd;
}

std::array<int, kScheduleLength> betti_curve(const PersistenceDiagram& pd, int p) {
  if (p != 0 && p != 1) throw std::invalid_argument("betti_curve supports dimensions 0 and 1");
  std::array<int, kScheduleLength> curve{};
  for (const auto& pair : pd.pairs) {
    if (pair.dim != p) continue;
    const int last = pair.death ? *pair.death - 1 : kScheduleLength;
    for (int n = pair.birth; n <= last; ++n) ++curve[static_cast<std::size_t>(n - 1)];
  }
  return curve;
}

}  // namespace topoprobe
