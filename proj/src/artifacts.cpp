// CSV encodings of the stage artifacts (relevance, simplices, pairs).

#include <algorithm>
#include <charconv>
#include <tuple>

#include <fmt/format.h>

#include "topoprobe/persistence.hpp"

namespace topoprobe {

namespace {

using Kind = ParseError::Kind;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Data lines after the header, with trailing '\r' stripped and blank lines skipped.
std::vector<std::string_view> data_lines(std::string_view text, std::string_view header) {
  auto lines = split(text, '\n');
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  if (lines.empty() || lines.front() != header) {
    throw ParseError(Kind::syntax, "expected CSV header \"" + std::string(header) + "\"");
  }
  std::vector<std::string_view> out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (!lines[k].empty()) out.push_back(lines[k]);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::string_view what) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(Kind::bad_value, "bad " + std::string(what) + " field \"" + std::string(field) + "\"");
  }
  return value;
}

Simplex parse_simplex(std::string_view text, int filt) {
  const auto parts = split(text, '-');
  if (parts.empty() || parts.size() > 3) throw ParseError(Kind::bad_value, "bad simplex \"" + std::string(text) + "\"");
  std::array<NeuronId, 3> v{};
  for (std::size_t k = 0; k < parts.size(); ++k) v[k] = parse_number<NeuronId>(parts[k], "vertex");
  switch (parts.size()) {
    case 1: return Simplex::vertex(v[0], filt);
    case 2: return Simplex::edge(v[0], v[1], filt);
    default: return Simplex::triangle(v[0], v[1], v[2], filt);
  }
}

}  // namespace

std::string relevance_csv(const RelevanceMatrix& m) {
  std::string out = "i,j,value\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j) > 0.0) out += fmt::format("{},{},{}\n", i, j, m(i, j));
    }
  }
  return out;
}

RelevanceMatrix parse_relevance_csv(std::string_view text, RelevanceKind kind) {
  std::vector<std::tuple<std::size_t, std::size_t, double>> entries;
  std::size_t n = 0;
  for (auto line : data_lines(text, "i,j,value")) {
    const auto f = split(line, ',');
    if (f.size() != 3) throw ParseError(Kind::syntax, "relevance row needs 3 fields: " + std::string(line));
    const auto i = parse_number<std::size_t>(f[0], "i");
    const auto j = parse_number<std::size_t>(f[1], "j");
    const auto v = parse_number<double>(f[2], "value");
    if (!(v >= 0.0 && v <= 1.0)) throw ParseError(Kind::bad_value, "relevance outside [0, 1]: " + std::string(line));
    entries.emplace_back(i, j, v);
    n = std::max({n, i + 1, j + 1});
  }
  RelevanceMatrix m(n, kind);
  for (const auto& [i, j, v] : entries) m.at(i, j) = v;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 1.0) throw ParseError(Kind::bad_value, "relevance diagonal must be 1");
  }
  return m;
}

std::string simplices_csv(const FilteredComplex& fc) {
  std::string out = "filt_index,dim,v0,v1,v2\n";
  for (const auto& s : fc.simplices) {
    out += fmt::format("{},{}", s.filt_index, s.dim);
    for (std::size_t k = 0; k < 3; ++k) {
      out += ',';
      if (k <= s.dim) out += std::to_string(s.vertices[k]);
    }
    out += '\n';
  }
  return out;
}

FilteredComplex parse_simplices_csv(std::string_view text) {
  FilteredComplex fc;
  for (auto line : data_lines(text, "filt_index,dim,v0,v1,v2")) {
    const auto f = split(line, ',');
    if (f.size() != 5) throw ParseError(Kind::syntax, "simplex row needs 5 fields: " + std::string(line));
    const int filt = parse_number<int>(f[0], "filt_index");
    const int dim = parse_number<int>(f[1], "dim");
    if (filt < 1 || filt > kScheduleLength) throw ParseError(Kind::bad_value, "filt_index outside 1..64");
    if (dim < 0 || dim > 2) throw ParseError(Kind::bad_value, "dim outside 0..2");
    std::array<NeuronId, 3> v{};
    for (int k = 0; k < 3; ++k) {
      const auto field = f[static_cast<std::size_t>(2 + k)];
      if (k <= dim) v[static_cast<std::size_t>(k)] = parse_number<NeuronId>(field, "vertex");
      else if (!field.empty()) throw ParseError(Kind::bad_value, "unexpected vertex field: " + std::string(line));
    }
    Simplex s = dim == 0 ? Simplex::vertex(v[0], filt)
                : dim == 1 ? Simplex::edge(v[0], v[1], filt)
                           : Simplex::triangle(v[0], v[1], v[2], filt);
    if (s.dim == 0) ++fc.n_vertices;
    fc.simplices.push_back(s);
  }
  if (!std::is_sorted(fc.simplices.begin(), fc.simplices.end())) {
    throw ParseError(Kind::bad_value, "simplices are not in filtration order");
  }
  return fc;
}

std::string pairs_csv(const PersistenceDiagram& pd, bool include_zero_persistence) {
  std::vector<const PersistencePair*> rows;
  for (const auto& p : pd.pairs) rows.push_back(&p);
  if (include_zero_persistence) {
    for (const auto& p : pd.zero_persistence) rows.push_back(&p);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const PersistencePair* a, const PersistencePair* b) {
    const auto key = [](const PersistencePair* p) {
      return std::tuple(p->dim, p->birth, p->death.value_or(kScheduleLength + 1), p->creator);
    };
    return key(a) < key(b);
  });

  std::string out = "dim,birth,death,essential,creator,destroyer,representative\n";
  for (const auto* p : rows) {
    std::string rep;
    if (p->representative) {
      for (const auto& s : *p->representative) {
        if (!rep.empty()) rep += ';';
        rep += to_string(s);
      }
    }
    out += fmt::format("{},{},{},{},{},{},{}\n", p->dim, p->birth, p->death ? std::to_string(*p->death) : "",
                       p->essential() ? 1 : 0, to_string(p->creator), p->destroyer ? to_string(*p->destroyer) : "",
                       rep);
  }
  return out;
}

PersistenceDiagram parse_pairs_csv(std::string_view text) {
  PersistenceDiagram pd;
  for (auto line : data_lines(text, "dim,birth,death,essential,creator,destroyer,representative")) {
    const auto f = split(line, ',');
    if (f.size() != 7) throw ParseError(Kind::syntax, "pair row needs 7 fields: " + std::string(line));
    PersistencePair p;
    p.dim = parse_number<int>(f[0], "dim");
    p.birth = parse_number<int>(f[1], "birth");
    const int essential = parse_number<int>(f[3], "essential");
    if (p.dim < 0 || p.dim > 1) throw ParseError(Kind::bad_value, "dim must be 0 or 1");
    if (essential != (f[2].empty() ? 1 : 0)) {
      throw ParseError(Kind::bad_value, "essential flag disagrees with death field: " + std::string(line));
    }
    if (!f[2].empty()) p.death = parse_number<int>(f[2], "death");
    p.creator = parse_simplex(f[4], p.birth);
    if (!f[5].empty()) p.destroyer = parse_simplex(f[5], p.death.value_or(0));
    if (p.dim == 1) {
      // member filtration indices are not carried by the CSV and read back as 0
      std::vector<Simplex> rep;
      if (!f[6].empty()) {
        for (auto item : split(f[6], ';')) rep.push_back(parse_simplex(item, 0));
      }
      p.representative = std::move(rep);
    }
    if (p.death && *p.death < p.birth) throw ParseError(Kind::bad_value, "death before birth: " + std::string(line));
    if (p.death && *p.death == p.birth) pd.zero_persistence.push_back(std::move(p));
    else pd.pairs.push_back(std::move(p));
  }
  return pd;
}

}  // namespace topoprobe
