#include "topoprobe/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace topoprobe {

namespace fs = std::filesystem;

std::string artifact::metrics_name(int dim) { return "metrics_dim" + std::to_string(dim) + ".json"; }

EmitFlags parse_emit_list(const std::string& list) {
  EmitFlags f{false, false, false, false, false, false};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "pairs") f.pairs = true;
    else if (item == "metrics") f.metrics = true;
    else if (item == "diagram") f.diagram = true;
    else if (item == "barcode") f.barcode = true;
    else if (item == "relevance") f.relevance = true;
    else if (item == "simplices") f.simplices = true;
    else if (!item.empty()) throw std::invalid_argument("unknown artifact \"" + item + "\"");
  }
  return f;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.close();
  if (!out) throw FileError("cannot write " + path.string());
}

namespace {

// Files written so far; removed unless the run completes.
class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}
  Outputs(const Outputs&) = delete;
  Outputs& operator=(const Outputs&) = delete;
  ~Outputs() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : written_) fs::remove(p, ec);
  }

  void write(const std::string& name, const std::string& contents) {
    if (written_.empty()) {
      std::error_code ec;
      fs::create_directories(dir_, ec);
      if (ec) throw FileError("cannot create output directory " + dir_.string() + ": " + ec.message());
    }
    const fs::path path = dir_ / name;
    written_.push_back(path);
    write_file(path, contents);
  }

  std::vector<fs::path> commit() {
    committed_ = true;
    return written_;
  }

 private:
  fs::path dir_;
  std::vector<fs::path> written_;
  bool committed_ = false;
};

template <typename F>
auto in_stage(const char* name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const ParseError& e) {
    throw StageError(name, e.what(), true);
  } catch (const FileError& e) {
    throw StageError(name, e.what(), true);
  } catch (const SizeError& e) {
    throw StageError(name, e.what(), true);
  } catch (const std::exception& e) {
    throw StageError(name, e.what(), false);
  }
}

void check_dims(const std::vector<int>& dims) {
  for (int d : dims) {
    if (d != 0 && d != 1) throw StageError("config", "dims must be drawn from {0, 1}", true);
  }
}

void write_metrics(Outputs& out, const PersistenceDiagram& pd, const std::vector<NeuronId>& unused,
                   const std::vector<int>& dims) {
  for (int d : dims) out.write(artifact::metrics_name(d), metrics_json(compute_metrics(pd, d, unused)));
}

void write_renders(Outputs& out, const PersistenceDiagram& pd, const std::vector<int>& dims, bool diagram,
                   bool barcode) {
  PlotSpec spec;
  spec.dims = dims;
  if (diagram) out.write(artifact::kDiagram, diagram_svg(pd, spec));
  if (barcode) out.write(artifact::kBarcode, barcode_svg(pd, spec));
}

FilteredComplex build_complex(const RelevanceMatrix& m, EnumeratorMode mode, int workers) {
  if (mode == EnumeratorMode::algorithm1) return build_algorithm1_complex(m);
  return build_filtered_complex(m, 2, workers);
}

}  // namespace

std::vector<fs::path> run_pipeline(const RunConfig& cfg) {
  check_dims(cfg.dims);
  if (cfg.max_dim != 2) throw StageError("config", "max_dim is fixed at 2", true);

  Outputs out(cfg.out_dir);
  const NetworkGraph graph = in_stage("weights", [&] { return NetworkGraph(parse_weights(read_file(cfg.input))); });
  if (cfg.mode == EnumeratorMode::algorithm1 && graph.size() > kAlgorithm1MaxNeurons) {
    throw StageError("config",
                     "alg1 mode is limited to " + std::to_string(kAlgorithm1MaxNeurons) + " neurons, network has " +
                         std::to_string(graph.size()),
                     true);
  }

  const RelevanceMatrix direct = in_stage("relevance", [&] { return direct_relevance(graph, cfg.workers); });
  const RelevanceMatrix extended =
      in_stage("relevance", [&] { return extended_relevance(direct, graph, cfg.workers); });
  if (cfg.emit.relevance) {
    in_stage("relevance", [&] {
      out.write(artifact::kDirectRelevance, relevance_csv(direct));
      out.write(artifact::kExtendedRelevance, relevance_csv(extended));
    });
  }

  const FilteredComplex fc = in_stage("complex", [&] {
    return build_complex(cfg.mode == EnumeratorMode::algorithm1 ? direct : extended, cfg.mode, cfg.workers);
  });
  if (cfg.emit.simplices) in_stage("complex", [&] { out.write(artifact::kSimplices, simplices_csv(fc)); });

  const PersistenceDiagram pd = in_stage("ph", [&] { return compute_persistence(fc); });
  if (cfg.emit.pairs) {
    in_stage("ph", [&] { out.write(artifact::kPairs, pairs_csv(pd, cfg.include_zero_persistence)); });
  }

  const std::vector<NeuronId> unused(graph.unused_output_ids().begin(), graph.unused_output_ids().end());
  if (cfg.emit.metrics) in_stage("metrics", [&] { write_metrics(out, pd, unused, cfg.dims); });
  if (cfg.emit.diagram || cfg.emit.barcode) {
    in_stage("render", [&] { write_renders(out, pd, cfg.dims, cfg.emit.diagram, cfg.emit.barcode); });
  }
  return out.commit();
}

std::vector<fs::path> run_relevance_stage(const fs::path& weights, const fs::path& out_dir, int workers) {
  Outputs out(out_dir);
  const NetworkGraph graph = in_stage("weights", [&] { return NetworkGraph(parse_weights(read_file(weights))); });
  in_stage("relevance", [&] {
    const auto direct = direct_relevance(graph, workers);
    out.write(artifact::kDirectRelevance, relevance_csv(direct));
    out.write(artifact::kExtendedRelevance, relevance_csv(extended_relevance(direct, graph, workers)));
  });
  return out.commit();
}

std::vector<fs::path> run_complex_stage(const fs::path& relevance_csv_path, const fs::path& out_dir,
                                        EnumeratorMode mode, int workers) {
  Outputs out(out_dir);
  in_stage("complex", [&] {
    const auto kind = mode == EnumeratorMode::algorithm1 ? RelevanceKind::direct : RelevanceKind::extended;
    const auto m = parse_relevance_csv(read_file(relevance_csv_path), kind);
    out.write(artifact::kSimplices, simplices_csv(build_complex(m, mode, workers)));
  });
  return out.commit();
}

std::vector<fs::path> run_ph_stage(const fs::path& simplices_path, const fs::path& out_dir,
                                   bool include_zero_persistence) {
  Outputs out(out_dir);
  in_stage("ph", [&] {
    const auto fc = parse_simplices_csv(read_file(simplices_path));
    out.write(artifact::kPairs, pairs_csv(compute_persistence(fc), include_zero_persistence));
  });
  return out.commit();
}

std::vector<fs::path> run_metrics_stage(const fs::path& pairs_path, const fs::path& out_dir,
                                        const std::vector<NeuronId>& unused, const std::vector<int>& dims) {
  check_dims(dims);
  Outputs out(out_dir);
  in_stage("metrics", [&] { write_metrics(out, parse_pairs_csv(read_file(pairs_path)), unused, dims); });
  return out.commit();
}

std::vector<fs::path> run_render_stage(const fs::path& pairs_path, const fs::path& out_dir,
                                       const std::vector<int>& dims, bool diagram, bool barcode) {
  check_dims(dims);
  Outputs out(out_dir);
  in_stage("render", [&] { write_renders(out, parse_pairs_csv(read_file(pairs_path)), dims, diagram, barcode); });
  return out.commit();
}

}  // namespace topoprobe
