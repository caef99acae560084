#include "cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "topoprobe/pipeline.hpp"

namespace topoprobe::cli {

namespace {

EnumeratorMode parse_mode(const std::string& mode) {
  if (mode == "flag") return EnumeratorMode::flag;
  if (mode == "alg1") return EnumeratorMode::algorithm1;
  throw std::invalid_argument("unknown mode \"" + mode + "\" (expected flag or alg1)");
}

std::vector<NeuronId> unused_from_weights(const std::string& path) {
  const NetworkGraph g(parse_weights(read_file(path)));
  return {g.unused_output_ids().begin(), g.unused_output_ids().end()};
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Persistent homology of relevance-weighted clique complexes over feed-forward networks",
               "topoprobe"};
  app.require_subcommand(1);

  std::string input, out_dir = ".", mode = "flag", emit = "pairs,metrics,diagram,barcode", weights;
  std::vector<int> dims{0, 1};
  std::vector<NeuronId> unused;
  int workers = 0;
  bool include_zero = false;

  auto add_io = [&](CLI::App* sub, const char* input_help) {
    sub->add_option("--input", input, input_help)->required();
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", workers, "Worker threads (0: available parallelism)")->check(CLI::NonNegativeNumber);
  };
  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--dims", dims, "Homology dimensions to report")->delimiter(',')->check(CLI::Range(0, 1));
  };

  auto* relevance = app.add_subcommand("relevance", "Write direct and extended relevance CSVs");
  add_io(relevance, "Weights JSON");
  add_workers(relevance);

  auto* complex = app.add_subcommand("complex", "Build the filtered complex from a relevance CSV");
  add_io(complex, "Extended relevance CSV (flag mode) or direct relevance CSV (alg1 mode)");
  complex->add_option("--mode", mode, "Enumerator: flag or alg1")->capture_default_str();
  add_workers(complex);

  auto* ph = app.add_subcommand("ph", "Compute persistence pairs from a simplices CSV");
  add_io(ph, "Simplices CSV");
  ph->add_flag("--include-zero", include_zero, "Also write zero-persistence pairs");

  auto* metrics = app.add_subcommand("metrics", "Compute diagram metrics from a pairs CSV");
  add_io(metrics, "Pairs CSV");
  add_dims(metrics);
  auto* weights_opt = metrics->add_option("--weights", weights, "Weights JSON supplying the unused output neurons");
  metrics->add_option("--unused", unused, "Unused output neuron ids")->delimiter(',')->excludes(weights_opt);

  auto* render = app.add_subcommand("render", "Render diagram and barcode SVGs from a pairs CSV");
  add_io(render, "Pairs CSV");
  add_dims(render);
  render->add_option("--emit", emit, "Subset of diagram,barcode")->capture_default_str();

  auto* pipeline = app.add_subcommand("pipeline", "Run every stage from a weights file");
  add_io(pipeline, "Weights JSON");
  add_dims(pipeline);
  pipeline->add_option("--emit", emit, "pairs,metrics,diagram,barcode,relevance,simplices")->capture_default_str();
  pipeline->add_option("--mode", mode, "Enumerator: flag or alg1")->capture_default_str();
  pipeline->add_flag("--include-zero", include_zero, "Also write zero-persistence pairs");
  add_workers(pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    std::vector<std::filesystem::path> written;
    if (relevance->parsed()) {
      written = run_relevance_stage(input, out_dir, workers);
    } else if (complex->parsed()) {
      written = run_complex_stage(input, out_dir, parse_mode(mode), workers);
    } else if (ph->parsed()) {
      written = run_ph_stage(input, out_dir, include_zero);
    } else if (metrics->parsed()) {
      if (!weights.empty()) unused = unused_from_weights(weights);
      written = run_metrics_stage(input, out_dir, unused, dims);
    } else if (render->parsed()) {
      const EmitFlags f = parse_emit_list(emit);
      written = run_render_stage(input, out_dir, dims, f.diagram, f.barcode);
    } else {
      RunConfig cfg;
      cfg.input = input;
      cfg.out_dir = out_dir;
      cfg.dims = dims;
      cfg.emit = parse_emit_list(emit);
      cfg.mode = parse_mode(mode);
      cfg.workers = workers;
      cfg.include_zero_persistence = include_zero;
      written = run_pipeline(cfg);
    }
    for (const auto& p : written) std::cout << p.string() << '\n';
    return kExitOk;
  } catch (const StageError& e) {
    std::cerr << "topoprobe: " << e.what() << '\n';
    return e.input_error() ? kExitBadInput : kExitFailure;
  } catch (const ParseError& e) {
    std::cerr << "topoprobe: weights: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const FileError& e) {
    std::cerr << "topoprobe: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "topoprobe: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "topoprobe: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace topoprobe::cli
