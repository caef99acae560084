#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "topoprobe/complexes.hpp"
#include "topoprobe/metrics.hpp"
#include "topoprobe/persistence.hpp"
#include "topoprobe/relevance.hpp"
#include "topoprobe/render.hpp"
#include "topoprobe/weightnet.hpp"

namespace topoprobe {

namespace artifact {
inline constexpr const char* kDirectRelevance = "direct_relevance.csv";
inline constexpr const char* kExtendedRelevance = "extended_relevance.csv";
inline constexpr const char* kSimplices = "simplices.csv";
inline constexpr const char* kPairs = "pairs.csv";
inline constexpr const char* kDiagram = "diagram.svg";
inline constexpr const char* kBarcode = "barcode.svg";
std::string metrics_name(int dim);  // metrics_dim<dim>.json
}  // namespace artifact

enum class EnumeratorMode { flag, algorithm1 };

struct EmitFlags {
  bool pairs = true;
  bool metrics = true;
  bool diagram = true;
  bool barcode = true;
  bool relevance = false;
  bool simplices = false;
};

// Parses "pairs,metrics,..." into flags; unknown names throw std::invalid_argument.
EmitFlags parse_emit_list(const std::string& list);

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path out_dir;
  std::vector<int> dims{0, 1};
  int max_dim = 2;
  EmitFlags emit;
  EnumeratorMode mode = EnumeratorMode::flag;
  int workers = 0;  // 0: available parallelism
  bool include_zero_persistence = false;
};

// Failure in one pipeline stage. `input_error` marks bad user input
// (unreadable or malformed files) as opposed to internal failures.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message, bool input_error)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)), input_error_(input_error) {}

  const std::string& stage() const { return stage_; }
  bool input_error() const { return input_error_; }

 private:
  std::string stage_;
  bool input_error_;
};

// weights -> graph -> relevance -> complex -> diagram -> metrics/renders.
// Returns the files written; on failure removes them and throws StageError.
std::vector<std::filesystem::path> run_pipeline(const RunConfig& cfg);

// Single stages. Each reads the previous stage's files and writes its own
// into `out_dir`, producing the same bytes as run_pipeline.
std::vector<std::filesystem::path> run_relevance_stage(const std::filesystem::path& weights,
                                                       const std::filesystem::path& out_dir, int workers);
std::vector<std::filesystem::path> run_complex_stage(const std::filesystem::path& relevance_csv,
                                                     const std::filesystem::path& out_dir, EnumeratorMode mode,
                                                     int workers);
std::vector<std::filesystem::path> run_ph_stage(const std::filesystem::path& simplices_csv,
                                                const std::filesystem::path& out_dir, bool include_zero_persistence);
std::vector<std::filesystem::path> run_metrics_stage(const std::filesystem::path& pairs_csv,
                                                     const std::filesystem::path& out_dir,
                                                     const std::vector<NeuronId>& unused,
                                                     const std::vector<int>& dims);
std::vector<std::filesystem::path> run_render_stage(const std::filesystem::path& pairs_csv,
                                                    const std::filesystem::path& out_dir,
                                                    const std::vector<int>& dims, bool diagram, bool barcode);

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);  // throws FileError
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace topoprobe
