#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dogenet/centrality.hpp"
#include "dogenet/community.hpp"
#include "dogenet/family_graph.hpp"
#include "dogenet/records.hpp"
#include "dogenet/reports.hpp"
#include "dogenet/style.hpp"

namespace dogenet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMissingInput = 2;
inline constexpr int kExitBadInput = 3;

enum class ComponentScope { All, Giant };

struct RunConfig {
  std::string doges_path;
  std::string dogaresse_path;
  std::string aliases_path;
  std::string families_path;
  std::optional<std::string> style_path;
  std::string output_dir = "out";
  bool multigraph = false;
  int tolerance_years = 1;
  ComponentScope component = ComponentScope::All;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Paths for the four inputs inside one directory.
  static RunConfig from_data_dir(const std::string& dir);
};

class PipelineError : public std::runtime_error {
 public:
  PipelineError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct IngestResult {
  std::vector<PersonRecord> doges;
  std::vector<PersonRecord> dogaresse;
  AliasTable aliases;
  std::map<std::string, NobilityTier> tiers;
  MatchResult matched;
  std::vector<Marriage> marriages;  // after filters
};

/// Reads and validates all inputs. Throws PipelineError with exit code 2
/// for a missing file and 3 for parse failures or empty tables.
IngestResult ingest(const RunConfig& cfg);

struct Analysis {
  IngestResult input;
  CensusSummary census;
  FamilyGraph graph;   // every family in a filtered marriage
  FamilyGraph scoped;  // graph or its giant component, per cfg.component
  FamilyGraph giant;
  std::vector<std::vector<std::string>> components;
  CentralityScores betweenness;
  CentralityScores closeness;
  Partition communities;  // on the giant component
  StyleMap style;
  std::vector<std::string> warnings;
};

Analysis analyze(const RunConfig& cfg);

enum class Output { Census, Betweenness, Closeness, Communities, Dot, GraphML };

const std::set<Output>& default_outputs();
std::string output_file_name(Output output);

/// File name -> contents, all rendered in memory.
std::map<std::string, std::string> render(const Analysis& analysis, const RunConfig& cfg,
                                          const std::set<Output>& outputs);

void write_outputs(const std::string& dir, const std::map<std::string, std::string>& files);

/// Full run: nothing is written unless every stage succeeds. Returns the
/// process exit code; diagnostics go to `err`.
int run_pipeline(const RunConfig& cfg, std::ostream& err, const std::set<Output>& outputs = default_outputs());

}  // namespace dogenet
