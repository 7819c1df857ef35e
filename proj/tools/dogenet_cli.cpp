#include <iostream>
#include <map>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "dogenet/pipeline.hpp"

using namespace dogenet;

namespace {

struct Inputs {
  std::string data_dir = "data";
  std::string doges, dogaresse, aliases, families;
  std::string style;
  std::string component = "all";
};

RunConfig make_config(const Inputs& in, RunConfig cfg) {
  RunConfig paths = RunConfig::from_data_dir(in.data_dir);
  cfg.doges_path = in.doges.empty() ? paths.doges_path : in.doges;
  cfg.dogaresse_path = in.dogaresse.empty() ? paths.dogaresse_path : in.dogaresse;
  cfg.aliases_path = in.aliases.empty() ? paths.aliases_path : in.aliases;
  cfg.families_path = in.families.empty() ? paths.families_path : in.families;
  if (!in.style.empty()) cfg.style_path = in.style;
  cfg.component = in.component == "giant" ? ComponentScope::Giant : ComponentScope::All;
  return cfg;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const PipelineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int emit(const RunConfig& cfg, const std::set<Output>& outputs, Output echo, bool print) {
  return guarded([&] {
    const Analysis a = analyze(cfg);
    const auto files = render(a, cfg, outputs);
    for (const auto& w : a.warnings) std::cerr << "warning: " << w << "\n";
    write_outputs(cfg.output_dir, files);
    if (print) {
      if (echo == Output::Census) {
        std::cout << census_table(a.census);
      } else {
        std::cout << files.at(output_file_name(echo));
      }
    }
    return kExitOk;
  });
}

int do_ingest(const RunConfig& cfg) {
  return guarded([&] {
    const IngestResult in = ingest(cfg);
    std::cout << "doges            " << in.doges.size() << "\n"
              << "dogaresse        " << in.dogaresse.size() << "\n"
              << "aliases          " << in.aliases.size() << "\n"
              << "matched couples  " << in.matched.marriages.size() << "\n"
              << "after filters    " << in.marriages.size() << "\n"
              << "unmatched        " << in.matched.unmatched.size() << "\n";
    for (const auto& note : in.matched.ambiguities) std::cout << "ambiguous: " << note << "\n";
    return kExitOk;
  });
}

int do_graph(const RunConfig& cfg) {
  return guarded([&] {
    const Analysis a = analyze(cfg);
    std::cout << "families   " << a.graph.node_count() << "\n"
              << "pairs      " << a.graph.edge_count() << "\n"
              << "marriages  " << a.graph.marriage_count() << "\n"
              << "components " << a.components.size() << "\n";
    for (const auto& comp : a.components) {
      std::cout << "  " << comp.size() << ":";
      for (const auto& f : comp) std::cout << " " << f;
      std::cout << "\n";
    }
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marriage network of Venetian doge and dogaressa families"};
  app.require_subcommand(1);

  Inputs in;
  RunConfig base;
  app.add_option("--data-dir", in.data_dir, "Directory holding doges.csv, dogaresse.csv, aliases.csv, families.csv")
      ->capture_default_str();
  app.add_option("--doges", in.doges, "Doge table (overrides --data-dir)");
  app.add_option("--dogaresse", in.dogaresse, "Dogaressa table (overrides --data-dir)");
  app.add_option("--aliases", in.aliases, "Surname alias table (overrides --data-dir)");
  app.add_option("--families", in.families, "Family tier table (overrides --data-dir)");
  app.add_option("-o,--out", base.output_dir, "Output directory")->capture_default_str();
  app.add_flag("--multigraph", base.multigraph, "Count repeated marriages as parallel edges");
  app.add_option("--tolerance-years", base.tolerance_years, "Slack when matching tenures")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--component", in.component, "Analyse the giant component or every component")
      ->check(CLI::IsMember({"giant", "all"}))
      ->capture_default_str();
  app.add_option("--style", in.style, "JSON style overrides for graph exports");
  app.add_option("--threads", base.threads, "Worker threads for betweenness (0: all cores)");

  auto* ingest_cmd = app.add_subcommand("ingest", "Parse and match the records");
  auto* census_cmd = app.add_subcommand("census", "Dataset counts and reign statistics");
  auto* graph_cmd = app.add_subcommand("graph", "Family graph summary and components");
  auto* btw_cmd = app.add_subcommand("betweenness", "Betweenness ranking");
  auto* clo_cmd = app.add_subcommand("closeness", "Closeness ranking");
  auto* com_cmd = app.add_subcommand("communities", "Girvan-Newman communities of the giant component");
  auto* exp_cmd = app.add_subcommand("export", "Write graph.dot and graph.graphml");
  auto* all_cmd = app.add_subcommand("all", "Run every stage and write all reports");

  CLI11_PARSE(app, argc, argv);
  const RunConfig cfg = make_config(in, base);

  if (ingest_cmd->parsed()) return do_ingest(cfg);
  if (graph_cmd->parsed()) return do_graph(cfg);
  if (census_cmd->parsed()) return emit(cfg, {Output::Census}, Output::Census, true);
  if (btw_cmd->parsed()) return emit(cfg, {Output::Betweenness}, Output::Betweenness, true);
  if (clo_cmd->parsed()) return emit(cfg, {Output::Closeness}, Output::Closeness, true);
  if (com_cmd->parsed()) return emit(cfg, {Output::Communities}, Output::Communities, true);
  if (exp_cmd->parsed()) return emit(cfg, {Output::Dot, Output::GraphML}, Output::Dot, false);
  if (all_cmd->parsed()) return run_pipeline(cfg, std::cerr);
  return kExitFailure;
}
