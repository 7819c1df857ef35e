#include "dogenet/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <thread>

#include "dogenet/csv.hpp"
#include "dogenet/dot.hpp"
#include "dogenet/graphml.hpp"
#include "dogenet/stats.hpp"

namespace dogenet {

namespace fs = std::filesystem;

namespace {

std::string load(const std::string& path) {
  if (path.empty() || !fs::is_regular_file(path)) {
    throw PipelineError(kExitMissingInput, "input file not found: " + path);
  }
  return read_file(path);
}

std::vector<PersonRecord> load_people(const std::string& path, Role role) {
  const std::string text = load(path);
  ParseResult parsed;
  try {
    parsed = parse_records(text, role);
  } catch (const std::exception& e) {
    throw PipelineError(kExitBadInput, path + ": " + e.what());
  }
  if (!parsed.issues.empty()) {
    std::string msg = path + ": " + std::to_string(parsed.issues.size()) + " bad row(s)";
    for (const auto& issue : parsed.issues) msg += "\n  row " + std::to_string(issue.row) + ": " + issue.message;
    throw PipelineError(kExitBadInput, msg);
  }
  if (parsed.records.empty()) throw PipelineError(kExitBadInput, path + ": no records");
  return parsed.records;
}

std::vector<PersonRecord> married_doges(const MatchResult& matched) {
  std::map<std::size_t, PersonRecord> by_row;
  for (const auto& m : matched.marriages) by_row.emplace(m.doge.row, m.doge);
  std::vector<PersonRecord> out;
  for (auto& [row, d] : by_row) out.push_back(d);
  return out;
}

}  // namespace

RunConfig RunConfig::from_data_dir(const std::string& dir) {
  RunConfig cfg;
  const fs::path base(dir);
  cfg.doges_path = (base / "doges.csv").string();
  cfg.dogaresse_path = (base / "dogaresse.csv").string();
  cfg.aliases_path = (base / "aliases.csv").string();
  cfg.families_path = (base / "families.csv").string();
  return cfg;
}

IngestResult ingest(const RunConfig& cfg) {
  if (cfg.tolerance_years < 0) throw PipelineError(kExitFailure, "tolerance_years must be >= 0");
  IngestResult in;
  in.doges = load_people(cfg.doges_path, Role::Doge);
  in.dogaresse = load_people(cfg.dogaresse_path, Role::Dogaressa);
  try {
    in.aliases = AliasTable::from_csv(load(cfg.aliases_path));
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(kExitBadInput, cfg.aliases_path + ": " + e.what());
  }
  try {
    in.tiers = load_tiers(load(cfg.families_path));
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(kExitBadInput, cfg.families_path + ": " + e.what());
  }
  in.matched = match_couples(in.doges, in.dogaresse, cfg.tolerance_years);
  in.marriages = filter_marriages(in.matched.marriages, in.aliases);
  if (in.marriages.empty()) throw PipelineError(kExitBadInput, "no marriages left after filtering");
  return in;
}

Analysis analyze(const RunConfig& cfg) {
  Analysis a;
  a.input = ingest(cfg);
  a.style = default_style();
  if (cfg.style_path) {
    try {
      a.style = load_style(load(*cfg.style_path));
    } catch (const PipelineError&) {
      throw;
    } catch (const std::exception& e) {
      throw PipelineError(kExitBadInput, *cfg.style_path + ": " + e.what());
    }
  }

  a.census.counts = census(a.input.doges, a.input.matched.marriages, a.input.marriages, a.input.aliases);
  a.census.reign_married = reign_stats(married_doges(a.input.matched));
  a.census.reign_all = reign_stats(a.input.doges);

  a.graph = build_graph(a.input.marriages, a.input.tiers);
  for (const auto& n : a.graph.nodes()) {
    if (!a.input.tiers.count(n.name)) a.warnings.push_back("no tier for " + n.name + "; using None");
  }
  a.components = connected_components(a.graph);
  a.giant = giant_component(a.graph);
  a.scoped = cfg.component == ComponentScope::Giant ? a.giant : a.graph;

  BetweennessOptions opts;
  opts.multigraph = cfg.multigraph;
  opts.threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  a.betweenness = betweenness(a.scoped, opts);
  a.closeness = closeness(a.scoped);
  a.communities = detect_communities(a.giant);
  validate_partition(a.giant, a.communities);
  return a;
}

const std::set<Output>& default_outputs() {
  static const std::set<Output> all{Output::Census, Output::Betweenness, Output::Communities, Output::Dot,
                                    Output::GraphML};
  return all;
}

std::string output_file_name(Output output) {
  switch (output) {
    case Output::Census: return "census.json";
    case Output::Betweenness: return "betweenness.csv";
    case Output::Closeness: return "closeness.csv";
    case Output::Communities: return "communities.json";
    case Output::Dot: return "graph.dot";
    case Output::GraphML: return "graph.graphml";
  }
  return {};
}

std::map<std::string, std::string> render(const Analysis& a, const RunConfig& cfg, const std::set<Output>& outputs) {
  std::map<std::string, std::string> files;
  for (Output o : outputs) {
    std::string text;
    switch (o) {
      case Output::Census: text = census_json(a.census); break;
      case Output::Betweenness: text = centrality_csv(a.betweenness); break;
      case Output::Closeness: text = centrality_csv(a.closeness); break;
      case Output::Communities: text = communities_json(a.communities); break;
      case Output::Dot: {
        DotOptions opts;
        opts.scores = &a.betweenness;
        opts.multigraph = cfg.multigraph;
        text = export_dot(a.scoped, a.style, opts);
        break;
      }
      case Output::GraphML: {
        GraphDocument doc;
        doc.graph = a.scoped;
        doc.betweenness = a.betweenness.scores;
        doc.closeness = a.closeness.scores;
        // Giant-component communities keep their ids; each smaller
        // component gets the next id.
        std::map<std::string, std::size_t> community = a.communities.membership();
        std::size_t next = a.communities.communities.size();
        for (const auto& comp : a.components) {
          if (community.count(comp.front())) continue;
          bool in_scope = false;
          for (const auto& f : comp) {
            if (a.scoped.find(f)) {
              community[f] = next;
              in_scope = true;
            }
          }
          if (in_scope) ++next;
        }
        for (auto it = community.begin(); it != community.end();) {
          it = a.scoped.find(it->first) ? std::next(it) : community.erase(it);
        }
        doc.community = std::move(community);
        text = export_graphml(doc);
        break;
      }
    }
    files[output_file_name(o)] = std::move(text);
  }
  return files;
}

void write_outputs(const std::string& dir, const std::map<std::string, std::string>& files) {
  fs::create_directories(dir);
  for (const auto& [name, text] : files) {
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
  }
}

int run_pipeline(const RunConfig& cfg, std::ostream& err, const std::set<Output>& outputs) {
  std::map<std::string, std::string> files;
  try {
    const Analysis a = analyze(cfg);
    files = render(a, cfg, outputs);
    for (const auto& w : a.warnings) err << "warning: " << w << "\n";
  } catch (const PipelineError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  try {
    write_outputs(cfg.output_dir, files);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace dogenet
