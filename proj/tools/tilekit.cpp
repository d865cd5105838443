#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tilekit/error.hpp"
#include "tilekit/full_classify.hpp"
#include "tilekit/glue_cut.hpp"
#include "tilekit/orbit.hpp"
#include "tilekit/parallel.hpp"
#include "tilekit/partition_enum.hpp"
#include "tilekit/records.hpp"
#include "tilekit/text_format.hpp"
#include "tilekit/tiling_enum.hpp"
#include "tilekit/tiling_expand.hpp"

namespace fs = std::filesystem;
using namespace tilekit;

namespace {

constexpr const char* kVersion = "0.1.0";

class ValidationFailure : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  int dim = 3;
  int pairs = 0;
  int workers = default_workers();
  std::size_t budget = 1000000;
  std::string in;
  std::string to;
  std::string out;
  std::string report = "orbits";
  std::string replay;
  bool full = false;
  bool by_class = false;
  bool classes_only = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_jsonl(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

std::vector<Code> read_codes(const std::string& path) {
  const std::string text = read_file(path);
  if (!looks_like_jsonl(text)) return {parse_code(text)};
  std::istringstream in(text);
  std::vector<Code> out;
  for (const auto& r : read_jsonl(in)) out.push_back(record_code(r));
  return out;
}

Code read_single_code(const std::string& path) {
  auto codes = read_codes(path);
  if (codes.size() != 1) throw ValidationFailure(path + ": expected exactly one code");
  return codes.front();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

Json manifest(const std::string& command, const Json& config) {
  std::ostringstream hash;
  hash << std::hex << fnv1a(command + config.dump());
  Json m;
  m["tool"] = "tilekit";
  m["version"] = kVersion;
  m["command"] = command;
  m["config"] = config;
  m["config_hash"] = hash.str();
  return m;
}

void log(const std::string& message) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::string stamp = std::ctime(&now);
  stamp.pop_back();
  std::cerr << "[" << stamp << "] " << message << '\n';
}

// Records go to --out (with a sibling manifest) or to standard output.
void emit(const RunConfig& cfg, const std::string& command, const Json& config, const std::vector<Json>& records) {
  if (cfg.out.empty()) {
    write_jsonl(std::cout, records);
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw Error("cannot write " + cfg.out);
  write_jsonl(out, records);
  std::ofstream(cfg.out + ".manifest.json", std::ios::binary) << manifest(command, config).dump(2) << '\n';
}

void warn_alphabet(int dim, int pairs) {
  if (dim >= 1 && dim < 31 && pairs > (1 << (dim - 1))) {
    std::cerr << "warning: " << pairs << " pairs exceed the sufficient bound " << (1 << (dim - 1))
              << " for dimension " << dim << '\n';
  }
}

void check_range(const RunConfig& cfg) {
  if (cfg.dim < 1 || cfg.dim > 5) throw CLI::ValidationError("--dim", "must be in 1..5");
  if (cfg.pairs < 0 || cfg.pairs > Letter::kMaxPairs) throw CLI::ValidationError("--pairs", "must be in 1..16");
  if (cfg.workers < 1) throw CLI::ValidationError("--workers", "must be positive");
}

int run_enum_partition(const RunConfig& cfg) {
  const auto classes = all_twin_pair_free(cfg.workers);
  std::map<std::string, std::string> names;
  for (const auto& [name, code] : reference_twin_pair_free_codes()) names[canonical_key(code)] = name;
  std::vector<Json> records;
  for (const auto& cls : classes) {
    Json r = code_record(cls.representative);
    if (auto it = names.find(cls.key); it != names.end()) r["name"] = it->second;
    records.push_back(std::move(r));
  }
  emit(cfg, "enum-partition", Json::object(), records);
  log("twin-pair-free classes: " + std::to_string(classes.size()));
  return 0;
}

int run_expand(const RunConfig& cfg) {
  if (cfg.pairs < 1) throw CLI::ValidationError("--pairs", "required");
  std::vector<std::pair<std::string, Code>> sources;
  if (cfg.in.empty()) {
    sources = reference_twin_pair_free_codes();
  } else {
    for (auto& c : read_codes(cfg.in)) sources.emplace_back(cfg.in, std::move(c));
  }
  std::vector<int> supply;
  for (int p = 1; p <= cfg.pairs; ++p) supply.push_back(p);
  std::vector<Json> records;
  std::uint64_t total = 0;
  for (const auto& [name, code] : sources) {
    if (!is_partition_code(code)) throw ValidationFailure(name + ": not a partition code");
    std::map<std::string, Code> seen;
    total += expand_code(code, supply, [&](const Code& e) {
      if (cfg.classes_only) {
        seen.try_emplace(canonical_key(e), e);
      } else {
        records.push_back(code_record(e, name));
      }
    });
    for (const auto& [key, e] : seen) records.push_back(code_record(e, name));
  }
  emit(cfg, "expand", Json{{"pairs", cfg.pairs}, {"in", cfg.in}, {"classes", cfg.classes_only}}, records);
  log("expansions: " + std::to_string(total) + ", records: " + std::to_string(records.size()));
  return 0;
}

std::vector<Json> class_records(std::vector<IsoClass> classes) {
  std::sort(classes.begin(), classes.end(), [](const IsoClass& a, const IsoClass& b) { return a.key < b.key; });
  std::vector<Json> out;
  for (const auto& c : classes) out.push_back(class_record(c));
  return out;
}

int run_classify_full(const RunConfig& cfg, int pairs) {
  if (cfg.out.empty()) throw CLI::ValidationError("--out", "a directory is required with --full");
  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  const Json config{{"dim", cfg.dim}, {"pairs", pairs}};
  const Json m = manifest("classify --full", config);
  const fs::path manifest_path = dir / "manifest.json";
  CylinderClassifyOptions options;
  options.dim = cfg.dim;
  options.max_k = pairs;
  options.workers = cfg.workers;
  if (fs::exists(manifest_path)) {
    const Json old = Json::parse(read_file(manifest_path.string()));
    if (old.value("config_hash", "") != m["config_hash"]) {
      throw ValidationFailure(manifest_path.string() + " belongs to a different configuration");
    }
    for (int k = 1; k <= pairs; ++k) {
      if (fs::exists(dir / ("level-" + std::to_string(k) + ".jsonl"))) options.skip_levels.insert(k);
    }
  }
  std::ofstream(manifest_path, std::ios::binary) << m.dump(2) << '\n';
  for (int k : options.skip_levels) log("level " + std::to_string(k) + ": resumed from checkpoint");
  std::size_t last = 0;
  options.on_progress = [&](int k, std::size_t done, std::size_t total) {
    if (done == total || done >= last + 1000) {
      last = done == total ? 0 : done;
      log("level " + std::to_string(k) + ": " + std::to_string(done) + "/" + std::to_string(total));
    }
  };
  options.on_level = [&](const LevelResult& level) {
    const fs::path part = dir / ("level-" + std::to_string(level.k) + ".jsonl.part");
    {
      std::ofstream out(part, std::ios::binary);
      write_jsonl(out, class_records(level.classes));
    }
    fs::rename(part, dir / ("level-" + std::to_string(level.k) + ".jsonl"));
    log("level " + std::to_string(level.k) + ": " + std::to_string(level.classes.size()) + " classes from " +
        std::to_string(level.generated) + " codes");
  };
  classify_by_cylinders(options);

  std::map<std::string, Json> merged;
  for (int k = 1; k <= std::min(pairs, 1 << (cfg.dim - 1)); ++k) {
    std::ifstream in(dir / ("level-" + std::to_string(k) + ".jsonl"), std::ios::binary);
    for (auto& r : read_jsonl(in)) {
      const std::string key = r["canonical"].get<std::string>();
      merged.try_emplace(key, std::move(r));
    }
  }
  std::vector<Json> records;
  for (auto& [key, r] : merged) records.push_back(std::move(r));
  std::ofstream out(dir / "classes.jsonl", std::ios::binary);
  write_jsonl(out, records);
  std::cout << "classes: " << records.size() << '\n';
  return 0;
}

int run_classify(const RunConfig& cfg) {
  const int pairs = cfg.pairs > 0 ? cfg.pairs : 1 << (cfg.dim - 1);
  warn_alphabet(cfg.dim, pairs);
  if (cfg.full) return run_classify_full(cfg, pairs);
  std::vector<IsoClass> classes;
  if (!cfg.in.empty()) {
    const auto codes = read_codes(cfg.in);
    classes = classify(codes, cfg.workers);
  } else {
    classes = classify_tiling_codes(cfg.dim, pairs, cfg.workers);
  }
  emit(cfg, "classify", Json{{"dim", cfg.dim}, {"pairs", pairs}, {"in", cfg.in}}, class_records(classes));
  (cfg.out.empty() ? std::cerr : std::cout) << "classes: " << classes.size() << '\n';
  return 0;
}

int run_count(const RunConfig& cfg) {
  if (cfg.in.empty()) throw CLI::ValidationError("--in", "a class file is required");
  const auto codes = read_codes(cfg.in);
  for (const auto& c : codes) {
    if (c.dim() != cfg.dim) throw ValidationFailure("code of dimension " + std::to_string(c.dim()) + " in input");
    if (!is_cube_tiling_code(c)) throw ValidationFailure("not a cube tiling code: " + join_words(c));
  }
  const int pairs = cfg.pairs > 0 ? cfg.pairs : 1 << (cfg.dim - 1);
  warn_alphabet(cfg.dim, pairs);
  const CountReport r = aggregate(codes, pairs, cfg.workers);
  std::cout << "# N=" << r.n << " M=" << r.m << " M_min=" << r.m_min << " laminations=" << r.laminations
            << " balanced=" << r.balanced << '\n';
  std::cout << report_csv(r, cfg.report);
  return 0;
}

int run_path(const RunConfig& cfg) {
  if (cfg.in.empty()) throw CLI::ValidationError("--in", "a start code is required");
  const Code start = read_single_code(cfg.in);
  if (!cfg.replay.empty()) {
    Code cur = start;
    std::istringstream moves(read_file(cfg.replay));
    std::string line;
    std::size_t n = 0;
    while (std::getline(moves, line)) {
      ++n;
      if (line.empty() || line[0] == '#') continue;
      try {
        cur = apply(cur, parse_move(line));
      } catch (const ParseError& e) {
        throw ParseError(n, e.column(), e.what());
      }
    }
    if (!cfg.to.empty() && cur != read_single_code(cfg.to)) throw ValidationFailure("replay does not reach target");
    std::cout << serialize(cur);
    return 0;
  }
  if (cfg.to.empty()) throw CLI::ValidationError("--to", "a target code is required");
  const Code target = read_single_code(cfg.to);
  for (const Code* c : {&start, &target}) {
    if (!is_cube_tiling_code(*c)) throw ValidationFailure("not a cube tiling code: " + join_words(*c));
  }
  PathOptions options;
  options.pairs = cfg.pairs;
  options.budget = cfg.budget;
  options.by_class = cfg.by_class;
  options.workers = cfg.workers;
  const auto path = find_path(start, target, options);
  if (!path) {
    std::cerr << "no path within a budget of " << cfg.budget << " codes\n";
    return 2;
  }
  for (const auto& m : *path) std::cout << format_move(m) << '\n';
  return 0;
}

int run_connect(const RunConfig& cfg) {
  const int pairs = cfg.pairs > 0 ? cfg.pairs : 2;
  const std::vector<Code> family = cfg.in.empty() ? all_tiling_codes(cfg.dim, pairs) : read_codes(cfg.in);
  const auto components = connectivity(family, pairs, cfg.budget, cfg.workers);
  std::size_t nodes = 0;
  for (const auto& c : components) nodes += c.size();
  std::cout << "codes: " << nodes << "\ncomponents: " << components.size() << '\n';
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::cout << "component " << i + 1 << ": " << components[i].size() << " codes, first "
              << join_words(components[i].front()) << '\n';
  }
  return 0;
}

int run_check(const RunConfig& cfg) {
  if (cfg.in.empty()) throw CLI::ValidationError("--in", "a code file is required");
  const Code c = parse_code(read_file(cfg.in));
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  const auto bad = validate_polybox(c);
  std::cout << "dimension: " << c.dim() << "\nwords: " << c.size() << "\npolybox: " << yes(bad.empty()) << '\n';
  for (const auto& [v, u] : bad) std::cout << "  not dichotomous: " << v.str() << ' ' << u.str() << '\n';
  if (!bad.empty()) return 2;
  const auto twins = find_twin_pairs(c);
  const auto layer = is_layered(c);
  std::cout << "partition-code: " << yes(is_partition_code(c)) << '\n'
            << "cube-tiling-code: " << yes(is_cube_tiling_code(c)) << '\n'
            << "proper: " << yes(c.proper()) << '\n'
            << "twin-pair-free: " << yes(twins.empty()) << '\n'
            << "layered: " << yes(layer.has_value());
  if (layer) std::cout << " (position " << layer->position + 1 << ", pair " << layer->pair_index << ')';
  std::cout << '\n';
  for (const auto& tp : twins) {
    std::cout << "  twin pair: " << tp.v.str() << ' ' << tp.u.str() << " at " << tp.position + 1 << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polybox and cube tiling code toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads (default TILEKIT_WORKERS or all cores)");
    sub->add_option("--out", cfg.out, "output file (directory for classify --full)");
  };
  auto* enum_cmd = app.add_subcommand("enum-partition", "twin-pair-free partition codes of dimension four");
  add_common(enum_cmd);

  auto* expand_cmd = app.add_subcommand("expand", "proper codes equivalent to partition codes");
  add_common(expand_cmd);
  expand_cmd->add_option("--in", cfg.in, "partition code file (default: the twenty reference codes)");
  expand_cmd->add_option("--pairs", cfg.pairs, "letter pairs available to every star")->required();
  expand_cmd->add_flag("--classes", cfg.classes_only, "one record per isomorphism class");

  auto* classify_cmd = app.add_subcommand("classify", "cube tiling codes up to isomorphism");
  add_common(classify_cmd);
  classify_cmd->add_option("--dim", cfg.dim, "dimension");
  classify_cmd->add_option("--pairs", cfg.pairs, "pairs per position (default 2^(dim-1))");
  classify_cmd->add_option("--in", cfg.in, "classify the codes of this file instead");
  classify_cmd->add_flag("--full", cfg.full, "level-by-level cylinder classification with checkpoints");

  auto* count_cmd = app.add_subcommand("count", "orbit counts of a complete class set");
  count_cmd->add_option("--workers", cfg.workers, "worker threads");
  count_cmd->add_option("--dim", cfg.dim, "dimension")->required();
  count_cmd->add_option("--pairs", cfg.pairs, "alphabet pairs (default 2^(dim-1))");
  count_cmd->add_option("--in,--from", cfg.in, "class records (JSONL)")->required();
  count_cmd->add_option("--report", cfg.report, "table")->check(CLI::IsMember({"orbits", "cylinders", "letters"}));

  auto* path_cmd = app.add_subcommand("path", "switch sequence between two cube tiling codes");
  path_cmd->add_option("--workers", cfg.workers, "worker threads");
  path_cmd->add_option("--in", cfg.in, "start code")->required();
  path_cmd->add_option("--to", cfg.to, "target code");
  path_cmd->add_option("--pairs", cfg.pairs, "cut pairs (default: largest used)");
  path_cmd->add_option("--budget", cfg.budget, "maximum visited codes");
  path_cmd->add_flag("--by-class", cfg.by_class, "stop at any code isomorphic to the target");
  path_cmd->add_option("--replay", cfg.replay, "apply a move log to the start code");

  auto* connect_cmd = app.add_subcommand("connect", "components of the switching graph");
  connect_cmd->add_option("--workers", cfg.workers, "worker threads");
  connect_cmd->add_option("--dim", cfg.dim, "dimension");
  connect_cmd->add_option("--pairs", cfg.pairs, "pairs per position (default 2)");
  connect_cmd->add_option("--in", cfg.in, "family of codes (default: all codes over the pairs)");
  connect_cmd->add_option("--budget", cfg.budget, "maximum codes in the closure");

  auto* check_cmd = app.add_subcommand("check", "audit a code file");
  check_cmd->add_option("--in", cfg.in, "code file")->required();

  try {
    app.parse(argc, argv);
    check_range(cfg);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*enum_cmd) return run_enum_partition(cfg);
    if (*expand_cmd) return run_expand(cfg);
    if (*classify_cmd) return run_classify(cfg);
    if (*count_cmd) return run_count(cfg);
    if (*path_cmd) return run_path(cfg);
    if (*connect_cmd) return run_connect(cfg);
    if (*check_cmd) return run_check(cfg);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
