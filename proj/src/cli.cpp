#include "chainsim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "chainsim/csv.hpp"
#include "chainsim/metrics.hpp"
#include "chainsim/protocols.hpp"

namespace chainsim::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string{s.substr(first, last - first + 1)};
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(const std::string& text, std::string_view what) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw UsageError("malformed " + std::string{what} + ": '" + text + "'");
  return value;
}

Point2D parse_point(const std::string& text, std::string_view what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError(std::string{what} + " must be 'x,y'");
  return {parse_number<double>(parts[0], what), parse_number<double>(parts[1], what)};
}

std::vector<Protocol> parse_protocol_list(const std::string& text) {
  std::vector<Protocol> out;
  for (const std::string& name : split(text, ',')) {
    try {
      const Protocol p = parse_protocol(name);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

int require_positive_int(const std::string& text, std::string_view what) {
  const int v = parse_number<int>(text, what);
  if (v <= 0) throw UsageError(std::string{what} + " must be positive");
  return v;
}

double require_positive_double(const std::string& text, std::string_view what) {
  const double v = parse_number<double>(text, what);
  if (!(v > 0.0)) throw UsageError(std::string{what} + " must be positive");
  return v;
}

std::filesystem::path with_suffix(const std::filesystem::path& base, const std::string& suffix) {
  std::filesystem::path ext = base.extension();
  if (ext.empty()) ext = ".csv";
  return base.parent_path() / (base.stem().string() + suffix + ext.string());
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const auto lo = parse_number<std::uint64_t>(trim(text.substr(0, dots)), "seed range");
    const auto hi = parse_number<std::uint64_t>(trim(text.substr(dots + 2)), "seed range");
    if (hi < lo) throw UsageError("seed range is empty: " + text);
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  for (const std::string& part : split(text, ',')) seeds.push_back(parse_number<std::uint64_t>(part, "seed"));
  return seeds;
}

void apply_config_text(std::istream& in, SimConfig& config, std::vector<Protocol>* protocols,
                       std::vector<std::uint64_t>* seeds) {
  std::string line;
  int line_no = 0;
  bool per_region_given = false;
  bool node_count_given = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(std::string_view{body}.substr(0, eq));
    const std::string value = trim(std::string_view{body}.substr(eq + 1));

    if (key == "field_width") {
      config.field_width = require_positive_double(value, key);
    } else if (key == "field_height") {
      config.field_height = require_positive_double(value, key);
    } else if (key == "node_count") {
      config.node_count = require_positive_int(value, key);
      node_count_given = true;
    } else if (key == "nodes_per_region") {
      config.nodes_per_region = require_positive_int(value, key);
      per_region_given = true;
    } else if (key == "max_rounds") {
      config.max_rounds = parse_number<int>(value, key);
      if (config.max_rounds < 0) throw UsageError("max_rounds must be non-negative");
    } else if (key == "initial_energy") {
      config.initial_energy = require_positive_double(value, key);
    } else if (key == "protocol") {
      const auto list = parse_protocol_list(value);
      config.protocol = list.front();
      if (protocols) *protocols = list;
    } else if (key == "rng_seed") {
      config.rng_seed = parse_number<std::uint64_t>(value, key);
      if (seeds) *seeds = {config.rng_seed};
    } else if (key == "static_bs") {
      config.static_bs = parse_point(value, key);
    } else if (key == "sojourn_locations") {
      const auto points = split(value, ';');
      if (points.size() != config.sojourn_locations.size())
        throw UsageError("sojourn_locations needs exactly 4 'x,y' points separated by ';'");
      for (std::size_t i = 0; i < points.size(); ++i)
        config.sojourn_locations[i] = parse_point(points[i], key);
    } else if (key == "sojourn_time") {
      config.sojourn_time = parse_number<double>(value, key);
    } else if (key == "threshold_mult") {
      config.threshold_mult = require_positive_double(value, key);
    } else if (key == "e_elec") {
      config.energy.e_elec = require_positive_double(value, key);
    } else if (key == "e_amp") {
      config.energy.e_amp = require_positive_double(value, key);
    } else if (key == "e_da") {
      config.energy.e_da = require_positive_double(value, key);
    } else if (key == "packet_bits") {
      config.energy.packet_bits = parse_number<Bits>(value, key);
    } else if (key == "da_factor") {
      config.energy.da_factor = parse_number<double>(value, key);
    } else if (key == "aggregation") {
      try {
        config.energy.aggregation = parse_aggregation(value.c_str());
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else {
      throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (node_count_given && !per_region_given)
    config.nodes_per_region = config.node_count / RegionId::kCount;
}

RunRequest parse_args(int argc, const char* const* argv) {
  CLI::App app{"Chain-based WSN routing simulator (MIEEPB, IEEPB, PEGASIS)", "chainsim"};

  std::string protocol_text, seed_text, seeds_text, rounds_text, nodes_text, energy_text;
  std::string packet_text, da_text, aggregation_text, threshold_text, bs_text, config_path,
      out_path;
  app.add_option("--protocol", protocol_text, "Comma-separated: mieepb,ieepb,pegasis");
  auto* seed_opt = app.add_option("--seed", seed_text, "Single RNG seed");
  auto* seeds_opt = app.add_option("--seeds", seeds_text, "Seed range a..b or list a,b,c");
  seed_opt->excludes(seeds_opt);
  app.add_option("--rounds", rounds_text, "Maximum rounds (default 5000)");
  app.add_option("--nodes", nodes_text, "Node count (default 100)");
  app.add_option("--initial-energy", energy_text, "Initial energy per node in J (default 0.5)");
  app.add_option("--packet-bits", packet_text, "Packet size in bits (default 2000)");
  app.add_option("--da-factor", da_text, "Aggregation compression factor (default 0.6)");
  app.add_option("--aggregation", aggregation_text, "fused (default) | append");
  app.add_option("--threshold-mult", threshold_text, "IEEPB long-link threshold multiplier");
  app.add_option("--bs", bs_text, "Static base station 'x,y' (default 0,0)");
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--out", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunRequest req;
  req.protocols = {Protocol::kMieepb};
  req.seeds = {req.config.rng_seed};

  if (!config_path.empty()) {
    std::ifstream in{config_path};
    if (!in) throw UsageError("cannot read config file: " + config_path);
    std::vector<Protocol> file_protocols;
    std::vector<std::uint64_t> file_seeds;
    apply_config_text(in, req.config, &file_protocols, &file_seeds);
    if (!file_protocols.empty()) req.protocols = file_protocols;
    if (!file_seeds.empty()) req.seeds = file_seeds;
  }

  if (!protocol_text.empty()) req.protocols = parse_protocol_list(protocol_text);
  if (!seed_text.empty()) req.seeds = {parse_number<std::uint64_t>(seed_text, "--seed")};
  if (!seeds_text.empty()) req.seeds = parse_seed_list(seeds_text);
  if (!rounds_text.empty()) {
    req.config.max_rounds = parse_number<int>(rounds_text, "--rounds");
    if (req.config.max_rounds < 0) throw UsageError("--rounds must be non-negative");
  }
  if (!nodes_text.empty()) {
    req.config.node_count = require_positive_int(nodes_text, "--nodes");
    req.config.nodes_per_region = req.config.node_count / RegionId::kCount;
  }
  if (!energy_text.empty())
    req.config.initial_energy = require_positive_double(energy_text, "--initial-energy");
  if (!packet_text.empty()) {
    req.config.energy.packet_bits = parse_number<Bits>(packet_text, "--packet-bits");
    if (req.config.energy.packet_bits <= 0) throw UsageError("--packet-bits must be positive");
  }
  if (!da_text.empty()) req.config.energy.da_factor = parse_number<double>(da_text, "--da-factor");
  if (!aggregation_text.empty()) {
    try {
      req.config.energy.aggregation = parse_aggregation(aggregation_text.c_str());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!threshold_text.empty())
    req.config.threshold_mult = require_positive_double(threshold_text, "--threshold-mult");
  if (!bs_text.empty()) req.config.static_bs = parse_point(bs_text, "--bs");
  req.output_path = out_path;

  if (req.protocols.empty()) throw UsageError("at least one protocol is required");
  if (req.seeds.empty()) throw UsageError("at least one seed is required");

  for (Protocol p : req.protocols) {
    SimConfig check = req.config;
    check.protocol = p;
    try {
      check.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string{"invalid configuration for "} + std::string{to_string(p)} +
                       ": " + e.what());
    }
  }
  req.config.protocol = req.protocols.front();
  return req;
}

std::vector<PlannedRun> plan_runs(const RunRequest& request) {
  std::vector<Protocol> protocols = request.protocols;
  std::sort(protocols.begin(), protocols.end(),
            [](Protocol a, Protocol b) { return to_string(a) < to_string(b); });
  std::vector<std::uint64_t> seeds = request.seeds;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  const bool single = protocols.size() == 1 && seeds.size() == 1;
  std::vector<PlannedRun> runs;
  for (Protocol p : protocols) {
    for (std::uint64_t s : seeds) {
      std::filesystem::path path =
          single ? request.output_path
                 : with_suffix(request.output_path,
                               "_" + std::string{to_string(p)} + "_s" + std::to_string(s));
      runs.push_back(PlannedRun{p, s, std::move(path)});
    }
  }
  return runs;
}

std::filesystem::path summary_path(const RunRequest& request) {
  return with_suffix(request.output_path, "_summary");
}

int execute(const RunRequest& request, std::ostream& log) {
  const auto runs = plan_runs(request);
  std::vector<std::optional<SummaryRow>> results(runs.size());
  std::vector<std::string> errors(runs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      const PlannedRun& run = runs[i];
      try {
        SimConfig config = request.config;
        config.protocol = run.protocol;
        config.rng_seed = run.seed;
        const auto rows = run_simulation(config);
        std::ofstream out{run.csv_path, std::ios::binary | std::ios::trunc};
        if (!out) throw std::runtime_error("cannot write " + run.csv_path.string());
        write_round_csv(out, rows);
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + run.csv_path.string());
        results[i] = SummaryRow{run.protocol, run.seed,
                                rows.empty() ? SummaryMetrics{} : summarize(rows, config)};
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, runs.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  int status = 0;
  std::vector<SummaryRow> summary;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (results[i]) {
      summary.push_back(*results[i]);
    } else {
      log << "run " << to_string(runs[i].protocol) << " seed " << runs[i].seed
          << " failed: " << errors[i] << '\n';
      status = 1;
    }
  }

  const auto spath = summary_path(request);
  std::ofstream out{spath, std::ios::binary | std::ios::trunc};
  if (!out) {
    log << "cannot write " << spath.string() << '\n';
    return 1;
  }
  write_summary_csv(out, summary);
  out.flush();
  if (!out) {
    log << "write failed for " << spath.string() << '\n';
    return 1;
  }
  return status;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunRequest request;
  try {
    request = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for options\n";
    return 2;
  }
  return execute(request, err);
}

}  // namespace chainsim::cli
