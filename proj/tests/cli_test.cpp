#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "chainsim/cli.hpp"
#include "chainsim/csv.hpp"

using namespace chainsim;
using namespace chainsim::cli;
namespace fs = std::filesystem;

namespace {

RunRequest parse(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"chainsim"};
  argv.insert(argv.end(), args.begin(), args.end());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("chainsim_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in{p, std::ios::binary};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("single run with defaults elsewhere") {
  const RunRequest req = parse({"--protocol", "mieepb", "--seed", "7", "--rounds", "5000", "--out", "run.csv"});
  CHECK(req.protocols == std::vector<Protocol>{Protocol::kMieepb});
  CHECK(req.seeds == std::vector<std::uint64_t>{7});
  CHECK(req.config.max_rounds == 5000);
  CHECK(req.config.node_count == 100);
  CHECK(req.config.initial_energy == 0.5);
  CHECK(req.config.energy.packet_bits == 2000);
  CHECK(req.config.energy.da_factor == 0.6);
  CHECK(req.config.static_bs == Point2D{0, 0});
  CHECK(req.output_path == fs::path{"run.csv"});

  const auto runs = plan_runs(req);
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].csv_path == fs::path{"run.csv"});
  CHECK(summary_path(req) == fs::path{"run_summary.csv"});
}

TEST_CASE("protocol list crossed with a seed range") {
  const RunRequest req = parse({"--protocol", "mieepb,ieepb,pegasis", "--seeds", "1..20", "--out", "out/cmp.csv"});
  const auto runs = plan_runs(req);
  REQUIRE(runs.size() == 60);
  CHECK(runs.front().protocol == Protocol::kIeepb);
  CHECK(runs.front().seed == 1);
  CHECK(runs.back().protocol == Protocol::kPegasis);
  CHECK(runs.back().seed == 20);
  CHECK(runs.front().csv_path == fs::path{"out/cmp_ieepb_s1.csv"});
}

TEST_CASE("seed list syntax") {
  CHECK(parse_seed_list("3") == std::vector<std::uint64_t>{3});
  CHECK(parse_seed_list("2..4") == std::vector<std::uint64_t>{2, 3, 4});
  CHECK(parse_seed_list("9, 1,5") == std::vector<std::uint64_t>{9, 1, 5});
  CHECK_THROWS_AS(parse_seed_list("5..2"), UsageError);
  CHECK_THROWS_AS(parse_seed_list("x"), UsageError);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse({"--rounds", "-5", "--out", "a.csv"}), UsageError);
  CHECK_THROWS_AS(parse({"--rounds", "12x", "--out", "a.csv"}), UsageError);
  CHECK_THROWS_AS(parse({"--protocol", "leach", "--out", "a.csv"}), UsageError);
  CHECK_THROWS_AS(parse({"--bogus", "1", "--out", "a.csv"}), UsageError);
  CHECK_THROWS_AS(parse({"--protocol", "mieepb"}), UsageError);
  CHECK_THROWS_AS(parse({"--seed", "1", "--seeds", "1..3", "--out", "a.csv"}), UsageError);
  CHECK_THROWS_AS(parse({"--nodes", "99", "--out", "a.csv"}), UsageError);
  CHECK_THROWS_AS(parse({"--bs", "3", "--out", "a.csv"}), UsageError);
  CHECK_THROWS_AS(parse({"--da-factor", "2", "--out", "a.csv"}), UsageError);
  CHECK_NOTHROW(parse({"--nodes", "99", "--protocol", "ieepb", "--out", "a.csv"}));

  std::ostringstream out, err;
  const char* argv[] = {"chainsim", "--rounds", "-5", "--out", "a.csv"};
  CHECK(chainsim::cli::main(5, argv, out, err) == 2);
  CHECK(err.str().find("usage error") != std::string::npos);

  const char* help[] = {"chainsim", "--help"};
  std::ostringstream hout;
  CHECK(chainsim::cli::main(2, help, hout, err) == 0);
  CHECK(hout.str().find("--protocol") != std::string::npos);
}

TEST_CASE("flags override the config file, which overrides defaults") {
  const fs::path dir = scratch_dir("precedence");
  const fs::path cfg = dir / "sim.cfg";
  {
    std::ofstream f{cfg};
    f << "# scenario\n"
         "max_rounds = 1200\n"
         "initial_energy = 0.25\n"
         "protocol = ieepb, pegasis\n"
         "rng_seed = 5\n"
         "static_bs = 50, 150\n"
         "field_height = 200\n"
         "sojourn_locations = 33,25; 33,75; 66,25; 66,75\n"
         "threshold_mult = 1.5\n"
         "aggregation = append\n";
  }
  const RunRequest req = parse({"--config", cfg.c_str(), "--rounds", "300", "--out", "x.csv"});
  CHECK(req.config.max_rounds == 300);
  CHECK(req.config.initial_energy == 0.25);
  CHECK(req.config.static_bs == Point2D{50, 150});
  CHECK(req.config.threshold_mult == 1.5);
  CHECK(req.config.energy.aggregation == Aggregation::kAppend);
  CHECK(req.config.energy.e_elec == 50e-9);
  CHECK(req.protocols == std::vector<Protocol>{Protocol::kIeepb, Protocol::kPegasis});
  CHECK(req.seeds == std::vector<std::uint64_t>{5});

  std::istringstream bad{"nodes_per_regions = 3\n"};
  SimConfig c;
  CHECK_THROWS_AS(apply_config_text(bad, c), UsageError);
  std::istringstream three{"sojourn_locations = 1,1; 2,2; 3,3\n"};
  CHECK_THROWS_AS(apply_config_text(three, c), UsageError);
  std::istringstream noeq{"max_rounds 4\n"};
  CHECK_THROWS_AS(apply_config_text(noeq, c), UsageError);
  CHECK_THROWS_AS(parse({"--config", (dir / "missing.cfg").c_str(), "--out", "x.csv"}), UsageError);
}

TEST_CASE("execute writes per-run CSVs and a sorted summary, byte-identical on repeat") {
  const fs::path dir = scratch_dir("execute");
  const std::string out_a = (dir / "a" / "cmp.csv").string();
  const std::string out_b = (dir / "b" / "cmp.csv").string();
  fs::create_directories(dir / "a");
  fs::create_directories(dir / "b");
  std::ostringstream log;

  for (const std::string& out : {out_a, out_b}) {
    const RunRequest req = parse({"--protocol", "pegasis,mieepb", "--seeds", "3,1", "--rounds", "200", "--out", out.c_str()});
    CHECK(execute(req, log) == 0);
  }
  CHECK(log.str().empty());

  for (const char* name : {"cmp_mieepb_s1.csv", "cmp_mieepb_s3.csv", "cmp_pegasis_s1.csv",
                           "cmp_pegasis_s3.csv", "cmp_summary.csv"}) {
    const std::string a = slurp(dir / "a" / name);
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(dir / "b" / name));
  }

  std::istringstream run{slurp(dir / "a" / "cmp_mieepb_s1.csv")};
  std::string line;
  std::getline(run, line);
  CHECK(line == kRoundCsvHeader);
  int rows = 0;
  while (std::getline(run, line)) ++rows;
  CHECK(rows == 200);

  std::istringstream summary{slurp(dir / "a" / "cmp_summary.csv")};
  std::getline(summary, line);
  CHECK(line == kSummaryCsvHeader);
  std::vector<std::string> keys;
  while (std::getline(summary, line)) keys.push_back(line.substr(0, line.find(',', line.find(',') + 1)));
  CHECK(keys == std::vector<std::string>{"mieepb,1", "mieepb,3", "pegasis,1", "pegasis,3"});
}

TEST_CASE("unwritable output path fails with non-zero status") {
  const RunRequest req = parse({"--rounds", "5", "--out", "/nonexistent-dir/deeper/run.csv"});
  std::ostringstream log;
  CHECK(execute(req, log) != 0);
  CHECK_FALSE(log.str().empty());
}

TEST_CASE("round CSV uses round-trip float formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(0.49987654321012345)) == 0.49987654321012345);
  RoundMetrics m;
  m.round = 3;
  m.alive = 97;
  m.dead_cumulative = 3;
  m.residual_total = 48.25;
  m.energy_spent = 1.0 / 3.0;
  m.bits_to_sink = 8000;
  m.packets_to_sink = 4;
  m.bits_by_region = {2000, 2000, 2000, 2000};
  std::ostringstream out;
  const std::vector<RoundMetrics> rows{m};
  write_round_csv(out, rows);
  CHECK(out.str() == std::string{kRoundCsvHeader} +
                         "\n3,97,3,48.25,0.3333333333333333,8000,4,2000,2000,2000,2000\n");
}
