/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "loopda/config.hpp"
#include "loopda/csv.hpp"
#include "loopda/errors.hpp"
#include "loopda/experiment.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("config parses keys, comments, and blank lines") {
  std::istringstream in(
      "# a comment\n"
      "\n"
      "alpha = 1.5\n"
      "  name =  ring \n"
      "count=42\n"
      "flag = true\n");
  const auto cfg = loopda::Config::parse(in);
  CHECK(cfg.get_double("alpha") == 1.5);
  CHECK(cfg.get_string("name") == "ring");
  CHECK(cfg.get_int("count") == 42);
  CHECK(cfg.get_bool("flag", false));
  CHECK_FALSE(cfg.has("missing"));
  CHECK(cfg.get_double("missing", 7.0) == 7.0);
}

TEST_CASE("config reports the offending line number") {
  std::istringstream in("good = 1\nbad line without equals\n");
  try {
    (void)loopda::Config::parse(in);
    FAIL("expected ConfigError");
  } catch (const loopda::ConfigError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("typed getters validate their values") {
  std::istringstream in("x = abc\ny = 1.5\n");
  const auto cfg = loopda::Config::parse(in);
  CHECK_THROWS_AS((void)cfg.get_double("x"), loopda::ConfigError);
  CHECK_THROWS_AS((void)cfg.get_int("y"), loopda::ConfigError);
  CHECK_THROWS_AS((void)cfg.get_string("zz"), loopda::ConfigError);
}

TEST_CASE("config round-trips through its text form") {
  loopda::Config cfg;
  cfg.set("a", 1.25);
  cfg.set("b", std::string("hello"));
  cfg.set("c", 7);
  std::ostringstream out;
  cfg.write(out);
  std::istringstream in(out.str());
  const auto back = loopda::Config::parse(in);
  CHECK(back.entries() == cfg.entries());
}

TEST_CASE("csv files use header, comma, dot decimal, and LF") {
  const std::string path = temp_path("loopda_csv_test.csv");
  {
    loopda::CsvWriter csv(path, {"a", "b"});
    csv.row({1.5, -2.25});
    csv.row({3.0, 0.0001});
  }
  const std::string text = read_file(path);
  CHECK(text == "a,b\n1.5,-2.25\n3,0.0001\n");
  std::filesystem::remove(path);
}

TEST_CASE("csv rejects width mismatches") {
  const std::string path = temp_path("loopda_csv_test2.csv");
  loopda::CsvWriter csv(path, {"a", "b"});
  CHECK_THROWS_AS(csv.row({1.0}), loopda::ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("csv doubles survive a parse round trip") {
  const double v = 0.1 + 0.2;  // not exactly representable as 0.3
  const std::string s = loopda::CsvWriter::format(v);
  CHECK(std::stod(s) == v);
}

TEST_CASE("experiment config round-trips") {
  loopda::ExperimentConfig cfg;
  cfg.model = loopda::ModelId::Ring;
  cfg.ring = loopda::ring_chaotic_params(48);
  cfg.seed = 1234;
  cfg.window = 10.0;
  cfg.stepper.dt = 0.02;
  cfg.filter = loopda::FilterId::Letkf;
  cfg.shift_mode = loopda::ShiftMode::Adaptive;
  cfg.inflation.mult = 1.1;
  cfg.obs_spacing = 5;

  const loopda::Config flat = loopda::experiment_to_config(cfg);
  const loopda::ExperimentConfig back = loopda::experiment_from_config(flat);
  CHECK(loopda::experiment_to_config(back).entries() == flat.entries());
  CHECK(back.ring.n_cells == 48);
  CHECK(back.seed == 1234);
  CHECK(back.shift_mode == loopda::ShiftMode::Adaptive);
  CHECK((back.ring.wall_profile - cfg.ring.wall_profile)
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("manifests parse back into the identical config") {
  loopda::ExperimentConfig cfg;
  cfg.seed = 77;
  cfg.out_dir = temp_path("loopda_manifest_test");
  loopda::write_manifest(cfg, "twin", 1.25);

  const auto loaded =
      loopda::load_config_or_manifest(cfg.out_dir + "/manifest.json");
  CHECK(loaded.entries() == loopda::experiment_to_config(cfg).entries());
  std::filesystem::remove_all(cfg.out_dir);
}

TEST_CASE("unknown model or filter names are config errors") {
  loopda::Config cfg;
  cfg.set("model", std::string("navier_stokes"));
  CHECK_THROWS_AS((void)loopda::experiment_from_config(cfg),
                  loopda::ConfigError);
  loopda::Config cfg2;
  cfg2.set("filter", std::string("particle"));
  CHECK_THROWS_AS((void)loopda::experiment_from_config(cfg2),
                  loopda::ConfigError);
}
