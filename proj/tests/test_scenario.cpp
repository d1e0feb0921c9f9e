#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "njc/error.hpp"
#include "njc/runner.hpp"
#include "njc/scenario.hpp"

using namespace njc;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("njc_test_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const char* kMinimal = R"(# minimal coherent run
name = demo
g = 0.001
k = 0.0001
nbar = 30
delta = 0.01
t_end = 1000
samples = 11
outputs = [inversion, mandel_q]
)";

}  // namespace

TEST_CASE("parse a minimal document with defaults") {
  const Scenario s = parse_scenario(kMinimal);
  CHECK(s.name == "demo");
  CHECK(s.params.omega() == 1.0);
  CHECK(s.params.detuning() == doctest::Approx(0.01).epsilon(1e-13));
  CHECK(s.atom == AtomInit::excited);
  CHECK(s.field == FieldKind::coherent);
  CHECK(s.time == TimeGrid{0.0, 1000.0, 11});
  CHECK(s.outputs == std::vector<Observable>{Observable::inversion, Observable::mandel_q});
  CHECK(s.cutoff() == FockCutoff::for_coherent(30.0));
  CHECK(s.initial_condition().is_excited());
  CHECK(s.time.points()[3] == doctest::Approx(300.0));
}

TEST_CASE("parse errors carry line and field") {
  const auto expect_parse = [](const std::string& text, int line, const std::string& field) {
    try {
      parse_scenario(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.field() == field);
    }
  };
  expect_parse("name = x\ncolour = red\n", 2, "colour");
  expect_parse("name = x\nname = y\n", 2, "name");
  expect_parse("name = x\n\n# c\ng = abc\nk = 0\nnbar = 1\n", 4, "g");
  expect_parse("name = x\ng = 1\nk = 0\nnbar = 1\noutputs = inversion, entropy\n", 5, "outputs");
  expect_parse("name = x\njust some words\n", 2, "");
  expect_parse("name = x\ng = 0.1\nk = 0\nnbar = 1\nsamples = 2.5\n", 5, "samples");
  expect_parse("name = x\ng = 0.1\nk = 0\nnbar = 1\natom = sideways\n", 5, "atom");
}

TEST_CASE("validation errors") {
  CHECK_THROWS_WITH_AS(parse_scenario(""), doctest::Contains("name"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario("name = x\ng = 0.1\nk = -0.1\nnbar = 3\n"),
                       doctest::Contains("0 <= k <= 1"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("name = x\ng = 0.1\nk = 1.5\nnbar = 3\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("name = x\ng = 0.1\nk = 0.1\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("name = x\ng = 0.1\nk = 0.1\nnbar = 3\nr = 1\ndelta = 0\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_scenario("name = x\ng = 0.1\nk = 0.1\nnbar = 3\nsamples = 0\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_scenario("name = x\ng = 0.1\nk = 0.1\nnbar = 3\nt_start = 5\nt_end = 1\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_scenario("name = x\ng = 0.1\nk = 0.1\nnbar = 3\nt_start = -1\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_scenario("name = x\ng = 0.1\nk = 0\nnbar = 3\ndelta = critical\n"),
                  ValidationError);
  CHECK_THROWS_AS(
      parse_scenario("name = x\ng = 0.1\nk = 0\nnbar = 3\natom = superposition\natom_ce = 1, 0\n"
                     "atom_cg = 1, 0\n"),
      ValidationError);
  CHECK_THROWS_AS(parse_scenario("name = x\ng = 0.1\nk = 0\nnbar = 3\natom_ce = 1, 0\n"),
                  ValidationError);
}

TEST_CASE("critical detuning keyword and superposition atoms") {
  const Scenario s = parse_scenario(
      "name = sup\ng = 0.001\nk = 0.0001\nnbar = 30\ndelta = critical\natom = superposition\n"
      "atom_ce = 0.6, 0\natom_cg = 0, 0.8\nfield_phase = 0.5\n");
  CHECK(s.params.detuning() == doctest::Approx(0.016061).epsilon(1e-9));
  CHECK(s.atom_g == cplx(0, 0.8));
  CHECK_FALSE(s.initial_condition().is_excited());
  CHECK(parse_scenario(serialize_scenario(s)) == s);

  const Scenario fock =
      parse_scenario("name = f\ng = 0.01\nk = 0.5\nfield = fock\nfock_n = 3\natom = ground\n");
  CHECK(fock.initial_field().mean_photon_number() == 3.0);
  CHECK(fock.atom_e == cplx(0.0));
}

TEST_CASE("presets") {
  const auto presets = list_presets();
  std::set<std::string> names;
  for (const auto& p : presets) {
    CHECK(names.insert(p.name).second);
    CHECK_FALSE(p.description.empty());
  }
  for (const char* required : {"fig1", "fig2", "fig3a", "fig3b", "fig3c", "fig4", "fig5", "fig6"}) {
    CHECK(names.count(required) == 1);
  }
  CHECK_FALSE(preset("fig7"));

  const Scenario f3b = *preset("fig3b");
  CHECK(f3b.params.g() == 1e-3);
  CHECK(f3b.params.k() == 1e-4);
  CHECK(f3b.params.omega() == 1.0);
  CHECK(f3b.nbar == 30.0);
  CHECK(f3b.params.detuning() == doctest::Approx(0.016061).epsilon(1e-12));
  CHECK(preset("fig3a")->params.detuning() == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(preset("fig6")->params.detuning() == doctest::Approx(0.016061).epsilon(1e-12));
  CHECK(preset("fig4")->outputs == std::vector<Observable>{Observable::squeezing});
  CHECK(preset("fig5")->outputs == std::vector<Observable>{Observable::mandel_q});

  for (const auto& p : presets) {
    CAPTURE(p.name);
    const Scenario s = *preset(p.name);
    CHECK(parse_scenario(serialize_scenario(s)) == s);
    CHECK(s.initial_field().tail_mass() < 1e-12);
  }
}

TEST_CASE("overrides") {
  const Overrides o{.n_max = 90, .samples = 5, .delta = 0.02, .g = 0.002, .k = 0.5, .nbar = 20.0};
  const Scenario s = apply_overrides(*preset("fig3a"), o);
  CHECK(s.n_max == 90);
  CHECK(s.time.samples == 5);
  CHECK(s.params.detuning() == doctest::Approx(0.02).epsilon(1e-13));
  CHECK(s.params.g() == 0.002);
  CHECK(s.params.k() == 0.5);
  CHECK(s.nbar == 20.0);
  CHECK(apply_overrides(*preset("fig3a"), {}) == *preset("fig3a"));
  CHECK_THROWS_AS(apply_overrides(*preset("fig3a"), Overrides{.k = 2.0}), ValidationError);
  CHECK_THROWS_AS(apply_overrides(*preset("fig3a"), Overrides{.samples = 0}), ValidationError);
  // A cutoff too small for the field is reported when the field is built.
  CHECK_THROWS_AS(apply_overrides(*preset("fig3a"), Overrides{.n_max = 40}).initial_field(),
                  TailTooHeavy);
}

TEST_CASE("CSV formatting") {
  CsvTable t{"demo", {"n", "x"}, {true, false}, {{3, 0.1}, {4, -2.5e-300}, {5, -0.0}}};
  CHECK(format_csv(t) ==
        "n,x\n3,1.0000000000000001e-01\n4,-2.5000000000000000e-300\n5,0.0000000000000000e+00\n");
  t.rows.push_back({6, std::nan("")});
  CHECK_THROWS_AS(format_csv(t), NumericalError);
  t.rows.back() = {6, INFINITY};
  CHECK_THROWS_AS(format_csv(t), NumericalError);
}

TEST_CASE("run the spectrum and Rabi presets") {
  TempDir dir("tables");
  run_scenario(*preset("fig1"), dir.path);
  const auto fig1 = lines_of(read_file(dir.path / "fig1_spectrum.csv"));
  CHECK(fig1.front() == "delta,n,e_plus,e_minus,bare_e,bare_g");
  CHECK(fig1.size() == 1 + 301 * 2);

  run_scenario(*preset("fig2"), dir.path);
  const auto fig2 = lines_of(read_file(dir.path / "fig2_rabi.csv"));
  CHECK(fig2.front() == "n,omega_exact,omega_approx,p_n");
  CHECK(fig2.size() == 1 + 201);
  CHECK(fig2[1].rfind("0,", 0) == 0);
  CHECK(fig2.back().rfind("200,", 0) == 0);
}

TEST_CASE("runs are deterministic and the manifest is complete") {
  Scenario s = *preset("fig6");
  s.outputs.push_back(Observable::squeezing);
  s.outputs.push_back(Observable::inversion);
  s.outputs.push_back(Observable::photon_distribution);
  s.time.samples = 21;

  TempDir a("det_a"), b("det_b");
  const RunSummary ra = run_scenario(s, a.path);
  run_scenario(s, b.path);
  CHECK(ra.files.size() == s.outputs.size() + 1);
  for (Observable o : s.outputs) {
    const std::string file = s.name + "_" + std::string(to_string(o)) + ".csv";
    CAPTURE(file);
    const std::string first = read_file(a.path / file);
    CHECK_FALSE(first.empty());
    CHECK(first == read_file(b.path / file));
  }
  const auto inv = lines_of(read_file(a.path / "fig6_inversion.csv"));
  CHECK(inv.front() == "t,w,w_t");
  CHECK(inv.size() == 22);
  const auto dist = lines_of(read_file(a.path / "fig6_photon_distribution.csv"));
  CHECK(dist.size() == 1 + 21 * static_cast<std::size_t>(ra.n_max + 1));

  const auto manifest = nlohmann::json::parse(read_file(a.path / "fig6_manifest.json"));
  for (const char* key : {"scenario", "cutoff", "tail_mass", "max_t", "wall_seconds"}) {
    CHECK(manifest.contains(key));
  }
  CHECK(manifest["cutoff"] == ra.n_max);
  CHECK(manifest["tail_mass"].get<double>() < 1e-12);
  CHECK(manifest["max_t"].get<double>() == 2e5);
  CHECK(parse_scenario(manifest["scenario"]["config"].get<std::string>()) == s);
}

TEST_CASE("overlap output for a non-coherent start uses amplitudes") {
  Scenario s = parse_scenario(
      "name = fockrun\ng = 0.01\nk = 0.2\nfield = fock\nfock_n = 4\natom = ground\n"
      "t_end = 100\nsamples = 3\noutputs = overlap\n");
  const auto tables = compute_outputs(s);
  REQUIRE(tables.size() == 1);
  CHECK(tables[0].rows[0][1] == doctest::Approx(1.0).epsilon(1e-14));
  for (const auto& row : tables[0].rows) CHECK((row[1] >= 0.0 && row[1] <= 1.0 + 1e-12));
}

TEST_CASE("unwritable output directory") {
  TempDir dir("io");
  fs::create_directories(dir.path);
  std::ofstream(dir.path / "blocker") << "x";
  CHECK_THROWS_AS(run_scenario(*preset("fig2"), dir.path / "blocker"), IoError);
}
