#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qmem/config.hpp"
#include "qmem/error.hpp"
#include "qmem/qasm.hpp"
#include "qmem/report.hpp"
#include "qmem/runner.hpp"
#include "qmem/svg.hpp"

using namespace qmem;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qmem_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QMEM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunConfig small_coupled() {
  RunConfig c = preset("fig7");
  c.periods = 2;
  c.steps_per_period = 100;
  return c;
}

}  // namespace

TEST(Config, ParseAngle) {
  EXPECT_NEAR(parse_angle("pi/4"), kPi / 4, 1e-15);
  EXPECT_NEAR(parse_angle("3*pi/8"), 3 * kPi / 8, 1e-15);
  EXPECT_NEAR(parse_angle("-pi"), -kPi, 1e-15);
  EXPECT_NEAR(parse_angle(" 0.25 "), 0.25, 1e-15);
  EXPECT_THROW(parse_angle("pi/0"), ConfigError);
  EXPECT_THROW(parse_angle("two"), ConfigError);
  EXPECT_THROW(parse_angle("3pi"), ConfigError);
}

TEST(Config, ParseCommentsAndErrors) {
  const RunConfig c = parse_config(
      "# comment\n"
      "mode = coupled   # trailing\n"
      "\n"
      "a1 = pi/8\n"
      "gamma0 = 0.05\n"
      "interaction = controlled_rotation\n"
      "axis = x\n"
      "control = 2\n");
  EXPECT_EQ(c.mode, RunMode::coupled);
  EXPECT_NEAR(c.init1.a, kPi / 8, 1e-15);
  EXPECT_EQ(c.gamma0_1, 0.05);
  EXPECT_EQ(c.gamma0_2, 0.05);
  EXPECT_EQ(c.interaction.kind, InteractionKind::controlled_rotation);
  EXPECT_EQ(c.interaction.control, Subsystem::second);
  EXPECT_THROW(parse_config("bogus = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("periods\n"), ConfigError);
  EXPECT_THROW(parse_config("periods = -3\n"), ConfigError);
  EXPECT_THROW(parse_config("control = 3\n"), ConfigError);
  EXPECT_THROW(parse_config("axis = w\n"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/qmem.cfg"), IoError);
}

TEST(Config, ValidateMapsModuleErrors) {
  RunConfig c = preset("fig4");
  c.gamma0_1 = -1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = preset("fig4");
  c.steps_per_period = 4;
  EXPECT_THROW(c.validate(), ConfigError);
  c = preset("fig4");
  c.init1.a = 2.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = preset("fig4");
  c.shots.shots = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Presets, Catalog) {
  EXPECT_EQ(list_presets().size(), 12u);
  for (const auto& p : list_presets()) EXPECT_NO_THROW(preset(p.name).validate()) << p.name;
  EXPECT_THROW(preset("fig99"), ConfigError);

  EXPECT_EQ(preset("fig1a").gamma0_1, 0.2);
  EXPECT_EQ(preset("fig1b").gamma0_1, 0.02);
  EXPECT_NEAR(preset("fig1a").init1.a, kPi / 8, 1e-15);
  EXPECT_EQ(preset("fig1a").plot_normalization, Normalization::initial);
  const RunConfig f4 = preset("fig4");
  EXPECT_EQ(f4.shots.shots, 5000u);
  EXPECT_EQ(f4.steps_per_period, 30u);
  EXPECT_EQ(f4.gamma0_1, 0.4);
  const RunConfig f7 = preset("fig7");
  EXPECT_EQ(f7.interaction.kind, InteractionKind::native);
  EXPECT_EQ(f7.interaction.axis, Axis::y);
  EXPECT_EQ(f7.interaction.delta, 0.1);
  EXPECT_EQ(f7.periods, 20u);
  EXPECT_EQ(f7.init1.b, 0.0);
  EXPECT_NE(f7.note.find("paper-unspecified"), std::string::npos);
  EXPECT_EQ(preset("fig9").interaction.kind, InteractionKind::controlled_rotation);
  EXPECT_EQ(preset("appx_zz").interaction.axis, Axis::z);
  EXPECT_EQ(preset("appx_pswap").interaction.kind, InteractionKind::partial_swap);
}

TEST(Presets, RoundTripThroughSerialization) {
  for (const auto& p : list_presets()) {
    RunConfig c = preset(p.name);
    const RunConfig back = parse_config(serialize_config(c));
    EXPECT_EQ(serialize_config(back), serialize_config(c)) << p.name;
    // Identical run output on a shortened grid.
    c.periods = 1;
    c.steps_per_period = 40;
    const RunConfig d = parse_config(serialize_config(c));
    std::ostringstream a, b;
    write_trace_csv(a, execute(c).trace);
    write_trace_csv(b, execute(d).trace);
    EXPECT_EQ(a.str(), b.str()) << p.name;
  }
}

TEST(Report, TraceAndMetricsCsv) {
  RunConfig c = preset("fig4");
  c.shots.mode = ShotMode::exact;
  const RunResult r = execute(c);
  std::ostringstream os;
  write_trace_csv(os, r.trace);
  const std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "t,sx_I,sy_I,sx_S,sy_S,gamma,V,I");
  EXPECT_EQ(count(s, "\n"), 122u);
  EXPECT_EQ(format_value(0.1234567890123456), "0.123456789012");
  EXPECT_EQ(format_value(-2.0), "-2");

  std::ostringstream ms;
  write_metrics_csv(ms, r.metrics[0]);
  EXPECT_EQ(ms.str().substr(0, ms.str().find('\n')), "period,S,P,F,pinch_distance");
  EXPECT_EQ(count(ms.str(), "\n"), 5u);

  const RunResult rc = execute(small_coupled());
  std::ostringstream cs;
  write_trace_csv(cs, rc.trace);
  EXPECT_EQ(cs.str().substr(0, cs.str().find('\n')),
            "t,sx_I,sy_I,sx_S,sy_S,gamma,V,I,sx2_I,sy2_I,sx2_S,sy2_S,gamma2,V2,I2,concurrence");
}

TEST(Svg, StructureAndEscaping) {
  svg::Plot p;
  p.title = "a < b & c";
  p.series.push_back({"one", {0, 1, 2}, {0, 1, 0}, svg::palette(0)});
  p.series.push_back({"two", {0, 1, 2}, {1, 0, 1}, svg::palette(1)});
  p.markers.push_back({0.0, 0.0, "origin"});
  const std::string s = svg::render(p);
  EXPECT_EQ(count(s, "<polyline"), 2u);
  EXPECT_NE(s.find("a &lt; b &amp; c"), std::string::npos);
  EXPECT_EQ(count(s, "<svg"), 1u);
  EXPECT_EQ(count(s, "</svg>"), 1u);
  EXPECT_EQ(count(s, "<text"), count(s, "</text>"));
  p.series.push_back({"bad", {0, 1}, {0}, svg::palette(2)});
  EXPECT_THROW(svg::render(p), DimensionError);
}

TEST(Runner, ArtifactsAndDeterminism) {
  const RunConfig c = preset("fig4");
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  const auto files = write_artifacts(execute(c), a);
  write_artifacts(execute(c), b);
  EXPECT_EQ(files.size(), 5u);
  for (const char* f : {"trace.csv", "metrics.csv", "config.txt", "iv_1.svg", "timeseries_1.svg"}) {
    ASSERT_TRUE(fs::exists(a / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  EXPECT_EQ(count(slurp(a / "iv_1.svg"), "<polyline"), 1u);
  EXPECT_EQ(count(slurp(a / "timeseries_1.svg"), "<polyline"), 2u);

  RunConfig other = c;
  other.shots.seed += 1;
  const fs::path d = scratch("det_c");
  write_artifacts(execute(other), d);
  EXPECT_NE(slurp(a / "trace.csv"), slurp(d / "trace.csv"));

  const fs::path cdir = scratch("coupled");
  write_artifacts(execute(small_coupled()), cdir);
  for (const char* f : {"metrics_2.csv", "iv_2.svg", "concurrence_formfactor.svg"}) EXPECT_TRUE(fs::exists(cdir / f));
  EXPECT_EQ(count(slurp(cdir / "concurrence_formfactor.svg"), "<polyline"), 3u);

  std::ostringstream summary;
  print_summary(execute(small_coupled()), summary);
  EXPECT_NE(summary.str().find("memristor 2"), std::string::npos);
  EXPECT_NE(summary.str().find("entanglement events"), std::string::npos);

  RunConfig tiny = c;
  tiny.total_steps = 1;
  EXPECT_THROW(execute(tiny), ConfigError);
  EXPECT_THROW(write_artifacts(execute(c), "/proc/qmem_cannot_write"), IoError);
}

TEST(Runner, DeltaScanZeroCouplingAndOrder) {
  RunConfig c = small_coupled();
  // The pinch tolerance needs the preset grid; 100 steps/period leaves FD error above it.
  c.steps_per_period = 1000;
  const double deltas[] = {0.0, 0.2, 0.1};
  const fs::path out = scratch("scan");
  const auto rows = delta_scan(c, deltas, out, 2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].delta, 0.0);
  EXPECT_EQ(rows[1].delta, 0.2);
  EXPECT_TRUE(rows[0].pinch_pass[0]);
  EXPECT_TRUE(rows[0].pinch_pass[1]);
  EXPECT_EQ(rows[0].deaths, 0u);
  RunConfig z = c;
  z.interaction.delta = 0.0;
  for (double v : execute(z).trace.concurrence) EXPECT_LT(v, 1e-10);
  EXPECT_TRUE(fs::exists(out / "scan_summary.csv"));
  EXPECT_TRUE(fs::exists(out / "delta_2" / "trace.csv"));
  EXPECT_EQ(count(slurp(out / "scan_summary.csv"), "\n"), 4u);

  const auto d = default_scan_deltas();
  ASSERT_EQ(d.size(), 10u);
  EXPECT_NEAR(d.front(), 0.05, 1e-15);
  EXPECT_NEAR(d.back(), 0.5, 1e-15);
  EXPECT_THROW(delta_scan(preset("fig4"), d), ConfigError);
}

TEST(Qasm, SmallestCircuit) {
  RunConfig c = preset("fig4");
  c.total_steps = 1;
  const std::string q = export_qasm(c);
  EXPECT_EQ(q.rfind("OPENQASM 2.0;", 0), 0u);
  EXPECT_NE(q.find("qreg a[1];"), std::string::npos);
  EXPECT_EQ(count(q, "\nu3("), 1u);
  EXPECT_EQ(count(q, "\nqm_cry(2*"), 1u);
  EXPECT_EQ(count(q, "\ncx a["), 1u);
  EXPECT_EQ(count(q, "\nh m["), 1u);
  EXPECT_EQ(count(q, "\nmeasure "), 1u);
}

TEST(Qasm, CountsAndThetaRoundTrip) {
  const RunConfig c = preset("fig4");
  const std::string q = export_qasm(c);
  EXPECT_NE(q.find("qreg a[120];"), std::string::npos);
  const auto got = qasm_thetas(q);
  const auto want = theta_schedule(c.grid(), c.profile(0));
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    char a[32], b[32];
    std::snprintf(a, sizeof a, "%.12g", got[i]);
    std::snprintf(b, sizeof b, "%.12g", want[i]);
    EXPECT_STREQ(a, b) << i;
  }

  RunConfig two = preset("appx_pswap");
  two.total_steps = 10;
  const std::string q2 = export_qasm(two);
  EXPECT_NE(q2.find("qreg a[20];"), std::string::npos);
  EXPECT_EQ(count(q2, "\nqm_rxx("), 10u);
  EXPECT_EQ(count(q2, "\nmeasure "), 2u);

  EXPECT_THROW(export_qasm(preset("fig7")), ConfigError);
  RunConfig capped = c;
  capped.max_ancillas = 100;
  EXPECT_THROW(export_qasm(capped), ConfigError);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch("cli");
  EXPECT_EQ(run_cli("presets"), 0);
  EXPECT_EQ(run_cli("run --preset fig4 --exact --out " + (dir / "ok").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "ok" / "trace.csv"));
  EXPECT_EQ(run_cli("run --preset nope"), 2);
  EXPECT_EQ(run_cli("run --preset fig4 --steps-per-period 3"), 2);
  EXPECT_EQ(run_cli("run --config /nonexistent/x.cfg"), 4);
  EXPECT_EQ(run_cli("run --preset fig4 --out /proc/qmem_no"), 4);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("export-qasm --preset fig4 --out " + (dir / "c.qasm").string()), 0);
  EXPECT_EQ(run_cli("export-qasm --preset fig7"), 2);

  std::ofstream(dir / "cfg.txt") << serialize_config(preset("fig4"));
  EXPECT_EQ(run_cli("run --config " + (dir / "cfg.txt").string() + " --periods 2 --out " + (dir / "cfgrun").string()),
            0);
  EXPECT_EQ(count(slurp(dir / "cfgrun" / "metrics.csv"), "\n"), 3u);
}
