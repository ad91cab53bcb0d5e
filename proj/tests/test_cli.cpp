#include "liegate/errors.hpp"
#include "liegate_cli/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace liegate;
using namespace liegate::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "liegate");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = run(static_cast<int>(argv.size()), argv.data(), o, e);
  return {code, o.str(), e.str()};
}

fs::path scratch(const std::string& name) {
  auto d = fs::temp_directory_path() / "liegate_cli_test" / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  auto p = dir / "config.json";
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("params writes the csv and summary") {
  auto d = scratch("params");
  auto r = invoke({"params", "--system", "gho", "--t-end", "1", "--out", d.string()});
  REQUIRE(r.code == 0);
  auto csv = slurp(d / "params.csv");
  CHECK(csv.rfind("t,S,lam,Pi,gamma,alpha,phi,vphi,beta,u,udot\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 102);
  auto j = nlohmann::json::parse(slurp(d / "params.json"));
  CHECK(j["system"] == "gho");
  CHECK(j["valid_to"].is_null());
  CHECK(j["final"]["beta"].get<double>() == doctest::Approx(std::tan(1.0)).epsilon(1e-8));
}

TEST_CASE("params for every system") {
  for (const char* sys : {"lp", "gho", "iontrap", "kanai", "cp2d", "bsin", "efield"}) {
    auto d = scratch(std::string("sys_") + sys);
    auto r = invoke({"params", "--system", sys, "--t-end", "0.5", "--out", d.string()});
    INFO(sys << ": " << r.err);
    CHECK(r.code == 0);
    CHECK(fs::exists(d / "params.csv"));
  }
}

TEST_CASE("configuration errors exit 2 and name the field") {
  auto d = scratch("bad");
  auto r = invoke({"params", "--t-end", "-1", "--out", d.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("t_end") != std::string::npos);
  CHECK(fs::exists(d / "error.json"));

  auto past = scratch("past");
  r = invoke({"params", "--system", "gho", "--t-end", "2", "--out", past.string()});
  CHECK(r.code == 0);
  auto pj = nlohmann::json::parse(slurp(past / "params.json"));
  CHECK(pj["valid_to"].get<double>() == doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-8));
  CHECK(pj["final"]["beta"].is_null());

  r = invoke({"params", "--system", "nope", "--out", d.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("system") != std::string::npos);

  auto cfg = write_config(d, R"({"system": "gho", "t_ned": 2})");
  r = invoke({"params", "--config", cfg.string(), "--out", d.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("t_ned") != std::string::npos);

  cfg = write_config(d, R"({"system": "iontrap", "params": {"m": 1, "q": 2}})");
  r = invoke({"params", "--config", cfg.string(), "--out", d.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("params.q") != std::string::npos);

  cfg = write_config(d, R"({"system": "gho", "coefficients": {"c": {"kind": "bogus"}}})");
  r = invoke({"params", "--config", cfg.string(), "--out", d.string()});
  CHECK(r.code == 2);

  r = invoke({"params", "--no-such-flag"});
  CHECK(r.code == 2);
  r = invoke({});
  CHECK(r.code == 2);
}

TEST_CASE("config file drives the run, flags override it") {
  auto d = scratch("cfg");
  auto cfg = write_config(d, R"({
    "system": "gho", "path": "path2", "t_end": 0.8, "samples": 11,
    "coefficients": {"c": {"kind": "sinusoid", "amplitude": 0.2, "omega": 2, "offset": 1}}
  })");
  auto r = invoke({"params", "--config", cfg.string(), "--samples", "21", "--out", d.string()});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(slurp(d / "params.json"));
  CHECK(j["path"] == "path2");
  auto csv = slurp(d / "params.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);
}

TEST_CASE("efield Gamma4 variant is selectable") {
  auto d = scratch("gamma4");
  auto cfg = write_config(d, R"({"system": "efield", "t_end": 2, "params": {"gamma4": "resonance-product"}})");
  auto r = invoke({"params", "--config", cfg.string(), "--out", d.string()});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(slurp(d / "params.json"));
  CHECK(j["closed_form"]["gamma4_form"] == "resonance-product");
  // matches the integrated parameters at t_end
  CHECK(j["closed_form"]["lam_x"].get<double>() ==
        doctest::Approx(j["final"]["lam_x"].get<double>()).epsilon(1e-8));
  cfg = write_config(d, R"({"system": "efield", "params": {"gamma4": "other"}})");
  CHECK(invoke({"params", "--config", cfg.string(), "--out", d.string()}).code == 2);
}

TEST_CASE("domain errors exit 3") {
  auto d = scratch("domain");
  auto cfg = write_config(d, R"({"system": "kanai", "params": {"tau": 1, "w0": 0.5}})");
  auto r = invoke({"params", "--config", cfg.string(), "--out", d.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("critical damping") != std::string::npos);

  cfg = write_config(d, R"({"system": "efield", "params": {"K": 0}})");
  r = invoke({"params", "--config", cfg.string(), "--out", d.string()});
  CHECK(r.code == 3);
}

TEST_CASE("kernel beyond the caustic exits 4") {
  auto d = scratch("caustic");
  auto r = invoke({"kernel", "--system", "gho", "--t-end", "2", "--out", d.string()});
  CHECK(r.code == 4);
  CHECK(r.err.find("valid_to") != std::string::npos);
  auto j = nlohmann::json::parse(slurp(d / "error.json"));
  CHECK(j["valid_to"].get<double>() == doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-8));
}

TEST_CASE("kernel with --apply") {
  auto d = scratch("apply");
  auto r = invoke({"kernel", "--system", "gho", "--t-end", "1", "--apply",
                   "gaussian:sigma=1,x0=0.5,p0=0.3", "--out", d.string()});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(slurp(d / "kernel.json"));
  CHECK(j["variant"] == "path1");
  CHECK(j["apply"]["norm_out"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
  auto psi = read_wavegrid_csv((d / "psi_out.csv").string());
  CHECK(psi.n == 1024);

  auto d2 = scratch("apply_file");
  r = invoke({"kernel", "--system", "lp", "--t-end", "1", "--apply",
              "file:" + (d / "psi_out.csv").string(), "--out", d2.string()});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(slurp(d2 / "kernel.json"));
  CHECK(j["variant"] == "lp");

  r = invoke({"kernel", "--apply", "gaussian:sigma=-1", "--out", d.string()});
  CHECK(r.code == 2);
}

TEST_CASE("verify is deterministic for a fixed seed") {
  auto a = scratch("verify_a"), b = scratch("verify_b");
  std::vector<std::string> common = {"verify", "--seed", "7", "--random-sets", "3",
                                     "--criterion", "1", "--criterion", "2", "--criterion", "9"};
  auto ra = common, rb = common;
  ra.insert(ra.end(), {"--out", a.string()});
  rb.insert(rb.end(), {"--out", b.string()});
  REQUIRE(invoke(ra).code == 0);
  REQUIRE(invoke(rb).code == 0);
  auto ja = slurp(a / "report.json");
  CHECK(!ja.empty());
  CHECK(ja == slurp(b / "report.json"));
}

TEST_CASE("a corrupted map makes verify fail") {
  auto d = scratch("corrupt");
  auto r = invoke({"verify", "--criterion", "2", "--random-sets", "1", "--corrupt-map", "--out",
                   d.string()});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(slurp(d / "report.json"));
  CHECK(j["pass"] == false);
}

TEST_CASE("apply spec parsing") {
  auto a = parse_apply("gaussian:sigma=2,x0=-1,p0=0.5");
  CHECK(a.sigma == 2);
  CHECK(a.x0 == -1);
  CHECK(a.p0 == 0.5);
  CHECK(parse_apply("file:psi.csv").file == "psi.csv");
  CHECK_THROWS_AS(parse_apply("lorentzian"), ConfigError);
  CHECK_THROWS_AS(parse_apply("gaussian:sigma=abc"), ConfigError);
  CHECK_THROWS_AS(parse_apply("gaussian:width=1"), ConfigError);
}

TEST_CASE("profile parsing") {
  CHECK(parse_profile(2.5, "x")(3.0) == 2.5);
  auto s = parse_profile({{"kind", "sinusoid"}, {"amplitude", 2}, {"omega", 1}}, "x");
  CHECK(s(std::acos(0.0)) == doctest::Approx(2.0));
  auto e = parse_profile({{"kind", "exponential"}, {"prefactor", 3}, {"rate", -1}}, "x");
  CHECK(e(1.0) == doctest::Approx(3 * std::exp(-1.0)));
  auto t = parse_profile({{"kind", "tabulated"}, {"knots", {{0, 1}, {1, 2}, {2, 3}}}}, "x");
  CHECK(t(0.5) == doctest::Approx(1.5));
  CHECK_THROWS_AS(parse_profile({{"kind", "tabulated"}, {"knots", {{0, 1}}}}, "x"), ConfigError);
  CHECK_THROWS_AS(parse_profile({{"kind", "constant"}, {"valu", 1}}, "x"), ConfigError);
  CHECK_THROWS_AS(parse_profile("1", "x"), ConfigError);
}

TEST_CASE("json output keeps 17 digits and nulls non-finite values") {
  nlohmann::json j = {{"a", 0.1}, {"b", std::nan("")}, {"c", 1.0 / 0.0}, {"d", 3}};
  auto s = dump_json(j, -1);
  CHECK(s == "{\"a\":0.10000000000000001,\"b\":null,\"c\":null,\"d\":3}\n");
  CHECK(fmt17(1.0 / 3) == "0.33333333333333331");
}
