#pragma once

#include "liegate/closedforms.hpp"
#include "liegate/coeffs.hpp"
#include "liegate/greens.hpp"
#include "liegate/paramflow.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace liegate::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kConfig = 2, kDomain = 3, kCaustic = 4 };

struct GridSpec {
  std::size_t n = 0;  // 0: 1024 in 1D, 48 in 2D
  double x_min = -20;
  double length = 40;
};

struct ApplySpec {
  bool enabled = false;
  std::string kind = "gaussian";  // or "file"
  double x0 = 0, y0 = 0, p0 = 0, py0 = 0, sigma = 1;
  std::string file;
};

struct RunConfig {
  std::string system = "gho";
  Path path = Path::Path1;
  double t_end = 1.0;
  double tol = 1e-10;
  int samples = 101;
  double hbar = 1.0;
  std::optional<double> kernel_t;
  PrefactorConvention prefactor = PrefactorConvention::Unitary;
  GridSpec grid;
  ApplySpec apply;
  std::string out = "liegate_out";
  std::uint64_t seed = 7;
  int random_sets = 20;
  bool corrupt_map = false;
  std::vector<int> criteria;  // empty: all of 1..9
  nlohmann::json coefficients = nlohmann::json::object();
  nlohmann::json field = nlohmann::json::object();
  nlohmann::json params = nlohmann::json::object();
};

// Schema-checked; unknown keys and bad types raise ConfigError naming the field.
RunConfig parse_config(const nlohmann::json& j);
void validate(const RunConfig& cfg);

// "gaussian", "gaussian:sigma=1,x0=0.5,p0=0", "file:psi.csv"
ApplySpec parse_apply(const std::string& spec);

TimeProfile parse_profile(const nlohmann::json& j, const std::string& field);

bool is_2d(const std::string& system);
CoefficientSet1D coefficients_for(const RunConfig& cfg);
FieldProfile2D field_for(const RunConfig& cfg);
EfieldInputs efield_inputs_for(const RunConfig& cfg);
Gamma4Form gamma4_for(const RunConfig& cfg);

// Writes numbers with 17 significant digits; NaN and ±inf become null.
std::string dump_json(const nlohmann::json& j, int indent = 2);
std::string fmt17(double v);

// Each writes its files under cfg.out and a short summary to out.
int cmd_params(const RunConfig& cfg, std::ostream& out);
int cmd_kernel(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liegate::cli
