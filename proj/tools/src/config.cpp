#include "liegate/closedforms.hpp"
#include "liegate/errors.hpp"
#include "liegate_cli/cli.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace liegate::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kSystems = {"lp", "gho", "iontrap", "kanai", "cp2d", "bsin", "efield"};

const std::map<std::string, std::set<std::string>> kParamKeys = {
    {"lp", {"m", "f"}},
    {"gho", {}},
    {"cp2d", {}},
    {"iontrap", {"m", "K", "k", "omega"}},
    {"kanai", {"m", "tau", "w0", "F0", "F1", "w1"}},
    {"bsin", {"m", "B0", "omega", "e"}},
    {"efield", {"m", "e", "B", "K", "E0x", "E0y", "E1x", "E1y", "omega", "zeta", "gamma4"}}};

void only_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(where, "must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
}

std::string join(const std::string& a, const std::string& b) { return a.empty() ? b : a + "." + b; }

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "must be a number");
  return j.get<double>();
}

double number_or(const json& obj, const char* key, double def, const std::string& where) {
  return obj.contains(key) ? number(obj.at(key), join(where, key)) : def;
}

std::string string_of(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError(field, "must be a string");
  return j.get<std::string>();
}

long integer(const json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw ConfigError(field, "must be an integer");
  return j.get<long>();
}

}  // namespace

bool is_2d(const std::string& system) {
  return system == "cp2d" || system == "bsin" || system == "efield";
}

TimeProfile parse_profile(const json& j, const std::string& field) {
  if (j.is_number()) return TimeProfile::constant(j.get<double>());
  if (!j.is_object() || !j.contains("kind")) throw ConfigError(field, "profile needs a kind");
  const auto kind = string_of(j.at("kind"), join(field, "kind"));
  if (kind == "constant") {
    only_keys(j, field, {"kind", "value"});
    return TimeProfile::constant(number_or(j, "value", 0.0, field));
  }
  if (kind == "sinusoid") {
    only_keys(j, field, {"kind", "amplitude", "omega", "phase", "offset"});
    return TimeProfile::sinusoid(number_or(j, "amplitude", 0.0, field),
                                 number_or(j, "omega", 0.0, field),
                                 number_or(j, "phase", 0.0, field),
                                 number_or(j, "offset", 0.0, field));
  }
  if (kind == "exponential") {
    only_keys(j, field, {"kind", "prefactor", "rate"});
    return TimeProfile::exponential(number_or(j, "prefactor", 1.0, field),
                                    number_or(j, "rate", 0.0, field));
  }
  if (kind == "tabulated") {
    only_keys(j, field, {"kind", "knots"});
    const auto knots_field = join(field, "knots");
    if (!j.contains("knots") || !j.at("knots").is_array())
      throw ConfigError(knots_field, "must be an array of [t, value] pairs");
    std::vector<std::pair<double, double>> knots;
    for (const auto& k : j.at("knots")) {
      if (!k.is_array() || k.size() != 2) throw ConfigError(knots_field, "each knot is [t, value]");
      knots.emplace_back(number(k[0], knots_field), number(k[1], knots_field));
    }
    try {
      return TimeProfile::tabulated(std::move(knots));
    } catch (const DomainError& e) {
      throw ConfigError(knots_field, e.what());
    }
  }
  throw ConfigError(join(field, "kind"), "unknown profile kind '" + kind + "'");
}

RunConfig parse_config(const json& j) {
  only_keys(j, "", {"system", "path", "t_end", "tol", "samples", "hbar", "kernel", "grid", "apply",
                    "out", "seed", "verify", "coefficients", "field", "params"});
  RunConfig c;
  if (j.contains("system")) c.system = string_of(j.at("system"), "system");
  if (j.contains("path")) {
    auto p = string_of(j.at("path"), "path");
    if (p == "path1") c.path = Path::Path1;
    else if (p == "path2") c.path = Path::Path2;
    else throw ConfigError("path", "must be path1 or path2");
  }
  c.t_end = number_or(j, "t_end", c.t_end, "");
  c.tol = number_or(j, "tol", c.tol, "");
  c.hbar = number_or(j, "hbar", c.hbar, "");
  if (j.contains("samples")) c.samples = static_cast<int>(integer(j.at("samples"), "samples"));
  if (j.contains("out")) c.out = string_of(j.at("out"), "out");
  if (j.contains("seed")) {
    long s = integer(j.at("seed"), "seed");
    if (s < 0) throw ConfigError("seed", "must be non-negative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (j.contains("kernel")) {
    const auto& k = j.at("kernel");
    only_keys(k, "kernel", {"t", "prefactor"});
    if (k.contains("t")) c.kernel_t = number(k.at("t"), "kernel.t");
    if (k.contains("prefactor")) {
      auto p = string_of(k.at("prefactor"), "kernel.prefactor");
      if (p == "unitary") c.prefactor = PrefactorConvention::Unitary;
      else if (p == "literal") c.prefactor = PrefactorConvention::Literal;
      else throw ConfigError("kernel.prefactor", "must be unitary or literal");
    }
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    only_keys(g, "grid", {"n", "x_min", "length"});
    if (g.contains("n")) {
      long n = integer(g.at("n"), "grid.n");
      if (n < 8) throw ConfigError("grid.n", "must be at least 8");
      c.grid.n = static_cast<std::size_t>(n);
    }
    c.grid.x_min = number_or(g, "x_min", c.grid.x_min, "grid");
    c.grid.length = number_or(g, "length", c.grid.length, "grid");
  }
  if (j.contains("apply")) {
    const auto& a = j.at("apply");
    only_keys(a, "apply", {"kind", "x0", "y0", "p0", "py0", "sigma", "file"});
    c.apply.enabled = true;
    if (a.contains("kind")) c.apply.kind = string_of(a.at("kind"), "apply.kind");
    if (c.apply.kind != "gaussian" && c.apply.kind != "file")
      throw ConfigError("apply.kind", "must be gaussian or file");
    c.apply.x0 = number_or(a, "x0", 0.0, "apply");
    c.apply.y0 = number_or(a, "y0", 0.0, "apply");
    c.apply.p0 = number_or(a, "p0", 0.0, "apply");
    c.apply.py0 = number_or(a, "py0", 0.0, "apply");
    c.apply.sigma = number_or(a, "sigma", 1.0, "apply");
    if (a.contains("file")) c.apply.file = string_of(a.at("file"), "apply.file");
  }
  if (j.contains("verify")) {
    const auto& v = j.at("verify");
    only_keys(v, "verify", {"random_sets", "corrupt_map", "criteria"});
    if (v.contains("criteria")) {
      if (!v.at("criteria").is_array()) throw ConfigError("verify.criteria", "must be an array");
      for (const auto& k : v.at("criteria"))
        c.criteria.push_back(static_cast<int>(integer(k, "verify.criteria")));
    }
    if (v.contains("random_sets"))
      c.random_sets = static_cast<int>(integer(v.at("random_sets"), "verify.random_sets"));
    if (v.contains("corrupt_map")) {
      if (!v.at("corrupt_map").is_boolean())
        throw ConfigError("verify.corrupt_map", "must be a boolean");
      c.corrupt_map = v.at("corrupt_map").get<bool>();
    }
  }
  if (j.contains("coefficients")) {
    c.coefficients = j.at("coefficients");
    only_keys(c.coefficients, "coefficients", {"a", "b", "c", "d", "e", "g"});
  }
  if (j.contains("field")) {
    c.field = j.at("field");
    only_keys(c.field, "field", {"m", "B", "K", "Ex", "Ey", "charge"});
  }
  if (j.contains("params")) {
    c.params = j.at("params");
    if (!c.params.is_object()) throw ConfigError("params", "must be an object");
  }
  return c;
}

void validate(const RunConfig& c) {
  if (!kSystems.count(c.system))
    throw ConfigError("system", "unknown system '" + c.system +
                                    "' (lp, gho, iontrap, kanai, cp2d, bsin, efield)");
  if (!(c.t_end > 0) || !std::isfinite(c.t_end)) throw ConfigError("t_end", "must be positive");
  if (!(c.tol > 0) || c.tol > 1e-2) throw ConfigError("tol", "must lie in (0, 1e-2]");
  if (c.samples < 2 || c.samples > 1000000) throw ConfigError("samples", "must be in [2, 1e6]");
  if (!(c.hbar > 0)) throw ConfigError("hbar", "must be positive");
  if (c.kernel_t && !(*c.kernel_t > 0)) throw ConfigError("kernel.t", "must be positive");
  if (c.kernel_t && *c.kernel_t > c.t_end) throw ConfigError("kernel.t", "must not exceed t_end");
  if (!(c.grid.length > 0)) throw ConfigError("grid.length", "must be positive");
  if (c.apply.enabled && !(c.apply.sigma > 0)) throw ConfigError("apply.sigma", "must be positive");
  if (c.apply.enabled && c.apply.kind == "file" && c.apply.file.empty())
    throw ConfigError("apply.file", "required for kind file");
  for (int k : c.criteria)
    if (k < 1 || k > 9) throw ConfigError("verify.criteria", "criteria are numbered 1..9");
  if (c.random_sets < 1) throw ConfigError("verify.random_sets", "must be at least 1");
  if (!c.coefficients.empty() && c.system != "gho" && c.system != "lp")
    throw ConfigError("coefficients", "only used by systems gho and lp");
  if (!c.field.empty() && c.system != "cp2d")
    throw ConfigError("field", "only used by system cp2d");
  only_keys(c.params, "params", kParamKeys.at(c.system));
  for (auto it = c.params.begin(); it != c.params.end(); ++it) {
    if (it.key() == "gamma4") {
      auto g = string_of(it.value(), "params.gamma4");
      if (g != "cross-term" && g != "resonance-product")
        throw ConfigError("params.gamma4", "must be cross-term or resonance-product");
    } else {
      number(it.value(), "params." + it.key());
    }
  }
}

ApplySpec parse_apply(const std::string& spec) {
  ApplySpec a;
  a.enabled = true;
  if (spec.rfind("file:", 0) == 0) {
    a.kind = "file";
    a.file = spec.substr(5);
    if (a.file.empty()) throw ConfigError("apply", "file: needs a path");
    return a;
  }
  std::string head = spec, tail;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    head = spec.substr(0, pos);
    tail = spec.substr(pos + 1);
  }
  if (head != "gaussian") throw ConfigError("apply", "expected gaussian[:k=v,...] or file:PATH");
  std::stringstream ss(tail);
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    if (kv.empty()) continue;
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("apply", "expected key=value, got '" + kv + "'");
    const std::string k = kv.substr(0, eq);
    double v;
    try {
      std::size_t used = 0;
      v = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
    } catch (const std::exception&) {
      throw ConfigError("apply." + k, "not a number");
    }
    if (k == "sigma") a.sigma = v;
    else if (k == "x0") a.x0 = v;
    else if (k == "y0") a.y0 = v;
    else if (k == "p0") a.p0 = v;
    else if (k == "py0") a.py0 = v;
    else throw ConfigError("apply." + k, "unknown key");
  }
  if (!(a.sigma > 0)) throw ConfigError("apply.sigma", "must be positive");
  return a;
}

namespace {

double param(const RunConfig& c, const char* key, double def) {
  return number_or(c.params, key, def, "params");
}

}  // namespace

CoefficientSet1D coefficients_for(const RunConfig& c) {
  CoefficientSet1D s;
  if (c.system == "gho") {
    s.a = TimeProfile::constant(1.0);
    s.c = TimeProfile::constant(1.0);
  } else if (c.system == "lp") {
    const double m = param(c, "m", 1.0), f = param(c, "f", 1.0);
    s.a = TimeProfile::constant(1.0 / m);
    s.e = TimeProfile::constant(-f);
  } else if (c.system == "iontrap") {
    s = ion_trap_coeffs(param(c, "m", 1.0), param(c, "K", 1.0), param(c, "k", 0.3),
                        param(c, "omega", 5.0));
  } else if (c.system == "kanai") {
    s = kanai_caldirola_coeffs(param(c, "m", 1.0), param(c, "tau", 1.0), param(c, "w0", 0.25),
                               param(c, "F0", 0.3), param(c, "F1", 0.2), param(c, "w1", 1.1));
  } else {
    throw DomainError("system " + c.system + " is two-dimensional");
  }
  for (auto it = c.coefficients.begin(); it != c.coefficients.end(); ++it) {
    auto p = parse_profile(it.value(), "coefficients." + it.key());
    const auto& k = it.key();
    if (k == "a") s.a = p;
    else if (k == "b") s.b = p;
    else if (k == "c") s.c = p;
    else if (k == "d") s.d = p;
    else if (k == "e") s.e = p;
    else s.g = p;
  }
  s.hbar = c.hbar;
  return s;
}

EfieldInputs efield_inputs_for(const RunConfig& c) {
  EfieldInputs in;
  in.m = param(c, "m", 1.0);
  in.e = param(c, "e", 1.0);
  in.B = param(c, "B", 2.0);
  in.K = param(c, "K", 0.5);
  in.E0x = param(c, "E0x", 0.3);
  in.E0y = param(c, "E0y", 0.0);
  in.E1x = param(c, "E1x", 0.0);
  in.E1y = param(c, "E1y", 0.2);
  in.omega = param(c, "omega", 1.3);
  in.zeta = param(c, "zeta", std::acos(0.0));
  return in;
}

Gamma4Form gamma4_for(const RunConfig& c) {
  if (c.params.contains("gamma4") && c.params.at("gamma4") == "resonance-product")
    return Gamma4Form::ResonanceProduct;
  return Gamma4Form::CrossTerm;
}

FieldProfile2D field_for(const RunConfig& c) {
  FieldProfile2D f;
  if (c.system == "cp2d") {
    f.B = TimeProfile::constant(1.0);
    f.K = TimeProfile::constant(0.5);
    for (auto it = c.field.begin(); it != c.field.end(); ++it) {
      const auto& k = it.key();
      if (k == "charge") {
        f.charge = number(it.value(), "field.charge");
        continue;
      }
      auto p = parse_profile(it.value(), "field." + k);
      if (k == "m") f.m = p;
      else if (k == "B") f.B = p;
      else if (k == "K") f.K = p;
      else if (k == "Ex") f.Ex = p;
      else f.Ey = p;
    }
  } else if (c.system == "bsin") {
    f.m = TimeProfile::constant(param(c, "m", 1.0));
    f.B = TimeProfile::sinusoid(param(c, "B0", 1.5), param(c, "omega", 1.0));
    f.charge = param(c, "e", 1.0);
  } else if (c.system == "efield") {
    f = efield_const_b_field(efield_inputs_for(c));
  } else {
    throw DomainError("system " + c.system + " is one-dimensional");
  }
  f.hbar = c.hbar;
  return f;
}

}  // namespace liegate::cli
