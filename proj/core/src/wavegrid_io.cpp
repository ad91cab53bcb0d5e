#include "liegate/errors.hpp"
#include "liegate/greens.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace liegate {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void put_f64(std::ostream& os, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

bool get_f64(std::istream& is, double& v) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  v = std::bit_cast<double>(bits);
  return true;
}

// Recovers (x_min, dx) from sorted unique coordinates.
void geometry_from(const std::vector<double>& xs, double& x_min, double& dx) {
  if (xs.size() < 2) throw DomainError("grid file needs at least 2 points per axis");
  x_min = xs.front();
  dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (std::abs(xs[i] - (x_min + dx * i)) > 1e-9 * std::max(1.0, std::abs(dx) * xs.size()))
      throw DomainError("grid file coordinates are not uniform");
}

}  // namespace

void write_wavegrid_csv(const WaveGrid& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw DomainError("cannot open " + path + " for writing");
  if (g.dims == 1) {
    os << "x,re,im\n";
    for (std::size_t i = 0; i < g.n; ++i)
      os << fmt17(g.x(i)) << ',' << fmt17(g.amps[i].real()) << ',' << fmt17(g.amps[i].imag())
         << '\n';
  } else {
    os << "x,y,re,im\n";
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = 0; j < g.n; ++j) {
        auto a = g.amps[i * g.n + j];
        os << fmt17(g.x(i)) << ',' << fmt17(g.x(j)) << ',' << fmt17(a.real()) << ','
           << fmt17(a.imag()) << '\n';
      }
  }
}

WaveGrid read_wavegrid_csv(const std::string& path, double hbar) {
  std::ifstream is(path);
  if (!is) throw DomainError("cannot open " + path);
  std::string header;
  std::getline(is, header);
  const int dims = header.rfind("x,y,", 0) == 0 ? 2 : 1;
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> r;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) r.push_back(std::stod(cell));
    if (static_cast<int>(r.size()) != dims + 2) throw DomainError("malformed row in " + path);
    rows.push_back(std::move(r));
  }
  WaveGrid g;
  double x_min, dx;
  if (dims == 1) {
    std::vector<double> xs;
    for (auto& r : rows) xs.push_back(r[0]);
    geometry_from(xs, x_min, dx);
    g = WaveGrid::zeros(1, rows.size(), x_min, dx, hbar);
    for (std::size_t i = 0; i < rows.size(); ++i) g.amps[i] = {rows[i][1], rows[i][2]};
  } else {
    std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(double(rows.size()))));
    if (n * n != rows.size()) throw DomainError("2D grid file is not square");
    std::vector<double> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(rows[i][1]);
    geometry_from(xs, x_min, dx);
    g = WaveGrid::zeros(2, n, x_min, dx, hbar);
    for (std::size_t p = 0; p < rows.size(); ++p) g.amps[p] = {rows[p][2], rows[p][3]};
  }
  return g;
}

void write_wavegrid_bin(const WaveGrid& g, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("cannot open " + path + " for writing");
  put_f64(os, static_cast<double>(g.n));
  put_f64(os, g.x_min);
  put_f64(os, g.dx);
  for (auto a : g.amps) {
    put_f64(os, a.real());
    put_f64(os, a.imag());
  }
}

WaveGrid read_wavegrid_bin(const std::string& path, double hbar) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DomainError("cannot open " + path);
  double n_d, x_min, dx;
  if (!get_f64(is, n_d) || !get_f64(is, x_min) || !get_f64(is, dx))
    throw DomainError("truncated header in " + path);
  if (!(n_d >= 2) || n_d != std::floor(n_d)) throw DomainError("bad point count in " + path);
  std::vector<cdouble> amps;
  double re, im;
  while (get_f64(is, re)) {
    if (!get_f64(is, im)) throw DomainError("odd number of amplitude values in " + path);
    amps.emplace_back(re, im);
  }
  const auto n = static_cast<std::size_t>(n_d);
  int dims;
  if (amps.size() == n) dims = 1;
  else if (amps.size() == n * n) dims = 2;
  else throw DomainError("amplitude count does not match n in " + path);
  auto g = WaveGrid::zeros(dims, n, x_min, dx, hbar);
  g.amps = std::move(amps);
  return g;
}

}  // namespace liegate
