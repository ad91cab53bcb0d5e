#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

namespace liegate::detail {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

FftPlan::FftPlan(std::size_t n, int sign, int dims) {
  const std::size_t total = dims == 2 ? n * n : n;
  std::vector<std::complex<double>> a(total), b(total);
  auto* in = reinterpret_cast<fftw_complex*>(a.data());
  auto* out = reinterpret_cast<fftw_complex*>(b.data());
  const int dir = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard<std::mutex> lock(planner_mutex());
  const int ni = static_cast<int>(n);
  plan_ = dims == 2 ? fftw_plan_dft_2d(ni, ni, in, out, dir, flags)
                    : fftw_plan_dft_1d(ni, in, out, dir, flags);
}

FftPlan::~FftPlan() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void FftPlan::execute(const std::complex<double>* in, std::complex<double>* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(plan_),
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace liegate::detail
