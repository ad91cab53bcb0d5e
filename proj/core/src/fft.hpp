#pragma once

#include <complex>
#include <cstddef>

namespace liegate::detail {

// Unnormalized FFTW transform that can be run on any pair of arrays of length n.
// Planning and destruction go through one process-wide lock.
class FftPlan {
public:
  // sign: -1 forward, +1 backward.  dims 1 (n) or 2 (n × n, row-major).
  FftPlan(std::size_t n, int sign, int dims = 1);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  void execute(const std::complex<double>* in, std::complex<double>* out) const;

private:
  void* plan_;
};

}  // namespace liegate::detail
