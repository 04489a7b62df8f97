#include "qsparse/core/qft.hpp"

#include <cmath>
#include <mutex>

#include <fftw3.h>

namespace qsparse {

namespace {
// FFTW's planner is not thread-safe.
std::mutex planner_mutex;
}  // namespace

StateVector qft(const StateVector& psi, bool inverse) {
  const std::size_t dim = psi.dim();
  std::vector<Complex> in(psi.amplitudes().begin(), psi.amplitudes().end());
  std::vector<Complex> out(dim);
  auto* pin = reinterpret_cast<fftw_complex*>(in.data());
  auto* pout = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(dim), pin, pout, inverse ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Complex& c : out) c *= scale;
  return StateVector::from_amplitudes(std::move(out), false);
}

}  // namespace qsparse
