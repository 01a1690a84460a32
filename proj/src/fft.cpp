#include "psf/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace psf::detail {

namespace {

// FFTW plan creation is not thread-safe; execution via fftw_execute_dft on
// distinct arrays is. Plans are created with FFTW_UNALIGNED so they remain
// valid for any properly sized buffers.
std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan> plan_cache;

fftw_plan get_plan(int dim, int n, int sign, fftw_complex* in, fftw_complex* out) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  const auto key = std::make_tuple(dim, n, sign);
  auto it = plan_cache.find(key);
  if (it != plan_cache.end()) return it->second;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  fftw_plan plan = (dim == 1) ? fftw_plan_dft_1d(n, in, out, sign, flags)
                              : fftw_plan_dft_2d(n, n, in, out, sign, flags);
  plan_cache.emplace(key, plan);
  return plan;
}

void execute(int dim, int n, int sign, const std::complex<double>* in,
             std::complex<double>* out) {
  auto* fin = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in));
  auto* fout = reinterpret_cast<fftw_complex*>(out);
  fftw_plan plan = get_plan(dim, n, sign, fin, fout);
  fftw_execute_dft(plan, fin, fout);
}

}  // namespace

void fft_forward_raw(int dim, int n, const std::complex<double>* in,
                     std::complex<double>* out) {
  execute(dim, n, FFTW_FORWARD, in, out);
}

void fft_inverse_raw(int dim, int n, const std::complex<double>* in,
                     std::complex<double>* out) {
  execute(dim, n, FFTW_BACKWARD, in, out);
}

}  // namespace psf::detail
