#ifndef PSF_FFT_HPP
#define PSF_FFT_HPP

#include <complex>

namespace psf::detail {

/// Unnormalized c2c DFT, sign -1 in the exponent. dim is 1 or 2; for dim == 2
/// the data is row-major n x n. in and out must be distinct buffers.
/// Plans are cached internally; safe to call from multiple threads.
void fft_forward_raw(int dim, int n, const std::complex<double>* in,
                     std::complex<double>* out);

/// Unnormalized c2c DFT, sign +1 in the exponent.
void fft_inverse_raw(int dim, int n, const std::complex<double>* in,
                     std::complex<double>* out);

}  // namespace psf::detail

#endif
