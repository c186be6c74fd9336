#ifndef FRACTIME_FFT_HPP
#define FRACTIME_FFT_HPP

#include <vector>

#include "fractime/common.hpp"

namespace fractime {

// Unnormalized c2c transforms on square grids (n points per axis, d in {1,2}),
// backed by cached FFTW plans. Plans are created once per (d, n, sign) under a
// lock and may be executed concurrently on distinct arrays.
// sign -1: e^{-2 pi i nk/N} (forward), sign +1: e^{+2 pi i nk/N}.
std::vector<cplx> fft(const std::vector<cplx>& in, int d, int n, int sign);

// O(N^2) reference transform for validating the fast path on small grids.
std::vector<cplx> dft_reference(const std::vector<cplx>& in, int d, int n, int sign);

}  // namespace fractime

#endif
