#include "hallmhd/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

// The FFTW planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct SpectralGrid::FftEngine {
  double* real_buf = nullptr;
  fftw_complex* spec_buf = nullptr;
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  std::mutex exec;

  FftEngine(int n, std::size_t nphys, std::size_t nspec) {
    std::lock_guard lock(planner_mutex());
    real_buf = fftw_alloc_real(nphys);
    spec_buf = fftw_alloc_complex(nspec);
    r2c = fftw_plan_dft_r2c_3d(n, n, n, real_buf, spec_buf, FFTW_ESTIMATE);
    c2r = fftw_plan_dft_c2r_3d(n, n, n, spec_buf, real_buf, FFTW_ESTIMATE);
  }

  ~FftEngine() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(r2c);
    fftw_destroy_plan(c2r);
    fftw_free(real_buf);
    fftw_free(spec_buf);
  }
};

SpectralGrid::SpectralGrid(int n, double box_length)
    : n_(n),
      box_length_(box_length),
      physical_size_(static_cast<std::size_t>(n) * n * n),
      spectral_size_(static_cast<std::size_t>(n / 2 + 1) * n * n) {
  axis_modes_.resize(n);
  for (int i = 0; i < n; ++i) axis_modes_[i] = mode(i);

  kx_.resize(spectral_size_);
  ky_.resize(spectral_size_);
  kz_.resize(spectral_size_);
  dealias_.resize(spectral_size_);
  weight_.resize(spectral_size_);

  const int nyq = n / 2;
  const int keep = n / 3;
  for (int iz = 0; iz < n; ++iz) {
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix <= nyq; ++ix) {
        const std::size_t s = spectral_index(ix, iy, iz);
        const bool nyquist = ix == nyq || iy == nyq || iz == nyq;
        kx_[s] = nyquist ? 0.0 : wavenumber(ix);
        ky_[s] = nyquist ? 0.0 : wavenumber(iy);
        kz_[s] = nyquist ? 0.0 : wavenumber(iz);
        const bool inside =
            std::abs(mode(ix)) <= keep && std::abs(mode(iy)) <= keep && std::abs(mode(iz)) <= keep;
        dealias_[s] = inside ? 1.0 : 0.0;
        weight_[s] = (ix == 0 || ix == nyq) ? 1.0 : 2.0;
      }
    }
  }
  k2_ = kx_.square() + ky_.square() + kz_.square();
  fft_ = std::make_unique<FftEngine>(n, physical_size_, spectral_size_);
}

SpectralGrid::~SpectralGrid() = default;

double SpectralGrid::fundamental() const { return 2.0 * std::numbers::pi / box_length_; }

double SpectralGrid::wavenumber(int index) const { return fundamental() * mode(index); }

const Eigen::ArrayXd& SpectralGrid::k(int axis) const {
  switch (axis) {
    case 0:
      return kx_;
    case 1:
      return ky_;
    case 2:
      return kz_;
  }
  throw InvalidArgument("axis must be 0, 1 or 2");
}

void SpectralGrid::forward(const double* physical, Complex* spectral) const {
  std::lock_guard lock(fft_->exec);
  std::memcpy(fft_->real_buf, physical, physical_size_ * sizeof(double));
  fftw_execute(fft_->r2c);
  const double scale = cell_volume();
  const auto* src = reinterpret_cast<const Complex*>(fft_->spec_buf);
  for (std::size_t s = 0; s < spectral_size_; ++s) spectral[s] = src[s] * scale;
}

void SpectralGrid::inverse(const Complex* spectral, double* physical) const {
  std::lock_guard lock(fft_->exec);
  // c2r overwrites its input, hence the staging copy.
  std::memcpy(fft_->spec_buf, spectral, spectral_size_ * sizeof(Complex));
  fftw_execute(fft_->c2r);
  const double scale = 1.0 / volume();
  for (std::size_t p = 0; p < physical_size_; ++p) physical[p] = fft_->real_buf[p] * scale;
}

GridPtr build_grid(int n, double box_length) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw InvalidArgument("grid.n must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw InvalidArgument("grid.L must be positive, got " + std::to_string(box_length));
  }
  return std::make_shared<const SpectralGrid>(n, box_length);
}

}  // namespace hallmhd
