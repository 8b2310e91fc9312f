#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Core>

namespace hallmhd {

using Complex = std::complex<double>;

/// Periodic cube [0, L)^3 sampled on n^3 points, together with the
/// half-complex wavenumber tables used by the real-to-complex transforms.
///
/// Physical layout: value (i, j, k) at flat index i + n*(j + n*k), x fastest.
/// Spectral layout: mode (ix, iy, iz) at ix + (n/2+1)*(iy + n*iz) with
/// ix in [0, n/2]; the remaining x modes follow from Hermitian symmetry.
///
/// Transform normalization: the forward transform is
///   f_hat(m) = (L/n)^3 * sum_x f(x) exp(-i k_m . x),
/// so the zero mode equals mean * volume, and the inverse carries 1/L^3.
/// Plancherel then reads sum_x |f|^2 (L/n)^3 = L^{-3} sum_m |f_hat(m)|^2.
class SpectralGrid {
 public:
  SpectralGrid(int n, double box_length);
  ~SpectralGrid();
  SpectralGrid(const SpectralGrid&) = delete;
  SpectralGrid& operator=(const SpectralGrid&) = delete;

  int n() const { return n_; }
  double box_length() const { return box_length_; }
  double dx() const { return box_length_ / n_; }
  double volume() const { return box_length_ * box_length_ * box_length_; }
  double cell_volume() const { return dx() * dx() * dx(); }
  /// 2*pi/L
  double fundamental() const;

  std::size_t physical_size() const { return physical_size_; }
  std::size_t spectral_size() const { return spectral_size_; }
  int half_n() const { return n_ / 2 + 1; }

  /// Integer mode m_j for axis index 0..n-1: {0,..,n/2-1, -n/2,..,-1}.
  int mode(int index) const { return index < n_ / 2 ? index : index - n_; }
  /// Table wavenumber (2*pi/L)*m_j, Nyquist included.
  double wavenumber(int index) const;
  const std::vector<int>& axis_modes() const { return axis_modes_; }

  std::size_t spectral_index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(half_n()) * (static_cast<std::size_t>(iy) +
                                                 static_cast<std::size_t>(n_) * iz);
  }
  std::size_t physical_index(int i, int j, int k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(n_) * (static_cast<std::size_t>(j) +
                                           static_cast<std::size_t>(n_) * k);
  }

  /// Operator wavenumbers per stored mode. Any mode carrying a Nyquist
  /// index on some axis has all three components set to zero, so every
  /// derivative annihilates it and the propagator treats it like xi = 0.
  const Eigen::ArrayXd& kx() const { return kx_; }
  const Eigen::ArrayXd& ky() const { return ky_; }
  const Eigen::ArrayXd& kz() const { return kz_; }
  const Eigen::ArrayXd& k(int axis) const;
  /// |xi|^2 from the operator wavenumbers.
  const Eigen::ArrayXd& k_squared() const { return k2_; }
  /// 1 where |m_j| <= n/3 on every axis, else 0.
  const Eigen::ArrayXd& dealias_mask() const { return dealias_; }
  bool retained(std::size_t spectral_index) const { return dealias_[spectral_index] != 0.0; }
  /// Multiplicity of each stored mode in the full spectrum (1 or 2).
  const Eigen::ArrayXd& hermitian_weight() const { return weight_; }

  /// Transforms on raw buffers with the normalization above.
  void forward(const double* physical, Complex* spectral) const;
  void inverse(const Complex* spectral, double* physical) const;

 private:
  struct FftEngine;

  int n_;
  double box_length_;
  std::size_t physical_size_;
  std::size_t spectral_size_;
  std::vector<int> axis_modes_;
  Eigen::ArrayXd kx_, ky_, kz_, k2_, dealias_, weight_;
  std::unique_ptr<FftEngine> fft_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

/// Validates n (power of two, >= 8) and L > 0.
GridPtr build_grid(int n, double box_length);

}  // namespace hallmhd
