#include "hallmhd/spectral_ops.hpp"

#include <cmath>

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_spectral(const ScalarField& f, const char* op) {
  if (!f.is_spectral()) throw RepresentationMismatch(std::string(op) + " needs a spectral field");
}

}  // namespace

ScalarField derivative(const ScalarField& f, int axis) {
  require_spectral(f, "derivative");
  const auto& k = f.grid().k(axis);
  return ScalarField::from_coeffs(f.grid_ptr(), f.coeffs() * (kI * k));
}

VectorField gradient(const ScalarField& f) {
  VectorField g;
  for (int i = 0; i < 3; ++i) g.c[i] = derivative(f, i);
  return g;
}

ScalarField divergence(const VectorField& v) {
  for (const auto& comp : v.c) require_spectral(comp, "divergence");
  const SpectralGrid& g = v.grid();
  Eigen::ArrayXcd out = kI * (g.kx() * v[0].coeffs() + g.ky() * v[1].coeffs() + g.kz() * v[2].coeffs());
  return ScalarField::from_coeffs(v.grid_ptr(), std::move(out));
}

VectorField curl(const VectorField& v) {
  for (const auto& comp : v.c) require_spectral(comp, "curl");
  const SpectralGrid& g = v.grid();
  const auto& a = v[0].coeffs();
  const auto& b = v[1].coeffs();
  const auto& c = v[2].coeffs();
  VectorField out;
  out.c[0] = ScalarField::from_coeffs(v.grid_ptr(), kI * (g.ky() * c - g.kz() * b));
  out.c[1] = ScalarField::from_coeffs(v.grid_ptr(), kI * (g.kz() * a - g.kx() * c));
  out.c[2] = ScalarField::from_coeffs(v.grid_ptr(), kI * (g.kx() * b - g.ky() * a));
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  require_spectral(f, "laplacian");
  return ScalarField::from_coeffs(f.grid_ptr(), -f.grid().k_squared() * f.coeffs());
}

VectorField laplacian(const VectorField& v) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = laplacian(v.c[i]);
  return out;
}

ScalarField k_power(const ScalarField& f, int p) {
  require_spectral(f, "k_power");
  if (p < 0) throw InvalidArgument("k_power exponent must be non-negative");
  if (p == 0) return f;
  return ScalarField::from_coeffs(f.grid_ptr(), f.grid().k_squared().pow(p) * f.coeffs());
}

std::vector<ScalarField> nabla_power(const ScalarField& f, int k) {
  require_spectral(f, "nabla_power");
  if (k < 0 || k > 4) throw InvalidArgument("nabla^k supports k in 0..4, got " + std::to_string(k));
  std::vector<ScalarField> level{f};
  for (int order = 0; order < k; ++order) {
    std::vector<ScalarField> next;
    next.reserve(level.size() * 3);
    for (const auto& g : level) {
      for (int axis = 0; axis < 3; ++axis) next.push_back(derivative(g, axis));
    }
    level = std::move(next);
  }
  return level;
}

ScalarField dealias(const ScalarField& f) {
  require_spectral(f, "dealias");
  return ScalarField::from_coeffs(f.grid_ptr(), f.coeffs() * f.grid().dealias_mask());
}

VectorField dealias(const VectorField& v) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = dealias(v.c[i]);
  return out;
}

VectorField project_divergence_free(const VectorField& v) {
  for (const auto& comp : v.c) require_spectral(comp, "project_divergence_free");
  const SpectralGrid& g = v.grid();
  const Eigen::ArrayXd inv_k2 = (g.k_squared() > 0.0).select(g.k_squared().inverse(), 0.0);
  const Eigen::ArrayXcd xi_dot_v =
      (g.kx() * v[0].coeffs() + g.ky() * v[1].coeffs() + g.kz() * v[2].coeffs()) * inv_k2;
  VectorField out;
  for (int i = 0; i < 3; ++i) {
    out.c[i] = ScalarField::from_coeffs(v.grid_ptr(), v[i].coeffs() - g.k(i) * xi_dot_v);
  }
  return out;
}

double divergence_ratio(const VectorField& v) {
  for (const auto& comp : v.c) require_spectral(comp, "divergence_ratio");
  const SpectralGrid& g = v.grid();
  const double div_max =
      (g.kx() * v[0].coeffs() + g.ky() * v[1].coeffs() + g.kz() * v[2].coeffs()).abs().maxCoeff();
  const double amp_max = (v[0].coeffs().abs2() + v[1].coeffs().abs2() + v[2].coeffs().abs2())
                             .sqrt()
                             .maxCoeff();
  return amp_max > 0.0 ? div_max / amp_max : 0.0;
}

double inner_product(const ScalarField& f, const ScalarField& g) {
  require_spectral(f, "inner_product");
  require_spectral(g, "inner_product");
  const SpectralGrid& grid = f.grid();
  const double sum = (grid.hermitian_weight() * (f.coeffs().conjugate() * g.coeffs()).real()).sum();
  return sum / grid.volume();
}

double inner_product(const VectorField& f, const VectorField& g) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += inner_product(f.c[i], g.c[i]);
  return s;
}

double seminorm_squared(const ScalarField& f, int k) {
  require_spectral(f, "seminorm_squared");
  if (k < 0) throw InvalidArgument("derivative order must be non-negative");
  const SpectralGrid& grid = f.grid();
  Eigen::ArrayXd w = grid.hermitian_weight() * f.coeffs().abs2();
  if (k > 0) w *= grid.k_squared().pow(k);
  return w.sum() / grid.volume();
}

double seminorm_squared(const VectorField& v, int k) {
  double s = 0.0;
  for (const auto& comp : v.c) s += seminorm_squared(comp, k);
  return s;
}

ScalarField resample(const ScalarField& f, const GridPtr& target) {
  require_spectral(f, "resample");
  const SpectralGrid& src = f.grid();
  if (std::abs(src.box_length() - target->box_length()) > 1e-14 * src.box_length()) {
    throw InvalidArgument("resample needs grids of the same box length");
  }
  const int ns = src.n();
  const int nt = target->n();
  auto source_index = [ns](int m) -> int {
    if (m >= ns / 2 || m <= -ns / 2) return -1;
    return m >= 0 ? m : m + ns;
  };
  Eigen::ArrayXcd out = Eigen::ArrayXcd::Zero(static_cast<Eigen::Index>(target->spectral_size()));
  for (int iz = 0; iz < nt; ++iz) {
    for (int iy = 0; iy < nt; ++iy) {
      for (int ix = 0; ix < nt / 2; ++ix) {
        if (iy == nt / 2 || iz == nt / 2) continue;
        const int sx = source_index(target->mode(ix));
        const int sy = source_index(target->mode(iy));
        const int sz = source_index(target->mode(iz));
        if (sx < 0 || sy < 0 || sz < 0) continue;
        out[static_cast<Eigen::Index>(target->spectral_index(ix, iy, iz))] =
            f.coeffs()[static_cast<Eigen::Index>(src.spectral_index(sx, sy, sz))];
      }
    }
  }
  return ScalarField::from_coeffs(target, std::move(out));
}

VectorField resample(const VectorField& v, const GridPtr& target) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = resample(v.c[i], target);
  return out;
}

}  // namespace hallmhd
