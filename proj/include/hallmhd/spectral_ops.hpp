#pragma once

#include <vector>

#include "hallmhd/field.hpp"

namespace hallmhd {

// Spectral differential operators. All inputs must be spectral; the result
// is spectral. Modes with a Nyquist index on any axis map to zero.

ScalarField derivative(const ScalarField& f, int axis);
VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
VectorField curl(const VectorField& v);
ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);
/// Multiply by |xi|^(2p), p >= 0 (used for Sobolev weights).
ScalarField k_power(const ScalarField& f, int p);

/// All 3^k partial derivatives of order k, in lexicographic multi-index
/// order (xx..x, xx..y, ...). Sum of squared L2 norms equals the seminorm
/// ||nabla^k f||^2. Supports k in 0..4.
std::vector<ScalarField> nabla_power(const ScalarField& f, int k);

/// Zero every coefficient outside the 2/3-rule mask.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& v);

/// Leray projection v - xi (xi . v)/|xi|^2; the zero mode is kept.
VectorField project_divergence_free(const VectorField& v);

/// max_xi |xi . v_hat| / max_xi |v_hat| (0 for the zero field).
double divergence_ratio(const VectorField& v);

// Plancherel helpers: every L2 quantity goes through these so the transform
// normalization lives in one place.

/// L2 inner product of two real fields, computed from their spectra.
double inner_product(const ScalarField& f, const ScalarField& g);
double inner_product(const VectorField& f, const VectorField& g);
/// ||nabla^k f||_{L2}^2 = L^{-3} sum |xi|^(2k) |f_hat|^2.
double seminorm_squared(const ScalarField& f, int k);
double seminorm_squared(const VectorField& v, int k);

/// Copy retained modes onto another grid of the same box (zero padding or
/// truncation). Modes at the target's Nyquist index are dropped.
ScalarField resample(const ScalarField& f, const GridPtr& target);
VectorField resample(const VectorField& v, const GridPtr& target);

}  // namespace hallmhd
