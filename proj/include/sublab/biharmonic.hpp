#pragma once

#include <span>

#include "sublab/core.hpp"

namespace sublab {

/// Tension field coefficients in the base frame: -kappa.  The submersion
/// is harmonic exactly when this vanishes.
Vector tension(const IntegrabilityData& data);

struct BitensionResult {
  Vector tension;        // -kappa
  Vector residuals;      // k-indexed left side of the biharmonicity system
  double tension_norm;   // |kappa|
};

/// Full biharmonicity residual.  residuals[k] collects, for each
/// horizontal index k,
///
///   sum_a e_a e_a(k_k)  -  p(j,i,i) e_j(k_k)  -  k_i e_i(k_k)
///   + sum_ij [ 2 e_i(k_j) p(k,i,j) + k_j e_i(p(k,i,j))
///              + k_j p(l,i,j) p(k,i,l) - k_i k_j p(k,i,j)
///              - k_j p(l,i,i) p(k,l,j) ]
///   + Ricci(dphi(mu), dphi(e_k)),     mu = sum_i k_i e_i,
///
/// with the first sum over all n+1 frame directions.  The submersion is
/// biharmonic exactly when every entry vanishes.
BitensionResult bitension_residual(const IntegrabilityJet& jet, const BaseRicci& ricci);

/// Biharmonicity system in the adapted normal form, with the
/// constant-curvature substitution
/// Ricci(dphi(mu), dphi(e_1)) = 3 k1 s12^2 + (n-1) k1 c:
///
///   r1    = Lap(k1) - k1 sum_il p(l,i,1)^2 + 3 k1 s12^2 + (n-1) k1 c
///   rk[k] = sum_i [ 2 e_i(k1) p(k,i,1) + k1 e_i(p(k,i,1))
///                   + k1 p(l,i,1) p(k,i,l) - k_i k1 p(k,i,1)
///                   - k1 p(l,i,i) p(k,l,1) ],   k >= 2,
///
/// where Lap(k1) = sum_{i<=n} e_i e_i(k1) - p(j,i,i) e_j(k1) - k1 e_1(k1).
struct SimplifiedResiduals {
  double r1;
  Vector rk;  // length n-1, entries for k = 2..n
};

SimplifiedResiduals simplified_residuals(const IntegrabilityJet& jet, double c);

/// Scalar obstruction in the adapted normal form:
///   k1^2 + s12^2 - 2 sum_im s_im^2 + (2n-1) c.
/// Requires adapted data.
double key_identity_residual(const IntegrabilityData& data, double c);

/// Derived scalar relation:
///   4 s12^2 + (s12^2 / k1^2) sum_{l>=2} s_l2^2 + (2n-2) c.
/// Throws DegenerateKappa when |k1| < 1e-12.
double e1_identity_residual(const IntegrabilityData& data, double c);

/// Residual of e_v e_v(kappa_a) + kappa_a (sum_i kappa_i^2 + (2n-1) c),
/// with the second derivative taken from the jet's vertical slot.
/// Index a is 0-based.
double eek_identity_residual(const IntegrabilityJet& jet, double c, int a);

struct FiberConstancy {
  double max_d_f;
  double max_d_kappa;
  double max_d_sigma;
};

/// Maxima of the vertical-direction derivative slots across a batch of
/// jets.  All three vanish for data extracted from a biharmonic
/// submersion; the f slot vanishes for any submersion (f is a pullback
/// from the base).
FiberConstancy fiber_constancy_report(std::span<const IntegrabilityJet> jets);

}  // namespace sublab
