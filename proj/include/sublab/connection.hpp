#pragma once

#include "sublab/core.hpp"

namespace sublab {

/// Connection coefficients from the structure functions,
///   p(k, i, j) = (-f^j_ik - f^i_jk + f^k_ij) / 2.
/// The output satisfies p(k,i,j) = -p(j,i,k) exactly and
/// p(k,i,j) - p(k,j,i) = f^k_ij.
ConnectionCoeffs connection_coefficients(const IntegrabilityData& data);

/// Full covariant-derivative table of the adapted frame.  Returns
/// N(a, b, c) = coefficient of e_c in the covariant derivative along e_a
/// of e_b, with a, b, c in 0..n (index n = vertical direction):
///   along e_i of e_j:      p(k,i,j) e_k - sigma_ij e_{n+1}
///   along e_v of e_v:      sum_i kappa_i e_i
///   along e_i of e_v:      sigma_ij e_j
///   along e_v of e_i:      sigma_ij e_j - kappa_i e_{n+1}
Tensor3 covariant_table(const IntegrabilityData& data, const ConnectionCoeffs& conn);

/// Derivative of the connection coefficients along frame direction a,
/// obtained from d_f by linearity of the defining formula.
double connection_coefficient_derivative(const IntegrabilityJet& jet, int a, int k,
                                         int i, int j);

/// Residuals of the four curvature identities of the adapted frame
/// against their constant-curvature targets (0, -c, -c, 0).  Zero
/// residuals certify consistency with constant sectional curvature c.
///
///   r1(a,c,d): e_a(s_cd) + p(d,a,l) s_cl - p(l,a,c) s_ld
///              - k_c s_ad + k_d s_ac - k_a s_cd                   -> 0
///   r2(a,b):   e_a(p(b,b,a)) + p(l,b,a) p(b,a,l) + 3 s_ab^2
///              - e_b(p(b,a,a)) - p(l,a,a) p(b,b,l)
///              - f^l_ab p(b,l,a)                                  -> -c
///   r3(a):     -s_al^2 - e_a(k_a) + p(l,a,a) k_l + k_a^2          -> -c
///   r4(a,c):   -s_cl s_al - e_a(k_c) + p(l,a,c) k_l + k_a k_c
///              + e_v(s_ac)                                        -> 0
///
/// (s = sigma, k = kappa, summation over l, e_v the vertical frame
/// direction.)  r2 and r4 are reported off-diagonal only.
struct CurvatureResiduals {
  Tensor3 r1;  // (a, c, d)
  Matrix r2;   // (a, b), a != b
  Vector r3;   // (a)
  Matrix r4;   // (a, c), a != c
  double c = 0.0;

  double max_abs() const;
  double max_abs_r1() const;
  double max_abs_r2() const;
  double max_abs_r3() const;
  double max_abs_r4() const;
};

CurvatureResiduals curvature_residuals(const IntegrabilityJet& jet, double c);

/// Residuals of the curvature relations specialized to the adapted
/// normal form (kappa = (k1, 0, ..., 0), sigma tridiagonal).  Entries
/// outside each relation's index range are left zero.
struct AdaptedRelationResiduals {
  Vector d_kappa1;      // e_i(k1) relation, indexed by i
  double d1_kappa1;     // e_1(k1) relation
  Vector d_sigma12;     // e_i(s12) relation, indexed by i
  Matrix p1;            // p(1,i,m) relation, m >= 2
  Matrix p2_sigma;      // p(2,i,j) s12 relation, j >= 3
  Vector d_sigma2m;     // e_1(s_2m) relation, indexed by m
  Matrix d_sigma_im;    // e_1(s_im) relation with kappa terms
  Matrix d_sigma_im3;   // e_1(s_im) relation, i, m >= 3

  double max_abs() const;
};

/// Throws NotAdapted if the data are not in adapted form and
/// DegenerateKappa when |kappa_1| < 1e-12 (one relation divides by it).
AdaptedRelationResiduals adapted_curvature_relations(const IntegrabilityJet& jet,
                                                     double c);

}  // namespace sublab
