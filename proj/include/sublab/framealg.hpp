#pragma once

#include "sublab/core.hpp"

namespace sublab {

/// Householder reflector mapping x onto (|x|, 0, ..., 0):
///   u = (x - |x| e1) / |x - |x| e1|,  H = I - 2 u u^T.
/// Returns the identity when x is already aligned with e1 (including
/// x = 0) or when |x - |x| e1| < 1e-14 |x|.
Matrix householder_reflector(const Vector& x);

struct KappaNormalization {
  Matrix k0;
  Vector kappa_out;  // (|kappa|, 0, ..., 0)
  bool is_identity;
};

/// Initial rotation sending kappa onto the first axis.
KappaNormalization normalize_kappa(const Vector& kappa);

/// Result of the orthogonal reduction: accumulated rotation K with
/// kappa_out = K kappa and sigma_out = K sigma K^T skew tridiagonal.
/// `stages` counts every stage of the reflector chain (identity stages
/// included); `steps` counts only non-identity reflectors.
struct OrthogonalReduction {
  Matrix k;
  Vector kappa_out;
  Matrix sigma_out;
  int steps = 0;
  int stages = 0;

  double orthogonality_defect() const;
  double tridiagonality_defect() const;
};

/// Reflector chain reducing the skew matrix k0 sigma k0^T to tridiagonal
/// form by successive column sweeps: stage p (p = 0..n-3) reflects the
/// below-subdiagonal slice of column p onto its first entry through a
/// block reflector acting on rows p+1..n-1.  Each stage fixes e1, so a
/// kappa already rotated onto e1 stays there.  kappa_out is left empty;
/// adapt_frame_data fills it.  Throws NotSkew beyond defect 1e-12.
OrthogonalReduction skew_tridiagonalize(const Matrix& sigma, const Matrix& k0);

/// normalize_kappa followed by skew_tridiagonalize.  The structure
/// functions f are not transformed; pointwise reduction only.
OrthogonalReduction adapt_frame_data(const Vector& kappa, const Matrix& sigma);

/// Max |sigma_ij + sigma_ji|.
double skew_defect(const Matrix& sigma);

}  // namespace sublab
