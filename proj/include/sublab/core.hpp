#pragma once

#include <Eigen/Dense>

#include "sublab/errors.hpp"
#include "sublab/tensor.hpp"

namespace sublab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Bracket data of an adapted orthonormal frame at a point:
///   [e_i, e_{n+1}] = kappa_i e_{n+1}
///   [e_i, e_j]     = f^k_ij e_k - 2 sigma_ij e_{n+1}
/// with i, j, k ranging over the n horizontal directions.
///
/// Storage is 0-based; f(k, i, j) holds f^k_ij.  Antisymmetry in (i, j)
/// of both f and sigma is required exactly at construction; invalid
/// input is rejected, never repaired.
class IntegrabilityData {
 public:
  static IntegrabilityData create(int n, Tensor3 f, Vector kappa, Matrix sigma);

  int n() const { return n_; }
  const Tensor3& f() const { return f_; }
  const Vector& kappa() const { return kappa_; }
  const Matrix& sigma() const { return sigma_; }

 private:
  IntegrabilityData(int n, Tensor3 f, Vector kappa, Matrix sigma)
      : n_(n), f_(std::move(f)), kappa_(std::move(kappa)), sigma_(std::move(sigma)) {}

  int n_;
  Tensor3 f_;
  Vector kappa_;
  Matrix sigma_;
};

/// Max over all index tuples of |f^k_ij + f^k_ji| and |sigma_ij + sigma_ji|
/// on raw arrays (pre-validation).
double antisymmetry_defect(const Tensor3& f, const Matrix& sigma);

/// Same defect measured on validated data; zero by construction.
double symmetrize_check(const IntegrabilityData& data);

/// IntegrabilityData together with its first frame derivatives and the
/// repeated-direction second derivatives of kappa.  Direction index a
/// runs over 0..n (all n+1 frame directions, a = n being the vertical
/// one).
///
///   d_f(a, k, i, j)     = e_a(f^k_ij)
///   d_kappa(a, i)       = e_a(kappa_i)
///   d_sigma(a, i, j)    = e_a(sigma_ij)
///   dd_kappa_diag(a, i) = e_a e_a(kappa_i)
class IntegrabilityJet {
 public:
  static IntegrabilityJet create(IntegrabilityData base, Tensor4 d_f, Matrix d_kappa,
                                 Tensor3 d_sigma, Matrix dd_kappa_diag);

  /// Jet of frame-constant data: every derivative slot zero.
  static IntegrabilityJet constant(IntegrabilityData base);

  const IntegrabilityData& base() const { return base_; }
  int n() const { return base_.n(); }
  const Tensor4& d_f() const { return d_f_; }
  const Matrix& d_kappa() const { return d_kappa_; }
  const Tensor3& d_sigma() const { return d_sigma_; }
  const Matrix& dd_kappa_diag() const { return dd_kappa_diag_; }

 private:
  IntegrabilityJet(IntegrabilityData base, Tensor4 d_f, Matrix d_kappa, Tensor3 d_sigma,
                   Matrix dd_kappa_diag)
      : base_(std::move(base)),
        d_f_(std::move(d_f)),
        d_kappa_(std::move(d_kappa)),
        d_sigma_(std::move(d_sigma)),
        dd_kappa_diag_(std::move(dd_kappa_diag)) {}

  IntegrabilityData base_;
  Tensor4 d_f_;
  Matrix d_kappa_;
  Tensor3 d_sigma_;
  Matrix dd_kappa_diag_;
};

/// Connection coefficients of the adapted frame; p(k, i, j) holds the
/// coefficient of e_k in the horizontal part of the covariant derivative
/// along e_i of e_j.  Satisfies p(k,i,j) = -p(j,i,k) exactly by
/// construction.
struct ConnectionCoeffs {
  Tensor3 p;

  int n() const { return p.dim0(); }
  double coeff(int k, int i, int j) const { return p(k, i, j); }
};

/// Ricci curvature of the base evaluated on the pushed-forward frame,
/// values(i, j) = Ricci(eps_i, eps_j).  Must be exactly symmetric.
class BaseRicci {
 public:
  static BaseRicci create(Matrix values);

  int n() const { return static_cast<int>(values_.rows()); }
  const Matrix& values() const { return values_; }

 private:
  explicit BaseRicci(Matrix values) : values_(std::move(values)) {}
  Matrix values_;
};

/// Scale used by tolerance checks on analytic (non-grid) data.
double data_scale(const IntegrabilityData& data);

/// Max deviation from the adapted normal form: |kappa_i| for i >= 2 and
/// |sigma_ij| for |i-j| >= 2.
double adapted_defect(const IntegrabilityData& data);

/// Throws NotAdapted when adapted_defect exceeds 1e-12 * data_scale.
void require_adapted(const IntegrabilityData& data, const char* where);

inline constexpr double kDegenerateKappaThreshold = 1e-12;

}  // namespace sublab
