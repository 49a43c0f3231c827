#include "sublab/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sublab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NotAdapted: return "NotAdapted";
    case ErrorCode::DegenerateKappa: return "DegenerateKappa";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularMetric: return "SingularMetric";
    case ErrorCode::UnknownExample: return "UnknownExample";
  }
  return "Error";
}

namespace {

// Indices are reported 1-based.
void check_antisymmetry_exact(int n, const Tensor3& f, const Matrix& sigma) {
  double worst = 0.0;
  std::string worst_name;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = sigma(i, j) + sigma(j, i);
      if (!(v == 0.0)) {
        double mag = std::abs(v);
        if (!(mag <= worst) || worst_name.empty()) {
          worst = mag;
          std::ostringstream os;
          os << "sigma[" << (j + 1) << "][" << (i + 1) << "]";
          worst_name = os.str();
        }
      }
      for (int k = 0; k < n; ++k) {
        double w = f(k, i, j) + f(k, j, i);
        if (!(w == 0.0)) {
          double mag = std::abs(w);
          if (!(mag <= worst) || worst_name.empty()) {
            worst = mag;
            std::ostringstream os;
            os << "f[" << (k + 1) << "][" << (j + 1) << "][" << (i + 1) << "]";
            worst_name = os.str();
          }
        }
      }
    }
  }
  if (!worst_name.empty()) {
    std::ostringstream os;
    os << "entry " << worst_name << " breaks antisymmetry, |pair sum| = " << worst;
    fail(ErrorCode::AntisymmetryViolation, os.str());
  }
}

}  // namespace

IntegrabilityData IntegrabilityData::create(int n, Tensor3 f, Vector kappa,
                                            Matrix sigma) {
  if (n < 1) fail(ErrorCode::DimensionMismatch, "n must be positive");
  if (f.dim0() != n || f.dim1() != n || f.dim2() != n)
    fail(ErrorCode::DimensionMismatch, "f must be n x n x n");
  if (kappa.size() != n) fail(ErrorCode::DimensionMismatch, "kappa must have length n");
  if (sigma.rows() != n || sigma.cols() != n)
    fail(ErrorCode::DimensionMismatch, "sigma must be n x n");
  check_antisymmetry_exact(n, f, sigma);
  return IntegrabilityData(n, std::move(f), std::move(kappa), std::move(sigma));
}

double antisymmetry_defect(const Tensor3& f, const Matrix& sigma) {
  double worst = 0.0;
  const int n = static_cast<int>(sigma.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(sigma(i, j) + sigma(j, i)));
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(f(k, i, j) + f(k, j, i)));
    }
  return worst;
}

double symmetrize_check(const IntegrabilityData& data) {
  return antisymmetry_defect(data.f(), data.sigma());
}

IntegrabilityJet IntegrabilityJet::create(IntegrabilityData base, Tensor4 d_f,
                                          Matrix d_kappa, Tensor3 d_sigma,
                                          Matrix dd_kappa_diag) {
  const int n = base.n();
  const int dirs = n + 1;
  if (d_f.dim0() != dirs || d_f.dim1() != n || d_f.dim2() != n || d_f.dim3() != n)
    fail(ErrorCode::DimensionMismatch, "d_f must be (n+1) x n x n x n");
  if (d_kappa.rows() != dirs || d_kappa.cols() != n)
    fail(ErrorCode::DimensionMismatch, "d_kappa must be (n+1) x n");
  if (d_sigma.dim0() != dirs || d_sigma.dim1() != n || d_sigma.dim2() != n)
    fail(ErrorCode::DimensionMismatch, "d_sigma must be (n+1) x n x n");
  if (dd_kappa_diag.rows() != dirs || dd_kappa_diag.cols() != n)
    fail(ErrorCode::DimensionMismatch, "dd_kappa_diag must be (n+1) x n");
  for (int a = 0; a < dirs; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (!(d_sigma(a, i, j) + d_sigma(a, j, i) == 0.0))
          fail(ErrorCode::AntisymmetryViolation,
               "d_sigma slice " + std::to_string(a + 1) + " is not antisymmetric");
        for (int k = 0; k < n; ++k)
          if (!(d_f(a, k, i, j) + d_f(a, k, j, i) == 0.0))
            fail(ErrorCode::AntisymmetryViolation,
                 "d_f slice " + std::to_string(a + 1) + " is not antisymmetric");
      }
  return IntegrabilityJet(std::move(base), std::move(d_f), std::move(d_kappa),
                          std::move(d_sigma), std::move(dd_kappa_diag));
}

IntegrabilityJet IntegrabilityJet::constant(IntegrabilityData base) {
  const int n = base.n();
  return IntegrabilityJet(std::move(base), Tensor4(n + 1, n, n, n),
                          Matrix::Zero(n + 1, n), Tensor3(n + 1, n, n),
                          Matrix::Zero(n + 1, n));
}

BaseRicci BaseRicci::create(Matrix values) {
  if (values.rows() != values.cols())
    fail(ErrorCode::DimensionMismatch, "ricci must be square");
  for (int i = 0; i < values.rows(); ++i)
    for (int j = i + 1; j < values.cols(); ++j)
      if (!(values(i, j) == values(j, i)))
        fail(ErrorCode::SymmetryViolation,
             "ricci[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                 "] != ricci[" + std::to_string(j + 1) + "][" + std::to_string(i + 1) +
                 "]");
  return BaseRicci(std::move(values));
}

double data_scale(const IntegrabilityData& data) {
  double s = 1.0;
  s = std::max(s, data.kappa().lpNorm<Eigen::Infinity>());
  s = std::max(s, data.sigma().lpNorm<Eigen::Infinity>());
  for (double v : data.f().raw()) s = std::max(s, std::abs(v));
  return s;
}

double adapted_defect(const IntegrabilityData& data) {
  const int n = data.n();
  double worst = 0.0;
  for (int i = 1; i < n; ++i) worst = std::max(worst, std::abs(data.kappa()(i)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(i - j) >= 2) worst = std::max(worst, std::abs(data.sigma()(i, j)));
  return worst;
}

void require_adapted(const IntegrabilityData& data, const char* where) {
  double defect = adapted_defect(data);
  if (defect > 1e-12 * data_scale(data))
    fail(ErrorCode::NotAdapted,
         std::string(where) + ": data not in adapted normal form, defect = " +
             std::to_string(defect));
}

}  // namespace sublab
