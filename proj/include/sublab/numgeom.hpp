#pragma once

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sublab/core.hpp"

namespace sublab {

using VectorC = Eigen::VectorXcd;
using MetricSampler = std::function<Matrix(const Vector&)>;
using FieldSampler = std::function<Vector(const Vector&)>;

struct Box {
  Vector lo;
  Vector hi;

  int dim() const { return static_cast<int>(lo.size()); }
  /// Containment with a slack fraction of each coordinate span, so that
  /// finite-difference stencils near the boundary stay admissible.
  bool contains(const Vector& x, double slack = 0.05) const;
  Vector center() const { return 0.5 * (lo + hi); }
};

/// Explicit chart-level description of a submersion: total and base
/// metrics, the projection (evaluable at complex points so its Jacobian
/// can be taken by complex step), an orthonormal frame on the base
/// chart, and the coordinate box the chart is trusted on.
struct ChartSubmersion {
  std::string name;
  int n = 0;  // base dimension; total dimension is n+1

  MetricSampler metric_total;                          // (n+1) x (n+1)
  MetricSampler metric_base;                           // n x n
  std::function<VectorC(const VectorC&)> projection_c; // analytic continuation
  std::function<Matrix(const Vector&)> frame_base;     // columns eps_1..eps_n
  Box domain;

  bool space_form = false;        // total space has constant curvature
  double curvature = 0.0;         // c when space_form
  bool base_space_form = false;
  double base_curvature = 0.0;    // base constant when base_space_form

  Vector projection(const Vector& x) const;
  /// dphi at x: n x (n+1), complex-step, machine precision.
  Matrix projection_jacobian(const Vector& x) const;
  /// Ricci of the base in the orthonormal frame, (n-1) * base_curvature * I.
  Matrix base_ricci() const;
};

/// Adapted frame at x as an (n+1) x (n+1) coordinate matrix: columns
/// 0..n-1 are the horizontal lifts of the base frame, column n the unit
/// vertical field (orientation fixed by a deterministic sign rule).
/// Throws OutOfDomain / RankDeficient / SingularMetric.
Matrix horizontal_lift(const ChartSubmersion& cs, const Vector& x);

/// Frame-field sampler q -> horizontal_lift(cs, q).
std::function<Matrix(const Vector&)> frame_field(const ChartSubmersion& cs);

/// Central-difference Lie bracket [V, W](x), error O(h^2).
Vector lie_bracket_fd(const FieldSampler& V, const FieldSampler& W, const Vector& x,
                      double h);

/// Bracket data at x from finite-difference brackets of the adapted
/// frame:
///   kappa_i = <[e_i, e_v], e_v>,  f^k_ij = <[e_i, e_j], e_k>,
///   sigma_ij = -<[e_i, e_j], e_v> / 2,
/// computed for i < j and mirrored, so the antisymmetries hold exactly.
IntegrabilityData extract_integrability_data(const ChartSubmersion& cs, const Vector& x,
                                             double h);

/// Adds first derivatives along the frame (straight-line central
/// differences with step h in the frame direction) and the diagonal
/// second derivatives of kappa (three-point second difference along
/// two-step Euler flow approximations with substep h/2).
IntegrabilityJet extract_jet(const ChartSubmersion& cs, const Vector& x, double h);

struct GridJet {
  Vector point;
  IntegrabilityJet jet;
  double h;
};

GridJet grid_jet(const ChartSubmersion& cs, const Vector& x, double h);

/// Christoffel symbols of the metric at x, G(c, a, b) = Gamma^c_ab,
/// metric derivatives by central differences.  Throws SingularMetric.
Tensor3 christoffel_fd(const MetricSampler& metric, const Vector& x, double h);

/// Coordinate curvature by nested differencing.
///   up(d, a, b, c)  : component along dx_d of R(dx_a, dx_b) dx_c
///   down(a, b, c, d): <R(dx_a, dx_b) dx_c, dx_d>
struct RiemannComponents {
  Tensor4 up;
  Tensor4 down;
};

RiemannComponents riemann_fd(const MetricSampler& metric, const Vector& x, double h);

/// Curvature in the adapted frame with the index pairing the identity
/// evaluators use: Rm(a, b, c, d) = <R(E_a, E_b) E_d, E_c>.  The four
/// identity families equal -Rm at the matching index slots.
Tensor4 frame_curvature(const ChartSubmersion& cs, const Vector& x, double h);

/// Sectional curvature of the coordinate plane (a, b).
double sectional_curvature(const MetricSampler& metric, const Vector& x, double h,
                           int a, int b);

/// Max over sample points and adapted-frame planes of |K(plane) - c|.
double sectional_curvature_check(const ChartSubmersion& cs, double c,
                                 const std::vector<Vector>& points, double h);

/// Names: flat, hyperbolic-slice, hopf, nil3.
std::vector<std::string> example_names();

/// Catalog lookup.  `n` is the base dimension for the flat and
/// hyperbolic-slice families; hopf and nil3 are three-dimensional total
/// spaces (n must be 2 or 0 for "default").  Throws UnknownExample.
ChartSubmersion catalog_example(const std::string& name, int n);

std::vector<ChartSubmersion> example_catalog(int n);

/// Uniform sample points from the chart box shrunk by a 10% margin.
std::vector<Vector> sample_points(const ChartSubmersion& cs, int count,
                                  std::mt19937_64& rng);

/// Exact bracket data of the hyperbolic-slice family (kappa = e1,
/// f^i_{1i} = 1 for i >= 2, sigma = 0); frame-constant, so the constant
/// jet is its exact jet.
IntegrabilityData hyperbolic_slice_data(int n);
IntegrabilityJet hyperbolic_slice_jet(int n);
BaseRicci hyperbolic_slice_ricci(int n);

}  // namespace sublab
