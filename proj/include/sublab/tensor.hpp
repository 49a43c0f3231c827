#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace sublab {

/// Dense rank-3 array of doubles, zero-initialized, row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2)
      : d0_(d0), d1_(d1), d2_(d2),
        v_(static_cast<std::size_t>(d0) * d1 * d2, 0.0) {}

  double& operator()(int a, int b, int c) { return v_[index(a, b, c)]; }
  double operator()(int a, int b, int c) const { return v_[index(a, b, c)]; }

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  std::size_t size() const { return v_.size(); }

  const std::vector<double>& raw() const { return v_; }
  std::vector<double>& raw() { return v_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.v_ == b.v_;
  }

 private:
  std::size_t index(int a, int b, int c) const {
    assert(a >= 0 && a < d0_ && b >= 0 && b < d1_ && c >= 0 && c < d2_);
    return (static_cast<std::size_t>(a) * d1_ + b) * d2_ + c;
  }

  int d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<double> v_;
};

/// Dense rank-4 array of doubles, zero-initialized, row-major.
class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(int d0, int d1, int d2, int d3)
      : d0_(d0), d1_(d1), d2_(d2), d3_(d3),
        v_(static_cast<std::size_t>(d0) * d1 * d2 * d3, 0.0) {}

  double& operator()(int a, int b, int c, int d) { return v_[index(a, b, c, d)]; }
  double operator()(int a, int b, int c, int d) const { return v_[index(a, b, c, d)]; }

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  int dim3() const { return d3_; }
  std::size_t size() const { return v_.size(); }

  const std::vector<double>& raw() const { return v_; }
  std::vector<double>& raw() { return v_; }

  friend bool operator==(const Tensor4& a, const Tensor4& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.d3_ == b.d3_ &&
           a.v_ == b.v_;
  }

 private:
  std::size_t index(int a, int b, int c, int d) const {
    assert(a >= 0 && a < d0_ && b >= 0 && b < d1_ && c >= 0 && c < d2_ && d >= 0 &&
           d < d3_);
    return ((static_cast<std::size_t>(a) * d1_ + b) * d2_ + c) * d3_ + d;
  }

  int d0_ = 0, d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<double> v_;
};

}  // namespace sublab
