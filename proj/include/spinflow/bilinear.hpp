#pragma once

#include <utility>

#include "spinflow/types.hpp"

namespace spinflow {

/// Real bilinear form on the frame, stored as entries(i, j) = B(e_i, e_j).
class BilinearTensor {
 public:
  BilinearTensor() = default;
  explicit BilinearTensor(RMatrix entries) : entries_(std::move(entries)) {}
  static BilinearTensor zero(int n) { return BilinearTensor(RMatrix::Zero(n, n)); }

  int dim() const { return static_cast<int>(entries_.rows()); }
  const RMatrix& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

  BilinearTensor sym() const;
  BilinearTensor skew() const;

  /// sum over ordered pairs (i, j) of entries^2.
  double frob_sq() const { return entries_.squaredNorm(); }
  double trace() const { return entries_.trace(); }
  /// sum_{ij} entries(i,j) * other(i,j).
  double pairing(const BilinearTensor& other) const;

 private:
  RMatrix entries_;
};

}  // namespace spinflow
