#include "spinflow/bilinear.hpp"

#include "spinflow/errors.hpp"

namespace spinflow {

BilinearTensor BilinearTensor::sym() const {
  return BilinearTensor(0.5 * (entries_ + entries_.transpose()));
}

BilinearTensor BilinearTensor::skew() const {
  return BilinearTensor(0.5 * (entries_ - entries_.transpose()));
}

double BilinearTensor::pairing(const BilinearTensor& other) const {
  if (other.dim() != dim()) throw DimensionError("pairing of tensors of different size");
  return entries_.cwiseProduct(other.entries_).sum();
}

}  // namespace spinflow
