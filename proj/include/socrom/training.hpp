#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace socrom {

/// Discrete parameter sample set with quadrature weights. The weighted sums
/// over the samples stand in for integrals over the parameter interval, so
/// weights are nonnegative and sum to one.
struct TrainingSet {
  std::vector<double> samples;
  std::vector<double> weights;
  double lo = 0.0;
  double hi = 0.0;

  std::size_t size() const { return samples.size(); }

  void validate() const {
    if (samples.empty()) throw std::invalid_argument("TrainingSet: empty sample set");
    if (weights.size() != samples.size())
      throw std::invalid_argument("TrainingSet: weight/sample count mismatch");
    double sum = 0.0;
    for (double w : weights) {
      if (!(w >= 0.0)) throw std::invalid_argument("TrainingSet: negative weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("TrainingSet: weights must sum to 1");
    for (double mu : samples)
      if (mu < lo - 1e-12 || mu > hi + 1e-12)
        throw std::invalid_argument("TrainingSet: sample outside parameter interval");
  }

  static TrainingSet uniform(std::vector<double> mus, double lo, double hi) {
    TrainingSet t;
    t.samples = std::move(mus);
    t.weights.assign(t.samples.size(), 1.0 / static_cast<double>(t.samples.size()));
    t.lo = lo;
    t.hi = hi;
    t.validate();
    return t;
  }
};

/// Weighted discrete L2 norm ||v|| = sqrt(sum_j w_j v_j^2).
inline double weighted_l2_norm(const std::vector<double>& v, const TrainingSet& t) {
  if (v.size() != t.size()) throw std::invalid_argument("weighted_l2_norm: size mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) s += t.weights[j] * v[j] * v[j];
  return std::sqrt(s);
}

}  // namespace socrom
