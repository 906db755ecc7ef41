#pragma once

#include <string>
#include <vector>

namespace socrom {

/// Scalar coefficient function of the parameter, restricted to the affine
/// family c0 + c1*mu. Every parameter-separable operator in this project
/// carries its mu-dependence through a list of these.
template <class Scalar>
struct ScalarFun {
  Scalar c0{0};
  Scalar c1{0};

  Scalar operator()(Scalar mu) const { return c0 + c1 * mu; }

  static ScalarFun one() { return {Scalar(1), Scalar(0)}; }
  static ScalarFun identity() { return {Scalar(0), Scalar(1)}; }
  static ScalarFun constant(Scalar c) { return {c, Scalar(0)}; }
};

template <class Scalar>
std::string describe(const ScalarFun<Scalar>& f) {
  if (f.c1 == Scalar(0)) return std::to_string(static_cast<double>(f.c0));
  if (f.c0 == Scalar(0) && f.c1 == Scalar(1)) return "mu";
  return std::to_string(static_cast<double>(f.c0)) + " + " +
         std::to_string(static_cast<double>(f.c1)) + "*mu";
}

}  // namespace socrom
