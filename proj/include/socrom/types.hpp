#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace socrom {

template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVecX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Mat = MatX<double>;
using Vec = VecX<double>;
using RowVec = RowVecX<double>;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

using Index = Eigen::Index;

}  // namespace socrom
