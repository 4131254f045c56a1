#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace facet {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<double>;
using Vector = VectorX<double>;
using Index = Eigen::Index;

/// Malformed or unreadable input (files, streams, unknown columns).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input that parses but violates a documented precondition or invariant.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid model (non-PD covariance, empty factor, bad constraint).
class ModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure: singular matrix, iteration limit, non-convergence.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace facet
