#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace teelab {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Tolerances used across the toolkit. Entropic quantities are in nats
// (natural log) throughout.
namespace tol {
constexpr double hermitian = 1e-10;
constexpr double trace_one = 1e-10;
constexpr double psd = 1e-10;        // eigenvalues >= -psd
constexpr double zero_eig = 1e-12;   // eigenvalues below this count as zero
constexpr double support = 1e-10;    // support membership threshold
}  // namespace tol

// Thrown when a request exceeds the dense-representation envelope
// (2^18 state vectors, 2^12 density operators).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an analysis cannot proceed (degenerate transfer spectrum,
// rank-deficient fit design, ...).
class analysis_error : public std::runtime_error {
 public:
  explicit analysis_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr long long max_vector_dim = 1LL << 18;
constexpr long long max_operator_dim = 1LL << 12;

}  // namespace teelab
