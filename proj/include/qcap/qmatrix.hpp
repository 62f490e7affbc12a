#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qcap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances shared across the library.
inline constexpr double kHermitianTol = 1e-9;   // max |M - M^dag| allowed before symmetrizing
inline constexpr double kTraceTol = 1e-9;       // |tr(rho) - 1|
inline constexpr double kPsdTol = 1e-9;         // smallest eigenvalue >= -kPsdTol
inline constexpr double kEigClip = 1e-12;       // eigenvalues below this count as 0 in entropy sums

/// Trace-one positive-semidefinite Hermitian operator. The stored matrix is
/// exactly Hermitian: construction symmetrizes (M + M^dag)/2 after checking
/// that the drift is within kHermitianTol.
class DensityMatrix {
 public:
  /// Validating constructor: checks Hermiticity drift, unit trace and
  /// positive semidefiniteness (via eigenvalues). Throws std::invalid_argument.
  explicit DensityMatrix(ComplexMatrix m);

  /// Construction for matrices that are positive semidefinite by
  /// construction (convex mixtures, A rho A^dag, partial traces, F F^dag).
  /// Skips the eigenvalue check; still symmetrizes and checks the trace.
  static DensityMatrix from_psd(ComplexMatrix m);

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

  /// Eigenvalues in ascending order.
  RealVector eigenvalues() const;

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, Unchecked) : mat_(std::move(m)) {}

  ComplexMatrix mat_;
};

/// State on input (x) reference space, dims (dim_a, dim_b), basis index
/// a * dim_b + b. Keeps the pure-state vector when the state is rank one.
class BipartiteState {
 public:
  BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, DensityMatrix state);
  BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, ComplexVector pure);

  Eigen::Index dim_a() const { return dim_a_; }
  Eigen::Index dim_b() const { return dim_b_; }
  const DensityMatrix& state() const { return state_; }
  const std::optional<ComplexVector>& pure_vector() const { return pure_; }

 private:
  Eigen::Index dim_a_;
  Eigen::Index dim_b_;
  DensityMatrix state_;
  std::optional<ComplexVector> pure_;
};

/// Probabilistic family {rho_i, p_i}: states share a dimension, probabilities
/// are nonnegative and sum to one within kTraceTol.
class Ensemble {
 public:
  Ensemble(std::vector<DensityMatrix> states, std::vector<double> probs);

  const std::vector<DensityMatrix>& states() const { return states_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return states_.size(); }
  Eigen::Index dim() const { return states_.front().dim(); }

  /// The average state sum_i p_i rho_i.
  DensityMatrix average() const;

 private:
  std::vector<DensityMatrix> states_;
  std::vector<double> probs_;
};

enum class Subsystem { first, second };

/// Kronecker product of two matrices (index convention a*cols_b + b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of density matrices; trace one is preserved.
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced density matrix on the kept subsystem.
DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep);

/// -sum_j lambda_j log2 lambda_j over eigenvalues, in bits. Eigenvalues below
/// kEigClip contribute zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy in bits of a nonnegative vector (same clip convention).
double shannon_entropy(const RealVector& p);

/// Canonical eigenbasis purification: |phi> = sum_j sqrt(lambda_j) |v_j>|v_j>
/// on dim x dim, so both reduced matrices equal rho.
BipartiteState purify(const DensityMatrix& rho);

/// Seeded sample of a density matrix of the given rank: rho = F F^dag / tr,
/// F a dim x rank standard complex Gaussian matrix.
DensityMatrix random_density_matrix(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed);

/// Same sampler, drawing from a caller-owned generator.
DensityMatrix random_density_matrix(Eigen::Index dim, Eigen::Index rank, std::mt19937_64& rng);

/// Haar-distributed unitary (QR of a complex Gaussian matrix, phases fixed).
ComplexMatrix random_unitary(Eigen::Index dim, std::mt19937_64& rng);

}  // namespace qcap
