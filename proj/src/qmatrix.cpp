#include "qcap/qmatrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qcap {

namespace {

double hermitian_drift(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix symmetrized(ComplexMatrix m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  const double drift = hermitian_drift(m);
  if (drift > kHermitianTol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: drift " << drift << " exceeds " << kHermitianTol;
    throw std::invalid_argument(msg.str());
  }
  return 0.5 * (m + m.adjoint().eval());
}

void check_trace(const ComplexMatrix& m) {
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " is not 1 within " << kTraceTol;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(symmetrized(std::move(m))) {
  check_trace(mat_);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << min_eig;
    throw std::invalid_argument(msg.str());
  }
}

DensityMatrix DensityMatrix::from_psd(ComplexMatrix m) {
  ComplexMatrix sym = symmetrized(std::move(m));
  check_trace(sym);
  return DensityMatrix(std::move(sym), Unchecked{});
}

RealVector DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

BipartiteState::BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, DensityMatrix state)
    : dim_a_(dim_a), dim_b_(dim_b), state_(std::move(state)) {
  if (dim_a_ < 1 || dim_b_ < 1 || state_.dim() != dim_a_ * dim_b_) {
    throw std::invalid_argument("bipartite state dimension must equal dim_a * dim_b");
  }
}

BipartiteState::BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, ComplexVector pure)
    : dim_a_(dim_a),
      dim_b_(dim_b),
      state_(DensityMatrix::from_psd(pure * pure.adjoint() / pure.squaredNorm())),
      pure_(pure / pure.norm()) {
  if (dim_a_ < 1 || dim_b_ < 1 || pure_->size() != dim_a_ * dim_b_) {
    throw std::invalid_argument("pure vector length must equal dim_a * dim_b");
  }
}

Ensemble::Ensemble(std::vector<DensityMatrix> states, std::vector<double> probs)
    : states_(std::move(states)), probs_(std::move(probs)) {
  if (states_.empty() || states_.size() != probs_.size()) {
    throw std::invalid_argument("ensemble needs matching nonempty state and probability lists");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw std::invalid_argument("ensemble probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > kTraceTol) {
    throw std::invalid_argument("ensemble probabilities must sum to 1");
  }
  const Eigen::Index d = states_.front().dim();
  for (const auto& s : states_) {
    if (s.dim() != d) throw std::invalid_argument("ensemble states must share a dimension");
  }
}

DensityMatrix Ensemble::average() const {
  ComplexMatrix acc = ComplexMatrix::Zero(dim(), dim());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    acc += probs_[i] * states_[i].matrix();
  }
  return DensityMatrix::from_psd(std::move(acc));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_psd(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep) {
  const Eigen::Index da = s.dim_a();
  const Eigen::Index db = s.dim_b();
  const ComplexMatrix& m = s.state().matrix();
  if (keep == Subsystem::first) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index a = 0; a < da; ++a) {
      for (Eigen::Index ap = 0; ap < da; ++ap) {
        Complex sum = 0.0;
        for (Eigen::Index b = 0; b < db; ++b) {
          sum += m(a * db + b, ap * db + b);
        }
        out(a, ap) = sum;
      }
    }
    return DensityMatrix::from_psd(std::move(out));
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Eigen::Index b = 0; b < db; ++b) {
    for (Eigen::Index bp = 0; bp < db; ++bp) {
      Complex sum = 0.0;
      for (Eigen::Index a = 0; a < da; ++a) {
        sum += m(a * db + b, a * db + bp);
      }
      out(b, bp) = sum;
    }
  }
  return DensityMatrix::from_psd(std::move(out));
}

double shannon_entropy(const RealVector& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > kEigClip) {
      h -= p[i] * std::log2(p[i]);
    }
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy(rho.eigenvalues());
}

BipartiteState purify(const DensityMatrix& rho) {
  const Eigen::Index d = rho.dim();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  const RealVector& lambda = solver.eigenvalues();
  const ComplexMatrix& vecs = solver.eigenvectors();
  ComplexVector phi = ComplexVector::Zero(d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const double lj = std::max(lambda[j], 0.0);
    if (lj == 0.0) continue;
    const double w = std::sqrt(lj);
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        phi[a * d + b] += w * vecs(a, j) * vecs(b, j);
      }
    }
  }
  return BipartiteState(d, d, std::move(phi));
}

DensityMatrix random_density_matrix(Eigen::Index dim, Eigen::Index rank, std::mt19937_64& rng) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw std::invalid_argument("rank must satisfy 1 <= rank <= dim");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix f(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < rank; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      f(i, j) = Complex(re, im);
    }
  }
  ComplexMatrix g = f * f.adjoint();
  g /= g.trace().real();
  return DensityMatrix::from_psd(std::move(g));
}

DensityMatrix random_density_matrix(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_density_matrix(dim, rank, rng);
}

ComplexMatrix random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0.0) ? rjj / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace qcap
