#include "njc/oracle.hpp"

#include <cmath>

#include "njc/algebra.hpp"
#include "njc/error.hpp"

namespace njc {

namespace {

using Real = DenseOracle::Real;
using Scalar = DenseOracle::Scalar;
using Matrix = DenseOracle::Matrix;

template <typename M>
M kron(const M& field_op, const M& atom_op) {
  M out = M::Zero(field_op.rows() * atom_op.rows(), field_op.cols() * atom_op.cols());
  for (Eigen::Index i = 0; i < field_op.rows(); ++i) {
    for (Eigen::Index j = 0; j < field_op.cols(); ++j) {
      if (field_op(i, j) == typename M::Scalar{}) continue;
      out.block(i * atom_op.rows(), j * atom_op.cols(), atom_op.rows(), atom_op.cols()) =
          field_op(i, j) * atom_op;
    }
  }
  return out;
}

// Atomic operators on (|e⟩, |g⟩).
struct AtomOps {
  Matrix identity, sigma_z, sigma_plus, sigma_minus, excited_projector;
};

AtomOps atom_ops() {
  AtomOps ops{Matrix::Identity(2, 2), Matrix::Zero(2, 2), Matrix::Zero(2, 2), Matrix::Zero(2, 2),
              Matrix::Zero(2, 2)};
  ops.sigma_z(0, 0) = 1;
  ops.sigma_z(1, 1) = -1;
  ops.sigma_plus(0, 1) = 1;  // |e⟩⟨g|
  ops.sigma_minus = ops.sigma_plus.adjoint();
  ops.excited_projector(0, 0) = 1;
  return ops;
}

struct Operators {
  Matrix h;
  Matrix h0;
  Matrix n;
};

Operators build_operators(const ModelParams& params, FockCutoff cutoff) {
  const auto lad = build_ladder<Real>(params, cutoff);
  const AtomOps at = atom_ops();
  const Real w = params.omega();
  const Real nu = static_cast<Real>(params.r()) * w;
  const Real chi = static_cast<Real>(params.k()) * w;
  const Real gw = static_cast<Real>(params.g()) * w;
  const Matrix id_f = Matrix::Identity(cutoff.dim(), cutoff.dim());

  const Matrix number = lad.a_dagger * lad.a;
  const Matrix kerr = lad.a_dagger * lad.a_dagger * lad.a * lad.a;
  Operators ops;
  ops.h = w * kron(number, at.identity) + (nu / 2) * kron(id_f, at.sigma_z) +
          chi * kron(kerr, at.identity) +
          gw * (kron(lad.k_minus, at.sigma_plus) + kron(lad.k_plus, at.sigma_minus));
  ops.h0 = w * kron(Matrix(lad.k_plus * lad.k_minus), at.identity) +
           (nu / 2) * kron(id_f, at.sigma_z);
  ops.n = kron(Matrix(lad.k_plus * lad.k_minus), at.identity) +
          Real(2) * kron(lad.k_zero, at.excited_projector);
  return ops;
}

Eigen::MatrixXcd to_double(const Matrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = cplx(static_cast<double>(m(i, j).real()), static_cast<double>(m(i, j).imag()));
    }
  }
  return out;
}

}  // namespace

DenseOracle::DenseOracle(const ModelParams& params, FockCutoff cutoff) : cutoff_(cutoff) {
  Operators ops = build_operators(params, cutoff);
  hamiltonian_ = std::move(ops.h);
  free_energies_ = ops.h0.diagonal().real();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian_);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver did not converge");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

DenseOracle::Vector DenseOracle::propagate(const InitialCondition& init, double t) const {
  if (init.field().n_max() != cutoff_.n_max()) {
    throw DimensionMismatch("initial field cutoff differs from oracle cutoff");
  }
  const Eigen::VectorXcd psi0_d = to_product_vector(initial_state(init));
  Vector psi0(psi0_d.size());
  for (Eigen::Index i = 0; i < psi0.size(); ++i) psi0(i) = Scalar(psi0_d(i).real(), psi0_d(i).imag());

  Vector coeffs = eigenvectors_.adjoint() * psi0;
  const Real tl = t;
  for (Eigen::Index m = 0; m < coeffs.size(); ++m) {
    coeffs(m) *= std::polar(Real(1), -eigenvalues_(m) * tl);
  }
  return eigenvectors_ * coeffs;
}

AtomFieldState DenseOracle::evolve_schrodinger(const InitialCondition& init, double t) const {
  const Vector psi = propagate(init, t);
  Eigen::VectorXcd out(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    out(i) = cplx(static_cast<double>(psi(i).real()), static_cast<double>(psi(i).imag()));
  }
  return from_product_vector(out, t, Frame::schrodinger);
}

AtomFieldState DenseOracle::evolve(const InitialCondition& init, double t) const {
  const Vector psi = propagate(init, t);
  const Real tl = t;
  Eigen::VectorXcd out(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const Scalar v = std::polar(Real(1), free_energies_(i) * tl) * psi(i);
    out(i) = cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  return from_product_vector(out, t, Frame::interaction);
}

DenseOracle::Real DenseOracle::energy(const InitialCondition& init, double t) const {
  const Vector psi = propagate(init, t);
  return psi.dot(hamiltonian_ * psi).real();
}

AtomFieldState oracle_evolve(const ModelParams& params, const InitialCondition& init, double t,
                             FockCutoff cutoff) {
  return DenseOracle(params, cutoff).evolve(init, t);
}

Eigen::MatrixXcd hamiltonian_matrix(const ModelParams& params, FockCutoff cutoff) {
  return to_double(build_operators(params, cutoff).h);
}

Eigen::MatrixXcd constant_of_motion_matrix(const ModelParams& params, FockCutoff cutoff) {
  return to_double(build_operators(params, cutoff).n);
}

cplx expectation(const Eigen::MatrixXcd& op, const AtomFieldState& state) {
  const Eigen::VectorXcd v = to_product_vector(state);
  if (op.rows() != v.size() || op.cols() != v.size()) {
    throw DimensionMismatch("operator does not match the product-basis dimension");
  }
  return v.dot(op * v);
}

}  // namespace njc
