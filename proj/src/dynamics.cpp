#include "njc/dynamics.hpp"

#include <cmath>
#include <string>

#include "njc/error.hpp"
#include "njc/spectrum.hpp"

namespace njc {

namespace {

constexpr cplx kI{0.0, 1.0};

// sin(Ωt/2)/Ω with its Ω → 0 limit t/2.
double half_angle_sinc(double omega, double t) {
  if (omega < 1e-14) return 0.5 * t;
  return std::sin(0.5 * omega * t) / omega;
}

void require_interaction(const AtomFieldState& s, const char* what) {
  if (s.frame != Frame::interaction) {
    throw InvalidArgument(std::string(what) + " expects an interaction-frame state");
  }
}

}  // namespace

InitialCondition::InitialCondition(cplx ce, cplx cg, FieldState field)
    : atom_e_(ce), atom_g_(cg), field_(std::move(field)) {
  const double n = std::norm(ce) + std::norm(cg);
  if (std::abs(n - 1.0) > 1e-12) {
    throw ValidationError("atomic amplitudes are not normalised (|ce|^2+|cg|^2 = " +
                          std::to_string(n) + ")");
  }
}

InitialCondition InitialCondition::excited(FieldState field) {
  return InitialCondition(1.0, 0.0, std::move(field));
}

InitialCondition InitialCondition::ground(FieldState field) {
  return InitialCondition(0.0, 1.0, std::move(field));
}

InitialCondition InitialCondition::superposition(cplx ce, cplx cg, FieldState field) {
  return InitialCondition(ce, cg, std::move(field));
}

AtomFieldState initial_state(const InitialCondition& init) {
  const auto& c = init.field().amplitudes();
  return AtomFieldState{init.atom_excited() * c, init.atom_ground() * c, 0.0, Frame::interaction};
}

AtomFieldState evolve_closed_form(const ModelParams& params, const InitialCondition& init,
                                  double t) {
  return evolve_closed_form(params, initial_state(init), t);
}

AtomFieldState evolve_closed_form(const ModelParams& params, const AtomFieldState& from,
                                  double dt) {
  require_interaction(from, "evolve_closed_form");
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw InvalidArgument("evolution time must be >= 0");

  const double t0 = from.time;
  const double t1 = t0 + dt;
  const int n_max = from.n_max();
  AtomFieldState out = from;
  out.time = t1;

  for (int n = 0; n < n_max; ++n) {
    const double dn = block_detuning(params, n);
    const double om = rabi_frequency(params, n);
    const double two_c = 2.0 * block_coupling(params, n);
    const double s = half_angle_sinc(om, dt);
    const double cs = std::cos(0.5 * om * dt);

    // Remove the block phases, rotate under the traceless 2×2 generator, restore.
    const cplx x0 = from.c_e(n);
    const cplx y0 = from.c_g(n + 1);
    const cplx u0 = std::polar(1.0, -0.5 * dn * t0) * x0;
    const cplx v0 = std::polar(1.0, 0.5 * dn * t0) * y0;
    const cplx u = (cs - kI * dn * s) * u0 - kI * two_c * s * v0;
    const cplx v = (cs + kI * dn * s) * v0 - kI * two_c * s * u0;
    out.c_e(n) = std::polar(1.0, 0.5 * dn * t1) * u;
    out.c_g(n + 1) = std::polar(1.0, -0.5 * dn * t1) * v;
  }
  return out;
}

std::vector<AtomFieldState> evolve_series(const ModelParams& params,
                                          const InitialCondition& init,
                                          std::span<const double> times) {
  if (times.empty()) throw EmptyGrid("time grid is empty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
      throw InvalidArgument("time grid must be nonnegative and strictly increasing");
    }
  }
  const AtomFieldState start = initial_state(init);
  std::vector<AtomFieldState> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(evolve_closed_form(params, start, t));
  return out;
}

AtomFieldState to_schrodinger(const ModelParams& params, const AtomFieldState& state) {
  require_interaction(state, "to_schrodinger");
  AtomFieldState out = state;
  out.frame = Frame::schrodinger;
  for (int n = 0; n <= state.n_max(); ++n) {
    const BareEnergies e = bare_energies(params, n);
    out.c_e(n) *= std::polar(1.0, -e.e_excited * state.time);
    out.c_g(n) *= std::polar(1.0, -e.e_ground * state.time);
  }
  return out;
}

AtomFieldState to_block_frame(const ModelParams& params, const AtomFieldState& state) {
  require_interaction(state, "to_block_frame");
  AtomFieldState out = state;
  out.frame = Frame::block;
  for (int n = 0; n <= state.n_max(); ++n) {
    const double half_phase = 0.5 * block_detuning(params, n) * state.time;
    out.c_e(n) *= std::polar(1.0, -half_phase);
    if (n < state.n_max()) out.c_g(n + 1) *= std::polar(1.0, half_phase);
  }
  return out;
}

cplx inner_product(const AtomFieldState& a, const AtomFieldState& b) {
  if (a.c_e.size() != b.c_e.size()) throw DimensionMismatch("states have different cutoffs");
  return a.c_e.dot(b.c_e) + a.c_g.dot(b.c_g);
}

Eigen::VectorXcd to_product_vector(const AtomFieldState& state) {
  const Eigen::Index dim = state.c_e.size();
  Eigen::VectorXcd v(2 * dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    v(2 * n) = state.c_e(n);
    v(2 * n + 1) = state.c_g(n);
  }
  return v;
}

AtomFieldState from_product_vector(const Eigen::VectorXcd& v, double time, Frame frame) {
  if (v.size() % 2 != 0) throw DimensionMismatch("product vector must have even length");
  const Eigen::Index dim = v.size() / 2;
  AtomFieldState s{Eigen::VectorXcd(dim), Eigen::VectorXcd(dim), time, frame};
  for (Eigen::Index n = 0; n < dim; ++n) {
    s.c_e(n) = v(2 * n);
    s.c_g(n) = v(2 * n + 1);
  }
  return s;
}

}  // namespace njc
