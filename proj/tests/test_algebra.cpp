#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "njc/algebra.hpp"
#include "njc/error.hpp"
#include "njc/model.hpp"

using namespace njc;

namespace {

constexpr double kKs[] = {0.0, 1e-4, 0.5, 1.0};

// Largest |entry| over rows/cols 0..last of a square matrix.
double max_abs(const Eigen::MatrixXcd& m, int last) {
  return m.topLeftCorner(last + 1, last + 1).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("model parameters validate and derive") {
  const ModelParams p(2.0, 1.5, 0.01, 0.25);
  CHECK(p.nu() == 3.0);
  CHECK(p.detuning() == 1.0);
  CHECK(p.chi() == 0.5);

  const ModelParams q = ModelParams::from_detuning(0.016061, 1e-3, 1e-4);
  CHECK(q.omega() == 1.0);
  CHECK(q.detuning() == doctest::Approx(0.016061).epsilon(1e-14));
  CHECK(q.with_detuning(0.0).r() == 1.0);

  CHECK_THROWS_AS(ModelParams(0.0, 1.0, 0.1, 0.1), ValidationError);
  CHECK_THROWS_AS(ModelParams(1.0, 1.0, -0.1, 0.1), ValidationError);
  CHECK_THROWS_AS(ModelParams(1.0, 1.0, 0.1, 1.5), ValidationError);
  CHECK_THROWS_AS(ModelParams(1.0, NAN, 0.1, 0.1), ValidationError);
  CHECK_THROWS_WITH_AS(ModelParams(1.0, 1.0, 0.1, -0.1), doctest::Contains("0 <= k <= 1"),
                       ValidationError);
}

TEST_CASE("cutoff for a coherent field keeps the tail below tolerance") {
  CHECK_THROWS_AS(FockCutoff(0), ValidationError);
  CHECK(FockCutoff(5).dim() == 6);
  CHECK(FockCutoff::for_coherent(0.0).n_max() == 64);
  for (double nbar : {0.5, 10.0, 30.0, 40.0, 100.0}) {
    const FockCutoff c = FockCutoff::for_coherent(nbar);
    const int floor = std::max(64, static_cast<int>(std::ceil(nbar + 8.0 * std::sqrt(nbar))));
    CHECK(c.n_max() >= floor);
    CHECK(poisson_tail(nbar, c.n_max()) < kTailTolerance);
    if (c.n_max() > floor) CHECK(poisson_tail(nbar, c.n_max() - 1) >= kTailTolerance);
  }
}

TEST_CASE("ladder matrix elements") {
  SUBCASE("k = 0 gives the bosonic ladder") {
    const auto m = build_ladder(ModelParams(1, 1, 0.1, 0.0), FockCutoff(20));
    CHECK((m.k_minus - m.a).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("k = 1 hand values") {
    const auto m = build_ladder(ModelParams(1, 1, 0.1, 1.0), FockCutoff(5));
    CHECK(m.k_minus(0, 1).real() == doctest::Approx(1.0));
    CHECK(m.k_minus(1, 2).real() == doctest::Approx(2.0));
    CHECK(m.k_minus(2, 3).real() == doctest::Approx(std::sqrt(9.0)));
  }
  for (double k : kKs) {
    const auto m = build_ladder(ModelParams(1, 1, 0.1, k), FockCutoff(30));
    CHECK((m.k_plus - m.k_minus.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.a_dagger - m.a.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    for (int n = 0; n <= 30; ++n) {
      CHECK(m.k_zero(n, n).real() == doctest::Approx(k * n + 0.5).epsilon(1e-15));
    }
    const Eigen::MatrixXcd off = m.k_zero - Eigen::MatrixXcd(m.k_zero.diagonal().asDiagonal());
    CHECK(off.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("commutation relations away from the truncation edge") {
  const int n_max = 40;
  const int last = n_max - 1;
  for (double k : kKs) {
    CAPTURE(k);
    const auto m = build_ladder(ModelParams(1, 1, 0.1, k), FockCutoff(n_max));
    const Eigen::MatrixXcd km = m.k_minus, kp = m.k_plus, k0 = m.k_zero;
    const Eigen::MatrixXcd c1 = km * kp - kp * km - 2.0 * k0;
    const Eigen::MatrixXcd c2 = k0 * kp - kp * k0 - k * kp;
    const Eigen::MatrixXcd c3 = k0 * km - km * k0 + k * km;
    // Relative to the largest entries, about k n_max² ≈ 1.6e3 at k = 1.
    CHECK(max_abs(c1, last - 1) < 1e-12 * std::max(1.0, k * n_max * n_max));
    CHECK(max_abs(c2, last - 1) < 1e-12 * std::max(1.0, k * n_max));
    CHECK(max_abs(c3, last - 1) < 1e-12 * std::max(1.0, k * n_max));
    for (int n = 0; n < last; ++n) {
      CHECK(c1(n, n).real() + 2.0 * k0(n, n).real() == doctest::Approx(2.0 * (k * n + 0.5)));
    }
  }
}

TEST_CASE("Casimir operator is constant and central on the interior") {
  const int n_max = 40;
  for (double k : kKs) {
    CAPTURE(k);
    const auto m = build_ladder(ModelParams(1, 1, 0.1, k), FockCutoff(n_max));
    const Eigen::MatrixXcd casimir =
        m.k_zero * m.k_zero - (k / 2.0) * (m.k_minus * m.k_plus + m.k_plus * m.k_minus);
    for (int n = 0; n < n_max; ++n) {
      CHECK(std::abs(casimir(n, n) - cplx(0.25 - k / 2.0)) < 1e-12 * std::max(1.0, k * k * n * n));
    }
    const int inner = n_max - 2;
    const double scale = std::max(1.0, k * k * n_max * n_max * n_max);
    CHECK(max_abs(casimir * m.k_minus - m.k_minus * casimir, inner) < 1e-12 * scale);
    CHECK(max_abs(casimir * m.k_plus - m.k_plus * casimir, inner) < 1e-12 * scale);
    CHECK(max_abs(casimir * m.k_zero - m.k_zero * casimir, inner) == 0.0);
  }
}

TEST_CASE("Heisenberg-Weyl and SU(1,1) limits") {
  const auto hw = build_ladder(ModelParams(1, 1, 0.1, 0.0), FockCutoff(20));
  const Eigen::MatrixXcd comm = hw.a * hw.a_dagger - hw.a_dagger * hw.a;
  CHECK(max_abs(comm - Eigen::MatrixXcd::Identity(21, 21), 19) < 1e-12);
  CHECK(max_abs(2.0 * hw.k_zero - Eigen::MatrixXcd::Identity(21, 21), 20) == 0.0);

  const auto su = build_ladder(ModelParams(1, 1, 0.1, 1.0), FockCutoff(20));
  CHECK(max_abs(su.k_zero * su.k_plus - su.k_plus * su.k_zero - su.k_plus, 19) < 1e-12);
  CHECK(max_abs(su.k_zero * su.k_minus - su.k_minus * su.k_zero + su.k_minus, 19) < 1e-12);
}

TEST_CASE("coherent states") {
  SUBCASE("vacuum") {
    const FieldState v = coherent_state(0.0, FockCutoff(10));
    CHECK(v.amplitudes()(0) == cplx(1.0));
    CHECK(v.amplitudes().tail(10).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("alpha = sqrt 30") {
    const FieldState f = coherent_state(std::sqrt(30.0), FockCutoff::for_coherent(30.0));
    const auto p = f.probabilities();
    // Brute-force scan of the Poisson weights: P_29 = P_30 analytically, so
    // compare against the direct product formula.
    const auto direct = [](int n) {
      double w = std::exp(-30.0);
      for (int m = 1; m <= n; ++m) w *= 30.0 / m;
      return w;
    };
    for (int n : {0, 10, 29, 30, 31, 60}) CHECK(p[n] == doctest::Approx(direct(n)).epsilon(1e-12));
    const auto top = std::max_element(p.begin(), p.end()) - p.begin();
    CHECK((top == 29 || top == 30));
    CHECK(p[30] >= p[29] - 1e-15);
    CHECK(f.mean_photon_number() == doctest::Approx(30.0).epsilon(1e-11));
    CHECK(f.tail_mass() < kTailTolerance);
  }
  SUBCASE("phase is n arg(alpha)") {
    const cplx alpha = std::polar(2.0, 0.7);
    const FieldState f = coherent_state(alpha, FockCutoff(64));
    for (int n = 1; n < 10; ++n) {
      CHECK(std::arg(f.amplitudes()(n)) == doctest::Approx(std::remainder(0.7 * n, 2 * M_PI)));
    }
  }
  SUBCASE("large n does not overflow") {
    const FieldState f = coherent_state(std::sqrt(200.0), FockCutoff::for_coherent(200.0));
    CHECK(f.amplitudes().allFinite());
    CHECK(f.mean_photon_number() == doctest::Approx(200.0).epsilon(1e-11));
  }
  CHECK_THROWS_AS(coherent_state(std::sqrt(30.0), FockCutoff(40)), TailTooHeavy);
}

TEST_CASE("Fock states") {
  const FockCutoff c(10);
  CHECK(fock_state(0, c).amplitudes()(0) == cplx(1.0));
  CHECK(fock_state(5, c).mean_photon_number() == 5.0);
  CHECK(fock_state(10, c).amplitudes()(10) == cplx(1.0));
  CHECK_THROWS_AS(fock_state(11, c), IndexBeyondCutoff);
  CHECK_THROWS_AS(fock_state(-1, c), IndexBeyondCutoff);
}

TEST_CASE("field state normalisation is enforced") {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(1) = 1.0 + 1e-9;
  CHECK_THROWS_AS(FieldState{v}, ValidationError);
  v(1) = 1.0;
  CHECK_NOTHROW(FieldState{v});
}

TEST_CASE("field expectation values") {
  const FockCutoff c = FockCutoff::for_coherent(30.0);
  const ModelParams p(1, 1, 1e-3, 1e-4);
  const auto m = build_ladder(p, c);
  const FieldState coh = coherent_state(std::sqrt(30.0), c);
  CHECK(std::abs(expectation(Eigen::MatrixXcd::Identity(c.dim(), c.dim()), coh) - 1.0) < 1e-12);
  const cplx n = expectation(m.a_dagger * m.a, coh);
  CHECK(n.real() == doctest::Approx(30.0).epsilon(1e-11));
  CHECK(std::abs(n.imag()) < 1e-12);
  CHECK(expectation(m.k_zero, fock_state(0, c)).real() == 0.5);
  const cplx a = expectation(m.a, coh);
  CHECK(a.real() == doctest::Approx(std::sqrt(30.0)).epsilon(1e-11));
  CHECK_THROWS_AS(expectation(Eigen::MatrixXcd::Identity(3, 3), coh), DimensionMismatch);
}

TEST_CASE("Poisson helpers") {
  CHECK(std::exp(poisson_log_pmf(30.0, 30)) == doctest::Approx(0.07263452647159181).epsilon(1e-12));
  CHECK(poisson_log_pmf(0.0, 0) == 0.0);
  CHECK(poisson_tail(30.0, 30) == doctest::Approx(1.0 - 0.5483515125779114).epsilon(1e-10));
}
