#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "trimer/analytic_spectrum.hpp"
#include "trimer/thermal_state.hpp"

using namespace trimer;

namespace {

Spectrum spectrum_at(double j1, double d, double h) {
  ModelParams p;
  p.J1 = j1;
  p.D = d;
  p.h = h;
  return to_spectrum(analytic_eigensystem(p));
}

double trace_real(const Operator& m) { return m.trace().real(); }

}  // namespace

TEST_CASE("Boltzmann weights form a distribution") {
  const Spectrum s = spectrum_at(0.7, -1.3, 0.4);
  for (double kT : {1e-6, 0.3, 1.0, 50.0}) {
    const auto w = boltzmann_weights(s, kT);
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i] >= 0.0);
      if (i > 0) CHECK(w[i] <= w[i - 1] * (1 + 1e-15));
      sum += w[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(boltzmann_weights(s, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(boltzmann_weights(s, -1.0), std::invalid_argument);
}

TEST_CASE("thermal state limits") {
  const Spectrum s = spectrum_at(0.7, -1.3, 0.4);
  const DensityMatrix hot = thermal_density_matrix(s, 1e9);
  CHECK(max_abs(hot.matrix - Operator::Identity(18, 18) / 18.0) < 1e-7);

  const DensityMatrix cold = thermal_density_matrix(s, 1e-9);
  CHECK(trace_real(cold.matrix * cold.matrix) == doctest::Approx(1.0).epsilon(1e-6));
  const DensityMatrix ground = ground_state_density_matrix(s);
  CHECK(ground.rank == 1);
  CHECK(max_abs(cold.matrix - ground.matrix) < 1e-6);
}

TEST_CASE("thermal density matrix invariants") {
  const Spectrum s = spectrum_at(1.5, 0.2, 0.1);
  const DensityMatrix rho = thermal_density_matrix(s, 0.8);
  CHECK(hermiticity_defect(rho.matrix) < 1e-12);
  CHECK(trace_real(rho.matrix) == doctest::Approx(1.0).epsilon(1e-12));
  const Operator sz = total_sz();
  CHECK(max_abs(rho.matrix * sz - sz * rho.matrix) < 1e-10);
  Eigen::SelfAdjointEigenSolver<Operator> es(rho.matrix);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("degenerate ground states at zero field") {
  const Spectrum s = spectrum_at(1.5, 1.0, 0.0);
  const DensityMatrix rho = ground_state_density_matrix(s);
  CHECK(rho.rank == 2);
  CHECK_FALSE(rho.level_crossing);
  CHECK(trace_real(rho.matrix * rho.matrix) == doctest::Approx(0.5));

  // Degenerate ground doublet carries at least the weight of any excited level.
  const auto w = boltzmann_weights(s, 1.0);
  CHECK(w[0] == doctest::Approx(w[1]));
  for (std::size_t i = 2; i < w.size(); ++i) CHECK(w[1] >= w[i]);
}

TEST_CASE("a level crossing is flagged") {
  // The saturated and |3/2,3/2> states cross where their energies meet; at
  // h/J = 0 and D/J = 0 with J1/J = 0.5 the ground doublet is unique, while a
  // large field makes |5/2,5/2> the only ground state.
  const Spectrum high = spectrum_at(0.5, 0.0, 10.0);
  const DensityMatrix sat = ground_state_density_matrix(high);
  CHECK(sat.rank == 1);
  CHECK(high.levels[0].label->display() == "|5/2,5/2>");

  // J1 = 1/4, D = 0, h = 0 is where the |1/2,1/2>^II doublet meets the
  // S_t = 3/2 quartet.
  const DensityMatrix cross = ground_state_density_matrix(spectrum_at(0.25, 0.0, 0.0));
  CHECK(cross.rank == 6);
  CHECK(cross.level_crossing);
}

TEST_CASE("pure density matrix") {
  StateVector v = StateVector::Zero(18);
  v(0) = 2.0;
  const DensityMatrix rho = pure_density_matrix(v);
  CHECK(rho.matrix(0, 0).real() == doctest::Approx(1.0));
  CHECK(rho.rank == 1);
  CHECK_THROWS_AS(pure_density_matrix(StateVector::Zero(18)), std::invalid_argument);
}
