#include "trimer/analytic_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trimer/jacobi.hpp"

namespace trimer {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kSingularTol = 1e-6;

StateVector ket(int two_m_mu, int m1, int m2) { return basis_vector({two_m_mu, m1, m2}); }

// Two-spin states of the S1, S2 pair, tensored with |+-1/2> of mu.
StateVector phi_a(int mu, int s) { return kInvSqrt2 * (ket(mu, s, 0) - ket(mu, 0, s)); }
StateVector phi_s(int mu, int s) { return kInvSqrt2 * (ket(mu, s, 0) + ket(mu, 0, s)); }
StateVector psi_a(int mu, int s) { return kInvSqrt2 * (ket(mu, s, -s) - ket(mu, -s, s)); }
StateVector psi_s(int mu) { return kInvSqrt2 * (ket(mu, 1, -1) + ket(mu, -1, 1)); }

// |m_mu, m_1, m_2> -> |-m_mu, -m_1, -m_2>; commutes with the zero-field Hamiltonian.
StateVector spin_flip(const StateVector& v) {
  StateVector out = StateVector::Zero(kHilbertDim);
  for (int i = 0; i < kHilbertDim; ++i) {
    BasisState b = BasisState::from_index(i);
    b.two_m_mu = -b.two_m_mu;
    b.m1 = -b.m1;
    b.m2 = -b.m2;
    out(b.index()) = v(i);
  }
  return out;
}

double coupling_scale(const ModelParams& p) { return std::abs(p.J) + std::abs(p.J1) + std::abs(p.D); }

// Symmetric S_t^z = +1/2 block in the basis
// (|+1/2> psi_s, |+1/2>|0,0>, |-1/2> phi_s), zero field.
Eigen::Matrix3d symmetric_block(const ModelParams& p) {
  Eigen::Matrix3d m;
  m << 2.0 * p.D - p.J1, kSqrt2 * p.J1, p.J * kInvSqrt2,
       kSqrt2 * p.J1, 0.0, p.J,
       p.J * kInvSqrt2, p.J, p.D + p.J1 - 0.5 * p.J;
  return m;
}

struct Family {
  int two_st;
  int two_sz;  // positive member
  Branch branch;
};

// Fixed family order used by both analytic_energies and analytic_eigensystem.
constexpr std::array<Family, 9> kFamilies{{
    {5, 5, Branch::none},
    {3, 3, Branch::I},
    {3, 3, Branch::II},
    {5, 3, Branch::none},
    {1, 1, Branch::II},
    {3, 1, Branch::I},
    {5, 1, Branch::none},
    {3, 1, Branch::II},
    {1, 1, Branch::I},
}};

// Zero-field energy of family f (Zeeman shift added by the caller).
double zero_field_energy(std::size_t f, const ModelParams& p, const TableCoefficients& c) {
  const double J = p.J, J1 = p.J1, D = p.D;
  const double base = 0.25 * (6.0 * D - J);
  switch (f) {
    case 0: return base + J1 + 0.25 * (5.0 * J + 2.0 * D);
    case 1: return base - J1 + 0.25 * (3.0 * J - 2.0 * D);
    case 2: return base + J1 - 0.25 * c.P1;
    case 3: return base + J1 + 0.25 * c.P1;
    case 4: return base - J1 - 0.25 * c.P2;
    case 5: return base - J1 + 0.25 * c.P2;
    case 6: return (6.0 * D - J) / 6.0 + c.Y[0];
    case 7: return (6.0 * D - J) / 6.0 + c.Y[1];
    case 8: return (6.0 * D - J) / 6.0 + c.Y[2];
    default: throw std::logic_error("unknown level family");
  }
}

}  // namespace

std::array<double, 3> cubic_roots(double p, double q) {
  const double tol = 1e-12 * (1.0 + std::abs(q));
  if (!std::isfinite(p) || !std::isfinite(q)) throw std::invalid_argument("cubic_roots: non-finite input");
  if (p < -tol) throw std::invalid_argument("cubic_roots: p must be non-negative for three real roots");
  p = std::max(p, 0.0);
  const double sp = std::sqrt(p);
  const double phi = std::atan2(std::sqrt(std::max(p * p * p - q * q, 0.0)), q);
  std::array<double, 3> y{};
  for (int i = 0; i < 3; ++i) {
    y[i] = 2.0 * sp * std::cos(phi / 3.0 + 2.0 / 3.0 * std::numbers::pi * (3 - i));
  }
  return y;
}

TableCoefficients table_coefficients(const ModelParams& params) {
  params.validate();
  const double J = params.J, J1 = params.J1, D = params.D;
  if (J == 0.0) throw std::invalid_argument("analytic spectrum requires J != 0");

  TableCoefficients c;
  c.P1 = std::sqrt(std::max((5.0 * J + 2.0 * D) * (5.0 * J + 2.0 * D) - 32.0 * J * D, 0.0));
  c.P2 = std::sqrt(std::max((3.0 * J - 2.0 * D) * (3.0 * J - 2.0 * D) + 16.0 * J * D, 0.0));
  // P1 > |3J - 2D| and P2 > |J + 2D| whenever J != 0.
  c.a1m = -std::sqrt((c.P1 - (3.0 * J - 2.0 * D)) / (2.0 * c.P1));
  c.a1p = std::sqrt((c.P1 + (3.0 * J - 2.0 * D)) / (2.0 * c.P1));
  c.a2m = std::sqrt((c.P2 - (J + 2.0 * D)) / (2.0 * c.P2));
  c.a2p = std::sqrt((c.P2 + (J + 2.0 * D)) / (2.0 * c.P2));

  const double x = J / 3.0 - J1;
  c.p = (19.0 * J * J + 12.0 * D * D) / 36.0 - J1 / 6.0 * (J + 2.0 * D - 6.0 * J1);
  c.q = x * x * x + 0.5 * x * (D * D - D * J1 + 1.5 * J1 * J - J * J) + 0.25 * J * J * (4.5 * J1 - D);
  c.phi = std::atan2(std::sqrt(std::max(c.p * c.p * c.p - c.q * c.q, 0.0)), c.q);
  c.Y = cubic_roots(c.p, c.q);

  const double scale = coupling_scale(params);
  const bool separated = (c.Y[0] - c.Y[1]) > kSingularTol * scale && (c.Y[1] - c.Y[2]) > kSingularTol * scale;
  for (int i = 0; i < 3; ++i) {
    const double den = D - J / 6.0 + 2.0 * J1 + c.Y[i];
    c.denominator[i] = den;
    c.regular[i] = separated && std::abs(den) > kSingularTol * scale;
    if (!c.regular[i]) continue;
    // Ratios of the |-1/2> phi_s and |+1/2>|0,0> amplitudes to the |+1/2> psi_s one.
    c.R[i] = kSqrt2 / J * (c.Y[i] - D - J1 - J / 6.0 + 4.0 * D * J1 / den);
    c.T[i] = 2.0 * (1.0 - 2.0 * D / den);
    c.alpha[i] = 1.0 / std::sqrt(1.0 + c.R[i] * c.R[i] + 0.5 * c.T[i] * c.T[i]);
    c.beta[i] = c.alpha[i] * c.R[i];
    c.gamma[i] = c.alpha[i] * c.T[i] * kInvSqrt2;
  }
  return c;
}

std::vector<LevelEnergy> analytic_energies(const ModelParams& params) {
  const TableCoefficients c = table_coefficients(params);
  std::vector<LevelEnergy> out;
  out.reserve(kHilbertDim);
  for (std::size_t f = 0; f < kFamilies.size(); ++f) {
    const double e0 = zero_field_energy(f, params, c);
    for (int sign : {1, -1}) {
      const int two_sz = sign * kFamilies[f].two_sz;
      out.push_back({{kFamilies[f].two_st, two_sz, kFamilies[f].branch}, e0 - 0.5 * two_sz * params.h});
    }
  }
  return out;
}

std::vector<AnalyticLevel> analytic_eigensystem(const ModelParams& params) {
  const TableCoefficients c = table_coefficients(params);

  // Cubic-sector amplitudes (alpha, gamma, beta) per root, closed form or block fallback.
  std::array<std::array<double, 3>, 3> cubic{};
  std::array<bool, 3> fallback{};
  std::array<double, 3> cubic_energy_shift{};
  const bool any_singular = !(c.regular[0] && c.regular[1] && c.regular[2]);
  if (any_singular) {
    const Eigen::Matrix3d block = symmetric_block(params);
    const auto eig = jacobi_eigh(Eigen::MatrixXd(block));
    const double mean = params.D - params.J / 6.0;
    for (int i = 0; i < 3; ++i) {
      const int k = 2 - i;  // descending
      if (c.regular[i]) {
        cubic[i] = {c.alpha[i], c.gamma[i], c.beta[i]};
      } else {
        cubic[i] = {eig.vectors(0, k), eig.vectors(1, k), eig.vectors(2, k)};
        fallback[i] = true;
        cubic_energy_shift[i] = eig.values(k) - (mean + c.Y[i]);
      }
    }
  } else {
    for (int i = 0; i < 3; ++i) cubic[i] = {c.alpha[i], c.gamma[i], c.beta[i]};
  }

  std::vector<AnalyticLevel> out;
  out.reserve(kHilbertDim);
  for (std::size_t f = 0; f < kFamilies.size(); ++f) {
    AnalyticLevel up;
    up.label = {kFamilies[f].two_st, kFamilies[f].two_sz, kFamilies[f].branch};
    double e0 = zero_field_energy(f, params, c);
    switch (f) {
      case 0:
        up.vector = ket(1, 1, 1);
        break;
      case 1:
        up.vector = phi_a(1, 1);
        break;
      case 2:
        up.vector = c.a1m * phi_s(1, 1) + c.a1p * ket(-1, 1, 1);
        up.components = {{"a1m", c.a1m}, {"a1p", c.a1p}};
        break;
      case 3:
        up.vector = c.a1p * phi_s(1, 1) - c.a1m * ket(-1, 1, 1);
        up.components = {{"a1p", c.a1p}, {"a1m", -c.a1m}};
        break;
      case 4:
        up.vector = c.a2m * psi_a(1, 1) - c.a2p * phi_a(-1, 1);
        up.components = {{"a2m", c.a2m}, {"a2p", -c.a2p}};
        break;
      case 5:
        up.vector = c.a2p * psi_a(1, 1) + c.a2m * phi_a(-1, 1);
        up.components = {{"a2p", c.a2p}, {"a2m", c.a2m}};
        break;
      default: {
        const auto i = static_cast<std::size_t>(f - 6);
        const auto& [alpha, gamma, beta] = cubic[i];
        up.vector = alpha * psi_s(1) + gamma * ket(1, 0, 0) + beta * phi_s(-1, 1);
        up.components = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
        up.fallback = fallback[i];
        e0 += cubic_energy_shift[i];
        break;
      }
    }
    up.vector.normalize();
    AnalyticLevel down = up;
    down.label.two_sz = -up.label.two_sz;
    down.vector = spin_flip(up.vector);
    up.energy = e0 - 0.5 * up.label.two_sz * params.h;
    down.energy = e0 - 0.5 * down.label.two_sz * params.h;
    fix_global_phase(up.vector);
    fix_global_phase(down.vector);
    out.push_back(std::move(up));
    out.push_back(std::move(down));
  }
  return out;
}

const AnalyticLevel& find_level(const std::vector<AnalyticLevel>& levels, const LevelLabel& label) {
  for (const auto& l : levels) {
    if (l.label == label) return l;
  }
  throw std::invalid_argument("no analytic level " + label.display());
}

Spectrum to_spectrum(const std::vector<AnalyticLevel>& levels) {
  Spectrum s;
  s.levels.reserve(levels.size());
  for (const auto& l : levels) s.levels.push_back({l.energy, l.vector, l.label.two_sz, l.label});
  std::stable_sort(s.levels.begin(), s.levels.end(),
                   [](const Eigenpair& a, const Eigenpair& b) { return a.energy < b.energy; });
  return s;
}

void fix_global_phase(StateVector& v) {
  if (v.size() == 0) return;
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= (1.0 - 1e-9) * largest) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      return;
    }
  }
}

}  // namespace trimer
