#include "trimer/thermal_state.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace trimer {
namespace {

void require_complete(const Spectrum& s) {
  if (s.size() != static_cast<std::size_t>(kHilbertDim)) {
    throw std::invalid_argument("density matrix needs all " + std::to_string(kHilbertDim) +
                                " levels, got " + std::to_string(s.size()));
  }
}

// Family key of a level, with the sign of S_t^z dropped. Unlabeled levels fall
// back to |S_t^z| (or to their index, which makes every level distinct).
std::tuple<int, int, int> family_key(const Eigenpair& level, int index) {
  if (level.label) {
    return {level.label->two_st, std::abs(level.label->two_sz), static_cast<int>(level.label->branch)};
  }
  if (level.two_sz) return {-1, std::abs(*level.two_sz), -1};
  return {-2, index, -2};
}

}  // namespace

std::vector<double> boltzmann_weights(const Spectrum& s, double kT) {
  if (!(kT > 0.0) || !std::isfinite(kT)) {
    throw std::invalid_argument("temperature must be positive and finite");
  }
  if (s.levels.empty()) throw std::invalid_argument("empty spectrum");
  double e_min = s.levels.front().energy;
  for (const auto& l : s.levels) e_min = std::min(e_min, l.energy);
  std::vector<double> w;
  w.reserve(s.size());
  double z = 0.0;
  for (const auto& l : s.levels) {
    w.push_back(std::exp(-(l.energy - e_min) / kT));
    z += w.back();
  }
  for (double& x : w) x /= z;
  return w;
}

DensityMatrix thermal_density_matrix(const Spectrum& s, double kT) {
  require_complete(s);
  const std::vector<double> w = boltzmann_weights(s, kT);
  DensityMatrix rho;
  rho.matrix = Operator::Zero(kHilbertDim, kHilbertDim);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    const StateVector& v = s.levels[i].vector;
    rho.matrix.noalias() += w[i] * (v * v.adjoint());
  }
  rho.temperature = kT;
  rho.rank = kHilbertDim;
  return rho;
}

DensityMatrix ground_state_density_matrix(const Spectrum& s, double degeneracy_tol) {
  require_complete(s);
  if (!(degeneracy_tol > 0.0)) throw std::invalid_argument("degeneracy tolerance must be positive");
  double e_min = s.levels.front().energy;
  for (const auto& l : s.levels) e_min = std::min(e_min, l.energy);

  std::vector<int> members;
  std::set<std::tuple<int, int, int>> families;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s.levels[i].energy - e_min <= degeneracy_tol) {
      members.push_back(i);
      families.insert(family_key(s.levels[i], i));
    }
  }
  DensityMatrix rho;
  rho.matrix = Operator::Zero(kHilbertDim, kHilbertDim);
  for (int i : members) {
    const StateVector& v = s.levels[i].vector;
    rho.matrix.noalias() += (v * v.adjoint()) / static_cast<double>(members.size());
  }
  rho.temperature = 0.0;
  rho.rank = static_cast<int>(members.size());
  rho.level_crossing = families.size() > 1;
  return rho;
}

DensityMatrix pure_density_matrix(const StateVector& v) {
  const double n2 = v.squaredNorm();
  if (!(n2 > 0.0)) throw std::invalid_argument("pure_density_matrix: zero vector");
  DensityMatrix rho;
  rho.matrix = (v * v.adjoint()) / n2;
  rho.temperature = 0.0;
  rho.rank = 1;
  return rho;
}

}  // namespace trimer
