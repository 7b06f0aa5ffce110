#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimer/spin_algebra.hpp"

namespace trimer {

/// Couplings of the trimer. In dimensionless mode J = 1 and the other fields
/// are ratios to J.
struct ModelParams {
  double J = 1.0;
  double J1 = 0.0;
  double D = 0.0;
  double h = 0.0;

  /// Throws std::invalid_argument on non-finite entries.
  void validate() const;
};

enum class Branch { none, I, II };

/// |S_t, S_t^z> with an optional I/II branch. Spins are stored doubled.
struct LevelLabel {
  int two_st = 1;
  int two_sz = 1;
  Branch branch = Branch::none;

  /// e.g. "|1/2,1/2>^I"
  std::string display() const;
  /// Same level family regardless of the sign of S_t^z.
  bool same_family(const LevelLabel& other) const {
    return two_st == other.two_st && std::abs(two_sz) == std::abs(other.two_sz) && branch == other.branch;
  }
  bool operator==(const LevelLabel&) const = default;
};

/// Accepts "3/2,3/2,II", "3/2,-1/2,I", "5/2,5/2" and the display form "|3/2,3/2>^II".
LevelLabel parse_level_label(const std::string& text);

struct Eigenpair {
  double energy = 0.0;
  StateVector vector;
  std::optional<int> two_sz;  // set when the vector has definite S_t^z
  std::optional<LevelLabel> label;
};

/// Eigenpairs sorted by ascending energy.
struct Spectrum {
  std::vector<Eigenpair> levels;

  std::size_t size() const { return levels.size(); }
  double ground_energy() const;
  std::vector<double> energies() const;
};

/// Sum_i [J mu.S_i + D (S_i^z)^2 - h S_i^z] + J1 S_1.S_2 - h mu^z on the
/// 18-dimensional product space.
Operator build_hamiltonian(const ModelParams& p);

/// mu^z + S_1^z + S_2^z.
Operator total_sz(const SiteDims& dims = kTrimerDims);

/// Permutation S1 <-> S2.
Operator site_exchange();

/// Full Hermitian eigendecomposition with the Jacobi solver. Rejects
/// non-Hermitian input.
Spectrum diagonalize(const Operator& op);

/// Numerical oracle for the trimer: diagonalizes build_hamiltonian(p) sector
/// by sector of S_t^z, so every vector has definite S_t^z.
Spectrum diagonalize_hamiltonian(const ModelParams& p);

/// max_k ||H v_k - e_k v_k||
double max_residual(const Operator& h, const Spectrum& s);

}  // namespace trimer
