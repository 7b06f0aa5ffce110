#include "trimer/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "trimer/jacobi.hpp"

namespace trimer {
namespace {

std::string half_integer(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

int parse_half_integer(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  if (text.empty()) throw std::invalid_argument("empty spin value");
  const auto slash = text.find('/');
  if (slash == std::string::npos) return 2 * std::stoi(text);
  if (text.substr(slash + 1) != "2") throw std::invalid_argument("spin must be an integer or n/2: " + text);
  return std::stoi(text.substr(0, slash));
}

struct Spins {
  SpinMatrices mu = spin_matrices(0.5);
  SpinMatrices s = spin_matrices(1.0);
  Operator mu_x = embed(mu.x, Site::mu), mu_y = embed(mu.y, Site::mu), mu_z = embed(mu.z, Site::mu);
  Operator s1_x = embed(s.x, Site::s1), s1_y = embed(s.y, Site::s1), s1_z = embed(s.z, Site::s1);
  Operator s2_x = embed(s.x, Site::s2), s2_y = embed(s.y, Site::s2), s2_z = embed(s.z, Site::s2);
};

const Spins& spins() {
  static const Spins instance;
  return instance;
}

struct Terms {
  Operator exchange_j;   // mu.(S1 + S2)
  Operator exchange_j1;  // S1.S2
  Operator anisotropy;   // (S1z)^2 + (S2z)^2
  Operator zeeman;       // mu^z + S1^z + S2^z
};

const Terms& terms() {
  static const Terms instance = [] {
    const Spins& o = spins();
    Terms t;
    t.exchange_j = o.mu_x * (o.s1_x + o.s2_x) + o.mu_y * (o.s1_y + o.s2_y) + o.mu_z * (o.s1_z + o.s2_z);
    t.exchange_j1 = o.s1_x * o.s2_x + o.s1_y * o.s2_y + o.s1_z * o.s2_z;
    t.anisotropy = o.s1_z * o.s1_z + o.s2_z * o.s2_z;
    t.zeeman = o.mu_z + o.s1_z + o.s2_z;
    return t;
  }();
  return instance;
}

}  // namespace

void ModelParams::validate() const {
  if (!std::isfinite(J) || !std::isfinite(J1) || !std::isfinite(D) || !std::isfinite(h)) {
    throw std::invalid_argument("ModelParams: all couplings must be finite");
  }
}

std::string LevelLabel::display() const {
  std::string out = "|" + half_integer(two_st) + "," + half_integer(two_sz) + ">";
  if (branch == Branch::I) out += "^I";
  if (branch == Branch::II) out += "^II";
  return out;
}

LevelLabel parse_level_label(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c == '|' || c == '>' || c == '^' || c == ' ') {
      if (c == '^') text += ',';
      continue;
    }
    text += c;
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("cannot parse level label '" + raw + "' (expected e.g. 3/2,3/2,II)");
  }
  LevelLabel label;
  try {
    label.two_st = parse_half_integer(parts[0]);
    label.two_sz = parse_half_integer(parts[1]);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse level label '" + raw + "'");
  }
  if (parts.size() == 3) {
    if (parts[2] == "I") {
      label.branch = Branch::I;
    } else if (parts[2] == "II") {
      label.branch = Branch::II;
    } else if (!parts[2].empty()) {
      throw std::invalid_argument("unknown branch '" + parts[2] + "' in level label '" + raw + "'");
    }
  }
  if (label.two_st <= 0 || label.two_st > 5 || std::abs(label.two_sz) > label.two_st ||
      (label.two_st - label.two_sz) % 2 != 0 || label.two_st % 2 == 0) {
    throw std::invalid_argument("level label '" + raw + "' is not a valid trimer level");
  }
  return label;
}

double Spectrum::ground_energy() const {
  if (levels.empty()) throw std::logic_error("Spectrum is empty");
  return levels.front().energy;
}

std::vector<double> Spectrum::energies() const {
  std::vector<double> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.push_back(l.energy);
  return out;
}

Operator build_hamiltonian(const ModelParams& p) {
  p.validate();
  const Terms& t = terms();
  return p.J * t.exchange_j + p.J1 * t.exchange_j1 + p.D * t.anisotropy - p.h * t.zeeman;
}

Operator total_sz(const SiteDims& dims) {
  if (dims.dims != kTrimerDims.dims) {
    throw std::invalid_argument("total_sz: only the (2,3,3) trimer is supported");
  }
  return terms().zeeman;
}

Operator site_exchange() {
  Operator p = Operator::Zero(kHilbertDim, kHilbertDim);
  for (int i = 0; i < kHilbertDim; ++i) {
    BasisState b = BasisState::from_index(i);
    std::swap(b.m1, b.m2);
    p(b.index(), i) = 1.0;
  }
  return p;
}

Spectrum diagonalize(const Operator& op) {
  Spectrum s;
  if (is_real(op)) {
    const auto eig = jacobi_eigh(Eigen::MatrixXd(op.real()));
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
      s.levels.push_back({eig.values(k), eig.vectors.col(k).cast<Complex>(), std::nullopt, std::nullopt});
    }
  } else {
    const auto eig = jacobi_eigh(op);
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
      s.levels.push_back({eig.values(k), eig.vectors.col(k), std::nullopt, std::nullopt});
    }
  }
  return s;
}

Spectrum diagonalize_hamiltonian(const ModelParams& p) {
  const Operator h = build_hamiltonian(p);
  if (h.imag().cwiseAbs().maxCoeff() > 1e-12) throw std::logic_error("trimer Hamiltonian has imaginary entries");
  std::map<int, std::vector<int>> sectors;
  for (int i = 0; i < kHilbertDim; ++i) sectors[BasisState::from_index(i).two_total_sz()].push_back(i);

  Spectrum s;
  for (const auto& [two_sz, idx] : sectors) {
    const auto n = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd block(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) block(a, b) = h(idx[a], idx[b]).real();
    }
    const auto eig = jacobi_eigh(block);
    for (Eigen::Index k = 0; k < n; ++k) {
      StateVector v = StateVector::Zero(kHilbertDim);
      for (Eigen::Index a = 0; a < n; ++a) v(idx[a]) = eig.vectors(a, k);
      s.levels.push_back({eig.values(k), std::move(v), two_sz, std::nullopt});
    }
  }
  std::stable_sort(s.levels.begin(), s.levels.end(),
                   [](const Eigenpair& a, const Eigenpair& b) { return a.energy < b.energy; });
  return s;
}

double max_residual(const Operator& h, const Spectrum& s) {
  double worst = 0.0;
  for (const auto& l : s.levels) {
    worst = std::max(worst, (h * l.vector - l.energy * l.vector).norm());
  }
  return worst;
}

}  // namespace trimer
