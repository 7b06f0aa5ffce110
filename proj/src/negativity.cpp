#include "trimer/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "trimer/jacobi.hpp"

namespace trimer {
namespace {

int site_digit(const BasisState& b, Site site) {
  switch (site) {
    case Site::mu: return b.two_m_mu == 1 ? 0 : 1;
    case Site::s1: return 1 - b.m1;
    case Site::s2: return 1 - b.m2;
  }
  return 0;
}

int two_m(const BasisState& b, Site site) {
  switch (site) {
    case Site::mu: return b.two_m_mu;
    case Site::s1: return 2 * b.m1;
    case Site::s2: return 2 * b.m2;
  }
  return 0;
}

BasisState with_digit(BasisState b, Site site, int digit) {
  switch (site) {
    case Site::mu: b.two_m_mu = digit == 0 ? 1 : -1; break;
    case Site::s1: b.m1 = 1 - digit; break;
    case Site::s2: b.m2 = 1 - digit; break;
  }
  return b;
}

std::vector<double> eigenvalues(const Operator& m) {
  Eigen::VectorXd values;
  if (is_real(m)) {
    values = jacobi_eigh(Eigen::MatrixXd(m.real()), false).values;
  } else {
    values = jacobi_eigh(m, false).values;
  }
  return {values.data(), values.data() + values.size()};
}

}  // namespace

Operator partial_transpose(const Operator& rho, Site site) {
  if (rho.rows() != kHilbertDim || rho.cols() != kHilbertDim) {
    throw std::invalid_argument("partial_transpose: expected an 18x18 operator");
  }
  if (static_cast<int>(site) < 0 || static_cast<int>(site) > 2) {
    throw std::invalid_argument("partial_transpose: invalid site");
  }
  Operator out(kHilbertDim, kHilbertDim);
  for (int i = 0; i < kHilbertDim; ++i) {
    const BasisState bi = BasisState::from_index(i);
    for (int j = 0; j < kHilbertDim; ++j) {
      const BasisState bj = BasisState::from_index(j);
      const int ti = with_digit(bi, site, site_digit(bj, site)).index();
      const int tj = with_digit(bj, site, site_digit(bi, site)).index();
      out(ti, tj) = rho(i, j);
    }
  }
  return out;
}

PartitionNegativity negativity(const Operator& rho, Site site) {
  if (rho.rows() != kHilbertDim || rho.cols() != kHilbertDim) {
    throw std::invalid_argument("negativity: expected an 18x18 density matrix");
  }
  if (hermiticity_defect(rho) > 1e-10 * std::max(1.0, max_abs(rho))) {
    throw std::invalid_argument("negativity: density matrix is not Hermitian");
  }
  const Operator pt = partial_transpose(rho, site);

  std::map<int, std::vector<int>> blocks;
  std::vector<int> block_of(kHilbertDim);
  for (int i = 0; i < kHilbertDim; ++i) {
    const BasisState b = BasisState::from_index(i);
    block_of[i] = b.two_total_sz() - 2 * two_m(b, site);
    blocks[block_of[i]].push_back(i);
  }
  double off_block = 0.0;
  for (int i = 0; i < kHilbertDim; ++i) {
    for (int j = 0; j < kHilbertDim; ++j) {
      if (block_of[i] != block_of[j]) off_block = std::max(off_block, std::abs(pt(i, j)));
    }
  }

  PartitionNegativity out;
  out.site = site;
  if (off_block <= 1e-14 * std::max(1.0, max_abs(pt))) {
    for (const auto& [key, idx] : blocks) {
      const auto n = static_cast<Eigen::Index>(idx.size());
      Operator sub(n, n);
      for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) sub(a, b) = pt(idx[a], idx[b]);
      }
      for (double v : eigenvalues(sub)) out.spectrum.push_back({v, key});
    }
  } else {
    for (double v : eigenvalues(pt)) out.spectrum.push_back({v, std::nullopt});
  }
  std::stable_sort(out.spectrum.begin(), out.spectrum.end(),
                   [](const PtEigenvalue& a, const PtEigenvalue& b) { return a.value < b.value; });
  for (const auto& e : out.spectrum) {
    if (e.value < kNegativeEigenvalueThreshold) {
      out.negative_eigenvalues.push_back(e.value);
      out.value += -e.value;
    }
  }
  return out;
}

NegativityReport gtn(const Operator& rho) {
  NegativityReport r;
  for (Site s : kAllSites) r.partitions[static_cast<int>(s)] = negativity(rho, s);
  r.n_mu = r.partitions[0].value;
  r.n_s1 = r.partitions[1].value;
  r.n_s2 = r.partitions[2].value;
  r.gtn = std::cbrt(r.n_mu * r.n_s1 * r.n_s2);
  return r;
}

}  // namespace trimer
