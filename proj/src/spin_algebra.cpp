#include "trimer/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trimer {

const char* site_name(Site site) {
  switch (site) {
    case Site::mu: return "mu";
    case Site::s1: return "S1";
    case Site::s2: return "S2";
  }
  return "?";
}

Site parse_site(int index) {
  if (index < 0 || index > 2) {
    throw std::invalid_argument("site index must be 0 (mu), 1 (S1) or 2 (S2), got " +
                                std::to_string(index));
  }
  return static_cast<Site>(index);
}

SpinMatrices spin_matrices(double s) {
  const int two_s = static_cast<int>(std::lround(2.0 * s));
  if (std::abs(2.0 * s - two_s) > 1e-12 || (two_s != 1 && two_s != 2)) {
    throw std::invalid_argument("spin_matrices: only s = 1/2 and s = 1 are supported, got s = " +
                                std::to_string(s));
  }
  const int dim = two_s + 1;
  Operator splus = Operator::Zero(dim, dim);
  Operator sz = Operator::Zero(dim, dim);
  // row k <-> m = s - k
  for (int k = 0; k < dim; ++k) {
    const double m = s - k;
    sz(k, k) = m;
    if (k > 0) {
      // S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>
      splus(k - 1, k) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    }
  }
  const Operator sminus = splus.adjoint();
  SpinMatrices out;
  out.x = 0.5 * (splus + sminus);
  out.y = Complex(0.0, -0.5) * (splus - sminus);
  out.z = sz;
  return out;
}

Operator identity(int dim) { return Operator::Identity(dim, dim); }

Operator kron(const Operator& a, const Operator& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  Operator out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

Operator embed(const Operator& op, Site site, const SiteDims& dims) {
  if (op.rows() != op.cols() || op.rows() != dims[site]) {
    throw std::invalid_argument("embed: operator of dimension " + std::to_string(op.rows()) +
                                " does not match site " + site_name(site) + " of dimension " +
                                std::to_string(dims[site]));
  }
  Operator out = identity(1);
  for (Site s : kAllSites) {
    out = kron(out, s == site ? op : identity(dims[s]));
  }
  return out;
}

int BasisState::index() const {
  if ((two_m_mu != 1 && two_m_mu != -1) || m1 < -1 || m1 > 1 || m2 < -1 || m2 > 1) {
    throw std::invalid_argument("BasisState: magnetic quantum numbers out of range");
  }
  const int i_mu = two_m_mu == 1 ? 0 : 1;
  return i_mu * 9 + (1 - m1) * 3 + (1 - m2);
}

BasisState BasisState::from_index(int index) {
  if (index < 0 || index >= kHilbertDim) {
    throw std::invalid_argument("BasisState: index out of range: " + std::to_string(index));
  }
  BasisState s;
  s.two_m_mu = index / 9 == 0 ? 1 : -1;
  s.m1 = 1 - (index / 3) % 3;
  s.m2 = 1 - index % 3;
  return s;
}

StateVector basis_vector(const BasisState& state) {
  StateVector v = StateVector::Zero(kHilbertDim);
  v(state.index()) = 1.0;
  return v;
}

double hermiticity_defect(const Operator& op) {
  if (op.rows() != op.cols()) return INFINITY;
  return (op - op.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const Operator& op) { return op.size() == 0 ? 0.0 : op.cwiseAbs().maxCoeff(); }

}  // namespace trimer
