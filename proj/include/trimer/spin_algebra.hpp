#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace trimer {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// The three sites of the trimer, in tensor-product order.
enum class Site : int { mu = 0, s1 = 1, s2 = 2 };

inline constexpr std::array<Site, 3> kAllSites{Site::mu, Site::s1, Site::s2};

const char* site_name(Site site);
Site parse_site(int index);

/// Local dimensions of the (mu, S1, S2) sites. The order is part of the
/// basis convention and is never permuted.
struct SiteDims {
  std::array<int, 3> dims{2, 3, 3};

  constexpr int operator[](Site site) const { return dims[static_cast<int>(site)]; }
  constexpr int total() const { return dims[0] * dims[1] * dims[2]; }
};

inline constexpr SiteDims kTrimerDims{};
inline constexpr int kHilbertDim = 18;

struct SpinMatrices {
  Operator x;
  Operator y;
  Operator z;
};

/// Sx, Sy, Sz for spin s in the |s>, |s-1>, ..., |-s> basis. Only s = 1/2 and
/// s = 1 are supported.
SpinMatrices spin_matrices(double s);

Operator identity(int dim);

/// Kronecker product, `a` index slowest.
Operator kron(const Operator& a, const Operator& b);

/// identity (x) ... (x) op (x) ... (x) identity on the full trimer space.
Operator embed(const Operator& op, Site site, const SiteDims& dims = kTrimerDims);

/// Product basis state |m_mu> (x) |m_1> (x) |m_2>.
///
/// Index is row-major over (m_mu, m_1, m_2) with each site running from its
/// highest to its lowest magnetic quantum number, so index 0 is
/// |+1/2, +1, +1> and index 17 is |-1/2, -1, -1>.
struct BasisState {
  int two_m_mu = 1;  // +1 or -1 (2 * m_mu)
  int m1 = 1;        // +1, 0, -1
  int m2 = 1;

  int index() const;
  static BasisState from_index(int index);

  /// 2 * (m_mu + m_1 + m_2)
  int two_total_sz() const { return two_m_mu + 2 * (m1 + m2); }

  bool operator==(const BasisState&) const = default;
};

StateVector basis_vector(const BasisState& state);

/// max_ij |A_ij - conj(A_ji)|
double hermiticity_defect(const Operator& op);

/// Largest entry magnitude.
double max_abs(const Operator& op);

}  // namespace trimer
