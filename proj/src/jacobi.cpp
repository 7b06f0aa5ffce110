#include "trimer/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace trimer {
namespace {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

constexpr int kMaxSweeps = 100;

double conj_if(double x) { return x; }
Complex conj_if(Complex x) { return std::conj(x); }

template <typename Scalar>
double off_diagonal_norm(const Mat<Scalar>& a) {
  double sum = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

template <typename Scalar>
EigenDecomposition<Scalar> solve(const Mat<Scalar>& input, bool want_vectors, double hermitian_tol) {
  if (input.rows() != input.cols()) {
    throw std::invalid_argument("jacobi_eigh: matrix is not square");
  }
  const Eigen::Index n = input.rows();
  const double scale = std::max(1.0, n == 0 ? 0.0 : input.cwiseAbs().maxCoeff());
  if (n > 0 && (input - input.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol * scale) {
    throw std::invalid_argument("jacobi_eigh: matrix is not Hermitian");
  }

  // Work on the exactly Hermitian part.
  Mat<Scalar> a = 0.5 * (input + input.adjoint());
  Mat<Scalar> v;
  if (want_vectors) v = Mat<Scalar>::Identity(n, n);

  const double frob = a.norm();
  const double target = std::numeric_limits<double>::epsilon() * frob * static_cast<double>(std::max<Eigen::Index>(n, 1));

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < std::numeric_limits<double>::min()) continue;
        // u = apq/|apq|; the similarity diag(1, conj u) makes the (p,q) entry real.
        const Scalar u = apq / mag;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Scalar su = s * u;
        const Scalar s_conj_u = s * conj_if(u);
        const Scalar c_conj_u = c * conj_if(u);
        const Scalar c_u = c * u;

        // columns: A <- A G
        for (Eigen::Index r = 0; r < n; ++r) {
          const Scalar arp = a(r, p);
          const Scalar arq = a(r, q);
          a(r, p) = c * arp - s_conj_u * arq;
          a(r, q) = s * arp + c_conj_u * arq;
        }
        // rows: A <- G^H A
        for (Eigen::Index r = 0; r < n; ++r) {
          const Scalar apr = a(p, r);
          const Scalar aqr = a(q, r);
          a(p, r) = c * apr - su * aqr;
          a(q, r) = s * apr + c_u * aqr;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
        if (want_vectors) {
          for (Eigen::Index r = 0; r < n; ++r) {
            const Scalar vrp = v(r, p);
            const Scalar vrq = v(r, q);
            v(r, p) = c * vrp - s_conj_u * vrq;
            v(r, q) = s * vrp + c_conj_u * vrq;
          }
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > target) {
    throw std::runtime_error("jacobi_eigh: no convergence after " + std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return std::real(a(i, i)) < std::real(a(j, j));
  });

  EigenDecomposition<Scalar> out;
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = std::real(a(order[k], order[k]));
    if (want_vectors) out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace

EigenDecomposition<double> jacobi_eigh(const Eigen::MatrixXd& a, bool want_vectors, double hermitian_tol) {
  return solve<double>(a, want_vectors, hermitian_tol);
}

EigenDecomposition<Complex> jacobi_eigh(const Operator& a, bool want_vectors, double hermitian_tol) {
  return solve<Complex>(a, want_vectors, hermitian_tol);
}

bool is_real(const Operator& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j).imag() != 0.0) return false;
    }
  }
  return true;
}

}  // namespace trimer
