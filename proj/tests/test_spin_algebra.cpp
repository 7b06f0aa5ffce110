#include <Eigen/Eigenvalues>
#include <cstdlib>

#include "doctest.h"
#include "trimer/spin_algebra.hpp"

using namespace trimer;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("spin matrices obey the angular momentum algebra") {
  for (double s : {0.5, 1.0}) {
    const SpinMatrices m = spin_matrices(s);
    const Operator comm = m.x * m.y - m.y * m.x;
    CHECK(max_abs(comm - I * m.z) < 1e-14);
    const Operator casimir = m.x * m.x + m.y * m.y + m.z * m.z;
    CHECK(max_abs(casimir - s * (s + 1) * identity(static_cast<int>(casimir.rows()))) < 1e-14);
    CHECK(hermiticity_defect(m.x) == 0.0);
    CHECK(hermiticity_defect(m.y) == 0.0);
  }
}

TEST_CASE("spin matrices reject unsupported spins") {
  CHECK_THROWS_AS(spin_matrices(1.5), std::invalid_argument);
  CHECK_THROWS_AS(spin_matrices(0.0), std::invalid_argument);
}

TEST_CASE("kron places the first factor slowest") {
  Operator a = Operator::Zero(2, 2), b = Operator::Zero(3, 3);
  a(1, 0) = 1.0;
  b(2, 1) = 1.0;
  const Operator k = kron(a, b);
  CHECK(k.rows() == 6);
  CHECK(k(1 * 3 + 2, 0 * 3 + 1) == Complex(1.0));
  CHECK(std::abs(k.cwiseAbs().sum() - 1.0) < 1e-15);
}

TEST_CASE("embedded operators on different sites commute") {
  const auto mu = spin_matrices(0.5), s = spin_matrices(1.0);
  const Operator a = embed(mu.x, Site::mu), b = embed(s.y, Site::s1), c = embed(s.z, Site::s2);
  CHECK(a.rows() == kHilbertDim);
  CHECK(max_abs(a * b - b * a) < 1e-15);
  CHECK(max_abs(b * c - c * b) < 1e-15);
  CHECK_THROWS_AS(embed(mu.x, Site::s1), std::invalid_argument);
}

TEST_CASE("basis index round trip and total magnetization") {
  for (int k = 0; k < kHilbertDim; ++k) {
    const BasisState b = BasisState::from_index(k);
    CHECK(b.index() == k);
  }
  const BasisState top{1, 1, 1};
  CHECK(top.index() == 0);
  CHECK(top.two_total_sz() == 5);
  const BasisState bottom{-1, -1, -1};
  CHECK(bottom.index() == 17);
  CHECK(bottom.two_total_sz() == -5);
  const auto s = spin_matrices(1.0);
  const auto mu = spin_matrices(0.5);
  const Operator sz = embed(mu.z, Site::mu) + embed(s.z, Site::s1) + embed(s.z, Site::s2);
  for (int k = 0; k < kHilbertDim; ++k)
    CHECK(sz(k, k).real() == doctest::Approx(0.5 * BasisState::from_index(k).two_total_sz()));
}

TEST_CASE("spin-1 matrices and embedding traces") {
  const auto s = spin_matrices(1.0);
  CHECK(s.z(0, 0).real() == 1.0);
  CHECK(s.z(1, 1).real() == 0.0);
  CHECK(s.z(2, 2).real() == -1.0);
  CHECK((s.z * s.z).trace().real() == doctest::Approx(2.0));
  CHECK((embed(s.z * s.z, Site::s1)).trace().real() == doctest::Approx(12.0));
  CHECK(max_abs(embed(identity(3), Site::s2) - identity(18)) == 0.0);
  const StateVector v = basis_vector({1, 1, 0});
  CHECK((embed(s.z, Site::s1) * v - v).norm() == 0.0);
  CHECK(spin_matrices(0.5).z(0, 0).real() == 0.5);
}

TEST_CASE("kron of diagonal matrices and the mixed product property") {
  Operator a = Operator::Zero(2, 2);
  CHECK(kron(identity(2), identity(3)).rows() == 6);
  a.diagonal() << 1.0, 2.0;
  Operator c = Operator::Zero(2, 2);
  c.diagonal() << 3.0, 4.0;
  Operator expected = Operator::Zero(4, 4);
  expected.diagonal() << 3.0, 4.0, 6.0, 8.0;
  CHECK(max_abs(kron(a, c) - expected) == 0.0);

  std::srand(4);
  const Operator A = Operator::Random(2, 2), B = Operator::Random(3, 3);
  const Operator C = Operator::Random(2, 2), D = Operator::Random(3, 3);
  CHECK(max_abs(kron(A, B) * kron(C, D) - kron(A * C, B * D)) < 1e-14);
}

TEST_CASE("embedding preserves spectra with complementary multiplicity") {
  const auto s = spin_matrices(1.0);
  Eigen::SelfAdjointEigenSolver<Operator> es(embed(s.x, Site::s2));
  int plus = 0, zero = 0, minus = 0;
  for (int i = 0; i < 18; ++i) {
    const double e = es.eigenvalues()(i);
    plus += std::abs(e - 1.0) < 1e-12;
    zero += std::abs(e) < 1e-12;
    minus += std::abs(e + 1.0) < 1e-12;
  }
  CHECK(plus == 6);
  CHECK(zero == 6);
  CHECK(minus == 6);
}
