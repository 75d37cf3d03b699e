#include <doctest.h>

#include <cmath>
#include <random>

#include <mubcorr/mub.hpp>
#include <mubcorr/states.hpp>

using namespace mubcorr;

namespace {

// all |<b1_i|b2_j>| against 1/√d, computed directly
double worst_overlap_gap(const ComplexMatrix& b1, const ComplexMatrix& b2) {
  const double target = 1.0 / std::sqrt(static_cast<double>(b1.rows()));
  double worst = 0.0;
  for (int i = 0; i < b1.cols(); ++i)
    for (int j = 0; j < b2.cols(); ++j) worst = std::max(worst, std::abs(std::abs(b1.col(i).dot(b2.col(j))) - target));
  return worst;
}

}  // namespace

TEST_CASE("computational and Fourier bases") {
  CHECK(computational_basis(3).columns() == ComplexMatrix::Identity(3, 3));
  const ComplexMatrix h = fourier_basis(2).columns();
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(h(0, 0) - s) < 1e-15);
  CHECK(std::abs(h(1, 0) - s) < 1e-15);
  CHECK(std::abs(h(0, 1) - s) < 1e-15);
  CHECK(std::abs(h(1, 1) + s) < 1e-15);
  CHECK_THROWS_AS(computational_basis(1), DomainError);
  CHECK_THROWS_AS(fourier_basis(1), DomainError);

  for (int d = 2; d <= 8; ++d) {
    CHECK(is_mutually_unbiased(computational_basis(d), fourier_basis(d)));
    CHECK(worst_overlap_gap(computational_basis(d).columns(), fourier_basis(d).columns()) < 1e-12);
  }
  CHECK_FALSE(is_mutually_unbiased(computational_basis(3), computational_basis(3)));
}

TEST_CASE("basis rejects non-unitary columns") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(Basis{m}, DomainError);
}

TEST_CASE("full MUB sets for primes") {
  for (int d : {2, 3, 5, 7, 11, 13}) {
    const MubSet set = wootters_fields_mubs(d);
    REQUIRE(static_cast<int>(set.size()) == d + 1);
    for (std::size_t k = 0; k < set.size(); ++k)
      for (std::size_t l = k + 1; l < set.size(); ++l)
        CHECK(worst_overlap_gap(set[k].columns(), set[l].columns()) < 1e-10);
  }
  CHECK_THROWS_AS(wootters_fields_mubs(4), DomainError);
  CHECK_THROWS_AS(wootters_fields_mubs(6), DomainError);
  CHECK_THROWS_AS(wootters_fields_mubs(9), DomainError);
  CHECK_THROWS_AS(wootters_fields_mubs(1), DomainError);
}

TEST_CASE("qubit triple is Z, X, Y") {
  const MubSet set = wootters_fields_mubs(2);
  // each basis diagonalizes its Pauli operator
  const ComplexMatrix paulis[3] = {pauli_z(), pauli_x(), pauli_y()};
  for (int k = 0; k < 3; ++k) {
    const ComplexMatrix d = set[k].columns().adjoint() * paulis[k] * set[k].columns();
    CHECK(std::abs(d(0, 1)) < 1e-15);
    CHECK(std::abs(d(1, 0)) < 1e-15);
  }
}

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(15));
  CHECK(is_prime(97));
}

TEST_CASE("unbiasedness survives common rotations and column phases") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = trial % 2 == 0 ? 3 : 2;
    const ComplexMatrix u = haar_unitary(d, rng);
    const Basis e(u * computational_basis(d).columns());
    const Basis f(u * fourier_basis(d).columns());
    CHECK(is_mutually_unbiased(e, f));

    ComplexMatrix phases = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) phases(i, i) = std::polar(1.0, angle(rng));
    CHECK(is_mutually_unbiased(Basis(e.columns() * phases), f));
    // row phases (a diagonal unitary in front) as well
    CHECK(is_mutually_unbiased(Basis(phases * computational_basis(d).columns()),
                               Basis(phases * fourier_basis(d).columns())));
  }
}

TEST_CASE("rotating a MUB set") {
  const MubSet s = wootters_fields_mubs(3);
  const MubSet same = rotate_mub_set(identity(3), s);
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(max_abs(same[k].columns() - s[k].columns()) == 0.0);

  const MubSet q = rotate_mub_set(haar_unitary(2, 5), wootters_fields_mubs(2));
  for (std::size_t k = 0; k < q.size(); ++k)
    for (std::size_t l = k + 1; l < q.size(); ++l) CHECK(is_mutually_unbiased(q[k], q[l]));

  ComplexMatrix bad = identity(3);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(rotate_mub_set(bad, s), DomainError);
  CHECK_THROWS_AS(rotate_mub_set(identity(2), s), DomainError);
}

TEST_CASE("MUB set construction validates eagerly") {
  CHECK_THROWS_AS(MubSet(3, {computational_basis(3), computational_basis(3)}), DomainError);
  CHECK_NOTHROW(MubSet(4, {computational_basis(4), fourier_basis(4)}));
}

TEST_CASE("MUB set JSON round trip") {
  for (int d : {2, 5}) {
    const MubSet s = wootters_fields_mubs(d);
    const MubSet back = mub_set_from_json(mub_set_to_json(s));
    REQUIRE(back.size() == s.size());
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(max_abs(back[k].columns() - s[k].columns()) < 1e-15);
  }
  CHECK_THROWS_AS(mub_set_from_json("{\"dim\": 2}"), DomainError);
  CHECK_THROWS_AS(mub_set_from_json("not json"), DomainError);
}
