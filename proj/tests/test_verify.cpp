#include <doctest.h>

#include <json.hpp>

#include <mubcorr/measures.hpp>
#include <mubcorr/states.hpp>
#include <mubcorr/verify.hpp>

using namespace mubcorr;

namespace {

void check_witness(const DensityMatrix& rho, const Witness& w) {
  CHECK(is_mutually_unbiased(w.basis_1, w.basis_2, 1e-8));
  CHECK(w.chi_1 > kNonzeroChi);
  CHECK(w.chi_2 > kNonzeroChi);
  CHECK(std::abs(holevo(rho, w.basis_1) - w.chi_1) < 1e-12);
  CHECK(std::abs(holevo(rho, w.basis_2) - w.chi_2) < 1e-12);
}

}  // namespace

TEST_CASE("product detection") {
  CHECK(is_product_state(random_product_state(2, 3, 1)));
  CHECK(is_product_state(werner_state(2, 0.0)));
  CHECK_FALSE(is_product_state(pure_from_schmidt({{0.5, 0.5}})));
  CHECK_FALSE(is_product_state(bell_diagonal({0.5, 0, 0})));
}

TEST_CASE("product states have zero Holevo quantity in every basis") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const DensityMatrix rho = random_product_state(3, 2, s);
    for (std::uint64_t b = 0; b < 20; ++b) CHECK(holevo(rho, Basis(haar_unitary(3, mix_seed(s, b)))) <= 1e-10);
  }
}

TEST_CASE("embedded rotation") {
  const ComplexMatrix f = fourier_basis(3).columns();
  const ComplexMatrix w = embedded_rotation(f, 0, 2, 0.3);
  CHECK(is_unitary(w, 1e-13));
  // identity on the untouched frame vector
  CHECK((w * f.col(1) - f.col(1)).norm() < 1e-14);
  // explicit 2x2 block in frame coordinates
  const ComplexMatrix in_frame = f.adjoint() * w * f;
  const double c = std::sqrt(1 - 0.09);
  CHECK(std::abs(in_frame(0, 0) - c) < 1e-14);
  CHECK(std::abs(in_frame(0, 2) - 0.3) < 1e-14);
  CHECK(std::abs(in_frame(2, 0) + 0.3) < 1e-14);
  CHECK(max_abs(embedded_rotation(f, 0, 1, 0.0) - identity(3)) < 1e-14);
  const ComplexMatrix q = f.adjoint() * embedded_rotation(f, 0, 1, 0.3, M_PI / 2) * f;
  CHECK(std::abs(q(0, 1) - Complex(0, 0.3)) < 1e-14);
  CHECK(std::abs(q(1, 0) - Complex(0, 0.3)) < 1e-14);
  CHECK_THROWS_AS(embedded_rotation(f, 1, 1, 0.1), DomainError);
  CHECK_THROWS_AS(embedded_rotation(f, 0, 1, 1.5), DomainError);
}

TEST_CASE("largest off-diagonal block") {
  // only the (0, 2) block of A is coherent
  ComplexVector v = ComplexVector::Zero(6);
  v(0) = 1 / std::sqrt(2.0);
  v(5) = 1 / std::sqrt(2.0);
  const DensityMatrix rho(v * v.adjoint(), 3, 2);
  const auto [k, l] = largest_off_diagonal_block(rho, identity(3));
  CHECK(k == 0);
  CHECK(l == 2);
}

TEST_CASE("witness for a Bell state is direct") {
  const DensityMatrix bell = pure_from_schmidt({{0.5, 0.5}});
  const Witness w = find_witness_mub_pair(bell, {});
  CHECK(w.path == WitnessPath::Direct);
  CHECK(w.chi_1 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(w.chi_2 == doctest::Approx(1.0).epsilon(1e-6));
  check_witness(bell, w);
}

TEST_CASE("witness for a classical-classical state needs the rotation") {
  const DensityMatrix cc = bell_diagonal({0.5, 0, 0});
  const Witness w = find_witness_mub_pair(cc, {});
  CHECK(w.path == WitnessPath::EpsilonRotation);
  CHECK(w.epsilon_used > 0.0);
  CHECK(w.chi_1 <= 0.18872187554086717 + 1e-9);
  CHECK(w.chi_1 > 0.18872187554086717 - 0.1);
  check_witness(cc, w);
}

TEST_CASE("rotated chi converges to the unrotated chi-basis value") {
  const DensityMatrix cc = bell_diagonal({0.5, 0, 0});
  const OptimizerResult c1 = classical_correlation_C1(cc, {});
  const Basis& e = c1.bases.front();
  const Basis f(e.columns() * fourier_basis(2).columns());
  const auto [k, l] = largest_off_diagonal_block(cc, f.columns());
  double prev_gap = std::numeric_limits<double>::infinity();
  for (double eps : default_epsilon_schedule()) {
    const double chi_1 = holevo(cc, Basis(embedded_rotation(f.columns(), k, l, eps) * e.columns()));
    const double gap = std::abs(chi_1 - c1.value);
    CHECK(gap <= prev_gap + 1e-6);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-3);
}

TEST_CASE("witness for a generic two-qubit state") {
  const DensityMatrix rho = random_density_matrix(2, 2, 4, 7);
  const Witness w = find_witness_mub_pair(rho, {});
  CHECK(w.chi_1 > 1e-6);
  CHECK(w.chi_2 > 1e-6);
  check_witness(rho, w);
  CHECK_THROWS_AS(find_witness_mub_pair(random_product_state(2, 2, 1), {}), DomainError);
}

TEST_CASE("witness search over a seeded corpus") {
  // 500 states: d = 2 and 3, ranks cycling through full, 1 and 2. Qutrits
  // run with fewer restarts to keep the suite short.
  int checked = 0;
  for (int d : {2, 3}) {
    OptimizerConfig cfg;
    if (d == 3) cfg.restarts = 8;
    const int count = 250;
    for (int i = 0; i < count; ++i) {
      const int rank = i % 3 == 0 ? d * d : i % 3;
      const std::uint64_t seed = mix_seed(500 + static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(i));
      const DensityMatrix rho = random_density_matrix(d, d, rank, seed);
      cfg.seed = seed;
      INFO("d ", d, " sample ", i, " rank ", rank);
      const Witness w = find_witness_mub_pair(rho, cfg);
      check_witness(rho, w);
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("theorem verification report") {
  const VerificationReport r = verify_nullity_theorem(30, 2, 2, 42, {});
  CHECK(r.samples == 30);
  CHECK(r.products_detected == injected_product_count(30, 0.1));
  CHECK(r.products_detected == 3);
  CHECK(r.samples == r.products_detected + r.witnesses_found + static_cast<int>(r.failures.size()));
  CHECK(r.failures.empty());
  CHECK(r.min_chi_over_witnesses > kNonzeroChi);

  const VerificationReport p = verify_nullity_theorem(100, 2, 2, 3, {}, 1.0);
  CHECK(p.products_detected == 100);
  CHECK(p.witnesses_found == 0);
  CHECK(std::isinf(p.min_chi_over_witnesses));

  CHECK_THROWS_AS(verify_nullity_theorem(0, 2, 2, 0, {}), DomainError);
  CHECK_THROWS_AS(verify_nullity_theorem(5, 2, 2, 0, {}, 1.5), DomainError);
}

TEST_CASE("report JSON") {
  VerificationReport r;
  r.samples = 2;
  r.products_detected = 1;
  r.failures.push_back({99, "epsilon schedule exhausted"});
  r.min_chi_over_witnesses = std::numeric_limits<double>::infinity();
  const auto doc = nlohmann::json::parse(report_to_json(r));
  CHECK(doc["samples"] == 2);
  CHECK(doc["failures"][0]["seed"] == 99);
  CHECK(doc["min_chi_over_witnesses"].is_null());
  CHECK(to_string(WitnessPath::Direct) == "direct");
  CHECK(to_string(WitnessPath::EpsilonRotation) == "epsilon-rotation");
}
