#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>

#include "helpers.hpp"
#include "qsparse/core/density.hpp"
#include "qsparse/core/entropy.hpp"
#include "qsparse/core/errors.hpp"
#include "qsparse/enc/grid_function.hpp"
#include "qsparse/enc/ksparse.hpp"
#include "qsparse/enc/qnsst.hpp"
#include "qsparse/enc/scalar_field.hpp"
#include "qsparse/enc/sine_mps.hpp"
#include "qsparse/enc/weierstrass.hpp"

using namespace qsparse;
using namespace qsparse::enc;
constexpr double kPi = std::numbers::pi;

TEST_CASE("amplitude encoding") {
  const StateVector a = amplitude_encode(GridFunction(2, {1, 0, 0, 0}));
  CHECK(a[0] == Complex(1.0));
  const StateVector u = amplitude_encode(GridFunction(2, {1, 1, 1, 1}));
  for (int i = 0; i < 4; ++i) CHECK(u[i].real() == doctest::Approx(0.5));
  CHECK_THROWS(amplitude_encode(GridFunction(2, {0, 0, 0, 0})));
  CHECK_THROWS(GridFunction(2, {1, 2, 3}));
}

TEST_CASE("sine MPS equals direct sampling") {
  const int n = 12;
  const StateVector mps = sine_mps_state(2 * kPi, 0.0, n);
  const StateVector direct = amplitude_encode(sample_grid(n, [](double x) { return std::sin(2 * kPi * x); }));
  CHECK(max_abs_diff(mps, direct) < 1e-10);
  CHECK(std::abs(mps[0]) == 0.0);
  const auto contracted = SineMPS(2 * kPi, 0.3, 8).contract();
  for (std::size_t i = 0; i < contracted.size(); ++i)
    CHECK(contracted[i] == doctest::Approx(std::sin(2 * kPi * i / 256.0 + 0.3)).epsilon(1e-12).scale(1));
  const StateVector cosine = sine_mps_state(2 * kPi, kPi / 2, 8);
  double mx = 0.0;
  for (std::size_t i = 0; i < cosine.dim(); ++i) mx = std::max(mx, std::abs(cosine[i]));
  CHECK(std::abs(cosine[0]) == doctest::Approx(mx));
}

TEST_CASE("sine closed-form single-site density") {
  const Eigen::Matrix2d lim = sine_rdo_closed_form(2 * kPi, 0.0, 40);
  CHECK(std::abs(lim(0, 0) - 0.5) < 1e-7);
  CHECK(std::abs(lim(0, 1) - 0.5) < 1e-7);
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Eigen::Matrix2d r = sine_rdo_closed_form(uniform(rng, 1, 60), uniform(rng, 0, 6), int(uniform_index(rng, 12)));
    CHECK(r.trace() == doctest::Approx(1.0));
  }
  const StateVector psi = sine_mps_state(16 * kPi, 0.0, 22);
  const Eigen::MatrixXcd rho = reduced_density(psi, Region{10}).mat;
  CHECK((rho - sine_rdo_closed_form(16 * kPi, 0.0, 10).cast<Complex>()).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("QNSST threshold and residuals") {
  CHECK(qnsst_threshold(kPi / 8) == 3);
  CHECK(qnsst_threshold(1.0) == 2);
  CHECK(qnsst_threshold(0.125) == 5);
  const GridFunction flat(10, std::vector<double>(1024, 2.0));
  for (int q = 1; q < 10; ++q) CHECK(qnsst_residual(flat, q) < 1e-12);
  const auto single = qnsst_residual_sweep(sum_of_sines(16, {{0.25}}));
  CHECK(log2_slope(single, qnsst_threshold(0.25) + 1, 15) == doctest::Approx(-1.0).epsilon(0.3));
  const auto three = qnsst_residual_sweep(sum_of_sines(16, {{0.125}, {0.25}, {0.5}}));
  CHECK(std::abs(decay_onset(three) - 5) <= 1);
}

TEST_CASE("Weierstrass samples") {
  WeierstrassSpec s{1e-3, std::sqrt(5.0), 1};
  const auto w = weierstrass_samples(s, 6);
  for (int i = 0; i < 64; ++i) CHECK(w.function.values[i] == doctest::Approx(std::sin(kPi * i / 64.0)));
  const auto zero = weierstrass_samples({0.5, 3.0, 0}, 4);
  CHECK(zero.function.values[0] == 0.0);
  CHECK(default_truncation(0.5) == int(std::ceil(-16 * std::log(10.0) / std::log(0.5))));
  CHECK(default_truncation(0.999999) == 2000);
  CHECK(amplitude_encode(weierstrass_samples({0.9, std::sqrt(5.0), 0}, 10).function).norm() ==
        doctest::Approx(1.0));
  CHECK_THROWS(weierstrass_samples({1.5, 2.0, 0}, 4));
}

TEST_CASE("Hausdorff dimension") {
  const double b = std::sqrt(5.0);
  CHECK(hausdorff_dimension(0.8, b) == doctest::Approx(1.7227).epsilon(1e-4));
  CHECK(hausdorff_dimension(1.0 / b + 1e-12, b) == doctest::Approx(1.0));
  CHECK(hausdorff_dimension(1.0 - 1e-12, b) == doctest::Approx(2.0));
  CHECK_THROWS(hausdorff_dimension(0.25, b));
}

TEST_CASE("K-sparse states") {
  for (std::uint64_t k : {1, 5, 64}) {
    const StateVector s = k_sparse_state({8, k, 3});
    int nz = 0;
    for (std::size_t i = 0; i < s.dim(); ++i) nz += std::abs(s[i]) > 0;
    CHECK(nz == int(k));
    CHECK(s.norm() == doctest::Approx(1.0));
  }
  const StateVector one = k_sparse_state({8, 1, 4});
  for (double a : {0.0, 1.0, 2.0}) CHECK(std::abs(tee_contiguous(one, EntropyOrder(a))) < 1e-12);
  const StateVector full = k_sparse_state({6, 64, 4});
  for (std::size_t i = 0; i < full.dim(); ++i) CHECK(std::abs(full[i]) == doctest::Approx(0.125));
  CHECK(max_abs_diff(k_sparse_state({8, 5, 9}), k_sparse_state({8, 5, 9})) == 0.0);
  CHECK_THROWS(k_sparse_state({4, 17, 1}));
}

TEST_CASE("scalar field ingestion") {
  const auto dir = std::filesystem::temp_directory_path() / "qsparse_enc_test";
  std::filesystem::create_directories(dir);
  std::vector<double> vals(1024);
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = std::cos(0.01 * i) + 0.5;
  {
    std::ofstream csv(dir / "f.csv");
    for (int i = 0; i < 512; ++i) csv << std::setprecision(17) << vals[i] << "\n";
  }
  {
    std::ofstream raw(dir / "f.f64", std::ios::binary);
    raw.write(reinterpret_cast<const char*>(vals.data()), vals.size() * sizeof(double));
  }
  const auto c = ingest_scalar_field(dir / "f.csv", 9, {});
  for (int i = 0; i < 512; ++i) CHECK(c.function.values[i] == vals[i]);
  const auto r = ingest_scalar_field(dir / "f.f64", 9, {Extraction::Line, 2, 0});
  for (int i = 0; i < 512; ++i) CHECK(r.function.values[i] == vals[2 * i]);
  CHECK_THROWS(ingest_scalar_field(dir / "f.f64", 10, {Extraction::Line, 2, 0}));
  CHECK_THROWS(ingest_scalar_field(dir / "missing.csv", 4, {}));
  std::filesystem::remove_all(dir);
}

TEST_CASE("turbulence surrogate is reproducible") {
  const auto a = turbulence_surrogate(9, 7), b = turbulence_surrogate(9, 7), c = turbulence_surrogate(9, 8);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
}
