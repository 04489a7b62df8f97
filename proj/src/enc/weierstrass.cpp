#include "qsparse/enc/weierstrass.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "qsparse/core/errors.hpp"

namespace qsparse::enc {

namespace {

using u128 = unsigned __int128;

constexpr int kMaxTerms = 2000;

class Mpz {
 public:
  Mpz() { mpz_init(v_); }
  ~Mpz() { mpz_clear(v_); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
  mpz_ptr get() { return v_; }

 private:
  mpz_t v_;
};

// frac(p * 2^exp2) as a 128-bit fixed-point fraction (exact for shifts <= 128).
u128 fraction_bits(mpz_ptr p, long exp2) {
  if (exp2 >= 0) return 0;
  const auto s = static_cast<mp_bitcnt_t>(-exp2);
  Mpz r;
  mpz_fdiv_r_2exp(r.get(), p, s);
  if (s >= 128) {
    mpz_fdiv_q_2exp(r.get(), r.get(), s - 128);
  } else {
    mpz_mul_2exp(r.get(), r.get(), 128 - s);
  }
  static_assert(sizeof(mp_limb_t) == 8, "64-bit GMP limbs expected");
  const u128 lo = mpz_getlimbn(r.get(), 0);
  const u128 hi = mpz_getlimbn(r.get(), 1);
  return (hi << 64) | lo;
}

// sin(2 pi u / 2^128), reducing to [-1/2, 1/2) turns first.
double sin_turns(u128 u) {
  const auto top = static_cast<std::int64_t>(static_cast<std::uint64_t>(u >> 64));
  return std::sin(2.0 * std::numbers::pi * static_cast<double>(top) * 0x1p-64);
}

}  // namespace

void WeierstrassSpec::validate() const {
  require(a > 0.0 && a < 1.0, "Weierstrass a must lie in (0, 1)");
  require(b > 1.0 && std::isfinite(b), "Weierstrass b must be > 1");
  require(m_max >= 0 && m_max <= kMaxTerms, "Weierstrass m_max must lie in [1, 2000] (0 = default)");
}

int WeierstrassSpec::terms() const { return m_max > 0 ? m_max : default_truncation(a); }

int default_truncation(double a) {
  require(a > 0.0 && a < 1.0, "Weierstrass a must lie in (0, 1)");
  const double m = std::ceil(-16.0 * std::log(10.0) / std::log(a));
  return static_cast<int>(std::clamp(m, 1.0, static_cast<double>(kMaxTerms)));
}

WeierstrassSamples weierstrass_samples(const WeierstrassSpec& spec, int num_qubits, int grid_bits) {
  spec.validate();
  if (grid_bits < 0) grid_bits = num_qubits;
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "qubit count out of range");
  require(grid_bits >= num_qubits && grid_bits <= 62, "grid_bits must lie in [n, 62]");
  const int terms = spec.terms();
  const std::size_t dim = std::size_t{1} << num_qubits;

  // b = mant * 2^b_exp exactly.
  int e = 0;
  const double frac = std::frexp(spec.b, &e);
  const auto mant = static_cast<unsigned long>(std::ldexp(frac, 53));
  const long b_exp = e - 53;

  std::vector<double> values(dim, 0.0);
  Mpz power;
  mpz_set_ui(power.get(), 1);
  for (int m = 0; m < terms; ++m) {
    if (m > 0) mpz_mul_ui(power.get(), power.get(), mant);
    // sin(pi b^m i 2^-g) = sin(2 pi i frac(b^m 2^{-g-1}))
    const u128 step = fraction_bits(power.get(), static_cast<long>(m) * b_exp - grid_bits - 1);
    const double weight = std::pow(spec.a, m);
    u128 u = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      values[i] += weight * sin_turns(u);
      u += step;
    }
  }
  return WeierstrassSamples{GridFunction(num_qubits, std::move(values)), terms,
                            std::pow(spec.a, terms) / (1.0 - spec.a)};
}

double hausdorff_dimension(double a, double b) {
  require(b > 1.0, "hausdorff_dimension needs b > 1");
  require(a < 1.0 && a * b >= 1.0 - 1e-12, "hausdorff_dimension needs 1/b <= a < 1");
  return 2.0 + std::log(a) / std::log(b);
}

}  // namespace qsparse::enc
