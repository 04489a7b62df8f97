#pragma once

#include "qsparse/enc/grid_function.hpp"

namespace qsparse::enc {

/// W(x) = sum_{m < m_max} a^m sin(b^m pi x).
struct WeierstrassSpec {
  double a = 0.5;
  double b = 2.23606797749979;
  int m_max = 0;  ///< 0 selects default_truncation(a)

  void validate() const;
  int terms() const;
};

/// ceil(-16 ln 10 / ln a), capped at 2000: relative tail below 1e-16.
int default_truncation(double a);

struct WeierstrassSamples {
  GridFunction function;
  int terms;
  double tail_bound;  ///< a^terms / (1 - a)
};

/// Samples W at x_i = i * 2^-grid_bits for i < 2^n. grid_bits defaults to n
/// (the whole unit interval); grid_bits > n takes the first 2^n points of a
/// finer grid. The phases b^m x_i / 2 are reduced modulo 1 exactly: b is taken
/// as the exact binary value of the double, so every term keeps full accuracy
/// even when b^m overflows a double.
WeierstrassSamples weierstrass_samples(const WeierstrassSpec& spec, int num_qubits, int grid_bits = -1);

/// 2 + ln a / ln b, valid for 1/b <= a < 1.
double hausdorff_dimension(double a, double b);

}  // namespace qsparse::enc
