#pragma once

#include "qsparse/core/state_vector.hpp"

namespace qsparse {

/// Quantum Fourier transform in the big-endian basis:
/// out_k = 2^{-n/2} sum_j exp(+2 pi i j k / 2^n) in_j. `inverse` uses the
/// opposite sign, so qft(qft(psi), true) == psi.
StateVector qft(const StateVector& psi, bool inverse = false);

}  // namespace qsparse
