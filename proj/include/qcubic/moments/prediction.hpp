#pragma once

#include <cstdint>

#include "qcubic/constants/residues.hpp"
#include "qcubic/moments/mellin.hpp"

namespace qcubic::moments {

/// Coefficient of x^(3/4): Res_{s=3/4} Z_0(s) times W^(3/4).
inline double secondary_prediction(std::uint64_t prime_limit = 10000, int tail_order = 12,
                                   unsigned workers = 1)
{
    const double res = constants::theorem_a_residue(prime_limit, tail_order, workers).to_double();
    return res * mellin_w({0.75, 0.0}).real();
}

} // namespace qcubic::moments
