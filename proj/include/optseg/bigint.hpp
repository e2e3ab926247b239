#pragma once

#include <gmpxx.h>

namespace optseg {

/// Arbitrary-precision signed integer. Counts and objective values outgrow
/// every fixed width quickly (the unconstrained search space alone reaches
/// 2^(N-1)), so all scores, values, weights and counts use this type at the
/// API boundary.
using BigInt = mpz_class;

}  // namespace optseg
