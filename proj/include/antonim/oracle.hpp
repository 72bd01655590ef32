#pragma once

// Brute-force ground truth. Classifies positions by backward induction over
// the whole game tree using only the P/N definitions: a position is P iff
// every move leads to an N position. Knows nothing about completion values.

#include "antonim/cache.hpp"
#include "antonim/core.hpp"

namespace antonim {

using OracleCache = WriteOnceCache<Classification>;

Classification oracle_classify(const CanonicalPosition& pos, OracleCache& cache);

}  // namespace antonim
