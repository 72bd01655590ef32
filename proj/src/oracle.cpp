#include "antonim/oracle.hpp"

namespace antonim {

Classification oracle_classify(const CanonicalPosition& pos, OracleCache& cache) {
  if (auto hit = cache.find(pos)) return *hit;

  // Every successor has strictly fewer chips, so the recursion is well founded.
  // The empty position has no successors and is therefore P.
  bool has_p_successor = false;
  for_each_successor(pos, [&](const CanonicalPosition& next) {
    if (!has_p_successor && oracle_classify(next, cache) == Classification::P)
      has_p_successor = true;
  });
  return cache.insert(pos, has_p_successor ? Classification::N : Classification::P);
}

}  // namespace antonim
