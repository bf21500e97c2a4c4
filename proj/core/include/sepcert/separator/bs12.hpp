#pragma once

#include <vector>

#include "sepcert/nfield/matrix.hpp"

namespace sepcert::separator {

/// a = [[1,1],[0,1]], t = diag(2,1) with t a t^-1 = a^2.
nfield::GroupDescription bs12_group();

struct Bs12Row {
  long p = 0;
  long order_a = 0;    // order of a mod p
  long order_t = 0;    // order of t mod p
  bool relation = false;
  bool odd = false;
};

/// Reduces BS(1,2) mod each odd prime in [lo, hi] and records the order of a.
std::vector<Bs12Row> bs12_odd_order(long lo = 3, long hi = 97);

}  // namespace sepcert::separator
