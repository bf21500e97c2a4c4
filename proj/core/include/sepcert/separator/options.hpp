#pragma once

#include <cstddef>

#include "sepcert/chevalley/chevalley.hpp"
#include "sepcert/residue/closure.hpp"
#include "sepcert/units/units.hpp"

namespace sepcert::separator {

struct Options {
  long relation_bound = units::kDefaultRelationBound;
  long search_limit = chevalley::kDefaultSearchLimit;
  std::size_t closure_cap = residue::kDefaultClosureCap;
  bool fast_path = true;
  long fast_prime_limit = 200;  // primes tried by the direct scan
  unsigned jobs = 1;

  chevalley::SearchOptions search() const { return {search_limit, jobs}; }
};

}  // namespace sepcert::separator
