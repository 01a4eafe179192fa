#pragma once

// Shared helpers for the unit tests: seeded generators and small oracles
// that do not go through the library code they check.

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "nhlab/chevalley.hpp"
#include "nhlab/rational.hpp"
#include "nhlab/repbuilder.hpp"
#include "nhlab/rootsys.hpp"

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260417);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline nhlab::Rational random_rational(long bound = 9) {
  nhlab::Rational q(uniform(-bound, bound), uniform(1, bound));
  q.canonicalize();
  return q;
}

inline nhlab::Weight random_weight(std::size_t rank, long bound = 9) {
  nhlab::Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = random_rational(bound);
  return w;
}

/// Antidominant regular integral: every fundamental coordinate <= -1.
inline nhlab::Weight random_antidominant(std::size_t rank, long depth) {
  nhlab::Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = -uniform(1, depth);
  return w;
}

inline std::shared_ptr<const nhlab::ChevalleyAlgebra> algebra(char type, int rank) {
  return std::make_shared<const nhlab::ChevalleyAlgebra>(nhlab::build_chevalley(nhlab::build_root_system(type, rank)));
}

inline nhlab::Weight w(std::initializer_list<long> v) { return nhlab::Weight::from_ints(v); }

}  // namespace testing
