#pragma once

// Homology predictions for regular standard modules of a connected complex
// group, indexed by chains of simple roots.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nhlab/rootsys.hpp"

namespace nhlab {

/// A chain alpha_1..alpha_k: each alpha_{j+1} is a positive root that is
/// simple in positive_systems[j], and positive_systems[j+1] is the image of
/// positive_systems[j] under the reflection in alpha_{j+1}.
struct ChainOfSimpleRoots {
  std::vector<std::size_t> root_ids;
  std::vector<Root> roots;
  WeylElement weyl_element;  // s_{alpha_1} ... s_{alpha_k}
  std::vector<std::vector<std::size_t>> positive_systems;  // k + 1 sets of root ids, each sorted

  std::size_t size() const { return roots.size(); }
};

struct ChainDefect {
  std::size_t position;  // 0-based index of the offending root
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> decomposition;  // root ids summing to the offending root
};

/// First position where the sequence stops being a chain, if any.
std::optional<ChainDefect> find_chain_defect(const RootSystem& rs, std::span<const std::size_t> root_ids);

/// Throws a precondition error carrying the position and witness of the
/// first defect.
ChainOfSimpleRoots validate_chain(const RootSystem& rs, std::span<const std::size_t> root_ids);

/// Every chain of length <= max_length, ordered by length and then
/// lexicographically by root ids.
std::vector<ChainOfSimpleRoots> enumerate_chains(const RootSystem& rs, std::size_t max_length);

struct CharacterParam {
  Weight base_differential;  // mu = lambda + rho
  Weight lambda;

  static CharacterParam from_lambda(const RootSystem& rs, const Weight& lambda);
};

struct StandardModulePrediction {
  ChainOfSimpleRoots chain;
  int degree;                     // the only degree with nonzero homology
  Weight character_differential;  // mu + chi_w
  Weight chi_w_differential;
};

/// Differential of chi_w: minus the sum of the chain roots.
Weight chi_w(const RootSystem& rs, const ChainOfSimpleRoots& chain);

/// N - length(w).
int codim(const RootSystem& rs, const WeylElement& w);

StandardModulePrediction predict_standard(const RootSystem& rs, const CharacterParam& chi,
                                          const ChainOfSimpleRoots& chain);

}  // namespace nhlab
