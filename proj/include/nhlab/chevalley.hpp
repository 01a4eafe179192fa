#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nhlab/rational.hpp"
#include "nhlab/rootsys.hpp"

namespace nhlab {

struct LieTerm {
  std::size_t index;
  long coeff;
  friend bool operator==(const LieTerm&, const LieTerm&) = default;
};

/// Sparse element of g over the Chevalley basis.
using LieElement = std::map<std::size_t, Rational>;

/// g realised on a Chevalley basis. Basis order: H_1..H_n (simple coroots),
/// then E_alpha for every root id of the root system (positive roots in
/// canonical order, then their negatives), so basis index = n + root id.
class ChevalleyAlgebra {
 public:
  using Table = std::vector<std::vector<std::vector<LieTerm>>>;

  ChevalleyAlgebra(RootSystem rs, Table table);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t dimension() const { return table_.size(); }

  bool is_cartan(std::size_t index) const { return index < static_cast<std::size_t>(rank()); }
  std::size_t root_id(std::size_t index) const { return index - static_cast<std::size_t>(rank()); }
  std::size_t cartan_index(int i) const { return static_cast<std::size_t>(i); }
  std::size_t root_index(std::size_t root_id) const { return static_cast<std::size_t>(rank()) + root_id; }
  /// Basis index of E_{-alpha} for the root at basis index `index`.
  std::size_t opposite_index(std::size_t index) const;

  const Weight& basis_weight(std::size_t index) const { return weights_[index]; }
  std::string basis_name(std::size_t index) const;

  const std::vector<LieTerm>& bracket_basis(std::size_t x, std::size_t y) const { return table_[x][y]; }
  /// N_{alpha,beta} with [E_alpha, E_beta] = N E_{alpha+beta}; 0 if alpha+beta is not a root.
  long structure_constant(std::size_t alpha_id, std::size_t beta_id) const;

  const Table& table() const { return table_; }

 private:
  RootSystem rs_;
  Table table_;
  std::vector<Weight> weights_;
};

/// Signs fixed by N_{alpha,beta} = +(p+1) on extraspecial pairs; all other
/// constants follow from the standard Chevalley-basis relations.
ChevalleyAlgebra build_chevalley(const RootSystem& rs);

/// Same algebra, with the structure-constant table read from (or written to)
/// `<cache_dir>/<type><rank>.json`. A missing or unusable cache file is
/// rebuilt; results never depend on the cache.
ChevalleyAlgebra load_or_build_chevalley(const RootSystem& rs, const std::optional<std::filesystem::path>& cache_dir);

LieElement bracket(const ChevalleyAlgebra& alg, const LieElement& x, const LieElement& y);

}  // namespace nhlab
