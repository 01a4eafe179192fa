#pragma once

// Finite-dimensional irreducible g-modules, built from a lowest-weight Verma
// module by quotienting out the radical of its contravariant form.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nhlab/chevalley.hpp"
#include "nhlab/rational.hpp"
#include "nhlab/rootsys.hpp"

namespace nhlab {

struct ModuleConfig {
  std::size_t max_dimension = 10'000;
};

class GModule {
 public:
  GModule(std::shared_ptr<const ChevalleyAlgebra> alg, Weight lowest, std::vector<Weight> basis_weights,
          std::vector<SparseMatrix> action);

  const ChevalleyAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const ChevalleyAlgebra>& algebra_ptr() const { return alg_; }
  /// mu = lambda + rho.
  const Weight& lowest_weight() const { return lowest_; }
  const std::vector<Weight>& basis_weights() const { return weights_; }
  /// Matrix of the Chevalley basis element with the given index.
  const SparseMatrix& action(std::size_t generator) const { return action_[generator]; }
  std::size_t dimension() const { return weights_.size(); }

  /// Same module in a reordered basis: new vector i is old vector order[i].
  GModule permuted(std::span<const std::size_t> order) const;

 private:
  std::shared_ptr<const ChevalleyAlgebra> alg_;
  Weight lowest_;
  std::vector<Weight> weights_;
  std::vector<SparseMatrix> action_;
};

/// Contravariant form on one weight space of the Verma module.
struct VermaSlice {
  Weight target_weight;
  std::vector<std::vector<int>> monomial_basis;  // exponents over positive roots, canonical order
  RatMatrix gram;
};

/// Weyl dimension formula for the irreducible module with lowest weight
/// lambda + rho. Requires lambda antidominant regular integral.
Integer weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Irreducible module with lowest weight lambda + rho. Requires lambda
/// antidominant regular integral; throws a resource error when the module
/// would exceed config.max_dimension.
GModule build_irrep(std::shared_ptr<const ChevalleyAlgebra> alg, const Weight& lambda, ModuleConfig config = {});

/// Gram matrix at weight nu of the Verma module with lowest weight lambda + rho.
VermaSlice gram_matrix(const ChevalleyAlgebra& alg, const Weight& lambda, const Weight& nu);

std::map<Weight, std::size_t> weight_multiplicities(const GModule& m);

/// Character of the irreducible module of the Levi factor of `p` with the
/// given lowest weight, as multiplicities of full Cartan weights. The weight
/// must pair to a nonpositive integer with every Levi simple coroot.
std::map<Weight, std::size_t> levi_character(const ChevalleyAlgebra& alg, const ParabolicSubset& p,
                                             const Weight& lowest, ModuleConfig config = {});

/// Every (x, y) for which rho([x,y]) != rho(x)rho(y) - rho(y)rho(x), plus
/// Cartan elements that fail to act diagonally by the basis weights.
std::vector<std::string> bracket_relation_violations(const GModule& m);

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace nhlab
