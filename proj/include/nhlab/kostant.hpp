#pragma once

// Predicted n-homology of an irreducible module: one Levi constituent for
// each minimal coset representative w, in degree length(w), with extreme
// weight w lambda + rho.

#include <span>
#include <vector>

#include "nhlab/chevalley.hpp"
#include "nhlab/koszul.hpp"
#include "nhlab/repbuilder.hpp"
#include "nhlab/rootsys.hpp"

namespace nhlab {

struct KostantEntry {
  int degree;
  Weight weight;  // w lambda + rho, the lowest weight of the Levi constituent
  WeylElement w;
  std::size_t multiplicity = 1;
};

struct KostantPrediction {
  Weight lambda;
  ParabolicSubset parabolic;
  std::vector<KostantEntry> entries;  // sorted by (degree, weight)
  HomologyTable expanded;             // full Cartan-weight multiplicities
};

KostantPrediction predict_borel(const RootSystem& rs, const Weight& lambda);

/// Levi constituents are expanded with the Verma machinery of repbuilder.
KostantPrediction predict_parabolic(const ChevalleyAlgebra& alg, const Weight& lambda,
                                    std::span<const int> levi_simple_indices, ModuleConfig config = {});
KostantPrediction predict_parabolic(const RootSystem& rs, const Weight& lambda,
                                    std::span<const int> levi_simple_indices, ModuleConfig config = {});

struct Discrepancy {
  int degree;
  Weight weight;
  std::size_t predicted;
  std::size_t computed;
};

/// Every (degree, weight) where the expanded prediction and the computed
/// homology table disagree; empty on an exact match.
std::vector<Discrepancy> compare(const KostantPrediction& pred, const HomologyTable& computed);

}  // namespace nhlab
