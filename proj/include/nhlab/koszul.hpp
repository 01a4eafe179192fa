#pragma once

// n-homology and n-cohomology of a finite-dimensional module, computed one
// Cartan weight at a time on the Chevalley-Eilenberg complexes.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nhlab/rational.hpp"
#include "nhlab/repbuilder.hpp"
#include "nhlab/rootsys.hpp"

namespace nhlab {

enum class Variant { Homology, Cohomology };

struct KoszulConfig {
  unsigned threads = 1;
};

/// x_T (x) v_b: T is a set of nilradical positions (bit i = i-th nilradical
/// root in canonical order), b a module basis index.
struct ChainElement {
  std::uint64_t subset = 0;
  std::size_t vector = 0;
  friend auto operator<=>(const ChainElement&, const ChainElement&) = default;
};

/// Everything of one Cartan weight. basis[p] spans degree p; differential[p]
/// maps degree p to p-1 (homology) or p+1 (cohomology), columns indexed by
/// basis[p].
struct KoszulBlock {
  Weight weight;
  std::vector<std::vector<ChainElement>> basis;
  std::vector<SparseMatrix> differential;
};

class KoszulComplex {
 public:
  KoszulComplex(Variant variant, const GModule& module, ParabolicSubset p, std::vector<KoszulBlock> blocks);

  Variant variant() const { return variant_; }
  const GModule& module() const { return *module_; }
  const ParabolicSubset& parabolic() const { return parabolic_; }
  /// d = dim n.
  int top_degree() const { return static_cast<int>(parabolic_.dimension()); }
  /// Ordered by weight.
  const std::vector<KoszulBlock>& blocks() const { return blocks_; }
  std::size_t chain_dimension(int p) const;

 private:
  Variant variant_;
  const GModule* module_;
  ParabolicSubset parabolic_;
  std::vector<KoszulBlock> blocks_;
};

struct HomologyTable {
  Variant variant = Variant::Homology;
  std::map<std::pair<int, Weight>, std::size_t> entries;  // nonzero multiplicities only
  std::vector<std::size_t> total_dims;                     // indexed by degree 0..d

  std::size_t multiplicity(int p, const Weight& nu) const;
  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

/// The module must outlive the complex. Throws a precondition error if the
/// parabolic does not belong to the module's root system or dim n > 64.
KoszulComplex build_complex(const GModule& m, const ParabolicSubset& p, Variant variant = Variant::Homology,
                            KoszulConfig config = {});

/// Homology or cohomology of the complex, according to its variant.
HomologyTable homology(const KoszulComplex& c, KoszulConfig config = {});
HomologyTable cohomology(const GModule& m, const ParabolicSubset& p, KoszulConfig config = {});

struct DualityViolation {
  int degree;  // homological degree p
  Weight weight;
  std::size_t homology_mult;
  std::size_t cohomology_mult;  // at degree d - p, weight - sigma
};

/// Compares H_p at nu with H^{d-p} at nu - sigma over the union of supports.
std::vector<DualityViolation> check_duality(const HomologyTable& h, const HomologyTable& c, const ParabolicSubset& p);

/// Blocks where the square of the differential is nonzero.
std::vector<std::string> exactness_violations(const KoszulComplex& c);

struct EulerCheck {
  Integer from_table;   // sum (-1)^p total_dims[p]
  Integer from_chains;  // sum (-1)^p binom(d,p) dim M
  bool holds() const { return from_table == from_chains; }
};
EulerCheck euler_characteristic(const HomologyTable& t, const KoszulComplex& c);

/// Entries of a homology table whose weight is not of the form w lambda + rho.
std::vector<std::string> weight_support_violations(const RootSystem& rs, const HomologyTable& t, const Weight& lambda);

}  // namespace nhlab
