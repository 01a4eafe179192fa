#pragma once

// Root systems of the finite crystallographic types and their Weyl groups.
//
// Conventions used throughout the library:
//   * weights are given in the basis of fundamental weights, so the pairing of
//     a weight with the i-th simple coroot is its i-th coordinate;
//   * the Cartan matrix follows the column convention
//       alpha_j = sum_i cartan[i][j] * omega_i,
//     i.e. cartan[i][j] = <alpha_i^vee, alpha_j>;
//   * simple roots are numbered as in Bourbaki and indexed from 0 in the API
//     (the command line tool uses 1-based indices).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nhlab/rational.hpp"

namespace nhlab {

struct Root {
  std::vector<int> simple_coords;  // alpha = sum simple_coords[i] * alpha_i
  Weight fw_coords;                // same root in the fundamental-weight basis
  std::vector<int> coroot_coords;  // alpha^vee = sum coroot_coords[i] * alpha_i^vee

  int height() const;
  bool is_positive() const;
  Root operator-() const;
  friend bool operator==(const Root& a, const Root& b) { return a.simple_coords == b.simple_coords; }
};

struct RootSystemConfig {
  std::uint64_t weyl_enumeration_bound = 1'000'000;
};

class RootSystem {
 public:
  char type_label() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  /// Positive roots ordered by height, ties broken by descending
  /// lexicographic order of simple coordinates (so alpha_1, alpha_2, ... lead).
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  const Weight& rho() const { return rho_; }
  std::uint64_t weyl_order() const { return weyl_order_; }
  std::uint64_t enumeration_bound() const { return config_.weyl_enumeration_bound; }

  /// Half squared length of each simple root, normalised so short roots give 1.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  /// W-invariant form normalised by symmetrizer(): (alpha_i, alpha_i) = 2 d_i.
  long inner(std::span<const int> a, std::span<const int> b) const;
  long inner(const Root& a, const Root& b) const { return inner(a.simple_coords, b.simple_coords); }

  /// Root ids enumerate all roots: id i < N is positive_roots()[i], id N + i
  /// is its negative.
  std::size_t num_roots() const { return 2 * positive_.size(); }
  const Root& root(std::size_t id) const { return all_[id]; }
  static std::size_t negate_id(std::size_t id, std::size_t n) { return id < n ? id + n : id - n; }
  std::optional<std::size_t> root_id(std::span<const int> simple_coords) const;
  std::optional<std::size_t> root_id_of_weight(const Weight& fw) const;

  /// Coordinates of a weight in the simple-root basis (inverse Cartan matrix).
  std::vector<Rational> simple_coordinates(const Weight& w) const;
  Weight weight_of(std::span<const int> simple_coords) const;

  friend RootSystem build_root_system(char type, int rank, RootSystemConfig config);

 private:
  RootSystem() = default;

  char type_ = 'A';
  int rank_ = 0;
  RootSystemConfig config_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;
  std::vector<Root> simple_;
  std::vector<Root> positive_;
  std::vector<Root> all_;
  Weight rho_;
  std::uint64_t weyl_order_ = 1;
  std::map<std::vector<int>, std::size_t> id_by_simple_;
  std::vector<std::vector<Rational>> inverse_cartan_;
};

/// Throws a precondition error naming the pair if (type, rank) is not one of
/// A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E_6/7/8, F_4, G_2.
RootSystem build_root_system(char type, int rank, RootSystemConfig config = {});
bool is_valid_type(char type, int rank);

Rational pairing(const Weight& mu, const Root& alpha);
Weight reflect(const Root& alpha, const Weight& mu);

/// Integer matrix acting on fundamental-weight coordinates.
struct WeylMatrix {
  int rank = 0;
  std::vector<long> entries;  // row-major rank x rank

  long operator()(int r, int c) const { return entries[static_cast<std::size_t>(r * rank + c)]; }
  friend WeylMatrix operator*(const WeylMatrix& a, const WeylMatrix& b);
  friend bool operator==(const WeylMatrix& a, const WeylMatrix& b) = default;
};

class WeylElement {
 public:
  /// Reduces the word; the stored word is the lexicographically least
  /// reduced expression (indices 0-based, w = s_{word[0]} s_{word[1]} ...).
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);
  static WeylElement from_matrix(const RootSystem& rs, WeylMatrix matrix);
  static WeylElement identity(const RootSystem& rs);
  static WeylElement reflection(const RootSystem& rs, const Root& alpha);

  const std::vector<int>& word() const { return word_; }
  const WeylMatrix& matrix() const { return matrix_; }
  int length() const { return static_cast<int>(word_.size()); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  std::vector<int> word_;
  WeylMatrix matrix_;
};

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

Weight act(const WeylElement& w, const Weight& mu);
Root act(const RootSystem& rs, const WeylElement& w, const Root& alpha);

/// |{alpha > 0 : w(alpha) < 0}|, computed by counting roots (independent of
/// the stored reduced word).
int length(const RootSystem& rs, const WeylElement& w);

/// The whole Weyl group, enumerated breadth first from the identity.
class WeylGroup {
 public:
  /// Throws a resource error if |W| exceeds the root system's enumeration bound.
  explicit WeylGroup(const RootSystem& rs);

  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& longest() const { return elements_.back(); }
  /// Position of an element in elements(); elements are listed by length.
  std::size_t index_of(const WeylElement& w) const;

 private:
  std::vector<WeylElement> elements_;
  std::map<std::vector<long>, std::size_t> index_;
};

std::vector<WeylElement> weyl_elements(const RootSystem& rs);

bool is_antidominant_regular_integral(const RootSystem& rs, const Weight& lambda);
bool is_regular(const RootSystem& rs, const Weight& lambda);

/// A Weyl orbit W.lambda, represented by its unique dominant member.
class InfinitesimalCharacter {
 public:
  InfinitesimalCharacter(const RootSystem& rs, const Weight& lambda);
  const Weight& orbit_representative() const { return representative_; }
  friend bool operator==(const InfinitesimalCharacter&, const InfinitesimalCharacter&) = default;

 private:
  Weight representative_;
};

/// True iff lambda2 lies in W.lambda1; decided by enumerating the orbit.
bool infinitesimal_character_equal(const RootSystem& rs, const Weight& lambda1, const Weight& lambda2);

struct ParabolicSubset {
  std::vector<int> levi_simple_indices;   // S, 0-based, ascending
  std::vector<std::size_t> nilradical;    // positive-root ids outside the Levi, canonical order
  std::vector<std::size_t> levi_positive; // positive-root ids supported on S
  std::vector<Root> nilradical_roots;
  std::vector<Root> levi_positive_roots;
  Weight sigma;                           // sum of nilradical roots, the weight of the top wedge

  std::size_t dimension() const { return nilradical.size(); }
  bool is_borel() const { return levi_simple_indices.empty(); }
};

ParabolicSubset parabolic(const RootSystem& rs, std::span<const int> levi_simple_indices);

/// Elements w with wlambda antidominant for the Levi: one per coset W_S w.
std::vector<WeylElement> coset_reps(const RootSystem& rs, const WeylGroup& group,
                                    std::span<const int> levi_simple_indices, const Weight& lambda);

}  // namespace nhlab
