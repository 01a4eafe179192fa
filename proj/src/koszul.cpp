#include "nhlab/koszul.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "nhlab/errors.hpp"
#include "parallel.hpp"

namespace nhlab {

namespace {

constexpr const char* kModule = "koszul";

// Nilradical data in the positions used by subset bitmasks.
struct Nilradical {
  std::vector<std::size_t> index;  // Chevalley basis index of each x_i
  std::vector<Weight> weight;
  // pairs (i, j, k, N) with i < j and [x_i, x_j] = N x_k
  struct Bracket {
    int i, j, k;
    long n;
  };
  std::vector<Bracket> brackets;
  std::map<std::pair<int, int>, std::pair<int, long>> bracket_of;
};

Nilradical nilradical_data(const ChevalleyAlgebra& alg, const ParabolicSubset& p) {
  Nilradical nil;
  std::map<std::size_t, int> position;
  for (std::size_t i = 0; i < p.nilradical.size(); ++i) {
    nil.index.push_back(alg.root_index(p.nilradical[i]));
    nil.weight.push_back(alg.basis_weight(nil.index.back()));
    position[nil.index.back()] = static_cast<int>(i);
  }
  for (int i = 0; i < static_cast<int>(nil.index.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(nil.index.size()); ++j)
      for (const auto& t : alg.bracket_basis(nil.index[static_cast<std::size_t>(i)], nil.index[static_cast<std::size_t>(j)])) {
        const auto it = position.find(t.index);
        if (it == position.end()) throw std::logic_error("nilradical is not closed under the bracket");
        nil.brackets.push_back({i, j, it->second, t.coeff});
        nil.bracket_of[{i, j}] = {it->second, t.coeff};
      }
  return nil;
}

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Number of members of `set` below position k.
int below(std::uint64_t set, int k) { return std::popcount(set & ((std::uint64_t{1} << k) - 1)); }

std::vector<int> members(std::uint64_t set) {
  std::vector<int> out;
  for (int i = 0; set; ++i, set >>= 1)
    if (set & 1) out.push_back(i);
  return out;
}

// Subsets of {0..d-1} of size p in lexicographic order of their sorted
// member lists.
std::vector<std::uint64_t> subsets(int d, int p) {
  std::vector<std::uint64_t> out;
  std::vector<int> pick(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    std::uint64_t s = 0;
    for (const int i : pick) s |= std::uint64_t{1} << i;
    out.push_back(s);
    int k = p - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == d - p + k) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < p; ++m) pick[static_cast<std::size_t>(m)] = pick[static_cast<std::size_t>(m - 1)] + 1;
  }
  return out;
}

void check_same_system(const GModule& m, const ParabolicSubset& p) {
  const auto& rs = m.algebra().root_system();
  for (const int i : p.levi_simple_indices)
    if (i < 0 || i >= rs.rank()) throw precondition_error(kModule, "parabolic subset does not belong to " + rs.name());
  const auto own = parabolic(rs, p.levi_simple_indices);
  bool same = p.sigma == own.sigma && p.nilradical == own.nilradical &&
              p.nilradical_roots.size() == own.nilradical_roots.size();
  for (std::size_t i = 0; same && i < own.nilradical_roots.size(); ++i)
    same = p.nilradical_roots[i].fw_coords == own.nilradical_roots[i].fw_coords;
  if (!same)
    throw precondition_error(kModule, "parabolic subset does not belong to " + rs.name());
  if (p.dimension() > 64) throw precondition_error(kModule, "nilradical of dimension > 64 is not supported");
}

using Column = std::map<std::size_t, Rational>;

void add_entry(Column& col, std::size_t row, const Rational& v) {
  auto& slot = col[row];
  slot += v;
}

SparseMatrix to_matrix(std::size_t rows, const std::vector<Column>& cols) {
  SparseMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, {cols[c].begin(), cols[c].end()});
  return m;
}

}  // namespace

KoszulComplex::KoszulComplex(Variant variant, const GModule& module, ParabolicSubset p, std::vector<KoszulBlock> blocks)
    : variant_(variant), module_(&module), parabolic_(std::move(p)), blocks_(std::move(blocks)) {}

std::size_t KoszulComplex::chain_dimension(int p) const {
  std::size_t n = 0;
  for (const auto& b : blocks_)
    if (p >= 0 && static_cast<std::size_t>(p) < b.basis.size()) n += b.basis[static_cast<std::size_t>(p)].size();
  return n;
}

std::size_t HomologyTable::multiplicity(int p, const Weight& nu) const {
  const auto it = entries.find({p, nu});
  return it == entries.end() ? 0 : it->second;
}

KoszulComplex build_complex(const GModule& m, const ParabolicSubset& p, Variant variant, KoszulConfig config) {
  check_same_system(m, p);
  const auto& alg = m.algebra();
  const auto nil = nilradical_data(alg, p);
  const int d = static_cast<int>(p.dimension());
  const bool hom = variant == Variant::Homology;

  // Chain bases, grouped by weight; within a block by subset then vector.
  std::map<Weight, std::vector<std::vector<ChainElement>>> grouped;
  for (int deg = 0; deg <= d; ++deg)
    for (const auto s : subsets(d, deg)) {
      Weight shift(static_cast<std::size_t>(alg.rank()));
      for (const int i : members(s)) shift += nil.weight[static_cast<std::size_t>(i)];
      if (!hom) shift = -shift;
      for (std::size_t b = 0; b < m.dimension(); ++b) {
        auto& slot = grouped[m.basis_weights()[b] + shift];
        slot.resize(static_cast<std::size_t>(d + 1));
        slot[static_cast<std::size_t>(deg)].push_back({s, b});
      }
    }

  std::vector<KoszulBlock> blocks;
  for (auto& [w, basis] : grouped) blocks.push_back({w, std::move(basis), {}});

  detail::parallel_for(blocks.size(), config.threads, [&](std::size_t bi) {
    auto& block = blocks[bi];
    std::vector<std::map<ChainElement, std::size_t>> position(static_cast<std::size_t>(d + 1));
    for (int deg = 0; deg <= d; ++deg)
      for (std::size_t k = 0; k < block.basis[static_cast<std::size_t>(deg)].size(); ++k)
        position[static_cast<std::size_t>(deg)][block.basis[static_cast<std::size_t>(deg)][k]] = k;

    for (int deg = 0; deg <= d; ++deg) {
      const int target = hom ? deg - 1 : deg + 1;
      const auto& source = block.basis[static_cast<std::size_t>(deg)];
      std::vector<Column> cols(source.size());
      if (target < 0 || target > d) {
        block.differential.push_back(to_matrix(0, cols));
        continue;
      }
      const auto& pos = position[static_cast<std::size_t>(target)];
      for (std::size_t c = 0; c < source.size(); ++c) {
        const auto [set, vec] = source[c];
        const auto mem = members(set);
        if (hom) {
          // d(x_1..x_p (x) v) = sum_a (-1)^a x^_a (x) x_a v
          //                   + sum_{a<b} (-1)^{a+b} [x_a,x_b] x^_a x^_b (x) v
          for (std::size_t a = 0; a < mem.size(); ++a) {
            const std::uint64_t rest = set & ~(std::uint64_t{1} << mem[a]);
            const int sg = sign_of(static_cast<int>(a) + 1);
            for (const auto& [row, v] : m.action(nil.index[static_cast<std::size_t>(mem[a])]).column(vec))
              add_entry(cols[c], pos.at({rest, row}), sg * v);
          }
          for (std::size_t a = 0; a < mem.size(); ++a)
            for (std::size_t b = a + 1; b < mem.size(); ++b) {
              const auto it = nil.bracket_of.find({mem[a], mem[b]});
              if (it == nil.bracket_of.end()) continue;
              const auto [k, n] = it->second;
              const std::uint64_t rest = set & ~(std::uint64_t{1} << mem[a]) & ~(std::uint64_t{1} << mem[b]);
              if (rest >> k & 1) continue;
              const int sg = sign_of(static_cast<int>(a + b) + 2 + below(rest, k));
              add_entry(cols[c], pos.at({rest | (std::uint64_t{1} << k), vec}), Rational(sg * n));
            }
        } else {
          // (df)(x_0..x_p) = sum_i (-1)^i x_i f(..x^_i..)
          //                + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..x^_i..x^_j..)
          for (int k = 0; k < d; ++k) {
            if (set >> k & 1) continue;
            const int sg = sign_of(below(set, k));
            for (const auto& [row, v] : m.action(nil.index[static_cast<std::size_t>(k)]).column(vec))
              add_entry(cols[c], pos.at({set | (std::uint64_t{1} << k), row}), sg * v);
          }
          for (const int g : mem) {
            const std::uint64_t rest = set & ~(std::uint64_t{1} << g);
            for (const auto& br : nil.brackets) {
              if (br.k != g || (rest >> br.i & 1) || (rest >> br.j & 1)) continue;
              const std::uint64_t u = rest | (std::uint64_t{1} << br.i) | (std::uint64_t{1} << br.j);
              const int sg = sign_of(below(u, br.i) + below(u, br.j) + below(rest, g));
              add_entry(cols[c], pos.at({u, vec}), Rational(sg * br.n));
            }
          }
        }
      }
      block.differential.push_back(to_matrix(block.basis[static_cast<std::size_t>(target)].size(), cols));
    }
  });
  return KoszulComplex(variant, m, p, std::move(blocks));
}

HomologyTable homology(const KoszulComplex& c, KoszulConfig config) {
  const int d = c.top_degree();
  const auto& blocks = c.blocks();
  std::vector<std::vector<std::size_t>> ranks(blocks.size());
  detail::parallel_for(blocks.size(), config.threads, [&](std::size_t bi) {
    for (const auto& m : blocks[bi].differential) ranks[bi].push_back(rank(m));
  });

  HomologyTable t;
  t.variant = c.variant();
  t.total_dims.assign(static_cast<std::size_t>(d + 1), 0);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (int p = 0; p <= d; ++p) {
      const auto up = static_cast<std::size_t>(p);
      // incoming differential: from p+1 (homology) or p-1 (cohomology)
      const int from = c.variant() == Variant::Homology ? p + 1 : p - 1;
      const std::size_t incoming = from < 0 || from > d ? 0 : ranks[bi][static_cast<std::size_t>(from)];
      const std::size_t mult = blocks[bi].basis[up].size() - ranks[bi][up] - incoming;
      if (mult == 0) continue;
      t.entries[{p, blocks[bi].weight}] = mult;
      t.total_dims[up] += mult;
    }
  return t;
}

HomologyTable cohomology(const GModule& m, const ParabolicSubset& p, KoszulConfig config) {
  return homology(build_complex(m, p, Variant::Cohomology, config), config);
}

std::vector<DualityViolation> check_duality(const HomologyTable& h, const HomologyTable& c, const ParabolicSubset& p) {
  if (h.variant != Variant::Homology || c.variant != Variant::Cohomology)
    throw precondition_error(kModule, "check_duality needs a homology table and a cohomology table");
  const int d = static_cast<int>(p.dimension());
  if (h.total_dims.size() != static_cast<std::size_t>(d + 1) || c.total_dims.size() != h.total_dims.size())
    throw precondition_error(kModule, "check_duality: tables do not match the nilradical dimension");
  std::map<std::pair<int, Weight>, std::pair<std::size_t, std::size_t>> joined;
  for (const auto& [key, mult] : h.entries) joined[key].first = mult;
  for (const auto& [key, mult] : c.entries) joined[{d - key.first, key.second + p.sigma}].second = mult;
  std::vector<DualityViolation> out;
  for (const auto& [key, mults] : joined)
    if (mults.first != mults.second) out.push_back({key.first, key.second, mults.first, mults.second});
  return out;
}

std::vector<std::string> exactness_violations(const KoszulComplex& c) {
  std::vector<std::string> out;
  const bool hom = c.variant() == Variant::Homology;
  for (const auto& b : c.blocks())
    for (int p = 0; p <= c.top_degree(); ++p) {
      const int q = hom ? p - 1 : p + 1;
      if (q < 0 || q > c.top_degree()) continue;
      const auto& first = b.differential[static_cast<std::size_t>(p)];
      const auto& second = b.differential[static_cast<std::size_t>(q)];
      if (second.rows() == 0 || first.cols() == 0) continue;
      const auto sq = multiply(second, first);
      if (sq.nonzeros() != 0)
        out.push_back(std::string(hom ? "boundary" : "coboundary") + " squares to nonzero at degree " +
                      std::to_string(p) + ", weight " + b.weight.to_string());
    }
  return out;
}

EulerCheck euler_characteristic(const HomologyTable& t, const KoszulComplex& c) {
  EulerCheck e{0, 0};
  for (std::size_t p = 0; p < t.total_dims.size(); ++p)
    e.from_table += sign_of(static_cast<int>(p)) * Integer(static_cast<unsigned long>(t.total_dims[p]));
  const auto d = static_cast<unsigned long>(c.top_degree());
  const Integer dim(static_cast<unsigned long>(c.module().dimension()));
  for (unsigned long p = 0; p <= d; ++p) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), d, p);
    e.from_chains += sign_of(static_cast<int>(p)) * binom * dim;
  }
  return e;
}

std::vector<std::string> weight_support_violations(const RootSystem& rs, const HomologyTable& t, const Weight& lambda) {
  const InfinitesimalCharacter target(rs, lambda);
  std::vector<std::string> out;
  for (const auto& [key, mult] : t.entries)
    if (!(InfinitesimalCharacter(rs, key.second - rs.rho()) == target))
      out.push_back("degree " + std::to_string(key.first) + " weight " + key.second.to_string() +
                    " is not of the form w lambda + rho");
  return out;
}

}  // namespace nhlab
