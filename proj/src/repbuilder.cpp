#include "nhlab/repbuilder.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "nhlab/errors.hpp"

namespace nhlab {

namespace {

constexpr const char* kModule = "repbuilder";

using Monomial = std::vector<int>;
using Combination = std::map<Monomial, Rational>;

void add_to(Combination& acc, const Combination& terms, const Rational& scale) {
  for (const auto& [m, c] : terms) {
    auto& slot = acc[m];
    slot += scale * c;
    if (slot == 0) acc.erase(m);
  }
}

// Verma module over the subalgebra spanned by h and the root vectors of
// +-raising, where raising is a closed set of positive roots listed in
// canonical order. Vectors are PBW monomials prod_j E_{raising[j]}^{k_j} v
// with the factors in increasing slot order; v is killed by every
// E_{-raising[j]}.
class VermaEngine {
 public:
  struct Slice {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    RatMatrix gram;
  };

  VermaEngine(const ChevalleyAlgebra& alg, std::vector<std::size_t> raising, Weight mu)
      : alg_(alg), rs_(alg.root_system()), raising_(std::move(raising)), mu_(std::move(mu)) {
    for (std::size_t j = 0; j < raising_.size(); ++j) slot_of_index_[alg_.root_index(raising_[j])] = j;
  }

  const Weight& mu() const { return mu_; }
  std::size_t slots() const { return raising_.size(); }
  const std::vector<int>& slot_root(std::size_t j) const { return rs_.root(raising_[j]).simple_coords; }

  Weight weight_at(std::span<const int> gamma) const { return mu_ + rs_.weight_of(gamma); }

  std::vector<int> gamma_of(const Monomial& m) const {
    std::vector<int> g(static_cast<std::size_t>(rs_.rank()), 0);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j])
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += m[j] * slot_root(j)[i];
    return g;
  }

  // Monomials of weight mu + gamma, exponent vectors in descending
  // lexicographic order.
  std::vector<Monomial> monomials(const std::vector<int>& gamma) const {
    std::vector<Monomial> out;
    Monomial cur(slots(), 0);
    std::vector<int> rest = gamma;
    enumerate(0, cur, rest, out);
    return out;
  }

  const Combination& act(std::size_t x, const Monomial& m) {
    const auto key = std::make_pair(x, m);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    Combination out = compute_act(x, m);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  const Slice& slice(const std::vector<int>& gamma) {
    if (const auto it = slices_.find(gamma); it != slices_.end()) return it->second;
    Slice s;
    s.monomials = monomials(gamma);
    for (std::size_t a = 0; a < s.monomials.size(); ++a) s.index[s.monomials[a]] = a;
    const std::size_t n = s.monomials.size();
    s.gram = RatMatrix(n, n);
    if (std::all_of(gamma.begin(), gamma.end(), [](int g) { return g == 0; })) {
      s.gram(0, 0) = 1;
    } else {
      // <E_f m', y> = <m', E_{-f} y> with f the leading factor of row a.
      // E_{-f} m_b is expanded once per (f, b) in the lower slice's indices.
      std::map<std::size_t, std::vector<std::vector<std::pair<std::size_t, Rational>>>> lowered;
      for (std::size_t a = 0; a < n; ++a) {
        Monomial lead = s.monomials[a];
        const std::size_t f = first_slot(lead);
        --lead[f];
        std::vector<int> lower = gamma;
        for (std::size_t i = 0; i < lower.size(); ++i) lower[i] -= slot_root(f)[i];
        const Slice& low = slice(lower);
        auto [it, fresh] = lowered.try_emplace(f);
        if (fresh) {
          const std::size_t lowering = alg_.opposite_index(alg_.root_index(raising_[f]));
          it->second.resize(n);
          for (std::size_t b = 0; b < n; ++b)
            for (const auto& [mono, c] : act(lowering, s.monomials[b])) it->second[b].emplace_back(low.index.at(mono), c);
        }
        const std::size_t row = low.index.at(lead);
        // Entries are integers whenever mu is integral; sum those in Z.
        Integer vz;
        Rational vq;
        for (std::size_t b = 0; b < n; ++b) {
          vz = 0;
          vq = 0;
          for (const auto& [col, c] : it->second[b]) {
            const Rational& g = low.gram(row, col);
            if (c.get_den() == 1 && g.get_den() == 1)
              mpz_addmul(vz.get_mpz_t(), c.get_num_mpz_t(), g.get_num_mpz_t());
            else
              vq += c * g;
          }
          s.gram(a, b) = vq + vz;
        }
      }
    }
    return slices_.emplace(gamma, std::move(s)).first->second;
  }

 private:
  static std::size_t first_slot(const Monomial& m) {
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j]) return j;
    return m.size();
  }

  void enumerate(std::size_t j, Monomial& cur, std::vector<int>& rest, std::vector<Monomial>& out) const {
    if (j == slots()) {
      if (std::all_of(rest.begin(), rest.end(), [](int r) { return r == 0; })) out.push_back(cur);
      return;
    }
    const auto& root = slot_root(j);
    int kmax = -1;
    for (std::size_t i = 0; i < root.size(); ++i)
      if (root[i] > 0) {
        const int q = rest[i] / root[i];
        kmax = kmax < 0 ? q : std::min(kmax, q);
      }
    for (int k = kmax; k >= 0; --k) {
      for (std::size_t i = 0; i < root.size(); ++i) rest[i] -= k * root[i];
      cur[j] = k;
      enumerate(j + 1, cur, rest, out);
      for (std::size_t i = 0; i < root.size(); ++i) rest[i] += k * root[i];
    }
    cur[j] = 0;
  }

  Combination compute_act(std::size_t x, const Monomial& m) {
    if (alg_.is_cartan(x)) {
      const auto g = gamma_of(m);
      const Rational c = weight_at(g)[x];
      if (c == 0) return {};
      return {{m, c}};
    }
    const auto slot = slot_of_index_.find(x);
    const std::size_t f = first_slot(m);
    if (slot != slot_of_index_.end() && slot->second <= f) {
      Monomial out = m;
      ++out[slot->second];
      return {{out, Rational(1)}};
    }
    if (f == m.size()) {
      if (!alg_.root_system().root(alg_.root_id(x)).is_positive()) return {};
      throw std::logic_error("Verma action of a root vector outside the subalgebra");
    }
    // x E_f m' = E_f (x m') + [x, E_f] m'.
    Monomial tail = m;
    --tail[f];
    const std::size_t ef = alg_.root_index(raising_[f]);
    Combination out;
    const Combination inner = act(x, tail);
    for (const auto& [mono, c] : inner) add_to(out, act(ef, mono), c);
    for (const auto& t : alg_.bracket_basis(x, ef)) add_to(out, act(t.index, tail), Rational(t.coeff));
    return out;
  }

  const ChevalleyAlgebra& alg_;
  const RootSystem& rs_;
  std::vector<std::size_t> raising_;
  Weight mu_;
  std::map<std::size_t, std::size_t> slot_of_index_;
  std::map<std::pair<std::size_t, Monomial>, Combination> memo_;
  std::map<std::vector<int>, Slice> slices_;
};

// A weight space of the irreducible quotient: gamma relative to mu, the
// pivot monomials spanning it, and the projection from Verma coordinates
// onto those pivots modulo the radical.
struct QuotientSpace {
  std::vector<int> gamma;
  std::vector<std::size_t> pivots;
  RatMatrix projection;
};

std::size_t total_rank(const std::vector<QuotientSpace>& spaces) {
  std::size_t n = 0;
  for (const auto& q : spaces) n += q.pivots.size();
  return n;
}

// Breadth-first over heights: a weight of the irreducible module other than
// mu is reached from another weight of the module by a simple root of the
// raising set.
std::vector<QuotientSpace> explore(VermaEngine& engine, const std::vector<int>& simple_steps, std::size_t bound,
                                   bool with_projection) {
  const std::size_t n = engine.gamma_of(Monomial(engine.slots(), 0)).size();
  std::vector<QuotientSpace> spaces;
  std::vector<std::vector<int>> level{std::vector<int>(n, 0)};
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& gamma : level) {
      const auto& s = engine.slice(gamma);
      const auto ech = echelon(s.gram);
      if (ech.rank == 0) continue;
      QuotientSpace q{gamma, ech.pivot_columns, {}};
      if (with_projection) {
        RatMatrix gbb(ech.rank, ech.rank);
        RatMatrix gb(ech.rank, s.monomials.size());
        for (std::size_t a = 0; a < ech.rank; ++a) {
          for (std::size_t b = 0; b < ech.rank; ++b) gbb(a, b) = s.gram(ech.pivot_columns[a], ech.pivot_columns[b]);
          for (std::size_t b = 0; b < s.monomials.size(); ++b) gb(a, b) = s.gram(ech.pivot_columns[a], b);
        }
        q.projection = inverse(gbb) * gb;
      }
      spaces.push_back(std::move(q));
      if (total_rank(spaces) > bound)
        throw resource_error(kModule, "module dimension exceeds the bound " + std::to_string(bound));
      for (const int i : simple_steps) {
        auto up = gamma;
        ++up[static_cast<std::size_t>(i)];
        next.push_back(std::move(up));
      }
    }
    std::sort(next.begin(), next.end(), std::greater<>());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return spaces;
}

void require_lowest_weight_parameter(const RootSystem& rs, const Weight& lambda, const char* op) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()))
    throw precondition_error(kModule, std::string(op) + ": lambda has " + std::to_string(lambda.rank()) +
                                          " coordinates, rank is " + std::to_string(rs.rank()));
  if (!is_antidominant_regular_integral(rs, lambda))
    throw precondition_error(kModule, std::string(op) + ": lambda " + lambda.to_string() +
                                          " is not antidominant regular integral");
}

std::vector<std::size_t> all_positive(const RootSystem& rs) {
  std::vector<std::size_t> ids(rs.num_positive());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

std::vector<int> all_simple(const RootSystem& rs) {
  std::vector<int> s(static_cast<std::size_t>(rs.rank()));
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<int>(i);
  return s;
}

}  // namespace

GModule::GModule(std::shared_ptr<const ChevalleyAlgebra> alg, Weight lowest, std::vector<Weight> basis_weights,
                 std::vector<SparseMatrix> action)
    : alg_(std::move(alg)), lowest_(std::move(lowest)), weights_(std::move(basis_weights)), action_(std::move(action)) {
  if (!alg_) throw std::invalid_argument("GModule without an algebra");
  if (action_.size() != alg_->dimension()) throw std::invalid_argument("GModule needs one matrix per generator");
  for (const auto& a : action_)
    if (a.rows() != weights_.size() || a.cols() != weights_.size())
      throw std::invalid_argument("GModule action matrix has wrong shape");
}

GModule GModule::permuted(std::span<const std::size_t> order) const {
  const std::size_t n = dimension();
  if (order.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) throw std::invalid_argument("not a permutation");
    position[order[i]] = i;
  }
  std::vector<Weight> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = weights_[order[i]];
  std::vector<SparseMatrix> action;
  action.reserve(action_.size());
  for (const auto& a : action_) {
    SparseMatrix b(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<SparseMatrix::Entry> col;
      for (const auto& [r, v] : a.column(order[c])) col.emplace_back(position[r], v);
      b.set_column(c, std::move(col));
    }
    action.push_back(std::move(b));
  }
  return GModule(alg_, lowest_, std::move(weights), std::move(action));
}

Integer weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_lowest_weight_parameter(rs, lambda, "weyl_dimension");
  // w0 maps the antidominant mu = lambda + rho to the dominant chamber, so the
  // highest weight is the dominant member of the orbit of mu.
  const Weight high = InfinitesimalCharacter(rs, lambda + rs.rho()).orbit_representative();
  const Weight shifted = high + rs.rho();
  Rational d = 1;
  for (const auto& alpha : rs.positive_roots()) d *= pairing(shifted, alpha) / pairing(rs.rho(), alpha);
  if (d.get_den() != 1 || d <= 0) throw std::logic_error("Weyl dimension is not a positive integer");
  return d.get_num();
}

GModule build_irrep(std::shared_ptr<const ChevalleyAlgebra> alg, const Weight& lambda, ModuleConfig config) {
  if (!alg) throw precondition_error(kModule, "build_irrep: no algebra");
  const auto& rs = alg->root_system();
  require_lowest_weight_parameter(rs, lambda, "build_irrep");
  const Integer expected = weyl_dimension(rs, lambda);
  if (expected > Integer(static_cast<unsigned long>(config.max_dimension)))
    throw resource_error(kModule, "module of dimension " + expected.get_str() + " exceeds the bound " +
                                      std::to_string(config.max_dimension));

  VermaEngine engine(*alg, all_positive(rs), lambda + rs.rho());
  const auto spaces = explore(engine, all_simple(rs), config.max_dimension, true);

  std::vector<Weight> weights;
  std::map<std::vector<int>, std::size_t> space_of;
  std::vector<std::size_t> offset;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    space_of[spaces[s].gamma] = s;
    offset.push_back(weights.size());
    for (std::size_t k = 0; k < spaces[s].pivots.size(); ++k) weights.push_back(engine.weight_at(spaces[s].gamma));
  }
  const std::size_t dim = weights.size();

  std::vector<SparseMatrix> action(alg->dimension(), SparseMatrix(dim, dim));
  for (std::size_t x = 0; x < alg->dimension(); ++x) {
    if (alg->is_cartan(x)) {
      for (std::size_t b = 0; b < dim; ++b) action[x].set_column(b, {{b, weights[b][x]}});
      continue;
    }
    const auto& shift = rs.root(alg->root_id(x)).simple_coords;
    for (std::size_t s = 0; s < spaces.size(); ++s) {
      auto target = spaces[s].gamma;
      for (std::size_t i = 0; i < target.size(); ++i) target[i] += shift[i];
      const auto it = space_of.find(target);
      if (it == space_of.end()) continue;
      const auto& dest = spaces[it->second];
      const auto& dest_slice = engine.slice(dest.gamma);
      const auto& src_slice = engine.slice(spaces[s].gamma);
      for (std::size_t k = 0; k < spaces[s].pivots.size(); ++k) {
        const auto& image = engine.act(x, src_slice.monomials[spaces[s].pivots[k]]);
        std::vector<SparseMatrix::Entry> col;
        for (std::size_t r = 0; r < dest.pivots.size(); ++r) {
          Rational v = 0;
          for (const auto& [mono, c] : image) v += dest.projection(r, dest_slice.index.at(mono)) * c;
          col.emplace_back(offset[it->second] + r, v);
        }
        action[x].set_column(offset[s] + k, std::move(col));
      }
    }
  }
  if (Integer(static_cast<unsigned long>(dim)) != expected)
    throw std::logic_error("constructed module has dimension " + std::to_string(dim) + ", expected " +
                           expected.get_str());
  return GModule(std::move(alg), lambda + rs.rho(), std::move(weights), std::move(action));
}

VermaSlice gram_matrix(const ChevalleyAlgebra& alg, const Weight& lambda, const Weight& nu) {
  const auto& rs = alg.root_system();
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()) || nu.rank() != lambda.rank())
    throw precondition_error(kModule, "gram_matrix: weight rank does not match the algebra");
  const Weight mu = lambda + rs.rho();
  const auto k = rs.simple_coordinates(nu - mu);
  std::vector<int> gamma;
  for (const auto& q : k) {
    if (q.get_den() != 1 || q < 0)
      throw precondition_error(kModule, "gram_matrix: " + nu.to_string() + " is not above the lowest weight " +
                                            mu.to_string() + " in the root order");
    gamma.push_back(static_cast<int>(q.get_num().get_si()));
  }
  VermaEngine engine(alg, all_positive(rs), mu);
  const auto& s = engine.slice(gamma);
  return VermaSlice{nu, s.monomials, s.gram};
}

std::map<Weight, std::size_t> weight_multiplicities(const GModule& m) {
  std::map<Weight, std::size_t> out;
  for (const auto& w : m.basis_weights()) ++out[w];
  return out;
}

std::map<Weight, std::size_t> levi_character(const ChevalleyAlgebra& alg, const ParabolicSubset& p,
                                             const Weight& lowest, ModuleConfig config) {
  const auto& rs = alg.root_system();
  if (lowest.rank() != static_cast<std::size_t>(rs.rank()))
    throw precondition_error(kModule, "levi_character: weight rank does not match the algebra");
  for (const int i : p.levi_simple_indices) {
    const Rational c = lowest[static_cast<std::size_t>(i)];
    if (c.get_den() != 1 || c > 0)
      throw precondition_error(kModule, "levi_character: " + lowest.to_string() +
                                            " is not a Levi lowest weight (simple index " + std::to_string(i + 1) +
                                            ")");
  }
  VermaEngine engine(alg, p.levi_positive, lowest);
  std::map<Weight, std::size_t> out;
  for (const auto& q : explore(engine, p.levi_simple_indices, config.max_dimension, false))
    out[engine.weight_at(q.gamma)] = q.pivots.size();
  return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, v] : b.column(j))
      for (const auto& [i, u] : a.column(k)) acc[i] += u * v;
    c.set_column(j, {acc.begin(), acc.end()});
  }
  return c;
}

std::vector<std::string> bracket_relation_violations(const GModule& m) {
  const auto& alg = m.algebra();
  const std::size_t dim = m.dimension();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(alg.rank()); ++i) {
    const auto& h = m.action(i);
    for (std::size_t b = 0; b < dim; ++b) {
      const auto& col = h.column(b);
      const Rational expect = m.basis_weights()[b][i];
      const bool ok = expect == 0 ? col.empty() : (col.size() == 1 && col[0].first == b && col[0].second == expect);
      if (!ok) out.push_back(alg.basis_name(i) + " is not diagonal with the basis weights at vector " +
                             std::to_string(b));
    }
  }
  for (std::size_t x = 0; x < alg.dimension(); ++x)
    for (std::size_t y = x + 1; y < alg.dimension(); ++y) {
      const auto xy = multiply(m.action(x), m.action(y));
      const auto yx = multiply(m.action(y), m.action(x));
      SparseMatrix expect(dim, dim);
      for (std::size_t c = 0; c < dim; ++c) {
        std::map<std::size_t, Rational> acc;
        for (const auto& t : alg.bracket_basis(x, y))
          for (const auto& [r, v] : m.action(t.index).column(c)) acc[r] += v * t.coeff;
        expect.set_column(c, {acc.begin(), acc.end()});
      }
      SparseMatrix commutator(dim, dim);
      for (std::size_t c = 0; c < dim; ++c) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [r, v] : xy.column(c)) acc[r] += v;
        for (const auto& [r, v] : yx.column(c)) acc[r] -= v;
        commutator.set_column(c, {acc.begin(), acc.end()});
      }
      if (!(commutator == expect))
        out.push_back("[" + alg.basis_name(x) + "," + alg.basis_name(y) + "] is not represented by the commutator");
    }
  return out;
}

}  // namespace nhlab
