#include "nhlab/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nhlab/errors.hpp"

namespace nhlab {

namespace {

constexpr const char* kModule = "rootsys";

// Edges (i, j, a_ij, a_ji) of the Dynkin diagram, 0-based, Bourbaki numbering.
struct Edge {
  int i, j, aij, aji;
};

std::vector<Edge> dynkin_edges(char type, int n) {
  std::vector<Edge> e;
  auto chain = [&](int last) {
    for (int i = 0; i + 1 <= last; ++i) e.push_back({i, i + 1, -1, -1});
  };
  switch (type) {
    case 'A':
      chain(n - 1);
      break;
    case 'B':  // alpha_n short
      chain(n - 2);
      e.push_back({n - 2, n - 1, -1, -2});
      break;
    case 'C':  // alpha_n long
      chain(n - 2);
      e.push_back({n - 2, n - 1, -2, -1});
      break;
    case 'D':
      chain(n - 2);
      e.push_back({n - 3, n - 1, -1, -1});
      break;
    case 'E':
      e.push_back({0, 2, -1, -1});
      e.push_back({1, 3, -1, -1});
      for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1, -1, -1});
      break;
    case 'F':  // alpha_1, alpha_2 long
      e.push_back({0, 1, -1, -1});
      e.push_back({1, 2, -1, -2});
      e.push_back({2, 3, -1, -1});
      break;
    case 'G':  // alpha_1 short
      e.push_back({0, 1, -3, -1});
      break;
    default:
      break;
  }
  return e;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t weyl_order_of(char type, int n) {
  switch (type) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

// Greedy left-descent reduction of a regular dominant orbit point: while some
// coordinate of w(rho) is negative, peel off the smallest such s_i. The
// resulting word is the lexicographically least reduced word of w.
std::vector<int> canonical_word(const RootSystem& rs, std::vector<long> w_rho) {
  const auto& a = rs.cartan_matrix();
  const int n = rs.rank();
  std::vector<int> word;
  for (;;) {
    int i = 0;
    while (i < n && w_rho[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == n) break;
    word.push_back(i);
    const long c = w_rho[static_cast<std::size_t>(i)];
    for (int r = 0; r < n; ++r) w_rho[static_cast<std::size_t>(r)] -= c * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
  }
  return word;
}

WeylMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  WeylMatrix m{n, std::vector<long>(static_cast<std::size_t>(n * n), 0)};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      long v = r == c ? 1 : 0;
      if (c == i) v -= rs.cartan_matrix()[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
      m.entries[static_cast<std::size_t>(r * n + c)] = v;
    }
  return m;
}

std::vector<long> apply_matrix(const WeylMatrix& m, const std::vector<long>& v) {
  std::vector<long> out(static_cast<std::size_t>(m.rank), 0);
  for (int r = 0; r < m.rank; ++r)
    for (int c = 0; c < m.rank; ++c) out[static_cast<std::size_t>(r)] += m(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

std::vector<long> rho_image(const WeylMatrix& m) { return apply_matrix(m, std::vector<long>(static_cast<std::size_t>(m.rank), 1)); }

void check_rank(const RootSystem& rs, const Weight& w) {
  if (w.rank() != static_cast<std::size_t>(rs.rank()))
    throw precondition_error(kModule, "weight " + w.to_string() + " has rank " + std::to_string(w.rank()) +
                                          ", root system " + rs.name() + " has rank " + std::to_string(rs.rank()));
}

}  // namespace

int Root::height() const { return std::accumulate(simple_coords.begin(), simple_coords.end(), 0); }

bool Root::is_positive() const {
  return std::all_of(simple_coords.begin(), simple_coords.end(), [](int k) { return k >= 0; });
}

Root Root::operator-() const {
  Root r;
  r.simple_coords = simple_coords;
  for (auto& k : r.simple_coords) k = -k;
  r.fw_coords = -fw_coords;
  r.coroot_coords = coroot_coords;
  for (auto& k : r.coroot_coords) k = -k;
  return r;
}

bool is_valid_type(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

RootSystem build_root_system(char type, int rank, RootSystemConfig config) {
  if (!is_valid_type(type, rank))
    throw precondition_error(kModule, std::string("invalid root system type/rank pair (") + type + ", " +
                                          std::to_string(rank) + ")");
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.config_ = config;
  const auto n = static_cast<std::size_t>(rank);

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rs.cartan_[i][i] = 2;
  const auto edges = dynkin_edges(type, rank);
  for (const auto& e : edges) {
    rs.cartan_[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)] = e.aij;
    rs.cartan_[static_cast<std::size_t>(e.j)][static_cast<std::size_t>(e.i)] = e.aji;
  }

  // Symmetrizer: d_i a_ij = d_j a_ji, propagated along the (connected) diagram.
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : edges) {
      auto& di = d[static_cast<std::size_t>(e.i)];
      auto& dj = d[static_cast<std::size_t>(e.j)];
      if (di != 0 && dj == 0) { dj = di * e.aij / e.aji; changed = true; }
      if (dj != 0 && di == 0) { di = dj * e.aji / e.aij; changed = true; }
    }
  }
  const Rational dmin = *std::min_element(d.begin(), d.end());
  rs.symmetrizer_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational v = d[i] / dmin;
    rs.symmetrizer_[i] = static_cast<int>(v.get_num().get_si());
  }

  // Positive roots by root strings: beta + alpha_i is a root iff q > 0 where
  // q = p - <beta, alpha_i^vee> and p is the length of the string below beta.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> roots;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.push_back(e);
    known.insert(e);
  }
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const auto beta = roots[idx];
    for (std::size_t i = 0; i < n; ++i) {
      int p = 0;
      for (;;) {
        auto down = beta;
        down[i] -= p + 1;
        if (!known.count(down)) break;
        ++p;
      }
      int pair = 0;
      for (std::size_t j = 0; j < n; ++j) pair += rs.cartan_[i][j] * beta[j];
      if (p - pair > 0) {
        auto up = beta;
        ++up[i];
        if (known.insert(up).second) roots.push_back(up);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  auto make_root = [&](const std::vector<int>& k) {
    Root r;
    r.simple_coords = k;
    r.fw_coords = rs.weight_of(k);
    const long len = rs.inner(k, k) / 2;  // d_alpha
    r.coroot_coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.coroot_coords[i] = static_cast<int>(k[i] * rs.symmetrizer_[i] / len);
    return r;
  };
  for (const auto& k : roots) rs.positive_.push_back(make_root(k));
  for (std::size_t i = 0; i < n; ++i) rs.simple_.push_back(rs.positive_[i]);
  rs.all_ = rs.positive_;
  for (const auto& r : rs.positive_) rs.all_.push_back(-r);
  for (std::size_t id = 0; id < rs.all_.size(); ++id) rs.id_by_simple_[rs.all_[id].simple_coords] = id;

  rs.rho_ = Weight(n);
  for (std::size_t i = 0; i < n; ++i) rs.rho_[i] = 1;
  rs.weyl_order_ = weyl_order_of(type, rank);

  RatMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = rs.cartan_[i][j];
  const RatMatrix ci = inverse(c);
  rs.inverse_cartan_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.inverse_cartan_[i][j] = ci(i, j);
  return rs;
}

long RootSystem::inner(std::span<const int> a, std::span<const int> b) const {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += long{a[i]} * b[j] * symmetrizer_[i] * cartan_[i][j];
  return s;
}

std::optional<std::size_t> RootSystem::root_id(std::span<const int> simple_coords) const {
  const auto it = id_by_simple_.find(std::vector<int>(simple_coords.begin(), simple_coords.end()));
  if (it == id_by_simple_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootSystem::root_id_of_weight(const Weight& fw) const {
  if (fw.rank() != static_cast<std::size_t>(rank_)) return std::nullopt;
  const auto k = simple_coordinates(fw);
  std::vector<int> ints(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i].get_den() != 1 || !k[i].get_num().fits_sint_p()) return std::nullopt;
    ints[i] = static_cast<int>(k[i].get_num().get_si());
  }
  return root_id(ints);
}

std::vector<Rational> RootSystem::simple_coordinates(const Weight& w) const {
  const auto n = static_cast<std::size_t>(rank_);
  std::vector<Rational> k(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i] += inverse_cartan_[i][j] * w[j];
  return k;
}

Weight RootSystem::weight_of(std::span<const int> simple_coords) const {
  const auto n = static_cast<std::size_t>(rank_);
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) {
    long v = 0;
    for (std::size_t j = 0; j < n; ++j) v += long{cartan_[i][j]} * simple_coords[j];
    w[i] = v;
  }
  return w;
}

Rational pairing(const Weight& mu, const Root& alpha) {
  if (mu.rank() != alpha.coroot_coords.size())
    throw precondition_error(kModule, "pairing: weight rank " + std::to_string(mu.rank()) + " vs root rank " +
                                          std::to_string(alpha.coroot_coords.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < mu.rank(); ++i)
    if (alpha.coroot_coords[i] != 0) s += alpha.coroot_coords[i] * mu[i];
  return s;
}

Weight reflect(const Root& alpha, const Weight& mu) { return mu - pairing(mu, alpha) * alpha.fw_coords; }

WeylMatrix operator*(const WeylMatrix& a, const WeylMatrix& b) {
  const int n = a.rank;
  WeylMatrix c{n, std::vector<long>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const long aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c.entries[static_cast<std::size_t>(i * n + j)] += aik * b(k, j);
    }
  return c;
}

WeylElement WeylElement::from_matrix(const RootSystem& rs, WeylMatrix matrix) {
  WeylElement w;
  w.word_ = canonical_word(rs, rho_image(matrix));
  w.matrix_ = std::move(matrix);
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  WeylMatrix m = identity(rs).matrix_;
  for (int i : word) {
    if (i < 0 || i >= rs.rank()) throw precondition_error(kModule, "simple reflection index out of range");
    m = m * simple_reflection_matrix(rs, i);
  }
  return from_matrix(rs, std::move(m));
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  const int n = rs.rank();
  WeylElement w;
  w.matrix_ = WeylMatrix{n, std::vector<long>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i) w.matrix_.entries[static_cast<std::size_t>(i * n + i)] = 1;
  return w;
}

WeylElement WeylElement::reflection(const RootSystem& rs, const Root& alpha) {
  // s_alpha(omega_c) = omega_c - (coroot_coords[c]) alpha.
  const int n = rs.rank();
  WeylMatrix m{n, std::vector<long>(static_cast<std::size_t>(n * n), 0)};
  const Weight a = rs.weight_of(alpha.simple_coords);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      long v = r == c ? 1 : 0;
      v -= alpha.coroot_coords[static_cast<std::size_t>(c)] * a[static_cast<std::size_t>(r)].get_num().get_si();
      m.entries[static_cast<std::size_t>(r * n + c)] = v;
    }
  return from_matrix(rs, std::move(m));
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return WeylElement::from_matrix(rs, a.matrix() * b.matrix());
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> rev(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(rs, rev);
}

Weight act(const WeylElement& w, const Weight& mu) {
  const auto& m = w.matrix();
  if (mu.rank() != static_cast<std::size_t>(m.rank))
    throw precondition_error(kModule, "act: weight rank " + std::to_string(mu.rank()) + " vs Weyl element rank " +
                                          std::to_string(m.rank));
  Weight out(mu.rank());
  for (int r = 0; r < m.rank; ++r)
    for (int c = 0; c < m.rank; ++c)
      if (m(r, c) != 0) out[static_cast<std::size_t>(r)] += m(r, c) * mu[static_cast<std::size_t>(c)];
  return out;
}

Root act(const RootSystem& rs, const WeylElement& w, const Root& alpha) {
  const auto id = rs.root_id_of_weight(act(w, alpha.fw_coords));
  if (!id) throw std::logic_error("Weyl group failed to permute the roots");
  return rs.root(*id);
}

int length(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& alpha : rs.positive_roots())
    if (!act(rs, w, alpha).is_positive()) ++count;
  return count;
}

WeylGroup::WeylGroup(const RootSystem& rs) {
  if (rs.weyl_order() > rs.enumeration_bound())
    throw resource_error(kModule, "Weyl group of " + rs.name() + " has order " + std::to_string(rs.weyl_order()) +
                                      ", above the enumeration bound " + std::to_string(rs.enumeration_bound()));
  std::vector<WeylMatrix> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection_matrix(rs, i));

  auto e = WeylElement::identity(rs);
  index_[rho_image(e.matrix())] = 0;
  elements_.push_back(std::move(e));
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& g : gens) {
      WeylMatrix m = elements_[head].matrix() * g;
      auto key = rho_image(m);
      if (index_.count(key)) continue;
      index_.emplace(std::move(key), elements_.size());
      elements_.push_back(WeylElement::from_matrix(rs, std::move(m)));
    }
  }
  if (elements_.size() != rs.weyl_order()) throw std::logic_error("Weyl group enumeration size mismatch");
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  const auto it = index_.find(rho_image(w.matrix()));
  if (it == index_.end()) throw std::out_of_range("element not in Weyl group");
  return it->second;
}

std::vector<WeylElement> weyl_elements(const RootSystem& rs) { return WeylGroup(rs).elements(); }

bool is_antidominant_regular_integral(const RootSystem& rs, const Weight& lambda) {
  check_rank(rs, lambda);
  for (const auto& alpha : rs.positive_roots()) {
    const Rational p = pairing(lambda, alpha);
    if (p.get_den() != 1 || p >= 0) return false;
  }
  return true;
}

bool is_regular(const RootSystem& rs, const Weight& lambda) {
  check_rank(rs, lambda);
  return std::none_of(rs.positive_roots().begin(), rs.positive_roots().end(),
                      [&](const Root& alpha) { return pairing(lambda, alpha) == 0; });
}

InfinitesimalCharacter::InfinitesimalCharacter(const RootSystem& rs, const Weight& lambda) : representative_(lambda) {
  check_rank(rs, lambda);
  for (;;) {
    std::size_t i = 0;
    while (i < representative_.rank() && representative_[i] >= 0) ++i;
    if (i == representative_.rank()) break;
    representative_ = reflect(rs.simple_roots()[i], representative_);
  }
}

bool infinitesimal_character_equal(const RootSystem& rs, const Weight& lambda1, const Weight& lambda2) {
  check_rank(rs, lambda1);
  check_rank(rs, lambda2);
  const WeylGroup group(rs);
  return std::any_of(group.elements().begin(), group.elements().end(),
                     [&](const WeylElement& w) { return act(w, lambda1) == lambda2; });
}

ParabolicSubset parabolic(const RootSystem& rs, std::span<const int> levi_simple_indices) {
  std::vector<int> s(levi_simple_indices.begin(), levi_simple_indices.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int i : s)
    if (i < 0 || i >= rs.rank())
      throw precondition_error(kModule, "parabolic index " + std::to_string(i + 1) + " out of range 1.." +
                                            std::to_string(rs.rank()));
  ParabolicSubset p;
  p.levi_simple_indices = s;
  p.sigma = Weight(static_cast<std::size_t>(rs.rank()));
  for (std::size_t id = 0; id < rs.num_positive(); ++id) {
    const auto& alpha = rs.positive_roots()[id];
    bool in_levi = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (alpha.simple_coords[static_cast<std::size_t>(i)] != 0 && !std::binary_search(s.begin(), s.end(), i))
        in_levi = false;
    if (in_levi) {
      p.levi_positive.push_back(id);
      p.levi_positive_roots.push_back(alpha);
    } else {
      p.nilradical.push_back(id);
      p.nilradical_roots.push_back(alpha);
      p.sigma += alpha.fw_coords;
    }
  }
  return p;
}

std::vector<WeylElement> coset_reps(const RootSystem& rs, const WeylGroup& group,
                                    std::span<const int> levi_simple_indices, const Weight& lambda) {
  if (!is_antidominant_regular_integral(rs, lambda))
    throw precondition_error(kModule, "coset_reps: lambda " + lambda.to_string() +
                                          " is not antidominant regular integral");
  const auto p = parabolic(rs, levi_simple_indices);
  std::vector<WeylElement> out;
  for (const auto& w : group.elements()) {
    const Weight wl = act(w, lambda);
    if (std::all_of(p.levi_positive_roots.begin(), p.levi_positive_roots.end(),
                    [&](const Root& alpha) { return pairing(wl, alpha) < 0; }))
      out.push_back(w);
  }
  return out;
}

}  // namespace nhlab
