#include "nhlab/selftest.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>

#include "nhlab/chevalley.hpp"
#include "nhlab/complexflag.hpp"
#include "nhlab/errors.hpp"
#include "nhlab/koszul.hpp"
#include "nhlab/kostant.hpp"
#include "nhlab/repbuilder.hpp"
#include "nhlab/rootsys.hpp"

namespace nhlab {

namespace {

class Suite {
 public:
  void check(const std::string& name, bool ok, std::string detail = {}) {
    result_.checks.push_back({name, ok, ok ? std::string{} : std::move(detail)});
  }

  // Runs fn, recording an exception as a failed check.
  template <class Fn>
  void guarded(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  }

  SelfTestResult take() { return std::move(result_); }

 private:
  SelfTestResult result_;
};

void rootsys_checks(Suite& s, const RootSystem& rs, const WeylGroup& group) {
  const auto tag = rs.name() + " rootsys: ";
  s.check(tag + "|W| matches the order formula", group.size() == rs.weyl_order());
  long alternating = 0;
  bool lengths_agree = true;
  bool permutes = true;
  for (const auto& w : group.elements()) {
    alternating += length(rs, w) % 2 == 0 ? 1 : -1;
    lengths_agree = lengths_agree && length(rs, w) == w.length();
    std::set<std::size_t> image;
    for (std::size_t id = 0; id < rs.num_roots(); ++id)
      if (const auto j = rs.root_id_of_weight(act(w, rs.root(id).fw_coords))) image.insert(*j);
    permutes = permutes && image.size() == rs.num_roots();
  }
  s.check(tag + "sum of (-1)^length vanishes", alternating == 0);
  s.check(tag + "word length equals inversion count", lengths_agree);
  s.check(tag + "W permutes the roots", permutes);
  bool involution = true;
  for (const auto& alpha : rs.positive_roots())
    for (std::size_t id = 0; id < rs.num_roots(); ++id)
      involution = involution && reflect(alpha, reflect(alpha, rs.root(id).fw_coords)) == rs.root(id).fw_coords;
  s.check(tag + "reflections are involutions", involution);
  s.check(tag + "longest element has length N", length(rs, group.longest()) == static_cast<int>(rs.num_positive()));

  const Weight lambda = Rational(-2) * rs.rho();
  for (int i = 0; i < rs.rank(); ++i) {
    const std::vector<int> levi{i};
    const auto reps = coset_reps(rs, group, levi, lambda);
    std::set<std::size_t> covered;
    for (const auto& w : reps) {
      covered.insert(group.index_of(w));
      covered.insert(group.index_of(multiply(rs, WeylElement::from_word(rs, levi), w)));
    }
    s.check(tag + "cosets of s" + std::to_string(i + 1) + " partition W",
            reps.size() * 2 == group.size() && covered.size() == group.size());
  }
}

void chevalley_checks(Suite& s, const ChevalleyAlgebra& alg) {
  const auto tag = alg.root_system().name() + " chevalley: ";
  const std::size_t d = alg.dimension();
  bool jacobi = true;
  bool antisymmetric = true;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      LieElement ex{{x, 1}}, ey{{y, 1}};
      auto sum = bracket(alg, ex, ey);
      for (const auto& [k, v] : bracket(alg, ey, ex)) sum[k] += v;
      std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
      antisymmetric = antisymmetric && sum.empty();
      for (std::size_t z = y + 1; z < d && jacobi; ++z) {
        LieElement ez{{z, 1}};
        auto j = bracket(alg, ex, bracket(alg, ey, ez));
        for (const auto& [k, v] : bracket(alg, ey, bracket(alg, ez, ex))) j[k] += v;
        for (const auto& [k, v] : bracket(alg, ez, bracket(alg, ex, ey))) j[k] += v;
        std::erase_if(j, [](const auto& kv) { return kv.second == 0; });
        jacobi = jacobi && j.empty();
      }
    }
  s.check(tag + "bracket is antisymmetric", antisymmetric);
  s.check(tag + "Jacobi identity", jacobi);
}

void module_checks(Suite& s, const GModule& m, const Weight& lambda, const WeylGroup& group) {
  const auto& rs = m.algebra().root_system();
  const auto tag = rs.name() + " lambda=" + lambda.to_string() + " repbuilder: ";
  const auto violations = bracket_relation_violations(m);
  s.check(tag + "bracket relations", violations.empty(), violations.empty() ? "" : violations.front());
  s.check(tag + "Weyl dimension formula", Integer(static_cast<unsigned long>(m.dimension())) == weyl_dimension(rs, lambda));
  const auto mult = weight_multiplicities(m);
  bool invariant = true;
  for (const auto& w : group.elements())
    for (const auto& [nu, k] : mult) {
      const auto it = mult.find(act(w, nu));
      invariant = invariant && it != mult.end() && it->second == k;
    }
  s.check(tag + "multiplicities are Weyl invariant", invariant);
  const auto lowest = mult.find(m.lowest_weight());
  bool killed = lowest != mult.end() && lowest->second == 1;
  for (std::size_t b = 0; b < m.dimension() && killed; ++b) {
    if (m.basis_weights()[b] != m.lowest_weight()) continue;
    for (std::size_t id = rs.num_positive(); id < rs.num_roots(); ++id)
      killed = killed && m.action(m.algebra().root_index(id)).column(b).empty();
  }
  s.check(tag + "lowest weight space is a line killed by lowering", killed);
}

void homology_checks(Suite& s, const GModule& m, const Weight& lambda, unsigned threads) {
  const auto& rs = m.algebra().root_system();
  const KoszulConfig kc{threads};
  std::vector<std::vector<int>> levis{{}};
  for (int i = 0; i < rs.rank(); ++i) levis.push_back({i});
  for (const auto& levi : levis) {
    std::string name = rs.name() + " lambda=" + lambda.to_string() + " S={";
    for (const int i : levi) name += std::to_string(i + 1);
    name += "} ";
    const auto p = parabolic(rs, levi);
    const auto hc = build_complex(m, p, Variant::Homology, kc);
    const auto cc = build_complex(m, p, Variant::Cohomology, kc);
    const auto h = homology(hc, kc);
    const auto c = homology(cc, kc);
    s.check(name + "koszul: boundary squares to zero", exactness_violations(hc).empty());
    s.check(name + "koszul: coboundary squares to zero", exactness_violations(cc).empty());
    s.check(name + "koszul: Euler characteristic", euler_characteristic(h, hc).holds());
    s.check(name + "koszul: duality", check_duality(h, c, p).empty());
    std::vector<std::size_t> order(m.dimension());
    std::iota(order.rbegin(), order.rend(), std::size_t{0});
    const auto reversed = m.permuted(order);
    s.check(name + "koszul: independent of basis order", homology(build_complex(reversed, p, Variant::Homology, kc), kc) == h);
    const auto pred = levi.empty() ? predict_borel(rs, lambda) : predict_parabolic(m.algebra(), lambda, levi);
    s.check(name + "kostant: prediction matches homology", compare(pred, h).empty());
    if (levi.empty()) s.check(name + "koszul: weight support", weight_support_violations(rs, h, lambda).empty());
  }
}

void chain_checks(Suite& s, const RootSystem& rs, const WeylGroup& group) {
  const auto tag = rs.name() + " complexflag: ";
  const auto chains = enumerate_chains(rs, rs.num_positive());
  const auto chi = CharacterParam::from_lambda(rs, Rational(-2) * rs.rho());
  const int n = static_cast<int>(rs.num_positive());
  std::map<std::size_t, std::set<int>> degrees_by_w;
  std::map<std::size_t, std::set<Weight>> weights_by_w;
  bool lengths = true;
  bool maximal = true;
  for (const auto& c : chains) {
    const auto p = predict_standard(rs, chi, c);
    lengths = lengths && length(rs, c.weyl_element) == static_cast<int>(c.size());
    if (static_cast<int>(c.size()) == n) maximal = maximal && p.degree == 0;
    degrees_by_w[group.index_of(c.weyl_element)].insert(p.degree);
    weights_by_w[group.index_of(c.weyl_element)].insert(p.character_differential);
  }
  s.check(tag + "chain length equals length of w", lengths);
  s.check(tag + "maximal chains predict degree 0", maximal);
  s.check(tag + "every w is reached by a chain", degrees_by_w.size() == group.size());
  bool by_w = true;
  std::set<std::pair<int, Weight>> targets;
  for (const auto& [w, degs] : degrees_by_w) {
    by_w = by_w && degs.size() == 1 && weights_by_w[w].size() == 1 &&
           *degs.begin() == n - length(rs, group.elements()[w]);
    targets.insert({*degs.begin(), *weights_by_w[w].begin()});
  }
  s.check(tag + "degree and weight depend only on w", by_w);
  s.check(tag + "distinct w give distinct predictions", targets.size() == degrees_by_w.size());
  const auto empty = predict_standard(rs, chi, validate_chain(rs, {}));
  s.check(tag + "empty chain: degree N at lambda + rho", empty.degree == n && empty.character_differential == chi.base_differential);
}

}  // namespace

std::size_t SelfTestResult::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const SelfTestCheck& c) { return c.passed; }));
}

SelfTestResult run_selftest(unsigned threads) {
  Suite s;
  for (const auto& [type, rank] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    s.guarded(std::string(1, type) + std::to_string(rank) + " suite", [&, type = type, rank = rank] {
      const auto rs = build_root_system(type, rank);
      const WeylGroup group(rs);
      rootsys_checks(s, rs, group);
      const auto alg = std::make_shared<const ChevalleyAlgebra>(build_chevalley(rs));
      chevalley_checks(s, *alg);
      for (const long k : {1L, 2L}) {
        const Weight lambda = Rational(-k) * rs.rho();
        const auto m = build_irrep(alg, lambda);
        module_checks(s, m, lambda, group);
        homology_checks(s, m, lambda, threads);
      }
      chain_checks(s, rs, group);
    });
  }
  return s.take();
}

}  // namespace nhlab
