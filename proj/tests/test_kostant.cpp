#include "doctest.h"

#include <set>

#include "nhlab/errors.hpp"
#include "nhlab/koszul.hpp"
#include "nhlab/kostant.hpp"
#include "support.hpp"

using namespace nhlab;
using testing::w;

namespace {

std::vector<long> multiply_poly(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<long> poincare(const std::vector<int>& degrees) {
  std::vector<long> p{1};
  for (const int d : degrees) p = multiply_poly(p, std::vector<long>(static_cast<std::size_t>(d), 1));
  return p;
}

// Dimension of the Levi module with lowest weight mu, via its dual's highest
// weight -mu and the product formula over the Levi positive roots.
Integer levi_dimension(const ParabolicSubset& p, const Weight& mu) {
  Weight rho_l(mu.rank());
  for (const auto& a : p.levi_positive_roots) rho_l += Rational(1, 2) * a.fw_coords;
  Rational d(1);
  for (const auto& a : p.levi_positive_roots) d *= pairing(rho_l - mu, a) / pairing(rho_l, a);
  REQUIRE(d.get_den() == 1);
  return d.get_num();
}

std::vector<std::vector<int>> levis(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("predict_borel examples") {
  const auto a1 = build_root_system('A', 1);
  const auto p1 = predict_borel(a1, w({-2}));
  REQUIRE(p1.entries.size() == 2);
  CHECK(p1.entries[0].degree == 0);
  CHECK(p1.entries[0].weight == w({-1}));
  CHECK(p1.entries[1].degree == 1);
  CHECK(p1.entries[1].weight == w({3}));

  const auto a2 = build_root_system('A', 2);
  const auto p2 = predict_borel(a2, w({-2, -2}));
  std::multiset<int> degrees;
  for (const auto& e : p2.entries) {
    degrees.insert(e.degree);
    CHECK(e.multiplicity == 1);
    CHECK(e.degree == length(a2, e.w));
    CHECK(e.weight == act(e.w, w({-2, -2})) + a2.rho());
  }
  CHECK(degrees == std::multiset<int>{0, 1, 1, 2, 2, 3});
  CHECK(p2.entries[0].weight == -a2.rho());
  CHECK_THROWS_AS(predict_borel(a2, w({0, -1})), Error);
  CHECK_THROWS_AS(predict_borel(a2, w({-1})), Error);
}

TEST_CASE("Borel predictions follow the Poincare polynomial") {
  const std::vector<std::tuple<const char*, std::vector<int>>> groups = {
      {"A1", {2}}, {"A2", {2, 3}}, {"A3", {2, 3, 4}}, {"B2", {2, 4}}, {"B3", {2, 4, 6}}, {"G2", {2, 6}}, {"D4", {2, 4, 4, 6}},
  };
  for (const auto& [name, degrees] : groups) {
    const auto rs = build_root_system(name[0], name[1] - '0');
    const Weight lambda = testing::random_antidominant(static_cast<std::size_t>(rs.rank()), 4);
    const auto pred = predict_borel(rs, lambda);
    std::vector<long> counts(rs.num_positive() + 1, 0);
    long alternating = 0;
    for (const auto& e : pred.entries) {
      ++counts[static_cast<std::size_t>(e.degree)];
      alternating += e.degree % 2 ? -1 : 1;
      // the expanded table is the entry list itself
      CHECK(pred.expanded.multiplicity(e.degree, e.weight) == 1);
    }
    CHECK(pred.expanded.entries.size() == pred.entries.size());
    CHECK(counts == poincare(degrees));
    CHECK(alternating == 0);
    CHECK(pred.entries[0].degree == 0);
    CHECK(pred.entries[0].weight == lambda + rs.rho());
  }
}

TEST_CASE("parabolic predictions") {
  const auto alg = testing::algebra('A', 2);
  const auto& rs = alg->root_system();
  const Weight lambda = w({-2, -2});
  const auto pred = predict_parabolic(*alg, lambda, std::vector<int>{0});
  REQUIRE(pred.entries.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(pred.entries[static_cast<std::size_t>(i)].degree == i);
  CHECK(pred.expanded.total_dims == std::vector<std::size_t>{2, 4, 2});

  const auto empty = predict_parabolic(*alg, lambda, std::vector<int>{});
  const auto borel = predict_borel(rs, lambda);
  CHECK(empty.expanded == borel.expanded);
  REQUIRE(empty.entries.size() == borel.entries.size());
  for (std::size_t i = 0; i < borel.entries.size(); ++i) {
    CHECK(empty.entries[i].degree == borel.entries[i].degree);
    CHECK(empty.entries[i].weight == borel.entries[i].weight);
  }
  CHECK(predict_parabolic(rs, lambda, std::vector<int>{}).expanded == borel.expanded);

  const auto full = predict_parabolic(*alg, lambda, std::vector<int>{0, 1});
  REQUIRE(full.entries.size() == 1);
  CHECK(full.entries[0].degree == 0);
  CHECK(full.entries[0].weight == lambda + rs.rho());
  const auto m = build_irrep(testing::algebra('A', 2), lambda);
  std::map<std::pair<int, Weight>, std::size_t> character;
  for (const auto& [nu, k] : weight_multiplicities(m)) character[{0, nu}] = k;
  CHECK(full.expanded.entries == character);

  CHECK_THROWS_AS(predict_parabolic(*alg, w({1, -1}), std::vector<int>{0}), Error);
  CHECK_THROWS_AS(predict_parabolic(*alg, lambda, std::vector<int>{2}), Error);
}

TEST_CASE("parabolic lengths factor the Poincare polynomial") {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    const auto alg = testing::algebra(name[0], name[1] - '0');
    const auto& rs = alg->root_system();
    const WeylGroup g(rs);
    const Weight lambda = testing::random_antidominant(static_cast<std::size_t>(rs.rank()), 2);
    std::vector<long> whole(rs.num_positive() + 1, 0);
    for (const auto& el : g.elements()) ++whole[static_cast<std::size_t>(el.length())];
    for (const auto& s : levis(rs.rank())) {
      std::vector<long> sub(rs.num_positive() + 1, 0);
      for (const auto& el : g.elements())
        if (std::all_of(el.word().begin(), el.word().end(),
                        [&](int i) { return std::find(s.begin(), s.end(), i) != s.end(); }))
          ++sub[static_cast<std::size_t>(el.length())];
      const auto pred = predict_parabolic(*alg, lambda, s);
      std::vector<long> reps(rs.num_positive() + 1, 0);
      for (const auto& e : pred.entries) {
        ++reps[static_cast<std::size_t>(e.degree)];
        CHECK(e.multiplicity == 1);
      }
      while (sub.size() > 1 && sub.back() == 0) sub.pop_back();
      while (reps.size() > 1 && reps.back() == 0) reps.pop_back();
      CHECK(multiply_poly(sub, reps) == whole);
      // expanded degree totals from Levi dimensions
      std::vector<std::size_t> totals(pred.parabolic.dimension() + 1, 0);
      for (const auto& e : pred.entries)
        totals[static_cast<std::size_t>(e.degree)] += levi_dimension(pred.parabolic, e.weight).get_ui();
      CHECK(pred.expanded.total_dims == totals);
      // Euler characteristic, weighted by the Levi dimensions
      long euler = 0;
      for (std::size_t q = 0; q < totals.size(); ++q) euler += (q % 2 ? -1L : 1L) * static_cast<long>(totals[q]);
      if (pred.parabolic.dimension() > 0) CHECK(euler == 0);
      // degree 0 is the Levi module at lambda + rho
      std::map<Weight, std::size_t> h0;
      for (const auto& [key, k] : pred.expanded.entries)
        if (key.first == 0) h0[key.second] = k;
      CHECK(h0 == levi_character(*alg, pred.parabolic, lambda + rs.rho()));
    }
  }
}

TEST_CASE("predictions match the computed homology") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    const auto alg = testing::algebra(name[0], name[1] - '0');
    const auto& rs = alg->root_system();
    for (int t = 0; t < 2; ++t) {
      const Weight lambda = testing::random_antidominant(static_cast<std::size_t>(rs.rank()), rs.rank() == 1 ? 5 : 2);
      CAPTURE(name);
      CAPTURE(lambda.to_string());
      const auto m = build_irrep(alg, lambda);
      for (const auto& s : levis(rs.rank())) {
        const auto p = parabolic(rs, s);
        const auto h = homology(build_complex(m, p));
        CHECK(compare(predict_parabolic(*alg, lambda, s), h).empty());
      }
    }
  }
}

TEST_CASE("compare reports discrepancies") {
  const auto alg = testing::algebra('A', 1);
  const auto m = build_irrep(alg, w({-2}));
  const auto p = parabolic(alg->root_system(), std::vector<int>{});
  const auto pred = predict_borel(alg->root_system(), w({-2}));
  auto h = homology(build_complex(m, p));
  CHECK(compare(pred, h).empty());

  const auto a2 = testing::algebra('A', 2);
  const auto adj = build_irrep(a2, w({-2, -2}));
  const auto pa = parabolic(a2->root_system(), std::vector<int>{});
  auto ha = homology(build_complex(adj, pa));
  const auto preda = predict_borel(a2->root_system(), w({-2, -2}));
  CHECK(compare(preda, ha).empty());

  auto bumped = ha;
  bumped.entries.begin()->second += 1;
  const auto one = compare(preda, bumped);
  REQUIRE(one.size() == 1);
  CHECK(one[0].degree == ha.entries.begin()->first.first);
  CHECK(one[0].weight == ha.entries.begin()->first.second);
  CHECK(one[0].predicted == 1);
  CHECK(one[0].computed == 2);

  auto extra = ha;
  extra.entries[{1, w({7, 7})}] = 1;
  const auto two = compare(preda, extra);
  REQUIRE(two.size() == 1);
  CHECK(two[0].predicted == 0);

  auto removed = ha;
  removed.entries.erase(removed.entries.begin());
  CHECK(compare(preda, removed).size() == 1);

  CHECK_THROWS_AS(compare(preda, cohomology(adj, pa)), Error);
  CHECK_THROWS_AS(compare(pred, ha), Error);
}
