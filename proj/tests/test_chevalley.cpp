#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "nhlab/chevalley.hpp"
#include "nhlab/errors.hpp"
#include "support.hpp"

using namespace nhlab;

namespace {

LieElement basis(std::size_t i) { return LieElement{{i, Rational(1)}}; }

LieElement add(LieElement a, const LieElement& b) {
  for (const auto& [k, v] : b) a[k] += v;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

bool jacobi(const ChevalleyAlgebra& alg, std::size_t x, std::size_t y, std::size_t z) {
  const auto ex = basis(x), ey = basis(y), ez = basis(z);
  auto j = add(bracket(alg, ex, bracket(alg, ey, ez)), bracket(alg, ey, bracket(alg, ez, ex)));
  j = add(j, bracket(alg, ez, bracket(alg, ex, ey)));
  return j.empty();
}

// Largest p with beta - p alpha a root, by walking the string.
long string_below(const RootSystem& rs, const Root& alpha, const Root& beta) {
  long p = 0;
  Weight v = beta.fw_coords;
  while (true) {
    v = v - alpha.fw_coords;
    if (!rs.root_id_of_weight(v)) return p;
    ++p;
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("nhlab_test_" + std::to_string(testing::uniform(0, 1L << 40)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("sl2 relations") {
  const auto alg = testing::algebra('A', 1);
  REQUIRE(alg->dimension() == 3);
  const std::size_t h = 0, e = alg->root_index(0), f = alg->root_index(1);
  CHECK(bracket(*alg, basis(e), basis(f)) == basis(h));
  CHECK(bracket(*alg, basis(h), basis(e)) == LieElement{{e, Rational(2)}});
  CHECK(bracket(*alg, basis(h), basis(f)) == LieElement{{f, Rational(-2)}});
}

TEST_CASE("A2 and G2 structure constants") {
  const auto a2 = testing::algebra('A', 2);
  CHECK(std::abs(a2->structure_constant(0, 1)) == 1);
  const auto& rs = a2->root_system();
  const std::size_t neg_sum = RootSystem::negate_id(2, rs.num_positive());
  const auto r = bracket(*a2, basis(a2->root_index(0)), basis(a2->root_index(neg_sum)));
  REQUIRE(r.size() == 1);
  CHECK(r.begin()->first == a2->root_index(RootSystem::negate_id(1, rs.num_positive())));
  CHECK(abs(r.begin()->second) == 1);

  const auto g2 = testing::algebra('G', 2);
  std::set<long> magnitudes;
  const auto& g = g2->root_system();
  for (std::size_t a = 0; a < g.num_roots(); ++a)
    for (std::size_t b = 0; b < g.num_roots(); ++b) magnitudes.insert(std::abs(g2->structure_constant(a, b)));
  CHECK(magnitudes == std::set<long>{0, 1, 2, 3});
}

TEST_CASE("bracket basics") {
  const auto alg = testing::algebra('B', 2);
  for (std::size_t x = 0; x < alg->dimension(); ++x) CHECK(bracket(*alg, basis(x), basis(x)).empty());
  const auto& rs = alg->root_system();
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) {
      const auto ej = alg->root_index(static_cast<std::size_t>(j));
      const long a = rs.cartan_matrix()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      CHECK(bracket(*alg, basis(alg->cartan_index(i)), basis(ej)) == LieElement{{ej, Rational(a)}});
    }
  CHECK_THROWS_AS(bracket(*alg, basis(alg->dimension()), basis(0)), Error);
  // bilinearity on a random pair
  for (int t = 0; t < 30; ++t) {
    LieElement x, y, z;
    for (int k = 0; k < 3; ++k) {
      x[static_cast<std::size_t>(testing::uniform(0, 9))] += testing::random_rational();
      y[static_cast<std::size_t>(testing::uniform(0, 9))] += testing::random_rational();
      z[static_cast<std::size_t>(testing::uniform(0, 9))] += testing::random_rational();
    }
    std::erase_if(x, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(y, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(z, [](const auto& kv) { return kv.second == 0; });
    CHECK(bracket(*alg, x, add(y, z)) == add(bracket(*alg, x, y), bracket(*alg, x, z)));
    LieElement neg;
    for (const auto& [k, v] : bracket(*alg, y, x)) neg[k] = -v;
    CHECK(bracket(*alg, x, y) == neg);
  }
}

TEST_CASE("structure constants are p+1 up to sign") {
  for (const char* name : {"A3", "B3", "C3", "G2", "D4", "F4"}) {
    const auto alg = testing::algebra(name[0], name[1] - '0');
    const auto& rs = alg->root_system();
    CAPTURE(name);
    for (std::size_t a = 0; a < rs.num_roots(); ++a)
      for (std::size_t b = 0; b < rs.num_roots(); ++b) {
        if (b == RootSystem::negate_id(a, rs.num_positive()) || a == b) continue;
        const bool is_root = rs.root_id_of_weight(rs.root(a).fw_coords + rs.root(b).fw_coords).has_value();
        const long n = alg->structure_constant(a, b);
        if (is_root)
          CHECK(std::abs(n) == string_below(rs, rs.root(a), rs.root(b)) + 1);
        else
          CHECK(n == 0);
      }
  }
}

TEST_CASE("grading and Cartan diagonality") {
  for (const char* name : {"A3", "B3", "G2"}) {
    const auto alg = testing::algebra(name[0], name[1] - '0');
    const auto& rs = alg->root_system();
    for (std::size_t x = 0; x < alg->dimension(); ++x)
      for (std::size_t y = 0; y < alg->dimension(); ++y)
        for (const auto& t : alg->bracket_basis(x, y))
          CHECK(alg->basis_weight(t.index) == alg->basis_weight(x) + alg->basis_weight(y));
    for (int i = 0; i < rs.rank(); ++i)
      for (std::size_t x = 0; x < alg->dimension(); ++x) {
        const auto r = bracket(*alg, basis(alg->cartan_index(i)), basis(x));
        const Rational ev = alg->basis_weight(x)[static_cast<std::size_t>(i)];
        CHECK(r == (ev == 0 ? LieElement{} : LieElement{{x, ev}}));
      }
  }
}

TEST_CASE("Jacobi identity, exhaustive through rank 3") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    const auto alg = testing::algebra(name[0], name[1] - '0');
    const std::size_t d = alg->dimension();
    std::size_t failures = 0;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = x + 1; y < d; ++y)
        for (std::size_t z = y + 1; z < d; ++z) failures += !jacobi(*alg, x, y, z);
    CAPTURE(name);
    CHECK(failures == 0);
  }
}

TEST_CASE("Jacobi identity, sampled at rank 4") {
  for (const char* name : {"A4", "B4", "C4", "D4", "F4"}) {
    const auto alg = testing::algebra(name[0], name[1] - '0');
    const long d = static_cast<long>(alg->dimension());
    std::size_t failures = 0;
    for (int t = 0; t < 3000; ++t)
      failures += !jacobi(*alg, static_cast<std::size_t>(testing::uniform(0, d - 1)),
                          static_cast<std::size_t>(testing::uniform(0, d - 1)),
                          static_cast<std::size_t>(testing::uniform(0, d - 1)));
    CAPTURE(name);
    CHECK(failures == 0);
  }
}

TEST_CASE("exceptional algebras close under the Jacobi identity on root triples") {
  const auto alg = testing::algebra('E', 6);
  const long d = static_cast<long>(alg->dimension());
  std::size_t failures = 0;
  for (int t = 0; t < 3000; ++t)
    failures += !jacobi(*alg, static_cast<std::size_t>(testing::uniform(6, d - 1)),
                        static_cast<std::size_t>(testing::uniform(6, d - 1)),
                        static_cast<std::size_t>(testing::uniform(6, d - 1)));
  CHECK(failures == 0);
}

TEST_CASE("on-disk cache") {
  const TempDir dir;
  const auto rs = build_root_system('G', 2);
  const auto plain = build_chevalley(rs);
  const auto first = load_or_build_chevalley(rs, dir.path);
  const auto file = dir.path / "G2.json";
  REQUIRE(std::filesystem::exists(file));
  const auto bytes = slurp(file);
  const auto second = load_or_build_chevalley(rs, dir.path);
  CHECK(first.table() == plain.table());
  CHECK(second.table() == plain.table());
  CHECK(slurp(file) == bytes);

  // rebuilding into a fresh directory writes the same bytes
  const TempDir other;
  load_or_build_chevalley(rs, other.path);
  CHECK(slurp(other.path / "G2.json") == bytes);

  for (const std::string junk : {"not json", "{}", "{\"version\": 3}", ""}) {
    std::ofstream(file) << junk;
    CHECK(load_or_build_chevalley(rs, dir.path).table() == plain.table());
  }
  CHECK(load_or_build_chevalley(rs, std::nullopt).table() == plain.table());

  // a cache for another algebra under the wrong name is not trusted
  std::filesystem::copy_file(file, dir.path / "A2.json", std::filesystem::copy_options::overwrite_existing);
  const auto a2 = build_root_system('A', 2);
  CHECK(load_or_build_chevalley(a2, dir.path).table() == build_chevalley(a2).table());
}
