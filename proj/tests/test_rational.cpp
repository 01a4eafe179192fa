#include "doctest.h"

#include "nhlab/errors.hpp"
#include "nhlab/rational.hpp"
#include "support.hpp"

using namespace nhlab;
using testing::random_rational;
using testing::uniform;

namespace {

// Textbook elimination over Q, used as an oracle for the fraction-free rank.
std::size_t naive_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix random_matrix(std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(0, 3) == 0 ? Rational(0) : random_rational(5);
  return m;
}

}  // namespace

TEST_CASE("rationals parse in the forms p and p/q") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("+4") == 4);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(format_rational(Rational(5)) == "5");
}

TEST_CASE("malformed rationals are usage errors") {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1/-2", "1.5", "--1", "1/2/3"}) {
    CAPTURE(bad);
    try {
      parse_rational(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == Error::Kind::Usage);
    }
  }
}

TEST_CASE("format and parse round-trip random rationals") {
  for (int i = 0; i < 200; ++i) {
    const Rational q = random_rational(1000);
    CHECK(parse_rational(format_rational(q)) == q);
  }
}

TEST_CASE("weight arithmetic and ordering") {
  const auto a = testing::w({1, -2});
  const auto b = testing::w({3, 4});
  CHECK(a + b == testing::w({4, 2}));
  CHECK(b - a == testing::w({2, 6}));
  CHECK(-a == testing::w({-1, 2}));
  CHECK(Rational(1, 2) * b == Weight({Rational(3, 2), Rational(2)}));
  CHECK(a < b);
  CHECK(a.to_string() == "(1,-2)");
  CHECK_FALSE(Weight({Rational(1, 2)}).is_integral());
  CHECK_THROWS(a + testing::w({1}));
}

TEST_CASE("fraction-free rank agrees with naive elimination") {
  for (int t = 0; t < 150; ++t) {
    const auto rows = static_cast<std::size_t>(uniform(1, 7));
    const auto inner = static_cast<std::size_t>(uniform(1, 7));
    const auto cols = static_cast<std::size_t>(uniform(1, 7));
    const RatMatrix m = random_matrix(rows, inner) * random_matrix(inner, cols);
    CHECK(rank(m) == naive_rank(m));
    CHECK(rank(m) <= inner);
  }
}

TEST_CASE("sparse rank agrees with naive elimination") {
  for (int t = 0; t < 300; ++t) {
    const auto rows = static_cast<std::size_t>(uniform(0, 12));
    const auto inner = static_cast<std::size_t>(uniform(1, 8));
    const auto cols = static_cast<std::size_t>(uniform(0, 12));
    RatMatrix a = random_matrix(rows, inner), b = random_matrix(inner, cols);
    // mostly-zero factors keep the product sparse
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < inner; ++j)
        if (uniform(0, 2)) a(i, j) = 0;
    const RatMatrix m = a * b;
    SparseMatrix s(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<SparseMatrix::Entry> col;
      for (std::size_t r = 0; r < rows; ++r) col.emplace_back(r, m(r, c));
      s.set_column(c, col);
    }
    CAPTURE(t);
    CHECK(rank(s) == naive_rank(m));
  }
  CHECK(rank(SparseMatrix(0, 5)) == 0);
  CHECK(rank(SparseMatrix(5, 0)) == 0);
}

TEST_CASE("pivot columns are the leftmost independent columns") {
  RatMatrix m(2, 4);
  m(0, 0) = 0, m(0, 1) = 1, m(0, 2) = 2, m(0, 3) = 0;
  m(1, 0) = 0, m(1, 1) = 2, m(1, 2) = 4, m(1, 3) = 1;
  const auto e = echelon(m);
  CHECK(e.rank == 2);
  CHECK(e.pivot_columns == std::vector<std::size_t>{1, 3});
}

TEST_CASE("inverse of random nonsingular matrices") {
  int tested = 0;
  while (tested < 40) {
    const auto n = static_cast<std::size_t>(uniform(1, 6));
    const RatMatrix m = random_matrix(n, n);
    if (rank(m) < n) {
      CHECK_THROWS_AS(inverse(m), std::domain_error);
      continue;
    }
    CHECK(m * inverse(m) == RatMatrix::identity(n));
    ++tested;
  }
}

TEST_CASE("sparse matrices drop zeros and keep rows sorted") {
  SparseMatrix s(3, 2);
  s.set_column(0, {{2, Rational(1)}, {0, Rational(0)}, {1, Rational(-1)}});
  REQUIRE(s.column(0).size() == 2);
  CHECK(s.column(0)[0].first == 1);
  CHECK(s.nonzeros() == 2);
  CHECK(s.to_dense()(2, 0) == 1);
}
