#include <doctest.h>

#include <set>
#include <thread>

#include "finst/cohomology.hpp"
#include "finst/cox_oracle.hpp"
#include "finst/errors.hpp"

using namespace finst;

TEST_CASE("basis sizes match h0 on a box") {
  for (Int l = -4; l <= 4; ++l)
    for (Int e = -4; e <= 4; ++e)
      for (Int xi = -3; xi <= 3; ++xi) {
        const DivClass d{l, e, xi};
        const auto b = basis(d);
        CHECK(static_cast<Int>(b->monomials.size()) == cohom_f(d).h0);
      }
}

TEST_CASE("basis monomials are distinct, sorted and of the right class") {
  const DivClass d{3, -1, 2};
  const auto b = basis(d);
  CHECK(b->monomials.size() == 27);
  std::set<CoxMonomial> seen;
  for (std::size_t i = 0; i < b->monomials.size(); ++i) {
    const auto& m = b->monomials[i];
    CHECK(m.multidegree() == d);
    CHECK(seen.insert(m).second);
    CHECK(b->index.at(m) == i);
    if (i > 0) CHECK(b->monomials[i - 1] > m);
  }
}

TEST_CASE("F1 counts") {
  CHECK(count_f1(0, 0) == 1);
  CHECK(count_f1(1, 0) == 3);
  CHECK(count_f1(1, 1) == 2);
  CHECK(count_f1(-1, 0) == 0);
  for (Int u = -5; u <= 8; ++u)
    for (Int v = -5; v <= 8; ++v) CHECK(count_f1(u, v) == h0_f1(u, v));
}

TEST_CASE("monomial text") {
  const CoxMonomial m = parse_monomial("x1*y^2*s1");
  CHECK(m.exp[kX1] == 1);
  CHECK(m.exp[kY] == 2);
  CHECK(m.exp[kS1] == 1);
  CHECK(format_monomial(m) == "x1*y^2*s1");
  CHECK(format_monomial(parse_monomial("1")) == "1");
  CHECK(m.multidegree() == DivClass{1, 1, 1});
  CHECK_THROWS_AS(parse_monomial("w"), ParseError);
}

TEST_CASE("sections and multiplication") {
  const auto s0 = SectionVector::from_monomial(parse_monomial("s0"));
  const auto x1 = SectionVector::from_monomial(parse_monomial("x1"));
  const auto p = s0 * x1;
  CHECK(p.cls == DivClass{1, -1, 1});
  CHECK(p.polynomial() == CoxPolynomial{{parse_monomial("x1*s0"), Rational(1)}});
  CHECK(SectionVector::zero(kH).is_zero());
  CHECK_THROWS(SectionVector::from_polynomial(kXi, {{parse_monomial("x1"), Rational(1)}}));

  const auto m = mult_matrix(s0, {0, 0, 1});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(linalg::rank(m) == 2);
  // Rows are source monomials, columns the target basis.
  CHECK(mult_matrix(x1, {}).rows() == 1);
  CHECK(mult_matrix(x1, {}).cols() == 2);
}

TEST_CASE("points") {
  CoxPoint p{1, 0, 0, 1, 0, 1};
  CHECK(irrelevant_check(p));
  p[kZ] = 0;
  CHECK_FALSE(irrelevant_check(p));
  const CoxPolynomial f{{parse_monomial("x1*s1"), Rational(2)}, {parse_monomial("x2*s0"), Rational(1)}};
  CHECK(evaluate(f, CoxPoint{3, 5, 1, 1, 7, 11}) == 2 * 3 * 11 + 5 * 7);
}

TEST_CASE("concurrent basis lookups agree") {
  std::vector<std::thread> pool;
  std::vector<std::size_t> sizes(8);
  for (std::size_t t = 0; t < sizes.size(); ++t)
    pool.emplace_back([&, t] {
      std::size_t total = 0;
      for (Int k = 0; k < 6; ++k) total += basis(k * kH)->monomials.size();
      sizes[t] = total;
    });
  for (auto& th : pool) th.join();
  for (auto s : sizes) CHECK(s == sizes[0]);
}
