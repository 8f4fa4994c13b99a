#include "doctest.h"

#include <random>

#include "latdeg/symcore/gcd.hpp"
#include "latdeg/symcore/modular.hpp"
#include "latdeg/symcore/rational_function.hpp"
#include "support/random_poly.hpp"

using namespace latdeg;
using latdeg::testing::random_point;
using latdeg::testing::random_poly;
using latdeg::testing::small_ring;

namespace {

struct Vars {
  RingPtr ring = small_ring();
  Polynomial p0 = Polynomial::variable(ring, Variable::p(0));
  Polynomial p1 = Polynomial::variable(ring, Variable::p(1));
  Polynomial r1 = Polynomial::variable(ring, Variable::r(1));
  Polynomial q = Polynomial::variable(ring, Variable::q());
  Polynomial z = Polynomial::variable(ring, Variable::z(0, 0));
  Polynomial c(long v) const { return Polynomial::constant(ring, v); }
};

}  // namespace

TEST_CASE("polynomial basics and printing") {
  Vars v;
  CHECK(((v.p1 - v.r1) + (v.r1 - v.p1)).is_zero());
  Polynomial e = v.p0 * v.p1 * v.r1 + v.q * v.q * v.r1 - v.q * v.q * v.p1;
  CHECK(e.size() == 3);
  CHECK(e.to_string() == "p0*p1*r1 - p1*q^2 + r1*q^2");
  CHECK(v.c(0).to_string() == "0");
  CHECK((v.c(-3) * v.p0.pow(2)).to_string() == "-3*p0^2");
}

TEST_CASE("weighted degree and homogeneity") {
  Vars v;
  CHECK((v.p0 * v.p1 * v.r1 + v.q * v.q * v.r1 - v.q * v.q * v.p1).weighted_degree() == 3);
  CHECK((v.z * v.q * v.q).weighted_degree() == 2);
  CHECK(v.c(5).weighted_degree() == 0);
  CHECK_THROWS_AS((void)v.c(0).weighted_degree(), UndefinedDegreeError);
  CHECK((v.p0 * (v.p1 - v.r1) - v.z * v.q * v.q).is_homogeneous());
  CHECK_FALSE((v.p1 + v.q * v.q).is_homogeneous());
  CHECK((v.c(7) * v.p0 * v.q.pow(3)).is_homogeneous());
  CHECK_THROWS_AS((void)v.c(0).is_homogeneous(), UndefinedDegreeError);
}

TEST_CASE("exact division") {
  Vars v;
  Polynomial a = v.p1 * v.p1 - v.r1 * v.r1;
  auto q = a.divide_exact(v.p1 - v.r1);
  REQUIRE(q);
  CHECK(*q == v.p1 + v.r1);
  CHECK_FALSE(a.divide_exact(v.p1 - v.q));
  CHECK_FALSE((v.c(3) * v.p1).divide_exact(v.c(2)));
  CHECK_THROWS_AS((void)a.divide_exact(v.c(0)), ZeroDivisionError);
}

TEST_CASE("substitute") {
  Vars v;
  Polynomial num = v.p0 * (v.p1 - v.r1) - v.z * v.q * v.q;
  CHECK(num.substitute({{Variable::r(1), v.p1}}) == -(v.z * v.q * v.q));
  CHECK(v.p0.substitute({{Variable::p(0), v.p0}}) == v.p0);

  RingPtr rt = make_ring({Variable::p(1), Variable::q(), Variable::t()});
  Polynomial t = Polynomial::variable(rt, Variable::t());
  Polynomial one = Polynomial::constant(rt, 1);
  Polynomial p1q = Polynomial::variable(rt, Variable::p(1)) * Polynomial::variable(rt, Variable::q());
  Polynomial got = p1q.substitute({{Variable::p(1), one * mpz_class(3) + t * mpz_class(2)},
                                   {Variable::q(), one + t}});
  CHECK(got == one * mpz_class(3) + t * mpz_class(5) + t * t * mpz_class(2));
}

TEST_CASE("gcd examples") {
  Vars v;
  for (auto m : {GcdMethod::Auto, GcdMethod::Prs}) {
    CHECK(gcd(v.p1 - v.r1, v.p1 * v.p1 - v.r1 * v.r1, m) == v.p1 - v.r1);
    CHECK(gcd(v.q * (v.p1 - v.r1), v.q * v.q, m) == v.q);
    CHECK(gcd(v.r1 - v.p1, v.c(0), m) == v.p1 - v.r1);
    CHECK(gcd(v.c(6) * v.p0, v.c(4) * v.p0, m) == v.p0);
    CHECK(gcd(v.p0 + v.q, v.p1 + v.q, m) == v.c(1));
  }
}

TEST_CASE("gcd recovers constructed common factors") {
  // Build a = c*g, b = d*g with c, d coprime (checked with the slow
  // reference) and require gcd(a, b) to be an associate of g.
  RingPtr ring = small_ring();
  std::mt19937_64 gen(2024);
  int checked = 0;
  while (checked < 50) {
    Polynomial g = random_poly(ring, gen, 3, 3);
    Polynomial c = random_poly(ring, gen, 3, 3);
    Polynomial d = random_poly(ring, gen, 3, 2);
    if (g.is_constant() || c.is_zero() || d.is_zero()) continue;
    if (!gcd(c, d, GcdMethod::Prs).is_constant()) continue;
    Polynomial a = c * g, b = d * g;
    Polynomial expect = g.canonical();
    CHECK(gcd(a, b, GcdMethod::Auto) == expect);
    CHECK(gcd(a, b, GcdMethod::Prs) == expect);
    Polynomial got = gcd(a, b);
    CHECK(a.divide_exact(got));
    CHECK(b.divide_exact(got));
    ++checked;
  }
}

TEST_CASE("coprimality certificate never lies") {
  RingPtr ring = small_ring();
  std::mt19937_64 gen(7);
  auto pt = default_point(ring->size());
  for (int i = 0; i < 40; ++i) {
    Polynomial g = random_poly(ring, gen, 2, 2);
    Polynomial a = random_poly(ring, gen, 3, 2) * g;
    Polynomial b = random_poly(ring, gen, 3, 2) * g;
    if (g.is_constant() || a.is_zero() || b.is_zero()) continue;
    CHECK_FALSE(certify_coprime(a, b, pt));
  }
}

TEST_CASE("rational function arithmetic") {
  Vars v;
  RationalFunction x00(v.p0, v.q);
  RationalFunction rhs(v.z * v.q, v.r1 - v.p1);
  RationalFunction sum = x00 + rhs;
  // Same function as the hand-derived (p0 r1 - p0 p1 + z q^2)/(q (r1 - p1)).
  Polynomial n = v.p0 * v.r1 - v.p0 * v.p1 + v.z * v.q * v.q;
  Polynomial d = v.q * (v.r1 - v.p1);
  CHECK(sum.num() * d == n * sum.den());
  CHECK(sum.is_reduced());
  CHECK(sum.den().leading_sign() > 0);
  CHECK(sum == RationalFunction(n, d));

  RationalFunction ds(v.p1 * v.p1 - v.r1 * v.r1, v.p1 - v.r1);
  CHECK(ds == RationalFunction(v.p1 + v.r1));

  CHECK((RationalFunction(v.p1) - RationalFunction(v.p1)).is_zero());
  CHECK_THROWS_AS(RationalFunction(v.p0, v.c(0)), ZeroDivisionError);
  CHECK_THROWS_AS(x00 / RationalFunction(v.c(0)), ZeroDivisionError);
  CHECK(RationalFunction(v.c(2), v.c(4)) == RationalFunction(v.c(1), v.c(2)));
}

namespace {

// Random expression trees evaluated two ways: symbolically, then at a point,
// versus directly over exact rationals at the same point.
struct Tree {
  RationalFunction sym;
  std::vector<mpq_class> vals;  // values at the sample points
  bool ok = true;
};

Tree random_tree(const RingPtr& ring, std::mt19937_64& gen, int depth,
                 const std::vector<std::vector<mpq_class>>& pts) {
  std::uniform_int_distribution<int> op(0, 3);
  if (depth == 0 || op(gen) == 0) {
    Polynomial p = random_poly(ring, gen, 2, 2, 5);
    if (p.is_zero()) p = Polynomial::constant(ring, 1);
    Tree t{RationalFunction(p), {}};
    for (const auto& pt : pts) t.vals.push_back(p.evaluate(pt));
    return t;
  }
  Tree a = random_tree(ring, gen, depth - 1, pts);
  Tree b = random_tree(ring, gen, depth - 1, pts);
  int o = op(gen);
  Tree out{RationalFunction(Polynomial(ring)), {}};
  out.ok = a.ok && b.ok;
  switch (o) {
    case 0:
      out.sym = a.sym + b.sym;
      break;
    case 1:
      out.sym = a.sym - b.sym;
      break;
    case 2:
      out.sym = a.sym * b.sym;
      break;
    default:
      if (b.sym.is_zero()) return a;
      out.sym = a.sym / b.sym;
      break;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const mpq_class &x = a.vals[i], &y = b.vals[i];
    if (o == 0) out.vals.push_back(x + y);
    if (o == 1) out.vals.push_back(x - y);
    if (o == 2) out.vals.push_back(x * y);
    if (o == 3) {
      if (y == 0) {
        out.ok = false;
        out.vals.push_back(0);
      } else {
        out.vals.push_back(x / y);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("arithmetic agrees with pointwise evaluation") {
  RingPtr ring = small_ring();
  std::mt19937_64 gen(99);
  int trees = 0;
  while (trees < 200) {
    std::vector<std::vector<mpq_class>> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(random_point(ring, gen));
    Tree t = random_tree(ring, gen, 3, pts);
    if (!t.ok) continue;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      mpq_class den = t.sym.den().evaluate(pts[i]);
      if (den == 0) continue;
      CHECK(t.sym.num().evaluate(pts[i]) / den == t.vals[i]);
    }
    CHECK(t.sym.is_reduced(GcdMethod::Auto));
    ++trees;
  }
}

TEST_CASE("degree additivity and substitution homomorphism") {
  RingPtr ring = small_ring();
  std::mt19937_64 gen(5);
  Polynomial p1 = Polynomial::variable(ring, Variable::p(1));
  Polynomial q = Polynomial::variable(ring, Variable::q());
  std::map<Variable, Polynomial> bind{{Variable::r(1), p1 - q}, {Variable::p(0), q * q}};
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_poly(ring, gen, 4, 3);
    Polynomial b = random_poly(ring, gen, 4, 3);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).weighted_degree() == a.weighted_degree() + b.weighted_degree());
    CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
    CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
  }
}

TEST_CASE("modular univariate toolkit") {
  using namespace latdeg::modp;
  UPoly a{1, 2, 1};  // (x+1)^2
  UPoly b{kPrime - 1, 0, 1};  // x^2 - 1
  CHECK(gcd(a, b) == UPoly{1, 1});
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::uint64_t> d(0, kPrime - 1);
  UPoly x(300), y(257);
  for (auto& c : x) c = d(gen);
  for (auto& c : y) c = d(gen);
  UPoly prod = mul(x, y);
  for (std::uint64_t pt : {3ull, 77ull, 123456789ull}) CHECK(eval(prod, pt) == modp::mul(eval(x, pt), eval(y, pt)));
  UPoly qq, rr;
  divmod(prod, y, qq, rr);
  CHECK(rr.empty());
  CHECK(qq == x);
}
