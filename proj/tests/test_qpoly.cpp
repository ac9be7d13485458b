#include <utility>
#include <vector>

#include "doctest.h"
#include "qchroma/qpoly.hpp"

using namespace qchroma;

namespace {

QPoly P(const char* text) { return QPoly::parse(text); }

}  // namespace

TEST_CASE("q_int and q_factorial") {
  CHECK(QPoly::q_int(1) == P("1"));
  CHECK(QPoly::q_int(3) == P("1+q+q^2"));
  CHECK(QPoly::q_factorial(0) == P("1"));
  CHECK(QPoly::q_factorial(3) == P("1+2q+2q^2+q^3"));
  // [n]_q! = [n]_q * [n-1]_q!.
  for (int n = 1; n <= 8; ++n)
    CHECK(QPoly::q_factorial(n) == QPoly::q_int(n) * QPoly::q_factorial(n - 1));
  CHECK(QPoly::q_factorial(4).at_one() == Rat(24));
}

TEST_CASE("ring arithmetic") {
  const QPoly a = P("1+q");
  CHECK(a * a == P("1+2q+q^2"));
  CHECK(a * P("1-q") == P("1-q^2"));
  CHECK(a - a == QPoly());
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(-a == P("-1-q"));
  CHECK(QPoly::monomial(3) == P("q^3"));
  CHECK(QPoly::monomial(2, Rat(-5)) == P("-5q^2"));
  CHECK(a * QPoly() == QPoly());

  QPoly b = P("q^2");
  b.add_term(0, Rat(1));
  b.add_term(2, Rat(-1));
  CHECK(b == P("1"));
  CHECK(b.degree() == 0);

  CHECK(P("1+2q").coeff(1) == Rat(2));
  CHECK(P("1+2q").coeff(7) == Rat(0));
  CHECK(P("3+q").eval(Rat(2)) == Rat(5));
  CHECK(P("1+q+q^2").eval(Rat(1, 2)) == Rat(7, 4));
}

TEST_CASE("divmod is Euclidean division") {
  auto [d1, r1] = QPoly::divmod(P("1-q^6"), P("1-q^2"));
  CHECK(d1 == P("1+q^2+q^4"));
  CHECK(r1.is_zero());

  auto [d2, r2] = QPoly::divmod(P("1+q^2"), P("1+q"));
  CHECK(d2 == P("-1+q"));
  CHECK(r2 == P("2"));

  const std::vector<QPoly> pool = {P("1"),      P("1+q"),        P("2-q+q^3"),
                                   P("-1+q^2"), P("1+q+q^2"),    P("q"),
                                   P("5"),      P("1-2q+3q^2-q^4")};
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      auto [d, r] = QPoly::divmod(a, b);
      CHECK(a == d * b + r);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd is monic and divides both arguments") {
  const QPoly g = QPoly::gcd(P("1-q^4"), P("1-q^6"));
  CHECK(g.degree() == 2);
  CHECK(g.coeff(2) == Rat(1));
  CHECK(QPoly::divmod(P("1-q^4"), g).second.is_zero());
  CHECK(QPoly::divmod(P("1-q^6"), g).second.is_zero());

  CHECK(QPoly::gcd(P("1+q"), P("1+q+q^2")) == P("1"));
  // gcd with zero returns the monic normalization of the other argument.
  CHECK(QPoly::gcd(P("2+2q"), QPoly()) == P("1+q"));
}

TEST_CASE("QRat reduces to lowest terms with monic denominator") {
  CHECK(QRat(P("1-q^2"), P("1-q")) == QRat(P("1+q")));
  CHECK(QRat(P("2-2q^2"), P("2-2q")) == QRat(P("1+q")));

  // Denominator is normalized monic, so 1/(1-q) is stored as (-1)/(-1+q).
  const QRat half_geo(P("1"), P("1-q"));
  CHECK(half_geo.den() == P("-1+q"));
  CHECK(half_geo.num() == P("-1"));
  CHECK(!half_geo.is_polynomial());
  CHECK_THROWS_AS(half_geo.as_polynomial(), NotPolynomialError);

  // 1/(1-q) - q/(1-q) = 1.
  CHECK(half_geo - QRat(P("q"), P("1-q")) == QRat(1));
  CHECK(half_geo * QRat(P("1-q")) == QRat(1));
  CHECK(QRat(1) / half_geo == QRat(P("1-q")));

  const QRat poly(P("3+q^2"));
  CHECK(poly.is_polynomial());
  CHECK(poly.as_polynomial() == P("3+q^2"));
  CHECK(QRat().is_zero());
  CHECK((half_geo - half_geo).is_zero());
}

TEST_CASE("str and parse round-trip") {
  CHECK(P("1+2q+2q^2+q^3").str() == "1+2q+2q^2+q^3");
  CHECK(QPoly().str() == "0");
  CHECK(P("-q+q^3").str() == "-q+q^3");
  const std::vector<QPoly> pool = {P("1"), P("-1+q"), P("1/2+3q^2"), P("q^5"),
                                   QPoly()};
  for (const auto& p : pool) CHECK(QPoly::parse(p.str()) == p);
  CHECK(QRat(P("1"), P("1-q")).str() == "(-1)/(-1+q)");
  CHECK(QRat(P("1-q^2"), P("1-q")).str() == "1+q");
}
