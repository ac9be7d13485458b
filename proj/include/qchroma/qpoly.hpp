#pragma once
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qchroma/rational.hpp"

namespace qchroma {

// as_polynomial on a fraction whose denominator survives reduction.
struct NotPolynomialError : std::runtime_error {
  explicit NotPolynomialError(const std::string& what) : std::runtime_error(what) {}
};

// Dense polynomial in q with exact rational coefficients.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  QPoly(int constant) : QPoly(Rat(constant)) {}  // NOLINT: implicit by design
  QPoly(const Rat& constant);                    // NOLINT
  explicit QPoly(std::vector<Rat> coeffs);

  static QPoly monomial(int k, const Rat& c = Rat(1));
  static QPoly q_int(int n);        // [n]_q
  static QPoly q_factorial(int n);  // [n]_q!

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const;
  void add_term(int k, const Rat& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;
  bool operator==(const QPoly&) const = default;

  Rat at_one() const;
  Rat eval(const Rat& x) const;

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  static QPoly gcd(QPoly a, QPoly b);  // monic

  std::string str() const;  // "1+2q+2q^2+q^3"
  static QPoly parse(std::string_view text);

 private:
  std::vector<Rat> c_;
  void trim();
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);

// Reduced rational function in q. Denominator monic and coprime to numerator.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(int c) : num_(c), den_(1) {}       // NOLINT
  QRat(const Rat& c) : num_(c), den_(1) {}  // NOLINT
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  QRat operator-() const;
  bool operator==(const QRat&) const = default;

  bool is_polynomial() const;
  QPoly as_polynomial() const;  // throws NotPolynomialError

  std::string str() const;

 private:
  QPoly num_, den_;
  void reduce();
};

QRat operator+(QRat a, const QRat& b);
QRat operator-(QRat a, const QRat& b);
QRat operator*(QRat a, const QRat& b);
QRat operator/(QRat a, const QRat& b);

}  // namespace qchroma
