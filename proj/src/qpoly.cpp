#include "qchroma/qpoly.hpp"

#include <algorithm>
#include <cctype>

namespace qchroma {

namespace {

std::string rat_str(const Rat& r) { return r.str(); }

bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace

QPoly::QPoly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(int k, const Rat& c) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  QPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, Rat(0));
    p.c_[k] = c;
  }
  return p;
}

QPoly QPoly::q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
  QPoly p;
  p.c_.assign(n, Rat(1));
  return p;
}

QPoly QPoly::q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
  QPoly p(1);
  for (int k = 2; k <= n; ++k) p *= q_int(k);
  return p;
}

Rat QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

void QPoly::add_term(int k, const Rat& c) {
  if (k < 0) throw std::invalid_argument("add_term: negative exponent");
  if (c == 0) return;
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, Rat(0));
  c_[k] += c;
  trim();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (Rat& c : p.c_) c = -c;
  return p;
}

Rat QPoly::at_one() const {
  Rat s(0);
  for (const Rat& c : c_) s += c;
  return s;
}

Rat QPoly::eval(const Rat& x) const {
  Rat s(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly{};
  std::vector<Rat> c(a.degree() + b.degree() + 1, Rat(0));
  for (int i = 0; i <= a.degree(); ++i) {
    Rat ai = a.coeff(i);
    if (ai == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      Rat bj = b.coeff(j);
      if (bj != 0) c[i + j] += ai * bj;
    }
  }
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  QPoly rem = a;
  QPoly quot;
  Rat lead = b.c_.back();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rat f = rem.c_.back() / lead;
    quot.add_term(shift, f);
    for (int i = 0; i <= b.degree(); ++i)
      rem.c_[i + shift] -= f * b.c_[i];
    rem.trim();
  }
  return {std::move(quot), std::move(rem)};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rat lead = a.c_.back();
    for (Rat& c : a.c_) c /= lead;
  }
  return a;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    Rat c = c_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    std::string body;
    if (k == 0) {
      body = rat_str(a);
    } else {
      if (a != 1) {
        body = is_integer(a) ? rat_str(a) : "(" + rat_str(a) + ")";
      }
      body += "q";
      if (k > 1) body += "^" + std::to_string(k);
    }
    out += body;
  }
  return out;
}

QPoly QPoly::parse(std::string_view text) {
  QPoly p;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = (text[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("parse: expected + or -");
    }
    first = false;
    skip_ws();
    auto read_uint = [&]() -> Int {
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse: expected digit");
      Int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      return v;
    };
    Rat coeff(1);
    bool have_coeff = false;
    bool paren = (i < text.size() && text[i] == '(');
    if (paren) ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      Int numv = read_uint();
      Int denv = 1;
      if (i < text.size() && text[i] == '/') {
        ++i;
        denv = read_uint();
      }
      coeff = Rat(numv, denv);
      have_coeff = true;
    }
    if (paren) {
      if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("parse: unbalanced parenthesis");
      ++i;
    }
    skip_ws();
    int exp = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        exp = static_cast<int>(read_uint());
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("parse: empty term");
    }
    p.add_term(exp, sign * coeff);
    skip_ws();
  }
  return p;
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("QRat: zero denominator");
  reduce();
}

void QRat::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = QPoly::divmod(num_, g).first;
    den_ = QPoly::divmod(den_, g).first;
  }
  Rat lead = den_.coeff(den_.degree());
  if (lead != 1) {
    QPoly inv = QPoly(Rat(1) / lead);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

QRat& QRat::operator+=(const QRat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

QRat& QRat::operator*=(const QRat& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.num_.is_zero()) throw std::invalid_argument("QRat: division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

bool QRat::is_polynomial() const { return den_ == QPoly(1); }

QPoly QRat::as_polynomial() const {
  if (!is_polynomial())
    throw NotPolynomialError("not a polynomial: " + str());
  return num_;
}

std::string QRat::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QRat operator+(QRat a, const QRat& b) { return a += b; }
QRat operator-(QRat a, const QRat& b) { return a -= b; }
QRat operator*(QRat a, const QRat& b) { return a *= b; }
QRat operator/(QRat a, const QRat& b) { return a /= b; }

}  // namespace qchroma
