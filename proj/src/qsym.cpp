#include "qchroma/qsym.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace qchroma {

namespace {

std::uint64_t mask_count(int degree) {
  if (degree < 1 || degree > 20)
    throw std::invalid_argument("qsym degree out of range: " +
                                std::to_string(degree));
  return 1ull << (degree - 1);
}

// Bit s-1 carries element s of [n-1]; reversal sends element s to n-s.
std::uint64_t reverse_mask(std::uint64_t a, int n) {
  std::uint64_t out = 0;
  for (int s = 1; s < n; ++s)
    if (a >> (s - 1) & 1) out |= 1ull << (n - s - 1);
  return out;
}

}  // namespace

QSymElem::QSymElem(int degree, Basis basis)
    : degree_(degree), basis_(basis), coeffs_(mask_count(degree)) {}

const QRat& QSymElem::coeff(const Composition& a) const {
  if (a.total() != degree_)
    throw std::invalid_argument("composition degree mismatch");
  return coeffs_[set_of(a)];
}

void QSymElem::add(const Composition& a, const QRat& c) {
  if (a.total() != degree_)
    throw std::invalid_argument("composition degree mismatch");
  coeffs_[set_of(a)] += c;
}

QSymElem& QSymElem::operator+=(const QSymElem& o) {
  if (degree_ != o.degree_ || basis_ != o.basis_)
    throw std::invalid_argument("qsym sum needs matching degree and basis");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QSymElem& QSymElem::operator-=(const QSymElem& o) {
  if (degree_ != o.degree_ || basis_ != o.basis_)
    throw std::invalid_argument("qsym difference needs matching degree and basis");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

QSymElem& QSymElem::operator*=(const QRat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

// L_a = sum over coarsenings is inverted by M_a = sum over refinements with
// alternating signs; on set-masks refinement is superset, so both maps are
// subset-lattice zeta/Moebius transforms.
QSymElem l_to_m(const QSymElem& e) {
  if (e.basis() != Basis::L) throw std::invalid_argument("l_to_m wants L basis");
  const int n = e.degree();
  QSymElem out(n, Basis::M);
  const std::uint64_t size = mask_count(n);
  std::vector<QRat> c(size);
  for (std::uint64_t a = 0; a < size; ++a) c[a] = e.coeff_mask(a);
  for (int bit = 0; bit + 1 < n; ++bit)
    for (std::uint64_t a = 0; a < size; ++a)
      if (a >> bit & 1) c[a] += c[a ^ (1ull << bit)];
  for (std::uint64_t a = 0; a < size; ++a) out.set_mask(a, std::move(c[a]));
  return out;
}

QSymElem m_to_l(const QSymElem& e) {
  if (e.basis() != Basis::M) throw std::invalid_argument("m_to_l wants M basis");
  const int n = e.degree();
  QSymElem out(n, Basis::L);
  const std::uint64_t size = mask_count(n);
  std::vector<QRat> c(size);
  for (std::uint64_t a = 0; a < size; ++a) c[a] = e.coeff_mask(a);
  for (int bit = 0; bit + 1 < n; ++bit)
    for (std::uint64_t a = 0; a < size; ++a)
      if (a >> bit & 1) c[a] -= c[a ^ (1ull << bit)];
  for (std::uint64_t a = 0; a < size; ++a) out.set_mask(a, std::move(c[a]));
  return out;
}

namespace {

// Raw Psi <-> M transitions, used both by the public entry points and by the
// power-sum gate that validates them.
//
// Psi_a = z_a * sum_{b coarsening a} M_b / pi(a, b), where pi multiplies the
// partial sums of each block of a refining b.
Rat pi_factor(const Composition& a, const Composition& b) {
  Rat out = 1;
  for (const Composition& block : gamma(a, b)) {
    long long partial = 0;
    for (int i = 0; i < block.length(); ++i) {
      partial += block.part(i);
      out *= partial;
    }
  }
  return out;
}

QSymElem psi_to_m_raw(const QSymElem& e) {
  const int n = e.degree();
  QSymElem out(n, Basis::M);
  const std::uint64_t size = e.term_count_bound();
  for (std::uint64_t a = 0; a < size; ++a) {
    const QRat& c = e.coeff_mask(a);
    if (c == QRat()) continue;
    const Composition ca = comp_of(n, a);
    const Rat za = z_of(ca);
    // Coarsenings of a are the subsets of its mask.
    std::uint64_t b = a;
    while (true) {
      out.add_mask(b, c * QRat(Rat(za / pi_factor(ca, comp_of(n, b)))));
      if (b == 0) break;
      b = (b - 1) & a;
    }
  }
  return out;
}

QSymElem m_to_psi_raw(const QSymElem& e) {
  const int n = e.degree();
  const std::uint64_t size = e.term_count_bound();
  std::vector<std::uint64_t> order(size);
  for (std::uint64_t a = 0; a < size; ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [](std::uint64_t x, std::uint64_t y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px > py : x < y;
  });
  QSymElem out(n, Basis::Psi);
  for (std::uint64_t s : order) {
    QRat rhs = e.coeff_mask(s);
    const Composition cs = comp_of(n, s);
    // Strict supersets of s are the finer compositions already solved.
    const std::uint64_t room = (size - 1) & ~s;
    for (std::uint64_t t = room; t != 0; t = (t - 1) & room) {
      const std::uint64_t a = s | t;
      const QRat& c = out.coeff_mask(a);
      if (c == QRat()) continue;
      const Composition ca = comp_of(n, a);
      rhs -= c * QRat(Rat(z_of(ca) / pi_factor(ca, cs)));
    }
    rhs *= QRat(Rat(pi_factor(cs, cs) / z_of(cs)));
    out.set_mask(s, std::move(rhs));
  }
  return out;
}

// Every Psi <-> M conversion at a new degree first proves
// sum_{lambda(a) = lambda} Psi_a = p_lambda for all partitions of n.
void ensure_psi_gate(int n) {
  static std::mutex mu;
  static std::set<int> done;
  std::scoped_lock lock(mu);
  if (done.count(n)) return;
  for (const std::vector<int>& lam : partitions_of(n)) {
    QSymElem sum(n, Basis::Psi);
    for (std::uint64_t a = 0; a < (1ull << (n - 1)); ++a)
      if (lambda_of(comp_of(n, a)) == lam) sum.set_mask(a, QRat(1));
    if (psi_to_m_raw(sum) != p_lambda(lam)) {
      std::string msg = "psi basis gate failed at degree " + std::to_string(n) +
                        " for partition (";
      for (std::size_t i = 0; i < lam.size(); ++i)
        msg += (i ? "," : "") + std::to_string(lam[i]);
      throw std::logic_error(msg + ")");
    }
  }
  done.insert(n);
}

}  // namespace

QSymElem psi_to_m(const QSymElem& e) {
  if (e.basis() != Basis::Psi)
    throw std::invalid_argument("psi_to_m wants Psi basis");
  ensure_psi_gate(e.degree());
  return psi_to_m_raw(e);
}

QSymElem m_to_psi(const QSymElem& e) {
  if (e.basis() != Basis::M)
    throw std::invalid_argument("m_to_psi wants M basis");
  ensure_psi_gate(e.degree());
  return m_to_psi_raw(e);
}

QSymElem to_basis(const QSymElem& e, Basis target) {
  if (e.basis() == target) return e;
  QSymElem m = e;
  if (e.basis() == Basis::L) m = l_to_m(e);
  else if (e.basis() == Basis::Psi) m = psi_to_m(e);
  if (target == Basis::M) return m;
  return target == Basis::L ? m_to_l(m) : m_to_psi(m);
}

namespace {

QSymElem remap_l_masks(const QSymElem& e, bool reverse, bool complement) {
  const int n = e.degree();
  const std::uint64_t full = mask_count(n) - 1;
  QSymElem out(n, e.basis());
  for (std::uint64_t a = 0; a <= full; ++a) {
    std::uint64_t b = complement ? (full ^ a) : a;
    if (reverse) b = reverse_mask(b, n);
    out.set_mask(b, e.coeff_mask(a));
  }
  return out;
}

QSymElem apply_in_l(const QSymElem& e, bool reverse, bool complement) {
  if (e.basis() == Basis::L) return remap_l_masks(e, reverse, complement);
  QSymElem image = remap_l_masks(to_basis(e, Basis::L), reverse, complement);
  return to_basis(image, e.basis());
}

}  // namespace

QSymElem involution_rho(const QSymElem& e) {
  // rho permutes the M basis the same way: M_a -> M_{a^r}.
  if (e.basis() == Basis::M) return remap_l_masks(e, true, false);
  return apply_in_l(e, true, false);
}

QSymElem involution_psi(const QSymElem& e) { return apply_in_l(e, false, true); }

QSymElem involution_omega(const QSymElem& e) { return apply_in_l(e, true, true); }

namespace {

void stuffle(const std::vector<int>& a, const std::vector<int>& b,
             std::size_t i, std::size_t j, std::vector<int>& prefix,
             const QRat& c, QSymElem& out) {
  if (i == a.size() && j == b.size()) {
    out.add(Composition(prefix), c);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    stuffle(a, b, i + 1, j, prefix, c, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    stuffle(a, b, i, j + 1, prefix, c, out);
    prefix.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    prefix.push_back(a[i] + b[j]);
    stuffle(a, b, i + 1, j + 1, prefix, c, out);
    prefix.pop_back();
  }
}

}  // namespace

QSymElem m_product(const QSymElem& a, const QSymElem& b) {
  if (a.basis() != Basis::M || b.basis() != Basis::M)
    throw std::invalid_argument("m_product wants both factors in M basis");
  const int n = a.degree() + b.degree();
  QSymElem out(n, Basis::M);
  std::vector<int> prefix;
  for (std::uint64_t x = 0; x < a.term_count_bound(); ++x) {
    const QRat& ca = a.coeff_mask(x);
    if (ca == QRat()) continue;
    const Composition cx = comp_of(a.degree(), x);
    for (std::uint64_t y = 0; y < b.term_count_bound(); ++y) {
      const QRat& cb = b.coeff_mask(y);
      if (cb == QRat()) continue;
      const Composition cy = comp_of(b.degree(), y);
      stuffle(cx.parts(), cy.parts(), 0, 0, prefix, ca * cb, out);
    }
  }
  return out;
}

QSymElem p_lambda(const std::vector<int>& lambda) {
  if (lambda.empty()) throw std::invalid_argument("p_lambda wants a nonempty partition");
  QSymElem out(lambda[0], Basis::M);
  out.add(Composition({lambda[0]}), QRat(1));
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    QSymElem factor(lambda[i], Basis::M);
    factor.add(Composition({lambda[i]}), QRat(1));
    out = m_product(out, factor);
  }
  return out;
}

QRat l_principal(const Composition& a) {
  const int n = a.total();
  QPoly den = 1;
  for (int i = 1; i <= n; ++i) {
    QPoly f = 1;
    f.add_term(i, -1);
    den *= f;
  }
  return QRat(QPoly::monomial(eta(reversal(a)), 1), den);
}

namespace {

// Degree-level tables for the plethystic transform: exponent of the numerator
// monomial per (alpha, beta) pair and the shared denominator per beta.
struct CmTables {
  std::vector<std::vector<int>> num_exp;
  std::vector<QPoly> den;
  QPoly one_minus_q_pow_n;
};

const CmTables& cm_tables(int n) {
  static std::mutex mu;
  static std::map<int, CmTables> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CmTables t;
  const std::uint64_t size = 1ull << (n - 1);
  t.num_exp.assign(size, std::vector<int>(size, 0));
  t.den.resize(size);
  std::vector<Composition> comps;
  comps.reserve(size);
  for (std::uint64_t m = 0; m < size; ++m) comps.push_back(comp_of(n, m));
  for (std::uint64_t b = 0; b < size; ++b) {
    QPoly den = 1;
    for (int i = 0; i < comps[b].length(); ++i)
      for (int j = 1; j <= comps[b].part(i); ++j) {
        QPoly f = 1;
        f.add_term(j, -1);
        den *= f;
      }
    t.den[b] = den;
    for (std::uint64_t a = 0; a < size; ++a) {
      int e = 0;
      for (const Composition& block : gamma(comps[a], comps[b]))
        e += eta(reversal(block));
      t.num_exp[a][b] = e;
    }
  }
  QPoly omq = 1;
  omq.add_term(1, -1);
  t.one_minus_q_pow_n = 1;
  for (int i = 0; i < n; ++i) t.one_minus_q_pow_n *= omq;
  it = cache.emplace(n, std::move(t)).first;
  return it->second;
}

}  // namespace

QSymElem cm_transform_rational(const QSymElem& f) {
  const int n = f.degree();
  const CmTables& t = cm_tables(n);
  const std::uint64_t size = 1ull << (n - 1);
  const std::uint64_t full = size - 1;
  // psi in the L basis is mask complement.
  const QSymElem l = to_basis(f, Basis::L);
  std::vector<const QRat*> d(size);
  for (std::uint64_t a = 0; a < size; ++a) d[full ^ a] = &l.coeff_mask(a);
  QSymElem out(n, Basis::M);
  for (std::uint64_t b = 0; b < size; ++b) {
    // Expanding each L_a on the alphabet 1, q, q^2, ... makes the M_b
    // coefficient sum_a d_a q^{num_exp[a][b]} / den[b].
    QRat num;
    for (std::uint64_t a = 0; a < size; ++a) {
      if (*d[a] == QRat()) continue;
      num += *d[a] * QRat(QPoly::monomial(t.num_exp[a][b], 1));
    }
    QRat value;
    if (num.is_polynomial()) {
      // Exact-division fast path; falls back to the reduced fraction when
      // the denominator genuinely survives.
      QPoly p = num.as_polynomial() * t.one_minus_q_pow_n;
      auto [quot, rem] = QPoly::divmod(p, t.den[b]);
      value = rem.is_zero() ? QRat(std::move(quot)) : QRat(std::move(p), t.den[b]);
    } else {
      value = num / QRat(t.den[b]) * QRat(t.one_minus_q_pow_n);
    }
    // Trailing rho reverses the M index.
    out.set_mask(reverse_mask(b, n), std::move(value));
  }
  return out;
}

QSymElem cm_transform(const QSymElem& f) {
  QSymElem out = cm_transform_rational(f);
  const int n = out.degree();
  for (std::uint64_t b = 0; b < out.term_count_bound(); ++b) {
    const QRat& c = out.coeff_mask(b);
    if (c.is_polynomial()) continue;
    throw NotPolynomialError("cm_transform: coefficient of M_" +
                             to_string(comp_of(n, b)) +
                             " is not polynomial: " + c.str());
  }
  return out;
}

bool is_symmetric(const QSymElem& e) {
  const QSymElem m = e.basis() == Basis::M ? e : to_basis(e, Basis::M);
  const int n = m.degree();
  std::map<std::vector<int>, QRat> rep;
  for (std::uint64_t a = 0; a < m.term_count_bound(); ++a) {
    const std::vector<int> key = lambda_of(comp_of(n, a));
    auto [it, fresh] = rep.emplace(key, m.coeff_mask(a));
    if (!fresh && it->second != m.coeff_mask(a)) return false;
  }
  return true;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::set<std::vector<int>> seen;
  for (const Composition& a : enumerate_compositions(n)) seen.insert(lambda_of(a));
  return {seen.begin(), seen.end()};
}

}  // namespace qchroma
