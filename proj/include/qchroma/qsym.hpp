#pragma once
#include <cstdint>
#include <vector>

#include "qchroma/composition.hpp"
#include "qchroma/qpoly.hpp"

namespace qchroma {

enum class Basis { M, L, Psi };

// Homogeneous quasisymmetric element of degree n >= 1 in one of the three
// bases. Coefficients are held densely, indexed by the set-mask of the
// composition; zero entries are treated as absent terms.
class QSymElem {
 public:
  QSymElem() = default;
  QSymElem(int degree, Basis basis);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  std::uint64_t term_count_bound() const { return coeffs_.size(); }

  const QRat& coeff_mask(std::uint64_t mask) const { return coeffs_[mask]; }
  const QRat& coeff(const Composition& a) const;
  void set_mask(std::uint64_t mask, QRat c) { coeffs_[mask] = std::move(c); }
  void add_mask(std::uint64_t mask, const QRat& c) { coeffs_[mask] += c; }
  void add(const Composition& a, const QRat& c);

  QSymElem& operator+=(const QSymElem& o);
  QSymElem& operator-=(const QSymElem& o);
  QSymElem& operator*=(const QRat& scalar);
  bool operator==(const QSymElem&) const = default;

 private:
  int degree_ = 0;
  Basis basis_ = Basis::M;
  std::vector<QRat> coeffs_;
};

QSymElem l_to_m(const QSymElem& e);
QSymElem m_to_l(const QSymElem& e);
QSymElem psi_to_m(const QSymElem& e);
QSymElem m_to_psi(const QSymElem& e);
QSymElem to_basis(const QSymElem& e, Basis target);

// rho: L_a -> L_{a^r} (equivalently M_a -> M_{a^r}); psi: L_a -> L_{a^c};
// omega = rho o psi. Input in any basis, output in the same basis.
QSymElem involution_rho(const QSymElem& e);
QSymElem involution_psi(const QSymElem& e);
QSymElem involution_omega(const QSymElem& e);

// Quasi-shuffle product; both inputs in M basis.
QSymElem m_product(const QSymElem& a, const QSymElem& b);
// p_lambda = prod_i M_(lambda_i) in M basis.
QSymElem p_lambda(const std::vector<int>& lambda);

// q^{eta(a^r)} / prod_{i=1}^{n} (1 - q^i).
QRat l_principal(const Composition& a);

// Plethystic transform: psi, then substitute the alphabet 1,q,q^2,...,
// then rho, then multiply by (1-q)^n. Rational version keeps exact QRat
// coefficients; cm_transform additionally asserts every coefficient is a
// polynomial and raises NotPolynomialError otherwise.
QSymElem cm_transform_rational(const QSymElem& f);
QSymElem cm_transform(const QSymElem& f);

bool is_symmetric(const QSymElem& e);

// Distinct partitions of n, each weakly decreasing, deterministic order.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace qchroma
