#include "qchroma/series.hpp"

#include <stdexcept>

#include "qchroma/coloring.hpp"

namespace qchroma {

namespace {

std::vector<Word> s_n(int n) {
  return rearrangements(Composition(std::vector<int>(n, 1)));
}

QRat q_pow(long long k) { return QRat(QPoly::monomial(k, 1)); }

}  // namespace

QSymElem chromatic(const IntervalGraph& g) {
  const int n = g.n();
  QSymElem out(n, Basis::L);
  for (const Word& sigma : s_n(n))
    out.add_mask(des_g_mask(g.simple(), inverse_perm(sigma)),
                 q_pow(coinv(g.simple(), sigma)));
  return out;
}

QSymElem chromatic_monomial(const IntervalGraph& g) {
  const int n = g.n();
  QSymElem out(n, Basis::M);
  for (const Word& kappa : packed_proper_colorings(g.simple()))
    out.add(ev(kappa), q_pow(coinv(g.simple(), kappa)));
  return out;
}

QSymElem llt(const SimpleGraph& g) {
  const int n = g.n();
  QSymElem out(n, Basis::L);
  for (const Word& sigma : s_n(n))
    out.add_mask(des_mask(inverse_perm(sigma)), q_pow(inv(g, sigma)));
  return out;
}

QSymElem llt_monomial(const SimpleGraph& g) {
  const int n = g.n();
  QSymElem out(n, Basis::M);
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    QRat c;
    for (const Word& w : rearrangements(comp_of(n, mask))) c += q_pow(inv(g, w));
    out.set_mask(mask, std::move(c));
  }
  return out;
}

QSymElem forest_qsym(const IntervalGraph& g, const IncreasingForest& f) {
  const int n = g.n();
  if (!is_spanning_for(g.simple(), f))
    throw std::invalid_argument("forest_qsym: not a spanning forest of the graph");
  const std::uint64_t target = coinv_of_forest(g, f);
  QSymElem out(n, Basis::L);
  for (const Word& sigma : s_n(n))
    if (coinv_edge_mask(g.simple(), sigma) == target)
      out.add_mask(des_g_mask(g.simple(), inverse_perm(sigma)), QRat(1));
  return out;
}

QSymElem forest_qsym_monomial(const IntervalGraph& g, const IncreasingForest& f) {
  const int n = g.n();
  if (!is_spanning_for(g.simple(), f))
    throw std::invalid_argument("forest_qsym_monomial: not a spanning forest of the graph");
  QSymElem out(n, Basis::M);
  for (const Word& kappa : packed_proper_colorings(g.simple()))
    if (phi(g.simple(), kappa) == f) out.add(ev(kappa), QRat(1));
  return out;
}

QSymElem chromatic_from_forests(const IntervalGraph& g) {
  QSymElem out(g.n(), Basis::L);
  for (const IncreasingForest& f : enumerate_isf(g.simple())) {
    QSymElem term = forest_qsym(g, f);
    term *= q_pow(wt(g.simple(), f));
    out += term;
  }
  return out;
}

}  // namespace qchroma
