#pragma once
#include "qchroma/forest.hpp"
#include "qchroma/graph.hpp"
#include "qchroma/qsym.hpp"

namespace qchroma {

// Each generating function is built by two independent routes: a permutation
// sum in the L basis and a packed-coloring (or forest) sum in the M basis.
// Route agreement is exactly the content of the underlying theorems, so the
// checkers diff them rather than sharing code.

// sum_{sigma in S_n} q^{coinv_G(sigma)} L_{n, Des_G(sigma^{-1})}.
QSymElem chromatic(const IntervalGraph& g);
// sum over proper packed colorings of q^{coinv_G(kappa)} M_{ev(kappa)}.
QSymElem chromatic_monomial(const IntervalGraph& g);

// sum_{sigma in S_n} q^{inv_G(sigma)} L_{n, Des(sigma^{-1})}.
QSymElem llt(const SimpleGraph& g);
// M_beta coefficient = sum_{w in R(beta)} q^{inv_G(w)}.
QSymElem llt_monomial(const SimpleGraph& g);

// sum over sigma with CoInv_G(sigma) = CoInv_G(F) of L_{n, Des_G(sigma^{-1})}.
QSymElem forest_qsym(const IntervalGraph& g, const IncreasingForest& f);
// sum over proper packed colorings with Phi_G(kappa) = F of M_{ev(kappa)}.
QSymElem forest_qsym_monomial(const IntervalGraph& g, const IncreasingForest& f);

// sum_{F in ISF(G)} q^{wt_G(F)} forest_qsym(G, F).
QSymElem chromatic_from_forests(const IntervalGraph& g);

}  // namespace qchroma
