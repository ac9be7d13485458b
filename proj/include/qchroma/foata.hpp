#pragma once
#include "qchroma/coloring.hpp"
#include "qchroma/graph.hpp"

namespace qchroma {

// One insertion step of the modified Foata map. Positions j with w_j > x and
// {x, w_j} not an edge form R; the rest form L. If the last position is in R,
// blocks end at R-positions, otherwise at L-positions; each block v x_j
// rotates to x_j v. Throws std::logic_error if some i in R and j in L have
// w_j >= w_i (cannot happen when the graph is interval).
Word gamma_step(const SimpleGraph& g, const Word& w, int x);

// phi(w x) = gamma_x(phi(w)) x; a bijection on S_n with
// inv(phi(sigma)) = tilde_inv(sigma) + maj_comp(sigma).
Word phi_foata(const IntervalGraph& g, const Word& sigma);
// Inverse: the final letter is sigma's last letter; the case and block
// boundaries of the preceding prefix are recovered from its first letter.
Word phi_foata_inv(const IntervalGraph& g, const Word& tau);

}  // namespace qchroma
