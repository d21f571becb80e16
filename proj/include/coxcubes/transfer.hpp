#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxcubes/typea.hpp"

namespace coxcubes {

// The equation w(Phi_x) = Phi_y on left inversion sets.

// True iff {w(beta) : beta in Phi_x} = Phi_y with every image positive.
bool transfer_check(const Permutation& w, const Permutation& x,
                    const Permutation& y);

// The unique y with Phi_y = w(Phi_x), when the image is positive and is a
// valid inversion set; nullopt otherwise.
std::optional<Permutation> transfer_image(const Permutation& w,
                                          const Permutation& x);

// All w (identity included) with transfer_check(w, x, y).  Candidates are
// pruned to right divisors of w_0 x^{-1}.
std::vector<Permutation> solve_transfers(const Permutation& x,
                                         const Permutation& y);

// Root encoding of w N(x) w^{-1}: images of Phi_x with signs dropped.
RootSet cocycle_conjugate(const Permutation& w, const Permutation& x);

// True iff u = g w with l(u) = l(g) + l(w) for some g.
bool right_divisor_check(const Permutation& w, const Permutation& u);

// The always-valid transfer (w_0 x^{-1})(Phi_x) = Phi_{w_0 x^{-1} w_0}.
std::pair<Permutation, Permutation> w0_transfer(const Permutation& x);

// Exhaustive check: for l(x) = l(w_0) - 1, any non-identity transfer forces
// x = y.  Returns true when no counterexample exists.
bool near_longest_rigidity(int rank);

}  // namespace coxcubes
