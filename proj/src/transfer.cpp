#include "coxcubes/transfer.hpp"

#include <algorithm>
#include <queue>

namespace coxcubes {

static void require_same_rank(const Permutation& x, const Permutation& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
}

bool transfer_check(const Permutation& w, const Permutation& x,
                    const Permutation& y) {
  require_same_rank(w, x);
  require_same_rank(w, y);
  RootSet image;
  for (const Root& beta : inversion_set(x)) {
    SignedRoot im = act(w, beta);
    if (!im.positive) return false;
    image.insert(im.root);
  }
  return image == inversion_set(y);
}

std::optional<Permutation> transfer_image(const Permutation& w,
                                          const Permutation& x) {
  require_same_rank(w, x);
  RootSet image;
  for (const Root& beta : inversion_set(x)) {
    SignedRoot im = act(w, beta);
    if (!im.positive) return std::nullopt;
    image.insert(im.root);
  }
  if (!is_inversion_set(w.rank(), image)) return std::nullopt;
  return permutation_from_inversion_set(w.rank(), image);
}

RootSet cocycle_conjugate(const Permutation& w, const Permutation& x) {
  require_same_rank(w, x);
  RootSet out;
  for (const Root& beta : inversion_set(x)) out.insert(act(w, beta).root);
  return out;
}

bool right_divisor_check(const Permutation& w, const Permutation& u) {
  require_same_rank(w, u);
  return leq_weak_right(w.inverse(), u.inverse());
}

std::vector<Permutation> solve_transfers(const Permutation& x,
                                         const Permutation& y) {
  require_same_rank(x, y);
  int rank = x.rank();
  if (length(x) != length(y)) return {};
  // Candidates: right divisors of u = w_0 x^{-1}, i.e. elements of the weak
  // order lower set of u^{-1}, inverted.  BFS downward from u^{-1}.
  Permutation uinv = compose(longest_element(rank), x.inverse()).inverse();
  std::set<Permutation> seen{uinv};
  std::queue<Permutation> frontier;
  frontier.push(uinv);
  std::vector<Permutation> out;
  while (!frontier.empty()) {
    Permutation v = frontier.front();
    frontier.pop();
    Permutation w = v.inverse();
    if (transfer_check(w, x, y)) out.push_back(w);
    for (int i = 1; i <= rank; ++i) {
      // Right descents of v give the shorter elements v s_i below v.
      if (v(i) > v(i + 1)) {
        Permutation shorter = compose(v, Permutation::simple(rank, i));
        if (seen.insert(shorter).second) frontier.push(shorter);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Permutation, Permutation> w0_transfer(const Permutation& x) {
  Permutation w0 = longest_element(x.rank());
  Permutation w = compose(w0, x.inverse());
  Permutation y = compose(w, w0);
  return {w, y};
}

bool near_longest_rigidity(int rank) {
  if (rank > 4) throw std::invalid_argument("rank too large for exhaustion");
  int target = length(longest_element(rank)) - 1;
  std::vector<Permutation> all = all_elements(rank);
  for (const Permutation& x : all) {
    if (length(x) != target) continue;
    for (const Permutation& y : all) {
      if (length(y) != target) continue;
      for (const Permutation& w : all) {
        if (w.is_identity()) continue;
        if (transfer_check(w, x, y) && !(x == y)) return false;
      }
    }
  }
  return true;
}

}  // namespace coxcubes
