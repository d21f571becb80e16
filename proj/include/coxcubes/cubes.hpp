#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxcubes/typea.hpp"

namespace coxcubes {

// Commuting square with w*x = y*z and w(Phi_x) = Phi_y; traversal order is
// x-then-w on one side, z-then-y on the other (later edges multiply on the
// left).
struct CoxeterSquare {
  Permutation w, x, y, z;

  bool operator==(const CoxeterSquare&) const = default;
};

enum class ReorientMove { diagonal, flip_horizontal, flip_vertical };

bool square_validate(const CoxeterSquare& q);

// Candidate (x1, x1^{-1}(x1 v x2), x2, x2^{-1}(x1 v x2)); nullopt unless it
// validates.
std::optional<CoxeterSquare> square_complete(const Permutation& x1,
                                             const Permutation& x2);

CoxeterSquare square_reorient(const CoxeterSquare& q, ReorientMove move);

// Edge label: string over {0,1,*} of length n with exactly one '*', naming the
// directed edge from the 0-substitution vertex to the 1-substitution vertex.
using EdgeLabel = std::string;

// Oriented n-cube with non-identity edge labels; every 2-face is a Coxeter
// square, which forces path-product consistency.
class CoxeterCube {
 public:
  CoxeterCube(int rank, std::map<EdgeLabel, Permutation> edges);

  int rank() const { return rank_; }
  int ambient_rank() const;
  const std::map<EdgeLabel, Permutation>& edges() const { return edges_; }
  const Permutation& edge(const EdgeLabel& label) const;

  // Terminal edge of direction k: '*' at position k, '1' elsewhere.
  Permutation terminal_edge(int k) const;
  std::vector<Permutation> terminal_edges() const;

  bool operator==(const CoxeterCube&) const = default;

 private:
  int rank_;
  std::map<EdgeLabel, Permutation> edges_;
};

// The 2-face of c spanning directions p < q with the remaining coordinates
// fixed by `fixed` (fixed[i] in {'0','1'} for i != p,q).
CoxeterSquare cube_face(const CoxeterCube& c, int p, int q,
                        const std::string& fixed);

bool cube_validate(const CoxeterCube& c);

// Closed-form reconstruction: the edge with '*' at k and 1-set A is
// (v_{i not in A, i != k} x_i)^{-1} * (v_{i not in A} x_i).  Returns the cube
// only if it validates.
std::optional<CoxeterCube> cube_from_terminal_edges(
    const std::vector<Permutation>& terminal);

// Reverses every edge parallel to direction k; terminal edges become
// {x_k^{-1}} in direction k and x_k^{-1}(x_i v x_k) in direction i.
CoxeterCube cube_flip(const CoxeterCube& c, int k);

// Minimum terminal-edge set over the flip orbit, compared elementwise after
// sorting by (length, one-line notation).
std::vector<Permutation> cube_canonical(const CoxeterCube& c);

// (n-1)-cube with x_i, x_j replaced by x_i v x_j.
CoxeterCube cube_collapse(const CoxeterCube& c, int i, int j);

// Cube on the union of the terminal edges; requires the two support index
// sets to be orthogonal (no equal or adjacent generator indices).
CoxeterCube product_cube(const CoxeterCube& X, const CoxeterCube& Y);

// Inductive construction: start from the 1-cube on s_{c_1}; at each step
// adjoin nu(alpha_{c_{k+1}}, Pi_{J_k}) as the new terminal edge and conjugate
// the existing terminal edges by it.  Default choices are 1, 2, ..., n.
CoxeterCube construct_inductive(int rank, const std::vector<int>& alpha_choices = {});

// All dim-subsets of non-identity elements of A_rank with pairwise disjoint
// inversion sets that assemble into a valid cube; independent of the
// partition/tree machinery.
std::vector<CoxeterCube> enumerate_cubes_brute(int rank, int dim);

}  // namespace coxcubes
