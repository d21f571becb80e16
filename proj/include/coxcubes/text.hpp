#pragma once

#include <string>

#include "coxcubes/cubes.hpp"
#include "coxcubes/generic.hpp"
#include "coxcubes/rect_trees.hpp"
#include "coxcubes/typea.hpp"

namespace coxcubes::text {

// Accepts one-line notation "[3,1,2]" and word notation "s2 s1" / "s2*s1";
// the empty word may be written "e" or "1".
Permutation parse_element(int rank, const std::string& s);

// Accepts "(1,3)" and coefficient notation "a1+a2" (consecutive indices).
Root parse_root(const std::string& s);

GeneratorSet parse_generator_set(int rank, const std::string& s);  // "1,3"

Word parse_word(const std::string& s);  // "2 1" or "s2 s1"

// JSON forms.  Permutations are one-line arrays; cubes are
// {"rank":n,"edges":{"*11":[...],...}}; partitions are
// {"rank":n,"rectangles":[[lo,base,hi],...]}; trees are nested arrays with 0
// for leaves; Coxeter matrices are {"size":n,"m":[[...]]} with 0 for infinity.
std::string to_json(const Permutation& x);
std::string to_json(const CoxeterCube& c);
std::string to_json(const RectanglePartition& P);
std::string to_json(const BinaryTree& t);

Permutation permutation_from_json(const std::string& s);
CoxeterCube cube_from_json(const std::string& s);
RectanglePartition partition_from_json(const std::string& s);
BinaryTree tree_from_json(const std::string& s);
generic::CoxeterMatrix matrix_from_json(const std::string& s);

// DOT renderers: cube vertices are binary strings with labeled directed
// edges; trees are drawn root-down.
std::string to_dot(const CoxeterCube& c);
std::string to_dot(const BinaryTree& t);

// ASCII root-poset diamond: root (i,j) sits at column i+j, row by depth
// (highest root on top); each root shows the letter of its rectangle.
std::string to_ascii(const RectanglePartition& P);

}  // namespace coxcubes::text
