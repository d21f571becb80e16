#pragma once

#include <optional>
#include <vector>

#include "coxcubes/cubes.hpp"
#include "coxcubes/typea.hpp"

namespace coxcubes {

// Grid {(p,q) : lo <= p <= base < q <= hi} in the A_n root poset; the
// inversion set of a bigrassmannian element.
struct BasedRectangle {
  int lo = 0;
  int base = 0;
  int hi = 0;

  auto operator<=>(const BasedRectangle&) const = default;
};

// Partition of the positive roots of A_n into n based rectangles.
struct RectanglePartition {
  int rank = 0;
  std::set<BasedRectangle> rectangles;

  auto operator<=>(const RectanglePartition&) const = default;
};

// Full binary tree: zero children (leaf) or exactly two.
struct BinaryTree {
  std::vector<BinaryTree> kids;

  bool is_leaf() const { return kids.empty(); }
  int leaves() const;
  // Nested-array form, 0 for a leaf: "[[0,0],0]".
  std::string str() const;

  bool operator==(const BinaryTree&) const = default;

  static BinaryTree leaf() { return {}; }
  static BinaryTree node(BinaryTree l, BinaryTree r);
};

// Generator interval {s_a, ..., s_c}; its parabolic positive roots form a
// subtriangle of the root poset.
struct SubtriangleInterval {
  int a = 0;
  int c = 0;

  auto operator<=>(const SubtriangleInterval&) const = default;
};

RootSet rectangle_roots(const BasedRectangle& R);
Permutation element_of_rectangle(int rank, const BasedRectangle& R);
std::optional<BasedRectangle> rectangle_of_element(const Permutation& x);

bool partition_valid(const RectanglePartition& P);

// Terminal-edge rectangles of an n-cube in A_n; total by the partition
// theorem.
RectanglePartition partition_of_cube(const CoxeterCube& c);

// Cube with terminal edges element_of_rectangle(R), directions in sorted
// rectangle order.
CoxeterCube cube_of_partition(const RectanglePartition& P);

// Intervals whose parabolic triangle is a union of P's rectangles; always n
// of them.
std::set<SubtriangleInterval> compatible_subtriangles(const RectanglePartition& P);

// Mirror the rectangles inside T across the vertical axis of the subtriangle.
RectanglePartition flip_subtriangle(const RectanglePartition& P,
                                    const SubtriangleInterval& T);

BinaryTree partition_to_tree(const RectanglePartition& P);
RectanglePartition tree_to_partition(int rank, const BinaryTree& t);

// Mirror the subtree at the given path (0 = left child, 1 = right child).
BinaryTree tree_flip(const BinaryTree& t, const std::vector<int>& path);

// Isomorphism-class representative: children canonicalized and ordered by
// (leaf count, serialized form).
BinaryTree tree_canonical(const BinaryTree& t);

std::vector<BinaryTree> all_ordered_trees(int leaves);

std::vector<RectanglePartition> enumerate_partitions(int rank);

// Cube classes modulo reorientation, one representative per canonical tree.
struct CubeClasses {
  int count = 0;
  std::vector<CoxeterCube> representatives;
};

CubeClasses enumerate_cube_classes(int rank);

// All elements appearing as an edge of some cube orientation: exactly the
// based-rectangle elements; |edge_set(n)| = C(n+2,3).
std::set<Permutation> edge_set(int rank);

}  // namespace coxcubes
