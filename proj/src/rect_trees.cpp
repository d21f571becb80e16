#include "coxcubes/rect_trees.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace coxcubes {

int BinaryTree::leaves() const {
  if (is_leaf()) return 1;
  return kids[0].leaves() + kids[1].leaves();
}

std::string BinaryTree::str() const {
  if (is_leaf()) return "0";
  return "[" + kids[0].str() + "," + kids[1].str() + "]";
}

BinaryTree BinaryTree::node(BinaryTree l, BinaryTree r) {
  BinaryTree t;
  t.kids.push_back(std::move(l));
  t.kids.push_back(std::move(r));
  return t;
}

static void check_rectangle(const BasedRectangle& R) {
  if (!(1 <= R.lo && R.lo <= R.base && R.base < R.hi))
    throw std::invalid_argument("malformed based rectangle");
}

RootSet rectangle_roots(const BasedRectangle& R) {
  check_rectangle(R);
  RootSet out;
  for (int p = R.lo; p <= R.base; ++p)
    for (int q = R.base + 1; q <= R.hi; ++q) out.insert(Root{p, q});
  return out;
}

Permutation element_of_rectangle(int rank, const BasedRectangle& R) {
  if (R.hi > rank + 1) throw std::invalid_argument("rectangle exceeds rank");
  return permutation_from_inversion_set(rank, rectangle_roots(R));
}

std::optional<BasedRectangle> rectangle_of_element(const Permutation& x) {
  RootSet inv = inversion_set(x);
  if (inv.empty()) return std::nullopt;
  int lo = inv.begin()->lo, hi = 0, base = 0, min_q = x.size() + 1;
  for (const Root& r : inv) {
    lo = std::min(lo, r.lo);
    base = std::max(base, r.lo);
    hi = std::max(hi, r.hi);
    min_q = std::min(min_q, r.hi);
  }
  if (min_q != base + 1) return std::nullopt;
  BasedRectangle R{lo, base, hi};
  if (rectangle_roots(R) != inv) return std::nullopt;
  return R;
}

bool partition_valid(const RectanglePartition& P) {
  if (P.rank < 1) return false;
  if (static_cast<int>(P.rectangles.size()) != P.rank) return false;
  RootSet covered;
  for (const BasedRectangle& R : P.rectangles) {
    if (R.lo < 1 || R.hi > P.rank + 1 || R.lo > R.base || R.base >= R.hi)
      return false;
    for (const Root& r : rectangle_roots(R))
      if (!covered.insert(r).second) return false;
  }
  return covered == all_positive_roots(P.rank);
}

RectanglePartition partition_of_cube(const CoxeterCube& c) {
  RectanglePartition P;
  P.rank = c.rank();
  for (const Permutation& x : c.terminal_edges()) {
    auto R = rectangle_of_element(x);
    if (!R)
      throw std::invalid_argument(
          "terminal edge inversion set is not a based rectangle");
    P.rectangles.insert(*R);
  }
  if (!partition_valid(P))
    throw std::invalid_argument("terminal edges do not partition the root poset");
  return P;
}

CoxeterCube cube_of_partition(const RectanglePartition& P) {
  if (!partition_valid(P)) throw std::invalid_argument("invalid partition");
  std::vector<Permutation> terminal;
  for (const BasedRectangle& R : P.rectangles)
    terminal.push_back(element_of_rectangle(P.rank, R));
  auto cube = cube_from_terminal_edges(terminal);
  if (!cube) throw std::logic_error("partition failed to assemble into a cube");
  return *cube;
}

std::set<SubtriangleInterval> compatible_subtriangles(
    const RectanglePartition& P) {
  if (!partition_valid(P)) throw std::invalid_argument("invalid partition");
  std::set<SubtriangleInterval> out;
  for (int a = 1; a <= P.rank; ++a)
    for (int c = a; c <= P.rank; ++c) {
      bool ok = true;
      for (const BasedRectangle& R : P.rectangles) {
        bool inside = R.lo >= a && R.hi <= c + 1;
        bool meets =
            std::max(R.lo, a) <= R.base && R.base + 1 <= std::min(R.hi, c + 1);
        if (meets && !inside) {
          ok = false;
          break;
        }
      }
      if (ok) out.insert(SubtriangleInterval{a, c});
    }
  return out;
}

RectanglePartition flip_subtriangle(const RectanglePartition& P,
                                    const SubtriangleInterval& T) {
  if (!compatible_subtriangles(P).count(T))
    throw std::invalid_argument("subtriangle is not compatible with the partition");
  RectanglePartition out;
  out.rank = P.rank;
  int s = T.a + T.c + 1;  // mirror on [a, c+1] sends t to s - t
  for (const BasedRectangle& R : P.rectangles) {
    if (R.lo >= T.a && R.hi <= T.c + 1)
      out.rectangles.insert(BasedRectangle{s - R.hi, s - R.base - 1, s - R.lo});
    else
      out.rectangles.insert(R);
  }
  return out;
}

static const BasedRectangle& rect_containing(const RectanglePartition& P,
                                             const Root& r) {
  for (const BasedRectangle& R : P.rectangles)
    if (R.lo <= r.lo && r.lo <= R.base && R.base < r.hi && r.hi <= R.hi)
      return R;
  throw std::logic_error("partition does not cover the root poset");
}

static BinaryTree tree_of_interval(const RectanglePartition& P, int a, int c) {
  if (c < a) return BinaryTree::leaf();
  const BasedRectangle& R = rect_containing(P, Root{a, c + 1});
  return BinaryTree::node(tree_of_interval(P, a, R.base - 1),
                          tree_of_interval(P, R.base + 1, c));
}

BinaryTree partition_to_tree(const RectanglePartition& P) {
  if (!partition_valid(P)) throw std::invalid_argument("invalid partition");
  return tree_of_interval(P, 1, P.rank);
}

static void partition_of_interval(const BinaryTree& t, int a, int c,
                                  RectanglePartition& out) {
  if (c < a) {
    if (!t.is_leaf()) throw std::invalid_argument("leaf count mismatch");
    return;
  }
  if (t.is_leaf()) throw std::invalid_argument("leaf count mismatch");
  int b = a + t.kids[0].leaves() - 1;
  if (b > c) throw std::invalid_argument("leaf count mismatch");
  out.rectangles.insert(BasedRectangle{a, b, c + 1});
  partition_of_interval(t.kids[0], a, b - 1, out);
  partition_of_interval(t.kids[1], b + 1, c, out);
}

RectanglePartition tree_to_partition(int rank, const BinaryTree& t) {
  if (t.leaves() != rank + 1) throw std::invalid_argument("leaf count mismatch");
  RectanglePartition out;
  out.rank = rank;
  partition_of_interval(t, 1, rank, out);
  return out;
}

BinaryTree tree_flip(const BinaryTree& t, const std::vector<int>& path) {
  BinaryTree out = t;
  BinaryTree* cur = &out;
  for (int step : path) {
    if (cur->is_leaf() || (step != 0 && step != 1))
      throw std::invalid_argument("invalid tree path");
    cur = &cur->kids[step];
  }
  // Mirror the subtree rooted here, recursively.
  struct Mirror {
    static BinaryTree apply(const BinaryTree& t) {
      if (t.is_leaf()) return t;
      return BinaryTree::node(apply(t.kids[1]), apply(t.kids[0]));
    }
  };
  *cur = Mirror::apply(*cur);
  return out;
}

BinaryTree tree_canonical(const BinaryTree& t) {
  if (t.is_leaf()) return t;
  BinaryTree l = tree_canonical(t.kids[0]);
  BinaryTree r = tree_canonical(t.kids[1]);
  auto key = [](const BinaryTree& x) {
    return std::make_pair(x.leaves(), x.str());
  };
  if (key(r) < key(l)) std::swap(l, r);
  return BinaryTree::node(std::move(l), std::move(r));
}

std::vector<BinaryTree> all_ordered_trees(int leaves) {
  if (leaves < 1) throw std::invalid_argument("need at least one leaf");
  if (leaves == 1) return {BinaryTree::leaf()};
  std::vector<BinaryTree> out;
  for (int m = 1; m < leaves; ++m)
    for (const BinaryTree& l : all_ordered_trees(m))
      for (const BinaryTree& r : all_ordered_trees(leaves - m))
        out.push_back(BinaryTree::node(l, r));
  return out;
}

std::vector<RectanglePartition> enumerate_partitions(int rank) {
  if (rank > 10) throw std::invalid_argument("rank exceeds enumeration bound");
  std::vector<RectanglePartition> out;
  for (const BinaryTree& t : all_ordered_trees(rank + 1))
    out.push_back(tree_to_partition(rank, t));
  return out;
}

CubeClasses enumerate_cube_classes(int rank) {
  if (rank > 10) throw std::invalid_argument("rank exceeds enumeration bound");
  std::map<std::string, RectanglePartition> classes;
  for (const RectanglePartition& P : enumerate_partitions(rank))
    classes.emplace(tree_canonical(partition_to_tree(P)).str(), P);
  CubeClasses out;
  out.count = static_cast<int>(classes.size());
  for (const auto& [key, P] : classes)
    out.representatives.push_back(cube_of_partition(P));
  return out;
}

std::set<Permutation> edge_set(int rank) {
  if (rank > 12) throw std::invalid_argument("rank exceeds enumeration bound");
  std::set<Permutation> out;
  for (int lo = 1; lo <= rank; ++lo)
    for (int base = lo; base <= rank; ++base)
      for (int hi = base + 1; hi <= rank + 1; ++hi)
        out.insert(element_of_rectangle(rank, BasedRectangle{lo, base, hi}));
  return out;
}

}  // namespace coxcubes
