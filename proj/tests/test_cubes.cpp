#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coxcubes/cubes.hpp"
#include "coxcubes/transfer.hpp"

using namespace coxcubes;

namespace {

Permutation word_to_perm(int rank, const Word& w) {
  Permutation out = Permutation::identity(rank);
  for (int letter : w) out = compose(out, Permutation::simple(rank, letter));
  return out;
}

std::set<Permutation> terminal_set(const CoxeterCube& c) {
  auto t = c.terminal_edges();
  return {t.begin(), t.end()};
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("square validation") {
  Permutation s1 = Permutation::simple(2, 1), s2 = Permutation::simple(2, 2);
  Permutation s1s2 = word_to_perm(2, {1, 2});
  CHECK(square_validate({s1s2, s1, s2, s1s2}));
  CHECK_FALSE(square_validate({Permutation::identity(2), s1, s2, s1s2}));
  Permutation a1 = Permutation::simple(3, 1), a3 = Permutation::simple(3, 3);
  CHECK(square_validate({a1, a3, a3, a1}));
  // Commuting but no inversion-set transfer.
  CHECK_FALSE(square_validate({s1, s2, s1, s2}));
}

TEST_CASE("square completion") {
  Permutation s1 = Permutation::simple(2, 1), s2 = Permutation::simple(2, 2);
  Permutation s1s2 = word_to_perm(2, {1, 2});
  auto q = square_complete(s1s2, s2);
  REQUIRE(q.has_value());
  CHECK(*q == CoxeterSquare{s1s2, s1, s2, s1s2});
  CHECK_FALSE(square_complete(s1, s2).has_value());
  Permutation a1 = Permutation::simple(3, 1), a3 = Permutation::simple(3, 3);
  auto orth = square_complete(a1, a3);
  REQUIRE(orth.has_value());
  CHECK(*orth == CoxeterSquare{a1, a3, a3, a1});
}

TEST_CASE("square reorientation") {
  Permutation s1 = Permutation::simple(2, 1), s2 = Permutation::simple(2, 2);
  Permutation s1s2 = word_to_perm(2, {1, 2});
  Permutation s2s1 = word_to_perm(2, {2, 1});
  CoxeterSquare q{s1s2, s1, s2, s1s2};
  CHECK(square_reorient(q, ReorientMove::diagonal) ==
        CoxeterSquare{s2, s1s2, s1s2, s1});
  CHECK(square_reorient(q, ReorientMove::flip_horizontal) ==
        CoxeterSquare{s2s1, s2, s1, s2s1});
  CHECK(square_reorient(square_reorient(q, ReorientMove::flip_horizontal),
                        ReorientMove::flip_horizontal) == q);
  for (ReorientMove move : {ReorientMove::diagonal, ReorientMove::flip_horizontal,
                            ReorientMove::flip_vertical})
    CHECK(square_validate(square_reorient(q, move)));
}

TEST_CASE("reorientations of valid squares stay valid, exhaustively on A_2") {
  for (const Permutation& w : all_elements(2))
    for (const Permutation& x : all_elements(2))
      for (const Permutation& y : all_elements(2)) {
        if (w.is_identity() || x.is_identity() || y.is_identity()) continue;
        Permutation z = compose(y.inverse(), w, x);
        CoxeterSquare q{w, x, y, z};
        if (!square_validate(q)) continue;
        for (ReorientMove move :
             {ReorientMove::diagonal, ReorientMove::flip_horizontal,
              ReorientMove::flip_vertical})
          CHECK(square_validate(square_reorient(q, move)));
      }
}

TEST_CASE("join decomposition of valid squares on A_3") {
  for (const Permutation& w : all_elements(3))
    for (const Permutation& x : all_elements(3))
      for (const Permutation& y : all_elements(3)) {
        if (w.is_identity() || x.is_identity() || y.is_identity()) continue;
        Permutation z = compose(y.inverse(), w, x);
        if (z.is_identity()) continue;
        if (!square_validate({w, x, y, z})) continue;
        Permutation wx = compose(w, x);
        CHECK(join(w, y) == wx);
        RootSet iw = inversion_set(w), iy = inversion_set(y);
        RootSet both = iw;
        both.insert(iy.begin(), iy.end());
        CHECK(both.size() == iw.size() + iy.size());
        CHECK(both == inversion_set(wx));
      }
}

TEST_CASE("the two A_3 cubes reconstruct from their terminal edges") {
  std::vector<Permutation> right{Permutation::simple(3, 1),
                                 Permutation::simple(3, 3),
                                 word_to_perm(3, {2, 1, 3, 2})};
  auto rc = cube_from_terminal_edges(right);
  REQUIRE(rc.has_value());
  CHECK(cube_validate(*rc));
  CHECK(rc->edges().size() == 12);
  CHECK(as_set(rc->terminal_edges()) == as_set(right));

  std::vector<Permutation> left{Permutation::simple(3, 3),
                                word_to_perm(3, {2, 3}),
                                word_to_perm(3, {1, 2, 3})};
  auto lc = cube_from_terminal_edges(left);
  REQUIRE(lc.has_value());
  CHECK(cube_validate(*lc));

  CHECK_FALSE(cube_from_terminal_edges({Permutation::simple(2, 1),
                                        Permutation::simple(2, 2)})
                  .has_value());
}

TEST_CASE("rank-1 cube") {
  auto c = cube_from_terminal_edges({Permutation::simple(1, 1)});
  REQUIRE(c.has_value());
  CHECK(cube_validate(*c));
  CHECK(cube_canonical(*c) ==
        std::vector<Permutation>{Permutation::simple(1, 1)});
}

TEST_CASE("tampered cubes fail validation") {
  auto c = *cube_from_terminal_edges({Permutation::simple(3, 1),
                                      Permutation::simple(3, 3),
                                      word_to_perm(3, {2, 1, 3, 2})});
  auto edges = c.edges();
  edges["*11"] = Permutation::identity(3);
  CHECK_FALSE(cube_validate(CoxeterCube(3, edges)));
  edges = c.edges();
  edges["*00"] = word_to_perm(3, {2});
  CHECK_FALSE(cube_validate(CoxeterCube(3, edges)));
}

TEST_CASE("cube flips") {
  auto right = *cube_from_terminal_edges({Permutation::simple(3, 1),
                                          Permutation::simple(3, 3),
                                          word_to_perm(3, {2, 1, 3, 2})});
  for (int k = 1; k <= 3; ++k) {
    CoxeterCube flipped = cube_flip(right, k);
    CHECK(cube_validate(flipped));
    CHECK(terminal_set(flipped) == terminal_set(right));
    CHECK(terminal_set(cube_flip(flipped, k)) == terminal_set(right));
  }
  auto square = *cube_from_terminal_edges(
      {word_to_perm(2, {1, 2}), Permutation::simple(2, 2)});
  CoxeterCube flipped = cube_flip(square, 1);
  CHECK(terminal_set(flipped) ==
        std::set<Permutation>{word_to_perm(2, {2, 1}),
                              Permutation::simple(2, 1)});
  CHECK(cube_flip(cube_flip(square, 2), 2) == square);
}

TEST_CASE("canonical form is a flip-orbit invariant") {
  auto a = *cube_from_terminal_edges(
      {word_to_perm(2, {1, 2}), Permutation::simple(2, 2)});
  auto b = *cube_from_terminal_edges(
      {word_to_perm(2, {2, 1}), Permutation::simple(2, 1)});
  CHECK(cube_canonical(a) == cube_canonical(b));
  auto right = *cube_from_terminal_edges({Permutation::simple(3, 1),
                                          Permutation::simple(3, 3),
                                          word_to_perm(3, {2, 1, 3, 2})});
  CHECK(as_set(cube_canonical(right)) == terminal_set(right));
}

TEST_CASE("cube collapse") {
  auto left = *cube_from_terminal_edges({Permutation::simple(3, 3),
                                         word_to_perm(3, {2, 3}),
                                         word_to_perm(3, {1, 2, 3})});
  // Directions 1 and 2 carry s3 and s2s3.
  CoxeterCube sq = cube_collapse(left, 1, 2);
  CHECK(terminal_set(sq) == std::set<Permutation>{word_to_perm(3, {1, 2, 3}),
                                                  word_to_perm(3, {2, 3, 2})});
  auto square = *cube_from_terminal_edges(
      {word_to_perm(2, {1, 2}), Permutation::simple(2, 2)});
  CoxeterCube line = cube_collapse(square, 1, 2);
  CHECK(line.rank() == 1);
  CHECK(line.terminal_edge(1) == longest_element(2));

  auto right = *cube_from_terminal_edges({Permutation::simple(3, 1),
                                          Permutation::simple(3, 3),
                                          word_to_perm(3, {2, 1, 3, 2})});
  CoxeterCube collapsed = cube_collapse(right, 1, 2);
  CHECK(terminal_set(collapsed) ==
        std::set<Permutation>{
            compose(Permutation::simple(3, 1), Permutation::simple(3, 3)),
            word_to_perm(3, {2, 1, 3, 2})});
}

TEST_CASE("product cubes") {
  auto one = *cube_from_terminal_edges({Permutation::simple(3, 1)});
  auto three = *cube_from_terminal_edges({Permutation::simple(3, 3)});
  CoxeterCube prod = product_cube(one, three);
  CHECK(terminal_set(prod) == std::set<Permutation>{Permutation::simple(3, 1),
                                                    Permutation::simple(3, 3)});
  CHECK_THROWS_AS(product_cube(one, one), std::invalid_argument);
  auto two = *cube_from_terminal_edges({Permutation::simple(3, 2)});
  CHECK_THROWS_AS(product_cube(one, two), std::invalid_argument);

  auto sq = *cube_from_terminal_edges(
      {word_to_perm(4, {1, 2}), Permutation::simple(4, 2)});
  auto s4 = *cube_from_terminal_edges({Permutation::simple(4, 4)});
  CoxeterCube triple = product_cube(sq, s4);
  CHECK(triple.rank() == 3);
  CHECK(cube_validate(triple));
  CHECK(terminal_set(triple) ==
        std::set<Permutation>{word_to_perm(4, {1, 2}),
                              Permutation::simple(4, 2),
                              Permutation::simple(4, 4)});
}

TEST_CASE("every square inside W_{s1,s3} of A_3 is a product cube") {
  RootSet allowed = parabolic_positive_roots(3, {1, 3});
  std::vector<Permutation> members;
  for (const Permutation& x : all_elements(3)) {
    RootSet inv = inversion_set(x);
    if (!x.is_identity() &&
        std::includes(allowed.begin(), allowed.end(), inv.begin(), inv.end()))
      members.push_back(x);
  }
  int squares = 0;
  for (const Permutation& x1 : members)
    for (const Permutation& x2 : members) {
      auto q = square_complete(x1, x2);
      if (!q) continue;
      ++squares;
      auto a = cube_from_terminal_edges({x1});
      auto b = cube_from_terminal_edges({x2});
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      CoxeterCube prod = product_cube(*a, *b);
      auto direct = cube_from_terminal_edges({x1, x2});
      REQUIRE(direct.has_value());
      CHECK(prod.edges() == direct->edges());
    }
  CHECK(squares > 0);
}

TEST_CASE("inductive construction") {
  auto square = construct_inductive(2);
  CHECK(terminal_set(square) == std::set<Permutation>{Permutation::simple(2, 2),
                                                      word_to_perm(2, {1, 2})});
  CHECK(cube_face(square, 1, 2, "00") ==
        CoxeterSquare{word_to_perm(2, {1, 2}), Permutation::simple(2, 1),
                      Permutation::simple(2, 2), word_to_perm(2, {1, 2})});

  auto one = construct_inductive(1);
  CHECK(one.terminal_edge(1) == Permutation::simple(1, 1));

  auto three = construct_inductive(3);
  CHECK(cube_validate(three));
  auto canon = cube_canonical(three);
  auto left = cube_canonical(*cube_from_terminal_edges(
      {Permutation::simple(3, 3), word_to_perm(3, {2, 3}),
       word_to_perm(3, {1, 2, 3})}));
  auto right = cube_canonical(*cube_from_terminal_edges(
      {Permutation::simple(3, 1), Permutation::simple(3, 3),
       word_to_perm(3, {2, 1, 3, 2})}));
  CHECK((canon == left || canon == right));

  CHECK_THROWS_AS(construct_inductive(3, {1, 1, 2}), std::invalid_argument);
  CHECK(cube_validate(construct_inductive(3, {2, 1, 3})));
}

TEST_CASE("brute-force enumeration structure checks, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    auto cubes = enumerate_cubes_brute(n, n);
    CHECK(!cubes.empty());
    for (const CoxeterCube& c : cubes) {
      auto t = c.terminal_edges();
      int total = 0;
      RootSet covered;
      bool simple_edge = false;
      for (const Permutation& x : t) {
        total += length(x);
        RootSet inv = inversion_set(x);
        covered.insert(inv.begin(), inv.end());
        if (length(x) == 1) simple_edge = true;
      }
      CHECK(total == n * (n + 1) / 2);
      CHECK(covered == all_positive_roots(n));
      CHECK(simple_edge);
      // Removing one terminal edge determines it as the complement.
      for (size_t drop = 0; drop < t.size(); ++drop) {
        RootSet rest;
        for (size_t i = 0; i < t.size(); ++i)
          if (i != drop) {
            RootSet inv = inversion_set(t[i]);
            rest.insert(inv.begin(), inv.end());
          }
        RootSet missing;
        for (const Root& r : all_positive_roots(n))
          if (!rest.count(r)) missing.insert(r);
        CHECK(permutation_from_inversion_set(n, missing) == t[drop]);
      }
      // Reconstruction from extracted terminal edges is the identity.
      auto again = cube_from_terminal_edges(t);
      REQUIRE(again.has_value());
      CHECK(again->edges() == c.edges());
    }
  }
}

TEST_CASE("no 3-cube in A_2") {
  CHECK(enumerate_cubes_brute(2, 3).empty());
}
