#include "coxcubes/cubes.hpp"

#include <algorithm>
#include <queue>

#include "coxcubes/groupoid.hpp"
#include "coxcubes/transfer.hpp"

namespace coxcubes {

bool square_validate(const CoxeterSquare& q) {
  if (q.w.rank() != q.x.rank() || q.w.rank() != q.y.rank() ||
      q.w.rank() != q.z.rank())
    throw std::invalid_argument("rank mismatch");
  if (q.w.is_identity() || q.x.is_identity() || q.y.is_identity() ||
      q.z.is_identity())
    return false;
  if (!(compose(q.w, q.x) == compose(q.y, q.z))) return false;
  return transfer_check(q.w, q.x, q.y);
}

std::optional<CoxeterSquare> square_complete(const Permutation& x1,
                                             const Permutation& x2) {
  if (x1.is_identity() || x2.is_identity())
    throw std::invalid_argument("terminal edges must be non-identity");
  Permutation j = join(x1, x2);
  CoxeterSquare q{x1, compose(x1.inverse(), j), x2, compose(x2.inverse(), j)};
  if (!square_validate(q)) return std::nullopt;
  return q;
}

CoxeterSquare square_reorient(const CoxeterSquare& q, ReorientMove move) {
  switch (move) {
    case ReorientMove::diagonal:
      return {q.y, q.z, q.w, q.x};
    case ReorientMove::flip_horizontal:
      return {q.w.inverse(), q.y, q.x, q.z.inverse()};
    case ReorientMove::flip_vertical:
      return {q.y.inverse(), q.w, q.z, q.x.inverse()};
  }
  throw std::invalid_argument("invalid reorientation move");
}

static bool label_ok(const EdgeLabel& label, int rank) {
  if (static_cast<int>(label.size()) != rank) return false;
  int stars = 0;
  for (char c : label) {
    if (c == '*')
      ++stars;
    else if (c != '0' && c != '1')
      return false;
  }
  return stars == 1;
}

CoxeterCube::CoxeterCube(int rank, std::map<EdgeLabel, Permutation> edges)
    : rank_(rank), edges_(std::move(edges)) {
  if (rank < 1) throw std::invalid_argument("cube rank must be >= 1");
  size_t expected = static_cast<size_t>(rank) << (rank - 1);
  if (edges_.size() != expected)
    throw std::invalid_argument("wrong number of edge labels");
  for (const auto& [label, value] : edges_)
    if (!label_ok(label, rank)) throw std::invalid_argument("bad edge label");
}

int CoxeterCube::ambient_rank() const { return edges_.begin()->second.rank(); }

const Permutation& CoxeterCube::edge(const EdgeLabel& label) const {
  auto it = edges_.find(label);
  if (it == edges_.end()) throw std::invalid_argument("unknown edge label");
  return it->second;
}

Permutation CoxeterCube::terminal_edge(int k) const {
  EdgeLabel label(rank_, '1');
  label[k - 1] = '*';
  return edge(label);
}

std::vector<Permutation> CoxeterCube::terminal_edges() const {
  std::vector<Permutation> out;
  for (int k = 1; k <= rank_; ++k) out.push_back(terminal_edge(k));
  return out;
}

CoxeterSquare cube_face(const CoxeterCube& c, int p, int q,
                        const std::string& fixed) {
  auto label = [&](int star, char other_val, int other) {
    EdgeLabel l = fixed;
    l[star - 1] = '*';
    l[other - 1] = other_val;
    return l;
  };
  // Direction q edges are the w/z sides, direction p edges the x/y sides.
  return CoxeterSquare{c.edge(label(q, '1', p)), c.edge(label(p, '0', q)),
                       c.edge(label(p, '1', q)), c.edge(label(q, '0', p))};
}

bool cube_validate(const CoxeterCube& c) {
  int n = c.rank();
  if (n == 1) return !c.edges().begin()->second.is_identity();
  for (const auto& [label, value] : c.edges())
    if (value.is_identity()) return false;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      // Run over the 2^{n-2} choices of the fixed coordinates.
      std::string fixed(n, '0');
      for (int mask = 0; mask < (1 << n); ++mask) {
        if (mask & ((1 << (p - 1)) | (1 << (q - 1)))) continue;
        for (int i = 0; i < n; ++i) fixed[i] = (mask >> i) & 1 ? '1' : '0';
        if (!square_validate(cube_face(c, p, q, fixed))) return false;
      }
    }
  return true;
}

static Permutation join_subset(const std::vector<Permutation>& xs,
                               unsigned mask, int rank) {
  std::vector<Permutation> picked;
  for (size_t i = 0; i < xs.size(); ++i)
    if (mask & (1u << i)) picked.push_back(xs[i]);
  if (picked.empty()) return Permutation::identity(rank);
  return join(picked);
}

std::optional<CoxeterCube> cube_from_terminal_edges(
    const std::vector<Permutation>& terminal) {
  int n = static_cast<int>(terminal.size());
  if (n < 1) throw std::invalid_argument("need at least one terminal edge");
  int rank = terminal.front().rank();
  for (const Permutation& x : terminal) {
    if (x.rank() != rank) throw std::invalid_argument("rank mismatch");
    if (x.is_identity()) return std::nullopt;
  }
  std::map<EdgeLabel, Permutation> edges;
  for (int k = 1; k <= n; ++k) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (mask & (1 << (k - 1))) continue;  // mask = the 1-set A
      unsigned rest = ~static_cast<unsigned>(mask) & ((1u << n) - 1);
      unsigned b = rest & ~(1u << (k - 1));
      Permutation lo = join_subset(terminal, b, rank);
      Permutation hi = join_subset(terminal, rest, rank);
      EdgeLabel label(n, '0');
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) label[i] = '1';
      label[k - 1] = '*';
      edges.emplace(label, compose(lo.inverse(), hi));
    }
  }
  CoxeterCube cube(n, std::move(edges));
  if (!cube_validate(cube)) return std::nullopt;
  return cube;
}

static std::vector<Permutation> flip_terminal(const std::vector<Permutation>& t,
                                              int k) {
  std::vector<Permutation> out = t;
  Permutation inv = t[k - 1].inverse();
  for (size_t i = 0; i < t.size(); ++i)
    if (static_cast<int>(i) != k - 1)
      out[i] = compose(inv, join(t[i], t[k - 1]));
  out[k - 1] = inv;
  return out;
}

CoxeterCube cube_flip(const CoxeterCube& c, int k) {
  if (k < 1 || k > c.rank()) throw std::invalid_argument("direction out of range");
  auto rebuilt = cube_from_terminal_edges(flip_terminal(c.terminal_edges(), k));
  if (!rebuilt) throw std::logic_error("flip of a valid cube failed to validate");
  return *rebuilt;
}

// Total order used for canonical forms: length first, then one-line notation.
static bool perm_less(const Permutation& a, const Permutation& b) {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return a.image() < b.image();
}

static std::vector<Permutation> sorted_terminal(std::vector<Permutation> t) {
  std::sort(t.begin(), t.end(), perm_less);
  return t;
}

static bool terminal_less(const std::vector<Permutation>& a,
                          const std::vector<Permutation>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (perm_less(a[i], b[i])) return true;
    if (perm_less(b[i], a[i])) return false;
  }
  return false;
}

std::vector<Permutation> cube_canonical(const CoxeterCube& c) {
  std::vector<Permutation> start = c.terminal_edges();
  std::set<std::vector<Permutation>> seen{sorted_terminal(start)};
  std::queue<std::vector<Permutation>> frontier;
  frontier.push(start);
  std::vector<Permutation> best = sorted_terminal(start);
  while (!frontier.empty()) {
    std::vector<Permutation> cur = frontier.front();
    frontier.pop();
    for (int k = 1; k <= c.rank(); ++k) {
      std::vector<Permutation> next = flip_terminal(cur, k);
      if (seen.insert(sorted_terminal(next)).second) {
        if (terminal_less(sorted_terminal(next), best))
          best = sorted_terminal(next);
        frontier.push(next);
      }
    }
  }
  return best;
}

CoxeterCube cube_collapse(const CoxeterCube& c, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > c.rank() || j > c.rank())
    throw std::invalid_argument("invalid collapse directions");
  if (c.rank() < 2) throw std::invalid_argument("cannot collapse a 1-cube");
  int lo = std::min(i, j), hi = std::max(i, j);
  std::vector<Permutation> t = c.terminal_edges();
  std::vector<Permutation> collapsed;
  for (int k = 1; k <= c.rank(); ++k) {
    if (k == hi) continue;
    collapsed.push_back(k == lo ? join(t[i - 1], t[j - 1]) : t[k - 1]);
  }
  auto rebuilt = cube_from_terminal_edges(collapsed);
  if (!rebuilt) throw std::logic_error("collapse of a valid cube failed to validate");
  return *rebuilt;
}

static std::set<int> cube_support(const CoxeterCube& c) {
  std::set<int> out;
  for (const Permutation& x : c.terminal_edges())
    for (const Root& r : inversion_set(x)) {
      std::set<int> s = r.support();
      out.insert(s.begin(), s.end());
    }
  return out;
}

CoxeterCube product_cube(const CoxeterCube& X, const CoxeterCube& Y) {
  if (X.ambient_rank() != Y.ambient_rank())
    throw std::invalid_argument("rank mismatch");
  for (int a : cube_support(X))
    for (int b : cube_support(Y))
      if (std::abs(a - b) <= 1)
        throw std::invalid_argument("index sets are not orthogonal");
  std::vector<Permutation> terminal = X.terminal_edges();
  for (const Permutation& x : Y.terminal_edges()) terminal.push_back(x);
  auto cube = cube_from_terminal_edges(terminal);
  if (!cube) throw std::logic_error("product of valid cubes failed to validate");
  return *cube;
}

CoxeterCube construct_inductive(int rank, const std::vector<int>& alpha_choices) {
  std::vector<int> choices = alpha_choices;
  if (choices.empty())
    for (int i = 1; i <= rank; ++i) choices.push_back(i);
  if (static_cast<int>(choices.size()) != rank)
    throw std::invalid_argument("need exactly one choice per direction");
  GeneratorSet used;
  for (int c : choices) {
    if (c < 1 || c > rank || !used.insert(c).second)
      throw std::invalid_argument("invalid choice sequence");
  }
  std::vector<Permutation> terminal{Permutation::simple(rank, choices[0])};
  GeneratorSet base{choices[0]};
  for (size_t k = 1; k < choices.size(); ++k) {
    Permutation g = nu(rank, choices[k], base).element;
    Permutation ginv = g.inverse();
    for (Permutation& x : terminal) x = compose(g, x, ginv);
    terminal.push_back(g);
    base.insert(choices[k]);
  }
  auto cube = cube_from_terminal_edges(terminal);
  if (!cube) throw std::logic_error("inductive construction failed to validate");
  return *cube;
}

static void extend_brute(const std::vector<Permutation>& pool,
                         const std::vector<RootSet>& pool_inv, size_t start,
                         std::vector<Permutation>& picked, RootSet& covered,
                         int dim, int total_roots,
                         std::vector<CoxeterCube>& out) {
  if (static_cast<int>(picked.size()) == dim) {
    auto cube = cube_from_terminal_edges(picked);
    if (cube) out.push_back(*cube);
    return;
  }
  for (size_t i = start; i < pool.size(); ++i) {
    bool disjoint = true;
    for (const Root& r : pool_inv[i])
      if (covered.count(r)) {
        disjoint = false;
        break;
      }
    if (!disjoint) continue;
    if (static_cast<int>(covered.size() + pool_inv[i].size()) > total_roots)
      continue;
    picked.push_back(pool[i]);
    for (const Root& r : pool_inv[i]) covered.insert(r);
    extend_brute(pool, pool_inv, i + 1, picked, covered, dim, total_roots, out);
    for (const Root& r : pool_inv[i]) covered.erase(r);
    picked.pop_back();
  }
}

std::vector<CoxeterCube> enumerate_cubes_brute(int rank, int dim) {
  std::vector<Permutation> pool;
  std::vector<RootSet> pool_inv;
  for (const Permutation& x : all_elements(rank)) {
    if (x.is_identity()) continue;
    pool.push_back(x);
    pool_inv.push_back(inversion_set(x));
  }
  std::vector<CoxeterCube> out;
  std::vector<Permutation> picked;
  RootSet covered;
  extend_brute(pool, pool_inv, 0, picked, covered, dim, rank * (rank + 1) / 2,
               out);
  return out;
}

}  // namespace coxcubes
