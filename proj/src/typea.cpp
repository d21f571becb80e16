#include "coxcubes/typea.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxcubes {

std::set<int> Root::support() const {
  std::set<int> s;
  for (int i = lo; i < hi; ++i) s.insert(i);
  return s;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty()) throw std::invalid_argument("empty one-line notation");
  std::vector<bool> seen(image_.size() + 1, false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v])
      throw std::invalid_argument("not a permutation of {1,...,n+1}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<int> img(rank + 1);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int rank, int i) {
  if (i < 1 || i > rank) throw std::invalid_argument("generator index out of range");
  Permutation p = identity(rank);
  std::swap(p.image_[i - 1], p.image_[i]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < static_cast<int>(image_.size()); ++i) inv[image_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < static_cast<int>(image_.size()); ++i)
    if (image_[i] != i + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < static_cast<int>(image_.size()); ++i) {
    if (i) os << ',';
    os << image_[i];
  }
  os << ']';
  return os.str();
}

static void require_same_rank(const Permutation& x, const Permutation& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
}

Permutation compose(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  std::vector<int> img(x.size());
  for (int i = 1; i <= x.size(); ++i) img[i - 1] = x(y(i));
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& x, const Permutation& y,
                    const Permutation& z) {
  return compose(compose(x, y), z);
}

int length(const Permutation& x) {
  int count = 0;
  for (int i = 1; i <= x.size(); ++i)
    for (int j = i + 1; j <= x.size(); ++j)
      if (x(i) > x(j)) ++count;
  return count;
}

SignedRoot act(const Permutation& w, const Root& r) {
  if (r.hi > w.size()) throw std::invalid_argument("rank mismatch");
  int a = w(r.lo), b = w(r.hi);
  return SignedRoot{Root{std::min(a, b), std::max(a, b)}, a < b};
}

RootSet inversion_set(const Permutation& x) {
  Permutation inv = x.inverse();
  RootSet out;
  for (int i = 1; i <= x.size(); ++i)
    for (int j = i + 1; j <= x.size(); ++j)
      if (inv(i) > inv(j)) out.insert(Root{i, j});
  return out;
}

RootSet inversion_set_of_word(int rank, const Word& w) {
  Permutation prefix = Permutation::identity(rank);
  RootSet out;
  for (int letter : w) {
    if (letter < 1 || letter > rank)
      throw std::invalid_argument("generator index out of range");
    SignedRoot beta = act(prefix, Root{letter, letter + 1});
    // beta is positive while the word stays reduced
    if (!beta.positive || !out.insert(beta.root).second)
      throw std::invalid_argument("word is not reduced");
    prefix = compose(prefix, Permutation::simple(rank, letter));
  }
  return out;
}

bool is_inversion_set(int rank, const RootSet& I) {
  int n1 = rank + 1;
  for (int i = 1; i <= n1; ++i)
    for (int j = i + 1; j <= n1; ++j)
      for (int k = j + 1; k <= n1; ++k) {
        bool ij = I.count(Root{i, j}), jk = I.count(Root{j, k}),
             ik = I.count(Root{i, k});
        if (ij && jk && !ik) return false;
        if (ik && !ij && !jk) return false;
      }
  for (const Root& r : I)
    if (r.lo < 1 || r.hi > n1) return false;
  return true;
}

Permutation permutation_from_inversion_set(int rank, const RootSet& I) {
  if (!is_inversion_set(rank, I))
    throw std::invalid_argument("not a valid inversion set");
  // Total order on {1,...,n+1}: i before j (i<j) exactly when (i,j) is absent.
  std::vector<int> order(rank + 1);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (a < b) return I.count(Root{a, b}) == 0;
    return I.count(Root{b, a}) != 0;
  });
  // Sorting values by position yields the one-line notation itself.
  return Permutation(order);
}

Word canonical_reduced_word(const Permutation& x) {
  Word word;
  Permutation cur = x;
  Permutation inv = cur.inverse();
  while (!cur.is_identity()) {
    int descent = 0;
    for (int i = 1; i <= cur.rank(); ++i)
      if (inv(i) > inv(i + 1)) {
        descent = i;
        break;
      }
    word.push_back(descent);
    cur = compose(Permutation::simple(cur.rank(), descent), cur);
    inv = cur.inverse();
  }
  return word;
}

Permutation longest_element(int rank) {
  std::vector<int> img(rank + 1);
  for (int i = 0; i <= rank; ++i) img[i] = rank + 1 - i;
  return Permutation(std::move(img));
}

Permutation longest_element(int rank, const GeneratorSet& J) {
  Permutation p = Permutation::identity(rank);
  std::vector<int> img = p.image();
  // Reverse each maximal interval component {a,...,b} of J on positions a..b+1.
  auto it = J.begin();
  while (it != J.end()) {
    int a = *it, b = a;
    ++it;
    while (it != J.end() && *it == b + 1) b = *it++;
    std::reverse(img.begin() + (a - 1), img.begin() + (b + 1));
  }
  return Permutation(std::move(img));
}

bool leq_weak_right(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  RootSet ix = inversion_set(x), iy = inversion_set(y);
  return std::includes(iy.begin(), iy.end(), ix.begin(), ix.end());
}

static RootSet transitive_closure(int rank, RootSet I) {
  int n1 = rank + 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n1; ++i)
      for (int j = i + 1; j <= n1; ++j)
        for (int k = j + 1; k <= n1; ++k)
          if (I.count(Root{i, j}) && I.count(Root{j, k}) &&
              I.insert(Root{i, k}).second)
            changed = true;
  }
  return I;
}

Permutation join(const std::vector<Permutation>& xs) {
  if (xs.empty()) throw std::invalid_argument("join of empty sequence");
  RootSet united;
  for (const Permutation& x : xs) {
    require_same_rank(xs.front(), x);
    RootSet ix = inversion_set(x);
    united.insert(ix.begin(), ix.end());
  }
  return permutation_from_inversion_set(xs.front().rank(),
                                        transitive_closure(xs.front().rank(), united));
}

Permutation join(const Permutation& x, const Permutation& y) {
  return join(std::vector<Permutation>{x, y});
}

DescentData descent_data(const Permutation& x) {
  DescentData d;
  Permutation inv = x.inverse();
  for (int i = 1; i <= x.rank(); ++i) {
    if (x(i) > x(i + 1)) d.right.insert(i);
    if (inv(i) > inv(i + 1)) d.left.insert(i);
  }
  d.bigrassmannian = d.left.size() == 1 && d.right.size() == 1;
  return d;
}

std::vector<Permutation> all_elements(int rank) {
  std::vector<int> img(rank + 1);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

RootSet parabolic_positive_roots(int rank, const GeneratorSet& J) {
  RootSet out;
  for (int i = 1; i <= rank + 1; ++i)
    for (int j = i + 1; j <= rank + 1; ++j) {
      bool inside = true;
      for (int k = i; k < j; ++k)
        if (!J.count(k)) {
          inside = false;
          break;
        }
      if (inside) out.insert(Root{i, j});
    }
  return out;
}

RootSet all_positive_roots(int rank) {
  RootSet out;
  for (int i = 1; i <= rank + 1; ++i)
    for (int j = i + 1; j <= rank + 1; ++j) out.insert(Root{i, j});
  return out;
}

}  // namespace coxcubes
