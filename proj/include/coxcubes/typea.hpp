#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcubes {

// Positive root of A_n encoded as the index pair (lo, hi) with
// 1 <= lo < hi <= n+1, standing for alpha_lo + ... + alpha_{hi-1}.
struct Root {
  int lo = 0;
  int hi = 0;

  auto operator<=>(const Root&) const = default;

  int depth() const { return hi - lo; }
  // Generator indices {lo, ..., hi-1}.
  std::set<int> support() const;
};

using RootSet = std::set<Root>;

struct SignedRoot {
  Root root;
  bool positive = true;

  bool operator==(const SignedRoot&) const = default;
};

// Word in the generators s_1 ... s_n; the empty word is the identity.
using Word = std::vector<int>;

// Subset of generator indices {1, ..., n}.
using GeneratorSet = std::set<int>;

// Element of A_n as a permutation of {1, ..., n+1} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int rank);
  // Simple reflection s_i, 1 <= i <= rank.
  static Permutation simple(int rank, int i);

  int rank() const { return static_cast<int>(image_.size()) - 1; }
  int size() const { return static_cast<int>(image_.size()); }

  // Image of i, 1-based.
  int operator()(int i) const { return image_[i - 1]; }

  Permutation inverse() const;
  bool is_identity() const;

  const std::vector<int>& image() const { return image_; }

  auto operator<=>(const Permutation&) const = default;

  std::string str() const;  // one-line notation, e.g. "[3,1,2]"

 private:
  std::vector<int> image_;
};

// (x*y)(i) = x(y(i)).  The left action convention used everywhere.
Permutation compose(const Permutation& x, const Permutation& y);
Permutation compose(const Permutation& x, const Permutation& y,
                    const Permutation& z);

int length(const Permutation& x);

// In type A the canonical action sends e_i - e_j to e_{w(i)} - e_{w(j)}.
SignedRoot act(const Permutation& w, const Root& r);

// Left inversion set: {(i,j) : i < j and x^{-1}(i) > x^{-1}(j)}.
RootSet inversion_set(const Permutation& x);

// Roots beta_i = s_{w1} ... s_{w(i-1)}(alpha_{wi}) of a reduced word.
// Throws std::invalid_argument if the word is not reduced (duplicate roots).
RootSet inversion_set_of_word(int rank, const Word& w);

// True iff I is closed ((i,j),(j,k) => (i,k)) and co-closed
// ((i,k) => (i,j) or (j,k)).
bool is_inversion_set(int rank, const RootSet& I);

// The unique element with the given inversion set.
// Throws std::invalid_argument when the closure conditions fail.
Permutation permutation_from_inversion_set(int rank, const RootSet& I);

// Lexicographically smallest reduced word (greedy smallest left descent).
Word canonical_reduced_word(const Permutation& x);

Permutation longest_element(int rank);
Permutation longest_element(int rank, const GeneratorSet& J);

bool leq_weak_right(const Permutation& x, const Permutation& y);

// Join in the weak right order; always exists in finite type A.
Permutation join(const Permutation& x, const Permutation& y);
Permutation join(const std::vector<Permutation>& xs);

struct DescentData {
  std::set<int> left;
  std::set<int> right;
  bool bigrassmannian = false;
};

DescentData descent_data(const Permutation& x);

// All (n+1)! elements of A_n, in lexicographic one-line order.
std::vector<Permutation> all_elements(int rank);

// Positive roots of the standard parabolic W_J (interval components of J).
RootSet parabolic_positive_roots(int rank, const GeneratorSet& J);
RootSet all_positive_roots(int rank);

}  // namespace coxcubes
