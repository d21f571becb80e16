#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coxcubes/typea.hpp"

namespace coxcubes::generic {

inline constexpr double kEps = 1e-8;
inline constexpr int kInfinity = 0;  // m(s,s') = infinity encoded as 0
inline constexpr int kDefaultRootCap = 10000;

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(int cap)
      : std::runtime_error("root generation exceeded cap " + std::to_string(cap)) {}
};

// Symmetric integer matrix with 1 on the diagonal, entries >= 2 (or infinity)
// off it.
struct CoxeterMatrix {
  std::vector<std::vector<int>> m;

  int size() const { return static_cast<int>(m.size()); }
  static CoxeterMatrix type_a(int rank);
  static CoxeterMatrix dihedral(int order);  // I_2(order); order 0 = infinite
};

// Root as a coefficient vector over the simple-root basis.
using Vec = std::vector<double>;

bool vec_eq(const Vec& a, const Vec& b);
bool vec_positive(const Vec& v);  // all coefficients >= -eps

// Linear map given by the images of the simple roots.
struct Element {
  std::vector<Vec> simple_images;
  Word defining_word;

  Vec apply(const Vec& v) const;
  bool is_identity() const;
};

bool element_eq(const Element& a, const Element& b);

class System {
 public:
  explicit System(CoxeterMatrix matrix);

  int size() const { return matrix_.size(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  double form(int s, int t) const { return form_[s - 1][t - 1]; }

  Vec simple_root(int s) const;
  // s(v) = v - 2 B(v, alpha_s) alpha_s
  Vec reflect(int s, const Vec& v) const;

  Element evaluate_word(const Word& w) const;
  Element identity() const;

  // Orbit of the simple roots, positive half only; throws CapExceeded.
  std::vector<Vec> generate_roots(int cap = kDefaultRootCap) const;

  // Positive roots sent negative by w^{-1}; needs a finite root system.
  std::vector<Vec> inversion_set(const Element& w, int cap = kDefaultRootCap) const;

  // Same roots computed from a reduced word, no full root generation needed.
  std::vector<Vec> inversion_set_of_word(const Word& w) const;

  // Root encoding of N(w); coincides with inversion_set.
  std::vector<Vec> reflection_cocycle(const Element& w, int cap = kDefaultRootCap) const;

 private:
  CoxeterMatrix matrix_;
  std::vector<std::vector<double>> form_;
};

bool root_set_eq(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace coxcubes::generic
