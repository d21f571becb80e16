#include "coxcubes/generic.hpp"

#include <cmath>
#include <numbers>

namespace coxcubes::generic {

CoxeterMatrix CoxeterMatrix::type_a(int rank) {
  CoxeterMatrix cm;
  cm.m.assign(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) {
    cm.m[i][i] = 1;
    if (i + 1 < rank) cm.m[i][i + 1] = cm.m[i + 1][i] = 3;
  }
  return cm;
}

CoxeterMatrix CoxeterMatrix::dihedral(int order) {
  CoxeterMatrix cm;
  cm.m = {{1, order}, {order, 1}};
  return cm;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kEps) return false;
  return true;
}

bool vec_positive(const Vec& v) {
  for (double c : v)
    if (c < -kEps) return false;
  return true;
}

Vec Element::apply(const Vec& v) const {
  Vec out(v.size(), 0.0);
  for (size_t s = 0; s < v.size(); ++s)
    for (size_t i = 0; i < v.size(); ++i) out[i] += v[s] * simple_images[s][i];
  return out;
}

bool Element::is_identity() const {
  for (size_t s = 0; s < simple_images.size(); ++s)
    for (size_t i = 0; i < simple_images.size(); ++i) {
      double want = (s == i) ? 1.0 : 0.0;
      if (std::abs(simple_images[s][i] - want) > kEps) return false;
    }
  return true;
}

bool element_eq(const Element& a, const Element& b) {
  if (a.simple_images.size() != b.simple_images.size()) return false;
  for (size_t s = 0; s < a.simple_images.size(); ++s)
    if (!vec_eq(a.simple_images[s], b.simple_images[s])) return false;
  return true;
}

System::System(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {
  int n = matrix_.size();
  if (n < 1) throw std::invalid_argument("empty Coxeter matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix_.m[i].size()) != n)
      throw std::invalid_argument("Coxeter matrix is not square");
    if (matrix_.m[i][i] != 1)
      throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (matrix_.m[i][j] != matrix_.m[j][i])
        throw std::invalid_argument("Coxeter matrix must be symmetric");
      if (i != j && matrix_.m[i][j] != kInfinity && matrix_.m[i][j] < 2)
        throw std::invalid_argument("off-diagonal entries must be >= 2 or infinity");
    }
  }
  form_.assign(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = matrix_.m[i][j];
      form_[i][j] = (m == kInfinity) ? -1.0 : -std::cos(std::numbers::pi / m);
    }
}

Vec System::simple_root(int s) const {
  Vec v(size(), 0.0);
  v[s - 1] = 1.0;
  return v;
}

Vec System::reflect(int s, const Vec& v) const {
  double b = 0.0;
  for (int t = 1; t <= size(); ++t) b += v[t - 1] * form(t, s);
  Vec out = v;
  out[s - 1] -= 2.0 * b;
  return out;
}

Element System::identity() const {
  Element e;
  for (int s = 1; s <= size(); ++s) e.simple_images.push_back(simple_root(s));
  return e;
}

Element System::evaluate_word(const Word& w) const {
  Element out = identity();
  // Apply reflections right-to-left so the product acts in written order:
  // (s_{w1} ... s_{wm})(v) = s_{w1}(... s_{wm}(v)).
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 1 || *it > size())
      throw std::invalid_argument("generator index out of range");
    for (int s = 1; s <= size(); ++s)
      out.simple_images[s - 1] = reflect(*it, out.simple_images[s - 1]);
  }
  out.defining_word = w;
  return out;
}

std::vector<Vec> System::generate_roots(int cap) const {
  std::vector<Vec> roots;
  for (int s = 1; s <= size(); ++s) roots.push_back(simple_root(s));
  size_t frontier = 0;
  while (frontier < roots.size()) {
    Vec v = roots[frontier++];
    for (int s = 1; s <= size(); ++s) {
      Vec image = reflect(s, v);
      if (!vec_positive(image)) continue;
      bool known = false;
      for (const Vec& r : roots)
        if (vec_eq(r, image)) {
          known = true;
          break;
        }
      if (!known) {
        roots.push_back(std::move(image));
        if (static_cast<int>(roots.size()) > cap) throw CapExceeded(cap);
      }
    }
  }
  return roots;
}

std::vector<Vec> System::inversion_set(const Element& w, int cap) const {
  Word reversed(w.defining_word.rbegin(), w.defining_word.rend());
  Element winv = evaluate_word(reversed);
  std::vector<Vec> out;
  for (const Vec& beta : generate_roots(cap)) {
    Vec image = winv.apply(beta);
    bool negative = true;
    for (double c : image)
      if (c > kEps) {
        negative = false;
        break;
      }
    if (negative) out.push_back(beta);
  }
  return out;
}

std::vector<Vec> System::inversion_set_of_word(const Word& w) const {
  std::vector<Vec> out;
  Element prefix = identity();
  for (int letter : w) {
    if (letter < 1 || letter > size())
      throw std::invalid_argument("generator index out of range");
    Vec beta = prefix.apply(simple_root(letter));
    if (!vec_positive(beta)) throw std::invalid_argument("word is not reduced");
    for (const Vec& r : out)
      if (vec_eq(r, beta)) throw std::invalid_argument("word is not reduced");
    out.push_back(std::move(beta));
    Word extended = prefix.defining_word;
    extended.push_back(letter);
    prefix = evaluate_word(extended);
  }
  return out;
}

std::vector<Vec> System::reflection_cocycle(const Element& w, int cap) const {
  return inversion_set(w, cap);
}

bool root_set_eq(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return false;
  for (const Vec& r : a) {
    bool found = false;
    for (const Vec& s : b)
      if (vec_eq(r, s)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace coxcubes::generic
