#include "coxcubes/groupoid.hpp"

#include <algorithm>

namespace coxcubes {

NuGenerator nu(int rank, int alpha, const GeneratorSet& base) {
  if (base.count(alpha)) throw std::invalid_argument("alpha must not lie in base");
  if (alpha < 1 || alpha > rank)
    throw std::invalid_argument("generator index out of range");
  GeneratorSet extended = base;
  extended.insert(alpha);
  NuGenerator g;
  g.alpha = alpha;
  g.base = base;
  g.element = compose(longest_element(rank, extended), longest_element(rank, base));
  return g;
}

GeneratorSet morphism_target(const GeneratorSet& source, const Permutation& w) {
  GeneratorSet out;
  for (int i : source) {
    SignedRoot im = act(w, Root{i, i + 1});
    if (!im.positive || im.root.depth() != 1)
      throw std::invalid_argument("element does not map the base into the simple roots");
    out.insert(im.root.lo);
  }
  return out;
}

bool morphism_valid(const GroupoidMorphism& m) {
  try {
    return morphism_target(m.source, m.element) == m.target;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<NuGenerator> decompose_morphism(const GroupoidMorphism& m) {
  if (!morphism_valid(m)) throw std::invalid_argument("invalid groupoid morphism");
  int rank = m.element.rank();
  std::vector<NuGenerator> out;
  GeneratorSet base = m.source;
  Permutation rest = m.element;
  while (!rest.is_identity()) {
    int alpha = 0;
    for (int i = 1; i <= rank; ++i)
      if (!act(rest, Root{i, i + 1}).positive) {
        alpha = i;
        break;
      }
    NuGenerator g = nu(rank, alpha, base);
    out.push_back(g);
    base = morphism_target(base, g.element);
    rest = compose(rest, g.element.inverse());
  }
  return out;
}

std::set<GeneratorSet> groupoid_objects(int rank, const GeneratorSet& J) {
  if (rank > 5) throw std::invalid_argument("rank too large for exhaustion");
  std::set<GeneratorSet> out;
  for (const Permutation& w : all_elements(rank)) {
    try {
      out.insert(morphism_target(J, w));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace coxcubes
