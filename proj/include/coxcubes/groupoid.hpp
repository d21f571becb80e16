#pragma once

#include <vector>

#include "coxcubes/typea.hpp"

namespace coxcubes {

// Generator nu(alpha, Pi_base) = w_{base+alpha} * w_base of the groupoid of
// parabolic simple systems.
struct NuGenerator {
  int alpha = 0;
  GeneratorSet base;
  Permutation element;
};

// Triple (Pi_source, element, Pi_target) with element mapping the source
// simple roots bijectively onto the target simple roots.
struct GroupoidMorphism {
  GeneratorSet source;
  Permutation element;
  GeneratorSet target;
};

NuGenerator nu(int rank, int alpha, const GeneratorSet& base);

bool morphism_valid(const GroupoidMorphism& m);

// Image generator set {j : element(alpha_i) = alpha_j, i in source}.
GeneratorSet morphism_target(const GeneratorSet& source, const Permutation& w);

// Greedy factorization into nu generators g_k ... g_1 = element with additive
// lengths; at each step picks the smallest simple root sent negative.
std::vector<NuGenerator> decompose_morphism(const GroupoidMorphism& m);

// All K with some group element mapping Pi_J onto Pi_K; exhaustive scan.
std::set<GeneratorSet> groupoid_objects(int rank, const GeneratorSet& J);

}  // namespace coxcubes
