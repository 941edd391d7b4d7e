#pragma once

#include <random>
#include <vector>

#include "spherahall/object.hpp"

namespace spherahall {

/// Random object with total homology dimension at most max_total and shifts in
/// [lo, hi]; deterministic for a given generator state.
template <class Rng>
ObjClass random_object(SphereDim dim, Rng& rng, int max_total, int lo, int hi) {
  std::uniform_int_distribution<int> total_dist(0, max_total);
  std::uniform_int_distribution<int> shift_dist(lo, hi);
  std::uniform_int_distribution<int> branch_dist(1, 2);
  int budget = total_dist(rng);
  std::vector<IndecLabel> labels;
  while (budget > 0) {
    int len = 1;
    if (dim.d != 0) len = std::uniform_int_distribution<int>(1, budget)(rng);
    int branch = dim.d == 0 ? branch_dist(rng) : 1;
    labels.push_back({shift_dist(rng), len, branch});
    budget -= len;
  }
  return ObjClass(dim, std::move(labels));
}

}  // namespace spherahall
