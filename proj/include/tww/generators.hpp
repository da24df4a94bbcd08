#pragma once

#include <cstdint>

#include "tww/embedding.hpp"

namespace tww {

// splitmix64: one 64-bit multiply-xorshift step per draw. Chosen because the
// whole generator is ten lines and bit-identical everywhere, so corpora are
// reproducible from (params, seed) alone.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t bound) { return next() % bound; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Apollonian growth: starting from a triangle, repeatedly pick an inner face
// uniformly and put a new vertex inside it, joined to the three corners.
// Every face stays a triangle. n >= 3.
PlaneGraph gen_stacked_triangulation(int n, uint64_t seed);

// w columns by h rows, vertex r*w + c, rotation up/right/down/left. w,h >= 1
// with at least two vertices.
PlaneGraph gen_grid(int w, int h);

// Hub 0 joined to the rim cycle 1..n-1. n >= 4.
PlaneGraph gen_wheel(int n);

// Plain cycle 0..n-1. n >= 3.
PlaneGraph gen_cycle(int n);

// Stacked triangulation followed by one pass over its edges, deleting each
// with probability p unless that would disconnect the graph. Deletion just
// drops the edge from both rotation lists, which merges its two faces. The
// outer face is discarded. n >= 3, p in [0,1].
PlaneGraph gen_random_planar(int n, double p, uint64_t seed);

}  // namespace tww
