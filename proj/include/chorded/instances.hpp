#pragma once

#include <cstdint>
#include <random>

#include "chorded/complex.hpp"
#include "chorded/graph.hpp"
#include "chorded/ideal.hpp"

namespace chorded {

/// Deterministic seeded randomness for instance generators.  All draws go
/// through explicit reductions of mt19937_64 output so identical seeds give
/// identical instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform-ish integer in [0, n); n >= 1.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  /// True with probability num/den.
  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

namespace instances {

/// Hollow tetrahedron <123,124,134,234>: a complete face-minimal 2-cycle.
SimplicialComplex tetra();
/// Solid tetrahedron <1234>.
SimplicialComplex solid_tetra();
/// Hollow octahedron on 1..6 (equator 1234, apexes 5 and 6).
SimplicialComplex octa();
/// Octahedron plus the chord faces 123 and 134 splitting the equator.
SimplicialComplex octa_chorded();
/// Octahedron plus 123, 134, 135, 136: every cycle bounds in its 2-closure.
SimplicialComplex octa_filled();
/// All 3-subsets of {x0..x5} except {x0,x1,x2} and {x3,x4,x5}.
SimplicialComplex ex216();
MonomialIdeal ex216_ideal();  // (x0*x1*x2, x3*x4*x5) in six variables
/// Six-vertex triangulation of the real projective plane (ten facets).
SimplicialComplex rp2six();
/// <abc, abd, acd, bcd, bce, cde>: its 2-closure is <abcd, bce, cde, ae>.
SimplicialComplex fig5();
SimplicialComplex fig5_closure();

}  // namespace instances

/// Pure d-dimensional complex: each (d+1)-subset of 0..n-1 kept with
/// probability percent/100; at least one facet guaranteed.
SimplicialComplex random_pure_complex(Rng& rng, int n, int d, int percent);

/// Arbitrary complex from random candidate facets of mixed dimensions.
SimplicialComplex random_complex(Rng& rng, int n, int max_dim, int n_facets);

/// Ideal generated in one degree: random degree-sized subsets of the variables.
MonomialIdeal random_single_degree_ideal(Rng& rng, int n, int degree, int max_gens);

Graph random_graph(Rng& rng, int n, int percent);

}  // namespace chorded
