#pragma once

#include <string>
#include <vector>

#include "chorded/complex.hpp"
#include "chorded/homology.hpp"

namespace chorded {

/// Machine-checkable witness that a complex is a d-dimensional cycle: pure,
/// d-path-connected, every (d-1)-face in an even number of d-faces.
struct CycleCertificate {
  SimplicialComplex cycle;
  int dim = -1;
  bool face_minimal = false;
  /// Every (dim+1)-subset of V(cycle) is a face of the cycle.
  bool complete = false;
  /// Every pair of vertices of V(cycle) lies in some face of the cycle.
  bool one_complete = false;

  Chain face_chain() const;
  int vertex_count() const { return cycle.support_size(); }
};

/// True iff sigma is d-path-connected and each (d-1)-face lies in an even
/// number of d-faces.  sigma must be pure of dimension d >= 1.
bool is_d_dimensional_cycle(const SimplicialComplex& sigma);

/// Builds a certificate for a complex already known (or required) to be a
/// d-dimensional cycle; throws precondition_error when it is not one.
CycleCertificate certify_cycle(const SimplicialComplex& sigma, bool face_minimal = false);

struct CycleEnumeration {
  int kernel_dim = 0;
  std::vector<CycleCertificate> cycles;  // canonical order (by face list)
};

/// All face-minimal d-dimensional cycles supported on d-faces of cx, found by
/// enumerating the kernel of the boundary operator and keeping the
/// inclusion-minimal supports.  Exact; throws infeasible_error (with the
/// blocking kernel dimension) when the kernel dimension exceeds kernel_cap.
CycleEnumeration enumerate_face_minimal_cycles(const SimplicialComplex& cx, int d,
                                               int kernel_cap = 20);

/// Cone construction: given a d-cycle Omega, a minimal set A of (d+1)-faces
/// within V(Omega) whose boundary is the face sum of Omega, and a vertex v
/// outside V(Omega), the complex <F_1 u v, ..., F_k u v, A_1, ..., A_l> is a
/// (d+1)-dimensional cycle.  Preconditions are checked; violations raise
/// precondition_error naming the failed clause.
CycleCertificate cone_extension(const CycleCertificate& omega, const std::vector<Face>& lid,
                                int apex);

/// The (d-1)-path-connected components of { F \ v : v in F face of Omega },
/// each certified as a (d-1)-dimensional cycle.  Requires dim >= 2 and
/// v in V(Omega).
std::vector<CycleCertificate> vertex_link_cycles(const CycleCertificate& omega, int v);

}  // namespace chorded
