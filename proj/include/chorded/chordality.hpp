#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chorded/complex.hpp"
#include "chorded/cycles.hpp"
#include "chorded/graph.hpp"

namespace chorded {

enum class Verdict { yes, no, inconclusive };
const char* to_string(Verdict v);

enum class ChordMode { boundary, exact };
const char* to_string(ChordMode m);

struct SearchCaps {
  /// Max kernel dimension for exhaustive cycle enumeration (2^k combinations).
  int kernel_cap = 20;
  /// Max size of a chord set accepted by the exact search.
  int chord_cap = 64;
  /// Max number of candidate decomposition cycles fed to the parity solve.
  int family_cap = 512;
  /// Search chord faces in all of the ambient complex rather than only those
  /// inside V(Omega).
  bool widen = false;
};

/// A verified chord set: chords C decompose the cycle into k >= 2 strictly
/// smaller cycles, chords covered evenly and cycle faces oddly.
struct ChordSetCertificate {
  int dim = -1;
  SimplicialComplex cycle;
  std::vector<Face> chords;
  std::vector<SimplicialComplex> parts;
};

enum class ChordClause {
  pre_cycle,          // Omega is a d-dimensional cycle with faces in the ambient
  pre_chord_faces,    // chords are d-faces of the ambient
  pre_chord_disjoint, // chords do not lie in Omega
  union_cover,        // facets of <C u facets(Omega)> = union of the parts
  part_cycle,         // every part is a d-dimensional cycle
  parts_distinct,     // the parts are pairwise distinct complexes
  k_min,              // at least two parts
  chord_even,         // every chord lies in an even number of parts
  cycle_odd,          // every face of Omega lies in an odd number of parts
  vertex_shrink,      // every part has fewer vertices than Omega
};
const char* to_string(ChordClause c);

struct ChordVerification {
  bool ok = false;
  ChordClause failed_clause{};
  std::string witness;  // offending face or part, when not ok
};

/// Re-checks a proposed chord set clause by clause against raw data.
ChordVerification verify_chord_set(const SimplicialComplex& ambient,
                                   const SimplicialComplex& omega,
                                   const std::vector<Face>& chords,
                                   const std::vector<SimplicialComplex>& parts);

enum class SearchOutcome { found, none, inconclusive };
const char* to_string(SearchOutcome o);

struct ChordSearch {
  SearchOutcome outcome = SearchOutcome::inconclusive;
  std::optional<ChordSetCertificate> certificate;
  std::string note;  // what was exhausted, or which cap blocked
};

/// Exhaustive chord-set search for a face-minimal, non-complete cycle.
/// Candidate decompositions are all d-dimensional cycles on fewer vertices
/// inside the span of Omega's faces and the available chord faces; a chord set
/// exists iff some family of them sums (mod 2) to Omega's face indicator.
/// `none` means exhausted within caps; `inconclusive` means a cap blocked.
ChordSearch find_chord_set_exact(const SimplicialComplex& ambient, const CycleCertificate& omega,
                                 const SearchCaps& caps = {});

/// Fast sufficient certificate: a witness chain bounding Omega inside the
/// d-closure of the ambient restricted to V(Omega).  Such a chain implies a
/// chord set exists.  Returns nullopt when Omega is not a boundary there.
std::optional<Chain> boundary_certificate(const SimplicialComplex& ambient,
                                          const CycleCertificate& omega);
/// Same, with the d-closure of the ambient precomputed by the caller.
std::optional<Chain> boundary_certificate_in_closure(const SimplicialComplex& closure_of_ambient,
                                                     const CycleCertificate& omega);

/// How one enumerated cycle was dispatched inside is_d_chorded.
struct CycleFate {
  CycleCertificate cycle;
  enum class How { skipped_complete, boundary_certified, chord_set_found, no_chord_set, blocked } how;
  std::optional<ChordSetCertificate> certificate;
  std::string note;
};

struct DChordedVerdict {
  int dim = -1;
  Verdict verdict = Verdict::inconclusive;
  ChordMode mode = ChordMode::boundary;
  /// The skeleton was d-complete on its support, so it is d-chorded outright.
  bool complete_skeleton = false;
  int kernel_dim = -1;  // blocking kernel dimension when enumeration was capped
  std::vector<CycleFate> cycles;
  std::optional<CycleCertificate> witness;  // uncharted cycle for no/inconclusive
  std::string note;
};

/// Is the pure d-dimensional complex d-chorded?  Enumerates the face-minimal
/// cycles, skips complete ones, and certifies the rest.  In boundary mode a
/// cycle that is not boundary-certified escalates to the exact search.
DChordedVerdict is_d_chorded(const SimplicialComplex& pure_d, ChordMode mode = ChordMode::boundary,
                             const SearchCaps& caps = {});

struct ChordedVerdict {
  Verdict verdict = Verdict::yes;
  std::vector<DChordedVerdict> per_dim;  // dimensions 1..dim
};

/// Is every pure skeleton 1..dim d-chorded?
ChordedVerdict is_chorded(const SimplicialComplex& cx, ChordMode mode = ChordMode::boundary,
                          const SearchCaps& caps = {});

struct SpecialCycleEntry {
  int skeleton_dim = -1;
  CycleCertificate cycle;
  ChordSearch search;
};

struct SpecialCycleScan {
  Verdict verdict = Verdict::yes;  // yes = every listed cycle has a chord set
  std::vector<SpecialCycleEntry> entries;
  std::string note;
};

/// For each m above base_dim, lists the 1-complete, face-minimal,
/// non-m-complete m-dimensional cycles of the m-skeleton together with exact
/// chord-set search results.  Requires cx to equal the base_dim-closure of its
/// own pure base_dim-skeleton.
SpecialCycleScan special_cycle_scan(const SimplicialComplex& cx, int base_dim,
                                    const SearchCaps& caps = {});

}  // namespace chorded
