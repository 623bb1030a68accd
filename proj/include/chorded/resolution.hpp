#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chorded/chordality.hpp"
#include "chorded/graph.hpp"
#include "chorded/ideal.hpp"

namespace chorded {

struct HomologyWitness {
  std::vector<int> subset;  // vertex ids of S
  int index = 0;            // homology dimension i with nonzero reduced homology
  int dim = 0;              // its dimension over GF(2)
};

struct LinearResolutionResult {
  bool linear = false;
  int degree = 0;  // common generator degree t (0 for the zero ideal)
  std::optional<HomologyWitness> witness;
};

/// Decides t-linear resolution over GF(2) by sweeping the reduced homology of
/// every induced subcomplex of the Stanley-Reisner complex: linear iff every
/// Hochster-relevant pair (S, i) with i != t-2 vanishes.  Generators must
/// share one degree (mixed degrees raise precondition_error).
LinearResolutionResult has_linear_resolution(const MonomialIdeal& ideal, int threads = 1);

/// Graded Betti numbers of the ideal over GF(2) by Hochster's subset-homology
/// sum: beta_{i,j} = sum over |S|=j of dim H~_{j-i-2}(N(I)_S).
class BettiTable {
 public:
  long long at(int i, int j) const;
  void add(int i, int j, long long v);
  const std::map<std::pair<int, int>, long long>& entries() const { return b_; }
  /// beta_{i,j} = 0 for all j != i + degree.
  bool is_linear(int degree) const;
  std::string to_text() const;  // triangular layout: rows i, columns j-i

 private:
  std::map<std::pair<int, int>, long long> b_;
};

/// Throws infeasible_error when the ring has more than max_vars variables
/// (the sweep is 2^n).
BettiTable betti_table(const MonomialIdeal& ideal, int max_vars = 20, int threads = 1);

/// Verdicts of the five equivalent linear-resolution criteria plus the
/// special-cycle scan.  When every check is conclusive the verdicts agree;
/// a disagreement is reported, never reconciled.
struct ResolutionReport {
  MonomialIdeal ideal;
  int degree = 0;  // t = d + 1
  LinearResolutionResult homology;                       // (a)
  Verdict sr_chorded = Verdict::inconclusive;            // (b) N(I) chorded
  Verdict skeletons_chorded = Verdict::inconclusive;     // (c) N(I)^[m] m-chorded, m >= d
  Verdict complement_chorded = Verdict::inconclusive;    // (d) closure of d-complement chorded
  Verdict complement_skeletons = Verdict::inconclusive;  // (e) its skeletons, m >= d
  std::vector<DChordedVerdict> sr_verdicts;              // N(I), dimensions 1..dim
  std::vector<DChordedVerdict> complement_verdicts;      // closure, dimensions 1..dim
  SpecialCycleScan special_cycles;                       // obstruction set above d
  Verdict special_criterion = Verdict::inconclusive;     // d-chorded skeleton + scan
  bool conclusive_agreement = true;
  ChordMode mode = ChordMode::boundary;

  Verdict overall() const;
  std::string to_text() const;
};

ResolutionReport criterion_report(const MonomialIdeal& ideal, ChordMode mode = ChordMode::boundary,
                                  const SearchCaps& caps = {}, int threads = 1);

struct FroebergRecord {
  Graph graph;
  bool complement_edge_ideal_linear = false;
  bool chordal = false;
  bool agree = false;
};

/// Cross-check of the classical degree-two criterion: the edge ideal of the
/// complement of G has a linear resolution over GF(2) iff G is chordal.
FroebergRecord froeberg_crosscheck(const Graph& g);

}  // namespace chorded
