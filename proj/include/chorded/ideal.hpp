#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chorded/complex.hpp"
#include "chorded/face.hpp"

namespace chorded {

/// A square-free monomial ideal in k[x_0..x_{n-1}], held by the supports of a
/// minimal generating set.  The generator list is reduced to an antichain on
/// construction; an empty generator (the unit ideal) is rejected.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // the zero ideal in no variables
  MonomialIdeal(int n_variables, std::vector<Face> generators);

  int n_variables() const { return n_; }
  const std::vector<Face>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Common degree of the generators; nullopt when degrees are mixed or the
  /// ideal is zero.
  std::optional<int> generation_degree() const;

  std::string variable(int i) const { return "x" + std::to_string(i); }
  std::vector<std::string> variable_labels() const;

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

 private:
  int n_ = 0;
  std::vector<Face> gens_;
};

/// Stanley-Reisner complex N(I): faces are the square-free monomials outside I.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// Stanley-Reisner ideal of a complex: generated by the minimal non-faces.
/// Throws on the void complex (whose ideal would be the unit ideal).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& cx);

/// Facet complex F(I): facets are the generator supports.
SimplicialComplex facet_complex(const MonomialIdeal& ideal);

/// Facet ideal: generated by the facets.  Inverse of facet_complex.
MonomialIdeal facet_ideal(const SimplicialComplex& cx);

/// All inclusion-minimal subsets of 0..n-1 that are not faces of cx.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& cx);

/// Inclusion-minimal transversals of `sets` within `universe` (all masks).
/// Exposed for reuse; both Stanley-Reisner directions reduce to it.
std::vector<std::uint64_t> minimal_transversals(std::uint64_t universe,
                                                const std::vector<std::uint64_t>& sets);

// --- text format ----------------------------------------------------------
//
// One monomial per line, variables written x<k> and joined by '*' or
// whitespace: "x0*x1*x2" and "x0 x1 x2" are both accepted.  Lines beginning
// with '#' are ignored.  The ring has max-index+1 variables.

MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal_file(const std::string& path);
std::string serialize_ideal(const MonomialIdeal& ideal);

}  // namespace chorded
