#include "chorded/chordality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "chorded/gf2.hpp"
#include "chorded/homology.hpp"
#include "chorded/util.hpp"

namespace chorded {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "inconclusive";
  }
}

const char* to_string(ChordMode m) { return m == ChordMode::exact ? "exact" : "boundary"; }

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::none: return "none";
    default: return "inconclusive";
  }
}

const char* to_string(ChordClause c) {
  switch (c) {
    case ChordClause::pre_cycle: return "pre: Omega is a d-dimensional cycle in the ambient complex";
    case ChordClause::pre_chord_faces: return "pre: chords are d-faces of the ambient complex";
    case ChordClause::pre_chord_disjoint: return "pre: chords do not belong to the cycle";
    case ChordClause::union_cover: return "1: the parts together carry exactly the chords and cycle faces";
    case ChordClause::part_cycle: return "1: every part is a d-dimensional cycle";
    case ChordClause::parts_distinct: return "1: the parts are pairwise distinct";
    case ChordClause::k_min: return "1: at least two parts";
    case ChordClause::chord_even: return "2: every chord lies in an even number of parts";
    case ChordClause::cycle_odd: return "3: every cycle face lies in an odd number of parts";
    case ChordClause::vertex_shrink: return "4: every part has fewer vertices than the cycle";
  }
  return "?";
}

ChordVerification verify_chord_set(const SimplicialComplex& ambient,
                                   const SimplicialComplex& omega,
                                   const std::vector<Face>& chords,
                                   const std::vector<SimplicialComplex>& parts) {
  ChordVerification r;
  auto fail = [&](ChordClause c, const std::string& w) {
    r.ok = false;
    r.failed_clause = c;
    r.witness = w;
    return r;
  };

  if (omega.is_void() || !omega.is_pure() || omega.dim() < 1 || !is_d_dimensional_cycle(omega))
    return fail(ChordClause::pre_cycle, omega.facet_string());
  int d = omega.dim();
  for (const Face& f : omega.facets())
    if (!ambient.is_face_mask(f.mask()))
      return fail(ChordClause::pre_cycle, to_string(f, ambient.labels()));

  std::set<Face> omega_faces(omega.facets().begin(), omega.facets().end());
  std::set<Face> chord_faces;
  for (const Face& c : chords) {
    if (c.dimension() != d || !ambient.is_face_mask(c.mask()))
      return fail(ChordClause::pre_chord_faces, to_string(c, ambient.labels()));
    if (omega_faces.count(c)) return fail(ChordClause::pre_chord_disjoint, to_string(c, ambient.labels()));
    chord_faces.insert(c);
  }

  // Clause 1: parts are cycles, pairwise distinct, at least two, and their
  // facets together are exactly C u facets(Omega).
  for (const SimplicialComplex& p : parts) {
    if (p.is_void() || !p.is_pure() || p.dim() != d || !is_d_dimensional_cycle(p))
      return fail(ChordClause::part_cycle, p.facet_string());
  }
  std::set<std::vector<Face>> distinct;
  for (const SimplicialComplex& p : parts)
    if (!distinct.insert(p.facets()).second)
      return fail(ChordClause::parts_distinct, p.facet_string());
  if (parts.size() < 2) return fail(ChordClause::k_min, "k = " + std::to_string(parts.size()));

  std::set<Face> expected = omega_faces;
  expected.insert(chord_faces.begin(), chord_faces.end());
  std::set<Face> covered;
  for (const SimplicialComplex& p : parts)
    for (const Face& f : p.facets()) covered.insert(f);
  if (covered != expected) {
    for (const Face& f : covered)
      if (!expected.count(f)) return fail(ChordClause::union_cover, to_string(f, ambient.labels()));
    for (const Face& f : expected)
      if (!covered.count(f)) return fail(ChordClause::union_cover, to_string(f, ambient.labels()));
  }

  auto incidence = [&](const Face& f) {
    int k = 0;
    for (const SimplicialComplex& p : parts)
      if (std::binary_search(p.facets().begin(), p.facets().end(), f)) ++k;
    return k;
  };
  for (const Face& c : chord_faces)
    if (incidence(c) % 2) return fail(ChordClause::chord_even, to_string(c, ambient.labels()));
  for (const Face& f : omega_faces)
    if (incidence(f) % 2 == 0) return fail(ChordClause::cycle_odd, to_string(f, ambient.labels()));

  int omega_vertices = omega.support_size();
  for (const SimplicialComplex& p : parts)
    if (p.support_size() >= omega_vertices) return fail(ChordClause::vertex_shrink, p.facet_string());

  r.ok = true;
  return r;
}

ChordSearch find_chord_set_exact(const SimplicialComplex& ambient, const CycleCertificate& omega,
                                 const SearchCaps& caps) {
  ChordSearch result;
  int d = omega.dim;
  std::uint64_t v_omega = omega.cycle.support_mask();

  // Universe: the cycle's faces plus the candidate chord faces.
  std::vector<Face> universe = omega.cycle.facets();
  std::set<Face> omega_faces(universe.begin(), universe.end());
  std::size_t n_omega = universe.size();
  for (const Face& f : faces_of_dim(ambient, d)) {
    if (omega_faces.count(f)) continue;
    if (!caps.widen && (f.mask() & ~v_omega)) continue;
    universe.push_back(f);
  }
  int u = static_cast<int>(universe.size());

  // All d-dimensional cycles within the universe, i.e. kernel vectors of the
  // boundary operator with d-path-connected support, kept only when they use
  // fewer vertices than Omega (chord-set property 4 demands it of every part).
  SimplicialComplex span(ambient.n_vertices(), universe, ambient.labels());
  std::vector<Face> span_faces = faces_of_dim(span, d);
  std::map<Face, int> universe_pos;
  for (int i = 0; i < u; ++i) universe_pos[universe[i]] = i;

  std::vector<BitVec> basis = gf2_kernel_basis(boundary_matrix(span, d));
  int k = static_cast<int>(basis.size());
  if (k > std::min(caps.kernel_cap, 24)) {
    result.outcome = SearchOutcome::inconclusive;
    result.note = "kernel dimension " + std::to_string(k) + " exceeds cap " +
                  std::to_string(std::min(caps.kernel_cap, 24));
    return result;
  }

  // Candidate decomposition cycles, kept only while linearly independent:
  // the parity constraint below is linear, so a spanning subset of the
  // connected, vertex-bounded kernel supports decides solvability exactly.
  std::vector<BitVec> kept;                  // indicators over `universe` positions
  std::vector<BitVec> echelon(u, BitVec{});  // reduced forms keyed by leading position
  std::vector<std::uint64_t> face_vmask(span_faces.size());
  for (std::size_t j = 0; j < span_faces.size(); ++j) face_vmask[j] = span_faces[j].mask();

  BitVec current(static_cast<int>(span_faces.size()));
  for (std::uint64_t g = 1; g < (std::uint64_t(1) << k); ++g) {
    current ^= basis[__builtin_ctzll(g)];
    std::uint64_t verts = 0;
    for (std::size_t w = 0; w < current.words().size(); ++w) {
      std::uint64_t bits = current.words()[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        verts |= face_vmask[(w << 6) + b];
      }
    }
    if (__builtin_popcountll(verts) >= omega.vertex_count()) continue;

    BitVec ind(u);
    std::vector<Face> fs;
    for (int j : current.ones()) {
      fs.push_back(span_faces[j]);
      ind.set(universe_pos.at(span_faces[j]));
    }
    // Already in the span of kept candidates: contributes nothing new.
    BitVec reduced = ind;
    int lead = -1;
    while (true) {
      lead = -1;
      for (int i = u - 1; i >= 0; --i)
        if (reduced.get(i)) {
          lead = i;
          break;
        }
      if (lead < 0 || echelon[lead].size() == 0) break;
      reduced ^= echelon[lead];
    }
    if (lead < 0) continue;

    SimplicialComplex support(ambient.n_vertices(), fs, ambient.labels());
    if (path_components(support).size() != 1) continue;
    echelon[lead] = reduced;
    kept.push_back(std::move(ind));
    if (static_cast<int>(kept.size()) > caps.family_cap) {
      result.outcome = SearchOutcome::inconclusive;
      result.note = "more than " + std::to_string(caps.family_cap) +
                    " independent candidate decomposition cycles";
      return result;
    }
  }

  // Parity constraint: a family of candidates must sum to the indicator of
  // Omega's faces (odd coverage on Omega, even on the chords).  Coverage and
  // k >= 2 then hold automatically: odd faces are covered, and no single
  // candidate can equal Omega's indicator since all use fewer vertices.
  // With independent columns the solution, if any, is unique.
  GF2Matrix system(u, static_cast<int>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (int i : kept[j].ones()) system.set(i, static_cast<int>(j));
  BitVec target(u);
  for (std::size_t i = 0; i < n_omega; ++i) target.set(static_cast<int>(i));

  std::optional<BitVec> solution = gf2_solve(system, target);
  if (!solution) {
    result.outcome = SearchOutcome::none;
    result.note = "exhausted: the " + std::to_string(kept.size()) +
                  " candidate cycles span no decomposition" +
                  (caps.widen ? "" : " (chords restricted to V(Omega))");
    return result;
  }

  std::vector<Face> chords;
  std::vector<SimplicialComplex> parts;
  for (int j : solution->ones()) {
    std::vector<Face> fs;
    for (int i : kept[j].ones()) fs.push_back(universe[i]);
    parts.emplace_back(ambient.n_vertices(), fs, ambient.labels());
  }
  std::set<Face> used;
  for (const auto& p : parts)
    for (const Face& f : p.facets()) used.insert(f);
  for (const Face& f : used)
    if (!omega_faces.count(f)) chords.push_back(f);
  std::sort(chords.begin(), chords.end());

  if (static_cast<int>(chords.size()) > caps.chord_cap) {
    result.outcome = SearchOutcome::inconclusive;
    result.note = "a decomposition exists but its chord set exceeds the cap (" +
                  std::to_string(chords.size()) + " > " + std::to_string(caps.chord_cap) + ")";
    return result;
  }

  ChordSetCertificate cert;
  cert.dim = d;
  cert.cycle = omega.cycle;
  cert.chords = std::move(chords);
  cert.parts = std::move(parts);
  std::sort(cert.parts.begin(), cert.parts.end(),
            [](const SimplicialComplex& a, const SimplicialComplex& b) { return a.facets() < b.facets(); });
  ChordVerification check = verify_chord_set(ambient, cert.cycle, cert.chords, cert.parts);
  if (!check.ok)
    throw error(std::string("internal: constructed chord set fails clause [") +
                to_string(check.failed_clause) + "] at " + check.witness);
  result.outcome = SearchOutcome::found;
  result.certificate = std::move(cert);
  result.note = "chord set of size " + std::to_string(result.certificate->chords.size());
  return result;
}

std::optional<Chain> boundary_certificate_in_closure(const SimplicialComplex& closure_of_ambient,
                                                     const CycleCertificate& omega) {
  return bound_within(closure_of_ambient, omega.face_chain(), omega.cycle.support_mask());
}

std::optional<Chain> boundary_certificate(const SimplicialComplex& ambient,
                                          const CycleCertificate& omega) {
  for (const Face& f : omega.cycle.facets())
    if (!ambient.is_face_mask(f.mask()))
      throw precondition_error("boundary_certificate: cycle face outside the ambient complex");
  return boundary_certificate_in_closure(d_closure(ambient, omega.dim), omega);
}

DChordedVerdict is_d_chorded(const SimplicialComplex& pure_d, ChordMode mode,
                             const SearchCaps& caps) {
  if (pure_d.is_void() || !pure_d.is_pure() || pure_d.dim() < 1)
    throw precondition_error("is_d_chorded: input must be pure of dimension >= 1");
  DChordedVerdict out;
  out.dim = pure_d.dim();
  out.mode = mode;

  // A d-complete complex is d-chorded outright; no cycle needs a chord set.
  if (is_d_complete(pure_d, out.dim, pure_d.support_mask())) {
    out.complete_skeleton = true;
    out.verdict = Verdict::yes;
    out.note = "skeleton is complete on its support";
    return out;
  }

  CycleEnumeration enumeration;
  try {
    enumeration = enumerate_face_minimal_cycles(pure_d, out.dim, caps.kernel_cap);
  } catch (const infeasible_error& e) {
    out.verdict = Verdict::inconclusive;
    out.kernel_dim = e.kernel_dim;
    out.note = e.what();
    return out;
  }
  out.kernel_dim = enumeration.kernel_dim;

  std::optional<BoundarySolver> solver;
  if (mode == ChordMode::boundary) solver.emplace(d_closure(pure_d, out.dim), out.dim);
  bool any_blocked = false;
  for (const CycleCertificate& cycle : enumeration.cycles) {
    CycleFate fate{cycle, CycleFate::How::skipped_complete, std::nullopt, ""};
    if (cycle.complete) {
      out.cycles.push_back(std::move(fate));
      continue;
    }
    bool settled = false;
    if (mode == ChordMode::boundary) {
      if (solver->solve(cycle.face_chain(), cycle.cycle.support_mask())) {
        fate.how = CycleFate::How::boundary_certified;
        settled = true;
      }
    }
    if (!settled) {
      ChordSearch search = find_chord_set_exact(pure_d, cycle, caps);
      switch (search.outcome) {
        case SearchOutcome::found:
          fate.how = CycleFate::How::chord_set_found;
          fate.certificate = std::move(search.certificate);
          fate.note = search.note;
          break;
        case SearchOutcome::none:
          fate.how = CycleFate::How::no_chord_set;
          fate.note = search.note;
          out.witness = cycle;
          out.verdict = Verdict::no;
          out.note = "face-minimal non-complete cycle with no chord set: " +
                     cycle.cycle.facet_string() + " (" + search.note + ")";
          out.cycles.push_back(std::move(fate));
          return out;
        case SearchOutcome::inconclusive:
          fate.how = CycleFate::How::blocked;
          fate.note = search.note;
          any_blocked = true;
          if (!out.witness) {
            out.witness = cycle;
            out.note = "search blocked: " + search.note;
          }
          break;
      }
    }
    out.cycles.push_back(std::move(fate));
  }
  out.verdict = any_blocked ? Verdict::inconclusive : Verdict::yes;
  return out;
}

ChordedVerdict is_chorded(const SimplicialComplex& cx, ChordMode mode, const SearchCaps& caps) {
  ChordedVerdict out;
  if (cx.is_void() || cx.dim() < 1) return out;  // vacuously chorded
  for (int m = 1; m <= cx.dim(); ++m) {
    out.per_dim.push_back(is_d_chorded(pure_skeleton(cx, m), mode, caps));
    if (out.per_dim.back().verdict == Verdict::no) {
      out.verdict = Verdict::no;
      return out;
    }
    if (out.per_dim.back().verdict == Verdict::inconclusive) out.verdict = Verdict::inconclusive;
  }
  return out;
}

SpecialCycleScan special_cycle_scan(const SimplicialComplex& cx, int base_dim,
                                    const SearchCaps& caps) {
  SpecialCycleScan out;
  SimplicialComplex rebuilt = d_closure(pure_skeleton(cx, base_dim), base_dim);
  if (!(rebuilt == cx))
    throw precondition_error("special_cycle_scan: complex is not the closure of its own skeleton");
  if (cx.dim() <= base_dim) return out;

  bool any_blocked = false;
  for (int m = base_dim + 1; m <= cx.dim(); ++m) {
    SimplicialComplex skel = pure_skeleton(cx, m);
    // A complete skeleton is m-chorded, so none of its cycles is an
    // obstruction; nothing to list.
    if (is_d_complete(skel, m, skel.support_mask())) continue;
    CycleEnumeration enumeration;
    try {
      enumeration = enumerate_face_minimal_cycles(skel, m, caps.kernel_cap);
    } catch (const infeasible_error& e) {
      any_blocked = true;
      out.note += std::string(e.what()) + "; ";
      continue;
    }
    for (const CycleCertificate& cycle : enumeration.cycles) {
      if (!cycle.one_complete || cycle.complete) continue;
      SpecialCycleEntry entry;
      entry.skeleton_dim = m;
      entry.cycle = cycle;
      entry.search = find_chord_set_exact(skel, cycle, caps);
      if (entry.search.outcome == SearchOutcome::none) out.verdict = Verdict::no;
      if (entry.search.outcome == SearchOutcome::inconclusive) any_blocked = true;
      out.entries.push_back(std::move(entry));
    }
  }
  if (out.verdict != Verdict::no && any_blocked) out.verdict = Verdict::inconclusive;
  return out;
}

}  // namespace chorded
