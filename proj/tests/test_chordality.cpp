#include <doctest.h>

#include <set>

#include "chorded/chordality.hpp"
#include "chorded/instances.hpp"
#include "chorded/util.hpp"
#include "support.hpp"

using namespace chorded;

namespace {

Face f(std::initializer_list<int> v) { return Face(std::vector<int>(v)); }

SimplicialComplex pyramid_shell(int apex) {
  // Boundary of the split-base pyramid over the octahedron equator.
  std::vector<Face> fs{f({0, 1, apex}), f({1, 2, apex}), f({2, 3, apex}), f({0, 3, apex}),
                       f({0, 1, 2}), f({0, 2, 3})};
  return SimplicialComplex(6, std::move(fs), instances::octa().labels());
}

}  // namespace

TEST_CASE("verify_chord_set accepts the split octahedron") {
  ChordVerification v = verify_chord_set(instances::octa_chorded(), instances::octa(),
                                         {f({0, 1, 2}), f({0, 2, 3})},
                                         {pyramid_shell(4), pyramid_shell(5)});
  CHECK(v.ok);
}

TEST_CASE("verify_chord_set names the violated clause") {
  SimplicialComplex ambient = instances::octa_chorded();
  SimplicialComplex omega = instances::octa();
  std::vector<Face> chords{f({0, 1, 2}), f({0, 2, 3})};

  // Too few parts.
  ChordVerification k1 = verify_chord_set(ambient, omega, chords, {pyramid_shell(4)});
  CHECK(!k1.ok);
  CHECK(k1.failed_clause == ChordClause::k_min);

  // A complete cycle needs no chord set; the empty proposal cannot reach k >= 2.
  ChordVerification tetra_empty =
      verify_chord_set(instances::tetra(), instances::tetra(), {}, {});
  CHECK(!tetra_empty.ok);
  CHECK(tetra_empty.failed_clause == ChordClause::k_min);

  // A complete non-example: the cycle itself among the parts passes the
  // parity clauses but fails the vertex-shrink clause.
  Graph k4 = complete_graph(4);
  SimplicialComplex k4cx = complex_from_graph(k4);
  SimplicialComplex square(4, {f({0, 1}), f({1, 2}), f({2, 3}), f({0, 3})});
  auto tri = [&](int a, int b, int c) {
    return SimplicialComplex(4, {f({a, b}), f({a, c}), f({b, c})});
  };
  ChordVerification shrink = verify_chord_set(
      k4cx, square, {f({0, 2}), f({1, 3})},
      {square, tri(0, 1, 2), tri(0, 2, 3), tri(0, 1, 3), tri(1, 2, 3)});
  CHECK(!shrink.ok);
  CHECK(shrink.failed_clause == ChordClause::vertex_shrink);

  // The single-chord decomposition into two triangles is a genuine chord set.
  ChordVerification fine =
      verify_chord_set(k4cx, square, {f({0, 2})}, {tri(0, 1, 2), tri(0, 2, 3)});
  CHECK(fine.ok);

  // All four triangles cover every square edge twice: parity clause 3 trips.
  ChordVerification even_cycle =
      verify_chord_set(k4cx, square, {f({0, 2}), f({1, 3})},
                       {tri(0, 1, 2), tri(0, 2, 3), tri(0, 1, 3), tri(1, 2, 3)});
  CHECK(!even_cycle.ok);
  CHECK(even_cycle.failed_clause == ChordClause::cycle_odd);

  ChordVerification duplicate =
      verify_chord_set(k4cx, square, {f({0, 2}), f({1, 3})},
                       {tri(0, 1, 2), tri(0, 1, 2), tri(0, 2, 3), tri(1, 2, 3)});
  CHECK(!duplicate.ok);
  CHECK(duplicate.failed_clause == ChordClause::parts_distinct);

  ChordVerification stray = verify_chord_set(k4cx, square, {},
                                             {tri(0, 1, 2), tri(0, 2, 3)});
  CHECK(!stray.ok);
  CHECK(stray.failed_clause == ChordClause::union_cover);
}

TEST_CASE("exact chord-set search on the octahedron") {
  CycleCertificate octa_cycle = certify_cycle(instances::octa(), true);
  ChordSearch found = find_chord_set_exact(instances::octa_chorded(), octa_cycle);
  REQUIRE(found.outcome == SearchOutcome::found);
  CHECK(found.certificate->chords == std::vector<Face>{f({0, 1, 2}), f({0, 2, 3})});
  REQUIRE(found.certificate->parts.size() == 2);
  ChordVerification reverify =
      verify_chord_set(instances::octa_chorded(), found.certificate->cycle,
                       found.certificate->chords, found.certificate->parts);
  CHECK(reverify.ok);

  // The bare octahedron offers no chord faces at all.
  ChordSearch none = find_chord_set_exact(instances::octa(), octa_cycle);
  CHECK(none.outcome == SearchOutcome::none);
}

TEST_CASE("the nine-tetrahedra cycle has no chord set") {
  SimplicialComplex skel3 = pure_skeleton(d_closure(instances::ex216()), 3);
  CycleCertificate nine = enumerate_face_minimal_cycles(skel3, 3).cycles[0];
  ChordSearch search = find_chord_set_exact(skel3, nine);
  CHECK(search.outcome == SearchOutcome::none);
}

TEST_CASE("boundary certificates") {
  CycleCertificate octa_cycle = certify_cycle(instances::octa(), true);

  // Filling the interior diagonal makes the octahedron bound.
  std::optional<Chain> witness = boundary_certificate(instances::octa_filled(), octa_cycle);
  REQUIRE(witness.has_value());
  CHECK(witness->dim == 3);
  CHECK(boundary(*witness) == octa_cycle.face_chain());

  // With only the two equator chords it does not bound.
  CHECK(!boundary_certificate(instances::octa_chorded(), octa_cycle).has_value());

  // Every face-minimal 2-cycle of the six-vertex complex bounds in its closure.
  CycleEnumeration cycles2 = enumerate_face_minimal_cycles(instances::ex216(), 2);
  CHECK(cycles2.cycles.size() >= 9);
  for (const CycleCertificate& c : cycles2.cycles)
    CHECK(boundary_certificate(instances::ex216(), c).has_value());

  SimplicialComplex skel3 = pure_skeleton(d_closure(instances::ex216()), 3);
  CycleCertificate nine = enumerate_face_minimal_cycles(skel3, 3).cycles[0];
  CHECK(!boundary_certificate(skel3, nine).has_value());
}

TEST_CASE("is_d_chorded on graphs") {
  Graph square_plus = cycle_graph(4);
  square_plus.add_edge(0, 2);
  DChordedVerdict yes = is_d_chorded(complex_from_graph(square_plus));
  CHECK(yes.verdict == Verdict::yes);

  DChordedVerdict no = is_d_chorded(complex_from_graph(cycle_graph(5)));
  CHECK(no.verdict == Verdict::no);
  REQUIRE(no.witness.has_value());
  CHECK(no.witness->cycle.facets().size() == 5);
}

TEST_CASE("is_d_chorded on the worked 2-complexes") {
  // Both modes agree that the six-vertex complex is 2-chorded.
  CHECK(is_d_chorded(instances::ex216(), ChordMode::boundary).verdict == Verdict::yes);
  CHECK(is_d_chorded(instances::ex216(), ChordMode::exact).verdict == Verdict::yes);

  // The octahedron with only the two equator chords is not 2-chorded: each
  // pyramid shell is face-minimal, not complete, and has no chord set.
  DChordedVerdict no = is_d_chorded(instances::octa_chorded(), ChordMode::boundary);
  CHECK(no.verdict == Verdict::no);
  REQUIRE(no.witness.has_value());
  CHECK(no.witness->cycle.support_size() == 5);

  // The projective plane is its own only face-minimal 2-cycle and is chordless.
  DChordedVerdict rp2 = is_d_chorded(instances::rp2six(), ChordMode::boundary);
  CHECK(rp2.verdict == Verdict::no);
  CHECK(rp2.witness->cycle.facets().size() == 10);
}

TEST_CASE("is_chorded aggregates skeletons") {
  ChordedVerdict closure = is_chorded(d_closure(instances::ex216()));
  CHECK(closure.verdict == Verdict::no);
  REQUIRE(!closure.per_dim.empty());
  CHECK(closure.per_dim.back().dim == 3);
  CHECK(closure.per_dim.back().verdict == Verdict::no);

  SimplicialComplex simplex(5, {f({0, 1, 2, 3, 4})});
  CHECK(is_chorded(simplex).verdict == Verdict::yes);

  CHECK(is_chorded(instances::rp2six()).verdict == Verdict::no);
}

TEST_CASE("clique closures of chordal graphs are chorded") {
  Rng rng(2024);
  int chordal_seen = 0;
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = random_graph(rng, 5 + rng.below(2), 30 + rng.below(45));
    if (g.edge_count() == 0) continue;
    if (!is_chordal_graph(g).chordal) continue;
    ++chordal_seen;
    SimplicialComplex clique_closure = d_closure(complex_from_graph(g), 1);
    CHECK(is_chorded(clique_closure).verdict == Verdict::yes);
    SpecialCycleScan scan = special_cycle_scan(clique_closure, 1);
    CHECK(scan.verdict == Verdict::yes);
    for (const SpecialCycleEntry& e : scan.entries)
      CHECK(e.search.outcome == SearchOutcome::found);
  }
  CHECK(chordal_seen >= 15);
}

TEST_CASE("chorded skeleton plus clean scan implies the closure is chorded") {
  Rng rng(8080);
  int confirmed = 0;
  for (int iter = 0; iter < 250 && confirmed < 60; ++iter) {
    int n = 5 + rng.below(2);
    int d = 1 + rng.below(2);
    SimplicialComplex gamma = random_pure_complex(rng, n, d, 25 + rng.below(45));
    DChordedVerdict base;
    try {
      base = is_d_chorded(gamma, ChordMode::exact);
    } catch (const infeasible_error&) {
      continue;
    }
    if (base.verdict != Verdict::yes) continue;
    SimplicialComplex closure = d_closure(gamma, d);
    SpecialCycleScan scan = special_cycle_scan(closure, d);
    if (scan.verdict != Verdict::yes) continue;
    CHECK(is_chorded(closure, ChordMode::boundary).verdict == Verdict::yes);
    ++confirmed;
  }
  CHECK(confirmed >= 60);
}

TEST_CASE("special cycle scan flags the nine-tetrahedra obstruction") {
  SimplicialComplex closure = d_closure(instances::ex216());
  SpecialCycleScan scan = special_cycle_scan(closure, 2);
  CHECK(scan.verdict == Verdict::no);
  REQUIRE(scan.entries.size() == 1);
  CHECK(scan.entries[0].skeleton_dim == 3);
  CHECK(scan.entries[0].cycle.one_complete);
  CHECK(!scan.entries[0].cycle.complete);
  CHECK(scan.entries[0].cycle.cycle.facets().size() == 9);
  CHECK(scan.entries[0].search.outcome == SearchOutcome::none);

  // The closure of the full 2-skeleton on five vertices is the solid simplex.
  std::vector<int> all{0, 1, 2, 3, 4};
  std::vector<Face> triangles;
  for_each_subset(all, 3, [&](const std::vector<int>& sub) { triangles.push_back(Face(sub)); });
  SimplicialComplex full2(5, std::move(triangles));
  SpecialCycleScan empty_scan = special_cycle_scan(d_closure(full2, 2), 2);
  CHECK(empty_scan.verdict == Verdict::yes);
  CHECK(empty_scan.entries.empty());

  CHECK_THROWS_AS(special_cycle_scan(instances::ex216(), 2), precondition_error);
}

TEST_CASE("chordal graph oracle") {
  CHECK(!is_chordal_graph(cycle_graph(4)).chordal);
  CHECK(is_chordal_graph(path_graph(6)).chordal);
  Graph chord = cycle_graph(4);
  chord.add_edge(0, 2);
  CHECK(is_chordal_graph(chord).chordal);
  CHECK(is_chordal_graph(complete_graph(5)).chordal);
  CHECK(is_chordal_graph(Graph(3)).chordal);  // edgeless

  ChordalityWitness hole = is_chordal_graph(cycle_graph(6));
  REQUIRE(!hole.chordal);
  CHECK(hole.chordless_cycle.size() == 6);
}

TEST_CASE("elimination witness and hole witness are sound") {
  Rng rng(3030);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 3 + rng.below(5);
    Graph g = random_graph(rng, n, 20 + rng.below(60));
    ChordalityWitness w = is_chordal_graph(g);
    CHECK(w.chordal == oracle::all_chordless_cycles(g).empty());
    if (w.chordal) {
      // Later neighbours of each vertex in the order form a clique.
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[w.elimination_order[i]] = i;
      for (int v = 0; v < n; ++v) {
        std::vector<int> later;
        for (int u = 0; u < n; ++u)
          if (g.has_edge(u, v) && pos[u] > pos[v]) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
          for (std::size_t b = a + 1; b < later.size(); ++b)
            CHECK(g.has_edge(later[a], later[b]));
      }
    } else {
      const std::vector<int>& hole = w.chordless_cycle;
      REQUIRE(hole.size() >= 4);
      for (std::size_t i = 0; i < hole.size(); ++i)
        for (std::size_t j = i + 1; j < hole.size(); ++j) {
          bool adjacent_on_cycle = (j == i + 1) || (i == 0 && j == hole.size() - 1);
          CHECK(g.has_edge(hole[i], hole[j]) == adjacent_on_cycle);
        }
    }
  }
}

TEST_CASE("graph complement") {
  Graph c4 = cycle_graph(4);
  Graph comp = graph_complement(c4);
  CHECK(comp.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  Rng rng(4040);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = random_graph(rng, 2 + rng.below(8), 50);
    CHECK(graph_complement(graph_complement(g)) == g);
  }
  // The pentagon is self-complementary: its complement is again a 5-cycle.
  Graph c5_comp = graph_complement(cycle_graph(5));
  CHECK(c5_comp.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5_comp.degree(v) == 2);
  CHECK(oracle::all_simple_cycles(c5_comp).size() == 1);
}

TEST_CASE("1-chorded agrees with graph chordality") {
  // Exhaustive over all graphs on up to five vertices with an edge, then
  // seeded samples at six and seven.
  for (int n = 2; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << pairs); ++bits) {
      Graph g = graph_from_bits(n, bits);
      DChordedVerdict v = is_d_chorded(complex_from_graph(g), ChordMode::exact);
      CHECK(v.verdict == (is_chordal_graph(g).chordal ? Verdict::yes : Verdict::no));
    }
  }
  Rng rng(5050);
  for (int iter = 0; iter < 150; ++iter) {
    Graph g = random_graph(rng, 6 + rng.below(2), 20 + rng.below(60));
    if (g.edge_count() == 0) continue;
    DChordedVerdict v = is_d_chorded(complex_from_graph(g), ChordMode::exact);
    CHECK(v.verdict == (is_chordal_graph(g).chordal ? Verdict::yes : Verdict::no));
  }
}

TEST_CASE("exact search agrees with the definitional brute force") {
  Rng rng(9090);
  int compared = 0, found_count = 0;
  for (int iter = 0; iter < 2500 && compared < 400; ++iter) {
    int n = 4 + rng.below(3);
    int d = 1 + rng.below(2);
    SimplicialComplex gamma = random_pure_complex(rng, n, d, 25 + rng.below(50));
    CycleEnumeration enumerated;
    try {
      enumerated = enumerate_face_minimal_cycles(gamma, d, 14);
    } catch (const infeasible_error&) {
      continue;
    }
    for (const CycleCertificate& omega : enumerated.cycles) {
      if (omega.complete) continue;
      std::optional<bool> brute = oracle::brute_force_has_chord_set(gamma, omega.cycle);
      if (!brute) continue;  // instance too large for the oracle
      ChordSearch search = find_chord_set_exact(gamma, omega);
      REQUIRE(search.outcome != SearchOutcome::inconclusive);
      CHECK((search.outcome == SearchOutcome::found) == *brute);
      ++compared;
      if (search.outcome == SearchOutcome::found) ++found_count;
    }
  }
  CHECK(compared >= 400);
  CHECK(found_count >= 50);  // both outcomes must actually occur
  CHECK(compared - found_count >= 40);
}

TEST_CASE("boundary-certified cycles also pass the exact search") {
  Rng rng(6060);
  int agreements = 0;
  for (int iter = 0; iter < 250 && agreements < 200; ++iter) {
    int n = 5 + rng.below(2);
    int d = 1 + rng.below(2);
    SimplicialComplex gamma = random_pure_complex(rng, n, d, 30 + rng.below(45));
    CycleEnumeration enumerated;
    try {
      enumerated = enumerate_face_minimal_cycles(gamma, d, 14);
    } catch (const infeasible_error&) {
      continue;
    }
    for (const CycleCertificate& omega : enumerated.cycles) {
      if (omega.complete) continue;
      if (!boundary_certificate(gamma, omega).has_value()) continue;
      ChordSearch exact = find_chord_set_exact(gamma, omega);
      CHECK(exact.outcome == SearchOutcome::found);
      ++agreements;
    }
  }
  CHECK(agreements >= 200);
}

TEST_CASE("in exact-mode d-chorded complexes every cycle bounds in the closure") {
  Rng rng(7070);
  int bounded = 0;
  for (int iter = 0; iter < 300 && bounded < 200; ++iter) {
    int n = 5 + rng.below(2);
    int d = 1 + rng.below(2);
    SimplicialComplex gamma = random_pure_complex(rng, n, d, 25 + rng.below(45));
    DChordedVerdict verdict;
    try {
      verdict = is_d_chorded(gamma, ChordMode::exact);
    } catch (const infeasible_error&) {
      continue;
    }
    if (verdict.verdict != Verdict::yes) continue;
    // Not only the face-minimal cycles: every connected component of every
    // kernel element is a cycle and must bound on its own vertex set.
    std::vector<BitVec> basis = gf2_kernel_basis(boundary_matrix(gamma, d));
    if (basis.empty() || basis.size() > 10) continue;
    std::vector<Face> faces = faces_of_dim(gamma, d);
    SimplicialComplex closure = d_closure(gamma, d);
    BitVec current(static_cast<int>(faces.size()));
    for (std::uint64_t g = 1; g < (std::uint64_t(1) << basis.size()); ++g) {
      current ^= basis[__builtin_ctzll(g)];
      std::vector<Face> support;
      for (int j : current.ones()) support.push_back(faces[j]);
      SimplicialComplex carrier(gamma.n_vertices(), support, gamma.labels());
      for (const SimplicialComplex& comp : path_components(carrier)) {
        CycleCertificate omega = certify_cycle(comp);
        CHECK(boundary_certificate_in_closure(closure, omega).has_value());
        ++bounded;
      }
    }
  }
  CHECK(bounded >= 200);
}
