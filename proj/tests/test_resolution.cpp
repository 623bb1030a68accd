#include <doctest.h>

#include "chorded/instances.hpp"
#include "chorded/resolution.hpp"
#include "chorded/serialize.hpp"
#include "chorded/util.hpp"
#include "support.hpp"

using namespace chorded;

namespace {
Face f(std::initializer_list<int> v) { return Face(std::vector<int>(v)); }
}

TEST_CASE("linear resolution of the worked ideals") {
  LinearResolutionResult ex = has_linear_resolution(instances::ex216_ideal());
  CHECK(!ex.linear);
  CHECK(ex.degree == 3);
  REQUIRE(ex.witness.has_value());
  CHECK(ex.witness->subset == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(ex.witness->index == 3);
  CHECK(ex.witness->dim == 1);

  CHECK(has_linear_resolution(edge_ideal(cycle_graph(4))).linear);

  LinearResolutionResult c5 = has_linear_resolution(edge_ideal(cycle_graph(5)));
  CHECK(!c5.linear);
  CHECK(c5.witness->subset == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(c5.witness->index == 1);

  // The projective-plane ideal fails over GF(2) at index 2 on all six vertices.
  MonomialIdeal rp2_ideal = stanley_reisner_ideal(instances::rp2six());
  CHECK(rp2_ideal.generation_degree() == 3);
  LinearResolutionResult rp2 = has_linear_resolution(rp2_ideal);
  CHECK(!rp2.linear);
  CHECK(rp2.witness->subset.size() == 6);
  CHECK(rp2.witness->index == 2);

  CHECK_THROWS_AS(has_linear_resolution(MonomialIdeal(4, {f({0}), f({1, 2})})),
                  precondition_error);

  // Degenerate single-degree cases.
  CHECK(has_linear_resolution(MonomialIdeal(3, {})).linear);            // zero ideal
  CHECK(has_linear_resolution(MonomialIdeal(3, {f({0}), f({2})})).linear);  // variables
}

TEST_CASE("threaded sweep matches the single-threaded one") {
  Rng rng(909);
  for (int iter = 0; iter < 40; ++iter) {
    MonomialIdeal ideal = random_single_degree_ideal(rng, 4 + rng.below(3), 2 + rng.below(2), 6);
    LinearResolutionResult a = has_linear_resolution(ideal, 1);
    LinearResolutionResult b = has_linear_resolution(ideal, 4);
    CHECK(a.linear == b.linear);
    if (a.witness) {
      REQUIRE(b.witness.has_value());
      CHECK(a.witness->subset == b.witness->subset);
      CHECK(a.witness->index == b.witness->index);
    }
  }
}

TEST_CASE("Betti tables") {
  BettiTable two_gens = betti_table(instances::ex216_ideal());
  CHECK(two_gens.at(0, 3) == 2);
  CHECK(two_gens.at(1, 6) == 1);
  long long total = 0;
  for (const auto& [ij, v] : two_gens.entries()) total += v;
  CHECK(total == 3);
  CHECK(!two_gens.is_linear(3));

  BettiTable principal = betti_table(MonomialIdeal(2, {f({0, 1})}));
  CHECK(principal.at(0, 2) == 1);
  CHECK(principal.entries().size() == 1);
  CHECK(principal.is_linear(2));

  CHECK_THROWS_AS(betti_table(MonomialIdeal(22, {f({0, 1})})), infeasible_error);
}

TEST_CASE("Betti linearity agrees with the homology sweep") {
  Rng rng(1001);
  for (int iter = 0; iter < 200; ++iter) {
    int degree = 2 + rng.below(2);
    MonomialIdeal ideal = random_single_degree_ideal(rng, 4 + rng.below(3), degree, 6);
    BettiTable table = betti_table(ideal);
    CHECK(table.is_linear(degree) == has_linear_resolution(ideal).linear);
  }
}

TEST_CASE("criterion report on the closure counterexample") {
  ResolutionReport report = criterion_report(instances::ex216_ideal());
  CHECK(report.degree == 3);
  CHECK(!report.homology.linear);
  CHECK(report.sr_chorded == Verdict::no);
  CHECK(report.skeletons_chorded == Verdict::no);
  CHECK(report.complement_chorded == Verdict::no);
  CHECK(report.complement_skeletons == Verdict::no);
  CHECK(report.special_criterion == Verdict::no);
  CHECK(report.conclusive_agreement);

  // The failure is exactly at the 3-skeleton.
  for (const DChordedVerdict& v : report.sr_verdicts)
    CHECK((v.dim == 3) == (v.verdict == Verdict::no));

  // Criterion II names the nine-tetrahedra obstruction.
  REQUIRE(report.special_cycles.entries.size() == 1);
  CHECK(report.special_cycles.entries[0].cycle.cycle.facets().size() == 9);
  CHECK(report.special_cycles.entries[0].search.outcome == SearchOutcome::none);

  // 2-skeleton of N(I) is 2-chorded even though the ideal is not linear.
  for (const DChordedVerdict& v : report.sr_verdicts)
    if (v.dim == 2) CHECK(v.verdict == Verdict::yes);
}

TEST_CASE("criterion report on linear instances") {
  ResolutionReport c4 = criterion_report(edge_ideal(cycle_graph(4)));
  CHECK(c4.homology.linear);
  CHECK(c4.sr_chorded == Verdict::yes);
  CHECK(c4.skeletons_chorded == Verdict::yes);
  CHECK(c4.complement_chorded == Verdict::yes);
  CHECK(c4.complement_skeletons == Verdict::yes);
  CHECK(c4.special_criterion == Verdict::yes);
  CHECK(c4.conclusive_agreement);
  CHECK(c4.overall() == Verdict::yes);

  ResolutionReport rp2 = criterion_report(stanley_reisner_ideal(instances::rp2six()));
  CHECK(!rp2.homology.linear);
  CHECK(rp2.sr_chorded == Verdict::no);
  CHECK(rp2.conclusive_agreement);
}

TEST_CASE("report text and json render") {
  ResolutionReport report = criterion_report(instances::ex216_ideal());
  std::string text = report.to_text();
  CHECK(text.find("characteristic 2") != std::string::npos);
  CHECK(text.find("chorded") != std::string::npos);
  json j = to_json(report);
  CHECK(j["criteria"]["a_homology_linear"]["verdict"] == "no");
  CHECK(j["criteria"]["b_stanley_reisner_chorded"] == "no");
  CHECK(j["overall"] == "no");
  CHECK(j["conclusive_agreement"] == true);
}

TEST_CASE("linear ideals have chorded closure skeletons") {
  // One direction of the equivalence, on random instances: when the sweep
  // says linear, N(I) is the closure of its skeleton and the skeleton is
  // d-chorded.
  Rng rng(1102);
  int linear_seen = 0;
  for (int iter = 0; iter < 150; ++iter) {
    int degree = 2 + rng.below(2);
    int n = 4 + rng.below(3);
    MonomialIdeal ideal = random_single_degree_ideal(rng, n, degree, 7);
    if (!has_linear_resolution(ideal).linear) continue;
    ++linear_seen;
    int d = degree - 1;
    SimplicialComplex n_of_i = stanley_reisner_complex(ideal);
    if (n_of_i.dim() < d) continue;
    CHECK(d_closure(pure_skeleton(n_of_i, d), d) == n_of_i);
    CHECK(is_d_chorded(pure_skeleton(n_of_i, d)).verdict == Verdict::yes);
  }
  CHECK(linear_seen >= 25);
}

TEST_CASE("chorded complexes have vanishing induced homology outside the top") {
  // For a d-chorded complex the closure's induced subcomplexes have zero
  // reduced homology in dimensions 0..d-2 and d.
  Rng rng(1203);
  int chorded_seen = 0;
  for (int iter = 0; iter < 120; ++iter) {
    int n = 4 + rng.below(3);
    int d = 1 + rng.below(2);
    SimplicialComplex gamma = random_pure_complex(rng, n, d, 30 + rng.below(40));
    DChordedVerdict verdict;
    try {
      verdict = is_d_chorded(gamma, ChordMode::exact);
    } catch (const infeasible_error&) {
      continue;
    }
    if (verdict.verdict != Verdict::yes) continue;
    ++chorded_seen;
    SubsetHomology engine(d_closure(gamma, d));
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
      for (int i = 0; i <= d - 2; ++i) CHECK(engine.reduced_dim(s, i) == 0);
      CHECK(engine.reduced_dim(s, d) == 0);
    }
  }
  CHECK(chorded_seen >= 40);
}

TEST_CASE("degree-two crosscheck on named graphs") {
  FroebergRecord p4 = froeberg_crosscheck(path_graph(4));
  CHECK(p4.chordal);
  CHECK(p4.complement_edge_ideal_linear);
  CHECK(p4.agree);

  FroebergRecord c5 = froeberg_crosscheck(cycle_graph(5));
  CHECK(!c5.chordal);
  CHECK(!c5.complement_edge_ideal_linear);
  CHECK(c5.agree);

  FroebergRecord complete = froeberg_crosscheck(complete_graph(4));
  CHECK(complete.agree);

  Rng rng(1304);
  for (int iter = 0; iter < 120; ++iter) {
    Graph g = random_graph(rng, 3 + rng.below(4), 15 + rng.below(70));
    CHECK(froeberg_crosscheck(g).agree);
  }
}

TEST_CASE("all small single-degree ideals: homology and chordedness agree") {
  // Exhaustive over every nonzero generating set of degree-t square-free
  // monomials on n variables.
  for (auto [n, t] :
       std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {6, 2}}) {
    std::vector<Face> monomials;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for_each_subset(all, t, [&](const std::vector<int>& sub) { monomials.push_back(Face(sub)); });
    int m = static_cast<int>(monomials.size());
    for (std::uint64_t bits = 1; bits < (1ULL << m); ++bits) {
      std::vector<Face> gens;
      for (int i = 0; i < m; ++i)
        if (bits >> i & 1) gens.push_back(monomials[i]);
      MonomialIdeal ideal(n, std::move(gens));
      bool linear = has_linear_resolution(ideal).linear;
      ChordedVerdict chorded = is_chorded(stanley_reisner_complex(ideal), ChordMode::boundary);
      REQUIRE(chorded.verdict != Verdict::inconclusive);
      CHECK(linear == (chorded.verdict == Verdict::yes));
    }
  }
}

TEST_CASE("random ideals: homology and chordedness verdicts agree") {
  Rng rng(1405);
  for (int iter = 0; iter < 60; ++iter) {
    int degree = 2 + rng.below(3);
    int n = std::min(7, degree + 2 + rng.below(4));
    MonomialIdeal ideal = random_single_degree_ideal(rng, n, degree, 8);
    ResolutionReport report = criterion_report(ideal);
    CHECK(report.conclusive_agreement);
  }
}
