#include "chorded/serialize.hpp"

namespace chorded {

json to_json(const Face& f, const std::vector<std::string>& labels) {
  json out = json::array();
  for (int v : f) out.push_back(labels[v]);
  return out;
}

namespace {

json faces_json(const std::vector<Face>& faces, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const Face& f : faces) out.push_back(to_json(f, labels));
  return out;
}

}  // namespace

json to_json(const SimplicialComplex& cx) {
  return json{{"n_vertices", cx.n_vertices()},
              {"labels", cx.labels()},
              {"facets", faces_json(cx.facets(), cx.labels())}};
}

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Face& g : ideal.generators()) {
    std::string mono;
    for (int v : g) {
      if (!mono.empty()) mono += '*';
      mono += ideal.variable(v);
    }
    gens.push_back(mono);
  }
  return json{{"variables", ideal.n_variables()}, {"generators", gens}};
}

json to_json(const Chain& chain, const std::vector<std::string>& labels) {
  return json{{"dimension", chain.dim}, {"faces", faces_json(chain.faces, labels)}};
}

json to_json(const CycleCertificate& cert) {
  return json{{"dimension", cert.dim},
              {"faces", faces_json(cert.cycle.facets(), cert.cycle.labels())},
              {"flags",
               {{"face_minimal", cert.face_minimal},
                {"d_complete", cert.complete},
                {"one_complete", cert.one_complete}}}};
}

json to_json(const ChordSetCertificate& cert) {
  const auto& labels = cert.cycle.labels();
  json parts = json::array();
  for (const SimplicialComplex& p : cert.parts) parts.push_back(faces_json(p.facets(), labels));
  return json{{"dimension", cert.dim},
              {"cycle", faces_json(cert.cycle.facets(), labels)},
              {"chords", faces_json(cert.chords, labels)},
              {"parts", parts}};
}

json to_json(const DChordedVerdict& v) {
  json out{{"dim", v.dim},
           {"verdict", to_string(v.verdict)},
           {"mode", to_string(v.mode)},
           {"complete_skeleton", v.complete_skeleton}};
  if (v.kernel_dim >= 0) out["kernel_dim"] = v.kernel_dim;
  int skipped = 0, boundary_certified = 0, chord_sets = 0;
  json certs = json::array();
  for (const CycleFate& fate : v.cycles) {
    switch (fate.how) {
      case CycleFate::How::skipped_complete: ++skipped; break;
      case CycleFate::How::boundary_certified: ++boundary_certified; break;
      case CycleFate::How::chord_set_found:
        ++chord_sets;
        if (fate.certificate) certs.push_back(to_json(*fate.certificate));
        break;
      default: break;
    }
  }
  out["cycles"] = static_cast<int>(v.cycles.size());
  out["skipped_complete"] = skipped;
  out["boundary_certified"] = boundary_certified;
  out["chord_set_certified"] = chord_sets;
  if (!certs.empty()) out["certificates"] = certs;
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const ChordedVerdict& v) {
  json dims = json::array();
  for (const DChordedVerdict& d : v.per_dim) dims.push_back(to_json(d));
  return json{{"verdict", to_string(v.verdict)}, {"dimensions", dims}};
}

json to_json(const SpecialCycleScan& scan) {
  json entries = json::array();
  for (const SpecialCycleEntry& e : scan.entries) {
    json entry{{"skeleton_dim", e.skeleton_dim},
               {"cycle", to_json(e.cycle)},
               {"search", to_string(e.search.outcome)}};
    if (e.search.certificate) entry["certificate"] = to_json(*e.search.certificate);
    if (!e.search.note.empty()) entry["note"] = e.search.note;
    entries.push_back(entry);
  }
  json out{{"verdict", to_string(scan.verdict)}, {"cycles", entries}};
  if (!scan.note.empty()) out["note"] = scan.note;
  return out;
}

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [ij, v] : table.entries())
    entries.push_back(json{{"i", ij.first}, {"j", ij.second}, {"beta", v}});
  return json{{"entries", entries}};
}

json to_json(const ResolutionReport& report) {
  json out{{"characteristic", 2},
           {"ideal", to_json(report.ideal)},
           {"degree", report.degree},
           {"mode", to_string(report.mode)}};
  json a{{"verdict", report.homology.linear ? "yes" : "no"}};
  if (report.homology.witness) {
    a["witness"] = json{{"subset", report.homology.witness->subset},
                        {"index", report.homology.witness->index},
                        {"dim", report.homology.witness->dim}};
  }
  out["criteria"] = json{{"a_homology_linear", a},
                         {"b_stanley_reisner_chorded", to_string(report.sr_chorded)},
                         {"c_skeletons_chorded", to_string(report.skeletons_chorded)},
                         {"d_complement_closure_chorded", to_string(report.complement_chorded)},
                         {"e_complement_skeletons_chorded", to_string(report.complement_skeletons)},
                         {"special_cycle_criterion", to_string(report.special_criterion)}};
  json sr = json::array();
  for (const DChordedVerdict& v : report.sr_verdicts) sr.push_back(to_json(v));
  out["stanley_reisner_skeletons"] = sr;
  out["special_cycles"] = to_json(report.special_cycles);
  out["conclusive_agreement"] = report.conclusive_agreement;
  out["overall"] = to_string(report.overall());
  return out;
}

}  // namespace chorded
