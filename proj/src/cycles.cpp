#include "chorded/cycles.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "chorded/gf2.hpp"
#include "chorded/util.hpp"

namespace chorded {

Chain CycleCertificate::face_chain() const { return Chain(dim, cycle.facets()); }

bool is_d_dimensional_cycle(const SimplicialComplex& sigma) {
  if (sigma.is_void() || !sigma.is_pure() || sigma.dim() < 1)
    throw precondition_error("is_d_dimensional_cycle: input must be pure of dimension >= 1");
  std::unordered_map<std::uint64_t, int> incidence;
  incidence.reserve(sigma.facets().size() * (sigma.dim() + 1));
  for (const Face& f : sigma.facets())
    for (int v : f) ++incidence[f.mask() & ~(std::uint64_t(1) << v)];
  for (auto& [sub, k] : incidence)
    if (k % 2) return false;
  return path_components(sigma).size() == 1;
}

namespace {

bool pair_covered(const SimplicialComplex& cx, int u, int v) {
  std::uint64_t m = (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
  for (const Face& f : cx.facets())
    if ((m & ~f.mask()) == 0) return true;
  return false;
}

bool compute_one_complete(const SimplicialComplex& cx) {
  std::vector<int> verts;
  std::uint64_t support = cx.support_mask();
  for (int v = 0; v < cx.n_vertices(); ++v)
    if (support >> v & 1) verts.push_back(v);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!pair_covered(cx, verts[i], verts[j])) return false;
  return true;
}

}  // namespace

CycleCertificate certify_cycle(const SimplicialComplex& sigma, bool face_minimal) {
  if (!is_d_dimensional_cycle(sigma))
    throw precondition_error("certify_cycle: not a d-dimensional cycle");
  CycleCertificate cert;
  cert.dim = sigma.dim();
  cert.cycle = sigma;
  cert.face_minimal = face_minimal;
  cert.complete = is_d_complete(sigma, cert.dim, sigma.support_mask());
  cert.one_complete = compute_one_complete(sigma);
  return cert;
}

CycleEnumeration enumerate_face_minimal_cycles(const SimplicialComplex& cx, int d, int kernel_cap) {
  CycleEnumeration out;
  std::vector<Face> faces = faces_of_dim(cx, d);
  if (faces.empty() || d < 1) return out;

  std::vector<BitVec> basis = gf2_kernel_basis(boundary_matrix(cx, d));
  int k = static_cast<int>(basis.size());
  out.kernel_dim = k;
  if (k == 0) return out;
  // 2^24 combinations is already past any reasonable budget; the hard ceiling
  // also keeps the support buffer bounded whatever cap the caller passes.
  if (k > std::min(kernel_cap, 24))
    throw infeasible_error("cycle enumeration infeasible: kernel dimension " + std::to_string(k) +
                               " exceeds cap " + std::to_string(std::min(kernel_cap, 24)),
                           k);

  // Walk all nonzero kernel vectors in Gray-code order, collecting supports.
  int n_faces = static_cast<int>(faces.size());
  int words = (n_faces + 63) / 64;
  std::vector<std::uint64_t> supports;  // flattened, `words` per entry
  supports.reserve((std::size_t(1) << k) * words);
  BitVec current(n_faces);
  for (std::uint64_t g = 1; g < (std::uint64_t(1) << k); ++g) {
    current ^= basis[__builtin_ctzll(g)];
    supports.insert(supports.end(), current.words().begin(), current.words().end());
  }

  std::size_t count = supports.size() / words;
  std::vector<std::uint32_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<std::uint32_t>(i);
  auto cmp_words = [&](std::uint32_t a, std::uint32_t b) {
    const std::uint64_t* pa = &supports[std::size_t(a) * words];
    const std::uint64_t* pb = &supports[std::size_t(b) * words];
    for (int w = 0; w < words; ++w)
      if (pa[w] != pb[w]) return pa[w] < pb[w];
    return false;
  };
  std::sort(order.begin(), order.end(), cmp_words);
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::uint32_t a, std::uint32_t b) { return !cmp_words(a, b) && !cmp_words(b, a); }),
              order.end());

  std::vector<int> weights(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* p = &supports[i * words];
    int c = 0;
    for (int w = 0; w < words; ++w) c += __builtin_popcountll(p[w]);
    weights[i] = c;
  }
  auto weight = [&](std::uint32_t a) { return weights[a]; };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return weight(a) < weight(b); });

  // Keep inclusion-minimal supports.  The kept list stays sorted by weight,
  // and supports of equal weight cannot strictly contain one another, so the
  // scan for a dominating kept support can stop at the candidate's weight.
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t cand : order) {
    const std::uint64_t* pc = &supports[std::size_t(cand) * words];
    int cand_weight = weight(cand);
    bool dominated = false;
    for (std::uint32_t m : minimal) {
      if (weight(m) >= cand_weight) break;
      const std::uint64_t* pm = &supports[std::size_t(m) * words];
      bool subset = true;
      for (int w = 0; w < words; ++w)
        if (pm[w] & ~pc[w]) {
          subset = false;
          break;
        }
      if (subset) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(cand);
  }

  for (std::uint32_t m : minimal) {
    const std::uint64_t* pm = &supports[std::size_t(m) * words];
    std::vector<Face> fs;
    for (int j = 0; j < n_faces; ++j)
      if (pm[j >> 6] >> (j & 63) & 1) fs.push_back(faces[j]);
    SimplicialComplex support_cx(cx.n_vertices(), std::move(fs), cx.labels());
    out.cycles.push_back(certify_cycle(support_cx, /*face_minimal=*/true));
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const CycleCertificate& a, const CycleCertificate& b) {
              return a.cycle.facets() < b.cycle.facets();
            });
  return out;
}

CycleCertificate cone_extension(const CycleCertificate& omega, const std::vector<Face>& lid,
                                int apex) {
  int d = omega.dim;
  std::uint64_t v_omega = omega.cycle.support_mask();
  if (apex < 64 && (v_omega >> apex & 1))
    throw precondition_error("cone_extension: apex vertex lies in V(Omega)");
  for (const Face& a : lid) {
    if (a.dimension() != d + 1)
      throw precondition_error("cone_extension: lid face of dimension != d+1");
    if (a.mask() & ~v_omega)
      throw precondition_error("cone_extension: lid face leaves V(Omega)");
  }

  // Boundary condition: the lid's boundary must be exactly the face sum of Omega.
  Chain lid_chain(d + 1, lid);
  if (boundary(lid_chain) != omega.face_chain())
    throw precondition_error("cone_extension: lid boundary differs from the cycle's face sum");

  // Minimality: no strict subset of the lid has the same boundary, which holds
  // iff the lid's boundary columns are linearly independent.
  {
    std::vector<Face> rows_faces;
    std::unordered_map<std::uint64_t, int> row_of;
    for (const Face& a : lid)
      for (int v : a) {
        std::uint64_t sub = a.mask() & ~(std::uint64_t(1) << v);
        if (row_of.emplace(sub, static_cast<int>(row_of.size())).second) rows_faces.push_back(Face::from_mask(sub));
      }
    GF2Matrix m(static_cast<int>(row_of.size()), static_cast<int>(lid.size()));
    for (std::size_t j = 0; j < lid.size(); ++j)
      for (int v : lid[j]) m.set(row_of.at(lid[j].mask() & ~(std::uint64_t(1) << v)), static_cast<int>(j));
    if (gf2_rank(m) != static_cast<int>(lid.size()))
      throw precondition_error("cone_extension: lid is not minimal (a strict subset bounds the cycle)");
  }

  int n = std::max(omega.cycle.n_vertices(), apex + 1);
  std::vector<std::string> labels = omega.cycle.labels();
  while (static_cast<int>(labels.size()) < n) labels.push_back("v" + std::to_string(labels.size()));
  std::vector<Face> facets;
  for (const Face& f : omega.cycle.facets()) facets.push_back(f.with_vertex(apex));
  for (const Face& a : lid) facets.push_back(a);
  SimplicialComplex phi(n, std::move(facets), std::move(labels));
  return certify_cycle(phi, /*face_minimal=*/false);
}

std::vector<CycleCertificate> vertex_link_cycles(const CycleCertificate& omega, int v) {
  if (omega.dim < 2)
    throw precondition_error("vertex_link_cycles: requires a cycle of dimension >= 2");
  if (!(omega.cycle.support_mask() >> v & 1))
    throw precondition_error("vertex_link_cycles: vertex not in V(Omega)");
  std::vector<Face> stripped;
  for (const Face& f : omega.cycle.facets())
    if (f.contains_vertex(v)) stripped.push_back(f.without_vertex(v));
  SimplicialComplex link(omega.cycle.n_vertices(), std::move(stripped), omega.cycle.labels());
  std::vector<CycleCertificate> out;
  for (const SimplicialComplex& comp : path_components(link))
    out.push_back(certify_cycle(comp, /*face_minimal=*/false));
  return out;
}

}  // namespace chorded
