#include "supchar/embed.hpp"

#include <algorithm>
#include <set>

#include "supchar/error.hpp"

namespace supchar {

namespace {

std::vector<long> class_product(const FiniteGroup& g, std::span<const int> c1,
                                std::span<const int> c2) {
  std::vector<long> out(g.order(), 0);
  for (int x : c1) {
    for (int y : c2) ++out[g.mul(x, y)];
  }
  return out;
}

std::string verdict_text(const IsomorphismVerdict& v) {
  std::string s;
  for (const auto& f : v.failures) s += (s.empty() ? "" : "; ") + f;
  return s;
}

EmbeddingReport build_embedding(const SemidirectSpec& spec) {
  spec.validate();
  const FiniteGroup semi = semidirect_product(spec);
  const FiniteGroup direct = direct_product(spec.h, spec.k);
  if (semi.order() != direct.order() || semi.identity() != direct.identity()) {
    throw TheoremViolation("semidirect and direct products do not share element indexing");
  }
  auto semi_ctx = TheoryContext::create(semi);
  auto direct_ctx = TheoryContext::create(direct);
  auto minimal = minimal_sct(semi_ctx);

  const Partition element_parts = minimal.superclasses();
  Partition class_parts;
  try {
    class_parts = class_partition_from_elements(*direct_ctx, element_parts);
  } catch (const InputError& e) {
    throw TheoremViolation(std::string("conjugacy classes do not form a class partition of H x K: ") +
                           e.what());
  }
  auto embedded = accept_theory(direct_ctx, class_parts, "image of the minimal theory");
  return EmbeddingReport{spec, semi_ctx, direct_ctx, std::move(minimal), std::move(embedded),
                         {}, {}, {}, {}, 0};
}

}  // namespace

EmbeddingReport embed_minimal_sct(const SemidirectSpec& spec) {
  EmbeddingReport r = build_embedding(spec);
  const auto& semi = r.semidirect->group();
  const auto& direct = r.direct->group();

  // Product of class sums agrees in both groups.
  const auto& classes = r.semidirect->classes().classes;
  for (const auto& c1 : classes) {
    for (const auto& c2 : classes) {
      if (class_product(semi, c1, c2) != class_product(direct, c1, c2)) {
        throw TheoremViolation("class-sum products differ between H x| K and H x K");
      }
      ++r.class_pairs_checked;
    }
  }

  const auto minimal_sets = r.minimal.superclasses();
  const auto embedded_sets = r.embedded.superclasses();
  for (const auto& set : minimal_sets) {
    auto it = std::find(embedded_sets.begin(), embedded_sets.end(), set);
    if (it == embedded_sets.end()) throw TheoremViolation("superclass lost in the embedding");
    r.natural_map.push_back(static_cast<int>(it - embedded_sets.begin()));
  }
  r.natural_verdict = verify_isomorphism(r.minimal, r.embedded, r.natural_map);
  if (!r.natural_verdict.ok()) {
    throw TheoremViolation("identity-on-elements map is not an isomorphism: " +
                           verdict_text(r.natural_verdict));
  }

  r.match = tables_equivalent(supercharacter_table(r.minimal), supercharacter_table(r.embedded));
  if (!r.match.equivalent) {
    throw TheoremViolation("supercharacter tables of the minimal theory and its image differ: " +
                           r.match.witness);
  }
  r.certified_verdict = verify_isomorphism(r.minimal, r.embedded, r.match.col_perm);
  if (!r.certified_verdict.ok()) {
    throw TheoremViolation("table equivalence certificate is not an isomorphism: " +
                           verdict_text(r.certified_verdict));
  }
  return r;
}

OrbitComparison psi_orbit_sct(const SemidirectSpec& spec) {
  return psi_orbit_sct(build_embedding(spec));
}

OrbitComparison psi_orbit_sct(const EmbeddingReport& embedding) {
  const auto& spec = embedding.spec;
  const int nk = spec.k.order();
  const int n = spec.h.order() * nk;
  std::set<Automorphism> image;
  for (const auto& psi_k : spec.psi) {
    Automorphism a;
    a.perm.resize(n);
    for (int x = 0; x < n; ++x) a.perm[x] = psi_k(x / nk) * nk + x % nk;
    image.insert(std::move(a));
  }
  std::vector<Automorphism> autos(image.begin(), image.end());
  auto orbit = from_automorphisms(embedding.direct, autos);
  if (!is_coarser(orbit, embedding.embedded)) {
    throw TheoremViolation("image of the minimal theory is not coarser than the im(psi) orbit theory");
  }
  const bool strict = !(orbit == embedding.embedded);
  return OrbitComparison{std::move(orbit), embedding.embedded, strict};
}

BijectionReport verify_bijection(const SemidirectSpec& spec, const EnumerationOptions& options) {
  EmbeddingReport e = build_embedding(spec);
  BijectionReport report;
  report.semidirect_theories = all_supercharacter_theories(e.semidirect, options).theories;
  for (auto& t : all_supercharacter_theories(e.direct, options).theories) {
    if (is_coarser(e.embedded, t)) report.coarser_theories.push_back(std::move(t));
  }

  std::vector<int> hits(report.coarser_theories.size(), 0);
  for (int i = 0; i < static_cast<int>(report.semidirect_theories.size()); ++i) {
    const auto& t = report.semidirect_theories[i];
    Partition classes;
    try {
      classes = class_partition_from_elements(*e.direct, t.superclasses());
    } catch (const InputError& err) {
      throw TheoremViolation(std::string("transported partition is not a class partition: ") + err.what());
    }
    auto transported = accept_theory(e.direct, classes, "transported theory");
    if (!is_coarser(e.embedded, transported)) {
      report.problems.push_back("theory " + std::to_string(i) + " is not carried into A");
      continue;
    }
    auto it = std::find(report.coarser_theories.begin(), report.coarser_theories.end(), transported);
    if (it == report.coarser_theories.end()) {
      report.problems.push_back("theory " + std::to_string(i) + " has no counterpart");
      continue;
    }
    const int j = static_cast<int>(it - report.coarser_theories.begin());
    ++hits[j];
    auto certificate = tables_equivalent(supercharacter_table(t), supercharacter_table(*it));
    if (!certificate.equivalent) {
      report.problems.push_back("theory " + std::to_string(i) + " and its image have different tables: " +
                                certificate.witness);
    }
    report.pairs.push_back(BijectionPair{i, j, std::move(certificate)});
  }
  for (std::size_t j = 0; j < hits.size(); ++j) {
    if (hits[j] == 0) report.problems.push_back("coarser theory " + std::to_string(j) + " is not hit");
    if (hits[j] > 1) report.problems.push_back("coarser theory " + std::to_string(j) + " is hit twice");
  }
  report.pass = report.problems.empty() &&
                report.semidirect_theories.size() == report.coarser_theories.size();
  return report;
}

CorollaryReport verify_dihedral_corollary(int m, const EnumerationOptions& options) {
  if (m < 3 || m % 2 == 0) {
    throw InputError("dihedral corollary needs odd m >= 3 (dihedral group of order 2m, m odd); got m = " +
                     std::to_string(m));
  }
  CorollaryReport report;
  report.m = m;
  auto dihedral_ctx = TheoryContext::create(dihedral(m));
  auto cyclic_ctx = TheoryContext::create(make_cyclic(2 * m));
  report.dihedral_theories = all_supercharacter_theories(dihedral_ctx, options).theories;
  report.cyclic_theories = all_supercharacter_theories(cyclic_ctx, options).theories;

  std::vector<SupercharacterTable> cyclic_tables;
  for (const auto& t : report.cyclic_theories) cyclic_tables.push_back(supercharacter_table(t));

  for (int i = 0; i < static_cast<int>(report.dihedral_theories.size()); ++i) {
    const auto& d = report.dihedral_theories[i];
    const auto dt = supercharacter_table(d);
    bool matched = false;
    for (int j = 0; j < static_cast<int>(cyclic_tables.size()) && !matched; ++j) {
      if (cyclic_tables[j].size() != dt.size()) continue;
      auto cert = tables_equivalent(dt, cyclic_tables[j]);
      if (!cert.equivalent) continue;
      auto verdict = verify_isomorphism(d, report.cyclic_theories[j], cert.col_perm);
      if (!verdict.ok()) {
        throw TheoremViolation("equivalent supercharacter tables without an isomorphism: " +
                               verdict_text(verdict));
      }
      report.pairs.push_back(CorollaryPair{i, j, std::move(cert), std::move(verdict)});
      matched = true;
    }
    if (!matched) report.unmatched.push_back(i);
  }
  report.pass = report.unmatched.empty();
  return report;
}

}  // namespace supchar
