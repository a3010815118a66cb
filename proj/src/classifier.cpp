#include "chein/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "chein/double_construction.hpp"
#include "chein/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chein {

std::string_view name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "n/a";
  }
  return "";
}

std::string_view name(Relation r) noexcept {
  switch (r) {
    case Relation::same: return "same";
    case Relation::isomorphic: return "isomorphic";
    case Relation::anti_isomorphic: return "anti_isomorphic";
  }
  return "";
}

bool ClassificationReport::all_checks_pass() const {
  if (theorem6.status == CheckStatus::fail) return false;
  return std::none_of(lemma_checks.begin(), lemma_checks.end(),
                      [](const NamedCheck& c) { return c.status == CheckStatus::fail; });
}

namespace {

void require_hypotheses(const Group& g) {
  if (g.order() <= 1) {
    throw HypothesisError("doubling hypothesis: |G| > 1 required");
  }
  if (g.is_elementary_abelian_2()) {
    throw HypothesisError("doubling hypothesis: G must not be an elementary abelian 2-group");
  }
}

std::vector<PropertyReport> analyze_serial(const Group& g) {
  std::vector<PropertyReport> out(OpMatrix::kCount);
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    out[i] = analyze(build_double(g, OpMatrix::from_index(i)));
  }
  return out;
}

std::vector<PropertyReport> analyze_parallel(const Group& g, int threads) {
  std::vector<PropertyReport> out(OpMatrix::kCount);
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
#endif
  for (long i = 0; i < static_cast<long>(OpMatrix::kCount); ++i) {
    out[static_cast<std::size_t>(i)] =
        analyze(build_double(g, OpMatrix::from_index(static_cast<std::size_t>(i))));
  }
  (void)threads;
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool related(const CayleyTable& a, const CayleyTable& b) {
  return are_isomorphic(a, b).has_value() || are_anti_isomorphic(a, b).has_value();
}

std::string list_matrices(const std::vector<OpMatrix>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += "; ";
    out += m.to_string();
  }
  return out;
}

Theorem6Result check_theorem6(const Group& g, const ClassificationReport& r) {
  Theorem6Result t;
  if (g.is_abelian()) {
    t.notes.push_back("theorem hypothesis: G nonabelian (not applicable)");
    return t;
  }
  std::vector<OpMatrix> named;
  for (NamedMatrix n : kAllNamedMatrices) named.push_back(named_matrix(n));
  std::sort(named.begin(), named.end());
  std::set_difference(named.begin(), named.end(), r.moufang_set.begin(),
                      r.moufang_set.end(), std::back_inserter(t.missing));
  std::set_difference(r.moufang_set.begin(), r.moufang_set.end(), named.begin(),
                      named.end(), std::back_inserter(t.extra));
  bool ok = t.missing.empty() && t.extra.empty();

  using N = NamedMatrix;
  for (N n : {N::G_iota, N::G_tau, N::op_G_iota, N::op_G_tau}) {
    if (!r.at(named_matrix(n))[Flag::is_associative]) {
      ok = false;
      t.notes.push_back(std::string(name(n)) + " is not associative");
    }
  }
  const std::array<N, 4> nonassoc = {N::M_c, N::M_sigma, N::op_M_c, N::op_M_sigma};
  for (N n : nonassoc) {
    if (r.at(named_matrix(n))[Flag::is_associative]) {
      ok = false;
      t.notes.push_back(std::string(name(n)) + " is associative");
    }
  }
  if (ok) {
    std::vector<CayleyTable> tables;
    for (N n : nonassoc) tables.push_back(build_double(g, named_matrix(n)).table);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      for (std::size_t j = i + 1; j < tables.size(); ++j) {
        if (!related(tables[i], tables[j])) {
          ok = false;
          t.notes.push_back(std::string(name(nonassoc[i])) + " and " +
                            std::string(name(nonassoc[j])) +
                            " are neither isomorphic nor anti-isomorphic");
        }
      }
    }
    const OpMatrix mc = named_matrix(N::M_c);
    const bool single_class =
        r.nonassoc_moufang_classes.size() == 1 &&
        std::any_of(r.nonassoc_moufang_classes[0].members.begin(),
                    r.nonassoc_moufang_classes[0].members.end(),
                    [&](const ClassMember& m) { return m.matrix == mc; });
    if (!single_class) {
      ok = false;
      t.notes.push_back("nonassociative Moufang loops do not form a single class with M_c");
    }
  }
  t.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return t;
}

NamedCheck check_lemma1(const ClassificationReport& r) {
  NamedCheck c{"lemma1", CheckStatus::pass, ""};
  std::size_t mismatches = 0;
  std::string first;
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    const OpMatrix m = OpMatrix::from_index(i);
    const PropertyReport& p = r.per_matrix[i];
    const bool loop = p[Flag::is_loop];
    if (loop != lemma1_gate(m) || (loop && *p.neutral != 0)) {
      if (mismatches++ == 0) first = m.to_string();
    }
  }
  c.detail = std::to_string(r.counts[static_cast<std::size_t>(Flag::is_loop)]) +
             " loops; gate agrees on " + std::to_string(OpMatrix::kCount - mismatches) +
             "/4096 matrices";
  if (mismatches) {
    c.status = CheckStatus::fail;
    c.detail += "; first mismatch " + first;
  }
  return c;
}

NamedCheck check_lemma2(const ClassificationReport& r) {
  NamedCheck c{"lemma2_two_sided", CheckStatus::pass, ""};
  std::vector<OpMatrix> bad;
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    const PropertyReport& p = r.per_matrix[i];
    if (p[Flag::is_loop] && !p[Flag::has_two_sided_inverses]) {
      bad.push_back(OpMatrix::from_index(i));
    }
  }
  c.detail = "every loop has two-sided inverses";
  if (!bad.empty()) {
    c.status = CheckStatus::fail;
    c.detail = "one-sided inverses in: " + list_matrices(bad);
  }
  return c;
}

NamedCheck check_lemma3(const Group& g) {
  NamedCheck c{"lemma3", CheckStatus::pass, "opposite matrix gives the transposed table for all 4096 matrices"};
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    const OpMatrix m = OpMatrix::from_index(i);
    if (build_double(g, opposite_matrix(m)).table !=
        build_double(g, m).table.transposed()) {
      c.status = CheckStatus::fail;
      c.detail = "transpose mismatch for " + m.to_string();
      break;
    }
  }
  return c;
}

NamedCheck check_lemma4(const Group& g, const ClassificationReport& r) {
  NamedCheck c{"lemma4", CheckStatus::pass, ""};
  if (g.is_abelian()) {
    c.status = CheckStatus::not_applicable;
    c.detail = "requires nonabelian G";
    return c;
  }
  const auto& candidates = candidate_diass_triples();
  auto is_candidate = [&](const Triple& t) {
    return std::binary_search(candidates.begin(), candidates.end(), t);
  };
  const auto triples = diass_triples(g);
  std::vector<std::string> problems;
  for (const Triple& t : triples) {
    if (!is_candidate(t)) problems.push_back("brute-force triple " + t.to_string());
  }
  std::size_t diass_loops = 0;
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    const OpMatrix m = OpMatrix::from_index(i);
    if (m.alpha != PairOp::I || !r.per_matrix[i][Flag::is_diassociative]) continue;
    ++diass_loops;
    if (!is_candidate({m.beta, m.gamma, m.delta})) {
      problems.push_back("diassociative loop " + m.to_string());
    }
  }
  c.detail = std::to_string(triples.size()) + " triples pass the square and flexible laws; " +
             std::to_string(diass_loops) + " diassociative loops with alpha=i";
  if (!problems.empty()) {
    c.status = CheckStatus::fail;
    for (const auto& p : problems) c.detail += "; outside candidates: " + p;
  }
  return c;
}

NamedCheck check_lemma5(const Group& g) {
  NamedCheck c{"lemma5", CheckStatus::pass,
               "x -> x, xbar -> bar(x^-1) maps G_iota onto G_tau and M_c onto M_sigma"};
  const ElementMap f = lemma5_map(g);
  using N = NamedMatrix;
  for (auto [from, to] : {std::pair{N::G_iota, N::G_tau}, std::pair{N::M_c, N::M_sigma}}) {
    if (!verify_homomorphism(build_double(g, named_matrix(from)).table,
                             build_double(g, named_matrix(to)).table, f)) {
      c.status = CheckStatus::fail;
      c.detail = std::string("map is not a homomorphism ") + std::string(name(from)) +
                 " -> " + std::string(name(to));
    }
  }
  return c;
}

}  // namespace

std::vector<PropertyReport> analyze_all(const Group& g, int threads) {
  return threads == 1 ? analyze_serial(g) : analyze_parallel(g, threads);
}

std::vector<MoufangClass> isomorphism_classes(const Group& g,
                                              const std::vector<OpMatrix>& members) {
  std::vector<CayleyTable> tables;
  for (const auto& m : members) tables.push_back(build_double(g, m).table);

  std::map<std::pair<std::vector<ElementFingerprint>, std::vector<ElementFingerprint>>,
           std::vector<std::size_t>>
      buckets;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    auto fp = loop_fingerprint(tables[i]);
    auto fp_op = loop_fingerprint(tables[i].transposed());
    if (fp_op < fp) std::swap(fp, fp_op);
    buckets[{std::move(fp), std::move(fp_op)}].push_back(i);
  }
  UnionFind uf(tables.size());
  for (const auto& [key, idx] : buckets) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (uf.find(idx[a]) != uf.find(idx[b]) && related(tables[idx[a]], tables[idx[b]])) {
          uf.unite(idx[a], idx[b]);
        }
      }
    }
  }

  // Members are processed in the given order, so each class representative is
  // its earliest member.
  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<MoufangClass> classes;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::size_t root = uf.find(i);
    auto [it, fresh] = class_of_root.emplace(root, classes.size());
    if (fresh) {
      ElementMap id{std::vector<Element>(tables[i].order())};
      std::iota(id.images.begin(), id.images.end(), Element{0});
      classes.push_back({members[i], {{members[i], Relation::same, std::move(id)}}});
      continue;
    }
    MoufangClass& cls = classes[it->second];
    const CayleyTable& rep = tables[root];
    if (auto f = are_isomorphic(rep, tables[i])) {
      cls.members.push_back({members[i], Relation::isomorphic, std::move(*f)});
    } else if (auto h = are_anti_isomorphic(rep, tables[i])) {
      cls.members.push_back({members[i], Relation::anti_isomorphic, std::move(*h)});
    }
  }
  return classes;
}

ClassificationReport enumerate(const Group& g, EnumerateOptions options) {
  require_hypotheses(g);
  ClassificationReport r;
  r.group = g.label();
  r.group_order = g.order();
  r.group_abelian = g.is_abelian();
  r.per_matrix = analyze_all(g, options.threads);

  std::vector<OpMatrix> nonassoc_moufang;
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    const PropertyReport& p = r.per_matrix[i];
    const OpMatrix m = OpMatrix::from_index(i);
    for (Flag f : kAllFlags) r.counts[static_cast<std::size_t>(f)] += p[f];
    if (p[Flag::is_moufang]) {
      r.moufang_set.push_back(m);
      if (!p[Flag::is_associative]) nonassoc_moufang.push_back(m);
    }
    if (p[Flag::is_loop] && !p[Flag::is_moufang] &&
        (p[Flag::is_left_bol] || p[Flag::is_right_bol])) {
      r.bol_not_moufang.push_back(m);
    }
    if (p[Flag::has_two_sided_inverses] && !p[Flag::has_inverse_property]) {
      r.ip_discrepancies.push_back(m);
    }
  }
  r.nonassoc_moufang_classes = isomorphism_classes(g, nonassoc_moufang);
  r.theorem6 = check_theorem6(g, r);
  r.lemma_checks = {check_lemma1(r), check_lemma2(r), check_lemma3(g),
                    check_lemma4(g, r), check_lemma5(g)};
  return r;
}

Theorem6Result verify_theorem6(const Group& g, EnumerateOptions options) {
  if (g.is_abelian()) throw HypothesisError("theorem hypothesis: G nonabelian");
  return enumerate(g, options).theorem6;
}

std::vector<OpMatrix> search_bol_not_moufang(const Group& g, EnumerateOptions options) {
  require_hypotheses(g);
  const auto reports = analyze_all(g, options.threads);
  std::vector<OpMatrix> out;
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    const PropertyReport& p = reports[i];
    if (p[Flag::is_loop] && !p[Flag::is_moufang] &&
        (p[Flag::is_left_bol] || p[Flag::is_right_bol])) {
      out.push_back(OpMatrix::from_index(i));
    }
  }
  return out;
}

}  // namespace chein
