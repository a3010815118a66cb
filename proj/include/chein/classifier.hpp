#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chein/analysis.hpp"
#include "chein/group.hpp"
#include "chein/morphisms.hpp"
#include "chein/pair_ops.hpp"

namespace chein {

enum class CheckStatus { pass, fail, not_applicable };

std::string_view name(CheckStatus s) noexcept;

struct NamedCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

enum class Relation { same, isomorphic, anti_isomorphic };

std::string_view name(Relation r) noexcept;

struct ClassMember {
  OpMatrix matrix;
  Relation relation = Relation::same;  // relative to the class representative
  ElementMap map;                      // representative -> member (or opposite)
};

struct MoufangClass {
  OpMatrix representative;
  std::vector<ClassMember> members;
};

struct Theorem6Result {
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<OpMatrix> missing;  // named matrices that are not Moufang
  std::vector<OpMatrix> extra;    // Moufang matrices outside the named set
  std::vector<std::string> notes;
};

struct ClassificationReport {
  std::string group;
  std::size_t group_order = 0;
  bool group_abelian = false;
  std::vector<PropertyReport> per_matrix;  // indexed by OpMatrix::index()
  std::array<std::size_t, 10> counts{};    // per Flag
  std::vector<OpMatrix> moufang_set;
  std::vector<MoufangClass> nonassoc_moufang_classes;
  Theorem6Result theorem6;
  std::vector<NamedCheck> lemma_checks;
  std::vector<OpMatrix> bol_not_moufang;
  std::vector<OpMatrix> ip_discrepancies;

  const PropertyReport& at(const OpMatrix& m) const {
    return per_matrix[m.index()];
  }
  // True iff nothing failed (not-applicable checks are fine).
  bool all_checks_pass() const;
};

struct EnumerateOptions {
  // 0: OpenMP default; 1: serial reference path.
  int threads = 0;
};

// Analyze all 4096 doubles of g and verify the classification. Throws
// HypothesisError if |g| <= 1 or g is an elementary abelian 2-group.
ClassificationReport enumerate(const Group& g, EnumerateOptions options = {});

// Per-matrix analysis alone; threads == 1 runs the serial reference loop.
std::vector<PropertyReport> analyze_all(const Group& g, int threads = 0);

// Throws HypothesisError for abelian g (or if enumerate would refuse g).
Theorem6Result verify_theorem6(const Group& g, EnumerateOptions options = {});

// Loops that are left or right Bol but not Moufang.
std::vector<OpMatrix> search_bol_not_moufang(const Group& g,
                                             EnumerateOptions options = {});

// Partition matrices into classes under "isomorphic or anti-isomorphic"
// (union-find over pairwise tests with fingerprint pre-bucketing).
std::vector<MoufangClass> isomorphism_classes(const Group& g,
                                              const std::vector<OpMatrix>& members);

}  // namespace chein
