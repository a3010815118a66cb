#include "chein/analysis.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "chein/errors.hpp"
#include "chein/identity.hpp"

namespace chein {

namespace {

constexpr std::array<std::string_view, 10> kFlagNames = {
    "is_quasigroup",     "is_loop",       "has_two_sided_inverses",
    "has_inverse_property", "is_flexible", "is_left_bol",
    "is_right_bol",      "is_moufang",    "is_diassociative",
    "is_associative"};

constexpr std::array<Builtin, 4> kMoufangLaws = {
    Builtin::moufang_1, Builtin::moufang_2, Builtin::moufang_3, Builtin::moufang_4};

// Records the outcome of an identity check as a flag; returns the flag value.
bool record(PropertyReport& report, Flag flag, const CayleyTable& magma,
            Builtin law, const std::optional<InverseData>& inverses = std::nullopt) {
  const CheckResult r = check_identity_serial(magma, builtin(law), inverses);
  report[flag] = r.holds;
  if (!r.holds) report.witness[flag] = r.assignment;
  return r.holds;
}

bool associative_on(const CayleyTable& t, const std::vector<Element>& elems,
                    std::array<Element, 3>& bad) {
  for (Element x : elems) {
    for (Element y : elems) {
      const Element xy = t(x, y);
      for (Element z : elems) {
        if (t(xy, z) != t(x, t(y, z))) {
          bad = {x, y, z};
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::string_view name(Flag f) noexcept { return kFlagNames[static_cast<std::size_t>(f)]; }

std::optional<std::array<Element, 5>> find_diassociativity_violation(
    const CayleyTable& loop, Element neutral) {
  const auto n = static_cast<Element>(loop.order());
  const std::size_t words = (n + 63) / 64;
  std::set<std::vector<std::uint64_t>> checked;
  std::vector<std::uint64_t> members(words);
  std::vector<Element> elems;
  auto add = [&](Element v) {
    auto& w = members[v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (!(w & bit)) {
      w |= bit;
      elems.push_back(v);
    }
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      std::fill(members.begin(), members.end(), 0);
      elems.clear();
      add(neutral);
      add(a);
      add(b);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          add(loop(elems[i], elems[j]));
          add(loop(elems[j], elems[i]));
        }
      }
      if (checked.contains(members)) continue;
      std::array<Element, 3> bad{};
      if (!associative_on(loop, elems, bad)) {
        return std::array{a, b, bad[0], bad[1], bad[2]};
      }
      checked.insert(members);
    }
  }
  return std::nullopt;
}

PropertyReport analyze(const CayleyTable& magma) {
  PropertyReport report;
  if (auto bad = find_latin_violation(magma)) {
    report.witness[Flag::is_quasigroup] = {(*bad)[0], (*bad)[1], (*bad)[2], (*bad)[3]};
  } else {
    report[Flag::is_quasigroup] = true;
  }
  report.neutral = find_neutral(magma);
  report[Flag::is_loop] = report[Flag::is_quasigroup] && report.neutral.has_value();

  record(report, Flag::is_flexible, magma, Builtin::flexible);
  record(report, Flag::is_associative, magma, Builtin::associativity);

  constexpr std::array<Flag, 6> kLoopFlags = {
      Flag::has_two_sided_inverses, Flag::has_inverse_property, Flag::is_left_bol,
      Flag::is_right_bol,           Flag::is_moufang,           Flag::is_diassociative};

  if (!report[Flag::is_loop]) {
    report.reason[Flag::is_loop] = report[Flag::is_quasigroup]
                                       ? "no two-sided neutral element"
                                       : "not a quasigroup";
    for (Flag f : kLoopFlags) report.reason[f] = "not a loop: no neutral/inverses";
    return report;
  }

  const Element e = *report.neutral;
  const auto inverses = inverse_data(magma);
  if (inverses) {
    report[Flag::has_two_sided_inverses] = true;
    const bool left = record(report, Flag::has_inverse_property, magma,
                             Builtin::left_ip, inverses);
    if (left) {
      record(report, Flag::has_inverse_property, magma, Builtin::right_ip, inverses);
    }
  } else {
    const auto n = static_cast<Element>(magma.order());
    for (Element x = 0; x < n; ++x) {
      Element y = 0;
      while (magma(x, y) != e) ++y;
      if (magma(y, x) != e) {
        report.witness[Flag::has_two_sided_inverses] = {x, y};
        break;
      }
    }
    report.reason[Flag::has_inverse_property] = "inverses are not two-sided";
  }

  record(report, Flag::is_left_bol, magma, Builtin::left_bol);
  record(report, Flag::is_right_bol, magma, Builtin::right_bol);

  bool moufang = true;
  for (std::size_t i = 0; i < kMoufangLaws.size(); ++i) {
    const CheckResult r = check_identity_serial(magma, builtin(kMoufangLaws[i]));
    report.moufang_forms[i] = r.holds;
    if (!r.holds && moufang) report.witness[Flag::is_moufang] = r.assignment;
    moufang = moufang && r.holds;
  }
  report[Flag::is_moufang] = moufang;

  if (report[Flag::is_associative]) {
    report[Flag::is_diassociative] = true;
  } else if (auto bad = find_diassociativity_violation(magma, e)) {
    report.witness[Flag::is_diassociative] = {bad->begin(), bad->end()};
  } else {
    report[Flag::is_diassociative] = true;
  }
  return report;
}

bool lemma1_gate(const OpMatrix& m) noexcept {
  using P = PairOp;
  auto in = [](P op, std::initializer_list<P> set) {
    return std::find(set.begin(), set.end(), op) != set.end();
  };
  return in(m.alpha, {P::I, P::S}) && in(m.beta, {P::I, P::S, P::T3, P::ST}) &&
         in(m.gamma, {P::I, P::S, P::T, P::ST3});
}

std::string Triple::to_string() const {
  return std::string(name(beta)) + "," + std::string(name(gamma)) + "," +
         std::string(name(delta));
}

const std::vector<Triple>& candidate_diass_triples() {
  using P = PairOp;
  static const std::vector<Triple> triples = [] {
    std::vector<Triple> t = {
        {P::I, P::I, P::I},     {P::T3, P::I, P::ST},  {P::S, P::S, P::S},
        {P::ST, P::S, P::T3},   {P::T3, P::T, P::T2},  {P::I, P::T, P::ST3},
        {P::S, P::ST3, P::T},   {P::ST, P::ST3, P::ST2}};
    std::sort(t.begin(), t.end());
    return t;
  }();
  return triples;
}

std::vector<Triple> diass_triples(const Group& g, DiassStage stage) {
  if (g.is_abelian()) {
    throw HypothesisError("diassociativity triples require a nonabelian group");
  }
  using P = PairOp;
  const auto n = static_cast<Element>(g.order());
  auto holds = [&](auto&& law) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!law(x, y)) return false;
      }
    }
    return true;
  };
  std::vector<Triple> out;
  for (P beta : {P::I, P::S, P::T3, P::ST}) {
    for (P gamma : {P::I, P::S, P::T, P::ST3}) {
      for (P delta : kAllPairOps) {
        // (xbar * xbar) * y == xbar * (xbar * y)
        const bool square = holds([&](Element x, Element y) {
          return g.mul(apply_unchecked(delta, x, x, g), y) ==
                 apply_unchecked(delta, x, apply_unchecked(gamma, x, y, g), g);
        });
        if (!square) continue;
        if (stage == DiassStage::SquareAndFlexibleLaws) {
          // xbar * (y * xbar) == (xbar * y) * xbar
          const bool flexible = holds([&](Element x, Element y) {
            return apply_unchecked(delta, x, apply_unchecked(beta, y, x, g), g) ==
                   apply_unchecked(delta, apply_unchecked(gamma, x, y, g), x, g);
          });
          if (!flexible) continue;
        }
        out.push_back({beta, gamma, delta});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chein
