// Acceptance gate. One line per criterion:
//   [PASS] AC<n> <title>: <detail>
//   [FAIL] AC<n> <title>: <detail>
// usage: chein_acceptance [--criterion N] [--cli PATH]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "chein/analysis.hpp"
#include "chein/classifier.hpp"
#include "chein/double_construction.hpp"
#include "chein/errors.hpp"
#include "chein/identity.hpp"
#include "chein/morphisms.hpp"
#include "oracles.hpp"

using namespace chein;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

std::string cli_path = CHEIN_CLI_PATH;

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string triples_str(const std::vector<Triple>& ts) {
  std::vector<std::string> s;
  for (const auto& t : ts) s.push_back("(" + t.to_string() + ")");
  return join(s, " ");
}

std::vector<OpMatrix> named_set() {
  std::vector<OpMatrix> out;
  for (NamedMatrix m : kAllNamedMatrices) out.push_back(named_matrix(m));
  std::sort(out.begin(), out.end());
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Outcome ac1() {
  Outcome o;
  std::vector<std::string> parts;
  for (const char* spec : {"S3", "D8", "Q8", "C3", "C4", "S3xC2"}) {
    const Group g = build_group(GroupSpec::parse(spec));
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = analyze_all(g);
    std::size_t loops = 0, mismatches = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const bool loop = reports[i][Flag::is_loop];
      loops += loop;
      mismatches += loop != lemma1_gate(OpMatrix::from_index(i));
    }
    const double secs = seconds_since(t0);
    const double budget = g.order() <= 8 ? 10.0 : 300.0;
    const bool ok = loops == 256 && mismatches == 0 && secs < budget;
    o.pass = o.pass && ok;
    parts.push_back(std::string(spec) + " loops=" + std::to_string(loops) +
                    " mismatches=" + std::to_string(mismatches) + " " + fixed(secs) + "s");
  }
  o.detail = join(parts, "; ");
  return o;
}

Outcome ac2() {
  Outcome o;
  std::vector<std::string> parts;
  for (const char* spec : {"S3", "D8", "Q8"}) {
    const Group g = build_group(GroupSpec::parse(spec));
    const ClassificationReport r = enumerate(g);
    bool ok = r.moufang_set == named_set();
    bool chein_in = false;
    std::size_t members = 0;
    if (r.nonassoc_moufang_classes.size() == 1) {
      const auto& cls = r.nonassoc_moufang_classes.front();
      members = cls.members.size();
      const CayleyTable rep = build_double(g, cls.representative).table;
      for (const auto& m : cls.members) {
        chein_in = chein_in || m.matrix == named_matrix(NamedMatrix::M_c);
        const CayleyTable t = build_double(g, m.matrix).table;
        if (m.relation == Relation::isomorphic) ok = ok && verify_homomorphism(rep, t, m.map);
        if (m.relation == Relation::anti_isomorphic)
          ok = ok && verify_homomorphism(rep, t.transposed(), m.map);
      }
    }
    ok = ok && r.nonassoc_moufang_classes.size() == 1 && members == 4 && chein_in;
    o.pass = o.pass && ok;
    parts.push_back(std::string(spec) + " moufang=" + std::to_string(r.moufang_set.size()) +
                    " classes=" + std::to_string(r.nonassoc_moufang_classes.size()) +
                    " members=" + std::to_string(members) + (chein_in ? " M_c in class" : ""));
  }
  o.detail = join(parts, "; ");
  return o;
}

Outcome ac3() {
  Outcome o;
  std::vector<std::string> parts;
  for (const char* spec : {"C4", "C3"}) {
    const Group g = build_group(GroupSpec::parse(spec));
    std::size_t assoc = 0;
    for (NamedMatrix m : kAllNamedMatrices)
      assoc += !find_nonassociative_triple(build_double(g, named_matrix(m)).table).has_value();
    bool group_ok = true;
    try {
      (void)validate_group(chein::chein(g).table);
    } catch (const GroupValidationError&) {
      group_ok = false;
    }
    o.pass = o.pass && assoc == 8 && group_ok;
    parts.push_back(std::string(spec) + " associative=" + std::to_string(assoc) + "/8 chein " +
                    (group_ok ? "is a group" : "is not a group"));
  }
  o.detail = join(parts, "; ");
  return o;
}

Outcome ac4() {
  const Group d8 = build_group(GroupSpec::dihedral(8));
  std::mt19937 rng(20240611);
  std::size_t equal = 0;
  for (int k = 0; k < 20; ++k) {
    const DoubledMagma d = build_double(d8, oracle::random_matrix(rng));
    equal += opposite(d8, d).table == d.table.transposed();
  }
  return {equal == 20, std::to_string(equal) + "/20 opposite tables equal the transpose"};
}

Outcome ac5() {
  Outcome o;
  std::vector<std::string> parts;
  for (const char* spec : {"S3", "D8", "Q8"}) {
    const Group g = build_group(GroupSpec::parse(spec));
    const ElementMap f = lemma5_map(g);
    auto dbl = [&](NamedMatrix m) { return build_double(g, named_matrix(m)).table; };
    const bool a = verify_homomorphism(dbl(NamedMatrix::G_iota), dbl(NamedMatrix::G_tau), f);
    const bool b = verify_homomorphism(dbl(NamedMatrix::M_c), dbl(NamedMatrix::M_sigma), f);
    o.pass = o.pass && a && b && f.is_bijection();
    parts.push_back(std::string(spec) + " G_iota->G_tau " + (a ? "ok" : "no") + ", M_c->M_sigma " +
                    (b ? "ok" : "no"));
  }
  o.detail = join(parts, "; ");
  return o;
}

Outcome ac6() {
  const auto& eight = candidate_diass_triples();
  const auto s3 = diass_triples(build_group(GroupSpec::symmetric(3)));
  const bool s3_ok = s3 == eight;
  const auto d8 = diass_triples(build_group(GroupSpec::dihedral(8)), DiassStage::SquareLaw);
  const bool contains = std::includes(d8.begin(), d8.end(), eight.begin(), eight.end());
  const bool d8_ok = contains && d8.size() > eight.size();
  std::vector<Triple> missing;
  std::set_difference(eight.begin(), eight.end(), s3.begin(), s3.end(), std::back_inserter(missing));
  std::string detail = "S3 triples=" + std::to_string(s3.size()) + " (expected 8";
  if (!missing.empty()) detail += ", missing " + triples_str(missing);
  detail += "); D8 square-law stage=" + std::to_string(d8.size()) +
            (d8_ok ? " strictly contains the 8" : " does not strictly contain the 8");
  return {s3_ok && d8_ok, detail};
}

Outcome ac7() {
  Outcome o;
  std::vector<std::string> parts;
  for (const char* spec : {"S3", "D8", "Q8", "C3", "C4", "S3xC2"}) {
    const Group g = build_group(GroupSpec::parse(spec));
    const auto reports = analyze_all(g);
    std::size_t loops = 0, two_sided = 0, ip = 0;
    for (const auto& r : reports) {
      if (!r[Flag::is_loop]) continue;
      ++loops;
      two_sided += r[Flag::has_two_sided_inverses];
      ip += r[Flag::has_inverse_property];
    }
    o.pass = o.pass && loops == 256 && two_sided == loops;
    parts.push_back(std::string(spec) + " " + std::to_string(two_sided) + "/" +
                    std::to_string(loops) + " two-sided (full IP " + std::to_string(ip) + ")");
  }
  o.detail = join(parts, "; ");
  return o;
}

Outcome ac8() {
  const DoubledMagma d = chein::chein(build_group(GroupSpec::symmetric(3)));
  std::size_t forms = 0;
  for (Builtin b : {Builtin::moufang_1, Builtin::moufang_2, Builtin::moufang_3, Builtin::moufang_4})
    forms += check_identity(d.table, builtin(b)).holds;
  const Identity assoc = builtin(Builtin::associativity);
  const CheckResult r = check_identity(d.table, assoc);
  std::string detail = "order=" + std::to_string(d.table.order()) +
                       " moufang forms=" + std::to_string(forms) + "/4";
  detail += r.holds ? " associative" : " nonassociative witness " + format_counterexample(assoc, r);
  return {d.table.order() == 12 && forms == 4 && !r.holds, detail};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ac9() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("chein_ac9_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::string> reports;
  std::vector<std::string> parts;
  for (int threads : {1, 4}) {
    const fs::path rep = dir / ("d8_" + std::to_string(threads) + ".json");
    const fs::path csv = dir / ("d8_" + std::to_string(threads) + ".csv");
    const std::string cmd = "\"" + cli_path + "\" enumerate --group D8 --threads " +
                            std::to_string(threads) + " --report \"" + rep.string() +
                            "\" --csv \"" + csv.string() + "\" > /dev/null";
    const int rc = std::system(cmd.c_str());
    parts.push_back("threads=" + std::to_string(threads) + " rc=" + std::to_string(rc));
    reports.push_back(slurp(rep.string()) + slurp(csv.string()));
  }
  fs::remove_all(dir);
  const bool ok = !reports[0].empty() && reports[0] == reports[1];
  parts.push_back(ok ? "reports byte-identical (" + std::to_string(reports[0].size()) + " bytes)"
                     : "reports differ");
  return {ok, join(parts, "; ")};
}

Outcome ac10() {
  std::mt19937 rng(10);
  std::uniform_int_distribution<std::size_t> order(1, 8);
  const Identity assoc = builtin(Builtin::associativity);
  const Identity moufang = builtin(Builtin::moufang_1);
  std::size_t agree_a = 0, agree_m = 0, assoc_true = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = order(rng);
    CayleyTable t = oracle::random_magma(n, rng);
    // every fifth one is a group so both answers occur
    if (k % 5 == 0) t = build_group(GroupSpec::cyclic(static_cast<unsigned>(n))).table();
    const bool a = oracle::associative(t);
    assoc_true += a;
    agree_a += check_identity(t, assoc).holds == a;
    agree_m += check_identity(t, moufang).holds == oracle::moufang_1(t);
  }
  return {agree_a == 50 && agree_m == 50,
          "associativity " + std::to_string(agree_a) + "/50, moufang " + std::to_string(agree_m) +
              "/50 agree (" + std::to_string(assoc_true) + " associative)"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) {
      cli_path = argv[++i];
    } else {
      std::cerr << "usage: chein_acceptance [--criterion N] [--cli PATH]\n";
      return 2;
    }
  }

  const std::vector<Criterion> all = {
      {1, "loop gate equivalence", ac1},
      {2, "Moufang classification", ac2},
      {3, "abelian control", ac3},
      {4, "opposite is transpose", ac4},
      {5, "explicit isomorphism map", ac5},
      {6, "diassociativity triples", ac6},
      {7, "two-sided inverses", ac7},
      {8, "smallest nonassociative Moufang loop", ac8},
      {9, "deterministic reports", ac9},
      {10, "identity DSL agrees with direct scans", ac10},
  };

  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << ": "
              << o.detail << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
