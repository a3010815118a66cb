// chein: build doubled magmas over small groups and classify them.
//
// exit codes: 0 ok, 1 property fails (counterexample, no isomorphism, failed
// check), 2 bad arguments or identity syntax, 3 hypothesis not met, 4 file
// errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chein/classifier.hpp"
#include "chein/double_construction.hpp"
#include "chein/errors.hpp"
#include "chein/identity.hpp"
#include "chein/morphisms.hpp"
#include "chein/report.hpp"

namespace {

using namespace chein;

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kHypothesis = 3, kIo = 4 };

// Thrown for anything that should map to exit 4.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CayleyTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_table(in);
}

void save(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw IoError("write failed for '" + path + "'");
}

std::string list(const std::vector<OpMatrix>& ms) {
  std::string s;
  for (const auto& m : ms) {
    if (!s.empty()) s += ' ';
    s += '(' + m.to_string() + ')';
  }
  return s.empty() ? "-" : s;
}

struct ConstructArgs {
  std::string group, matrix, out;
};

int run_construct(const ConstructArgs& a) {
  const Group g = build_group(GroupSpec::parse(a.group));
  const DoubledMagma d = build_double(g, OpMatrix::parse(a.matrix));
  std::ostringstream table;
  write_table(table, d.table);
  if (a.out.empty()) {
    std::cout << table.str();
    return kOk;
  }
  save(a.out, table.str());
  save(a.out + ".json", sidecar_json(d).dump(2) + "\n");
  std::cout << "wrote " << a.out << " (order " << d.table.order() << ")\n";
  return kOk;
}

struct CheckArgs {
  std::string table, builtin, identity;
};

int run_check(const CheckArgs& a) {
  const Identity id = a.builtin.empty() ? parse_identity(a.identity) : builtin(a.builtin);
  const CayleyTable t = load_table(a.table);
  const CheckResult r = check_identity(t, id);
  if (r.holds) {
    std::cout << "holds: " << to_string(id) << "\n";
    return kOk;
  }
  std::cout << "fails: " << to_string(id) << "\n"
            << "counterexample: " << format_counterexample(id, r) << "\n";
  return kFails;
}

struct EnumerateArgs {
  std::string group, report, csv;
  int threads = 0;
};

int run_enumerate(const EnumerateArgs& a) {
  const Group g = build_group(GroupSpec::parse(a.group));
  const ClassificationReport r = enumerate(g, {a.threads});
  save(a.report, to_json(r).dump(2) + "\n");
  if (!a.csv.empty()) {
    std::ostringstream csv;
    write_csv(csv, r);
    save(a.csv, csv.str());
  }
  std::cout << "group " << r.group << " (order " << r.group_order << ")\n";
  for (Flag f : kAllFlags)
    std::cout << "  " << name(f) << ": " << r.counts[static_cast<std::size_t>(f)] << "\n";
  std::cout << "moufang: " << list(r.moufang_set) << "\n";
  std::cout << "theorem6: " << name(r.theorem6.status) << "\n";
  for (const auto& c : r.lemma_checks) std::cout << c.name << ": " << name(c.status) << "\n";
  std::cout << "bol_not_moufang: " << r.bol_not_moufang.size() << "\n";
  std::cout << "ip_discrepancies: " << r.ip_discrepancies.size() << "\n";
  return r.all_checks_pass() ? kOk : kFails;
}

int run_verify(const std::string& group, int threads) {
  const Group g = build_group(GroupSpec::parse(group));
  const Theorem6Result t = verify_theorem6(g, {threads});
  std::cout << "theorem6 " << g.label() << ": " << name(t.status) << "\n";
  std::cout << "missing: " << list(t.missing) << "\n";
  std::cout << "extra: " << list(t.extra) << "\n";
  for (const auto& n : t.notes) std::cout << "note: " << n << "\n";
  return t.status == CheckStatus::pass ? kOk : kFails;
}

int run_iso(const std::string& pa, const std::string& pb, bool anti) {
  const CayleyTable a = load_table(pa);
  const CayleyTable b = load_table(pb);
  const auto f = anti ? are_anti_isomorphic(a, b) : are_isomorphic(a, b);
  if (!f) {
    std::cout << "none\n";
    return kFails;
  }
  std::cout << to_json(*f).dump() << "\n";
  return kOk;
}

int run_group_info(const std::string& spec) {
  const Group g = build_group(GroupSpec::parse(spec));
  std::cout << "group: " << g.label() << "\n"
            << "order: " << g.order() << "\n"
            << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n"
            << "center_index: " << g.center_index() << "\n"
            << "elementary_abelian_2: " << (g.is_elementary_abelian_2() ? "yes" : "no") << "\n"
            << "squares_central: " << (g.squares_central() ? "yes" : "no") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubled magmas over finite groups"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Write the Cayley table of a doubled magma");
  construct->add_option("--group", ca.group, "Group spec: C<n>, D<2n>, S<n>, Q8, AxB")->required();
  construct->add_option("--matrix", ca.matrix, "Name (M_c, G_iota, ...) or a,b,c,d")->required();
  construct->add_option("--out", ca.out, "Output file (a FILE.json sidecar is written too)");

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Check an identity on a table");
  check->add_option("--table", ka.table, "Cayley table file")->required();
  auto* which = check->add_option_group("identity");
  which->add_option("--builtin", ka.builtin, "Builtin identity name");
  which->add_option("--identity", ka.identity, "Identity, e.g. \"(x*y)*z = x*(y*z)\"");
  which->require_option(1);

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Classify all 4096 doubles of a group");
  enumerate_cmd->add_option("--group", ea.group, "Group spec")->required();
  enumerate_cmd->add_option("--report", ea.report, "JSON report file")->required();
  enumerate_cmd->add_option("--csv", ea.csv, "CSV summary file");
  enumerate_cmd->add_option("--threads", ea.threads, "Worker threads (0: default, 1: serial)")
      ->check(CLI::NonNegativeNumber);

  std::string vgroup;
  int vthreads = 0;
  auto* verify = app.add_subcommand("verify-theorem", "Check the Moufang classification for a group");
  verify->add_option("--group", vgroup, "Group spec")->required();
  verify->add_option("--threads", vthreads, "Worker threads")->check(CLI::NonNegativeNumber);

  std::string ia, ib;
  bool anti = false;
  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two loops");
  iso->add_option("--a", ia, "First table")->required();
  iso->add_option("--b", ib, "Second table")->required();
  iso->add_flag("--anti", anti, "Map onto the opposite of the second table");

  std::string igroup;
  auto* info = app.add_subcommand("group-info", "Basic invariants of a group");
  info->add_option("--group", igroup, "Group spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*check) return run_check(ka);
    if (*enumerate_cmd) return run_enumerate(ea);
    if (*verify) return run_verify(vgroup, vthreads);
    if (*iso) return run_iso(ia, ib, anti);
    if (*info) return run_group_info(igroup);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHypothesis;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
