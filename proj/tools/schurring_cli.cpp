// schurring: command-line front end for the S-ring library.
//
// Exit codes: 0 success, 1 input error, 2 validation failure, 3 search
// budget exceeded.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurring/constructions.hpp"
#include "schurring/document.hpp"
#include "schurring/enumeration.hpp"
#include "schurring/schurity.hpp"
#include "schurring/sring.hpp"
#include "schurring/zn_arith.hpp"

namespace {

using nlohmann::json;
using namespace schurring;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

struct Options {
  bool json_output = false;
  std::uint64_t budget = 0;
  int cap = kDefaultEnumerationCap;
  std::string out_file;
};

json order_json(const GroupOrder& g) {
  json factors = json::array();
  for (const auto& [p, e] : g.factors()) factors.push_back({p, e});
  json j = {{"factors", factors}, {"text", g.str()}};
  if (auto v = g.value()) j["value"] = *v;
  return j;
}

json families_json(const std::vector<Family>& fs) {
  json out = json::array();
  for (Family f : fs) out.push_back(std::string(family_tag(f)));
  return out;
}

void print(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_output) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

// Parses a positive integer argument; anything else is an input error.
bool parse_positive(const std::string& s, std::uint64_t& out) {
  if (s.empty() || s.size() > 19) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  out = std::stoull(s);
  return out >= 1;
}

SearchOptions search_options(const Options& opt) {
  SearchOptions s = default_search_options();
  if (opt.budget > 0) s.node_budget = opt.budget;
  return s;
}

int cmd_classify(const Options& opt, const std::string& arg) {
  std::uint64_t n = 0;
  if (!parse_positive(arg, n)) {
    std::cerr << "classify: '" << arg << "' is not a positive integer\n";
    return kExitInput;
  }
  const Classification c = classify(n);
  json j = {{"n", n}, {"schur", c.schur()}};
  std::string text = "n = " + std::to_string(n) + ": ";
  if (c.schur()) {
    j["families"] = families_json(c.families);
    text += "Schur; families";
    for (Family f : c.families) text += " " + std::string(family_tag(f));
  } else {
    j["split"] = {c.nonschur_split->first, c.nonschur_split->second};
    text += "not Schur; coprime split " + std::to_string(c.nonschur_split->first) + " * " +
            std::to_string(c.nonschur_split->second);
  }
  print(opt, j, text + "\n");
  return kExitOk;
}

int cmd_witness(const Options& opt, const std::string& a1, const std::string& a2) {
  std::uint64_t n1 = 0, n2 = 0;
  if (!parse_positive(a1, n1) || !parse_positive(a2, n2) || n1 * n2 > 100000) {
    std::cerr << "witness: expected two positive orders with a product of at most 100000\n";
    return kExitInput;
  }
  Witness w{group_ring(1), {}};
  try {
    w = witness(static_cast<int>(n1), static_cast<int>(n2));
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }
  const WitnessTrace& t = w.trace;
  if (!opt.out_file.empty()) write_document(w.ring, opt.out_file);
  json j = {{"n", w.ring.order()},
            {"rank", w.ring.rank()},
            {"branch", branch_name(t.branch)},
            {"n1", t.n1},
            {"n2", t.n2},
            {"a", t.a},
            {"b", t.b},
            {"c", t.c},
            {"d", t.d},
            {"m12", t.m12},
            {"m34", t.m34}};
  if (!opt.out_file.empty()) j["file"] = opt.out_file;
  std::string text = "witness over Z_" + std::to_string(w.ring.order()) + ", rank " + std::to_string(w.ring.rank()) +
                     "\nbranch " + branch_name(t.branch) + ": n1=" + std::to_string(t.n1) +
                     " n2=" + std::to_string(t.n2) + " a=" + std::to_string(t.a) + " b=" + std::to_string(t.b) +
                     " c=" + std::to_string(t.c) + " d=" + std::to_string(t.d) + " glue=" + std::to_string(t.m12) +
                     "," + std::to_string(t.m34) + "," + std::to_string(t.n1) + "\n";
  if (opt.out_file.empty() && !opt.json_output) text += emit_document(w.ring);
  if (opt.out_file.empty() && opt.json_output) j["document"] = json::parse(emit_document(w.ring));
  print(opt, j, text);
  return kExitOk;
}

// Loads and validates a ring, reporting the error and exit code on failure.
bool load(const std::string& path, SRing& out, int& code) {
  SRingDocument doc;
  try {
    doc = read_document(path);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    code = kExitInput;
    return false;
  }
  try {
    out = to_sring(doc);
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    code = kExitValidation;
    return false;
  }
  return true;
}

int cmd_analyze(const Options& opt, const std::string& path) {
  SRing a = group_ring(1);
  int code = kExitOk;
  if (!load(path, a, code)) return code;
  const RadicalReport rad = radical(a);
  const auto cyc = is_cyclotomic(a);
  const auto wreaths = wreath_decompositions(a);
  json wj = json::array();
  for (const Section& s : wreaths) wj.push_back({s.u, s.l});
  json j = {{"n", a.order()},
            {"rank", a.rank()},
            {"a_groups", a_groups(a)},
            {"radical", {{"ring", rad.ring_radical}, {"well_defined", rad.well_defined},
                         {"per_class", rad.per_class_radical}}},
            {"highest_classes", highest_classes(a)},
            {"primitive", is_primitive(a)},
            {"dense", is_dense(a)},
            {"quasidense", is_quasidense(a)},
            {"cyclotomic", cyc ? json(cyc->elements()) : json(nullptr)},
            {"wreath_decompositions", wj}};
  std::string text = "order " + std::to_string(a.order()) + ", rank " + std::to_string(a.rank()) + "\n";
  text += "A-groups: " + join(a_groups(a)) + "\n";
  text += "radical: " + std::to_string(rad.ring_radical) + (rad.well_defined ? "" : " (highest sets disagree)") + "\n";
  text += std::string("primitive: ") + (is_primitive(a) ? "yes" : "no") + ", dense: " + (is_dense(a) ? "yes" : "no") +
          ", quasidense: " + (is_quasidense(a) ? "yes" : "no") + "\n";
  text += "cyclotomic: " + (cyc ? "K = {" + join(cyc->elements()) + "}" : std::string("no")) + "\n";
  text += "proper wreath decompositions (u,l):";
  for (const Section& s : wreaths) text += " (" + std::to_string(s.u) + "," + std::to_string(s.l) + ")";
  text += wreaths.empty() ? " none\n" : "\n";
  print(opt, j, text);
  return kExitOk;
}

int cmd_schurity(const Options& opt, const std::string& path) {
  SRing a = group_ring(1);
  int code = kExitOk;
  if (!load(path, a, code)) return code;
  SchurityVerdict v;
  try {
    v = is_schurian(a, search_options(opt));
  } catch (const SearchBudgetExceeded& e) {
    print(opt, {{"n", a.order()}, {"error", "budget_exceeded"}, {"message", e.what()}}, std::string(e.what()) + "\n");
    return kExitBudget;
  }
  json j = {{"n", a.order()},
            {"schurian", v.schurian},
            {"aut_order", order_json(v.aut_order)},
            {"stabilizer_orbit_count", v.stabilizer_orbits.size()},
            {"rank", a.rank()},
            {"nodes", v.nodes}};
  std::string text = std::string(v.schurian ? "schurian" : "NOT schurian") + "\naut order: " + v.aut_order.str() +
                     "\nstabilizer orbits: " + std::to_string(v.stabilizer_orbits.size()) + " (rank " +
                     std::to_string(a.rank()) + ")\n";
  if (v.witness_mismatch) {
    const auto& m = *v.witness_mismatch;
    j["mismatch"] = {{"orbit", m.orbit}, {"class", a.basic_set(m.class_index)}, {"split", m.split}};
    text += "orbit {" + join(m.orbit) + "} is a proper subset of basic set {" + join(a.basic_set(m.class_index)) +
            "}\n";
  }
  print(opt, j, text);
  return kExitOk;
}

int cmd_enumerate(const Options& opt, const std::string& arg, bool run_census, bool up_to_cayley) {
  std::uint64_t n = 0;
  if (!parse_positive(arg, n) || n > static_cast<std::uint64_t>(opt.cap)) {
    std::cerr << "enumerate: order must be a positive integer no larger than the cap " << opt.cap << '\n';
    return kExitInput;
  }
  Enumerator e(opt.cap);
  const Catalog cat = make_catalog(static_cast<int>(n), e.rings(static_cast<int>(n)));
  json j = {{"n", n}, {"count", cat.count_exact}};
  std::string text = "S-rings over Z_" + std::to_string(n) + ": " + std::to_string(cat.count_exact) + "\n";
  if (up_to_cayley) {
    j["count_up_to_cayley"] = cat.count_up_to_cayley;
    text += "up to multiplier isomorphism: " + std::to_string(cat.count_up_to_cayley) + "\n";
  }
  int code = kExitOk;
  if (run_census) {
    const CensusReport r = census(e, static_cast<int>(n), search_options(opt));
    j["census"] = {{"schurian", r.schurian},
                   {"non_schurian", r.non_schurian},
                   {"budget_exceeded", r.budget_exceeded},
                   {"all_schurian", r.non_schurian == 0 && r.budget_exceeded == 0},
                   {"schur_order", r.classification.schur()},
                   {"consistent", r.consistent}};
    text += "schurian: " + std::to_string(r.schurian) + ", non-schurian: " + std::to_string(r.non_schurian) +
            (r.budget_exceeded ? ", budget exceeded: " + std::to_string(r.budget_exceeded) : "") + "\n";
    if (r.first_non_schurian) {
      j["census"]["first_non_schurian"] = json::parse(emit_document(*r.first_non_schurian));
      text += "first non-schurian ring:\n" + emit_document(*r.first_non_schurian);
    }
    if (r.budget_exceeded > 0) code = kExitBudget;
  }
  print(opt, j, text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over cyclic groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "Print reports as JSON");
  app.add_option("--budget", opt.budget, "Node budget for automorphism searches (default $SCHURRING_BUDGET or 1e8)");
  app.add_option("--cap", opt.cap, "Largest order accepted by enumerate");

  std::string n_arg, n1_arg, n2_arg, file_arg;
  bool run_census = false, up_to_cayley = false;

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether Z_n is a Schur group");
  classify_cmd->add_option("n", n_arg)->required();

  auto* witness_cmd = app.add_subcommand("witness", "Build the non-schurian S-ring over Z_{n1 n2}");
  witness_cmd->add_option("n1", n1_arg)->required();
  witness_cmd->add_option("n2", n2_arg)->required();
  witness_cmd->add_option("-o,--out", opt.out_file, "Write the ring as a JSON document");

  auto* analyze_cmd = app.add_subcommand("analyze", "Structural report for an S-ring document");
  analyze_cmd->add_option("file", file_arg)->required();

  auto* schurity_cmd = app.add_subcommand("schurity", "Decide whether an S-ring document is schurian");
  schurity_cmd->add_option("file", file_arg)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate all S-rings over Z_n");
  enumerate_cmd->add_option("n", n_arg)->required();
  enumerate_cmd->add_flag("--census", run_census, "Decide schurity of every ring");
  enumerate_cmd->add_flag("--up-to-cayley", up_to_cayley, "Also count rings up to multiplier isomorphism");

  for (auto* sub : {classify_cmd, witness_cmd, analyze_cmd, schurity_cmd, enumerate_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(opt, n_arg);
    if (*witness_cmd) return cmd_witness(opt, n1_arg, n2_arg);
    if (*analyze_cmd) return cmd_analyze(opt, file_arg);
    if (*schurity_cmd) return cmd_schurity(opt, file_arg);
    if (*enumerate_cmd) return cmd_enumerate(opt, n_arg, run_census, up_to_cayley);
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
