// posets: command-line front end to the library.
//
// Exit codes: 0 success, 1 unreadable input, 2 well-formed input that
// violates the schema or a precondition, 3 enumeration cap exceeded,
// 4 internal failure.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "posets/antichains.hpp"
#include "posets/census.hpp"
#include "posets/errors.hpp"
#include "posets/gadgets.hpp"
#include "posets/ideals.hpp"
#include "posets/interval_tree.hpp"
#include "posets/io.hpp"
#include "posets/priority.hpp"
#include "posets/separation.hpp"

using namespace posets;

namespace {

enum class Format { kJson, kText, kDot };

std::vector<std::uint64_t> parse_ids(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("not a natural number: '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token += c;
  }
  flush();
  return out;
}

std::size_t enumeration_cap() {
  const char* env = std::getenv("POSETS_MAX_ENUM");
  if (!env || !*env) return kDefaultEnumerationCap;
  const auto v = parse_ids(env);
  if (v.size() != 1) throw ParseError("POSETS_MAX_ENUM must be a single natural number");
  return v[0];
}

std::string ids_text(const std::vector<Id>& ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? " " : "") << ids[i];
  return os.str();
}

std::string natset_text(const NatSet& s) {
  return ids_text(std::vector<Id>(s.begin(), s.end()));
}

struct Options {
  Format format = Format::kJson;
  std::uint64_t seed = 0;
};

int cmd_validate(const Options& opt, const std::string& file) {
  const PosetDocument doc = document_from_json(read_json_file(file));
  const Validation v = validate_document(doc);
  if (v.ok()) {
    if (opt.format == Format::kDot)
      std::cout << to_dot(v.poset());
    else if (opt.format == Format::kText)
      std::cout << "valid: " << v.poset().size() << " elements\n";
    else
      std::cout << Json{{"valid", true}, {"size", v.poset().size()}}.dump(2) << "\n";
    return 0;
  }
  const Violation& bad = v.violation();
  std::vector<Id> witness;
  for (Elem e : bad.witness) witness.push_back(doc.ids[e]);
  static const char* names[] = {"reflexivity", "antisymmetry", "transitivity"};
  if (opt.format == Format::kJson)
    std::cout << Json{{"valid", false}, {"axiom", names[static_cast<int>(bad.axiom)]}, {"witness", witness}}.dump(2)
              << "\n";
  else
    std::cout << "invalid: " << names[static_cast<int>(bad.axiom)] << " fails at ids " << ids_text(witness) << "\n";
  return 2;
}

int cmd_intervals(const Options& opt, const std::string& file, bool enumerate) {
  const Poset p = read_poset_file(file);
  if (!enumerate) {
    std::cout << count_intervals(p) << "\n";
    return 0;
  }
  const auto all = enumerate_intervals(p, enumeration_cap());
  if (opt.format == Format::kText) {
    std::cout << interval_lines(p, all);
  } else {
    Json out = Json::array();
    for (const auto& s : all) out.push_back(id_list(p, s));
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int cmd_decompose(const Options& opt, const std::string& file, const std::string& decode) {
  const Json doc = read_json_file(file);
  if (decode.empty()) {
    const Poset p = poset_from_json(doc.contains("poset") ? doc.at("poset") : doc);
    const IdealCover cover = et_decompose(p);
    if (opt.format == Format::kText) {
      for (const auto& part : cover.parts) std::cout << ids_text(id_list(p, part)) << "\n";
    } else {
      std::cout << cover_to_json(p, cover).dump(2) << "\n";
    }
    return 0;
  }
  const GadgetInstance inst = gadget_from_json(doc, doc.contains("family") ? "" : decode);
  if (inst.family != decode) throw SchemaError("document holds a " + inst.family + " gadget, not " + decode);
  NatSet decoded;
  Json extra;
  if (decode == "two-chain" || decode == "omega-omegastar") {
    const IdealCover cover = essential_decomposition(inst.poset);
    decoded = decode == "two-chain" ? decode_two_chain(inst, cover) : decode_wpo(inst, cover);
    extra = cover_to_json(inst.poset, cover);
  } else if (decode == "range-strong") {
    const ElemSet s = max_strong_antichain(inst.poset).witness;
    decoded = decode_range_strong(inst, s);
    extra = id_list(inst.poset, s);
  } else {
    throw SchemaError("decompose cannot decode the " + decode + " family");
  }
  if (opt.format == Format::kText)
    std::cout << natset_text(decoded) << "\n";
  else
    std::cout << Json{{"family", decode}, {"decoded", decoded}, {"from", extra}}.dump(2) << "\n";
  return 0;
}

int cmd_separate(const Options& opt, const std::string& file, const std::string& a_text, const std::string& b_text) {
  const Poset p = read_poset_file(file);
  const auto a_ids = parse_ids(a_text);
  const auto b_ids = parse_ids(b_text);
  const ElemSet a = set_from_ids(p, a_ids);
  const ElemSet b = set_from_ids(p, b_ids);
  const ElemSet i = separate_down(p, a, b);
  if (opt.format == Format::kText)
    std::cout << ids_text(id_list(p, i)) << "\n";
  else
    std::cout << Json{{"interval", id_list(p, i)}}.dump(2) << "\n";
  return 0;
}

int cmd_gadget(const Options& opt, const std::string& family, const std::string& f_text, const std::string& g_text,
               std::size_t horizon) {
  const FnTable f(parse_ids(f_text));
  const FnTable g(parse_ids(g_text));
  GadgetInstance inst;
  if (family == "range-strong")
    inst = g_range_strong(f, horizon);
  else if (family == "sep")
    inst = g_sep(f, g, horizon);
  else if (family == "two-chain")
    inst = g_two_chain(f, horizon);
  else if (family == "truefalse")
    inst = g_truefalse(f, false, horizon);
  else if (family == "truefalse-copies")
    inst = g_truefalse(f, true, horizon);
  else if (family == "omega-omegastar")
    inst = g_omega_omegastar(f, horizon);
  else if (family == "antichain-ext")
    inst = g_antichain_ext(f, horizon);
  else if (family == "wkl")
    inst = g_wkl(f, g, horizon);
  else
    throw SchemaError("unknown gadget family " + family);
  if (opt.format == Format::kDot)
    std::cout << to_dot(inst.poset);
  else
    std::cout << gadget_to_json(inst).dump(2) << "\n";
  return 0;
}

int cmd_priority(const Options& opt, std::size_t horizon, std::size_t stages, const std::string& ev_file,
                 std::size_t verify) {
  const Evaluator ev = evaluator_from_json(read_json_file(ev_file));
  const PriorityLog log = prio_run(horizon, stages, ev);
  if (verify == 0) {
    if (opt.format == Format::kDot)
      std::cout << to_dot(prio_poset(log, std::min(horizon, log.final_stage() + 1)));
    else
      std::cout << priority_transcript(log);
    return 0;
  }
  const PriorityReport report = prio_verify(log, ev, verify);
  if (opt.format == Format::kText) {
    for (const auto& c : report.checks)
      std::cout << (c.passed ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    std::cout << "last change at stage " << report.last_change_stage << "\n";
  } else {
    std::cout << priority_report_to_json(report).dump(2) << "\n";
  }
  return report.ok() ? 0 : 4;
}

int cmd_census(const Options& opt, std::size_t max_n, unsigned threads) {
  const CensusReport report = run_census(max_n, threads);
  if (opt.format == Format::kJson) {
    Json rows = Json::array();
    for (const auto& r : report.rows) rows.push_back({{"n", r.n}, {"classes", r.classes}, {"violations", r.violations}});
    Json failures = Json::array();
    for (const auto& f : report.failures) failures.push_back({{"identity", f.identity}, {"detail", f.detail}});
    std::cout << Json{{"rows", rows}, {"violations", report.violations()}, {"failures", failures}}.dump(2) << "\n";
  } else {
    std::cout << " n  classes  violations\n";
    for (const auto& r : report.rows)
      std::cout << (r.n < 10 ? " " : "") << r.n << "  " << std::setw(7) << r.classes << "  " << std::setw(10)
                << r.violations << "\n";
    std::cout << "identity violations: " << report.violations() << "\n";
    for (const auto& f : report.failures) std::cout << "  " << f.identity << " " << f.detail << "\n";
  }
  return report.violations() == 0 ? 0 : 4;
}

int cmd_random(const Options& opt, std::size_t n, double density) {
  std::mt19937_64 rng(opt.seed);
  const Poset p = random_poset(n, rng, density);
  if (opt.format == Format::kDot)
    std::cout << to_dot(p);
  else
    std::cout << poset_to_json(p).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite partial orders: initial intervals, ideal covers, gadgets and priority runs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::map<std::string, Format> formats{{"json", Format::kJson}, {"text", Format::kText}, {"dot", Format::kDot}};
  app.add_option("--format", opt.format, "Output format: json, text or dot")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--seed", opt.seed, "Seed for randomized commands");

  std::string file, decode, a_ids, b_ids, family, f_text, g_text, ev_file;
  std::size_t horizon = 0, stages = 0, verify = 0, max_n = 0, n = 0;
  unsigned threads = 0;
  bool count = false, enumerate = false;
  double density = 0.3;

  auto* validate_cmd = app.add_subcommand("validate", "Check the partial-order axioms");
  validate_cmd->add_option("file", file)->required();

  auto* intervals_cmd = app.add_subcommand("intervals", "Count or list initial intervals");
  intervals_cmd->add_option("file", file)->required();
  auto* count_flag = intervals_cmd->add_flag("--count", count, "Print the number of initial intervals");
  intervals_cmd->add_flag("--enumerate", enumerate, "List every initial interval")->excludes(count_flag);

  auto* decompose_cmd = app.add_subcommand("decompose", "Split the carrier into ideals");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_option("--decode", decode, "Read the cover back through a gadget decoder");

  auto* separate_cmd = app.add_subcommand("separate", "Initial interval containing A and avoiding B");
  separate_cmd->add_option("file", file)->required();
  separate_cmd->add_option("A", a_ids, "Ids to include, e.g. 1,2")->required();
  separate_cmd->add_option("B", b_ids, "Ids to exclude")->required();

  auto* gadget_cmd = app.add_subcommand("gadget", "Build a reversal gadget");
  gadget_cmd->add_option("family", family)->required();
  gadget_cmd->add_option("--f", f_text, "Values f(0), f(1), ...")->required();
  gadget_cmd->add_option("--g", g_text, "Values g(0), g(1), ...");
  gadget_cmd->add_option("--N", horizon, "Horizon (0 picks a default)");

  auto* priority_cmd = app.add_subcommand("priority", "Run the finite-injury construction");
  priority_cmd->add_option("horizon", horizon)->required();
  priority_cmd->add_option("stages", stages)->required();
  priority_cmd->add_option("ev-file", ev_file)->required();
  priority_cmd->add_option("--verify", verify, "Verify the slice of this many pairs instead of printing the log");

  auto* census_cmd = app.add_subcommand("census", "Check identities on every poset up to isomorphism");
  census_cmd->add_option("max-n", max_n)->required()->check(CLI::Range(1, 8));
  census_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* random_cmd = app.add_subcommand("random", "Random poset");
  random_cmd->add_option("n", n)->required();
  random_cmd->add_option("--density", density)->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt, file);
    if (*intervals_cmd) {
      if (!count && !enumerate) throw SchemaError("intervals needs --count or --enumerate");
      return cmd_intervals(opt, file, enumerate);
    }
    if (*decompose_cmd) return cmd_decompose(opt, file, decode);
    if (*separate_cmd) return cmd_separate(opt, file, a_ids, b_ids);
    if (*gadget_cmd) return cmd_gadget(opt, family, f_text, g_text, horizon);
    if (*priority_cmd) return cmd_priority(opt, horizon, stages, ev_file, verify);
    if (*census_cmd) return cmd_census(opt, max_n, threads);
    if (*random_cmd) return cmd_random(opt, n, density);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const PosetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 4;
}
