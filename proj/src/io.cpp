#include "posets/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "posets/errors.hpp"

namespace posets {

namespace {

template <class T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string(what) + " is missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw SchemaError(std::string(what) + " has a malformed \"" + key + "\"");
  }
}

const char* polarity_name(Polarity p) { return p == Polarity::kLow ? "low" : "high"; }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

PosetDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("poset document must be an object");
  const Json& elems = j.contains("elements") ? j.at("elements") : Json();
  if (!elems.is_array()) throw SchemaError("poset document needs an \"elements\" array");

  std::vector<std::pair<Id, std::string>> dressed;
  for (const auto& e : elems) {
    if (e.is_number_unsigned()) {
      dressed.emplace_back(e.get<Id>(), "");
      continue;
    }
    const Id id = field<Id>(e, "id", "element");
    const std::string label = e.contains("label") ? field<std::string>(e, "label", "element") : "";
    dressed.emplace_back(id, label);
  }
  std::sort(dressed.begin(), dressed.end());
  for (std::size_t i = 1; i < dressed.size(); ++i)
    if (dressed[i].first == dressed[i - 1].first)
      throw SchemaError("duplicate element id " + std::to_string(dressed[i].first));

  PosetDocument doc;
  const std::size_t n = dressed.size();
  for (auto& [id, label] : dressed) {
    doc.ids.push_back(id);
    doc.labels.push_back(std::move(label));
  }
  doc.relation.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) doc.relation[i][i] = true;

  auto index = [&](const Json& v) -> std::size_t {
    if (!v.is_number_unsigned()) throw SchemaError("leq entries must be pairs of element ids");
    const Id id = v.get<Id>();
    auto it = std::lower_bound(doc.ids.begin(), doc.ids.end(), id);
    if (it == doc.ids.end() || *it != id) throw SchemaError("leq mentions unknown id " + std::to_string(id));
    return static_cast<std::size_t>(it - doc.ids.begin());
  };
  if (j.contains("leq")) {
    const Json& leq = j.at("leq");
    if (!leq.is_array()) throw SchemaError("\"leq\" must be an array");
    for (const auto& pair : leq) {
      if (!pair.is_array() || pair.size() != 2) throw SchemaError("leq entries must be pairs of element ids");
      doc.relation[index(pair[0])][index(pair[1])] = true;
    }
  }
  if (j.contains("closed")) doc.closed = field<bool>(j, "closed", "poset document");
  return doc;
}

Validation validate_document(const PosetDocument& doc) {
  return validate(doc.closed ? doc.relation : transitive_closure(doc.relation), doc.ids, doc.labels);
}

Poset poset_from_json(const Json& j) {
  auto checked = validate_document(document_from_json(j));
  if (!checked.ok()) throw ValidationError(checked.violation().message());
  return std::move(checked).poset();
}

Poset read_poset_file(const std::string& path) { return poset_from_json(read_json_file(path)); }

Json poset_to_json(const Poset& p) {
  Json elems = Json::array();
  for (Elem e = 0; e < p.size(); ++e) elems.push_back({{"id", p.id(e)}, {"label", p.label(e)}});
  Json leq = Json::array();
  for (Elem a = 0; a < p.size(); ++a)
    p.up(a).for_each([&](Elem b) {
      if (a != b) leq.push_back({p.id(a), p.id(b)});
    });
  return {{"closed", true}, {"elements", elems}, {"leq", leq}};
}

std::string to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (Elem e = 0; e < p.size(); ++e) os << "  n" << p.id(e) << " [label=\"" << p.name(e) << "\"];\n";
  for (const auto& [a, b] : covers(p)) os << "  n" << p.id(a) << " -> n" << p.id(b) << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<Id> id_list(const Poset& p, const ElemSet& s) {
  std::vector<Id> out;
  s.for_each([&](Elem e) { out.push_back(p.id(e)); });
  return out;
}

ElemSet set_from_ids(const Poset& p, std::span<const Id> ids) {
  ElemSet s = p.none();
  for (Id id : ids) {
    auto e = p.index_of(id);
    if (!e) throw SchemaError("id " + std::to_string(id) + " is not in the carrier");
    s.insert(*e);
  }
  return s;
}

std::string interval_lines(const Poset& p, const std::vector<ElemSet>& intervals) {
  std::string out;
  for (const auto& s : intervals) out += Json(id_list(p, s)).dump() + "\n";
  return out;
}

Json cover_to_json(const Poset& p, const IdealCover& cover) {
  Json parts = Json::array();
  for (const auto& part : cover.parts) parts.push_back(id_list(p, part));
  return {{"parts", parts}, {"target", id_list(p, cover.target)}, {"witness", id_list(p, cover.witness)}};
}

Json gadget_to_json(const GadgetInstance& inst) {
  return {{"family", inst.family}, {"horizon", inst.horizon}, {"poset", poset_to_json(inst.poset)}};
}

GadgetInstance gadget_from_json(const Json& j, const std::string& family) {
  if (j.is_object() && j.contains("poset")) {
    const std::string fam = family.empty() ? field<std::string>(j, "family", "gadget document") : family;
    const auto horizon = j.contains("horizon") ? field<std::size_t>(j, "horizon", "gadget document") : 0;
    return gadget_from_poset(fam, poset_from_json(j.at("poset")), horizon);
  }
  if (family.empty()) throw SchemaError("bare poset document needs an explicit gadget family");
  return gadget_from_poset(family, poset_from_json(j), 0);
}

Evaluator evaluator_from_json(const Json& j) {
  const auto programs = j.is_object() && j.contains("programs") ? j.at("programs") : Json();
  if (!programs.is_array()) throw SchemaError("evaluator document needs a \"programs\" array");
  std::vector<Evaluator::Program> out;
  for (const auto& prog : programs) {
    if (!prog.is_array()) throw SchemaError("each program must be an array of clauses");
    Evaluator::Program clauses;
    for (const auto& c : prog) {
      Evaluator::Clause clause;
      clause.from = field<std::size_t>(c, "from", "clause");
      clause.value = field<std::uint8_t>(c, "value", "clause");
      if (c.contains("lo")) clause.lo = field<std::uint64_t>(c, "lo", "clause");
      if (c.contains("hi")) clause.hi = field<std::uint64_t>(c, "hi", "clause");
      if (clause.value > 1) throw SchemaError("clause value must be 0 or 1");
      clauses.push_back(clause);
    }
    out.push_back(std::move(clauses));
  }
  try {
    return Evaluator(std::move(out));
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  }
}

Json evaluator_to_json(const Evaluator& ev) {
  Json programs = Json::array();
  for (const auto& prog : ev.all()) {
    Json clauses = Json::array();
    for (const auto& c : prog) {
      Json clause = {{"from", c.from}, {"value", c.value}};
      if (c.lo) clause["lo"] = *c.lo;
      if (c.hi) clause["hi"] = *c.hi;
      clauses.push_back(clause);
    }
    programs.push_back(clauses);
  }
  return {{"programs", programs}};
}

std::string priority_transcript(const PriorityLog& log) {
  std::ostringstream os;
  os << "{\n\"horizon\": " << log.horizon << ",\n\"final_stage\": " << log.final_stage() << ",\n";
  os << "\"activations\": [";
  for (std::size_t i = 0; i < log.activations.size(); ++i) {
    const auto& a = log.activations[i];
    Json line = {{"n", a.n}, {"stage", a.stage}, {"polarity", polarity_name(a.polarity)}, {"requirement", a.requirement}};
    os << (i ? ",\n" : "\n") << line.dump();
  }
  os << (log.activations.empty() ? "],\n" : "\n],\n");
  os << "\"stages\": [";
  for (std::size_t s = 0; s < log.stages.size(); ++s) {
    const auto& st = log.stages[s];
    Json line = {{"s", s}, {"witnesses", st.witnesses}, {"flags", st.flags}};
    line["attention"] = st.attention ? Json(*st.attention) : Json(nullptr);
    os << (s ? ",\n" : "\n") << line.dump();
  }
  os << "\n]\n}\n";
  return os.str();
}

PriorityLog priority_from_transcript(std::string_view text) {
  const Json j = parse_json(text);
  PriorityLog log;
  log.horizon = field<std::size_t>(j, "horizon", "transcript");
  for (const auto& a : field<Json>(j, "activations", "transcript")) {
    const auto pol = field<std::string>(a, "polarity", "activation");
    if (pol != "low" && pol != "high") throw SchemaError("activation polarity must be low or high");
    log.activations.push_back({field<std::size_t>(a, "n", "activation"), field<std::size_t>(a, "stage", "activation"),
                               pol == "low" ? Polarity::kLow : Polarity::kHigh,
                               field<std::size_t>(a, "requirement", "activation")});
  }
  for (const auto& st : field<Json>(j, "stages", "transcript")) {
    StageState state;
    state.witnesses = field<std::vector<std::size_t>>(st, "witnesses", "stage");
    state.flags = field<std::vector<std::uint8_t>>(st, "flags", "stage");
    if (st.contains("attention") && !st.at("attention").is_null())
      state.attention = field<std::size_t>(st, "attention", "stage");
    if (state.witnesses.size() != log.horizon || state.flags.size() != log.horizon)
      throw SchemaError("stage width does not match horizon");
    log.stages.push_back(std::move(state));
  }
  if (log.stages.empty()) throw SchemaError("transcript has no stages");
  if (field<std::size_t>(j, "final_stage", "transcript") != log.final_stage())
    throw SchemaError("final_stage does not match the stage list");
  return log;
}

Json priority_report_to_json(const PriorityReport& report) {
  static const std::map<GuessStatus, const char*> names = {{GuessStatus::kVerified, "verified"},
                                                           {GuessStatus::kNotApplicable, "not applicable"},
                                                           {GuessStatus::kUnresolved, "unresolved"},
                                                           {GuessStatus::kFailed, "failed"}};
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json guesses = Json::array();
  for (const auto& g : report.guesses)
    guesses.push_back({{"requirement", g.requirement},
                       {"status", names.at(g.status)},
                       {"reason", g.reason},
                       {"generators", g.generators}});
  return {{"ok", report.ok()}, {"checks", checks}, {"guesses", guesses}, {"last_change_stage", report.last_change_stage}};
}

}  // namespace posets
