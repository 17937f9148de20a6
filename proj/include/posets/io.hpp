#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "posets/gadgets.hpp"
#include "posets/ideals.hpp"
#include "posets/poset.hpp"
#include "posets/priority.hpp"

namespace posets {

using Json = nlohmann::json;

/// Parsed but not yet validated poset document:
///   {"elements": [{"id": 0, "label": "a"}, ...], "leq": [[0, 1], ...], "closed": true}
/// Elements may appear in any order and are sorted by id. Reflexive pairs
/// are implicit. By default `leq` must already be the full order; with
/// "closed": false it is read as generating pairs (e.g. covers) and closed
/// transitively before validation.
struct PosetDocument {
  Relation relation;
  std::vector<Id> ids;
  std::vector<std::string> labels;
  bool closed = true;
};

/// Throws ParseError on malformed JSON and SchemaError on the wrong shape.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

PosetDocument document_from_json(const Json& j);
/// Closure (if requested) followed by validate().
Validation validate_document(const PosetDocument& doc);
/// Throws ValidationError if the document does not describe a partial order.
Poset poset_from_json(const Json& j);
Poset read_poset_file(const std::string& path);

/// Full strict relation with "closed": true.
Json poset_to_json(const Poset& p);
/// Hasse diagram (covers only), nodes named by label or id.
std::string to_dot(const Poset& p);

std::vector<Id> id_list(const Poset& p, const ElemSet& s);
/// Throws SchemaError on an id outside the carrier.
ElemSet set_from_ids(const Poset& p, std::span<const Id> ids);

/// One interval per line as a JSON id list.
std::string interval_lines(const Poset& p, const std::vector<ElemSet>& intervals);

Json cover_to_json(const Poset& p, const IdealCover& cover);
Json gadget_to_json(const GadgetInstance& inst);
/// Accepts gadget_to_json output or a bare poset document plus an explicit family.
GadgetInstance gadget_from_json(const Json& j, const std::string& family = "");

/// {"programs": [[{"from": 5, "value": 0, "lo": 0, "hi": 25}, ...], ...]}
/// with lo/hi optional.
Evaluator evaluator_from_json(const Json& j);
Json evaluator_to_json(const Evaluator& ev);

/// Line-oriented transcript: header fields, then one activation per line and
/// one stage per line. Byte-stable for a given log.
std::string priority_transcript(const PriorityLog& log);
PriorityLog priority_from_transcript(std::string_view text);

Json priority_report_to_json(const PriorityReport& report);

}  // namespace posets
