#pragma once

// JSON and PD-code readers / writers for trees, framed links and diagrams.

#include "strongl/linkdiag.hpp"
#include "strongl/surgery.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace strongl {

/// Malformed input; the message names the offending line or field.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses JSON text; syntax errors report line and column.
nlohmann::json parse_json(const std::string& text, const std::string& source = "input");
/// Reads a whole file. Throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

/// {"vertices":[{"id", "sign":1|-1, "weight":"p/q"|"inf"}], "edges":[[a,b]]}.
/// Ids may be strings or integers; weights may also be JSON integers.
AWTree tree_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AWTree& t);

/// {"components":[{"id", "framing":"p/q"|"inf"}], "links":[{"a","b","lk"}]}.
/// A link entry may also be a pair [a, b] with lk 1.
FramedLink link_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FramedLink& l);

/// {"crossings":[{"arcs":[a,b,c,d], "over":0|1}], "alternating":true, "loops":n}.
/// "over" defaults to 1 (slots 1 and 3 over), "loops" to 0.
Diagram diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Diagram& d);

/// Lines or tokens of the form X[a,b,c,d] (PD convention, a incoming under).
/// An optional "loops n" line adds free loops. alternating is set from the
/// diagram's actual alternation.
Diagram parse_pd(const std::string& text);

/// JSON if the text starts with '{', PD otherwise.
Diagram parse_diagram(const std::string& text, const std::string& source = "input");

}  // namespace strongl
