#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "h1lat/cohomology.hpp"
#include "h1lat/verify.hpp"
#include "h1lat/weyl_search.hpp"

namespace h1lat {

using Json = nlohmann::ordered_json;

/// Declarative description of a G-lattice:
///   {"rank": n, "gram": [[...]]?,
///    "group": {"kind": "cyclic"|"list"|"generated", "matrices": [...], "bound": k?}}
/// Integer entries are JSON integers or decimal strings (for large values).
struct InputDocument {
  std::size_t rank = 0;
  std::optional<IntMatrix> gram;
  GroupKind kind = GroupKind::cyclic;
  std::vector<IntMatrix> matrices;
  std::optional<std::size_t> bound;
};

/// Parses and validates: shapes, integer entries, unimodularity, form
/// preservation. Errors name the offending field, e.g. "group.matrices[1]".
InputDocument parse_input(const std::string& text);
InputDocument parse_document(const Json& doc);

GLattice to_glattice(const InputDocument& doc);
InputDocument to_document(const GLattice& m);
Json echo(const InputDocument& doc);

Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const FinAbGroup& g);
Json to_json(const CohomologyResult& r);
Json to_json(const ObstructionReport& r);
Json to_json(const RowReport& r);

}  // namespace h1lat
