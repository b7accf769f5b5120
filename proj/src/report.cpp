#include "h1lat/report.hpp"

#include "h1lat/error.hpp"

namespace h1lat {
namespace {

Integer parse_integer(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    const bool digits = s.size() > start && s.find_first_not_of("0123456789", start) ==
                                                std::string::npos;
    if (digits) return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  fail(where + ": non-integer entry " + v.dump());
}

IntMatrix parse_matrix(const Json& v, std::size_t rank, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array of rows");
  if (v.size() != rank)
    fail(where + ": expected " + std::to_string(rank) + "x" + std::to_string(rank) +
         " matrix, got " + std::to_string(v.size()) + " rows");
  IntMatrix m(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const auto& row = v[i];
    const std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(rw + ": expected an array");
    if (row.size() != rank)
      fail(rw + ": expected " + std::to_string(rank) + " entries, got " +
           std::to_string(row.size()));
    for (std::size_t j = 0; j < rank; ++j)
      m(i, j) = parse_integer(row[j], rw + "[" + std::to_string(j) + "]");
  }
  return m;
}

std::size_t parse_count(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    fail(where + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where + key + ": missing field");
  return obj[key];
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_document(doc);
}

InputDocument parse_document(const Json& doc) {
  if (!doc.is_object()) fail("input: expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "rank" && key != "gram" && key != "group") fail(key + ": unknown field");
  InputDocument out;
  out.rank = parse_count(require(doc, "rank", ""), "rank");
  if (doc.contains("gram") && !doc["gram"].is_null()) {
    out.gram = parse_matrix(doc["gram"], out.rank, "gram");
    if (out.gram->transpose() != *out.gram) fail("gram: not symmetric");
  }
  const Json& group = require(doc, "group", "");
  if (!group.is_object()) fail("group: expected an object");
  for (const auto& [key, _] : group.items())
    if (key != "kind" && key != "matrices" && key != "bound") fail("group." + key + ": unknown field");
  const Json& kind = require(group, "kind", "group.");
  if (kind == "cyclic")
    out.kind = GroupKind::cyclic;
  else if (kind == "list")
    out.kind = GroupKind::list;
  else if (kind == "generated")
    out.kind = GroupKind::generated;
  else
    fail("group.kind: expected \"cyclic\", \"list\" or \"generated\", got " + kind.dump());
  const Json& mats = require(group, "matrices", "group.");
  if (!mats.is_array()) fail("group.matrices: expected an array of matrices");
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const std::string where = "group.matrices[" + std::to_string(k) + "]";
    IntMatrix g = parse_matrix(mats[k], out.rank, where);
    if (!g.is_unimodular()) fail(where + ": not unimodular (det = " + g.det().get_str() + ")");
    if (out.gram && g.transpose() * *out.gram * g != *out.gram)
      fail(where + ": form not preserved");
    out.matrices.push_back(std::move(g));
  }
  if (out.kind == GroupKind::cyclic && out.matrices.size() != 1)
    fail("group.matrices: cyclic group needs exactly one generator, got " +
         std::to_string(out.matrices.size()));
  if (group.contains("bound")) {
    out.bound = parse_count(group["bound"], "group.bound");
    if (*out.bound < 1) fail("group.bound: must be at least 1");
  }
  return out;
}

GLattice to_glattice(const InputDocument& doc) {
  const std::size_t bound = doc.bound.value_or(kDefaultOrderBound);
  switch (doc.kind) {
    case GroupKind::cyclic:
      return GLattice::make(doc.rank, Cyclic{doc.matrices.front()}, doc.gram, bound);
    case GroupKind::list:
      return GLattice::make(doc.rank, Explicit{doc.matrices}, doc.gram, bound);
    case GroupKind::generated:
      return GLattice::make(doc.rank, Generated{doc.matrices, bound}, doc.gram, bound);
  }
  fail("unknown group kind");
}

InputDocument to_document(const GLattice& m) {
  InputDocument doc;
  doc.rank = m.rank();
  doc.gram = m.form();
  doc.kind = m.kind();
  doc.matrices = m.kind() == GroupKind::list ? m.elements() : m.generators();
  return doc;
}

Json echo(const InputDocument& doc) {
  Json j;
  j["rank"] = doc.rank;
  if (doc.gram) j["gram"] = to_json(*doc.gram);
  Json g;
  g["kind"] = to_string(doc.kind);
  Json mats = Json::array();
  for (const auto& m : doc.matrices) mats.push_back(to_json(m));
  g["matrices"] = std::move(mats);
  if (doc.bound) g["bound"] = *doc.bound;
  j["group"] = std::move(g);
  return j;
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row_copy(i)));
  return a;
}

Json to_json(const FinAbGroup& g) {
  Json j;
  j["invariant_factors"] = to_json(g.invariant_factors());
  j["free_rank"] = g.free_rank();
  if (g.is_finite()) j["order"] = to_json(g.order());
  j["structure"] = g.to_string();
  return j;
}

Json to_json(const CohomologyResult& r) {
  Json j;
  j["h0_rank"] = r.h0_rank;
  j["h1"] = to_json(r.h1);
  j["method"] = to_string(r.method);
  if (r.witness) {
    j["witness"]["cocycles"] = to_json(r.witness->cocycles);
    j["witness"]["coboundaries"] = to_json(r.witness->coboundaries);
  }
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["full_group"] = to_json(r.full);
  Json subs = Json::array();
  for (const auto& s : r.cyclic_subgroups) {
    Json e;
    e["generator_index"] = s.generator_index;
    e["order"] = s.order;
    e["h1"] = to_json(s.result.h1);
    subs.push_back(std::move(e));
  }
  j["cyclic_subgroups"] = std::move(subs);
  j["obstructed"] = r.obstructed;
  j["witnesses"] = r.witnesses;
  return j;
}

Json to_json(const RowReport& r) {
  Json j;
  j["case"] = r.case_id;
  j["p"] = r.row.p;
  j["genus"] = r.row.genus;
  j["k_squared"] = r.row.k_squared;
  j["model"] = r.row.model;
  j["element"] = r.row.element;
  j["expected_h1"] = to_json(r.expected);
  j["h1_pic"] = to_json(r.h1_pic);
  j["h1_q"] = to_json(r.h1_q);
  j["h0_rank"] = r.h0_rank;
  if (r.charpoly_order) j["charpoly_order"] = to_json(*r.charpoly_order);
  if (r.seed) j["seed"] = *r.seed;
  if (r.trial) j["trial"] = *r.trial;
  j["action"] = to_json(r.action);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["pass"] = r.pass;
  return j;
}

}  // namespace h1lat
