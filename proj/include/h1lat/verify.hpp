#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h1lat/fin_ab_group.hpp"
#include "h1lat/weyl_search.hpp"

namespace h1lat {

/// One row of the classification of prime-order elements fixing a curve of
/// positive genus.
struct TableRow {
  std::string id;
  unsigned long p = 0;
  int genus = 0;
  int k_squared = 0;
  std::string model;
  std::string element;
};

/// Rows: dejonquieres (genus-parametrized, K^2 = 6 - 2g), geiser, bertini,
/// dp3-p3, dp1-p3, dp1-p5.
const std::vector<TableRow>& classification_table();

enum class CaseKind { geiser, bertini, dejonquieres, dp3_p3, dp1_p3, dp1_p5 };

struct TableCase {
  CaseKind kind = CaseKind::geiser;
  int genus = 0;  // dejonquieres only
};

/// "geiser", "bertini", "dejonquieres:G", "dp3-p3", "dp1-p3", "dp1-p5".
TableCase parse_table_case(const std::string& id);
std::string case_id(const TableCase& c);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RowReport {
  std::string case_id;
  TableRow row;  // genus and K^2 filled in for the de Jonquieres case
  IntMatrix action;
  FinAbGroup expected;
  FinAbGroup h1_pic;
  FinAbGroup h1_q;
  std::size_t h0_rank = 0;
  std::optional<Integer> charpoly_order;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trial;
  std::vector<Check> checks;
  bool pass = false;
};

struct VerifyOptions {
  int genus_min = 1;
  int genus_max = 5;
  WeylSearchConfig search;
};

/// Builds the action for one table row and checks it against the expected
/// cohomology. Failed checks are reported, not thrown.
RowReport verify_row(const TableCase& c, const VerifyOptions& opts = {});

/// geiser, bertini, dp3-p3, dp1-p3, dp1-p5, then de Jonquieres for every
/// genus in [genus_min, genus_max].
std::vector<RowReport> verify_table(const VerifyOptions& opts = {});

}  // namespace h1lat
