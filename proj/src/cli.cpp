#include "h1lat/cli.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"
#include "h1lat/report.hpp"

namespace h1lat {
namespace {

struct CommonFlags {
  bool json = false;
  bool timing = false;
  int threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string verdict(const FinAbGroup& h1) {
  return h1.is_trivial() ? "H1 = 0: no obstruction"
                         : "H1 = " + h1.to_string() + ": stable linearization obstructed";
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(std::ostream& out, Json report, const CommonFlags& flags, const Timer& timer) {
  if (flags.timing) report["timing_ms"] = timer.elapsed_ms();
  out << report.dump(2) << '\n';
}

void print_matrix(std::ostream& out, const std::string& label, const IntMatrix& m) {
  out << label << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) out << "  " << to_string(m.row(i)) << '\n';
}

int cmd_compute(const std::string& path, bool witness, bool cross_check,
                const CommonFlags& flags, std::ostream& out) {
  Timer timer;
  InputDocument doc = parse_input(read_file(path));
  GLattice m = to_glattice(doc);
  H1Options opts;
  opts.witness = witness;
  opts.cross_check = cross_check;
  CohomologyResult res = h1(m, opts);
  if (flags.json) {
    Json j;
    j["command"] = "compute";
    j["input"] = echo(doc);
    j["group_order"] = m.order();
    j["result"] = to_json(res);
    j["verdict"] = verdict(res.h1);
    emit(out, std::move(j), flags, timer);
  } else {
    out << "rank:        " << m.rank() << '\n'
        << "group:       " << to_string(m.kind()) << ", order " << m.order() << '\n'
        << "H0 rank:     " << res.h0_rank << '\n'
        << "H1:          " << res.h1.to_string() << '\n'
        << "method:      " << to_string(res.method) << '\n'
        << "verdict:     " << verdict(res.h1) << '\n';
    if (res.witness) {
      print_matrix(out, "cocycle basis:", res.witness->cocycles);
      print_matrix(out, "coboundary generators:", res.witness->coboundaries);
    }
  }
  return kExitOk;
}

int cmd_scan(const std::string& path, const CommonFlags& flags, std::ostream& out) {
  Timer timer;
  InputDocument doc = parse_input(read_file(path));
  GLattice m = to_glattice(doc);
  ObstructionReport rep = obstruction_scan(m);
  const std::string v = rep.obstructed ? "stable linearization obstructed"
                                       : "no obstruction from cyclic subgroups";
  if (flags.json) {
    Json j;
    j["command"] = "scan";
    j["input"] = echo(doc);
    j["group_order"] = m.order();
    j["result"] = to_json(rep);
    j["verdict"] = v;
    emit(out, std::move(j), flags, timer);
  } else {
    out << "full group (order " << m.order() << "): H1 = " << rep.full.h1.to_string() << '\n';
    for (const auto& s : rep.cyclic_subgroups)
      out << "  <g" << s.generator_index << "> order " << std::setw(3) << s.order
          << "  H1 = " << s.result.h1.to_string() << '\n';
    out << "verdict: " << v << '\n';
    for (const auto& w : rep.witnesses) out << "  witness: " << w << '\n';
  }
  return kExitOk;
}

int cmd_builtin(const std::string& which, int genus, const CommonFlags& flags,
                std::ostream& out) {
  Timer timer;
  GLattice m = GLattice::trivial(0);
  std::optional<GLattice> q;
  std::vector<std::string> labels;
  if (which == "geiser" || which == "bertini") {
    auto pic = del_pezzo_pic(which == "geiser" ? 2 : 1);
    m = which == "geiser" ? geiser_involution() : bertini_involution();
    q = sublattice_action(m, q_sublattice(pic).basis);
    labels = pic.labels;
  } else if (which == "dejonquieres") {
    auto cb = dejonquieres(genus);
    m = cb.lattice();
    q = cb.fiber_components();
    labels = cb.labels;
  } else {
    fail("builtin: unknown lattice '" + which + "' (expected geiser, bertini, dejonquieres)");
  }
  CohomologyResult res = h1(m);
  CohomologyResult res_q = h1(*q);
  if (flags.json) {
    Json j;
    j["command"] = "builtin";
    j["lattice"] = which;
    if (which == "dejonquieres") j["genus"] = genus;
    j["basis"] = labels;
    j["input"] = echo(to_document(m));
    j["result"] = to_json(res);
    j["h1_q"] = to_json(res_q.h1);
    j["verdict"] = verdict(res.h1);
    emit(out, std::move(j), flags, timer);
  } else {
    out << "lattice:     " << which;
    if (which == "dejonquieres") out << " (genus " << genus << ")";
    out << "\nbasis:       ";
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << labels[i];
    out << '\n';
    print_matrix(out, "action:", std::get<Cyclic>(m.group()).generator);
    out << "H0 rank:     " << res.h0_rank << '\n'
        << "H1(G, Pic):  " << res.h1.to_string() << '\n'
        << "H1(G, Q):    " << res_q.h1.to_string() << '\n'
        << "verdict:     " << verdict(res.h1) << '\n';
  }
  return kExitOk;
}

int cmd_search(int degree, unsigned long prime, std::uint64_t seed, std::size_t max_trials,
               const CommonFlags& flags, std::ostream& out) {
  Timer timer;
  WeylSearchConfig cfg;
  cfg.seed = seed;
  cfg.max_trials = max_trials;
  WeylSearchResult found = weyl_search(degree, prime, cfg);
  CohomologyResult res = h1(found.lattice);
  Integer predicted = charpoly_order(found.pic, found.lattice);
  if (flags.json) {
    Json j;
    j["command"] = "search";
    j["degree"] = degree;
    j["prime"] = prime;
    j["seed"] = seed;
    j["max_trials"] = max_trials;
    j["trial"] = found.trial;
    j["word_length"] = found.word_length;
    j["element"] = to_json(found.element);
    j["q_char_poly"] = found.q_char_poly.to_string();
    j["input"] = echo(to_document(found.lattice));
    j["result"] = to_json(res);
    j["charpoly_order"] = to_json(predicted);
    j["verdict"] = verdict(res.h1);
    emit(out, std::move(j), flags, timer);
  } else {
    out << "degree " << degree << ", p = " << prime << ", seed " << seed << ": found at trial "
        << found.trial << " (word length " << found.word_length << ")\n";
    print_matrix(out, "element:", found.element);
    out << "chi_Q:       " << found.q_char_poly.to_string() << '\n'
        << "H1(G, Pic):  " << res.h1.to_string() << '\n'
        << "|chi_Q(1)|/d = " << predicted.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_verify_table(const VerifyOptions& opts, const CommonFlags& flags, std::ostream& out) {
  Timer timer;
  auto rows = verify_table(opts);
  const bool all_pass =
      std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass; });
  if (flags.json) {
    Json j;
    j["command"] = "verify-table";
    j["seed"] = opts.search.seed;
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    j["rows"] = std::move(arr);
    j["pass"] = all_pass;
    emit(out, std::move(j), flags, timer);
  } else {
    out << std::left << std::setw(16) << "case" << std::setw(4) << "p" << std::setw(4) << "g"
        << std::setw(5) << "K^2" << std::setw(20) << "model" << std::setw(14) << "H1"
        << "status\n";
    for (const auto& r : rows) {
      out << std::setw(16) << r.case_id << std::setw(4) << r.row.p << std::setw(4)
          << r.row.genus << std::setw(5) << r.row.k_squared << std::setw(20) << r.row.model
          << std::setw(14) << r.h1_pic.to_string() << (r.pass ? "PASS" : "FAIL") << '\n';
      for (const auto& c : r.checks)
        if (!c.pass) out << "    failed: " << c.name << " (" << c.detail << ")\n";
    }
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group cohomology H^1(G, M) of finite group actions on integer lattices", "h1lat"};
  app.require_subcommand(1);
  CommonFlags flags;
  app.add_flag("--json", flags.json, "Print a machine-readable JSON report");
  app.add_flag("--timing", flags.timing, "Add wall-clock timing to JSON reports");
  app.add_option("--threads", flags.threads, "OpenMP thread count (0: runtime default)")
      ->check(CLI::NonNegativeNumber);

  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify-table", "Check every row of the classification table");
  verify->add_option("--genus-min", vopts.genus_min, "Smallest de Jonquieres genus")
      ->check(CLI::PositiveNumber);
  verify->add_option("--genus-max", vopts.genus_max, "Largest de Jonquieres genus")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.search.seed, "Seed for the Weyl searches");

  std::string input_path;
  bool witness = false;
  bool cross_check = false;
  auto* compute = app.add_subcommand("compute", "Compute H^0 and H^1 of a G-lattice");
  compute->add_option("--input", input_path, "JSON input document")->required();
  compute->add_flag("--witness", witness, "Include cocycle/coboundary certificates");
  compute->add_flag("--verify", cross_check, "Cross-check cyclic groups with the cocycle method");

  std::string which;
  int genus = 1;
  auto* builtin = app.add_subcommand("builtin", "Built-in Picard lattices with their involution");
  builtin->add_option("lattice", which, "geiser | bertini | dejonquieres")->required();
  builtin->add_option("--genus", genus, "Genus of the de Jonquieres involution")
      ->check(CLI::PositiveNumber);

  int degree = 0;
  unsigned long prime = 0;
  std::uint64_t seed = WeylSearchConfig{}.seed;
  std::size_t max_trials = WeylSearchConfig{}.max_trials;
  auto* search = app.add_subcommand("search", "Randomized Weyl group search for a prime-order element");
  search->add_option("--degree", degree, "Degree d of the del Pezzo surface")->required();
  search->add_option("--prime", prime, "Prime order p")->required();
  search->add_option("--seed", seed, "Random seed");
  search->add_option("--max-trials", max_trials, "Trial budget")->check(CLI::PositiveNumber);

  std::string scan_path;
  auto* scan = app.add_subcommand("scan", "H^1 over all cyclic subgroups (obstruction scan)");
  scan->add_option("--input", scan_path, "JSON input document")->required();

  for (auto* sub : {verify, compute, builtin, search, scan}) {
    sub->add_flag("--json", flags.json, "Print a machine-readable JSON report");
    sub->add_flag("--timing", flags.timing, "Add wall-clock timing to JSON reports");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitInvalidInput;
  }

  if (flags.threads > 0) omp_set_num_threads(flags.threads);
  try {
    if (*verify) return cmd_verify_table(vopts, flags, out);
    if (*compute) return cmd_compute(input_path, witness, cross_check, flags, out);
    if (*builtin) return cmd_builtin(which, genus, flags, out);
    if (*search) return cmd_search(degree, prime, seed, max_trials, flags, out);
    if (*scan) return cmd_scan(scan_path, flags, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::invalid_input: return kExitInvalidInput;
      case ErrorKind::search_exhausted: return kExitSearchExhausted;
      case ErrorKind::verification_failed: return kExitVerificationFailed;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitInvalidInput;
}

}  // namespace h1lat
