#include "h1lat/verify.hpp"

#include "h1lat/cohomology.hpp"
#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"

namespace h1lat {

const std::vector<TableRow>& classification_table() {
  static const std::vector<TableRow> table{
      {"dejonquieres", 2, 0, 0, "conic bundle", "de Jonquieres involution"},
      {"geiser", 2, 3, 2, "del Pezzo surface", "Geiser involution"},
      {"bertini", 2, 4, 1, "del Pezzo surface", "Bertini involution"},
      {"dp3-p3", 3, 1, 3, "del Pezzo surface", "order-3 element, de Fernex A1"},
      {"dp1-p3", 3, 2, 1, "del Pezzo surface", "order-3 element, de Fernex A2"},
      {"dp1-p5", 5, 1, 1, "del Pezzo surface", "order-5 element, de Fernex A3"},
  };
  return table;
}

namespace {

const TableRow& row_for(CaseKind kind) {
  return classification_table().at(static_cast<std::size_t>([&] {
    switch (kind) {
      case CaseKind::dejonquieres: return 0;
      case CaseKind::geiser: return 1;
      case CaseKind::bertini: return 2;
      case CaseKind::dp3_p3: return 3;
      case CaseKind::dp1_p3: return 4;
      case CaseKind::dp1_p5: return 5;
    }
    return 0;
  }()));
}

void check(RowReport& r, std::string name, bool pass, std::string detail) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string order_str(const FinAbGroup& g) {
  return g.is_finite() ? g.order().get_str() : "infinite";
}

void check_methods_agree(RowReport& r, const GLattice& m) {
  const auto other = h1_cocycle(m);
  check(r, "cyclic and cocycle methods agree", other.h1 == r.h1_pic,
        "cocycle method: " + other.h1.to_string());
}

void verify_del_pezzo(RowReport& r, const PicardLattice& pic, const GLattice& m) {
  const auto& row = r.row;
  const unsigned long p = row.p;
  const int d = pic.degree;
  const IntMatrix& delta = r.action;

  bool fixes_k = delta.apply(pic.canonical) == pic.canonical;
  bool isometry = delta.transpose() * pic.gram * delta == pic.gram;
  check(r, "isometry of order p fixing K", fixes_k && isometry && m.order() == p,
        "order " + std::to_string(m.order()) + ", fixes K: " + (fixes_k ? "yes" : "no") +
            ", preserves form: " + (isometry ? "yes" : "no"));

  auto pic_result = h1_cyclic(m);
  r.h1_pic = pic_result.h1;
  r.h0_rank = pic_result.h0_rank;
  check(r, "H1(G, Pic) = (Z/p)^(2g)", r.h1_pic == r.expected,
        "computed " + r.h1_pic.to_string() + ", expected " + r.expected.to_string());
  check_methods_agree(r, m);
  check(r, "rank Pic^G = 1", r.h0_rank == 1, "rank " + std::to_string(r.h0_rank));

  auto q = q_sublattice(pic);
  auto mq = sublattice_action(m, q.basis);
  r.h1_q = h1(mq).h1;
  const bool orders_ok = r.h1_q.is_finite() && r.h1_pic.is_finite() &&
                         r.h1_q.order() == d * r.h1_pic.order();
  check(r, "|H1(G, Q)| = d * |H1(G, Pic)|", orders_ok,
        "|H1(Q)| = " + order_str(r.h1_q) + ", d * |H1(Pic)| = " + std::to_string(d) + " * " +
            order_str(r.h1_pic));

  const std::size_t s = cyclotomic_multiplicity(d, p);
  const IntPolynomial chi = char_poly(std::get<Cyclic>(mq.group()).generator);
  const IntPolynomial target = IntPolynomial::cyclotomic_prime(p).pow(s);
  check(r, "chi_Q = Phi_p^s", chi == target,
        "chi_Q = " + chi.to_string() + ", s = " + std::to_string(s));

  try {
    r.charpoly_order = charpoly_order(pic, m);
    check(r, "|chi_Q(1)| / d = |H1(G, Pic)|", *r.charpoly_order == r.h1_pic.torsion_order(),
          "|chi_Q(1)| / d = " + r.charpoly_order->get_str() + ", |H1| = " +
              r.h1_pic.torsion_order().get_str());
  } catch (const Error& e) {
    check(r, "|chi_Q(1)| / d = |H1(G, Pic)|", false, e.what());
  }

  const std::size_t j = static_cast<unsigned long>(d) == p ? 1 : 0;
  const std::size_t predicted = s - j;
  bool elementary = true;
  for (const auto& f : r.h1_pic.invariant_factors()) elementary = elementary && f == p;
  check(r, "factor count = (9 - d)/(p - 1) - j",
        elementary && r.h1_pic.invariant_factors().size() == predicted,
        "predicted (Z/" + std::to_string(p) + ")^" + std::to_string(predicted) + " (s = " +
            std::to_string(s) + ", j = " + std::to_string(j) + "), computed " +
            r.h1_pic.to_string());
}

void verify_conic_bundle(RowReport& r, const ConicBundlePic& cb) {
  const int g = cb.genus;
  const bool involution = (cb.delta * cb.delta).is_identity();
  const bool isometry = cb.delta.transpose() * cb.gram * cb.delta == cb.gram;
  const Integer det = cb.gram.det();
  check(r, "involution preserving a unimodular form", involution && isometry && abs(det) == 1,
        std::string("delta^2 = I: ") + (involution ? "yes" : "no") +
            ", preserves form: " + (isometry ? "yes" : "no") + ", det gram = " + det.get_str());

  const GLattice m = cb.lattice();
  auto res = h1_cyclic(m);
  r.h1_pic = res.h1;
  r.h0_rank = res.h0_rank;
  check(r, "H1(G, Pic) = (Z/2)^(2g)", r.h1_pic == r.expected,
        "computed " + r.h1_pic.to_string() + ", expected " + r.expected.to_string());
  check_methods_agree(r, m);

  r.h1_q = h1(cb.fiber_components()).h1;
  const FinAbGroup expected_q = FinAbGroup::elementary(2, static_cast<std::size_t>(2 * g + 1));
  check(r, "H1(G, Q) = (Z/2)^(2g+1)", r.h1_q == expected_q,
        "computed " + r.h1_q.to_string() + ", expected " + expected_q.to_string());

  check(r, "rank Pic^G = 2", r.h0_rank == 2, "rank " + std::to_string(r.h0_rank));

  // x.F over Pic^G is generated by the gcd of the values on a basis.
  const IntMatrix fixed = invariants_h0(m);
  const IntVector f = cb.fiber();
  Integer gen = 0;
  for (std::size_t i = 0; i < fixed.rows(); ++i)
    gen = gcd(gen, bilinear(cb.gram, fixed.row(i), f));
  check(r, "{x.F : x in Pic^G} = 2Z", gen == 2, "generated by " + gen.get_str());

  const auto alt = dejonquieres(g, -2);
  const FinAbGroup alt_h1 = h1(alt.lattice()).h1;
  check(r, "completion with S^2 = -2 gives the same H1", alt_h1 == r.h1_pic,
        "S^2 = -2: " + alt_h1.to_string());
}

}  // namespace

TableCase parse_table_case(const std::string& id) {
  if (id == "geiser") return {CaseKind::geiser, 0};
  if (id == "bertini") return {CaseKind::bertini, 0};
  if (id == "dp3-p3") return {CaseKind::dp3_p3, 0};
  if (id == "dp1-p3") return {CaseKind::dp1_p3, 0};
  if (id == "dp1-p5") return {CaseKind::dp1_p5, 0};
  const std::string prefix = "dejonquieres:";
  if (id.starts_with(prefix)) {
    try {
      std::size_t used = 0;
      const int g = std::stoi(id.substr(prefix.size()), &used);
      if (used == id.size() - prefix.size() && g >= 1) return {CaseKind::dejonquieres, g};
    } catch (const std::exception&) {
    }
  }
  fail("unknown table case '" + id +
       "' (expected geiser, bertini, dejonquieres:G, dp3-p3, dp1-p3, dp1-p5)");
}

std::string case_id(const TableCase& c) {
  if (c.kind == CaseKind::dejonquieres) return "dejonquieres:" + std::to_string(c.genus);
  return row_for(c.kind).id;
}

RowReport verify_row(const TableCase& c, const VerifyOptions& opts) {
  RowReport r;
  r.case_id = case_id(c);
  r.row = row_for(c.kind);
  if (c.kind == CaseKind::dejonquieres) {
    if (c.genus < 1) fail("dejonquieres: genus must be at least 1");
    r.row.genus = c.genus;
    r.row.k_squared = 6 - 2 * c.genus;
  }
  r.expected = FinAbGroup::elementary(r.row.p, static_cast<std::size_t>(2 * r.row.genus));

  switch (c.kind) {
    case CaseKind::dejonquieres: {
      auto cb = dejonquieres(c.genus);
      r.action = cb.delta;
      verify_conic_bundle(r, cb);
      break;
    }
    case CaseKind::geiser:
    case CaseKind::bertini: {
      auto pic = del_pezzo_pic(r.row.k_squared);
      auto m = c.kind == CaseKind::geiser ? geiser_involution() : bertini_involution();
      r.action = std::get<Cyclic>(m.group()).generator;
      verify_del_pezzo(r, pic, m);
      break;
    }
    case CaseKind::dp3_p3:
    case CaseKind::dp1_p3:
    case CaseKind::dp1_p5: {
      auto found = weyl_search(r.row.k_squared, r.row.p, opts.search);
      r.action = found.element;
      r.seed = opts.search.seed;
      r.trial = found.trial;
      verify_del_pezzo(r, found.pic, found.lattice);
      break;
    }
  }
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& k) { return k.pass; });
  return r;
}

std::vector<RowReport> verify_table(const VerifyOptions& opts) {
  std::vector<RowReport> out;
  for (auto kind : {CaseKind::geiser, CaseKind::bertini, CaseKind::dp3_p3, CaseKind::dp1_p3,
                    CaseKind::dp1_p5})
    out.push_back(verify_row({kind, 0}, opts));
  for (int g = opts.genus_min; g <= opts.genus_max; ++g)
    out.push_back(verify_row({CaseKind::dejonquieres, g}, opts));
  return out;
}

}  // namespace h1lat
