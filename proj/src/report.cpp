#include "distlab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace distlab {

using nlohmann::json;

namespace {

std::string b(bool v) { return v ? "true" : "false"; }
std::string s(std::int64_t v) { return std::to_string(v); }

std::string frac(std::int64_t num, std::int64_t den) { return den == 1 ? s(num) : s(num) + "/" + s(den); }

std::string csv_cell(const std::string& c) {
  if (c.find_first_of(",\"\n") == std::string::npos) return c;
  std::string out = "\"";
  for (char ch : c) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json r = json::array();
    for (int j = 0; j < m.n; ++j) r.push_back(m.at(i, j).log);
    rows.push_back(r);
  }
  return rows;
}

json tame_char(const TameCharacter& c) { return json{{"u", c.u}, {"r", c.r}}; }

}  // namespace

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  if (f == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + f + "'");
}

std::string render(const ReportDoc& doc, Format f) {
  std::ostringstream os;
  if (f == Format::Json) {
    json j{{"command", doc.command},
           {"ok", doc.ok},
           {"schema_version", kSchemaVersion},
           {"params", doc.params},
           {"result", doc.result}};
    os << j.dump(1) << "\n";
  } else if (f == Format::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
      os << "\n";
    };
    line(doc.csv_header);
    for (const auto& r : doc.csv_rows) line(r);
  } else {
    os << doc.command << ": " << (doc.ok ? "ok" : "FAILED") << "\n";
    for (const auto& l : doc.summary) os << "  " << l << "\n";
  }
  return os.str();
}

json values_json(const ClassFunction& v) {
  json vals = json::array();
  for (const auto& x : v) {
    json terms = json::array();
    for (const auto& t : x.terms()) terms.push_back({t.exp, t.coeff});
    vals.push_back({x.order(), terms});
  }
  return vals;
}

ReportDoc tower_report(const FieldTower& t) {
  ReportDoc d;
  d.command = "tower";
  d.params = {{"p", t.p()}, {"f", t.f()}};
  std::int64_t in_base = 0;
  d.csv_header = {"log", "code", "in_base", "norm_log", "trace_code", "order"};
  for (int k = 0; k < t.units(); ++k) {
    const auto x = Elem::from_log(k);
    in_base += t.in_base(x);
    d.csv_rows.push_back({s(k), s(t.to_code(x)), b(t.in_base(x)), s(t.norm(x).log), s(t.to_code(t.trace(x))),
                          s(t.order(x))});
  }
  bool norm_onto = true;
  for (int k = 0; k < t.units(); ++k) norm_onto = norm_onto && t.in_base(t.norm(Elem::from_log(k)));
  d.ok = in_base == t.q() - 1 && norm_onto && t.order(t.gen()) == t.units();
  d.result = {{"q", t.q()},
              {"big_q", t.big_q()},
              {"units", t.units()},
              {"modulus", t.modulus()},
              {"base_units", in_base},
              {"base_gen_log", t.base_gen().log},
              {"norm_one_order", t.q() + 1},
              {"norm_lands_in_base", norm_onto},
              {"description", t.describe()}};
  d.summary = {t.describe(), "generator order " + s(t.order(t.gen())) + ", base units " + s(in_base),
               "norm lands in base: " + b(norm_onto)};
  return d;
}

ReportDoc chartab_report(const CharacterTable& t, const TableValidation& v) {
  ReportDoc d;
  d.command = "chartab";
  const auto& g = t.group();
  const auto& cc = t.classes();
  d.params = {{"group", g.name()}, {"n", g.n()}, {"kind", kind_name(g.kind())}};
  json classes = json::array();
  for (int c = 0; c < cc.count(); ++c) classes.push_back({{"order", cc.orders[c]}, {"size", cc.sizes[c]}});
  json chars = json::array();
  d.csv_header = {"id", "degree", "self_dual", "galois_fixed"};
  const bool ext = !cc.galois_class.empty();
  std::int64_t sumsq = 0;
  for (int i = 0; i < t.count(); ++i) {
    const auto& chi = t[i];
    sumsq += chi.degree * chi.degree;
    const bool self_dual = index_of(t, dual(t, chi)) == i;
    const bool gfix = ext ? index_of(t, galois(t, chi)) == i : true;
    chars.push_back({{"id", i}, {"degree", chi.degree}, {"self_dual", self_dual}, {"galois_fixed", gfix},
                     {"values", values_json(chi.values)}});
    d.csv_rows.push_back({s(i), s(chi.degree), b(self_dual), b(gfix)});
  }
  d.ok = v.ok();
  d.result = {{"group", g.name()},
              {"order", g.order()},
              {"class_count", cc.count()},
              {"exponent", cc.exponent},
              {"classes", classes},
              {"characters", chars},
              {"sum_of_squares", sumsq},
              {"validation",
               {{"ok", v.ok()},
                {"count_ok", v.count_ok},
                {"degrees_ok", v.degrees_ok},
                {"values_ok", v.values_ok},
                {"galois_closed", v.galois_closed},
                {"row_orthogonal", v.row_orthogonal},
                {"column_orthogonal", v.column_orthogonal},
                {"elementwise_run", v.elementwise_run},
                {"elementwise_ok", v.elementwise_ok},
                {"exact_pairs_run", v.exact_pairs_run},
                {"exact_pairs_ok", v.exact_pairs_ok},
                {"verify_prime", v.verify_prime},
                {"failure", v.failure}}}};
  d.summary = {g.name() + ", order " + s(g.order()) + ", " + s(cc.count()) + " classes",
               "sum of squared degrees " + s(sumsq),
               "validation: " + (v.ok() ? std::string("ok") : v.failure)};
  return d;
}

ReportDoc double_coset_report(const DoubleCosetReport& r) {
  ReportDoc d;
  d.command = "double-cosets";
  d.params = {{"g", r.g_name}, {"h", r.h_name}};
  json cosets = json::array();
  d.csv_header = {"index", "size", "theta_stable"};
  for (std::size_t i = 0; i < r.coset_reps.size(); ++i) {
    cosets.push_back({{"rep", mat_json(r.coset_reps[i])}, {"size", r.coset_sizes[i]}, {"theta_stable", bool(r.theta_stable[i])}});
    d.csv_rows.push_back({s(static_cast<std::int64_t>(i)), s(r.coset_sizes[i]), b(r.theta_stable[i])});
  }
  const bool s_ok = r.s_set_size * r.h_order == r.g_order && r.s_set_oracle == r.s_set_size;
  d.ok = r.all_theta_stable() && r.sizes_ok() && r.galois_pair && r.bijection_ok && r.h_conjugacy_ok && s_ok;
  d.result = {{"g", r.g_name},
              {"h", r.h_name},
              {"route", r.route},
              {"g_order", r.g_order},
              {"h_order", r.h_order},
              {"coset_count", r.coset_reps.size()},
              {"cosets", cosets},
              {"all_theta_stable", r.all_theta_stable()},
              {"sizes_ok", r.sizes_ok()},
              {"galois_pair", r.galois_pair},
              {"s_set_size", r.s_set_size},
              {"s_set_oracle", r.s_set_oracle},
              {"s_set_is_index", s_ok},
              {"h_orbits_on_s", r.h_orbits_on_s},
              {"bijection_ok", r.bijection_ok},
              {"h_conjugacy_ok", r.h_conjugacy_ok}};
  d.summary = {r.h_name + "\\" + r.g_name + "/" + r.h_name + ": " + s(r.coset_reps.size()) + " double cosets (" +
                   r.route + ")",
               "all theta-stable: " + b(r.all_theta_stable()),
               "|S| = " + s(r.s_set_size) + " (oracle " + s(r.s_set_oracle) + "), |G|/|H| = " +
                   s(r.h_order ? r.g_order / r.h_order : 0),
               "H-orbits on S = double cosets: " + b(r.bijection_ok),
               "G-conjugate elements of S are H-conjugate: " + b(r.h_conjugacy_ok)};
  return d;
}

ReportDoc pair_scan_report(const PairScanReport& r) {
  ReportDoc d;
  d.command = "pair-scan";
  d.params = {{"pair", r.pair}, {"n", r.n}, {"p", r.p}, {"f", r.f}};
  json rows = json::array();
  d.csv_header = {"id", "degree", "dim", "dim_oracle", "galois_invariant", "sigma_dual", "criterion"};
  for (const auto& row : r.rows) {
    rows.push_back({{"id", row.id},
                    {"degree", row.degree},
                    {"dim", row.dim},
                    {"dim_oracle", row.dim_oracle},
                    {"galois_invariant", row.galois_invariant},
                    {"sigma_dual", row.sigma_dual},
                    {"criterion", row.criterion}});
    d.csv_rows.push_back({s(row.id), s(row.degree), s(row.dim), s(row.dim_oracle), b(row.galois_invariant),
                          b(row.sigma_dual), b(row.criterion)});
  }
  json tables = json::array();
  for (const auto& [name, ok] : r.tables) tables.push_back({{"name", name}, {"ok", ok}});
  d.ok = r.ok();
  d.result = {{"g", r.g_name},
              {"h", r.h_name},
              {"criterion", r.criterion},
              {"rows", rows},
              {"gelfand_ok", r.gelfand_ok},
              {"oracle_ok", r.oracle_ok},
              {"criterion_ok", r.criterion_ok},
              {"tadic_ok", r.tadic_ok ? json(*r.tadic_ok) : json(nullptr)},
              {"max_dim", r.max_dim},
              {"distinguished", r.distinguished},
              {"tables", tables}};
  d.summary = {"(" + r.g_name + ", " + r.h_name + "): " + s(static_cast<std::int64_t>(r.rows.size())) + " irreducibles",
               "max dim Hom = " + s(r.max_dim) + ", distinguished = " + s(r.distinguished),
               "gelfand_ok " + b(r.gelfand_ok) + ", oracle_ok " + b(r.oracle_ok) + ", " + r.criterion + " " +
                   b(r.criterion_ok)};
  if (r.tadic_ok) d.summary.push_back("restriction multiplicity free: " + b(*r.tadic_ok));
  d.summary.push_back("tables valid: " + b(r.tables_ok()));
  return d;
}

namespace {

json packet_json(const PacketReport& r) {
  json sl = json::array();
  for (const auto& c : r.sl) {
    sl.push_back({{"sl_id", c.sl_id},
                  {"degree", c.degree},
                  {"hom_dim", c.hom_dim},
                  {"hom_dim_oracle", c.hom_dim_oracle},
                  {"generic_a", c.generic_a},
                  {"whittaker_le_one", c.whittaker_le_one},
                  {"witness", c.witness},
                  {"in_plus", c.in_plus},
                  {"plus_parents", c.plus_parents},
                  {"pairing", c.pairing},
                  {"pairing_well_defined", c.pairing_well_defined},
                  {"pairing_sum", c.pairing_sum},
                  {"rhs", frac(c.rhs_num, c.rhs_den)},
                  {"indicator_ok", c.indicator_ok},
                  {"formula_equal", c.formula_equal}});
  }
  json plus = json::array();
  for (const auto& c : r.plus) {
    plus.push_back({{"plus_id", c.plus_id},
                    {"degree", c.degree},
                    {"whittaker_dim", c.whittaker_dim},
                    {"sl_ids", c.sl_ids},
                    {"equidistributed", c.equidistributed}});
  }
  return {{"g", r.g_name},
          {"anchor", r.anchor},
          {"degree", r.degree},
          {"generic", r.generic},
          {"X", r.X},
          {"x_dims", r.x_dims},
          {"Y", r.Y},
          {"Yprime", r.Yprime},
          {"Z", r.Z},
          {"q", frac(r.q_num, r.q_den)},
          {"q_integral", r.q_integral()},
          {"x_orbits", r.x_orbits},
          {"free_action_ok", r.free_action_ok},
          {"sl", sl},
          {"plus", plus},
          {"plus_generic", r.plus_generic},
          {"tadic_ok", r.tadic_ok},
          {"packet_size_ok", r.packet_size_ok},
          {"degree_ok", r.degree_ok},
          {"sl_f_dim", r.sl_f_dim},
          {"clifford_ok", r.clifford_ok},
          {"additivity_ok", r.additivity_ok},
          {"equidistributed", r.equidistributed},
          {"subsets_ok", r.subsets_ok},
          {"z_power_ok", r.z_power_ok},
          {"formula_applicable", r.formula_applicable},
          {"formula_ok", r.formula_ok},
          {"strong_classes", r.strong_classes},
          {"strong_count_ok", r.strong_count_ok},
          {"oracle_ok", r.oracle_ok},
          {"discrepancies", r.discrepancies},
          {"ok", r.ok()}};
}

void packet_rows(ReportDoc& d, const PacketReport& r) {
  for (const auto& c : r.sl) {
    d.csv_rows.push_back({s(r.anchor), s(c.sl_id), s(c.degree), s(c.hom_dim), b(c.in_plus), s(c.pairing_sum),
                          frac(c.rhs_num, c.rhs_den), b(c.formula_equal)});
  }
}

const std::vector<std::string> kPacketCsv = {"anchor", "sl_id", "degree", "hom_dim",
                                             "in_plus", "pairing_sum", "rhs", "formula_equal"};

}  // namespace

ReportDoc packet_report(const PacketReport& r) {
  ReportDoc d;
  d.command = "packet";
  d.params = {{"rep", r.anchor}};
  d.result = packet_json(r);
  d.ok = r.ok();
  d.csv_header = kPacketCsv;
  packet_rows(d, r);
  d.summary = {"anchor " + s(r.anchor) + " of " + r.g_name + ", degree " + s(r.degree) +
                   (r.generic ? ", generic" : ", not generic"),
               "|X| = " + s(r.X.size()) + ", |Y| = " + s(r.Y.size()) + ", |Y'| = " + s(r.Yprime.size()) +
                   ", |Z| = " + s(r.Z.size()) + ", q = " + frac(r.q_num, r.q_den),
               "packet size " + s(r.sl.size()) + ", dim Hom_SL(F) = " + s(r.sl_f_dim)};
  for (const auto& c : r.sl) {
    d.summary.push_back("  SL constituent " + s(c.sl_id) + ": dim " + s(c.hom_dim) + ", in plus " + b(c.in_plus) +
                        ", pairing sum " + s(c.pairing_sum) + ", rhs " + frac(c.rhs_num, c.rhs_den));
  }
  for (const auto& x : r.discrepancies) d.summary.push_back("discrepancy: " + x);
  return d;
}

ReportDoc packet_suite_report(const PacketSuite& su) {
  ReportDoc d;
  d.command = "packet";
  d.params = {{"rep", nullptr}};
  json packets = json::array();
  d.csv_header = kPacketCsv;
  int failing = 0;
  for (const auto& r : su.packets) {
    packets.push_back(packet_json(r));
    packet_rows(d, r);
    failing += !r.ok();
  }
  d.ok = su.ok();
  d.result = {{"g", su.g_name}, {"packets", packets}, {"discrepancies", su.discrepancies}, {"failing", failing}};
  d.summary = {s(su.packets.size()) + " packets of " + su.g_name, "failing packets " + s(failing),
               "discrepancies " + s(su.discrepancies)};
  return d;
}

ReportDoc formula_report(const PacketSuite& su) {
  ReportDoc d;
  d.command = "theorem43";
  json rows = json::array();
  d.csv_header = {"anchor", "sl_id", "generic", "applicable", "lhs", "rhs", "equal"};
  int applicable = 0, equal = 0, compared = 0;
  json dumps = json::array();
  for (const auto& r : su.packets) {
    applicable += r.formula_applicable;
    for (const auto& c : r.sl) {
      rows.push_back({{"anchor", r.anchor},
                      {"sl_id", c.sl_id},
                      {"applicable", r.formula_applicable},
                      {"lhs", c.hom_dim},
                      {"rhs", frac(c.rhs_num, c.rhs_den)},
                      {"equal", c.formula_equal}});
      d.csv_rows.push_back({s(r.anchor), s(c.sl_id), b(r.generic), b(r.formula_applicable), s(c.hom_dim),
                            frac(c.rhs_num, c.rhs_den), b(c.formula_equal)});
      if (r.formula_applicable) {
        ++compared;
        equal += c.formula_equal;
      }
    }
    if (!r.discrepancies.empty()) dumps.push_back(packet_json(r));
  }
  d.ok = su.ok();
  d.result = {{"g", su.g_name},
              {"packets", su.packets.size()},
              {"applicable_packets", applicable},
              {"constituents_compared", compared},
              {"constituents_equal", equal},
              {"rows", rows},
              {"discrepancies", su.discrepancies},
              {"discrepancy_dump", dumps}};
  d.summary = {su.g_name + ": " + s(applicable) + " generic packets compared",
               "LHS = RHS for " + s(equal) + " of " + s(compared) + " constituents",
               "discrepancies " + s(su.discrepancies)};
  return d;
}

ReportDoc unitary_report(const UnitaryReport& r) {
  ReportDoc d;
  d.command = "unitary";
  json rows = json::array();
  d.csv_header = {"id", "applicable", "mu", "u_dim", "u_dim_oracle", "mu_dim", "equivalent", "dims_equal"};
  for (const auto& row : r.rows) {
    rows.push_back({{"id", row.id},
                    {"applicable", row.applicable},
                    {"mu", row.mu},
                    {"u_dim", row.u_dim},
                    {"u_dim_oracle", row.u_dim_oracle},
                    {"mu_dim", row.mu_dim},
                    {"equivalent", row.equivalent},
                    {"dims_equal", row.dims_equal}});
    d.csv_rows.push_back({s(row.id), b(row.applicable), s(row.mu), s(row.u_dim), s(row.u_dim_oracle), s(row.mu_dim),
                          b(row.equivalent), b(row.dims_equal)});
  }
  d.ok = r.ok();
  d.result = {{"g", r.g_name},
              {"u", r.u_name},
              {"h", r.h_name},
              {"rows", rows},
              {"applicable", r.applicable},
              {"equivalence_ok", r.equivalence_ok},
              {"dims_equal", r.dims_equal},
              {"oracle_ok", r.oracle_ok},
              {"cosets_conjugate", r.cosets_conjugate}};
  d.summary = {r.g_name + " with " + r.u_name + " and " + r.h_name + ": " + s(r.applicable) + " applicable",
               "U-distinguished iff mu-distinguished: " + b(r.equivalence_ok),
               "dimensions equal: " + b(r.dims_equal), "E*GL_2(F) conjugate to E*U(2): " + b(r.cosets_conjugate)};
  return d;
}

ReportDoc even_example_report(const EvenExampleReport& r) {
  ReportDoc d;
  d.command = "padic-example";
  d.params = {{"q", r.q}, {"M", r.modulus}, {"shape", r.shape}};
  d.ok = r.ok();
  d.result = {{"applicable", r.applicable},
              {"reason", r.reason},
              {"feasible_q", r.feasible_q},
              {"eta", r.eta ? tame_char(*r.eta) : json(nullptr)},
              {"eta_L", r.eta_L ? tame_char(*r.eta_L) : json(nullptr)},
              {"eta_order", r.eta_order},
              {"eta8_nontrivial", r.eta8_nontrivial},
              {"eta_trivial_on_F", r.eta_trivial_on_F},
              {"pi0_regular", r.pi0_regular},
              {"supercuspidal", r.supercuspidal},
              {"equivariant", r.equivariant},
              {"Z_size", r.z_size},
              {"Y_size", r.y_size},
              {"Yprime_size", r.yprime_size},
              {"Y_eq_Yprime", r.y_eq_yprime},
              {"Z_is_1_omega", r.z_is_1_omega},
              {"Z", r.z_desc},
              {"bound", frac(r.bound_num, r.bound_den)},
              {"q_point", r.q_point},
              {"q_point_conjecture_based", r.q_point_conjecture_based},
              {"stable_under_doubling", r.stable_under_doubling}};
  d.csv_header = {"check", "value"};
  auto add = [&](const std::string& k, const std::string& v) { d.csv_rows.push_back({k, v}); };
  add("applicable", b(r.applicable));
  add("eta_order", s(r.eta_order));
  add("eta8_nontrivial", b(r.eta8_nontrivial));
  add("supercuspidal", b(r.supercuspidal));
  add("Z_size", s(r.z_size));
  add("Y_size", s(r.y_size));
  add("Yprime_size", s(r.yprime_size));
  add("Y_eq_Yprime", b(r.y_eq_yprime));
  add("bound", frac(r.bound_num, r.bound_den));
  add("q_point", s(r.q_point));
  if (!r.applicable) {
    std::string qs;
    for (auto q : r.feasible_q) qs += (qs.empty() ? "" : " ") + s(q);
    d.summary = {"not applicable at q = " + s(r.q) + " (" + r.shape + "): " + r.reason,
                 "q with a suitable eta: " + (qs.empty() ? std::string("none") : qs)};
    return d;
  }
  d.summary = {"q = " + s(r.q) + ", M = " + s(r.modulus) + ", " + r.shape,
               "eta of order " + s(r.eta_order) + ", eta^8 != 1: " + b(r.eta8_nontrivial) +
                   ", supercuspidal: " + b(r.supercuspidal),
               "|Z| = " + s(r.z_size) + ", |Y| = " + s(r.y_size) + ", |Y'| = " + s(r.yprime_size) +
                   ", Y = Y': " + b(r.y_eq_yprime),
               "q(pi) <= " + frac(r.bound_num, r.bound_den) + "; point value " + s(r.q_point) +
                   " (conjecture-based)"};
  return d;
}

ReportDoc injection_report(const InjectionReport& r) {
  ReportDoc d;
  d.command = "thm11";
  d.params = {{"q", r.q}, {"n", r.n}, {"count", r.count}, {"seed", r.seed}, {"M", r.modulus}};
  json cases = json::array();
  d.csv_header = {"index", "kind", "u", "r", "regular", "Z", "Y", "Yprime", "Xhat",
                  "into_Yprime", "injective", "Y_cap_Yprime_trivial", "verdict_max", "ok"};
  int bad = 0;
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    const auto& c = r.cases[i];
    bad += !c.ok;
    cases.push_back({{"kind", c.kind},
                     {"eta", tame_char(c.eta)},
                     {"regular", c.regular},
                     {"Z_size", c.z},
                     {"Y_size", c.y},
                     {"Yprime_size", c.yprime},
                     {"Xhat_size", c.xhat},
                     {"Xhat_bound_hit", c.xhat_bound_hit},
                     {"into_Yprime", c.into_yprime},
                     {"injective", c.injective},
                     {"Y_cap_Yprime_trivial", c.y_cap_trivial},
                     {"bound_x", frac(c.bound_x_num, c.bound_x_den)},
                     {"bound_y", frac(c.bound_y_num, c.bound_y_den)},
                     {"verdict_max", c.verdict_max},
                     {"ok", c.ok}});
    d.csv_rows.push_back({s(static_cast<std::int64_t>(i)), c.kind, s(c.eta.u), s(c.eta.r), b(c.regular), s(c.z),
                          s(c.y), s(c.yprime), s(c.xhat), b(c.into_yprime), b(c.injective), b(c.y_cap_trivial),
                          s(c.verdict_max), b(c.ok)});
  }
  d.ok = r.ok();
  d.result = {{"cases", cases}, {"failing", bad}, {"nonvacuous", r.nonvacuous}, {"nontrivial_Z", r.nontrivial_z}};
  d.summary = {s(r.cases.size()) + " regular inputs, n = " + s(r.n) + ", q = " + s(r.q) + ", M = " + s(r.modulus),
               "X-hat nonempty in " + s(r.nonvacuous) + ", |Z| > 1 in " + s(r.nontrivial_z),
               "failing " + s(bad)};
  return d;
}

}  // namespace distlab
