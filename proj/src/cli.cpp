#include "distlab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "distlab/modular.hpp"
#include "distlab/report.hpp"
#include "distlab/table_cache.hpp"

namespace distlab {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  int n = 2, p = 3, f = 1;
  std::string pair, group = "GL", side = "ext", route = "auto", format = "json", out, verify_file;
  std::string cache_dir = default_cache_dir();
  int threads = 1;
  std::int64_t ceiling = kDefaultGroupCeiling;
  std::uint64_t seed = 1;
  std::optional<int> rep;
  std::int64_t padic_q = 11, thm_q = 5;
  int thm_n = 3;
  std::optional<std::int64_t> modulus;
  std::string shape = "ramified-E", eta;
  std::int64_t target_order = 12;
  int count = 100;
};

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "output file (default stdout)");
  sub->add_option("--cache-dir", c.cache_dir, "character table cache (env DISTLAB_CACHE_DIR)");
  sub->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 64));
  sub->add_option("--ceiling", c.ceiling, "largest group order to enumerate")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "seed for randomized steps");
}

void add_field(CLI::App* sub, RunConfig& c) {
  sub->add_option("--p", c.p, "characteristic");
  sub->add_option("--f", c.f, "q = p^f")->check(CLI::Range(1, 8));
}

void add_n(CLI::App* sub, RunConfig& c) { sub->add_option("--n", c.n, "matrix size")->check(CLI::Range(1, kMaxDim)); }

TowerPtr make_tower(const RunConfig& c) {
  if (c.p < 2 || !modp::is_prime(static_cast<std::uint64_t>(c.p))) throw UsageError("--p must be prime");
  return FieldTower::build(c.p, c.f);
}

void check_order(const FieldTower& t, const RunConfig& c, GroupKind kind, int n, Side side) {
  const auto o = group_order_formula(t, kind, n, side);
  if (o > c.ceiling)
    throw ResourceError("ceiling exceeded: |" + kind_name(kind) + "_" + std::to_string(n) + "| = " +
                        std::to_string(o) + " > " + std::to_string(c.ceiling));
}

Lab make_lab(const RunConfig& c, TowerPtr t) {
  return Lab(std::move(t), LabOptions{c.cache_dir, c.threads, c.ceiling, c.seed});
}

void flush_notes(const Lab& lab, std::ostream& err) {
  for (const auto& n : lab.notes()) err << "warning: " << n << "\n";
}

ReportDoc add_params(ReportDoc d, const RunConfig& c) {
  d.params["p"] = c.p;
  d.params["f"] = c.f;
  d.params["n"] = c.n;
  return d;
}

ReportDoc cmd_chartab(const RunConfig& c, std::ostream& err) {
  auto t = make_tower(c);
  const auto kind = parse_kind(c.group);
  if (c.side != "base" && c.side != "ext") throw UsageError("--side must be base or ext");
  const auto side = c.side == "base" ? Side::Base : Side::Ext;
  check_order(*t, c, kind, c.n, side);
  auto g = MatrixGroup::build(t, kind, c.n, side, c.ceiling, c.seed);
  auto cc = conjugacy_classes(*g);
  if (!c.verify_file.empty()) {
    std::ifstream in(c.verify_file);
    if (!in) throw UsageError("cannot read " + c.verify_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string why;
    const auto tab = table_from_text(ss.str(), g, cc, &why);
    ReportDoc d;
    d.command = "chartab";
    d.params = {{"group", g->name()}, {"verify_file", std::filesystem::path(c.verify_file).filename().string()}};
    d.ok = tab.has_value();
    d.result = {{"group", g->name()}, {"accepted", d.ok}, {"reason", d.ok ? "" : why}};
    d.csv_header = {"accepted", "reason"};
    d.csv_rows = {{d.ok ? "true" : "false", d.ok ? "" : why}};
    d.summary = {"table for " + g->name() + (d.ok ? " accepted" : " rejected: " + why)};
    return d;
  }
  std::string note;
  auto tab = cached_character_table(g, cc, c.cache_dir, DixonOptions{c.seed, 8, c.threads}, &note);
  if (!note.empty()) err << "warning: " << g->name() << ": " << note << "\n";
  auto d = chartab_report(*tab, validate_table(*tab));
  d.params["side"] = c.side;
  return add_params(d, c);
}

ReportDoc cmd_double_cosets(const RunConfig& c) {
  auto t = make_tower(c);
  std::string route = c.route;
  if (route == "auto")
    route = group_order_formula(*t, GroupKind::GL, c.n, Side::Ext) <= 200000 ? "enumerate" : "s-set";
  if (route == "enumerate") {
    check_order(*t, c, GroupKind::GL, c.n, Side::Ext);
    auto g = MatrixGroup::build(t, GroupKind::GL, c.n, Side::Ext, c.ceiling, c.seed);
    auto h = MatrixGroup::build(t, GroupKind::GL, c.n, Side::Base, c.ceiling, c.seed);
    return add_params(double_coset_report(double_cosets(*g, *conjugacy_classes(*g), *h)), c);
  }
  if (route != "s-set") throw UsageError("--route must be auto, enumerate or s-set");
  check_order(*t, c, GroupKind::GL, c.n, Side::Base);
  auto h = MatrixGroup::build(t, GroupKind::GL, c.n, Side::Base, c.ceiling, c.seed);
  return add_params(double_coset_report(double_cosets_via_s(*h)), c);
}

ReportDoc cmd_lab(const RunConfig& c, std::ostream& err) {
  auto t = make_tower(c);
  check_order(*t, c, GroupKind::GL, c.n, Side::Ext);
  if (c.command == "pair-scan") {
    if (c.pair.empty()) throw UsageError("--pair is required (GL:GL, GL:U or SL:SL)");
    const auto pk = parse_pair(c.pair);
    auto lab = make_lab(c, t);
    auto d = pair_scan_report(pair_scan(lab, pk, c.n));
    flush_notes(lab, err);
    return add_params(d, c);
  }
  if (c.command == "unitary" && c.n != 2) throw UsageError("unitary is defined for --n 2");
  if ((c.command == "packet" || c.command == "theorem43") && c.n < 2) throw UsageError("packets need --n >= 2");
  auto lab = make_lab(c, t);
  ReportDoc d;
  if (c.command == "unitary") {
    d = unitary_report(unitary_relation(lab, c.n));
  } else if (c.command == "packet" && c.rep) {
    PacketContext ctx(lab, c.n);
    if (*c.rep < 0 || *c.rep >= ctx.count())
      throw UsageError("--rep " + std::to_string(*c.rep) + " out of range [0, " + std::to_string(ctx.count()) + ")");
    d = packet_report(ctx.packet(*c.rep));
  } else if (c.command == "packet") {
    d = packet_suite_report(packet_suite(lab, c.n));
  } else {
    d = formula_report(packet_suite(lab, c.n));
  }
  flush_notes(lab, err);
  return add_params(d, c);
}

std::optional<std::pair<std::int64_t, std::int64_t>> parse_eta(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--eta expects u,r");
  try {
    return std::make_pair(std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1)));
  } catch (const std::exception&) {
    throw UsageError("--eta expects integers u,r");
  }
}

int emit(const ReportDoc& d, const RunConfig& c, std::ostream& out) {
  const auto text = render(d, parse_format(c.format));
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw ResourceError("cannot write " + c.out);
    f << text;
  }
  return d.ok ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"distinction-multiplicity lab", "distlab"};
  app.require_subcommand(1, 1);

  auto* tower = app.add_subcommand("tower", "finite field tower F_q < F_{q^2}");
  add_field(tower, c);

  auto* chartab = app.add_subcommand("chartab", "character table of a matrix group");
  add_field(chartab, c);
  add_n(chartab, c);
  chartab->add_option("--group", c.group, "GL, SL, U or GLplus");
  chartab->add_option("--side", c.side, "base (F_q) or ext (F_{q^2})");
  chartab->add_option("--verify-file", c.verify_file, "validate a stored table instead of computing one");

  auto* dc = app.add_subcommand("double-cosets", "GL_n(F_q) double cosets in GL_n(F_{q^2})");
  add_field(dc, c);
  add_n(dc, c);
  dc->add_option("--route", c.route, "auto, enumerate or s-set");

  auto* scan = app.add_subcommand("pair-scan", "dim Hom_H(pi, 1) for every irreducible pi");
  add_field(scan, c);
  add_n(scan, c);
  scan->add_option("--pair", c.pair, "GL:GL, GL:U or SL:SL");

  auto* packet = app.add_subcommand("packet", "L-packets of SL_n(F_{q^2})");
  add_field(packet, c);
  add_n(packet, c);
  packet->add_option("--rep", c.rep, "anchor irreducible of GL_n(F_{q^2}); all when omitted");

  auto* formula_cmd = app.add_subcommand("theorem43", "multiplicity formula on every packet");
  add_field(formula_cmd, c);
  add_n(formula_cmd, c);

  auto* unitary = app.add_subcommand("unitary", "U(2) against mu-distinction");
  add_field(unitary, c);
  add_n(unitary, c);

  auto* padic = app.add_subcommand("padic-example", "the even dihedral example with tame characters");
  padic->add_option("--q", c.padic_q, "residue field size")->capture_default_str();
  padic->add_option("--M", c.modulus, "order bound on the uniformizer");
  padic->add_option("--shape", c.shape, "ramified-E or unramified-E");
  padic->add_option("--eta", c.eta, "eta on K^* as u,r");
  padic->add_option("--target-order", c.target_order, "least order sought for eta")->check(CLI::PositiveNumber);

  auto* thm11 = app.add_subcommand("thm11", "injection argument on random regular parameters");
  thm11->add_option("--q", c.thm_q, "residue field size")->capture_default_str();
  thm11->add_option("--n", c.thm_n, "degree")->capture_default_str()->check(CLI::Range(2, 4));
  thm11->add_option("--count", c.count, "number of inputs")->check(CLI::Range(1, 100000));
  thm11->add_option("--M", c.modulus, "order bound on the uniformizer");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) add_common(sub, c);

  std::vector<std::string> argv_s{"distlab"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_s) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    parse_format(c.format);
    ReportDoc d;
    if (c.command == "tower") {
      d = tower_report(*make_tower(c));
    } else if (c.command == "chartab") {
      d = cmd_chartab(c, err);
    } else if (c.command == "double-cosets") {
      d = cmd_double_cosets(c);
    } else if (c.command == "padic-example") {
      const auto r = even_dihedral_example(c.padic_q, c.modulus, parse_shape(c.shape), c.target_order, parse_eta(c.eta));
      d = even_example_report(r);
      if (!r.applicable) {
        emit(d, c, out);
        err << "error: " << r.reason << "\n";
        return kExitUsage;
      }
    } else if (c.command == "thm11") {
      d = injection_report(injection_suite(c.thm_q, c.thm_n, c.count, c.seed, c.modulus));
    } else {
      d = cmd_lab(c, err);
    }
    const int code = emit(d, c, out);
    if (code == kExitVerification) err << "verification failed: " << d.command << "\n";
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace distlab
