#include "quintic/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "quintic/cohomology.hpp"
#include "quintic/document.hpp"
#include "quintic/error.hpp"
#include "quintic/gallery.hpp"
#include "quintic/oracle.hpp"
#include "quintic/parallel.hpp"
#include "quintic/strata.hpp"

namespace quintic::cli {

namespace {

using nlohmann::json;

constexpr std::uint32_t kDefaultSamplingPrime = 10007;

// Usage errors raised after CLI11 has accepted the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Field parse_field(const std::string& text) {
  if (text == "q") return Field::rationals();
  if (text == "fp") return Field::prime(kDefaultSamplingPrime);
  static const std::regex fp(R"(fp:(\d{1,10}))");
  std::smatch m;
  if (!std::regex_match(text, m, fp)) throw UsageError("--field expects q or fp:P, got '" + text + "'");
  const unsigned long long p = std::stoull(m[1]);
  if (p >= (1ULL << 31)) throw UsageError("--field prime must be below 2^31");
  try {
    return Field::prime(static_cast<std::uint32_t>(p));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

ModuliSpaceId parse_space(const std::string& text) {
  try {
    return ModuliSpaceId::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Label parse_label(const std::string& text) {
  try {
    return parse_stratum(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

MatrixDocument read_document(const std::string& path, Field f) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), f);
}

// Space from the flag, the file, or the Hilbert polynomial, in that order.
ModuliSpaceId resolve_space(const MatrixDocument& doc, const std::string& flag) {
  if (!flag.empty()) return parse_space(flag);
  if (doc.space) return *doc.space;
  try {
    const HilbertData h = hilbert(doc.morphism);
    if (h.r == 5 && h.chi >= 0 && h.chi <= 5) return {5, h.chi};
  } catch (const DomainError&) {
  }
  throw UsageError("no space line and the Hilbert polynomial does not name a supported space; pass --space");
}

json signature_json(const CohomologySignature& s) { return json::array({s.h0_minus1, s.h1, s.h0_omega}); }

json hilbert_json(const HilbertData& h) { return {{"chi", h.chi}, {"r", h.r}}; }

json report_json(const StratumReport& r) {
  json conditions = json::object();
  for (const auto& c : r.conditions) conditions[c.name] = c.value;
  json j = {
      {"conditions", conditions},
      {"determinant", r.determinant.to_string()},
      {"hilbert", r.hilbert ? hilbert_json(*r.hilbert) : json(nullptr)},
      {"label", label_name(r.label)},
      {"signature", r.signature ? signature_json(*r.signature) : json(nullptr)},
      {"space", r.space.to_string()},
      {"sublabel", r.sublabel ? json(*r.sublabel) : json(nullptr)},
      {"warnings", r.warnings},
  };
  if (r.serre_signature) j["serre_signature"] = *r.serre_signature;
  return j;
}

void require_injective(const GradedMorphism& phi) {
  if (!is_injective(phi)) throw DomainError("NotInjective: the determinant vanishes identically");
}

struct Options {
  std::string field = "q";
  std::string file;
  std::string space;
  std::string stratum;
  std::string sublabel;
  std::string twists;
  int twist = 1;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::uint32_t prime = 5;
};

int cmd_classify(const Options& o, json& out) {
  const MatrixDocument doc = read_document(o.file, parse_field(o.field));
  const StratumReport r = classify(resolve_space(doc, o.space), doc.morphism);
  out = report_json(r);
  return r.label == Label::NotInjective ? kDomain : kOk;
}

int cmd_cohom(const Options& o, json& out) {
  static const std::regex range(R"((-?\d+)\.\.(-?\d+))");
  std::smatch m;
  if (!std::regex_match(o.twists, m, range)) throw UsageError("--twists expects M..N, got '" + o.twists + "'");
  const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
  if (lo > hi) throw UsageError("--twists range is empty");
  if (hi - lo > 200) throw UsageError("--twists range is limited to 201 values");
  const MatrixDocument doc = read_document(o.file, parse_field(o.field));
  require_injective(doc.morphism);
  json rows = json::array();
  for (int t = lo; t <= hi; ++t)
    rows.push_back({{"h0", h0_twist(doc.morphism, t)}, {"h1", h1_twist(doc.morphism, t)}, {"m", t}});
  const HilbertData h = hilbert(doc.morphism);
  out = {{"cohomology", rows}, {"hilbert", hilbert_json(h)}};
  out["space"] = doc.space ? json(doc.space->to_string()) : json(nullptr);
  return kOk;
}

int cmd_det(const Options& o, json& out) {
  const MatrixDocument doc = read_document(o.file, parse_field(o.field));
  if (!doc.morphism.is_square()) throw DomainError("det needs a square morphism");
  const Form d = determinant(doc.morphism);
  out = {{"degree", d.degree()}, {"determinant", d.to_string()}, {"injective", !d.is_zero()}};
  return kOk;
}

int cmd_dualize(const Options& o, json& out) {
  const MatrixDocument doc = read_document(o.file, parse_field(o.field));
  require_injective(doc.morphism);
  MatrixDocument dual{std::nullopt, dual_resolution(doc.morphism, o.twist)};
  if (doc.space) {
    const int chi = 5 * o.twist - doc.space->chi;
    if (chi >= 0 && chi <= 5) dual.space = ModuliSpaceId{5, chi};
  }
  out = {{"document", print_document(dual)}, {"source", format_twists(dual.morphism.source())},
         {"target", format_twists(dual.morphism.target())}, {"twist", o.twist}};
  out["space"] = dual.space ? json(dual.space->to_string()) : json(nullptr);
  return kOk;
}

int cmd_sample(const Options& o, json& out) {
  SampleRequest req;
  req.space = parse_space(o.space);
  req.label = parse_label(o.stratum);
  if (!o.sublabel.empty()) req.sublabel = o.sublabel;
  req.seed = o.seed;
  req.field = parse_field(o.field);
  const GradedMorphism phi = sample_stratum(req);
  out = report_json(classify(req.space, phi));
  out["document"] = print_document({req.space, phi});
  out["seed"] = o.seed;
  return kOk;
}

int cmd_audit(const Options& o, json& out) {
  std::vector<const CatalogueEntry*> rows;
  for (const auto& e : catalogue())
    if (o.space.empty() || e.space == parse_space(o.space)) rows.push_back(&e);
  if (rows.empty()) throw UsageError("audit covers M(5,3), M(5,1) and M(5,0)");
  std::vector<DimensionAudit> audits(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) { audits[i] = dimension_audit(rows[i]->space, rows[i]->label); });
  bool ok = true;
  json list = json::array();
  for (const auto& a : audits) {
    ok = ok && a.ok;
    list.push_back({{"codim", a.expected_codim},
                    {"dim_G", a.dim_G},
                    {"dim_W", a.dim_W},
                    {"label", label_name(a.label)},
                    {"ok", a.ok},
                    {"space", a.space.to_string()},
                    {"stab_dim", a.stab_dim},
                    {"stratum_dim", a.stratum_dim}});
  }
  json kronecker = json::array();
  for (const auto& [n, a, b, expected] : std::vector<std::array<long, 4>>{{3, 2, 3, 6}, {3, 5, 5, 26}}) {
    const long d = kronecker_moduli_dimension(n, a, b);
    ok = ok && d == expected;
    kronecker.push_back({{"a", a}, {"b", b}, {"dim", d}, {"n", n}, {"ok", d == expected}});
  }
  out = {{"kronecker", kronecker}, {"ok", ok}, {"rows", list}};
  return ok ? kOk : kDomain;
}

int cmd_oracle(const Options& o, json& out) {
  OracleRequest req;
  req.space = parse_space(o.space);
  req.label = parse_label(o.stratum);
  req.trials = o.trials;
  req.prime = o.prime;
  req.seed = o.seed;
  const OracleReport rep = oracle_compare(req);
  json dis = json::array();
  for (const auto& d : rep.disagreements)
    dis.push_back({{"closed_form", d.closed_form}, {"enumeration", d.enumeration}, {"matrix", d.matrix}, {"trial", d.trial}});
  out = {{"agreements", rep.agreements},
         {"disagreements", dis},
         {"lift_agreements", rep.lift_agreements},
         {"lift_changes", rep.lift_changes},
         {"ok", rep.ok()},
         {"positives", rep.positives},
         {"prime", o.prime},
         {"seed", o.seed},
         {"space", o.space},
         {"stratum", o.stratum},
         {"trials", rep.trials}};
  return rep.ok() ? kOk : kDomain;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& what) {
  out << json{{"error", what}, {"kind", kind}}.dump(2) << "\n";
  err << "quintic-strata: " << what << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stratum classifier for presentations of sheaves with Hilbert polynomial 5m + chi", "quintic-strata"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "Coefficient field: q or fp:P")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a matrix file into its stratum");
  classify_cmd->add_option("file", o.file)->required();
  classify_cmd->add_option("--space", o.space, "Override the space, e.g. M(5,3)");

  auto* cohom_cmd = app.add_subcommand("cohom", "h0 and h1 of the cokernel over a range of twists");
  cohom_cmd->add_option("file", o.file)->required();
  cohom_cmd->add_option("--twists", o.twists, "Range M..N")->required();

  auto* det_cmd = app.add_subcommand("det", "Determinant of a square matrix file");
  det_cmd->add_option("file", o.file)->required();

  auto* dual_cmd = app.add_subcommand("dualize", "Dual presentation twisted by K");
  dual_cmd->add_option("file", o.file)->required();
  dual_cmd->add_option("--twist", o.twist)->required();

  auto* sample_cmd = app.add_subcommand("sample", "Random member of a stratum");
  sample_cmd->add_option("--space", o.space)->required();
  sample_cmd->add_option("--stratum", o.stratum)->required();
  sample_cmd->add_option("--sublabel", o.sublabel);
  sample_cmd->add_option("--seed", o.seed)->required();

  auto* audit_cmd = app.add_subcommand("audit", "Dimension bookkeeping for every catalogue row");
  audit_cmd->add_option("--space", o.space);

  auto* oracle_cmd = app.add_subcommand("oracle-compare", "Closed-form conditions against F_p enumeration");
  oracle_cmd->add_option("--space", o.space)->required();
  oracle_cmd->add_option("--stratum", o.stratum)->required();
  oracle_cmd->add_option("--trials", o.trials)->required();
  oracle_cmd->add_option("--prime", o.prime)->required();
  oracle_cmd->add_option("--seed", o.seed);

  for (auto* sub : app.get_subcommands({})) sub->add_option("--field", o.field, "Coefficient field: q or fp:P");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, "usage", e.what());
    return kUsage;
  }

  json report;
  int code = kOk;
  try {
    if (*classify_cmd) code = cmd_classify(o, report);
    else if (*cohom_cmd) code = cmd_cohom(o, report);
    else if (*det_cmd) code = cmd_det(o, report);
    else if (*dual_cmd) code = cmd_dualize(o, report);
    else if (*sample_cmd) code = cmd_sample(o, report);
    else if (*audit_cmd) code = cmd_audit(o, report);
    else code = cmd_oracle(o, report);
  } catch (const UsageError& e) {
    emit_error(out, err, "usage", e.what());
    return kUsage;
  } catch (const ParseError& e) {
    emit_error(out, err, "parse", e.what());
    return kUsage;
  } catch (const DomainError& e) {
    emit_error(out, err, "domain", e.what());
    return kDomain;
  } catch (const DegreeError& e) {
    emit_error(out, err, "domain", e.what());
    return kDomain;
  }
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace quintic::cli
