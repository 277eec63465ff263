#include "cuspkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuspkit/affine.hpp"
#include "cuspkit/errors.hpp"
#include "cuspkit/gbasis.hpp"
#include "cuspkit/invariants.hpp"
#include "cuspkit/qdata.hpp"
#include "cuspkit/verify.hpp"

namespace cuspkit {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string cartan;
  std::string word;
  int height_bound = 6;
  std::size_t word_cap = 10000;
  std::string output = "-";
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::string weight;
  std::string x, y;
  std::string quiver;
  std::string phi;
  std::optional<int> kmin, kmax;
  std::string param;
  bool report = false;
  bool timings = false;
};

struct Emitted {
  std::string text;
  int code = kExitOk;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::string body = text;
  for (char& ch : body)
    if (ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  std::vector<int> out;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::stringstream ts(tok);
    int v;
    std::string rest;
    if (!(ts >> v) || (ts >> rest)) throw ConfigError(std::string("bad ") + what + " '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(std::string("empty ") + what);
  return out;
}

CartanDatum need_cartan(const RunConfig& cfg) {
  if (cfg.cartan.empty()) throw ConfigError("--cartan is required for '" + cfg.command + "'");
  return parse_cartan(cfg.cartan);
}

ReducedWord word_or_default(const RunConfig& cfg, const RootSystem& rs) {
  if (cfg.word.empty()) return enumerate_reduced_words(rs, 1).words.front();
  ReducedWord w = parse_word(cfg.word);
  beta_sequence(rs, w);  // validates
  return w;
}

std::vector<RootVec> weights_or_all(const RunConfig& cfg, int rank) {
  if (cfg.weight.empty()) return weights_up_to(rank, cfg.height_bound);
  RootVec mu(parse_int_list(cfg.weight, "weight"));
  if (mu.rank() != rank) throw ConfigError("weight needs " + std::to_string(rank) + " entries");
  if (!mu.is_nonnegative() || mu.is_zero()) throw ConfigError("weight must be nonzero and non-negative");
  return {mu};
}

PbwExponent need_exponent(const std::string& text, const char* flag, std::size_t l) {
  if (text.empty()) throw ConfigError(std::string(flag) + " is required");
  PbwExponent a = PbwExponent::parse(text);
  if (a.size() != l) throw ConfigError(std::string(flag) + " needs " + std::to_string(l) + " entries");
  return a;
}

QData need_qdata(const RunConfig& cfg, const CartanDatum& c) {
  if (cfg.quiver.empty()) throw ConfigError("--quiver is required");
  DynkinQuiver q = DynkinQuiver::parse(c, cfg.quiver);
  if (cfg.phi.empty()) return QData::with_base(c, q, 0);
  std::vector<int> phi = parse_int_list(cfg.phi, "height function");
  if (static_cast<int>(phi.size()) != c.rank()) throw ConfigError("--phi needs " + std::to_string(c.rank()) + " values");
  return QData{c, q, phi};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Emitted cmd_roots(const RunConfig& cfg) {
  RootSystem rs = build_root_system(need_cartan(cfg));
  const CartanDatum& c = rs.cartan();
  InvolutionData inv = involution_and_coxeter(rs);
  if (cfg.format == "tsv") {
    std::string s = "index\troot\theight\n";
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
      s += std::to_string(k + 1) + "\t" + rs.positive_roots()[k].to_string() + "\t" + std::to_string(rs.positive_roots()[k].height()) + "\n";
    return {s};
  }
  json roots = json::array(), matrix = json::array();
  for (const RootVec& r : rs.positive_roots()) roots.push_back(r.coords);
  for (int i = 1; i <= c.rank(); ++i) {
    json row = json::array();
    for (int j = 1; j <= c.rank(); ++j) row.push_back(c.entry(i, j));
    matrix.push_back(row);
  }
  return {dump({{"cartan", c.name()},
                {"rank", c.rank()},
                {"cartan_matrix", matrix},
                {"num_positive", rs.num_positive()},
                {"roots", roots},
                {"involution", inv.star},
                {"coxeter", inv.coxeter}})};
}

Emitted cmd_words(const RunConfig& cfg) {
  RootSystem rs = build_root_system(need_cartan(cfg));
  WordEnumeration e = enumerate_reduced_words(rs, cfg.word_cap);
  if (cfg.format == "tsv") {
    std::string s = "index\tword\n";
    for (std::size_t k = 0; k < e.words.size(); ++k) s += std::to_string(k + 1) + "\t" + e.words[k].to_string() + "\n";
    return {s};
  }
  json ws = json::array();
  for (const ReducedWord& w : e.words) ws.push_back(w.letters);
  return {dump({{"cartan", rs.cartan().name()}, {"count", e.words.size()}, {"truncated", e.truncated}, {"words", ws}})};
}

Emitted cmd_pbw(const RunConfig& cfg) {
  RootSystem rs = build_root_system(need_cartan(cfg));
  PbwContext ctx(rs, word_or_default(cfg, rs), cfg.height_bound);
  std::vector<RootVec> weights = weights_or_all(cfg, rs.rank());
  if (cfg.format == "tsv") {
    std::string s = "exponent\tleading_word\telement\n";
    for (const RootVec& mu : weights) {
      std::string block = ctx.dump_tsv(mu);
      s += block.substr(block.find('\n') + 1);
    }
    return {s};
  }
  json betas = json::array(), roots = json::array(), spaces = json::array();
  for (std::size_t k = 1; k <= ctx.length(); ++k) {
    betas.push_back(ctx.sequence()[k].coords);
    roots.push_back({{"k", k}, {"beta", ctx.sequence()[k].coords}, {"element", ctx.dual_root_vector(k).to_json()}});
  }
  for (const RootVec& mu : weights) {
    const PbwWeightSpace& ws = ctx.weight_space(mu);
    json ms = json::array();
    for (const PbwBasisElt& m : ws.monomials)
      ms.push_back({{"exponent", m.exponent.to_string()}, {"leading_word", m.leading_word.to_string()}, {"element", m.value.to_json()}});
    spaces.push_back({{"weight", mu.coords}, {"monomials", ms}});
  }
  return {dump({{"cartan", rs.cartan().name()}, {"word", ctx.word().letters}, {"betas", betas}, {"root_vectors", roots}, {"weights", spaces}})};
}

Emitted cmd_gbasis(const RunConfig& cfg) {
  RootSystem rs = build_root_system(need_cartan(cfg));
  GlobalBasis gb(rs, word_or_default(cfg, rs), cfg.height_bound);
  std::vector<RootVec> weights = weights_or_all(cfg, rs.rank());
  bool all_pass = true;
  if (cfg.format == "tsv") {
    std::string s = cfg.report ? "exponent\telement\tunitriangular\n" : "exponent\telement\n";
    for (const RootVec& mu : weights)
      for (const GlobalBasisElt& g : gb.at_weight(mu).elements) {
        s += g.exponent.to_string() + "\t" + g.value.to_json().dump();
        if (cfg.report) {
          bool ok = gb.unitriangularity_report(g.exponent).passed();
          all_pass = all_pass && ok;
          s += ok ? "\tpass" : "\tfail";
        }
        s += "\n";
      }
    return {s, all_pass ? kExitOk : kExitVerifyFailed};
  }
  json spaces = json::array();
  for (const RootVec& mu : weights) {
    json j = gb.weight_space_json(mu);
    if (cfg.report) {
      json reps = json::array();
      for (const PbwExponent& a : gb.at_weight(mu).exponents) {
        UnitriangularityReport r = gb.unitriangularity_report(a);
        all_pass = all_pass && r.passed();
        reps.push_back(r.to_json());
      }
      j["reports"] = reps;
    }
    spaces.push_back(j);
  }
  return {dump({{"cartan", rs.cartan().name()}, {"word", gb.pbw().word().letters}, {"weights", spaces}}),
          all_pass ? kExitOk : kExitVerifyFailed};
}

Emitted cmd_invariants(const RunConfig& cfg) {
  RootSystem rs = build_root_system(need_cartan(cfg));
  GlobalBasis gb(rs, word_or_default(cfg, rs), cfg.height_bound);
  PbwExponent x = need_exponent(cfg.x, "--x", gb.pbw().length());
  PbwExponent y = need_exponent(cfg.y, "--y", gb.pbw().length());
  PairInvariants pi = pair_invariants(gb, x, y);
  if (cfg.format == "tsv") {
    json j = pi.to_json();
    std::string s = "key\tvalue\n";
    for (const char* k : {"x", "y", "lambda_xy", "lambda_yx", "delta", "wt_pair", "commutes", "commute_exponent", "product_label"}) {
      const json& v = j[k];
      s += std::string(k) + "\t" + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    return {s};
  }
  json j = pi.to_json();
  j["cartan"] = rs.cartan().name();
  j["word"] = gb.pbw().word().letters;
  return {dump(j)};
}

Emitted cmd_qdata(const RunConfig& cfg) {
  CartanDatum c = need_cartan(cfg);
  RootSystem rs = build_root_system(c);
  QData q = need_qdata(cfg, c);
  auto violations = validate_qdata(q);
  json j = q.to_json();
  json vs = json::array();
  for (const auto& v : violations) vs.push_back({{"rule", v.rule}, {"where", v.where}, {"message", v.message}});
  j["valid"] = violations.empty();
  j["violations"] = vs;
  if (!violations.empty()) {
    if (cfg.format == "tsv") {
      std::string s = "rule\twhere\tmessage\n";
      for (const auto& v : violations) s += v.rule + "\t" + v.where + "\t" + v.message + "\n";
      return {s, kExitUsage};
    }
    return {dump(j), kExitUsage};
  }
  ARQuiver ar = ar_quiver(q, rs);
  if (cfg.format == "tsv") return {ar.to_tsv()};
  CoordinateBijection bij = root_coordinate_bijection(ar);
  json simple = json::object();
  for (int i = 1; i <= c.rank(); ++i) {
    const VertexLabel& v = bij.simple(i, c.rank());
    simple[std::to_string(i)] = {v.i, v.p};
  }
  j["ar_quiver"] = ar.to_json();
  j["simple_labels"] = simple;
  j["adapted_word"] = adapted_word(rs, q.quiver).letters;
  if (!cfg.word.empty()) j["word_adapted"] = is_adapted(word_or_default(cfg, rs), q.quiver);
  return {dump(j)};
}

Emitted cmd_cuspline(const RunConfig& cfg) {
  CartanDatum c = need_cartan(cfg);
  RootSystem rs = build_root_system(c);
  QData q = need_qdata(cfg, c);
  auto violations = validate_qdata(q);
  if (!violations.empty()) throw ConfigError("invalid Q-data: " + violations.front().message);
  ReducedWord w = cfg.word.empty() ? adapted_word(rs, q.quiver) : word_or_default(cfg, rs);
  int l = static_cast<int>(rs.num_positive());
  CuspLine line = cuspidal_line(q, rs, w, cfg.kmin.value_or(1), cfg.kmax.value_or(l));
  std::optional<bool> unmixed;
  if (line.adapted && c.series() != Series::E) unmixed = unmixed_check(AffineData(rs), line);
  std::optional<StdDescriptor> desc;
  if (!cfg.param.empty()) desc = standard_descriptor(line, CuspParam::parse(cfg.param));
  if (cfg.format == "tsv") {
    std::string s = "k\tentry\n";
    for (const auto& [k, lab] : line.labels) s += std::to_string(k) + "\t" + lab.to_string() + "\n";
    for (const auto& [k, cls] : line.classes)
      s += std::to_string(k) + "\tE*(" + std::to_string(cls.window_index) + ")@D^" + std::to_string(cls.shift) + "\n";
    return {s, unmixed == false ? kExitVerifyFailed : kExitOk};
  }
  json j = line.to_json();
  j["unmixed"] = unmixed ? json(*unmixed) : json(nullptr);
  if (desc) {
    j["param"] = cfg.param;
    j["descriptor"] = desc->to_json();
  }
  return {dump(j), unmixed == false ? kExitVerifyFailed : kExitOk};
}

Emitted cmd_verify(const RunConfig& cfg) {
  VerifyOptions o;
  if (!cfg.cartan.empty()) o.cartan = parse_cartan(cfg.cartan);
  o.height_bound = cfg.height_bound;
  o.word_cap = cfg.word_cap;
  o.seed = cfg.seed;
  std::vector<SweepResult> results = run_verify(o);
  bool ok = true;
  for (const SweepResult& r : results) ok = ok && r.passed;
  if (cfg.format == "tsv") {
    std::string s = "sweep\tstatus\tsummary\n";
    for (const SweepResult& r : results)
      s += r.name + "\t" + (r.skipped ? "skipped" : r.passed ? "pass" : "fail") + "\t" + r.summary + "\n";
    return {s, ok ? kExitOk : kExitVerifyFailed};
  }
  json sweeps = json::array(), failed = json::array();
  for (const SweepResult& r : results) {
    sweeps.push_back(r.to_json(cfg.timings));
    if (!r.passed) failed.push_back(r.name);
  }
  json j = {{"passed", ok}, {"sweeps", sweeps}, {"failed", failed}, {"seed", cfg.seed}, {"height_bound", cfg.height_bound}};
  j["cartan"] = cfg.cartan.empty() ? json(nullptr) : json(o.cartan->name());
  return {dump(j), ok ? kExitOk : kExitVerifyFailed};
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvariantViolation*>(&e)) return kExitInvariant;
  if (dynamic_cast<const UnsupportedError*>(&e)) return kExitUnsupported;
  if (dynamic_cast<const Error*>(&e)) return kExitUsage;
  return kExitInvariant;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact dual PBW / dual canonical bases, Q-data and denominator checks"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.add_option("--cartan", cfg.cartan, "Cartan type, e.g. A2, D4, E6");
  app.add_option("--word", cfg.word, "reduced word of w0, e.g. 1,2,1");
  app.add_option("--height-bound", cfg.height_bound, "largest weight height handled")->check(CLI::PositiveNumber);
  app.add_option("--word-cap", cfg.word_cap, "cap on enumerated reduced words")->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "output file, - for stdout");
  app.add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--weight", cfg.weight, "weight as coefficients of simple roots, e.g. 1,1");
  app.add_option("--x", cfg.x, "first exponent label, e.g. (1,0,0)");
  app.add_option("--y", cfg.y, "second exponent label");
  app.add_option("--quiver", cfg.quiver, "arrows source>target, e.g. 2>1");
  app.add_option("--phi", cfg.phi, "height function values, e.g. 0,1");
  app.add_option("--kmin", cfg.kmin, "first index of the cuspidal line");
  app.add_option("--kmax", cfg.kmax, "last index of the cuspidal line");
  app.add_option("--param", cfg.param, "cuspidal parameter as k:a_k list, e.g. 1:1,3:1");
  app.add_flag("--report", cfg.report, "include unitriangularity reports (gbasis)");
  app.add_flag("--timings", cfg.timings, "include sweep timings (verify)");
  app.require_subcommand(1);
  app.fallthrough();
  for (const char* name : {"roots", "words", "pbw", "gbasis", "invariants", "qdata", "cuspline", "verify"})
    app.add_subcommand(name, std::string(name))->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Emitted r;
    if (cfg.command == "roots") r = cmd_roots(cfg);
    else if (cfg.command == "words") r = cmd_words(cfg);
    else if (cfg.command == "pbw") r = cmd_pbw(cfg);
    else if (cfg.command == "gbasis") r = cmd_gbasis(cfg);
    else if (cfg.command == "invariants") r = cmd_invariants(cfg);
    else if (cfg.command == "qdata") r = cmd_qdata(cfg);
    else if (cfg.command == "cuspline") r = cmd_cuspline(cfg);
    else r = cmd_verify(cfg);
    if (cfg.output == "-") {
      out << r.text;
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw ConfigError("cannot open output file " + cfg.output);
      f << r.text;
    }
    return r.code;
  } catch (const std::exception& e) {
    int code = exit_code_for(e);
    const char* prefix = code == kExitUnsupported ? "unsupported: " : code == kExitUsage ? "error: " : "internal error: ";
    err << prefix << e.what() << "\n";
    return code;
  }
}

}  // namespace cuspkit
