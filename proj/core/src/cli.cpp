#include <chrono>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "cellar/catalog.hpp"
#include "cellar/cli.hpp"

namespace cellar {

namespace {

using nlohmann::json;  // objects keep sorted keys

constexpr std::uint64_t kDefaultSeed = 0xCE11A5ULL;

std::uint64_t env_seed() {
  const char* s = std::getenv("CELLAR_SEED");
  if (!s) return kDefaultSeed;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError("CELLAR_SEED must be an unsigned integer");
  }
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Options {
  std::string command;
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;  // --key value
  std::set<std::string> switches;            // --key
};

const std::set<std::string> kValueFlags = {"--out",    "--cap",    "--trace-cap", "--vertices",
                                           "--datum",  "--cartan", "--candidate", "--param",
                                           "--datum-out"};
const std::set<std::string> kSwitches = {"--json", "--self-injective", "--timings", "--human"};

Options parse_args(const std::vector<std::string>& args) {
  Options o;
  if (args.empty()) throw InputError("missing subcommand");
  o.command = args[0];
  std::vector<std::string> params;
  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0) {
      if (kSwitches.count(a)) {
        o.switches.insert(a);
      } else if (kValueFlags.count(a)) {
        if (i + 1 >= args.size()) throw InputError("flag " + a + " needs a value");
        if (a == "--param")
          params.push_back(args[++i]);
        else
          o.flags[a] = args[++i];
      } else {
        throw InputError("unknown flag " + a);
      }
    } else {
      o.positional.push_back(a);
    }
  }
  for (size_t i = 0; i < params.size(); ++i) o.flags["--param" + std::to_string(i)] = params[i];
  o.flags["--param-count"] = std::to_string(params.size());
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedInput {
  BuiltAlgebra built;  // presentation + optional datum + metadata
  std::string digest_payload;
  bool from_catalog = false;
};

std::map<std::string, std::string> parse_query(const std::string& query) {
  std::map<std::string, std::string> params;
  std::stringstream ss(query);
  std::string kv;
  while (std::getline(ss, kv, '&')) {
    if (kv.empty()) continue;
    size_t eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("catalog parameter needs k=v, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

LoadedInput load_input(const std::string& spec) {
  LoadedInput in;
  if (spec.rfind("catalog:", 0) == 0) {
    std::string rest = spec.substr(8);
    std::string name = rest;
    std::map<std::string, std::string> params;
    size_t q = rest.find('?');
    if (q != std::string::npos) {
      name = rest.substr(0, q);
      params = parse_query(rest.substr(q + 1));
    }
    in.built = catalog_build(name, params);
    in.from_catalog = true;
    in.digest_payload = serialize_presentation(in.built.presentation);
    return in;
  }
  std::string text = read_file(spec);
  in.built.name = spec;
  in.built.presentation = parse_presentation(text);
  in.digest_payload = text;
  return in;
}

IntMat parse_int_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& ex) {
    throw InputError(std::string("bad matrix literal: ") + ex.what());
  }
  IntMat m;
  if (!j.is_array()) throw InputError("matrix literal must be an array of arrays");
  for (const auto& row : j) {
    std::vector<long> r;
    for (const auto& x : row) r.push_back(x.get<long>());
    m.push_back(std::move(r));
  }
  return m;
}

json mat_json(const IntMat& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

json verdict_json(const Verdict& v) {
  json jv;
  jv["verdict"] = v.verdict;
  jv["stages"] = json::array();
  for (const auto& s : v.stages)
    jv["stages"].push_back(json{{"stage", s.stage}, {"passed", s.passed}, {"detail", s.detail}});
  jv["candidates"] = json::array();
  for (const auto& c : v.candidates) jv["candidates"].push_back(mat_json(c));
  jv["certificates"] = json::array();
  for (const auto& c : v.certificates) {
    json jc;
    jc["consistent"] = c.consistent;
    if (c.consistent) {
      jc["assignment"] = c.assignment;
      jc["chain"] = c.chain;
      if (!c.socle_rows.empty()) jc["socle_rows"] = c.socle_rows;
    } else {
      jc["reason"] = c.reason;
    }
    jv["certificates"].push_back(std::move(jc));
  }
  if (v.datum) {
    json jd;
    jd["c1"] = v.datum->c1.ok;
    jd["c2"] = v.datum->c2.ok;
    jd["c3"] = v.datum->c3.ok;
    if (!v.datum->c1.ok) jd["c1_reason"] = v.datum->c1.reason;
    if (!v.datum->c2.ok) jd["c2_reason"] = v.datum->c2.reason;
    if (!v.datum->c3.ok) jd["c3_reason"] = v.datum->c3.reason;
    if (v.datum->decomp) {
      jd["decomposition_matrix"] = mat_json(v.datum->decomp->d);
      jd["cartan_identity"] = v.datum->decomp->cartan_identity;
      jd["order_compatible"] = v.datum->decomp->order_compatible;
    }
    jd["verified"] = v.datum->ok;
    jv["datum"] = std::move(jd);
  }
  return jv;
}

struct Ctx {
  Options opt;
  json report;
  int exit_code = 0;
};

FDAlgebra normalize_input(const LoadedInput& in, const Options& opt, json& report) {
  int cap = 32;
  auto it = opt.flags.find("--cap");
  if (it != opt.flags.end()) cap = std::stoi(it->second);
  FDAlgebra A = normalize(in.built.presentation, cap);
  report["inputs"]["digest"] = hex64(fnv1a(in.digest_payload));
  report["inputs"]["algebra"] = in.built.name;
  report["inputs"]["field"] = A.field.name();
  if (opt.flags.count("--vertices")) {
    std::vector<std::string> sel = split_commas(opt.flags.at("--vertices"));
    FDAlgebra B = truncate(A, sel);
    report["inputs"]["vertices"] = sel;
    return B;
  }
  return A;
}

long trace_cap_of(const Options& opt) {
  auto it = opt.flags.find("--trace-cap");
  return it == opt.flags.end() ? 24 : std::stol(it->second);
}

std::optional<CellDatum> load_datum(const Options& opt, const LoadedInput& in, const FDAlgebra& A,
                                    json& report) {
  auto it = opt.flags.find("--datum");
  if (it == opt.flags.end()) return std::nullopt;
  CellDatumSpec spec;
  if (it->second == "bundled") {
    if (!in.built.datum)
      throw InputError("no bundled cell datum for '" + in.built.name + "'");
    spec = *in.built.datum;
    report["inputs"]["datum"] = "bundled";
  } else {
    std::string text = read_file(it->second);
    spec = parse_cell_datum_spec(text);
    report["inputs"]["datum"] = hex64(fnv1a(text));
  }
  return instantiate_cell_datum(spec, A);
}

json basis_json(const FDAlgebra& A) {
  json j;
  j["dimension"] = A.dim();
  j["vertices"] = A.vertex_names;
  j["basis"] = A.labels;
  j["nilpotency"] = A.nilpotency;
  json pd = json::array();
  for (size_t i = 0; i < A.vertex_names.size(); ++i) {
    json row = json::array();
    for (size_t jv = 0; jv < A.vertex_names.size(); ++jv)
      row.push_back(A.pair_dim(static_cast<int>(jv), static_cast<int>(i)));
    pd.push_back(std::move(row));
  }
  j["pair_dimensions"] = pd;
  return j;
}

void cmd_report(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("report needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  GramProblem problem;
  problem.cartan = cartan_matrix(A);
  problem.self_injective =
      in.from_catalog ? in.built.meta.self_injective : c.opt.switches.count("--self-injective") > 0;
  std::optional<CellDatum> datum = load_datum(c.opt, in, A, c.report);
  Verdict v = necessary_conditions_report(A, problem, datum ? &*datum : nullptr, trace_cap_of(c.opt));
  c.report["results"]["dimension"] = A.dim();
  c.report["results"]["cartan"] = mat_json(problem.cartan);
  c.report["results"]["self_injective_assumed"] = problem.self_injective;
  c.report["results"]["report"] = verdict_json(v);
  c.exit_code = v.verdict == "NOT-CELLULAR" ? 1 : 0;
  if (datum && !v.datum->ok) c.exit_code = 1;
}

void cmd_basis(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("basis needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  c.report["results"] = basis_json(A);
}

void cmd_cartan(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("cartan needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  c.report["results"]["dimension"] = A.dim();
  c.report["results"]["cartan"] = mat_json(cartan_matrix(A));
}

void cmd_projectives(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("projectives needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  json out = json::array();
  for (size_t v = 0; v < A.vertex_names.size(); ++v) {
    LeftModule P = projective(A, static_cast<int>(v));
    json jp;
    jp["vertex"] = A.vertex_names[v];
    jp["dimension"] = P.n;
    jp["radical_layers"] = radical_layer_dims(P);
    jp["socle"] = socle_vector(P);
    jp["top"] = top_vector(P);
    json words = json::array();
    for (int k = 0; k < A.dim(); ++k)
      if (A.tgt[k] == static_cast<int>(v)) words.push_back(A.labels[k]);
    jp["basis"] = words;
    out.push_back(std::move(jp));
  }
  c.report["results"]["projectives"] = out;
}

void cmd_gabriel(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("gabriel needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  c.report["results"]["gabriel"] = mat_json(gabriel_matrix(A));
}

void cmd_ext_sym(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("ext-sym needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  Ext1Sym e = ext1_symmetric(A);
  c.report["results"]["symmetric"] = e.ok;
  if (!e.ok) {
    c.report["results"]["witness"] = json::array({A.vertex_names[e.i], A.vertex_names[e.j]});
    c.exit_code = 1;
  }
}

void cmd_weak_sym(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("weak-sym needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  WeakSymmetry w = weakly_symmetric(A);
  c.report["results"]["weakly_symmetric"] = w.ok;
  if (!w.ok) {
    c.report["results"]["witness"] = A.vertex_names[w.witness_vertex];
    c.exit_code = 1;
  }
}

void cmd_truncate(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("truncate needs an input");
  if (!c.opt.flags.count("--vertices")) throw InputError("truncate needs --vertices");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);  // applies --vertices
  c.report["results"] = basis_json(A);
  c.report["results"]["cartan"] = mat_json(cartan_matrix(A));
}

IntMat cartan_from_opts(Ctx& c) {
  if (c.opt.flags.count("--cartan")) return parse_int_matrix(c.opt.flags.at("--cartan"));
  if (c.opt.positional.empty()) throw InputError("need --cartan or an algebra input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  return cartan_matrix(A);
}

void cmd_gram_factor(Ctx& c) {
  IntMat cartan = cartan_from_opts(c);
  auto cands = gram_factorizations(cartan, trace_cap_of(c.opt));
  c.report["results"]["cartan"] = mat_json(cartan);
  c.report["results"]["count"] = cands.size();
  json jc = json::array();
  for (const auto& m : cands) jc.push_back(mat_json(m));
  c.report["results"]["candidates"] = std::move(jc);
}

void cmd_order_check(Ctx& c) {
  bool si = c.opt.switches.count("--self-injective") > 0;
  if (c.opt.flags.count("--candidate")) {
    IntMat d = parse_int_matrix(c.opt.flags.at("--candidate"));
    OrderCertificate cert = order_consistency(d, si);
    json jr;
    jr["consistent"] = cert.consistent;
    if (cert.consistent) {
      jr["chain"] = cert.chain;
      jr["assignment"] = cert.assignment;
    } else {
      jr["reason"] = cert.reason;
      c.exit_code = 1;
    }
    c.report["results"] = std::move(jr);
    return;
  }
  IntMat cartan = cartan_from_opts(c);
  auto cands = gram_factorizations(cartan, trace_cap_of(c.opt));
  json out = json::array();
  bool any = false;
  for (const auto& d : cands) {
    OrderCertificate cert = order_consistency(d, si);
    any = any || cert.consistent;
    json jr;
    jr["candidate"] = mat_json(d);
    jr["consistent"] = cert.consistent;
    if (cert.consistent)
      jr["chain"] = cert.chain;
    else
      jr["reason"] = cert.reason;
    out.push_back(std::move(jr));
  }
  c.report["results"]["cartan"] = mat_json(cartan);
  c.report["results"]["candidates"] = std::move(out);
  c.report["results"]["any_consistent"] = any;
}

void cmd_verify_cell(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("verify-cell needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  std::optional<CellDatum> datum = load_datum(c.opt, in, A, c.report);
  if (!datum) throw InputError("verify-cell needs --datum FILE|bundled");
  CellVerification v = verify_cell_datum(*datum);
  json jd;
  jd["c1"] = v.c1.ok;
  jd["c2"] = v.c2.ok;
  jd["c3"] = v.c3.ok;
  if (!v.c1.ok) jd["c1_reason"] = v.c1.reason;
  if (!v.c2.ok) jd["c2_reason"] = v.c2.reason;
  if (!v.c3.ok) jd["c3_reason"] = v.c3.reason;
  if (v.c3.witness)
    jd["c3_witness"] = json{{"generator", v.c3.witness->generator},
                            {"cell", v.c3.witness->lambda},
                            {"s", v.c3.witness->s},
                            {"t", v.c3.witness->t},
                            {"t2", v.c3.witness->t2}};
  if (v.decomp) {
    jd["decomposition_matrix"] = mat_json(v.decomp->d);
    jd["lambda_plus"] = v.decomp->lambda_plus;
    json match = json::array();
    for (size_t i = 0; i < v.decomp->lambda_plus.size(); ++i)
      match.push_back(json::array({datum->cell_name(v.decomp->lambda_plus[i]),
                                   A.vertex_names[v.decomp->vertex_of[i]]}));
    jd["vertex_matching"] = std::move(match);
    jd["cartan_identity"] = v.decomp->cartan_identity;
    jd["order_compatible"] = v.decomp->order_compatible;
  }
  jd["verified"] = v.ok;
  c.report["results"]["verification"] = std::move(jd);
  c.exit_code = v.ok ? 0 : 1;
}

void cmd_chain(Ctx& c) {
  if (c.opt.positional.empty()) throw InputError("chain needs an input");
  LoadedInput in = load_input(c.opt.positional[0]);
  FDAlgebra A = normalize_input(in, c.opt, c.report);
  std::optional<CellDatum> datum = load_datum(c.opt, in, A, c.report);
  if (!datum) throw InputError("chain needs --datum FILE|bundled");
  std::vector<int> ext(datum->n_cells());
  for (int i = 0; i < datum->n_cells(); ++i) ext[i] = i;
  ChainResult r = cell_chain(*datum, ext, env_seed());
  c.report["results"]["ideal_dims"] = r.ideal_dims;
  c.report["results"]["verified"] = r.ok;
  if (!r.ok) {
    c.report["results"]["reason"] = r.reason;
    c.exit_code = 1;
  }
}

void cmd_catalog(Ctx& c) {
  if (c.opt.positional.empty() || c.opt.positional[0] == "list") {
    json out = json::array();
    for (const auto& e : catalog_list()) {
      json je;
      je["name"] = e.name;
      je["summary"] = e.summary;
      je["self_injective"] = e.self_injective;
      je["bundled_datum"] = e.has_datum;
      json jp = json::array();
      for (const auto& p : e.params)
        jp.push_back(json{{"name", p.name}, {"default", p.def}, {"constraint", p.constraint}});
      je["params"] = std::move(jp);
      out.push_back(std::move(je));
    }
    c.report["results"]["entries"] = std::move(out);
    return;
  }
  if (c.opt.positional[0] == "build") {
    if (c.opt.positional.size() < 2) throw InputError("catalog build needs NAME");
    std::map<std::string, std::string> params;
    int n = std::stoi(c.opt.flags.at("--param-count"));
    for (int i = 0; i < n; ++i) {
      const std::string& kv = c.opt.flags.at("--param" + std::to_string(i));
      size_t eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("--param needs k=v");
      params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    BuiltAlgebra built = catalog_build(c.opt.positional[1], params);
    std::string text = serialize_presentation(built.presentation);
    if (c.opt.flags.count("--out")) {
      std::ofstream out(c.opt.flags.at("--out"), std::ios::binary);
      out << text;
      c.opt.flags.erase("--out");  // the report writer must not clobber it
    } else {
      c.report["results"]["presentation"] = json::parse(text);
    }
    if (c.opt.flags.count("--datum-out")) {
      if (!built.datum) throw InputError("entry has no bundled cell datum");
      std::ofstream out(c.opt.flags.at("--datum-out"), std::ios::binary);
      out << serialize_cell_datum_spec(*built.datum);
    }
    c.report["results"]["name"] = built.name;
    c.report["results"]["digest"] = hex64(fnv1a(text));
    return;
  }
  throw InputError("catalog subcommand must be 'list' or 'build NAME'");
}

std::string render_human(const json& j, int indent = 0) {
  std::string pad(indent, ' ');
  std::string out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += pad + it.key() + ":";
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value()[0].is_object() || it.value()[0].is_array()))) {
        out += "\n" + render_human(it.value(), indent + 2);
      } else {
        out += " " + it.value().dump() + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out += pad + "-\n" + render_human(v, indent + 2);
      } else {
        out += pad + "- " + v.dump() + "\n";
      }
    }
  } else {
    out += pad + j.dump() + "\n";
  }
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  Ctx c;
  auto start = std::chrono::steady_clock::now();
  try {
    c.opt = parse_args(args);
    c.report["command"] = args;
    if (c.opt.command == "report")
      cmd_report(c);
    else if (c.opt.command == "basis")
      cmd_basis(c);
    else if (c.opt.command == "cartan")
      cmd_cartan(c);
    else if (c.opt.command == "projectives")
      cmd_projectives(c);
    else if (c.opt.command == "gabriel")
      cmd_gabriel(c);
    else if (c.opt.command == "ext-sym")
      cmd_ext_sym(c);
    else if (c.opt.command == "weak-sym")
      cmd_weak_sym(c);
    else if (c.opt.command == "truncate")
      cmd_truncate(c);
    else if (c.opt.command == "gram-factor")
      cmd_gram_factor(c);
    else if (c.opt.command == "order-check")
      cmd_order_check(c);
    else if (c.opt.command == "verify-cell")
      cmd_verify_cell(c);
    else if (c.opt.command == "chain")
      cmd_chain(c);
    else if (c.opt.command == "catalog")
      cmd_catalog(c);
    else
      throw InputError("unknown subcommand '" + c.opt.command + "'");
  } catch (const ResourceCapError& ex) {
    c.report["error"] = ex.what();
    c.exit_code = 3;
  } catch (const InputError& ex) {
    c.report["error"] = ex.what();
    c.exit_code = 2;
  } catch (const std::exception& ex) {
    c.report["error"] = std::string("internal: ") + ex.what();
    c.exit_code = 2;
  }
  // timings stay opt-in so that repeated runs are byte-identical
  if (c.opt.switches.count("--timings")) {
    auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    c.report["timing_us"] = us.count();
  }
  res.exit_code = c.exit_code;
  res.json = c.report.dump(2) + "\n";
  res.human = render_human(c.report);
  if (c.opt.flags.count("--out")) {
    std::ofstream out(c.opt.flags.at("--out"), std::ios::binary);
    out << res.json;
  }
  return res;
}

}  // namespace cellar
