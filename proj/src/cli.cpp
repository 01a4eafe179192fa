#include "nhlab/cli.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "nhlab/chevalley.hpp"
#include "nhlab/complexflag.hpp"
#include "nhlab/errors.hpp"
#include "nhlab/koszul.hpp"
#include "nhlab/kostant.hpp"
#include "nhlab/repbuilder.hpp"
#include "nhlab/rootsys.hpp"
#include "nhlab/selftest.hpp"

namespace nhlab::cli {

using json = nlohmann::ordered_json;

namespace {

// Flags beyond --type/--rank that each command accepts.
struct CommandSpec {
  Command command;
  const char* name;
  const char* description;
  bool system, lambda, parabolic, chain, threads, max_dim, cache_dir;
};

constexpr CommandSpec kCommands[] = {
    {Command::Roots, "roots", "root system data", true, false, false, false, false, false, false},
    {Command::Irrep, "irrep", "irreducible module with lowest weight lambda + rho", true, true, false, false, false,
     true, true},
    {Command::Homology, "homology", "n-homology, compared with the Kostant prediction", true, true, true, false, true,
     true, true},
    {Command::Cohomology, "cohomology", "n-cohomology", true, true, true, false, true, true, true},
    {Command::Duality, "duality", "homology, cohomology and their duality check", true, true, true, false, true, true,
     true},
    {Command::Kostant, "kostant", "predicted n-homology", true, true, true, false, false, true, true},
    {Command::ComplexGroup, "complexgroup", "homology predictions for chains of simple roots", true, true, false, true,
     false, false, false},
    {Command::SelfTest, "selftest", "invariant suite at rank <= 2", false, false, false, false, true, false, false},
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string cur;
  for (const char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_index(const std::string& token, const char* flag) {
  const bool digits = !token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits || token.size() > 9) throw usage_error(std::string(flag) + ": malformed index '" + token + "'");
  return std::stol(token);
}

json weight_json(const Weight& w) { return json(w.to_strings()); }

json word_json(const WeylElement& w) {
  json out = json::array();
  for (const int i : w.word()) out.push_back(i + 1);
  return out;
}

json table_json(const HomologyTable& t) {
  json rows = json::array();
  for (const auto& [key, mult] : t.entries)
    rows.push_back(json{{"degree", key.first}, {"weight", weight_json(key.second)}, {"mult", mult}});
  return rows;
}

json simple_coords_json(const Root& r) { return json(r.simple_coords); }

json request_echo(const Request& req, const RootSystem* rs) {
  json echo;
  echo["command"] = to_string(req.command);
  if (req.type) {
    echo["type"] = std::string(1, req.type);
    echo["rank"] = req.rank;
  }
  if (req.lambda) {
    echo["lambda"] = weight_json(*req.lambda);
    if (rs) echo["mu"] = weight_json(*req.lambda + rs->rho());
  }
  const auto& spec = *std::find_if(std::begin(kCommands), std::end(kCommands),
                                   [&](const CommandSpec& s) { return s.command == req.command; });
  if (spec.parabolic) {
    json s = json::array();
    for (const int i : req.parabolic) s.push_back(i + 1);
    echo["parabolic"] = s;
  }
  if (req.chain) {
    json c = json::array();
    for (const auto id : *req.chain) c.push_back(id + 1);
    echo["chain"] = c;
  }
  return echo;
}

json roots_results(const RootSystem& rs) {
  json roots = json::array();
  for (std::size_t i = 0; i < rs.num_positive(); ++i) {
    const auto& r = rs.positive_roots()[i];
    roots.push_back(json{{"index", i + 1},
                         {"simple", simple_coords_json(r)},
                         {"weight", weight_json(r.fw_coords)},
                         {"coroot", r.coroot_coords},
                         {"height", r.height()}});
  }
  return json{{"cartan_matrix", rs.cartan_matrix()},
              {"symmetrizer", rs.symmetrizer()},
              {"rho", weight_json(rs.rho())},
              {"num_positive", rs.num_positive()},
              {"weyl_order", rs.weyl_order()},
              {"positive_roots", roots}};
}

json irrep_results(const RootSystem& rs, const GModule& m, const Weight& lambda) {
  json mults = json::array();
  for (const auto& [w, k] : weight_multiplicities(m)) mults.push_back(json{{"weight", weight_json(w)}, {"mult", k}});
  json basis = json::array();
  for (const auto& w : m.basis_weights()) basis.push_back(weight_json(w));
  json action = json::array();
  for (std::size_t x = 0; x < m.algebra().dimension(); ++x) {
    json entries = json::array();
    const auto& a = m.action(x);
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (const auto& [r, v] : a.column(c)) entries.push_back(json{r, c, format_rational(v)});
    action.push_back(json{{"generator", m.algebra().basis_name(x)}, {"entries", entries}});
  }
  return json{{"dimension", m.dimension()},
              {"weyl_dimension", weyl_dimension(rs, lambda).get_str()},
              {"lowest_weight", weight_json(m.lowest_weight())},
              {"multiplicities", mults},
              {"basis_weights", basis},
              {"action", action}};
}

json prediction_json(const KostantPrediction& pred) {
  json entries = json::array();
  for (const auto& e : pred.entries)
    entries.push_back(
        json{{"degree", e.degree}, {"weight", weight_json(e.weight)}, {"w", word_json(e.w)}, {"mult", e.multiplicity}});
  return json{{"entries", entries}, {"expanded", table_json(pred.expanded)}, {"total_dims", pred.expanded.total_dims}};
}

json discrepancies_json(const std::vector<Discrepancy>& ds) {
  json out = json::array();
  for (const auto& d : ds)
    out.push_back(json{{"degree", d.degree},
                       {"weight", weight_json(d.weight)},
                       {"predicted", d.predicted},
                       {"computed", d.computed}});
  return out;
}

json parabolic_json(const ParabolicSubset& p) {
  json nil = json::array();
  for (const auto& r : p.nilradical_roots) nil.push_back(simple_coords_json(r));
  return json{{"nilradical_dimension", p.dimension()}, {"nilradical", nil}, {"sigma", weight_json(p.sigma)}};
}

struct HomologyRun {
  HomologyTable table;
  json checks;
};

HomologyRun run_complex(const GModule& m, const ParabolicSubset& p, Variant v, const Request& req) {
  const KoszulConfig kc{req.threads};
  const auto complex = build_complex(m, p, v, kc);
  HomologyRun run{homology(complex, kc), json::object()};
  const auto euler = euler_characteristic(run.table, complex);
  run.checks["exactness_violations"] = exactness_violations(complex);
  run.checks["euler"] = json{{"from_table", euler.from_table.get_str()},
                             {"from_chains", euler.from_chains.get_str()},
                             {"holds", euler.holds()}};
  return run;
}

bool checks_hold(const json& checks) {
  return checks["exactness_violations"].empty() && checks["euler"]["holds"].get<bool>();
}

Report execute_unchecked(const Request& req) {
  Report rep;
  if (req.command == Command::SelfTest) {
    rep.request = request_echo(req, nullptr);
    const auto result = run_selftest(req.threads);
    json checks = json::array();
    for (const auto& c : result.checks)
      checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    rep.results = json{{"passed", result.passed()}, {"failed", result.failed()}, {"checks", checks}};
    rep.status = result.failed() == 0 ? Status::Ok : Status::Mismatch;
    return rep;
  }

  const auto rs = build_root_system(req.type, req.rank);
  rep.request = request_echo(req, &rs);
  if (req.command == Command::Roots) {
    rep.results = roots_results(rs);
    return rep;
  }
  const Weight& lambda = *req.lambda;

  if (req.command == Command::ComplexGroup) {
    const auto chi = CharacterParam::from_lambda(rs, lambda);
    std::vector<ChainOfSimpleRoots> chains;
    if (req.chain)
      chains.push_back(validate_chain(rs, *req.chain));
    else
      chains = enumerate_chains(rs, rs.num_positive());
    json preds = json::array();
    for (const auto& chain : chains) {
      const auto p = predict_standard(rs, chi, chain);
      json ids = json::array();
      json roots = json::array();
      for (std::size_t j = 0; j < chain.size(); ++j) {
        ids.push_back(chain.root_ids[j] + 1);
        roots.push_back(simple_coords_json(chain.roots[j]));
      }
      preds.push_back(json{{"chain", ids},
                           {"chain_roots", roots},
                           {"w", word_json(chain.weyl_element)},
                           {"length", length(rs, chain.weyl_element)},
                           {"degree", p.degree},
                           {"chi_w", weight_json(p.chi_w_differential)},
                           {"character", weight_json(p.character_differential)}});
    }
    rep.results = json{{"num_positive", rs.num_positive()}, {"predictions", preds}};
    return rep;
  }

  const auto alg = std::make_shared<const ChevalleyAlgebra>(load_or_build_chevalley(rs, req.cache_dir));
  const ModuleConfig mc{req.max_dim};

  if (req.command == Command::Kostant) {
    const auto pred = req.parabolic.empty() ? predict_borel(rs, lambda) : predict_parabolic(*alg, lambda, req.parabolic, mc);
    rep.results = parabolic_json(pred.parabolic);
    rep.results["prediction"] = prediction_json(pred);
    return rep;
  }

  const auto module = build_irrep(alg, lambda, mc);
  if (req.command == Command::Irrep) {
    rep.results = irrep_results(rs, module, lambda);
    return rep;
  }

  const auto p = parabolic(rs, req.parabolic);
  rep.results = parabolic_json(p);
  rep.results["module_dimension"] = module.dimension();

  if (req.command == Command::Cohomology) {
    const auto co = run_complex(module, p, Variant::Cohomology, req);
    rep.results["table"] = table_json(co.table);
    rep.results["total_dims"] = co.table.total_dims;
    rep.results["checks"] = co.checks;
    rep.status = checks_hold(co.checks) ? Status::Ok : Status::Mismatch;
    return rep;
  }

  const auto h = run_complex(module, p, Variant::Homology, req);
  const auto pred = req.parabolic.empty() ? predict_borel(rs, lambda) : predict_parabolic(*alg, lambda, req.parabolic, mc);
  const auto disc = compare(pred, h.table);
  rep.results["table"] = table_json(h.table);
  rep.results["total_dims"] = h.table.total_dims;
  rep.results["prediction"] = prediction_json(pred);
  rep.results["discrepancies"] = discrepancies_json(disc);
  json checks = h.checks;
  if (p.is_borel()) checks["weight_support_violations"] = weight_support_violations(rs, h.table, lambda);
  bool ok = disc.empty() && checks_hold(checks) &&
            (!checks.contains("weight_support_violations") || checks["weight_support_violations"].empty());

  if (req.command == Command::Duality) {
    const auto co = run_complex(module, p, Variant::Cohomology, req);
    const auto violations = check_duality(h.table, co.table, p);
    json vs = json::array();
    for (const auto& v : violations)
      vs.push_back(json{{"degree", v.degree},
                        {"weight", weight_json(v.weight)},
                        {"homology", v.homology_mult},
                        {"cohomology", v.cohomology_mult}});
    rep.results["cohomology_table"] = table_json(co.table);
    rep.results["cohomology_total_dims"] = co.table.total_dims;
    rep.results["duality_violations"] = vs;
    checks["cohomology"] = co.checks;
    ok = ok && violations.empty();
  }
  rep.results["checks"] = checks;
  rep.status = ok ? Status::Ok : Status::Mismatch;
  return rep;
}

std::string grid(const json& rows, std::size_t degrees) {
  std::vector<std::string> weights;
  std::map<std::pair<std::size_t, std::string>, std::string> cell;
  for (const auto& r : rows) {
    std::string w = "(";
    for (std::size_t i = 0; i < r["weight"].size(); ++i) w += (i ? "," : "") + r["weight"][i].get<std::string>();
    w += ")";
    if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(w);
    cell[{r["degree"].get<std::size_t>(), w}] = std::to_string(r["mult"].get<std::size_t>());
  }
  std::sort(weights.begin(), weights.end());
  std::ostringstream os;
  os << "p";
  for (const auto& w : weights) os << '\t' << w;
  os << '\n';
  for (std::size_t p = 0; p < degrees; ++p) {
    os << p;
    for (const auto& w : weights) {
      const auto it = cell.find({p, w});
      os << '\t' << (it == cell.end() ? "." : it->second);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& s : kCommands)
    if (s.command == c) return s.name;
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Mismatch: return "mismatch";
    case Status::Error: return "error";
  }
  return "?";
}

Request parse(std::span<const std::string> args) {
  CLI::App app{"nhlab: n-homology of finite-dimensional representations", "nhlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  struct Raw {
    std::string type, lambda, parabolic, chain, output = "json", cache_dir;
    long rank = -1;
    long threads = 1;
    long max_dim = 10'000;
  } raw;
  std::map<CLI::App*, const CommandSpec*> specs;
  for (const auto& spec : kCommands) {
    auto* sub = app.add_subcommand(spec.name, spec.description);
    specs[sub] = &spec;
    if (spec.system) {
      sub->add_option("--type", raw.type, "root system type A..G")->required();
      sub->add_option("--rank", raw.rank, "rank")->required();
    }
    if (spec.lambda) sub->add_option("--lambda", raw.lambda, "shifted parameter, comma-separated rationals");
    if (spec.parabolic) sub->add_option("--parabolic", raw.parabolic, "Levi simple roots, 1-based (default: Borel)");
    if (spec.chain) sub->add_option("--chain", raw.chain, "chain of positive roots, 1-based (default: all chains)");
    if (spec.threads) sub->add_option("--threads", raw.threads, "worker threads");
    if (spec.max_dim) sub->add_option("--max-dim", raw.max_dim, "module dimension bound");
    if (spec.cache_dir) sub->add_option("--cache-dir", raw.cache_dir, "structure-constant cache directory");
    sub->add_option("--output", raw.output, "json or table");
  }

  if (!args.empty() && !args[0].starts_with("-") &&
      std::none_of(std::begin(kCommands), std::end(kCommands), [&](const CommandSpec& c) { return args[0] == c.name; }))
    throw usage_error("unknown command '" + args[0] + "'");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  const CommandSpec* spec = nullptr;
  for (const auto& [sub, s] : specs)
    if (sub->parsed()) spec = s;
  Request req;
  req.command = spec->command;

  if (raw.output == "json")
    req.output = OutputFormat::Json;
  else if (raw.output == "table")
    req.output = OutputFormat::Table;
  else
    throw usage_error("--output: expected json or table, got '" + raw.output + "'");
  if (raw.threads < 1) throw usage_error("--threads: must be positive, got " + std::to_string(raw.threads));
  req.threads = static_cast<unsigned>(raw.threads);
  if (raw.max_dim < 1) throw usage_error("--max-dim: must be positive, got " + std::to_string(raw.max_dim));
  req.max_dim = static_cast<std::size_t>(raw.max_dim);
  if (!raw.cache_dir.empty()) req.cache_dir = raw.cache_dir;

  if (!spec->system) return req;
  if (raw.type.size() != 1 || raw.type[0] < 'A' || raw.type[0] > 'G')
    throw usage_error("--type: unknown root system type '" + raw.type + "'");
  if (raw.rank < 1 || raw.rank > 64 || !is_valid_type(raw.type[0], static_cast<int>(raw.rank)))
    throw usage_error("--rank: no root system " + raw.type + std::to_string(raw.rank));
  req.type = raw.type[0];
  req.rank = static_cast<int>(raw.rank);

  if (spec->lambda) {
    if (raw.lambda.empty()) throw usage_error("--lambda is required for " + std::string(spec->name));
    const auto parts = split_list(raw.lambda);
    if (parts.size() != static_cast<std::size_t>(req.rank))
      throw usage_error("--lambda: expected " + std::to_string(req.rank) + " coordinates, got '" + raw.lambda + "'");
    std::vector<Rational> coords;
    for (const auto& part : parts) coords.push_back(parse_rational(part));
    req.lambda = Weight(std::move(coords));
  }
  for (const auto& token : split_list(raw.parabolic)) {
    const long i = parse_index(token, "--parabolic");
    if (i < 1 || i > req.rank) throw usage_error("--parabolic: index " + token + " out of range 1.." + std::to_string(req.rank));
    if (std::find(req.parabolic.begin(), req.parabolic.end(), i - 1) != req.parabolic.end())
      throw usage_error("--parabolic: index " + token + " repeated");
    req.parabolic.push_back(static_cast<int>(i - 1));
  }
  std::sort(req.parabolic.begin(), req.parabolic.end());
  if (spec->chain && !raw.chain.empty()) {
    const auto rs = build_root_system(req.type, req.rank);
    req.chain.emplace();
    for (const auto& token : split_list(raw.chain)) {
      const long i = parse_index(token, "--chain");
      if (i < 1 || static_cast<std::size_t>(i) > rs.num_positive())
        throw usage_error("--chain: index " + token + " out of range 1.." + std::to_string(rs.num_positive()));
      req.chain->push_back(static_cast<std::size_t>(i - 1));
    }
  }
  return req;
}

Report execute(const Request& req) {
  try {
    return execute_unchecked(req);
  } catch (const Error& e) {
    Report rep;
    try {
      const auto rs = build_root_system(req.type, req.rank);
      rep.request = request_echo(req, &rs);
    } catch (const Error&) {
      rep.request = request_echo(req, nullptr);
    }
    rep.status = Status::Error;
    rep.error = e.what();
    rep.results = json{{"module", e.module()}, {"message", e.what()}};
    return rep;
  }
}

std::string render(const Report& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json out;
    out["version"] = kSchemaVersion;
    out["request"] = report.request;
    out["status"] = to_string(report.status);
    out["results"] = report.results;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << kSchemaVersion << ' ' << report.request.value("command", std::string("?")) << ": " << to_string(report.status)
     << '\n';
  for (const auto& [key, value] : report.request.items())
    if (key != "command") os << key << " = " << value.dump() << '\n';
  const std::size_t degrees = report.results.contains("total_dims") ? report.results["total_dims"].size() : 0;
  for (const auto& [key, value] : report.results.items()) {
    if ((key == "table" || key == "cohomology_table") && degrees) {
      os << key << ":\n" << grid(value, degrees);
    } else if (key == "action" || key == "basis_weights") {
      os << key << ": " << value.size() << " items (see json output)\n";
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << key << ":\n";
      for (const auto& row : value) os << "  " << row.dump() << '\n';
    } else {
      os << key << ": " << value.dump() << '\n';
    }
  }
  return os.str();
}

int exit_code(const Report& report) {
  switch (report.status) {
    case Status::Ok: return 0;
    case Status::Mismatch: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Request req;
  try {
    req = parse(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const Error& e) {
    err << "nhlab: " << e.what() << '\n';
    return 2;
  }
  const auto report = execute(req);
  out << render(report, req.output);
  if (report.status == Status::Error) err << "nhlab: " << report.error << '\n';
  return exit_code(report);
}

}  // namespace nhlab::cli
