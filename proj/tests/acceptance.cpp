// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nhlab/chevalley.hpp"
#include "nhlab/cli.hpp"
#include "nhlab/complexflag.hpp"
#include "nhlab/errors.hpp"
#include "nhlab/koszul.hpp"
#include "nhlab/kostant.hpp"
#include "nhlab/repbuilder.hpp"
#include "nhlab/rootsys.hpp"

using namespace nhlab;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

struct Case {
  char type;
  int rank;
  Weight lambda;
  std::vector<int> levi;  // 0-based

  std::string label() const {
    std::string s = std::string(1, type) + std::to_string(rank) + " lambda=" + lambda.to_string() + " S={";
    for (std::size_t i = 0; i < levi.size(); ++i) s += (i ? "," : "") + std::to_string(levi[i] + 1);
    return s + "}";
  }
};

std::string csv(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) s += (i ? "," : "") + format_rational(w[i]);
  return s;
}

// Product formula at the highest weight w0(lambda + rho).
Integer weyl_dimension_oracle(const RootSystem& rs, const Weight& lambda) {
  const Weight high = act(WeylGroup(rs).longest(), lambda + rs.rho());
  Rational d(1);
  for (const auto& alpha : rs.positive_roots()) d *= pairing(high + rs.rho(), alpha) / pairing(rs.rho(), alpha);
  return d.get_num();
}

std::vector<Case> borel_cases() {
  const std::vector<std::pair<char, int>> systems{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}};
  const std::map<std::string, Weight> asymmetric{
      {"A1", Weight::from_ints({-3})},     {"A2", Weight::from_ints({-1, -2})},     {"B2", Weight::from_ints({-1, -2})},
      {"G2", Weight::from_ints({-2, -1})}, {"A3", Weight::from_ints({-1, -2, -3})},
  };
  std::vector<Case> out;
  for (const auto& [t, r] : systems) {
    const auto rs = build_root_system(t, r);
    out.push_back({t, r, -rs.rho(), {}});
    out.push_back({t, r, Rational(-2) * rs.rho(), {}});
    out.push_back({t, r, asymmetric.at(rs.name()), {}});
  }
  return out;
}

std::vector<Case> parabolic_cases() {
  std::vector<Case> out;
  for (const char t : {'A', 'B'}) {
    const auto rs = build_root_system(t, 2);
    for (const int i : {0, 1}) out.push_back({t, 2, Rational(-2) * rs.rho(), {i}});
  }
  return out;
}

void report(const Criterion& c, bool& all_ok) {
  const bool ok = c.failures.empty() && c.checked > 0;
  all_ok = all_ok && ok;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " (" << c.checked
            << " checks";
  if (!c.failures.empty()) std::cout << ", " << c.failures.size() << " failed";
  std::cout << ")\n";
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "       " << c.failures[i] << '\n';
}

}  // namespace

int main() {
  Criterion kostant{1, "Kostant prediction equals Koszul homology, Borel cases"};
  Criterion parabolic_kostant{2, "parabolic Kostant prediction equals Koszul homology"};
  Criterion duality{3, "homology/cohomology duality with shift sigma"};
  Criterion support{4, "homology weights lie in {w lambda + rho}"};
  Criterion exact{5, "d^2 = 0 on every complex, Euler characteristic vanishes on Borel cases"};
  Criterion modules{6, "module dimensions and characters"};
  Criterion chains{7, "chain predictions for A1 and A2"};
  Criterion determinism{8, "byte-identical JSON across repeated runs and thread counts"};

  std::map<std::string, std::shared_ptr<const ChevalleyAlgebra>> algebras;
  auto algebra = [&](char t, int r) {
    const std::string key = std::string(1, t) + std::to_string(r);
    auto& a = algebras[key];
    if (!a) a = std::make_shared<const ChevalleyAlgebra>(build_chevalley(build_root_system(t, r)));
    return a;
  };

  auto run_case = [&](const Case& c, Criterion& prediction) {
    const std::string label = c.label();
    try {
      const auto alg = algebra(c.type, c.rank);
      const auto& rs = alg->root_system();
      const auto m = build_irrep(alg, c.lambda);

      // criterion 6
      modules.expect(Integer(static_cast<unsigned long>(m.dimension())) == weyl_dimension_oracle(rs, c.lambda),
                     label + ": dimension " + std::to_string(m.dimension()) + " differs from the Weyl formula");
      const auto mult = weight_multiplicities(m);
      bool invariant = true;
      for (const auto& el : weyl_elements(rs))
        for (const auto& [nu, k] : mult) {
          const auto it = mult.find(act(el, nu));
          invariant = invariant && it != mult.end() && it->second == k;
        }
      modules.expect(invariant, label + ": multiplicities are not Weyl invariant");
      modules.expect(bracket_relation_violations(m).empty(), label + ": bracket relations fail");

      const auto p = parabolic(rs, c.levi);
      const auto hc = build_complex(m, p, Variant::Homology);
      const auto cc = build_complex(m, p, Variant::Cohomology);
      const auto h = homology(hc);
      const auto co = homology(cc);

      // criteria 1 and 2
      const auto pred = c.levi.empty() ? predict_borel(rs, c.lambda) : predict_parabolic(*alg, c.lambda, c.levi);
      const auto diff = compare(pred, h);
      prediction.expect(diff.empty(), label + ": " + std::to_string(diff.size()) + " discrepancies");

      // criterion 3
      const auto dv = check_duality(h, co, p);
      duality.expect(dv.empty(), label + ": " + std::to_string(dv.size()) + " duality violations");

      // criterion 5
      exact.expect(exactness_violations(hc).empty(), label + ": boundary does not square to zero");
      exact.expect(exactness_violations(cc).empty(), label + ": coboundary does not square to zero");
      if (c.levi.empty() && p.dimension() >= 1) {
        long euler = 0;
        for (std::size_t q = 0; q < h.total_dims.size(); ++q)
          euler += (q % 2 ? -1L : 1L) * static_cast<long>(h.total_dims[q]);
        exact.expect(euler == 0, label + ": Euler characteristic " + std::to_string(euler));
        exact.expect(euler_characteristic(h, hc).holds(), label + ": Euler identity fails");
      }

      // criterion 4, Borel cases only
      if (c.levi.empty()) {
        std::set<Weight> orbit;
        for (const auto& el : weyl_elements(rs)) orbit.insert(act(el, c.lambda) + rs.rho());
        bool inside = true;
        for (const auto& [key, k] : h.entries) inside = inside && orbit.count(key.second) == 1;
        support.expect(inside, label + ": homology weight outside {w lambda + rho}");
        support.expect(weight_support_violations(rs, h, c.lambda).empty(), label + ": support check reports violations");
      }

      // criterion 8
      for (const char* command : {"homology", "duality"}) {
        std::vector<std::string> args{command, "--type", std::string(1, c.type), "--rank", std::to_string(c.rank),
                                      "--lambda", csv(c.lambda)};
        if (!c.levi.empty()) {
          args.push_back("--parabolic");
          args.push_back(std::to_string(c.levi[0] + 1));
        }
        std::vector<std::string> outputs;
        for (const char* threads : {"1", "4", "1"}) {
          auto a = args;
          a.push_back("--threads");
          a.push_back(threads);
          const auto req = cli::parse(a);
          outputs.push_back(cli::render(cli::execute(req), cli::OutputFormat::Json));
        }
        determinism.expect(outputs[0] == outputs[1] && outputs[0] == outputs[2],
                           label + ": " + command + " output differs between runs");
      }
    } catch (const std::exception& e) {
      prediction.expect(false, label + ": " + e.what());
    }
  };

  for (const auto& c : borel_cases()) run_case(c, kostant);
  for (const auto& c : parabolic_cases()) run_case(c, parabolic_kostant);

  // criterion 6 named examples
  {
    const auto m = build_irrep(algebra('A', 1), Weight::from_ints({-2}));
    modules.expect(weight_multiplicities(m) ==
                       std::map<Weight, std::size_t>{{Weight::from_ints({-1}), 1}, {Weight::from_ints({1}), 1}},
                   "A1 lambda=-2: module is not {-1, 1}");
    const auto adj = build_irrep(algebra('A', 2), Weight::from_ints({-2, -2}));
    const auto mult = weight_multiplicities(adj);
    bool ok = adj.dimension() == 8 && mult.at(Weight::from_ints({0, 0})) == 2 && mult.size() == 7;
    const auto& rs = adj.algebra().root_system();
    for (std::size_t id = 0; id < rs.num_roots(); ++id) {
      const auto it = mult.find(rs.root(id).fw_coords);
      ok = ok && it != mult.end() && it->second == 1;
    }
    modules.expect(ok, "A2 lambda=-2rho: module is not the adjoint with mult(0) = 2");
  }

  // criterion 7
  for (const char* name : {"A1", "A2"}) {
    const auto rs = build_root_system(name[0], name[1] - '0');
    const WeylGroup group(rs);
    const int n = static_cast<int>(rs.num_positive());
    for (const Weight& lambda : {Rational(-1) * rs.rho(), Rational(-2) * rs.rho()}) {
      const auto chi = CharacterParam::from_lambda(rs, lambda);
      std::map<std::size_t, std::set<std::pair<int, Weight>>> by_w;
      for (const auto& chain : enumerate_chains(rs, rs.num_positive())) {
        const auto pred = predict_standard(rs, chi, chain);
        const int ell = length(rs, chain.weyl_element);
        chains.expect(pred.degree == n - ell, std::string(name) + ": chain degree is not N - length(w)");
        chains.expect(ell == static_cast<int>(chain.size()), std::string(name) + ": chain length differs from length(w)");
        by_w[group.index_of(chain.weyl_element)].insert({pred.degree, pred.character_differential});
      }
      chains.expect(by_w.size() == group.size(), std::string(name) + ": some w is not reached by a chain");
      for (const auto& [idx, preds] : by_w)
        chains.expect(preds.size() == 1, std::string(name) + ": prediction depends on more than w");
      const auto empty = predict_standard(rs, chi, validate_chain(rs, {}));
      chains.expect(empty.degree == n && empty.character_differential == lambda + rs.rho(),
                    std::string(name) + ": empty chain is not (N, lambda + rho)");
    }
    if (rs.rank() == 2) {
      const std::vector<std::size_t> bad{*rs.root_id(std::vector<int>{1, 0}), *rs.root_id(std::vector<int>{0, 1})};
      const auto defect = find_chain_defect(rs, bad);
      bool witnessed = defect && defect->position == 1 && defect->decomposition;
      if (witnessed) {
        const auto [a, b] = *defect->decomposition;
        witnessed = rs.root(a).fw_coords + rs.root(b).fw_coords == rs.root(bad[1]).fw_coords;
      }
      chains.expect(witnessed, "A2: chain (alpha1, alpha2) is not rejected with a decomposition witness");
      bool thrown = false;
      try {
        validate_chain(rs, bad);
      } catch (const Error& e) {
        thrown = e.kind() == Error::Kind::Precondition;
      }
      chains.expect(thrown, "A2: validate_chain accepts (alpha1, alpha2)");
    }
    // determinism of the chain listing through the CLI
    std::vector<std::string> args{"complexgroup", "--type", std::string(1, name[0]), "--rank", std::string(1, name[1]),
                                  "--lambda", csv(Rational(-2) * rs.rho())};
    const auto a = cli::render(cli::execute(cli::parse(args)), cli::OutputFormat::Json);
    const auto b = cli::render(cli::execute(cli::parse(args)), cli::OutputFormat::Json);
    determinism.expect(a == b, std::string(name) + ": complexgroup output differs between runs");
  }

  bool all_ok = true;
  for (const auto* c : {&kostant, &parabolic_kostant, &duality, &support, &exact, &modules, &chains, &determinism})
    report(*c, all_ok);
  return all_ok ? 0 : 1;
}
