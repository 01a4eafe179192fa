#include "nhlab/kostant.hpp"

#include <algorithm>
#include <tuple>

#include "nhlab/errors.hpp"

namespace nhlab {

namespace {

constexpr const char* kModule = "kostant";

void require_parameter(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()) || !is_antidominant_regular_integral(rs, lambda))
    throw precondition_error(kModule, "lambda " + lambda.to_string() + " is not antidominant regular integral for " +
                                          rs.name());
}

KostantPrediction entries_for(const RootSystem& rs, const Weight& lambda, std::span<const int> s) {
  require_parameter(rs, lambda);
  KostantPrediction pred{lambda, parabolic(rs, s), {}, {}};
  const WeylGroup group(rs);
  for (const auto& w : coset_reps(rs, group, s, lambda))
    pred.entries.push_back({length(rs, w), act(w, lambda) + rs.rho(), w, 1});
  std::sort(pred.entries.begin(), pred.entries.end(), [](const KostantEntry& a, const KostantEntry& b) {
    return std::tie(a.degree, a.weight) < std::tie(b.degree, b.weight);
  });
  pred.expanded.variant = Variant::Homology;
  pred.expanded.total_dims.assign(pred.parabolic.dimension() + 1, 0);
  return pred;
}

}  // namespace

KostantPrediction predict_borel(const RootSystem& rs, const Weight& lambda) {
  auto pred = entries_for(rs, lambda, {});
  for (const auto& e : pred.entries) {
    pred.expanded.entries[{e.degree, e.weight}] += e.multiplicity;
    pred.expanded.total_dims[static_cast<std::size_t>(e.degree)] += e.multiplicity;
  }
  return pred;
}

KostantPrediction predict_parabolic(const ChevalleyAlgebra& alg, const Weight& lambda,
                                    std::span<const int> levi_simple_indices, ModuleConfig config) {
  const auto& rs = alg.root_system();
  auto pred = entries_for(rs, lambda, levi_simple_indices);
  for (const auto& e : pred.entries)
    for (const auto& [nu, mult] : levi_character(alg, pred.parabolic, e.weight, config)) {
      pred.expanded.entries[{e.degree, nu}] += mult * e.multiplicity;
      pred.expanded.total_dims[static_cast<std::size_t>(e.degree)] += mult * e.multiplicity;
    }
  return pred;
}

KostantPrediction predict_parabolic(const RootSystem& rs, const Weight& lambda,
                                    std::span<const int> levi_simple_indices, ModuleConfig config) {
  if (levi_simple_indices.empty()) return predict_borel(rs, lambda);
  return predict_parabolic(build_chevalley(rs), lambda, levi_simple_indices, config);
}

std::vector<Discrepancy> compare(const KostantPrediction& pred, const HomologyTable& computed) {
  if (computed.variant != Variant::Homology)
    throw precondition_error(kModule, "compare needs a homology table");
  if (computed.total_dims.size() != pred.parabolic.dimension() + 1)
    throw precondition_error(kModule, "compare: table has degrees 0.." + std::to_string(computed.total_dims.size() - 1) +
                                          " but the nilradical has dimension " +
                                          std::to_string(pred.parabolic.dimension()));
  std::map<std::pair<int, Weight>, std::pair<std::size_t, std::size_t>> joined;
  for (const auto& [key, mult] : pred.expanded.entries) joined[key].first = mult;
  for (const auto& [key, mult] : computed.entries) joined[key].second = mult;
  std::vector<Discrepancy> out;
  for (const auto& [key, m] : joined)
    if (m.first != m.second) out.push_back({key.first, key.second, m.first, m.second});
  return out;
}

}  // namespace nhlab
