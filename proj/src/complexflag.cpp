#include "nhlab/complexflag.hpp"

#include <algorithm>
#include <functional>

#include "nhlab/errors.hpp"

namespace nhlab {

namespace {

constexpr const char* kModule = "complexflag";

std::optional<std::size_t> sum_id(const RootSystem& rs, std::size_t a, std::size_t b) {
  const auto& ka = rs.root(a).simple_coords;
  const auto& kb = rs.root(b).simple_coords;
  std::vector<int> k(ka.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
  return rs.root_id(k);
}

// A pair of members of `system` adding up to `target`, if one exists.
std::optional<std::pair<std::size_t, std::size_t>> decomposition(const RootSystem& rs,
                                                                 const std::vector<std::size_t>& system,
                                                                 std::size_t target) {
  for (std::size_t a = 0; a < system.size(); ++a)
    for (std::size_t b = a + 1; b < system.size(); ++b)
      if (sum_id(rs, system[a], system[b]) == target) return std::make_pair(system[a], system[b]);
  return std::nullopt;
}

std::vector<std::size_t> reflect_system(const RootSystem& rs, const Root& alpha, const std::vector<std::size_t>& system) {
  std::vector<std::size_t> out;
  out.reserve(system.size());
  for (const auto id : system) out.push_back(*rs.root_id_of_weight(reflect(alpha, rs.root(id).fw_coords)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> base_system(const RootSystem& rs) {
  std::vector<std::size_t> ids(rs.num_positive());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

std::string root_label(const RootSystem& rs, std::size_t id) {
  std::string s = "[";
  const auto& k = rs.root(id).simple_coords;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + "]";
}

// Roots that may extend a chain whose current positive system is `system`.
std::vector<std::size_t> extensions(const RootSystem& rs, const std::vector<std::size_t>& system) {
  std::vector<std::size_t> out;
  for (const auto id : system)
    if (id < rs.num_positive() && !decomposition(rs, system, id)) out.push_back(id);
  return out;
}

}  // namespace

std::optional<ChainDefect> find_chain_defect(const RootSystem& rs, std::span<const std::size_t> root_ids) {
  auto system = base_system(rs);
  for (std::size_t j = 0; j < root_ids.size(); ++j) {
    const auto id = root_ids[j];
    if (id >= rs.num_roots()) return ChainDefect{j, "root id " + std::to_string(id) + " out of range", std::nullopt};
    if (id >= rs.num_positive())
      return ChainDefect{j, "root " + root_label(rs, id) + " is negative", std::nullopt};
    if (!std::binary_search(system.begin(), system.end(), id))
      return ChainDefect{j, "root " + root_label(rs, id) + " is not in the current positive system", std::nullopt};
    if (const auto dec = decomposition(rs, system, id))
      return ChainDefect{j,
                         "root " + root_label(rs, id) + " = " + root_label(rs, dec->first) + " + " +
                             root_label(rs, dec->second) + " is not simple in the current positive system",
                         dec};
    system = reflect_system(rs, rs.root(id), system);
  }
  return std::nullopt;
}

ChainOfSimpleRoots validate_chain(const RootSystem& rs, std::span<const std::size_t> root_ids) {
  if (const auto defect = find_chain_defect(rs, root_ids))
    throw precondition_error(kModule, "not a chain of simple roots at position " +
                                          std::to_string(defect->position + 1) + ": " + defect->reason);
  ChainOfSimpleRoots chain{{}, {}, WeylElement::identity(rs), {base_system(rs)}};
  for (const auto id : root_ids) {
    const Root& alpha = rs.root(id);
    chain.root_ids.push_back(id);
    chain.roots.push_back(alpha);
    chain.weyl_element = multiply(rs, chain.weyl_element, WeylElement::reflection(rs, alpha));
    chain.positive_systems.push_back(reflect_system(rs, alpha, chain.positive_systems.back()));
  }
  return chain;
}

std::vector<ChainOfSimpleRoots> enumerate_chains(const RootSystem& rs, std::size_t max_length) {
  std::vector<ChainOfSimpleRoots> out;
  std::vector<std::vector<std::size_t>> level{{}};
  std::vector<std::vector<std::size_t>> systems{base_system(rs)};
  for (std::size_t len = 0;; ++len) {
    for (const auto& ids : level) out.push_back(validate_chain(rs, ids));
    if (len == max_length) break;
    std::vector<std::vector<std::size_t>> next;
    std::vector<std::vector<std::size_t>> next_systems;
    for (std::size_t c = 0; c < level.size(); ++c)
      for (const auto id : extensions(rs, systems[c])) {
        auto ids = level[c];
        ids.push_back(id);
        next.push_back(std::move(ids));
        next_systems.push_back(reflect_system(rs, rs.root(id), systems[c]));
      }
    if (next.empty()) break;
    level = std::move(next);
    systems = std::move(next_systems);
  }
  return out;
}

CharacterParam CharacterParam::from_lambda(const RootSystem& rs, const Weight& lambda) {
  return {lambda + rs.rho(), lambda};
}

Weight chi_w(const RootSystem& rs, const ChainOfSimpleRoots& chain) {
  Weight w(static_cast<std::size_t>(rs.rank()));
  for (const auto& alpha : chain.roots) w -= alpha.fw_coords;
  return w;
}

int codim(const RootSystem& rs, const WeylElement& w) { return static_cast<int>(rs.num_positive()) - length(rs, w); }

StandardModulePrediction predict_standard(const RootSystem& rs, const CharacterParam& chi,
                                          const ChainOfSimpleRoots& chain) {
  if (chi.lambda.rank() != static_cast<std::size_t>(rs.rank()) || chi.base_differential != chi.lambda + rs.rho())
    throw precondition_error(kModule, "character differential must equal lambda + rho");
  if (!is_antidominant_regular_integral(rs, chi.lambda))
    throw precondition_error(kModule, "lambda " + chi.lambda.to_string() + " is not antidominant regular integral");
  // Revalidating keeps hand-assembled chains honest.
  const auto checked = validate_chain(rs, chain.root_ids);
  if (!(checked.weyl_element == chain.weyl_element))
    throw precondition_error(kModule, "chain Weyl element does not match its roots");
  const Weight shift = chi_w(rs, checked);
  return {checked, codim(rs, checked.weyl_element), chi.base_differential + shift, shift};
}

}  // namespace nhlab
