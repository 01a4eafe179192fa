#include "nhlab/chevalley.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "nhlab/errors.hpp"

namespace nhlab {

namespace {

constexpr const char* kModule = "chevalley";
constexpr const char* kSchema = "nh-lab/1";

// Structure constants N_{a,b} on root ids, determined from the extraspecial
// pairs by the relations
//   N_{b,a} = -N_{a,b}
//   N_{r1,r2}/(r3,r3) = N_{r2,r3}/(r1,r1) = N_{r3,r1}/(r2,r2)   (r1+r2+r3 = 0)
//   N_{a,b} N_{-a,-b} = -(p+1)^2
//   sum over the three pairings of r1+r2+r3+r4 = 0 of N N / (sum,sum) = 0.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs) : rs_(rs), n_pos_(rs.num_positive()) {
    extraspecial_.assign(n_pos_, {n_pos_, n_pos_});
    for (std::size_t xi = 0; xi < n_pos_; ++xi) {
      if (rs_.positive_roots()[xi].height() == 1) continue;
      for (std::size_t a = 0; a < n_pos_; ++a) {
        const auto b = difference(xi, a);
        if (b && *b < n_pos_) {
          extraspecial_[xi] = {a, *b};
          break;
        }
      }
    }
  }

  std::optional<std::size_t> sum(std::size_t a, std::size_t b) const {
    const auto& ka = rs_.root(a).simple_coords;
    const auto& kb = rs_.root(b).simple_coords;
    std::vector<int> k(ka.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
    return rs_.root_id(k);
  }

  std::optional<std::size_t> difference(std::size_t a, std::size_t b) const { return sum(a, neg(b)); }

  std::size_t neg(std::size_t a) const { return RootSystem::negate_id(a, n_pos_); }

  // Largest p with b - p a a root.
  int string_below(std::size_t a, std::size_t b) const {
    const auto& ka = rs_.root(a).simple_coords;
    const auto& kb = rs_.root(b).simple_coords;
    int p = 0;
    for (;;) {
      std::vector<int> k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = kb[i] - (p + 1) * ka[i];
      if (!rs_.root_id(k)) return p;
      ++p;
    }
  }

  Rational len2(std::size_t a) const { return rs_.inner(rs_.root(a), rs_.root(a)); }

  long get(std::size_t a, std::size_t b) {
    const auto key = std::make_pair(a, b);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const long v = compute(a, b);
    memo_.emplace(key, v);
    return v;
  }

 private:
  long compute(std::size_t a, std::size_t b) {
    const auto c = sum(a, b);
    if (!c) return 0;
    const bool pa = a < n_pos_;
    const bool pb = b < n_pos_;
    Rational value;
    if (pa && pb) {
      const auto [alpha, beta] = extraspecial_[*c];
      const int p = string_below(alpha, beta);
      if (a == alpha && b == beta) return p + 1;
      if (a == beta && b == alpha) return -(p + 1);
      Rational acc = 0;
      if (const auto sa = difference(b, alpha))
        acc -= Rational(get(b, neg(alpha)) * get(a, neg(beta))) / len2(*sa);
      if (const auto ra = difference(a, alpha))
        acc -= Rational(get(neg(alpha), a) * get(b, neg(beta))) / len2(*ra);
      value = len2(*c) / get(neg(alpha), neg(beta)) * acc;
    } else if (!pa && !pb) {
      const int p = string_below(a, b);
      value = Rational(-(p + 1) * (p + 1)) / get(neg(a), neg(b));
    } else {
      const std::size_t minus_c = neg(*c);
      const bool b_matches = (b < n_pos_) == (minus_c < n_pos_);
      if (b_matches)
        value = len2(*c) / len2(a) * get(b, minus_c);
      else
        value = len2(*c) / len2(b) * get(minus_c, a);
    }
    if (value.get_den() != 1) throw std::logic_error("non-integral structure constant");
    return value.get_num().get_si();
  }

  const RootSystem& rs_;
  std::size_t n_pos_;
  std::vector<std::pair<std::size_t, std::size_t>> extraspecial_;
  std::map<std::pair<std::size_t, std::size_t>, long> memo_;
};

std::filesystem::path cache_file(const RootSystem& rs, const std::filesystem::path& dir) {
  return dir / (rs.name() + ".json");
}

std::optional<ChevalleyAlgebra::Table> read_cache(const RootSystem& rs, const std::filesystem::path& path,
                                                  std::size_t dim) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("version") != kSchema || j.at("type") != std::string(1, rs.type_label()) || j.at("rank") != rs.rank() ||
        j.at("dimension") != dim)
      return std::nullopt;
    ChevalleyAlgebra::Table table(dim, std::vector<std::vector<LieTerm>>(dim));
    for (const auto& e : j.at("brackets")) {
      const auto x = e.at(0).get<std::size_t>();
      const auto y = e.at(1).get<std::size_t>();
      const auto z = e.at(2).get<std::size_t>();
      if (x >= dim || y >= dim || z >= dim) return std::nullopt;
      table[x][y].push_back({z, e.at(3).get<long>()});
    }
    return table;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void write_cache(const ChevalleyAlgebra& alg, const std::filesystem::path& path) {
  const auto& rs = alg.root_system();
  nlohmann::ordered_json j;
  j["version"] = kSchema;
  j["type"] = std::string(1, rs.type_label());
  j["rank"] = rs.rank();
  j["dimension"] = alg.dimension();
  auto brackets = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < alg.dimension(); ++x)
    for (std::size_t y = 0; y < alg.dimension(); ++y)
      for (const auto& t : alg.bracket_basis(x, y)) brackets.push_back({x, y, t.index, t.coeff});
  j["brackets"] = std::move(brackets);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) throw resource_error(kModule, "cannot write structure-constant cache " + path.string());
  out << j.dump() << '\n';
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs, Table table) : rs_(std::move(rs)), table_(std::move(table)) {
  const auto n = static_cast<std::size_t>(rs_.rank());
  if (table_.size() != n + rs_.num_roots()) throw std::invalid_argument("structure-constant table has wrong size");
  weights_.reserve(table_.size());
  for (std::size_t i = 0; i < n; ++i) weights_.emplace_back(n);
  for (std::size_t id = 0; id < rs_.num_roots(); ++id) weights_.push_back(rs_.root(id).fw_coords);
}

std::size_t ChevalleyAlgebra::opposite_index(std::size_t index) const {
  if (is_cartan(index)) throw std::invalid_argument("opposite_index of a Cartan element");
  return root_index(RootSystem::negate_id(root_id(index), rs_.num_positive()));
}

std::string ChevalleyAlgebra::basis_name(std::size_t index) const {
  if (is_cartan(index)) return "H" + std::to_string(index + 1);
  std::string s = "E[";
  const auto& k = rs_.root(root_id(index)).simple_coords;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + "]";
}

long ChevalleyAlgebra::structure_constant(std::size_t alpha_id, std::size_t beta_id) const {
  for (const auto& t : table_[root_index(alpha_id)][root_index(beta_id)])
    if (!is_cartan(t.index)) return t.coeff;
  return 0;
}

ChevalleyAlgebra build_chevalley(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  const std::size_t n_roots = rs.num_roots();
  const std::size_t dim = n + n_roots;
  StructureConstants sc(rs);
  ChevalleyAlgebra::Table table(dim, std::vector<std::vector<LieTerm>>(dim));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n_roots; ++a) {
      const long c = rs.root(a).fw_coords[i].get_num().get_si();
      if (c == 0) continue;
      table[i][n + a].push_back({n + a, c});
      table[n + a][i].push_back({n + a, -c});
    }
  for (std::size_t a = 0; a < n_roots; ++a)
    for (std::size_t b = 0; b < n_roots; ++b) {
      if (b == sc.neg(a)) {
        const auto& co = rs.root(a).coroot_coords;
        for (std::size_t i = 0; i < n; ++i)
          if (co[i] != 0) table[n + a][n + b].push_back({i, co[i]});
      } else if (const auto c = sc.sum(a, b)) {
        table[n + a][n + b].push_back({n + *c, sc.get(a, b)});
      }
    }
  return ChevalleyAlgebra(rs, std::move(table));
}

ChevalleyAlgebra load_or_build_chevalley(const RootSystem& rs, const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return build_chevalley(rs);
  const auto path = cache_file(rs, *cache_dir);
  const std::size_t dim = static_cast<std::size_t>(rs.rank()) + rs.num_roots();
  if (auto table = read_cache(rs, path, dim)) return ChevalleyAlgebra(rs, std::move(*table));
  auto alg = build_chevalley(rs);
  write_cache(alg, path);
  return alg;
}

LieElement bracket(const ChevalleyAlgebra& alg, const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [i, a] : x) {
    if (i >= alg.dimension()) throw precondition_error(kModule, "bracket: basis index out of range");
    for (const auto& [j, b] : y) {
      if (j >= alg.dimension()) throw precondition_error(kModule, "bracket: basis index out of range");
      for (const auto& t : alg.bracket_basis(i, j)) out[t.index] += a * b * t.coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace nhlab
