#include "realk/groups.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include <nlohmann/json.hpp>

namespace realk {

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& generators,
                                           std::size_t bound, std::string name) {
  std::size_t degree = generators.empty() ? 1 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw Error("from_permutations: generators act on different sets");
    if (!is_permutation(p)) throw Error("from_permutations: generator is not a bijection");
  }

  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;

  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};

  // BFS layers; each layer's new elements are sorted lexicographically before
  // numbering, so the ordering is canonical for the generating set.
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<Perm> fresh;
    for (auto ei : frontier)
      for (const auto& gen : generators) {
        Perm np = compose(gen, elems[ei]);
        if (!index.count(np)) {
          index.emplace(np, SIZE_MAX);  // mark seen, number later
          fresh.push_back(std::move(np));
        }
      }
    std::sort(fresh.begin(), fresh.end());
    frontier.clear();
    for (auto& np : fresh) {
      if (elems.size() >= bound)
        throw TooLarge("from_permutations: closure exceeds bound " + std::to_string(bound));
      index[np] = elems.size();
      frontier.push_back(elems.size());
      elems.push_back(std::move(np));
    }
  }

  FiniteGroup g;
  g.n_ = elems.size();
  g.name_ = std::move(name);
  g.mult_.resize(g.n_ * g.n_);
  for (std::size_t a = 0; a < g.n_; ++a)
    for (std::size_t b = 0; b < g.n_; ++b)
      g.mult_[a * g.n_ + b] = static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));
  g.identity_ = 0;
  // Composition of bijections is associative, so only identity/inverses need
  // checking here.
  g.finish(/*verify_associativity=*/false);
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::size_t>>& table,
                                    std::string name) {
  std::size_t n = table.size();
  if (n == 0 || n > 5000) throw TooLarge("from_table: order out of range");
  FiniteGroup g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.mult_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error("from_table: table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw Error("from_table: entry out of range");
      g.mult_[i * n + j] = static_cast<std::uint16_t>(table[i][j]);
    }
  }
  // Locate the two-sided identity.
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("from_table: no identity element");
  g.finish(/*verify_associativity=*/true);
  return g;
}

void FiniteGroup::finish(bool verify_associativity) {
  if (verify_associativity) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("group law: associativity fails");
  }
  inv_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inv_[a] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    if (!found) throw Error("group law: element without inverse");
  }
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

ClassData conjugacy_data(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ClassData d;
  d.class_of.assign(n, SIZE_MAX);
  for (std::size_t a = 0; a < n; ++a) {
    if (d.class_of[a] != SIZE_MAX) continue;
    std::vector<std::size_t> cls;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t c = g.mul(g.mul(x, a), g.inv(x));
      if (d.class_of[c] == SIZE_MAX) {
        d.class_of[c] = d.classes.size();
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    d.representatives.push_back(cls.front());
    d.sizes.push_back(cls.size());
    d.element_orders.push_back(g.element_order(cls.front()));
    d.classes.push_back(std::move(cls));
  }

  const std::size_t s = d.classes.size();
  d.squaring_map.assign(s, 0);
  d.inverse_map.assign(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t r = d.representatives[i];
    d.squaring_map[i] = d.class_of[g.mul(r, r)];
    d.inverse_map[i] = d.class_of[g.inv(r)];
  }
  // Well-definedness, exhaustively: conjugate elements have conjugate squares
  // and inverses.
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t i = d.class_of[a];
    if (d.class_of[g.mul(a, a)] != d.squaring_map[i])
      throw Error("conjugacy_data: squaring map not well-defined");
    if (d.class_of[g.inv(a)] != d.inverse_map[i])
      throw Error("conjugacy_data: inverse map not well-defined");
  }
  for (std::size_t i = 0; i < s; ++i)
    if (d.inverse_map[d.inverse_map[i]] != i)
      throw Error("conjugacy_data: inverse map is not an involution");
  return d;
}

IntMatrix class_matrix(const FiniteGroup& g, const ClassData& d, std::size_t i) {
  const std::size_t s = d.classes.size();
  if (i >= s) throw Error("class_matrix: class index out of range");
  IntMatrix m(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    std::size_t rj = d.representatives[j];
    for (std::size_t x : d.classes[i]) m.at(j, d.class_of[g.mul(x, rj)]) += 1;
  }
  return m;
}

FiniteGroup group_from_json(const std::string& json_text, std::size_t bound) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("group file: bad JSON: ") + e.what());
  }
  std::string name = j.value("name", "G");
  if (j.contains("permutations")) {
    std::vector<std::vector<std::size_t>> gens;
    for (const auto& p : j.at("permutations")) gens.push_back(p.get<std::vector<std::size_t>>());
    return FiniteGroup::from_permutations(gens, bound, name);
  }
  if (j.contains("table")) {
    std::vector<std::vector<std::size_t>> table;
    for (const auto& r : j.at("table")) table.push_back(r.get<std::vector<std::size_t>>());
    return FiniteGroup::from_table(table, name);
  }
  throw FormatError("group file: expected \"permutations\" or \"table\"");
}

namespace builtins {

FiniteGroup quaternion8() {
  // Left regular action of Q8 = {1,-1,i,-i,j,-j,k,-k} on itself.
  // Indices: 1=0, -1=1, i=2, -i=3, j=4, -j=5, k=6, -k=7.
  auto qmul = [](std::size_t a, std::size_t b) -> std::size_t {
    auto unit = [](std::size_t x) { return x / 2; };   // 0:1, 1:i, 2:j, 3:k
    auto sign = [](std::size_t x) { return x % 2; };   // 0:+, 1:-
    static const std::size_t utab[4][4] = {            // unit part of product
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // i*j=k, j*k=i, k*i=j pick up +; the reversed products pick up -.
    static const std::size_t cross[4][4] = {
        {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    std::size_t ua = unit(a), ub = unit(b);
    std::size_t u = utab[ua][ub];
    std::size_t s = sign(a) ^ sign(b);
    if (ua != 0 && ub != 0) {
      if (ua == ub) s ^= 1;                      // i^2 = j^2 = k^2 = -1
      else s ^= cross[ua][ub];                   // anti-cyclic products pick up -1
    }
    return 2 * u + s;
  };
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t gen : {2u, 4u}) {  // i and j generate
    std::vector<std::size_t> p(8);
    for (std::size_t x = 0; x < 8; ++x) p[x] = qmul(gen, x);
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(gens, 16, "Q8");
}

FiniteGroup dihedral8() {
  // Rotation and reflection of the square 0-1-2-3.
  std::vector<std::size_t> r{1, 2, 3, 0};
  std::vector<std::size_t> s{0, 3, 2, 1};
  return FiniteGroup::from_permutations({r, s}, 16, "D8");
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic: order must be positive");
  if (n == 1) return FiniteGroup::from_permutations({}, 2, "Z1");
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return FiniteGroup::from_permutations({c}, n + 1, "Z" + std::to_string(n));
}

FiniteGroup symmetric(std::size_t n) {
  if (n < 1 || n > 6) throw Error("symmetric: supported range is 1..6");
  if (n == 1) return FiniteGroup::from_permutations({}, 2, "S1");
  std::vector<std::size_t> t(n), c(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = c[i] = i;
  std::swap(t[0], t[1]);
  for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return FiniteGroup::from_permutations({t, c}, 1000, "S" + std::to_string(n));
}

FiniteGroup group_by_name(const std::string& name) {
  if (name == "Q8") return quaternion8();
  if (name == "D8") return dihedral8();
  if (name.size() > 1 && name[0] == 'Z') {
    std::size_t n = std::stoul(name.substr(1));
    return cyclic(n);
  }
  if (name.size() == 2 && name[0] == 'S' && name[1] >= '1' && name[1] <= '6')
    return symmetric(name[1] - '0');
  throw FormatError("unknown builtin group: " + name +
                    " (available: Q8, D8, Zn, S1..S6)");
}

}  // namespace builtins

}  // namespace realk
