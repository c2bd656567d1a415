#include "qfrob/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "qfrob/errors.hpp"

namespace qfrob {

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<uint32_t> table,
                                    std::vector<std::string> names) {
  if (order == 0) throw NotAGroupError("a group has at least one element");
  if (order > kMaxTableOrder)
    throw NotAGroupError("order " + std::to_string(order) + " exceeds the table cap " +
                         std::to_string(kMaxTableOrder));
  if (table.size() != order * order) throw NotAGroupError("multiplication table size mismatch");
  for (uint32_t x : table) {
    if (x >= order) throw NotAGroupError("table entry out of range: " + std::to_string(x));
  }
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  if (names.empty()) {
    names.reserve(order);
    for (std::size_t i = 0; i < order; ++i) names.push_back("g" + std::to_string(i));
  }
  g.names_ = std::move(names);
  g.validate();
  return g;
}

void FiniteGroup::validate() {
  const std::size_t n = order_;

  // Identity: a two-sided unit.
  bool found = false;
  for (uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (uint32_t a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw NotAGroupError("no two-sided identity element");

  // Inverses.
  inverse_.assign(n, 0);
  for (uint32_t a = 0; a < n; ++a) {
    bool ok = false;
    for (uint32_t b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        ok = true;
        break;
      }
    }
    if (!ok)
      throw NotAGroupError("element " + name_of(a) + " (index " + std::to_string(a) +
                           ") has no two-sided inverse");
  }

  // Associativity: exhaustive at small orders, randomized spot checks above.
  auto check = [&](uint32_t a, uint32_t b, uint32_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw NotAGroupError("associativity fails at (" + std::to_string(a) + ", " +
                           std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b)
        for (uint32_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(n - 1));
    for (int i = 0; i < 200000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<uint32_t>>& generators,
                                           std::size_t closure_bound) {
  if (generators.empty()) throw NotAGroupError("no permutation generators given");
  const std::size_t degree = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw NotAGroupError("generators act on different point sets");
    std::vector<bool> seen(degree, false);
    for (uint32_t x : p) {
      if (x >= degree || seen[x]) throw NotAGroupError("generator is not a permutation");
      seen[x] = true;
    }
  }

  std::vector<uint32_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<uint32_t>(i);
  auto compose = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = a[b[i]];
    return out;
  };

  // Breadth-first closure under right multiplication by the generators.
  std::vector<std::vector<uint32_t>> elements{id};
  std::map<std::vector<uint32_t>, uint32_t> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = compose(elements[head], gen);
      if (index.emplace(next, static_cast<uint32_t>(elements.size())).second) {
        if (elements.size() >= closure_bound)
          throw ClosureBoundError("permutation closure exceeds the bound of " +
                                  std::to_string(closure_bound) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elements) {
    // Cycle notation for readability.
    std::string s;
    std::vector<bool> used(degree, false);
    for (std::size_t start = 0; start < degree; ++start) {
      if (used[start] || p[start] == start) continue;
      s += "(" + std::to_string(start + 1);
      used[start] = true;
      for (uint32_t x = p[start]; x != start; x = p[x]) {
        used[x] = true;
        s += " " + std::to_string(x + 1);
      }
      s += ")";
    }
    names.push_back(s.empty() ? "()" : s);
  }
  return from_table(n, std::move(table), std::move(names));
}

ClassData conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ClassData out;
  out.class_of.assign(n, 0);
  out.centralizer_order.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (uint32_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<uint32_t> cls;
    for (uint32_t h = 0; h < n; ++h) {
      uint32_t c = g.mul(g.mul(h, a), g.inverse(h));
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    const uint32_t idx = static_cast<uint32_t>(out.classes.size());
    for (uint32_t c : cls) out.class_of[c] = idx;
    out.classes.push_back(std::move(cls));
  }
  for (uint32_t a = 0; a < n; ++a) {
    std::uint64_t cent = 0;
    for (uint32_t h = 0; h < n; ++h)
      if (g.mul(a, h) == g.mul(h, a)) ++cent;
    out.centralizer_order[a] = cent;
    // Orbit-stabilizer bookkeeping must balance exactly.
    if (cent * out.classes[out.class_of[a]].size() != n)
      throw CrossCheckError("orbit-stabilizer identity fails at element " + std::to_string(a));
  }
  return out;
}

namespace {

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw NotAGroupError("cyclic group needs n >= 1");
  std::vector<uint32_t> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = "r" + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<uint32_t>((a + b) % n);
  }
  auto g = FiniteGroup::from_table(n, std::move(table), std::move(names));
  g.set_name("C" + std::to_string(n));
  return g;
}

FiniteGroup dihedral_group(std::size_t n) {
  // Order 2n as symmetries of the n-gon: index k < n is the rotation
  // v -> v + k, index n + k the reflection v -> k - v. mul(a, b) applies b
  // first, then a.
  if (n == 0) throw NotAGroupError("dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  auto is_rot = [&](std::size_t i) { return i < n; };
  std::vector<uint32_t> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t ka = a % n;
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t kb = b % n;
      std::size_t out;
      if (is_rot(a) && is_rot(b)) {
        out = (ka + kb) % n;
      } else if (is_rot(a)) {  // rotation after reflection
        out = n + (ka + kb) % n;
      } else if (is_rot(b)) {  // reflection after rotation
        out = n + (ka + n - kb) % n;
      } else {
        out = (ka + n - kb) % n;
      }
      table[a * order + b] = static_cast<uint32_t>(out);
    }
  }
  std::vector<std::string> names(order);
  for (std::size_t k = 0; k < n; ++k) {
    names[k] = "r" + std::to_string(k);
    names[n + k] = "s" + std::to_string(k);
  }
  auto g = FiniteGroup::from_table(order, std::move(table), std::move(names));
  g.set_name("D" + std::to_string(n));
  return g;
}

FiniteGroup symmetric_group(std::size_t m) {
  std::vector<std::vector<uint32_t>> gens;
  std::vector<uint32_t> transposition(m), cycle(m);
  for (std::size_t i = 0; i < m; ++i) transposition[i] = cycle[i] = static_cast<uint32_t>(i);
  std::swap(transposition[0], transposition[1]);
  for (std::size_t i = 0; i < m; ++i) cycle[i] = static_cast<uint32_t>((i + 1) % m);
  gens.push_back(transposition);
  gens.push_back(cycle);
  auto g = FiniteGroup::from_permutations(gens);
  g.set_name("S" + std::to_string(m));
  return g;
}

FiniteGroup quaternion_group() {
  // 1, -1, i, -i, j, -j, k, -k with the usual relations.
  const std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto sign = [](uint32_t x) { return x & 1U; };
  auto axis = [](uint32_t x) { return x >> 1U; };  // 0:1, 1:i, 2:j, 3:k
  // axis multiplication table and sign of the product
  static const uint32_t ax_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const uint32_t ax_neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<uint32_t> table(64);
  for (uint32_t a = 0; a < 8; ++a) {
    for (uint32_t b = 0; b < 8; ++b) {
      uint32_t ax = ax_mul[axis(a)][axis(b)];
      uint32_t s = sign(a) ^ sign(b) ^ ax_neg[axis(a)][axis(b)];
      table[a * 8 + b] = (ax << 1U) | s;
    }
  }
  auto g = FiniteGroup::from_table(8, std::move(table), names);
  g.set_name("Q8");
  return g;
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  if (name == "Q8") return quaternion_group();
  if (name.size() > 1 && (name[0] == 'C' || name[0] == 'D')) {
    std::size_t n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(name[i]))) { n = 0; break; }
      n = n * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    if (n > 0) return name[0] == 'C' ? cyclic_group(n) : dihedral_group(n);
  }
  throw Error("unknown builtin group '" + name + "' (try C<n>, D<n>, S3, S4, Q8)");
}

namespace {

std::vector<uint32_t> parse_cycles(const std::string& line, std::size_t degree_hint) {
  // "(1 2)(3 4 5)" with 1-based points; "()" is the identity.
  std::vector<std::pair<uint32_t, uint32_t>> moves;
  std::size_t degree = degree_hint;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < line.size() && isspace(static_cast<unsigned char>(line[i]))) ++i; };
  skip_ws();
  while (i < line.size()) {
    if (line[i] != '(') throw Error("expected '(' in cycle notation: " + line);
    ++i;
    std::vector<uint32_t> cycle;
    skip_ws();
    while (i < line.size() && line[i] != ')') {
      std::size_t start = i;
      while (i < line.size() && isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i == start) throw Error("expected point number in cycle notation: " + line);
      unsigned long v = std::stoul(line.substr(start, i - start));
      if (v == 0) throw Error("cycle points are 1-based: " + line);
      cycle.push_back(static_cast<uint32_t>(v - 1));
      degree = std::max<std::size_t>(degree, v);
      skip_ws();
      if (i < line.size() && line[i] == ',') { ++i; skip_ws(); }
    }
    if (i == line.size()) throw Error("unterminated cycle: " + line);
    ++i;  // ')'
    skip_ws();
    for (std::size_t k = 0; k < cycle.size(); ++k)
      moves.emplace_back(cycle[k], cycle[(k + 1) % cycle.size()]);
  }
  std::vector<uint32_t> perm(degree);
  for (std::size_t p = 0; p < degree; ++p) perm[p] = static_cast<uint32_t>(p);
  for (auto [from, to] : moves) {
    if (perm[from] != from) throw Error("point repeated across cycles: " + line);
    perm[from] = to;
  }
  return perm;
}

}  // namespace

FiniteGroup parse_group_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(a, b - a + 1));
  }
  if (lines.empty()) throw Error("empty group file");

  std::istringstream header(lines[0]);
  std::string kind;
  header >> kind;
  if (kind == "perm") {
    std::vector<std::vector<uint32_t>> gens;
    std::size_t degree = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto p = parse_cycles(lines[i], degree);
      degree = std::max(degree, p.size());
      gens.push_back(std::move(p));
    }
    if (gens.empty()) throw Error("perm group file has no generators");
    for (auto& p : gens) {
      const std::size_t old = p.size();
      p.resize(degree);
      for (std::size_t x = old; x < degree; ++x) p[x] = static_cast<uint32_t>(x);
    }
    return FiniteGroup::from_permutations(gens);
  }
  if (kind == "order") {
    std::size_t n = 0;
    if (!(header >> n) || n == 0) throw Error("bad order header in group file");
    std::vector<uint32_t> table;
    table.reserve(n * n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::istringstream row(lines[i]);
      long v;
      while (row >> v) {
        if (v < 1 || static_cast<std::size_t>(v) > n)
          throw Error("table entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        table.push_back(static_cast<uint32_t>(v - 1));
      }
    }
    if (table.size() != n * n)
      throw Error("expected " + std::to_string(n * n) + " table entries, got " +
                  std::to_string(table.size()));
    return FiniteGroup::from_table(n, std::move(table));
  }
  throw Error("group file must start with 'order n' or 'perm'");
}

}  // namespace qfrob
