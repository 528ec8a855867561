#include "gengraph/group.hpp"

#include "gengraph/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gengraph {

ElementSet::ElementSet(std::size_t universe, std::span<const Elem> members) : mask_(universe) {
  for (Elem e : members) mask_.set(e);
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(mask_.count());
  for (auto i = mask_.find_first(); i != boost::dynamic_bitset<>::npos; i = mask_.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

namespace {

// Light's test: the set of elements m with (x m) y == x (m y) for all x, y is
// closed under the product, so it is enough to find a generating set of such
// middles.
bool is_middle(std::span<const Elem> t, std::size_t n, Elem m) {
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xm = t[x * n + m];
    for (std::size_t y = 0; y < n; ++y)
      if (t[static_cast<std::size_t>(xm) * n + y] != t[x * n + t[static_cast<std::size_t>(m) * n + y]])
        return false;
  }
  return true;
}

void check_associative(std::span<const Elem> t, std::size_t n) {
  std::vector<Elem> gens;
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::size_t reachedCount = 1;
  while (reachedCount < n) {
    Elem next = 0;
    while (reached[next]) ++next;
    if (!is_middle(t, n, next)) throw GroupError("Cayley table is not associative");
    gens.push_back(next);
    // Left-normed words in the middles found so far.
    std::vector<Elem> stack;
    for (std::size_t e = 0; e < n; ++e)
      if (reached[e]) stack.push_back(static_cast<Elem>(e));
    while (!stack.empty()) {
      Elem w = stack.back();
      stack.pop_back();
      for (Elem s : gens) {
        Elem ws = t[static_cast<std::size_t>(w) * n + s];
        if (!reached[ws]) {
          reached[ws] = 1;
          ++reachedCount;
          stack.push_back(ws);
        }
      }
    }
  }
}

}  // namespace

Group Group::from_table(std::vector<Elem> table, std::vector<std::string> labels) {
  const std::size_t n = [&] {
    std::size_t k = 0;
    while (k * k < table.size()) ++k;
    return k;
  }();
  if (n == 0 || n * n != table.size()) throw GroupError("Cayley table must be a nonempty n x n array");
  for (Elem e : table)
    if (e >= n) throw GroupError("Cayley table entry out of range");
  for (std::size_t j = 0; j < n; ++j)
    if (table[j] != j || table[j * n] != j) throw GroupError("element 0 is not a two-sided identity");

  Group g;
  g.n_ = n;
  g.inverses_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = std::span<const Elem>(table).subspan(i * n, n);
    auto it = std::find(row.begin(), row.end(), Elem{0});
    if (it == row.end()) throw GroupError("element " + std::to_string(i) + " has no inverse");
    const auto inv = static_cast<std::size_t>(it - row.begin());
    if (table[inv * n + i] != 0) throw GroupError("element " + std::to_string(i) + " has no two-sided inverse");
    g.inverses_[i] = static_cast<Elem>(inv);
  }
  check_associative(table, n);
  g.table_ = std::move(table);

  g.orders_.assign(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    Elem x = static_cast<Elem>(i);
    unsigned k = 1;
    while (x != 0) {
      x = g.mul(x, static_cast<Elem>(i));
      ++k;
    }
    g.orders_[i] = k;
  }

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (labels.size() != n) throw GroupError("label count does not match group order");
  g.labels_ = std::move(labels);
  return g;
}

Elem Group::power(Elem a, std::uint64_t k) const {
  k %= orders_[a];
  Elem r = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1U) r = mul(r, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return r;
}

Elem Group::commutator(Elem a, Elem b) const {
  return mul(mul(inverses_[a], inverses_[b]), mul(a, b));
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (table_[i * n_ + j] != table_[j * n_ + i]) return false;
  return true;
}

bool Group::is_cyclic() const {
  return std::any_of(orders_.begin(), orders_.end(), [&](unsigned o) { return o == n_; });
}

ElementSet closure(const Group& g, std::span<const Elem> seeds) {
  const std::size_t n = g.order();
  ElementSet out(n);
  std::vector<Elem> gens;
  for (Elem s : seeds)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  std::vector<Elem> stack{0};
  out.insert(0);
  while (!stack.empty()) {
    Elem w = stack.back();
    stack.pop_back();
    for (Elem s : gens) {
      Elem ws = g.mul(w, s);
      if (!out.contains(ws)) {
        out.insert(ws);
        stack.push_back(ws);
      }
    }
  }
  out.mark_closed();
  return out;
}

ElementSet closure(const Group& g, const ElementSet& seeds) {
  auto members = seeds.elements();
  return closure(g, members);
}

bool is_generating_pair(const Group& g, Elem a, Elem b) {
  const std::size_t n = g.order();
  if (g.element_order(a) == n || g.element_order(b) == n) return true;
  // Reusable scratch: this sits on the hot path of every graph build.
  thread_local std::vector<std::uint32_t> seen;
  thread_local std::uint32_t stamp = 0;
  thread_local std::vector<Elem> stack;
  if (seen.size() < n) {
    seen.assign(n, 0);
    stamp = 0;
  }
  if (++stamp == 0) {
    std::fill(seen.begin(), seen.end(), 0);
    stamp = 1;
  }
  stack.clear();
  stack.push_back(0);
  seen[0] = stamp;
  std::size_t count = 1;
  const Elem gens[2] = {a, b};
  while (!stack.empty()) {
    Elem w = stack.back();
    stack.pop_back();
    for (Elem s : gens) {
      Elem ws = g.mul(w, s);
      if (seen[ws] != stamp) {
        seen[ws] = stamp;
        if (++count == n) return true;
        stack.push_back(ws);
      }
    }
  }
  return false;
}

std::optional<std::pair<Elem, Elem>> least_generating_pair(const Group& g) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (is_generating_pair(g, a, b)) return std::pair{a, b};
  return std::nullopt;
}

bool is_two_generated(const Group& g) {
  return g.is_cyclic() || least_generating_pair(g).has_value();
}

Subgroup induced_subgroup(const Group& g, const ElementSet& members) {
  auto elems = members.elements();
  if (elems.empty() || elems.front() != 0) throw PreconditionError("subgroup must contain the identity");
  const std::size_t m = elems.size();
  std::vector<Elem> local(g.order(), static_cast<Elem>(-1));
  for (std::size_t i = 0; i < m; ++i) local[elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = g.label(elems[i]);
    for (std::size_t j = 0; j < m; ++j) {
      Elem p = local[g.mul(elems[i], elems[j])];
      if (p == static_cast<Elem>(-1)) throw PreconditionError("element set is not closed under the product");
      table[i * m + j] = p;
    }
  }
  return Subgroup{Group::from_table(std::move(table), std::move(labels)), std::move(elems)};
}

Group direct_product(std::span<const Group> factors) {
  if (factors.empty()) return cyclic_group(1);
  if (factors.size() == 1) return factors.front();
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.order();
  const std::size_t k = factors.size();

  std::vector<std::vector<Elem>> digits(n, std::vector<Elem>(k));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t f = k; f-- > 0;) {
      digits[x][f] = static_cast<Elem>(rest % factors[f].order());
      rest /= factors[f].order();
    }
  }
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t idx = 0;
      for (std::size_t f = 0; f < k; ++f)
        idx = idx * factors[f].order() + factors[f].mul(digits[x][f], digits[y][f]);
      table[x * n + y] = static_cast<Elem>(idx);
    }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "(";
    for (std::size_t f = 0; f < k; ++f) {
      if (f > 0) s += ',';
      s += factors[f].label(digits[x][f]);
    }
    labels[x] = s + ")";
  }
  return Group::from_table(std::move(table), std::move(labels));
}

Group cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Elem>((i + j) % n);
  return Group::from_table(std::move(table));
}

Group read_cayley(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw GroupError("empty Cayley file");
  {
    std::istringstream hs(line);
    std::string magic;
    int version = 0;
    if (!(hs >> magic >> version) || magic != "cayley" || version != 1)
      throw GroupError("Cayley file must start with 'cayley 1'");
  }
  if (!next_line()) throw GroupError("missing group order");
  long long nn = 0;
  {
    std::istringstream ns(line);
    if (!(ns >> nn) || nn <= 0) throw GroupError("invalid group order");
  }
  const auto n = static_cast<std::size_t>(nn);
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line()) throw GroupError("Cayley table truncated at row " + std::to_string(i));
    std::istringstream rs(line);
    long long v = 0;
    std::size_t cols = 0;
    while (rs >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw GroupError("table entry out of range in row " + std::to_string(i));
      table.push_back(static_cast<Elem>(v));
      ++cols;
    }
    if (cols != n || !rs.eof()) throw GroupError("row " + std::to_string(i) + " must hold " + std::to_string(n) + " indices");
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  while (next_line()) {
    std::istringstream ls(line);
    std::string kw, name;
    long long k = -1;
    if (!(ls >> kw >> k >> name) || kw != "label" || k < 0 || static_cast<std::size_t>(k) >= n)
      throw GroupError("malformed trailing line: " + line);
    labels[static_cast<std::size_t>(k)] = name;
  }
  return Group::from_table(std::move(table), std::move(labels));
}

Group load_cayley_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open Cayley file " + path.string());
  return read_cayley(in);
}

void write_cayley(std::ostream& out, const Group& g) {
  const std::size_t n = g.order();
  out << "cayley 1\n" << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << g.mul(static_cast<Elem>(i), static_cast<Elem>(j));
    out << '\n';
  }
  for (std::size_t i = 0; i < n; ++i) out << "label " << i << ' ' << g.label(static_cast<Elem>(i)) << '\n';
}

}  // namespace gengraph
