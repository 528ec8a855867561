#include "gengraph/spec.hpp"

#include "gengraph/errors.hpp"

#include <cctype>
#include <fstream>
#include <map>

namespace gengraph {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec spec;
    skip_ws();
    if (at_end()) throw SpecError("empty group spec", pos_);
    spec.factors.push_back(factor());
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (!separator()) throw SpecError("expected 'x' between factors", pos_);
      skip_ws();
      if (at_end()) throw SpecError("missing factor after 'x'", pos_);
      spec.factors.push_back(factor());
    }
    return spec;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool consume(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }
  bool separator() { return consume("x") || consume("\xC3\x97"); }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1'000'000'000ULL) throw SpecError("integer too large", start);
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw SpecError("expected an integer", start);
    return v;
  }

  Factor factor() {
    const std::size_t start = pos_;
    Factor f;
    if (consume("Heis")) {
      const std::size_t at = pos_;
      f.kind = Factor::Kind::Heisenberg;
      f.n = integer();
      if (f.n % 2 == 0 || !is_prime(f.n)) throw SpecError("Heisenberg parameter must be an odd prime", at);
    } else if (consume("Ex(")) {
      const std::size_t at = pos_;
      f.kind = Factor::Kind::ExampleFamily;
      f.n = integer();
      if (f.n < 1) throw SpecError("Ex parameter must be at least 1", at);
      if (!consume(")")) throw SpecError("expected ')'", pos_);
    } else if (consume("file:")) {
      f.kind = Factor::Kind::CayleyFile;
      const std::size_t at = pos_;
      while (!at_end() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      f.path = std::string(s_.substr(at, pos_ - at));
      if (f.path.empty()) throw SpecError("empty file path", at);
    } else if (consume("C")) {
      const std::size_t at = pos_;
      f.kind = Factor::Kind::Cyclic;
      f.n = integer();
      if (f.n < 1) throw SpecError("cyclic order must be at least 1", at);
      if (consume("^")) {
        const std::size_t kat = pos_;
        f.kind = Factor::Kind::CyclicPower;
        f.k = integer();
        if (f.k < 1) throw SpecError("exponent must be at least 1", kat);
      }
    } else {
      throw SpecError("expected C, Heis, Ex( or file:", start);
    }
    return f;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::uint64_t cayley_file_order(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open Cayley file " + path);
  std::string magic;
  int version = 0;
  long long n = 0;
  if (!(in >> magic >> version >> n) || magic != "cayley" || version != 1 || n <= 0)
    throw GroupError("invalid Cayley file header in " + path);
  return static_cast<std::uint64_t>(n);
}

std::uint64_t factor_order(const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::Cyclic: return f.n;
    case Factor::Kind::CyclicPower: return ipow(f.n, static_cast<unsigned>(f.k));
    case Factor::Kind::Heisenberg: return f.n * f.n * f.n;
    case Factor::Kind::ExampleFamily: return example_family_order(static_cast<unsigned>(f.n));
    case Factor::Kind::CayleyFile: return cayley_file_order(f.path);
  }
  return 0;
}

Group build_factor(const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::Cyclic: return cyclic_group(f.n);
    case Factor::Kind::CyclicPower: {
      std::vector<Group> copies(f.k, cyclic_group(f.n));
      return direct_product(copies);
    }
    case Factor::Kind::Heisenberg: return heisenberg_group(f.n);
    case Factor::Kind::ExampleFamily: return example_family_group(static_cast<unsigned>(f.n));
    case Factor::Kind::CayleyFile: return load_cayley_file(f.path);
  }
  throw GroupError("unknown factor kind");
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    if (i > 0) out += " x ";
    switch (f.kind) {
      case Factor::Kind::Cyclic: out += "C" + std::to_string(f.n); break;
      case Factor::Kind::CyclicPower: out += "C" + std::to_string(f.n) + "^" + std::to_string(f.k); break;
      case Factor::Kind::Heisenberg: out += "Heis" + std::to_string(f.n); break;
      case Factor::Kind::ExampleFamily: out += "Ex(" + std::to_string(f.n) + ")"; break;
      case Factor::Kind::CayleyFile: out += "file:" + f.path; break;
    }
  }
  return out;
}

std::uint64_t spec_order(const GroupSpec& spec) {
  std::uint64_t n = 1;
  for (const auto& f : spec.factors) {
    const std::uint64_t m = factor_order(f);
    if (m != 0 && n > (std::uint64_t{1} << 40) / m) return std::uint64_t{1} << 40;
    n *= m;
  }
  return n;
}

Group build_group(const GroupSpec& spec, const BuildOptions& options) {
  const std::uint64_t n = spec_order(spec);
  if (n > options.maxOrder)
    throw GroupError("group order " + std::to_string(n) + " exceeds the max-order guard " + std::to_string(options.maxOrder));
  std::vector<Group> parts;
  parts.reserve(spec.factors.size());
  for (const auto& f : spec.factors) parts.push_back(build_factor(f));
  return direct_product(parts);
}

Group heisenberg_group(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw PreconditionError("Heisenberg group needs an odd prime");
  const std::size_t n = p * p * p;
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  auto idx = [p](std::uint64_t a, std::uint64_t b, std::uint64_t c) { return static_cast<Elem>((a * p + b) * p + c); };
  for (std::uint64_t a1 = 0; a1 < p; ++a1)
    for (std::uint64_t b1 = 0; b1 < p; ++b1)
      for (std::uint64_t c1 = 0; c1 < p; ++c1) {
        const Elem x = idx(a1, b1, c1);
        labels[x] = "[" + std::to_string(a1) + "," + std::to_string(b1) + "," + std::to_string(c1) + "]";
        for (std::uint64_t a2 = 0; a2 < p; ++a2)
          for (std::uint64_t b2 = 0; b2 < p; ++b2)
            for (std::uint64_t c2 = 0; c2 < p; ++c2)
              table[static_cast<std::size_t>(x) * n + idx(a2, b2, c2)] =
                  idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
      }
  return Group::from_table(std::move(table), std::move(labels));
}

std::uint64_t example_family_order(unsigned d) {
  std::uint64_t n = 4;
  for (unsigned i = 1; i <= d; ++i) n *= ipow(odd_prime(i), 3);
  return n;
}

Elem example_family_index(unsigned d, std::span<const std::uint64_t> coords, unsigned h) {
  std::uint64_t idx = h;
  for (unsigned i = 0; i < d; ++i) {
    const std::uint64_t p = odd_prime(i + 1);
    for (unsigned l = 0; l < 3; ++l) idx = idx * p + coords[3 * i + l];
  }
  return static_cast<Elem>(idx);
}

Group example_family_group(unsigned d) {
  if (d < 1) throw PreconditionError("example family needs d >= 1");
  std::vector<std::uint64_t> primes(d);
  std::uint64_t nsize = 1;
  for (unsigned i = 0; i < d; ++i) {
    primes[i] = odd_prime(i + 1);
    nsize *= ipow(primes[i], 3);
  }
  const std::size_t n = 4 * nsize;
  const std::size_t width = 3 * d;

  std::vector<std::vector<std::uint64_t>> coords(nsize, std::vector<std::uint64_t>(width));
  for (std::size_t x = 0; x < nsize; ++x) {
    std::size_t rest = x;
    for (std::size_t c = width; c-- > 0;) {
      coords[x][c] = rest % primes[c / 3];
      rest /= primes[c / 3];
    }
  }
  auto encode = [&](const std::vector<std::uint64_t>& v, unsigned h) {
    std::uint64_t idx = h;
    for (std::size_t c = 0; c < width; ++c) idx = idx * primes[c / 3] + v[c];
    return static_cast<Elem>(idx);
  };
  // h_j (j = 1, 2, 3) fixes coordinate j and inverts the other two.
  auto act = [&](unsigned h, std::size_t c, std::uint64_t value) -> std::uint64_t {
    if (h == 0 || (c % 3) + 1 == h || value == 0) return value;
    return primes[c / 3] - value;
  };

  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  std::vector<std::uint64_t> sum(width);
  for (unsigned h = 0; h < 4; ++h)
    for (std::size_t x = 0; x < nsize; ++x) {
      const std::size_t row = h * nsize + x;
      std::string lab = "(";
      for (std::size_t c = 0; c < width; ++c) lab += (c ? "," : "") + std::to_string(coords[x][c]);
      labels[row] = lab + ";" + (h == 0 ? std::string("1") : "h" + std::to_string(h)) + ")";
      for (unsigned k = 0; k < 4; ++k)
        for (std::size_t y = 0; y < nsize; ++y) {
          for (std::size_t c = 0; c < width; ++c)
            sum[c] = (coords[x][c] + act(h, c, coords[y][c])) % primes[c / 3];
          table[row * n + k * nsize + y] = encode(sum, h ^ k);
        }
    }
  return Group::from_table(std::move(table), std::move(labels));
}

std::optional<NilpotentStructure> symbolic_structure(const GroupSpec& spec) {
  struct Part {
    unsigned exponent = 0;  // total p-adic exponent
    unsigned rank = 0;      // minimal number of generators of the Sylow subgroup
  };
  std::map<std::uint64_t, Part> sylow;
  auto add_cyclic = [&](std::uint64_t n, std::uint64_t copies) {
    for (auto [p, e] : factorize(n)) {
      auto& part = sylow[p];
      part.exponent += e * static_cast<unsigned>(copies);
      part.rank += static_cast<unsigned>(copies);
    }
  };
  for (const auto& f : spec.factors) {
    switch (f.kind) {
      case Factor::Kind::Cyclic:
        if (f.n > 1) add_cyclic(f.n, 1);
        break;
      case Factor::Kind::CyclicPower:
        if (f.n > 1) add_cyclic(f.n, f.k);
        break;
      case Factor::Kind::Heisenberg: {
        auto& part = sylow[f.n];
        part.exponent += 3;
        part.rank += 2;
        break;
      }
      case Factor::Kind::ExampleFamily:
      case Factor::Kind::CayleyFile:
        return std::nullopt;
    }
  }
  NilpotentStructure ns;
  ns.twoGenerated = true;
  for (auto [p, part] : sylow) {
    if (part.rank > 2) ns.twoGenerated = false;
    (part.rank == 1 ? ns.cyclicSylow : ns.noncyclicSylow).emplace_back(p, part.exponent);
  }
  return ns;
}

}  // namespace gengraph
