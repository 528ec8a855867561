#pragma once

#include "gengraph/group.hpp"
#include "gengraph/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gengraph {

// Group-spec language:
//   spec   := factor { ("x" | "×") factor }
//   factor := "C" int ["^" int] | "Heis" int | "Ex(" int ")" | "file:" path
// Whitespace is ignored around separators; a file path runs to the next
// whitespace.

struct Factor {
  enum class Kind { Cyclic, CyclicPower, Heisenberg, ExampleFamily, CayleyFile };
  Kind kind = Kind::Cyclic;
  std::uint64_t n = 1;  // C n, C n^k, Heis n, Ex(n)
  std::uint64_t k = 1;  // exponent for CyclicPower
  std::string path;     // CayleyFile

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct GroupSpec {
  std::vector<Factor> factors;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec parse_spec(std::string_view text);

/// Canonical text form, e.g. "C2^2 x C9".
std::string to_string(const GroupSpec& spec);

struct BuildOptions {
  std::size_t maxOrder = kDefaultMaxOrder;
};

/// Order of the group a spec denotes, without building it (file factors read
/// only the header).
std::uint64_t spec_order(const GroupSpec& spec);

Group build_group(const GroupSpec& spec, const BuildOptions& options = {});

Group heisenberg_group(std::uint64_t p);

/// The semidirect product (C_{p_1}^3 x ... x C_{p_d}^3) : C_2^2 with p_i the
/// i-th odd prime; each h_j fixes coordinate j of every N_i and inverts the
/// other two.
Group example_family_group(unsigned d);

/// Element index of (n_{11},...,n_{d3}; h) in example_family_group(d), with
/// h in {0 (identity), 1, 2, 3}.
Elem example_family_index(unsigned d, std::span<const std::uint64_t> coords, unsigned h);
std::uint64_t example_family_order(unsigned d);

/// Nilpotent prime data read off the spec, when it is a product of cyclic and
/// Heisenberg factors; nullopt for example-family or file factors.
std::optional<NilpotentStructure> symbolic_structure(const GroupSpec& spec);

}  // namespace gengraph
