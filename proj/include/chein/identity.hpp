#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chein/cayley_table.hpp"

namespace chein {

// Term over variables, binary product and inverse, stored as a node arena.
// Children always precede their parent; the last node is the root.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Product, Inverse };

  struct Node {
    Kind kind;
    std::uint32_t variable;  // Variable: index into the identity's name list
    std::uint32_t left;      // Product, Inverse
    std::uint32_t right;     // Product
  };

  std::uint32_t add_variable(std::uint32_t var);
  std::uint32_t add_product(std::uint32_t left, std::uint32_t right);
  std::uint32_t add_inverse(std::uint32_t child);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::uint32_t root() const noexcept {
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }
  bool empty() const noexcept { return nodes_.empty(); }
  bool uses_inverse() const noexcept;

  // Recursive shape comparison (independent of arena layout).
  friend bool structurally_equal(const Term& a, const Term& b);

 private:
  std::vector<Node> nodes_;
};

struct Identity {
  Term lhs;
  Term rhs;
  // Distinct names in order of first appearance, left to right.
  std::vector<std::string> variables;

  bool uses_inverse() const noexcept {
    return lhs.uses_inverse() || rhs.uses_inverse();
  }
};

bool structurally_equal(const Identity& a, const Identity& b);

// identity := term '=' term
// term     := factor | term '*' factor        (left-associative)
// factor   := atom | atom '^-1'
// atom     := name | '(' term ')'
// Names are letters followed by optional digits. Throws ParseError.
Identity parse_identity(std::string_view source);

// Fully parenthesized rendering that parses back to the same identity.
std::string to_string(const Identity& id);

enum class Builtin {
  associativity,
  commutativity,
  flexible,
  left_bol,
  right_bol,
  moufang_1,
  moufang_2,
  moufang_3,
  moufang_4,
  left_alternative,
  right_alternative,
  left_ip,
  right_ip,
};

inline constexpr std::size_t kBuiltinCount = 13;

std::string_view name(Builtin b) noexcept;
std::string_view source_text(Builtin b) noexcept;
// Throws std::invalid_argument for unknown names.
Builtin parse_builtin(std::string_view name);
const Identity& builtin(Builtin b);
const Identity& builtin(std::string_view name);

// Outcome of an exhaustive check. On failure `assignment` holds the values of
// the identity's variables (in order) for the lexicographically least
// counterexample.
struct CheckResult {
  bool holds = true;
  std::vector<Element> assignment;
  Element lhs_value = 0;
  Element rhs_value = 0;

  explicit operator bool() const noexcept { return holds; }
};

// "x=3 y=7 z=0 | lhs=5 rhs=9"
std::string format_counterexample(const Identity& id, const CheckResult& r);

// Neutral element and two-sided inverses of a magma, when they exist.
struct InverseData {
  Element neutral;
  std::vector<Element> inverse;
};

// Present iff the magma has a two-sided neutral element and every element
// has exactly one two-sided inverse.
std::optional<InverseData> inverse_data(const CayleyTable& magma);

inline constexpr std::size_t kMaxIdentityVariables = 4;
inline constexpr double kMaxIdentityEvaluations = 1e9;

// Throws HypothesisError when inverses are needed but undefined, or when the
// variable count / evaluation budget is exceeded.
CheckResult check_identity(const CayleyTable& magma, const Identity& id);

// Reference implementation: single-threaded lexicographic scan.
CheckResult check_identity_serial(const CayleyTable& magma, const Identity& id);
// Same, reusing inverse data computed by the caller (ignored when the identity
// has no inverse nodes).
CheckResult check_identity_serial(const CayleyTable& magma, const Identity& id,
                                  const std::optional<InverseData>& inverses);
// OpenMP kernel partitioned over the first variable; reduces to the
// lexicographically least counterexample, so results match the serial scan.
CheckResult check_identity_parallel(const CayleyTable& magma, const Identity& id);

}  // namespace chein
