#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chein/errors.hpp"
#include "chein/identity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chein {

std::optional<InverseData> inverse_data(const CayleyTable& magma) {
  const auto e = find_neutral(magma);
  if (!e) return std::nullopt;
  const auto n = static_cast<Element>(magma.order());
  InverseData data{*e, std::vector<Element>(n)};
  for (Element x = 0; x < n; ++x) {
    std::size_t found = 0;
    for (Element y = 0; y < n; ++y) {
      if (magma(x, y) == *e && magma(y, x) == *e) {
        data.inverse[x] = y;
        ++found;
      }
    }
    if (found != 1) return std::nullopt;
  }
  return data;
}

namespace {

// Postfix program for one side of an identity.
struct Program {
  enum class Op : std::uint8_t { Load, Mul, Inv };
  struct Step {
    Op op;
    std::uint32_t variable;
  };
  std::vector<Step> steps;
  std::size_t max_depth = 0;

  static Program compile(const Term& t) {
    Program p;
    std::size_t depth = 0;
    p.emit(t, t.root(), depth);
    return p;
  }

  void emit(const Term& t, std::uint32_t node, std::size_t& depth) {
    const Term::Node& n = t.nodes()[node];
    switch (n.kind) {
      case Term::Kind::Variable:
        steps.push_back({Op::Load, n.variable});
        max_depth = std::max(max_depth, ++depth);
        return;
      case Term::Kind::Inverse:
        emit(t, n.left, depth);
        steps.push_back({Op::Inv, 0});
        return;
      case Term::Kind::Product:
        emit(t, n.left, depth);
        emit(t, n.right, depth);
        steps.push_back({Op::Mul, 0});
        --depth;
        return;
    }
  }

  Element run(const CayleyTable& m, const Element* inverse, const Element* values,
              Element* stack) const noexcept {
    std::size_t top = 0;
    for (const Step& s : steps) {
      switch (s.op) {
        case Op::Load: stack[top++] = values[s.variable]; break;
        case Op::Mul:
          --top;
          stack[top - 1] = m(stack[top - 1], stack[top]);
          break;
        case Op::Inv: stack[top - 1] = inverse[stack[top - 1]]; break;
      }
    }
    return stack[0];
  }
};

struct Compiled {
  Program lhs;
  Program rhs;
  std::size_t arity;
  std::optional<InverseData> inverses;
};

Compiled prepare(const CayleyTable& magma, const Identity& id,
                 const std::optional<InverseData>* supplied) {
  const std::size_t k = id.variables.size();
  if (k > kMaxIdentityVariables) {
    throw HypothesisError("identity has " + std::to_string(k) +
                          " variables; at most " +
                          std::to_string(kMaxIdentityVariables) + " are supported");
  }
  if (std::pow(static_cast<double>(magma.order()), static_cast<double>(k)) >
      kMaxIdentityEvaluations) {
    throw HypothesisError("identity check exceeds the evaluation budget");
  }
  Compiled c{Program::compile(id.lhs), Program::compile(id.rhs), k, std::nullopt};
  if (id.uses_inverse()) {
    c.inverses = supplied ? *supplied : inverse_data(magma);
    if (!c.inverses) {
      throw HypothesisError(
          "inverse undefined: magma lacks a neutral element or unique two-sided "
          "inverses");
    }
  }
  return c;
}

// Scans assignments whose first variable equals `first` (all assignments when
// arity is 0) in lexicographic order.
bool scan_slice(const CayleyTable& magma, const Compiled& c, Element first,
                CheckResult& result) {
  const auto n = static_cast<Element>(magma.order());
  const Element* inv = c.inverses ? c.inverses->inverse.data() : nullptr;
  std::vector<Element> stack(std::max<std::size_t>(
      1, std::max(c.lhs.max_depth, c.rhs.max_depth)));
  std::vector<Element> values(std::max<std::size_t>(1, c.arity), 0);
  values[0] = first;
  while (true) {
    const Element l = c.lhs.run(magma, inv, values.data(), stack.data());
    const Element r = c.rhs.run(magma, inv, values.data(), stack.data());
    if (l != r) {
      result.holds = false;
      result.assignment.assign(values.begin(), values.begin() + c.arity);
      result.lhs_value = l;
      result.rhs_value = r;
      return false;
    }
    if (c.arity <= 1) return true;
    std::size_t pos = c.arity;
    while (true) {
      --pos;
      if (++values[pos] < n) break;
      values[pos] = 0;
      if (pos == 1) return true;
    }
  }
}

CheckResult run_serial(const CayleyTable& magma, const Compiled& c) {
  CheckResult result;
  if (c.arity == 0) {
    scan_slice(magma, c, 0, result);
    return result;
  }
  const auto n = static_cast<Element>(magma.order());
  for (Element first = 0; first < n; ++first) {
    if (!scan_slice(magma, c, first, result)) break;
  }
  return result;
}

}  // namespace

CheckResult check_identity_serial(const CayleyTable& magma, const Identity& id) {
  return run_serial(magma, prepare(magma, id, nullptr));
}

CheckResult check_identity_serial(const CayleyTable& magma, const Identity& id,
                                  const std::optional<InverseData>& inverses) {
  return run_serial(magma, prepare(magma, id, &inverses));
}

CheckResult check_identity_parallel(const CayleyTable& magma, const Identity& id) {
  const Compiled c = prepare(magma, id, nullptr);
  if (c.arity == 0) return run_serial(magma, c);
  const auto n = static_cast<long>(magma.order());
  long best_first = std::numeric_limits<long>::max();
  CheckResult best;
#pragma omp parallel for schedule(dynamic, 1)
  for (long first = 0; first < n; ++first) {
    long current;
#pragma omp atomic read
    current = best_first;
    if (first > current) continue;
    CheckResult local;
    if (!scan_slice(magma, c, static_cast<Element>(first), local)) {
#pragma omp critical(chein_identity_best)
      {
        if (first < best_first) {
          best_first = first;
          best = std::move(local);
        }
      }
    }
  }
  return best;
}

CheckResult check_identity(const CayleyTable& magma, const Identity& id) {
#ifdef _OPENMP
  const double work = std::pow(static_cast<double>(magma.order()),
                               static_cast<double>(id.variables.size()));
  if (!omp_in_parallel() && omp_get_max_threads() > 1 && work >= 1 << 18) {
    return check_identity_parallel(magma, id);
  }
#endif
  return check_identity_serial(magma, id);
}

}  // namespace chein
