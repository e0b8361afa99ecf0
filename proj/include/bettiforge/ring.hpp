#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bettiforge/errors.hpp"
#include "bettiforge/field.hpp"
#include "bettiforge/monomial.hpp"

namespace bettiforge {

/// Ordered list of distinct variable names.  Order fixes degrevlex
/// (first variable largest).
class VariableSet {
 public:
  VariableSet() = default;
  /// Public rings have 3 or 4 variables.
  explicit VariableSet(std::vector<std::string> names) : VariableSet(std::move(names), 3, 4) {}

  static VariableSet surface() { return VariableSet({"x", "y", "z", "t"}); }
  static VariableSet curve() { return VariableSet({"x", "y", "z"}); }

  /// Adds a fresh trailing variable (used for auxiliary eliminations).
  VariableSet extended(const std::string& fresh) const {
    auto names = names_;
    names.push_back(fresh);
    return VariableSet(std::move(names), 1, Monomial::kMaxVars);
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return std::nullopt;
  }

  bool operator==(const VariableSet&) const = default;

 private:
  VariableSet(std::vector<std::string> names, int min_vars, int max_vars) : names_(std::move(names)) {
    int n = size();
    if (n < min_vars || n > max_vars)
      throw DomainError("variable set must have between " + std::to_string(min_vars) + " and " +
                        std::to_string(max_vars) + " variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw DomainError("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw DomainError("duplicate variable name '" + names_[i] + "'");
    }
  }

  std::vector<std::string> names_;
};

template <class F>
struct Ring {
  VariableSet vars;
  F field;

  int nvars() const { return vars.size(); }
  bool operator==(const Ring& o) const { return vars == o.vars && field == o.field; }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(VariableSet vars, F field = F{}) {
  return std::make_shared<const Ring<F>>(Ring<F>{std::move(vars), std::move(field)});
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (!same_ring(a, b)) throw IncompatibleOperands("operands belong to different rings");
}

}  // namespace bettiforge
