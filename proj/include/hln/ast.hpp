#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hln/common.hpp"

namespace hln {

/// The eight action kinds of the high-level notation.
enum class ActionKind {
  Bind,
  Dimerize,
  Activate,
  ActivateAndDissociate,
  Phosphorylate,
  Dissociate,
  Degrade,
  Hydrolyze,
};

inline constexpr std::array<ActionKind, 8> kAllActionKinds = {
    ActionKind::Bind,          ActionKind::Dimerize,
    ActionKind::Activate,      ActionKind::ActivateAndDissociate,
    ActionKind::Phosphorylate, ActionKind::Dissociate,
    ActionKind::Degrade,       ActionKind::Hydrolyze,
};

/// Keyword spelling of a kind, exactly as written in the notation
/// (case-sensitive, including "activateAnddissociate").
std::string_view action_keyword(ActionKind kind);

/// Inverse of action_keyword; nullopt for anything else.
std::optional<ActionKind> action_kind_from_keyword(std::string_view word);

/// Number of species operands the kind takes (the rate argument is extra).
std::size_t action_arity(ActionKind kind);

/// One action: a kind, its species operands in written order, and a
/// positive per-molecule (or per-pair) rate in 1/s.
struct Action {
  ActionKind kind;
  std::vector<std::string> operands;
  double rate = 0.0;

  bool operator==(const Action&) const = default;
};

/// A program: an ordered, possibly empty sequence of actions.
struct Process {
  std::vector<Action> actions;

  bool operator==(const Process&) const = default;
};

}  // namespace hln
