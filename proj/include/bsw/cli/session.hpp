#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsw/closure/semigroup.hpp"
#include "bsw/groebner/ideal.hpp"

// Session files: `;`-terminated statements, `#` comments.
//
//   ring z,w weights 2,5 order wdegrevlex;
//   ideal I = z^5 - w^2;
//   poly P = w;
//   germ semigroup 2,5;
//   germ ideal A = 2, 5;
//   resolve I;  check-bs I --ideal J --m 1;  germ mu vmax=12 lmax=4;
//
// Options are written `--key value` or `key=value`; a bare `--flag` is true.

namespace bsw::cli {

struct SourcePos {
  int line = 1;
  int column = 1;
};

enum class BindingKind { Ideal, Polynomial, GermIdeal };

const char* binding_kind_name(BindingKind kind);

struct Binding {
  BindingKind kind = BindingKind::Ideal;
  std::string name;
  SourcePos pos;
  std::optional<groebner::Ideal> ideal;
  std::optional<poly::Polynomial> polynomial;
  std::vector<long> shifts;
};

struct Command {
  /// "resolve", "check-bs", "germ mu", ...
  std::string name;
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> options;
  SourcePos pos;
  /// Statement text with whitespace collapsed.
  std::string text;

  std::optional<std::string> option(std::string_view key) const;
  bool flag(std::string_view key) const;
};

struct Session {
  poly::Ring ring;  // null when the session declares none
  std::optional<closure::NumericalSemigroup> semigroup;
  std::vector<Binding> bindings;
  std::vector<Command> commands;

  const Binding* find(std::string_view name) const;
};

/// SyntaxError with the line and column of the offending token for unknown
/// keywords or options, malformed statements, empty statements, duplicate
/// names and references to names that are unbound or of the wrong kind.
Session parse_session(std::string_view text);

/// Known command names, in the order they are documented.
const std::vector<std::string>& command_names();

}  // namespace bsw::cli
