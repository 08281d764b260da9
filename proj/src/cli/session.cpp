#include "bsw/cli/session.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "bsw/error.hpp"

namespace bsw::cli {

namespace {

enum class ValueKind { Int, Text, IdealRef, GermIdealRef, PolyExpr };

struct OptionSpec {
  const char* name;
  ValueKind kind;
};

struct CommandSpec {
  const char* name;
  bool ideal_target;  // takes an optional positional ideal name
  std::vector<OptionSpec> options;
};

const std::vector<CommandSpec>& specs() {
  static const std::vector<CommandSpec> table{
      {"resolve", true, {{"max_len", ValueKind::Int}, {"grading", ValueKind::Text}}},
      {"strata", true, {}},
      {"check-cm", true, {}},
      {"check-normal", true, {}},
      {"check-bs", true, {{"ideal", ValueKind::IdealRef}, {"m", ValueKind::Int}}},
      {"member", true, {{"poly", ValueKind::PolyExpr}}},
      {"dim", true, {}},
      {"koszul", true, {}},
      {"closure", true, {}},
      {"bs-verify-monomial", true, {{"ell", ValueKind::Int}, {"d", ValueKind::Int}}},
      {"germ member", false, {{"value", ValueKind::Int}, {"ideal", ValueKind::GermIdealRef}}},
      {"germ exponent", false, {{"ideal", ValueKind::GermIdealRef}, {"ell", ValueKind::Int}, {"mode", ValueKind::Text}}},
      {"germ mu", false, {{"vmax", ValueKind::Int}, {"lmax", ValueKind::Int}}},
      {"loja",
       false,
       {{"phi", ValueKind::PolyExpr},
        {"a", ValueKind::Text},
        {"param", ValueKind::Text},
        {"hypersurface", ValueKind::IdealRef},
        {"solve", ValueKind::Text},
        {"radii", ValueKind::Text},
        {"samples", ValueKind::Int},
        {"csv", ValueKind::Text}}},
  };
  return table;
}

const std::map<std::string, std::vector<std::string>>& required_options() {
  static const std::map<std::string, std::vector<std::string>> req{
      {"check-bs", {"ideal"}},        {"member", {"poly"}},     {"germ member", {"value", "ideal"}},
      {"germ exponent", {"ideal"}},   {"loja", {"phi", "a"}},
  };
  return req;
}

struct Token {
  std::string text;
  std::size_t offset;
};

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(text) {
    // comments become blanks so offsets stay valid
    bool in_comment = false;
    for (char& c : src_) {
      if (c == '\n') in_comment = false;
      else if (c == '#') in_comment = true;
      if (in_comment) c = ' ';
    }
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < src_.size(); ++i)
      if (src_[i] == '\n') line_starts_.push_back(i + 1);
  }

  Session run() {
    std::size_t start = 0;
    while (start <= src_.size()) {
      const std::size_t semi = src_.find(';', start);
      const std::size_t end = semi == std::string::npos ? src_.size() : semi;
      const std::string_view body(src_.data() + start, end - start);
      if (trim(body).empty()) {
        if (semi != std::string::npos) fail("empty statement", semi);
      } else {
        statement(start, end);
      }
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    return std::move(session_);
  }

 private:
  std::string src_;
  std::vector<std::size_t> line_starts_;
  Session session_;
  std::map<std::string, poly::Polynomial> poly_bindings_;
  std::string last_target_;

  SourcePos pos(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {static_cast<int>(line), static_cast<int>(offset - line_starts_[line - 1] + 1)};
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    const SourcePos p = pos(offset);
    throw SyntaxError(msg + " at line " + std::to_string(p.line) + ", column " + std::to_string(p.column), p.line,
                      p.column);
  }

  std::vector<Token> tokens(std::size_t begin, std::size_t end) const {
    std::vector<Token> out;
    std::size_t i = begin;
    while (i < end) {
      while (i < end && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
      if (i >= end) break;
      std::size_t j = i;
      while (j < end && !std::isspace(static_cast<unsigned char>(src_[j]))) ++j;
      out.push_back({src_.substr(i, j - i), i});
      i = j;
    }
    return out;
  }

  // Comma-separated pieces of src_[begin, end) with the offset of each piece.
  std::vector<Token> comma_list(std::size_t begin, std::size_t end) const {
    std::vector<Token> out;
    std::size_t i = begin;
    while (true) {
      std::size_t j = i;
      while (j < end && src_[j] != ',') ++j;
      std::size_t b = i;
      while (b < j && std::isspace(static_cast<unsigned char>(src_[b]))) ++b;
      const std::string piece = trim(std::string_view(src_).substr(i, j - i));
      if (piece.empty()) fail("empty list entry", b);
      out.push_back({piece, b});
      if (j >= end) break;
      i = j + 1;
    }
    return out;
  }

  long integer(const Token& t) const {
    try {
      std::size_t used = 0;
      const long v = std::stol(t.text, &used);
      if (used == t.text.size()) return v;
    } catch (const std::exception&) {
    }
    fail("expected an integer, got '" + t.text + "'", t.offset);
  }

  poly::Polynomial polynomial(const Token& t) const {
    if (!session_.ring) fail("polynomial before any ring declaration", t.offset);
    try {
      return poly::parse_polynomial(t.text, session_.ring, &poly_bindings_);
    } catch (const SyntaxError& e) {
      std::string msg = e.what();
      if (auto cut = msg.find(" at column "); cut != std::string::npos) msg.resize(cut);
      fail(msg, t.offset + static_cast<std::size_t>(std::max(e.column(), 1) - 1));
    } catch (const Error& e) {
      fail(e.what(), t.offset);
    }
  }

  void bind(Binding b, std::size_t offset) {
    if (session_.find(b.name)) fail("duplicate binding '" + b.name + "'", offset);
    b.pos = pos(offset);
    session_.bindings.push_back(std::move(b));
  }

  // NAME = rest: returns the name token and the offset right after '='.
  std::pair<Token, std::size_t> name_and_rhs(std::size_t begin, std::size_t end, const char* what) const {
    const std::size_t eq = src_.find('=', begin);
    if (eq == std::string::npos || eq >= end) fail(std::string(what) + " needs 'NAME = ...'", begin);
    auto toks = tokens(begin, eq);
    if (toks.size() != 1 || !is_identifier(toks[0].text))
      fail(std::string("expected a name before '=' in ") + what, toks.empty() ? begin : toks[0].offset);
    if (trim(std::string_view(src_).substr(eq + 1, end - eq - 1)).empty()) fail("missing right-hand side", eq);
    std::size_t rhs = eq + 1;
    while (std::isspace(static_cast<unsigned char>(src_[rhs]))) ++rhs;
    return {toks[0], rhs};
  }

  void statement(std::size_t begin, std::size_t end) {
    auto toks = tokens(begin, end);
    const std::string& kw = toks[0].text;
    const std::size_t after_kw = toks[0].offset + kw.size();
    if (kw == "ring") return ring_statement(toks, end);
    if (kw == "ideal" || kw == "poly") {
      auto [name, rhs] = name_and_rhs(after_kw, end, kw.c_str());
      Binding b;
      b.name = name.text;
      if (kw == "ideal") {
        std::vector<poly::Polynomial> gens;
        for (const auto& piece : comma_list(rhs, end)) gens.push_back(polynomial(piece));
        b.kind = BindingKind::Ideal;
        b.ideal = groebner::Ideal(session_.ring, std::move(gens));
      } else {
        Token t{trim(std::string_view(src_).substr(rhs, end - rhs)), rhs};
        while (std::isspace(static_cast<unsigned char>(src_[t.offset]))) ++t.offset;
        b.kind = BindingKind::Polynomial;
        b.polynomial = polynomial(t);
        poly_bindings_.emplace(b.name, *b.polynomial);
      }
      return bind(std::move(b), name.offset);
    }
    if (kw == "germ") {
      if (toks.size() < 2) fail("incomplete germ statement", toks[0].offset);
      const Token& sub = toks[1];
      const std::size_t after_sub = sub.offset + sub.text.size();
      if (sub.text == "semigroup") {
        if (session_.semigroup) fail("semigroup already declared", sub.offset);
        std::vector<long> gens;
        for (const auto& t : comma_list(after_sub, end)) gens.push_back(integer(t));
        try {
          session_.semigroup.emplace(gens);
        } catch (const Error& e) {
          fail(e.what(), sub.offset);
        }
        return;
      }
      if (sub.text == "ideal") {
        if (!session_.semigroup) fail("germ ideal before the semigroup declaration", sub.offset);
        auto [name, rhs] = name_and_rhs(after_sub, end, "germ ideal");
        Binding b;
        b.kind = BindingKind::GermIdeal;
        b.name = name.text;
        for (const auto& t : comma_list(rhs, end)) b.shifts.push_back(integer(t));
        try {
          b.shifts = closure::SemigroupIdeal(*session_.semigroup, b.shifts).shifts();
        } catch (const Error& e) {
          fail(e.what(), rhs);
        }
        return bind(std::move(b), name.offset);
      }
      return command(toks, "germ " + sub.text, 2);
    }
    command(toks, kw, 1);
  }

  void ring_statement(const std::vector<Token>& toks, std::size_t end) {
    if (session_.ring) fail("duplicate ring declaration", toks[0].offset);
    auto section_end = [&](std::size_t from) {
      std::size_t j = from;
      while (j < toks.size() && toks[j].text != "weights" && toks[j].text != "order") ++j;
      return j;
    };
    auto list_of = [&](std::size_t from, std::size_t to) {
      if (from == to) fail("expected a list", from < toks.size() ? toks[from].offset : end);
      return comma_list(toks[from].offset, to < toks.size() ? toks[to].offset : end);
    };
    const std::size_t names_end = section_end(1);
    std::vector<std::string> names;
    for (const auto& t : list_of(1, names_end)) {
      if (!is_identifier(t.text)) fail("bad variable name '" + t.text + "'", t.offset);
      names.push_back(t.text);
    }
    std::vector<int> weights;
    poly::MonomialOrder order = poly::MonomialOrder::WeightedDegRevLex;
    bool seen_weights = false, seen_order = false;
    std::size_t i = names_end;
    while (i < toks.size()) {
      const Token& key = toks[i];
      const std::size_t stop = section_end(i + 1);
      if (key.text == "weights") {
        if (seen_weights) fail("weights given twice", key.offset);
        seen_weights = true;
        for (const auto& t : list_of(i + 1, stop)) weights.push_back(static_cast<int>(integer(t)));
      } else {
        if (seen_order) fail("order given twice", key.offset);
        seen_order = true;
        if (stop != i + 2) fail("order takes one name", key.offset);
        auto o = poly::order_from_name(toks[i + 1].text);
        if (!o || *o == poly::MonomialOrder::Schreyer) fail("unknown order '" + toks[i + 1].text + "'", toks[i + 1].offset);
        order = *o;
      }
      i = stop;
    }
    try {
      session_.ring = poly::RingContext::make(names, weights, order);
    } catch (const Error& e) {
      fail(e.what(), toks[0].offset);
    }
  }

  void check_ref(const std::string& name, BindingKind kind, std::size_t offset) const {
    const Binding* b = session_.find(name);
    if (!b) fail("unknown name '" + name + "'", offset);
    if (b->kind != kind)
      fail("'" + name + "' is " + binding_kind_name(b->kind) + ", expected " + binding_kind_name(kind), offset);
  }

  void command(const std::vector<Token>& toks, const std::string& name, std::size_t first_arg) {
    const auto& table = specs();
    auto spec = std::find_if(table.begin(), table.end(), [&](const CommandSpec& s) { return name == s.name; });
    const std::size_t name_offset = toks[0].offset;
    if (spec == table.end()) fail("unknown command '" + name + "'", toks[first_arg - 1].offset);

    Command c;
    c.name = name;
    c.pos = pos(name_offset);
    for (const auto& t : toks) c.text += (c.text.empty() ? "" : " ") + t.text;

    std::vector<std::pair<Token, Token>> opts;  // key token, value token
    for (std::size_t i = first_arg; i < toks.size(); ++i) {
      const Token& t = toks[i];
      if (t.text.rfind("--", 0) == 0) {
        Token key{t.text.substr(2), t.offset + 2};
        if (i + 1 < toks.size() && toks[i + 1].text.rfind("--", 0) != 0) {
          opts.push_back({key, toks[i + 1]});
          ++i;
        } else {
          opts.push_back({key, Token{"true", t.offset}});
        }
      } else if (auto eq = t.text.find('='); eq != std::string::npos) {
        opts.push_back({Token{t.text.substr(0, eq), t.offset}, Token{t.text.substr(eq + 1), t.offset + eq + 1}});
      } else {
        c.args.push_back(t.text);
        if (!spec->ideal_target || c.args.size() > 1) fail("unexpected argument '" + t.text + "'", t.offset);
        check_ref(t.text, BindingKind::Ideal, t.offset);
      }
    }

    for (const auto& [key, value] : opts) {
      auto o = std::find_if(spec->options.begin(), spec->options.end(),
                            [&](const OptionSpec& s) { return key.text == s.name; });
      if (o == spec->options.end()) fail("unknown option '" + key.text + "' for " + name, key.offset);
      if (c.option(key.text)) fail("option '" + key.text + "' given twice", key.offset);
      if (value.text.empty()) fail("empty value for '" + key.text + "'", value.offset);
      switch (o->kind) {
        case ValueKind::Int: integer(value); break;
        case ValueKind::IdealRef: check_ref(value.text, BindingKind::Ideal, value.offset); break;
        case ValueKind::GermIdealRef: check_ref(value.text, BindingKind::GermIdeal, value.offset); break;
        case ValueKind::PolyExpr: polynomial(value); break;
        case ValueKind::Text: break;
      }
      c.options.emplace_back(key.text, value.text);
    }
    if (auto req = required_options().find(name); req != required_options().end())
      for (const auto& key : req->second)
        if (!c.option(key)) fail(name + " needs --" + key, name_offset);

    if (name.rfind("germ ", 0) == 0 && !session_.semigroup) fail(name + " needs a germ semigroup", name_offset);
    if (name == "loja" && !session_.ring) fail("loja needs a ring", name_offset);
    if (spec->ideal_target || name == "loja") {
      if (c.args.empty()) {
        if (!last_target_.empty()) {
          c.args.push_back(last_target_);
        } else {
          auto first = std::find_if(session_.bindings.begin(), session_.bindings.end(),
                                    [](const Binding& b) { return b.kind == BindingKind::Ideal; });
          if (first != session_.bindings.end()) c.args.push_back(first->name);
          else if (name != "loja") fail(name + " has no ideal to act on", name_offset);
        }
      }
      if ((name == "resolve" || name == "strata") && !c.args.empty()) last_target_ = c.args[0];
    }
    session_.commands.push_back(std::move(c));
  }
};

}  // namespace

const char* binding_kind_name(BindingKind kind) {
  switch (kind) {
    case BindingKind::Ideal: return "an ideal";
    case BindingKind::Polynomial: return "a polynomial";
    case BindingKind::GermIdeal: return "a germ ideal";
  }
  return "unknown";
}

std::optional<std::string> Command::option(std::string_view key) const {
  for (const auto& [k, v] : options)
    if (k == key) return v;
  return std::nullopt;
}

bool Command::flag(std::string_view key) const {
  auto v = option(key);
  return v && *v != "false" && *v != "0";
}

const Binding* Session::find(std::string_view name) const {
  for (const auto& b : bindings)
    if (b.name == name) return &b;
  return nullptr;
}

Session parse_session(std::string_view text) { return Parser(text).run(); }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.name);
    return out;
  }();
  return names;
}

}  // namespace bsw::cli
