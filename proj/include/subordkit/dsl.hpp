#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "subordkit/boolcore.hpp"
#include "subordkit/frames.hpp"
#include "subordkit/morphclass.hpp"
#include "subordkit/space.hpp"
#include "subordkit/subord.hpp"

namespace subordkit {

/// Syntax error at a 1-based line and column, with the tokens that would
/// have been accepted there.
class ParseError : public Error {
 public:
  ParseError(unsigned line, unsigned column, std::vector<std::string> expected, const std::string& found)
      : Error(compose_message(line, column, expected, found)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  unsigned line() const { return line_; }
  unsigned column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string compose_message(unsigned line, unsigned column, const std::vector<std::string>& expected,
                                     const std::string& found) {
    std::string msg = std::to_string(line) + ":" + std::to_string(column) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    return msg + ", found " + found;
  }

  unsigned line_;
  unsigned column_;
  std::vector<std::string> expected_;
};

/// Well-formed statement that cannot be resolved: unknown or duplicate
/// name, wrong kind, value out of range. Line is 0 for programmatic use.
class SemanticError : public Error {
 public:
  SemanticError(unsigned line, const std::string& msg)
      : Error(line ? std::to_string(line) + ": " + msg : msg), line_(line) {}
  unsigned line() const { return line_; }

 private:
  unsigned line_;
};

enum class DeclKind { algebra, space, equiv, rel, sub, frame, map, devmap, family };

inline const char* to_string(DeclKind k) {
  switch (k) {
    case DeclKind::algebra: return "algebra";
    case DeclKind::space: return "space";
    case DeclKind::equiv: return "equiv";
    case DeclKind::rel: return "rel";
    case DeclKind::sub: return "sub";
    case DeclKind::frame: return "frame";
    case DeclKind::map: return "map";
    case DeclKind::devmap: return "devmap";
    case DeclKind::family: return "family";
  }
  return "?";
}

enum class SubForm { pairs, from_equiv, from_rel };
enum class FrameForm { poset, order };

using Object =
    std::variant<BoolAlg, FinSubSpace, Subordination, PointRelation, FinFrame, LatticeMap, DeVriesMap, ElemFamily>;

/// One named declaration. `dom`/`cod` hold referenced names (an equiv or
/// family keeps its algebra in `dom`); `source` is the argument of
/// from_equiv/from_rel.
struct Decl {
  DeclKind kind;
  std::string name;
  Object object;
  std::string dom;
  std::string cod;
  std::string source;
  SubForm sub_form = SubForm::pairs;
  FrameForm frame_form = FrameForm::order;
  unsigned poset_points = 0;
  std::vector<std::pair<unsigned, unsigned>> poset_edges;  // sorted, unique
  FamilyKind family_kind = FamilyKind::raw;
  unsigned line = 0;  // not part of equality

  friend bool operator==(const Decl& a, const Decl& b) {
    return a.kind == b.kind && a.name == b.name && a.object == b.object && a.dom == b.dom && a.cod == b.cod &&
           a.source == b.source && a.sub_form == b.sub_form && a.frame_form == b.frame_form &&
           a.poset_points == b.poset_points && a.poset_edges == b.poset_edges && a.family_kind == b.family_kind;
  }
};

/// Named objects; every reference points at an earlier declaration.
class Workspace {
 public:
  bool empty() const { return decls_.empty(); }
  std::size_t size() const { return decls_.size(); }
  bool contains(const std::string& name) const { return decls_.count(name) != 0; }

  const Decl* find(const std::string& name) const {
    auto it = decls_.find(name);
    return it == decls_.end() ? nullptr : &it->second;
  }

  const Decl& at(const std::string& name) const {
    const Decl* d = find(name);
    if (!d) throw SemanticError(0, "unknown name '" + name + "'");
    return *d;
  }

  template <class T>
  const T& get(const std::string& name) const {
    const Decl& d = at(name);
    if (const T* p = std::get_if<T>(&d.object)) return *p;
    throw SemanticError(0, "'" + name + "' is a " + to_string(d.kind));
  }

  /// Declarations in canonical order: by kind, then by name.
  std::vector<const Decl*> canonical() const {
    std::vector<const Decl*> out;
    for (const auto& [name, d] : decls_) out.push_back(&d);
    std::stable_sort(out.begin(), out.end(),
                     [](const Decl* a, const Decl* b) { return static_cast<int>(a->kind) < static_cast<int>(b->kind); });
    return out;
  }

  std::vector<std::string> names_of(DeclKind k) const {
    std::vector<std::string> out;
    for (const auto& [name, d] : decls_) {
      if (d.kind == k) out.push_back(name);
    }
    return out;
  }

  void add_algebra(const std::string& name, unsigned atoms, unsigned line = 0) {
    if (atoms < 1 || atoms > kMaxAtoms) throw SemanticError(line, "atoms must be in [1, 12]");
    insert(base(DeclKind::algebra, name, BoolAlg(atoms), line));
  }

  void add_space(const std::string& name, unsigned points, const std::vector<PointSet>& classes, unsigned line = 0) {
    insert(base(DeclKind::space, name, wrap(line, [&] { return FinSubSpace::from_classes(points, classes); }), line));
  }

  void add_equiv(const std::string& name, const std::string& alg, const std::vector<PointSet>& classes,
                 unsigned line = 0) {
    const BoolAlg& a = need<BoolAlg>(alg, DeclKind::algebra, line);
    Decl d = base(DeclKind::equiv, name, wrap(line, [&] { return FinSubSpace::from_classes(a.n_atoms(), classes); }),
                  line);
    d.dom = alg;
    insert(std::move(d));
  }

  void add_rel(const std::string& name, const std::string& dom, const std::string& cod,
               const std::vector<std::pair<unsigned, unsigned>>& pairs, unsigned line = 0) {
    const FinSubSpace& x = need<FinSubSpace>(dom, DeclKind::space, line);
    const FinSubSpace& y = need<FinSubSpace>(cod, DeclKind::space, line);
    Decl d = base(DeclKind::rel, name, wrap(line, [&] { return PointRelation(x, y, pairs); }), line);
    d.dom = dom;
    d.cod = cod;
    insert(std::move(d));
  }

  void add_sub_pairs(const std::string& name, const std::string& dom, const std::string& cod,
                     const std::vector<std::pair<Mask, Mask>>& pairs, unsigned line = 0) {
    const BoolAlg& a = need<BoolAlg>(dom, DeclKind::algebra, line);
    const BoolAlg& b = need<BoolAlg>(cod, DeclKind::algebra, line);
    Decl d = base(DeclKind::sub, name, wrap(line, [&] { return Subordination(a, b, pairs); }), line);
    d.dom = dom;
    d.cod = cod;
    insert(std::move(d));
  }

  /// `source` names an equiv (the algebra is then named) or a space.
  void add_sub_from_equiv(const std::string& name, const std::string& source, unsigned line = 0) {
    const Decl* src = find(source);
    if (!src) throw SemanticError(line, "unknown name '" + source + "'");
    if (src->kind != DeclKind::equiv && src->kind != DeclKind::space) {
      throw SemanticError(line, "'" + source + "' is a " + to_string(src->kind) + ", expected equiv or space");
    }
    const FinSubSpace& x = std::get<FinSubSpace>(src->object);
    Decl d = base(DeclKind::sub, name, wrap(line, [&] { return from_equivalence(x).s(); }), line);
    d.sub_form = SubForm::from_equiv;
    d.source = source;
    if (src->kind == DeclKind::equiv) d.dom = d.cod = src->dom;
    insert(std::move(d));
  }

  void add_sub_from_rel(const std::string& name, const std::string& rel, unsigned line = 0) {
    const PointRelation& r = need<PointRelation>(rel, DeclKind::rel, line);
    Decl d = base(DeclKind::sub, name, wrap(line, [&] { return from_closed_relation(r); }), line);
    d.sub_form = SubForm::from_rel;
    d.source = rel;
    insert(std::move(d));
  }

  void add_frame_poset(const std::string& name, unsigned points, std::vector<std::pair<unsigned, unsigned>> edges,
                       unsigned line = 0) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Decl d = base(DeclKind::frame, name, wrap(line, [&] { return FinFrame::downsets(points, edges); }), line);
    d.frame_form = FrameForm::poset;
    d.poset_points = points;
    d.poset_edges = std::move(edges);
    insert(std::move(d));
  }

  /// up[i] has bit j iff i <= j.
  void add_frame_order(const std::string& name, std::vector<Row> up, unsigned line = 0) {
    if (up.empty() || up.size() > kMaxRowSize) throw SemanticError(line, "order must have 1 to 64 rows");
    insert(base(DeclKind::frame, name, wrap(line, [&] { return FinFrame::make(std::move(up)); }), line));
  }

  void add_map(const std::string& name, const std::string& dom, const std::string& cod,
               const std::vector<std::pair<Idx, Idx>>& entries, unsigned line = 0) {
    const FinFrame& l = need<FinFrame>(dom, DeclKind::frame, line);
    const FinFrame& m = need<FinFrame>(cod, DeclKind::frame, line);
    std::vector<Idx> table = full_table<Idx>(entries, l.size(), line, [](Idx i) { return std::to_string(i); });
    Decl d = base(DeclKind::map, name, wrap(line, [&] { return LatticeMap(l, m, table); }), line);
    d.dom = dom;
    d.cod = cod;
    insert(std::move(d));
  }

  void add_devmap(const std::string& name, const std::string& dom, const std::string& cod,
                  const std::vector<std::pair<Mask, Mask>>& entries, unsigned line = 0) {
    const BoolAlg& a = need<BoolAlg>(dom, DeclKind::algebra, line);
    const BoolAlg& b = need<BoolAlg>(cod, DeclKind::algebra, line);
    if (a.n_atoms() > kMaxRowAtoms || b.n_atoms() > kMaxRowAtoms) {
      throw SemanticError(line, "devmap: at most 6 atoms per side");
    }
    for (auto [x, y] : entries) {
      if (!a.contains(x)) throw SemanticError(line, "element " + format_mask(x) + " out of range for '" + dom + "'");
      if (!b.contains(y)) throw SemanticError(line, "element " + format_mask(y) + " out of range for '" + cod + "'");
    }
    std::vector<Mask> table = full_table<Mask>(entries, a.size(), line, [](Mask m) { return format_mask(m); });
    Decl d = base(DeclKind::devmap, name,
                  wrap(line, [&] { return DeVriesMap(order_algebra(a), order_algebra(b), table); }), line);
    d.dom = dom;
    d.cod = cod;
    insert(std::move(d));
  }

  /// The tag is recorded; parsing does not check that an ideal is an ideal.
  void add_family(const std::string& name, const std::string& alg, FamilyKind kind, const std::vector<Mask>& members,
                  unsigned line = 0) {
    const BoolAlg& a = need<BoolAlg>(alg, DeclKind::algebra, line);
    ElemFamily f(a, kind);
    for (Mask m : members) {
      if (!a.contains(m)) throw SemanticError(line, "element " + format_mask(m) + " out of range for '" + alg + "'");
      if (f.contains(m)) throw SemanticError(line, "element " + format_mask(m) + " listed twice");
      f.insert(m);
    }
    Decl d = base(DeclKind::family, name, std::move(f), line);
    d.dom = alg;
    d.family_kind = kind;
    insert(std::move(d));
  }

  friend bool operator==(const Workspace& a, const Workspace& b) { return a.decls_ == b.decls_; }

 private:
  static Decl base(DeclKind k, const std::string& name, Object obj, unsigned line) {
    return Decl{k, name, std::move(obj), {}, {}, {}, SubForm::pairs, FrameForm::order, 0, {}, FamilyKind::raw, line};
  }

  template <class F>
  static auto wrap(unsigned line, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const SemanticError&) {
      throw;
    } catch (const Error& e) {
      throw SemanticError(line, e.what());
    }
  }

  template <class T>
  const T& need(const std::string& name, DeclKind kind, unsigned line) const {
    const Decl* d = find(name);
    if (!d) throw SemanticError(line, "unknown name '" + name + "'");
    if (d->kind != kind) {
      throw SemanticError(line, "'" + name + "' is a " + to_string(d->kind) + ", expected " + to_string(kind));
    }
    return std::get<T>(d->object);
  }

  template <class V, class Fmt>
  static std::vector<V> full_table(const std::vector<std::pair<V, V>>& entries, std::size_t n, unsigned line,
                                   Fmt fmt) {
    std::vector<V> table(n);
    std::vector<bool> seen(n, false);
    for (auto [k, v] : entries) {
      if (k >= n) throw SemanticError(line, "table key " + fmt(k) + " out of range");
      if (seen[k]) throw SemanticError(line, "table key " + fmt(k) + " given twice");
      seen[k] = true;
      table[k] = v;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!seen[k]) throw SemanticError(line, "table has no entry for " + fmt(static_cast<V>(k)));
    }
    return table;
  }

  void insert(Decl d) {
    if (d.name.empty()) throw SemanticError(d.line, "empty name");
    if (contains(d.name)) throw SemanticError(d.line, "name '" + d.name + "' declared twice");
    std::string key = d.name;
    decls_.emplace(std::move(key), std::move(d));
  }

  std::map<std::string, Decl> decls_;
};

namespace detail {

inline std::string classes_text(const std::vector<PointSet>& classes) {
  std::string out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += ",";
    out += format_mask(classes[i]);
  }
  return out;
}

inline std::string order_rows_text(const FinFrame& f) {
  std::string out;
  for (Idx i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    for (Idx j = 0; j < f.size(); ++j) out += f.leq(i, j) ? '1' : '0';
  }
  return out;
}

struct Token {
  enum Kind { ident, number, punct, end } kind;
  std::string text;
  unsigned column;
};

/// Tokens of one line; columns count code points from 1.
inline std::vector<Token> tokenize(std::string_view line, unsigned line_no) {
  std::vector<Token> out;
  unsigned col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if ((static_cast<unsigned char>(line[i]) & 0xC0u) != 0x80u) ++col;
    }
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    const unsigned start = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Token::ident, std::string(line.substr(i, j - i)), start});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::number, std::string(line.substr(i, j - i)), start});
      advance(j - i);
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::punct, "->", start});
      advance(2);
    } else if (std::string_view("=:{}(),;[]<").find(c) != std::string_view::npos) {
      out.push_back({Token::punct, std::string(1, c), start});
      advance(1);
    } else {
      std::size_t len = 1;
      const auto uc = static_cast<unsigned char>(c);
      if (uc >= 0xF0) len = 4;
      else if (uc >= 0xE0) len = 3;
      else if (uc >= 0xC0) len = 2;
      throw ParseError(line_no, start, {"a statement token"}, "'" + std::string(line.substr(i, len)) + "'");
    }
  }
  out.push_back({Token::end, "", col});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, unsigned line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Token::end; }
  bool is(const std::string& p) const { return peek().kind != Token::end && peek().text == p; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(line_, t.column, std::move(expected), t.kind == Token::end ? "end of line" : "'" + t.text + "'");
  }

  void expect(const std::string& p) {
    if (!is(p) || peek().kind == Token::number) fail({"'" + p + "'"});
    ++pos_;
  }

  bool accept(const std::string& p) {
    if (is(p) && peek().kind != Token::number) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string name() {
    if (peek().kind != Token::ident) fail({"a name"});
    return toks_[pos_++].text;
  }

  unsigned number() {
    if (peek().kind != Token::number) fail({"a number"});
    const std::string& t = peek().text;
    if (t.size() > 6) fail({"a number below 1000000"});
    ++pos_;
    return static_cast<unsigned>(std::stoul(t));
  }

  std::string digits() {
    if (peek().kind != Token::number) fail({"a row of 0/1 digits"});
    return toks_[pos_++].text;
  }

  void end() {
    if (!at_end()) fail({"end of line"});
  }

  /// `{i,j,...}` with distinct members below `limit` when limit > 0.
  Mask set_literal() {
    expect("{");
    Mask m = 0;
    if (accept("}")) return m;
    for (;;) {
      const unsigned col = peek().column;
      const unsigned v = number();
      if (v >= 32) throw SemanticError(line_, "member " + std::to_string(v) + " at column " + std::to_string(col) + " is too large");
      if ((m >> v) & 1u) {
        throw SemanticError(line_, "member " + std::to_string(v) + " repeated at column " + std::to_string(col));
      }
      m |= Mask{1} << v;
      if (accept("}")) return m;
      if (!is(",")) fail({"','", "'}'"});
      ++pos_;
    }
  }

  std::vector<Mask> set_list() {
    std::vector<Mask> out{set_literal()};
    while (accept(",")) out.push_back(set_literal());
    return out;
  }

  /// Comma-separated items; an empty list is the end of the line.
  template <class F>
  void items(F&& item) {
    if (at_end()) return;
    item();
    while (accept(",")) item();
    end();
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  unsigned line_;
};

inline void parse_statement(Workspace& ws, LineParser& p, unsigned line) {
  const std::vector<std::string> keywords{"'algebra'", "'space'", "'equiv'", "'rel'",   "'sub'",
                                          "'frame'",   "'map'",   "'devmap'", "'family'"};
  if (p.peek().kind != Token::ident) p.fail(keywords);
  const std::string kw = p.peek().text;
  if (kw == "algebra") {
    p.expect("algebra");
    const std::string name = p.name();
    p.expect("atoms");
    p.expect("=");
    const unsigned n = p.number();
    p.end();
    ws.add_algebra(name, n, line);
  } else if (kw == "space") {
    p.expect("space");
    const std::string name = p.name();
    p.expect("points");
    p.expect("=");
    const unsigned k = p.number();
    p.expect("classes");
    p.expect("=");
    const std::vector<Mask> cls = p.set_list();
    p.end();
    ws.add_space(name, k, cls, line);
  } else if (kw == "equiv") {
    p.expect("equiv");
    const std::string name = p.name();
    p.expect("on");
    const std::string alg = p.name();
    p.expect("classes");
    p.expect("=");
    const std::vector<Mask> cls = p.set_list();
    p.end();
    ws.add_equiv(name, alg, cls, line);
  } else if (kw == "rel") {
    p.expect("rel");
    const std::string name = p.name();
    p.expect(":");
    const std::string dom = p.name();
    p.expect("->");
    const std::string cod = p.name();
    p.expect("=");
    std::vector<std::pair<unsigned, unsigned>> pairs;
    p.items([&] {
      p.expect("(");
      const unsigned a = p.number();
      p.expect(",");
      const unsigned b = p.number();
      p.expect(")");
      pairs.emplace_back(a, b);
    });
    ws.add_rel(name, dom, cod, pairs, line);
  } else if (kw == "sub") {
    p.expect("sub");
    const std::string name = p.name();
    if (p.accept("=")) {
      if (p.accept("from_equiv")) {
        p.expect("(");
        const std::string src = p.name();
        p.expect(")");
        p.end();
        ws.add_sub_from_equiv(name, src, line);
      } else if (p.accept("from_rel")) {
        p.expect("(");
        const std::string src = p.name();
        p.expect(")");
        p.end();
        ws.add_sub_from_rel(name, src, line);
      } else {
        p.fail({"'from_equiv'", "'from_rel'"});
      }
      return;
    }
    if (!p.is(":")) p.fail({"':'", "'='"});
    p.expect(":");
    const std::string dom = p.name();
    p.expect("->");
    const std::string cod = p.name();
    p.expect("=");
    p.expect("pairs");
    std::vector<std::pair<Mask, Mask>> pairs;
    p.items([&] {
      p.expect("(");
      const Mask a = p.set_literal();
      p.expect(";");
      const Mask b = p.set_literal();
      p.expect(")");
      pairs.emplace_back(a, b);
    });
    ws.add_sub_pairs(name, dom, cod, pairs, line);
  } else if (kw == "frame") {
    p.expect("frame");
    const std::string name = p.name();
    p.expect("=");
    if (p.accept("downsets")) {
      p.expect("of");
      p.expect("poset");
      std::optional<unsigned> points;
      if (p.accept("points")) {
        p.expect("=");
        points = p.number();
      }
      std::vector<std::pair<unsigned, unsigned>> edges;
      if (p.accept("edges")) {
        p.items([&] {
          p.expect("(");
          const unsigned a = p.number();
          p.expect("<");
          const unsigned b = p.number();
          p.expect(")");
          edges.emplace_back(a, b);
        });
      } else {
        if (!p.at_end()) p.fail(points ? std::vector<std::string>{"'edges'", "end of line"}
                                       : std::vector<std::string>{"'points'", "'edges'", "end of line"});
      }
      if (!points) {
        unsigned k = 0;
        for (auto [a, b] : edges) k = std::max({k, a + 1, b + 1});
        points = k;
      }
      ws.add_frame_poset(name, *points, std::move(edges), line);
    } else if (p.accept("order")) {
      std::vector<std::string> rows{p.digits()};
      while (p.accept(",")) rows.push_back(p.digits());
      p.end();
      std::vector<Row> up(rows.size(), 0);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
          throw SemanticError(line, "order row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                        " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          const char c = rows[i][j];
          if (c != '0' && c != '1') throw SemanticError(line, "order rows may contain only 0 and 1");
          if (c == '1') up[i] |= bit(static_cast<unsigned>(j));
        }
      }
      ws.add_frame_order(name, std::move(up), line);
    } else {
      p.fail({"'downsets'", "'order'"});
    }
  } else if (kw == "map") {
    p.expect("map");
    const std::string name = p.name();
    p.expect(":");
    const std::string dom = p.name();
    p.expect("->");
    const std::string cod = p.name();
    p.expect("=");
    p.expect("[");
    std::vector<std::pair<Idx, Idx>> entries;
    if (!p.accept("]")) {
      for (;;) {
        const Idx a = p.number();
        p.expect("->");
        const Idx b = p.number();
        entries.emplace_back(a, b);
        if (p.accept("]")) break;
        if (!p.is(",")) p.fail({"','", "']'"});
        p.expect(",");
      }
    }
    p.end();
    ws.add_map(name, dom, cod, entries, line);
  } else if (kw == "devmap") {
    p.expect("devmap");
    const std::string name = p.name();
    p.expect(":");
    const std::string dom = p.name();
    p.expect("->");
    const std::string cod = p.name();
    p.expect("=");
    p.expect("[");
    std::vector<std::pair<Mask, Mask>> entries;
    if (!p.accept("]")) {
      for (;;) {
        const Mask a = p.set_literal();
        p.expect("->");
        const Mask b = p.set_literal();
        entries.emplace_back(a, b);
        if (p.accept("]")) break;
        if (!p.is(",")) p.fail({"','", "']'"});
        p.expect(",");
      }
    }
    p.end();
    ws.add_devmap(name, dom, cod, entries, line);
  } else if (kw == "family") {
    p.expect("family");
    const std::string name = p.name();
    p.expect(":");
    const std::string alg = p.name();
    FamilyKind kind;
    if (p.accept("ideal")) kind = FamilyKind::ideal;
    else if (p.accept("filter")) kind = FamilyKind::filter;
    else if (p.accept("raw")) kind = FamilyKind::raw;
    else p.fail({"'ideal'", "'filter'", "'raw'"});
    p.expect("=");
    std::vector<Mask> members;
    p.items([&] { members.push_back(p.set_literal()); });
    ws.add_family(name, alg, kind, members, line);
  } else {
    p.fail(keywords);
  }
}

}  // namespace detail

/// One statement per line; `#` starts a comment.
inline Workspace parse(std::string_view text) {
  Workspace ws;
  unsigned line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    std::vector<detail::Token> toks = detail::tokenize(text.substr(start, nl - start), line_no);
    if (toks.size() > 1) {
      detail::LineParser p(std::move(toks), line_no);
      detail::parse_statement(ws, p, line_no);
    }
    start = nl + 1;
  }
  return ws;
}

/// Canonical text of one declaration, without a trailing newline.
inline std::string serialize_decl(const Decl& d) {
  std::string out = std::string(to_string(d.kind)) + " " + d.name;
  switch (d.kind) {
    case DeclKind::algebra:
      out += " atoms=" + std::to_string(std::get<BoolAlg>(d.object).n_atoms());
      break;
    case DeclKind::space: {
      const auto& x = std::get<FinSubSpace>(d.object);
      out += " points=" + std::to_string(x.points()) + " classes=" + detail::classes_text(x.classes());
      break;
    }
    case DeclKind::equiv:
      out += " on " + d.dom + " classes=" + detail::classes_text(std::get<FinSubSpace>(d.object).classes());
      break;
    case DeclKind::rel: {
      out += " : " + d.dom + " -> " + d.cod + " =";
      const auto pairs = std::get<PointRelation>(d.object).pairs();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        out += (i ? ", (" : " (") + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
      }
      break;
    }
    case DeclKind::sub:
      if (d.sub_form == SubForm::from_equiv) {
        out += " = from_equiv(" + d.source + ")";
      } else if (d.sub_form == SubForm::from_rel) {
        out += " = from_rel(" + d.source + ")";
      } else {
        out += " : " + d.dom + " -> " + d.cod + " = pairs";
        const auto pairs = std::get<Subordination>(d.object).pairs();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          out += (i ? ", (" : " (") + format_mask(pairs[i].first) + ";" + format_mask(pairs[i].second) + ")";
        }
      }
      break;
    case DeclKind::frame:
      if (d.frame_form == FrameForm::poset) {
        out += " = downsets of poset points=" + std::to_string(d.poset_points);
        if (!d.poset_edges.empty()) {
          out += " edges";
          for (std::size_t i = 0; i < d.poset_edges.size(); ++i) {
            out += (i ? ", (" : " (") + std::to_string(d.poset_edges[i].first) + "<" +
                   std::to_string(d.poset_edges[i].second) + ")";
          }
        }
      } else {
        out += " = order " + detail::order_rows_text(std::get<FinFrame>(d.object));
      }
      break;
    case DeclKind::map: {
      out += " : " + d.dom + " -> " + d.cod + " = [";
      const auto& h = std::get<LatticeMap>(d.object);
      for (Idx i = 0; i < h.table.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(i) + "->" + std::to_string(h.table[i]);
      }
      out += "]";
      break;
    }
    case DeclKind::devmap: {
      out += " : " + d.dom + " -> " + d.cod + " = [";
      const auto& f = std::get<DeVriesMap>(d.object);
      bool first = true;
      for (Mask m : lex_order(f.dom.alg().n_atoms())) {
        if (!first) out += ", ";
        first = false;
        out += format_mask(m) + " -> " + format_mask(f.table[m]);
      }
      out += "]";
      break;
    }
    case DeclKind::family: {
      out += " : " + d.dom + " " + to_string(d.family_kind) + " =";
      const auto members = std::get<ElemFamily>(d.object).lex_sorted();
      for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : " ") + format_mask(members[i]);
      break;
    }
  }
  return out;
}

/// Canonical text: declarations by kind then name, one per line.
inline std::string serialize(const Workspace& ws) {
  std::string out;
  for (const Decl* d : ws.canonical()) out += serialize_decl(*d) + "\n";
  return out;
}

}  // namespace subordkit
