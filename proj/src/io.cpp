#include "gradeforge/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace gradeforge::io {

using nlohmann::json;

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Splits into non-empty lines of space-separated tokens; '#' starts a comment.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '#') ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : _lines(tokenize(text)) {}

  bool done() const { return _next >= _lines.size(); }

  Line const& take(char const* expecting) {
    if (done()) {
      std::size_t last = _lines.empty() ? 1 : _lines.back().number + 1;
      throw ParseError(last, 1, std::string("unexpected end of input, expected ") + expecting);
    }
    return _lines[_next++];
  }

  Line const& peek() const { return _lines[_next]; }

 private:
  std::vector<Line> _lines;
  std::size_t _next = 0;
};

std::uint64_t number(Line const& line, std::size_t k, char const* what) {
  if (k >= line.tokens.size()) {
    std::size_t col = line.tokens.empty()
                          ? 1
                          : line.tokens.back().column + line.tokens.back().text.size();
    throw ParseError(line.number, col, std::string("missing ") + what);
  }
  auto const& tok = line.tokens[k];
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line.number, tok.column,
                     std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
  }
  return v;
}

void expect_keyword(Line const& line, std::string_view word) {
  if (line.tokens.empty() || line.tokens[0].text != word) {
    std::size_t col = line.tokens.empty() ? 1 : line.tokens[0].column;
    throw ParseError(line.number, col, "expected '" + std::string(word) + "'");
  }
}

void expect_width(Line const& line, std::size_t n) {
  if (line.tokens.size() != n) {
    std::size_t col = line.tokens.size() > n ? line.tokens[n].column
                                             : line.tokens.back().column +
                                                   line.tokens.back().text.size();
    throw ParseError(line.number, col,
                     "expected " + std::to_string(n) + " tokens, found " +
                         std::to_string(line.tokens.size()));
  }
}

void expect_end(Cursor const& cur) {
  if (!cur.done()) {
    auto const& line = cur.peek();
    throw ParseError(line.number, line.tokens[0].column, "trailing input");
  }
}

std::vector<Element> read_rows(Cursor& cur, std::size_t n, char const* what) {
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    auto const& line = cur.take(what);
    expect_width(line, n);
    for (std::size_t k = 0; k < n; ++k)
      table.push_back(static_cast<Element>(number(line, k, "table entry")));
  }
  return table;
}

constexpr std::uint64_t kMaxParsedSize = 1u << 16;

std::size_t bounded(Line const& line, std::size_t k, char const* what) {
  auto v = number(line, k, what);
  if (v > kMaxParsedSize) {
    throw ParseError(line.number, line.tokens[k].column, std::string(what) + " too large");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Magma

FiniteMagma parse_magma(std::string_view text) {
  Cursor cur(text);
  auto const& head = cur.take("'magma <order>'");
  expect_keyword(head, "magma");
  expect_width(head, 2);
  std::size_t n = bounded(head, 1, "order");
  std::optional<Element> zero;
  if (!cur.done() && cur.peek().tokens[0].text == "zero") {
    auto const& line = cur.take("zero");
    expect_width(line, 2);
    zero = static_cast<Element>(number(line, 1, "zero index"));
  }
  auto table = read_rows(cur, n, "table row");
  expect_end(cur);
  return FiniteMagma::validate(n, std::move(table), zero);
}

std::string print_magma(FiniteMagma const& m) {
  std::ostringstream out;
  out << "magma " << m.order() << '\n';
  if (m.zero()) out << "zero " << *m.zero() << '\n';
  for (Element a = 0; a < m.order(); ++a) {
    for (Element b = 0; b < m.order(); ++b) out << (b ? " " : "") << m.product(a, b);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Category

FinitePrecategory parse_category(std::string_view text) {
  Cursor cur(text);
  auto const& head = cur.take("'category <objects> <morphisms>'");
  expect_keyword(head, "category");
  expect_width(head, 3);
  std::size_t objects = bounded(head, 1, "object count");
  std::size_t count = bounded(head, 2, "morphism count");

  if (!cur.done() && cur.peek().tokens[0].text == "groupoid-presentation") {
    auto const& line = cur.take("groupoid-presentation");
    expect_width(line, 2);
    std::size_t q = bounded(line, 1, "group order");
    auto table = read_rows(cur, q, "group table row");
    expect_end(cur);
    if (q == 0) throw ParseError(line.number, line.tokens[1].column, "empty group");
    if (objects * objects * q != count) {
      throw ParseError(head.number, head.tokens[2].column,
                       "a connected groupoid on " + std::to_string(objects) +
                           " objects with vertex group of order " + std::to_string(q) +
                           " has " + std::to_string(objects * objects * q) + " morphisms");
    }
    return connected_groupoid(objects, FiniteMagma::validate(q, std::move(table)));
  }

  std::vector<MorphismEnds> ends;
  std::vector<std::optional<Morphism>> identity(objects);
  for (std::size_t s = 0; s < count; ++s) {
    auto const& line = cur.take("morphism line");
    expect_keyword(line, "m");
    if (line.tokens.size() != 3 && line.tokens.size() != 4) expect_width(line, 3);
    auto dom = number(line, 1, "domain");
    auto cod = number(line, 2, "codomain");
    if (dom >= objects || cod >= objects) {
      throw ParseError(line.number, line.tokens[dom >= objects ? 1 : 2].column,
                       "object index out of range");
    }
    if (line.tokens.size() == 4) {
      if (line.tokens[3].text != "id") {
        throw ParseError(line.number, line.tokens[3].column, "expected 'id'");
      }
      if (identity[dom]) {
        throw ParseError(line.number, line.tokens[3].column, "second identity at object");
      }
      identity[dom] = static_cast<Morphism>(s);
    }
    ends.push_back({static_cast<Object>(dom), static_cast<Object>(cod)});
  }

  std::vector<std::int32_t> comp(count * count, FinitePrecategory::kUndefined);
  std::size_t last_line = 0;
  while (!cur.done()) {
    auto const& line = cur.take("composition triple");
    last_line = line.number;
    expect_keyword(line, "c");
    expect_width(line, 4);
    auto s = number(line, 1, "morphism");
    auto t = number(line, 2, "morphism");
    auto st = number(line, 3, "morphism");
    for (std::size_t k = 1; k <= 3; ++k) {
      if (number(line, k, "morphism") >= count) {
        throw ParseError(line.number, line.tokens[k].column, "morphism index out of range");
      }
    }
    auto& cell = comp[s * count + t];
    if (cell >= 0) {
      throw ParseError(line.number, line.tokens[0].column, "duplicate composition triple");
    }
    cell = static_cast<std::int32_t>(st);
  }
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t)
      if (ends[s].dom == ends[t].cod && comp[s * count + t] < 0) {
        throw ParseError(last_line + 1, 1,
                         "composition table is partial: no triple for (" +
                             std::to_string(s) + "," + std::to_string(t) + ")");
      }
  return FinitePrecategory::validate(objects, std::move(ends), std::move(comp),
                                     std::move(identity));
}

std::string print_category(FinitePrecategory const& c) {
  std::ostringstream out;
  out << "category " << c.object_count() << ' ' << c.morphism_count() << '\n';
  for (Morphism s = 0; s < c.morphism_count(); ++s) {
    out << "m " << c.dom(s) << ' ' << c.cod(s);
    if (c.is_identity(s)) out << " id";
    out << '\n';
  }
  for (Morphism s = 0; s < c.morphism_count(); ++s)
    for (Morphism t = 0; t < c.morphism_count(); ++t)
      if (auto st = c.compose(s, t)) out << "c " << s << ' ' << t << ' ' << *st << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Relation

PairRelation parse_relation(std::string_view text) {
  Cursor cur(text);
  auto const& head = cur.take("'relation <left> <right> <count>'");
  expect_keyword(head, "relation");
  expect_width(head, 4);
  std::size_t left = bounded(head, 1, "left order");
  std::size_t right = bounded(head, 2, "right order");
  std::size_t count = bounded(head, 3, "pair count");
  PairRelation r(left, right);
  for (std::size_t k = 0; k < count; ++k) {
    auto const& line = cur.take("pair");
    expect_width(line, 2);
    auto g = number(line, 0, "left element");
    auto h = number(line, 1, "right element");
    if (g >= left || h >= right) {
      throw Error(ErrorCode::index_out_of_range,
                  "pair (" + std::to_string(g) + "," + std::to_string(h) + ") on line " +
                      std::to_string(line.number));
    }
    if (r.contains(static_cast<Element>(g), static_cast<Element>(h))) {
      throw ParseError(line.number, 1, "duplicate pair");
    }
    r.insert(static_cast<Element>(g), static_cast<Element>(h));
  }
  expect_end(cur);
  return r;
}

std::string print_relation(PairRelation const& r) {
  std::ostringstream out;
  out << "relation " << r.left_order() << ' ' << r.right_order() << ' ' << r.size() << '\n';
  for (auto [g, h] : r.pairs()) out << g << ' ' << h << '\n';
  return out.str();
}

Document parse_document(std::string_view text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string_view::npos) throw ParseError(1, 1, "empty document");
  if (text[i] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(1, e.byte, e.what());
    }
    bool family = j.is_object() && j.contains("target");
    return {family ? DocumentKind::family : DocumentKind::report, std::string(text)};
  }
  auto lines = tokenize(text);
  auto word = lines.front().tokens.front().text;
  if (word == "magma") return {DocumentKind::magma, parse_magma(text)};
  if (word == "category") return {DocumentKind::category, parse_category(text)};
  if (word == "relation") return {DocumentKind::relation, parse_relation(text)};
  throw ParseError(lines.front().number, lines.front().tokens.front().column,
                   "unknown document kind '" + std::string(word) + "'");
}

// ---------------------------------------------------------------------------
// JSON

namespace {

std::string report(json items) {
  json j;
  j["count"] = std::to_string(items.size());
  j["items"] = std::move(items);
  return j.dump();
}

json set_json(ElementSet const& s) { return json(s.members()); }

std::string decimal(BigInt const& v) { return v.str(); }

json optional_bool(std::optional<bool> const& b) {
  return b ? json(*b) : json(nullptr);
}

}  // namespace

std::string emit_report(std::vector<std::string> const& items) {
  json arr = json::array();
  for (auto const& item : items) arr.push_back(json::parse(item));
  return report(std::move(arr));
}

std::string emit_maps(std::vector<ElementMap> const& maps) {
  json arr = json::array();
  for (auto const& m : maps) arr.push_back(m);
  return report(std::move(arr));
}

std::string emit_sets(std::vector<ElementSet> const& sets) {
  json arr = json::array();
  for (auto const& s : sets) arr.push_back(set_json(s));
  return report(std::move(arr));
}

std::string emit_relations(std::vector<PairRelation> const& relations) {
  json arr = json::array();
  for (auto const& r : relations) {
    json pairs = json::array();
    for (auto [g, h] : r.pairs()) pairs.push_back({g, h});
    arr.push_back(std::move(pairs));
  }
  return report(std::move(arr));
}

std::string emit_morphism_maps(std::vector<MorphismMap> const& maps) {
  json arr = json::array();
  for (auto const& m : maps) arr.push_back({{"morphisms", m.morphisms}, {"objects", m.objects}});
  return report(std::move(arr));
}

std::string emit_magmas(std::vector<FiniteMagma> const& magmas) {
  json arr = json::array();
  for (auto const& m : magmas) arr.push_back(print_magma(m));
  return report(std::move(arr));
}

std::string emit_count_report(CountReport const& r) {
  json params = json::object();
  for (auto const& [k, v] : r.parameters) params[k] = v;
  json variants = json::object();
  for (auto const& v : r.variants)
    variants[v.name] = {{"agrees", optional_bool(v.agrees)}, {"value", decimal(v.value)}};
  json j{{"formula", r.formula},
         {"parameters", params},
         {"closed_form", decimal(r.closed_form)},
         {"brute_force", r.brute_force ? json(decimal(*r.brute_force)) : json(nullptr)},
         {"agrees", optional_bool(r.agrees)},
         {"variants", variants}};
  return j.dump();
}

std::string emit_verdicts(std::vector<Verdict> const& verdicts) {
  json arr = json::array();
  for (auto const& v : verdicts)
    arr.push_back({{"property", v.property},
                   {"holds", v.holds},
                   {"witness", v.witness},
                   {"span_holds", v.span_holds}});
  return report(std::move(arr));
}

std::string emit_family_report(FamilyReport const& r) {
  json arr = json::array();
  for (auto const& w : r.families) {
    json item = json::object();
    for (std::size_t h = 0; h < w.parts.size(); ++h) item[std::to_string(h)] = set_json(w.parts[h]);
    arr.push_back(std::move(item));
  }
  json j;
  j["count"] = std::to_string(arr.size());
  j["items"] = std::move(arr);
  j["contracted"] = r.contracted;
  j["kind"] = r.kind;
  j["target"] = r.target_text;
  return j.dump();
}

FiniteMagma target_magma(std::string_view target_text) {
  auto doc = parse_document(target_text);
  if (doc.kind == DocumentKind::magma) return std::get<FiniteMagma>(doc.payload);
  if (doc.kind == DocumentKind::category) return adjoin_zero(std::get<FinitePrecategory>(doc.payload));
  throw ParseError(1, 1, "target must be a magma or a category");
}

FamilyReport parse_family_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(1, e.byte, e.what());
  }
  FamilyReport r;
  try {
    r.kind = j.at("kind").get<std::string>();
    r.contracted = j.value("contracted", false);
    r.target_text = j.at("target").get<std::string>();
    auto target = target_magma(r.target_text);
    for (auto const& item : j.at("items")) {
      ElementaryFamily w{target, std::vector<ElementSet>(target.order())};
      for (auto const& [key, members] : item.items()) {
        std::size_t h = std::stoul(key);
        if (h >= target.order()) {
          throw Error(ErrorCode::basis_mismatch, "family names target element " + key);
        }
        for (auto const& b : members) {
          auto idx = b.get<std::size_t>();
          if (idx >= kMaxElements) throw Error(ErrorCode::basis_mismatch, "basis index too large");
          w.parts[h].insert(idx);
        }
      }
      r.families.push_back(std::move(w));
    }
  } catch (json::exception const& e) {
    throw ParseError(1, 1, std::string("malformed family report: ") + e.what());
  } catch (std::invalid_argument const&) {
    throw ParseError(1, 1, "malformed target element key");
  }
  return r;
}

}  // namespace gradeforge::io
