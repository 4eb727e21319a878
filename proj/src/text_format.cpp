#include "aclat/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "aclat/duality.hpp"
#include "aclat/error.hpp"

namespace aclat {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < raw.size()) {
      while (i < raw.size() && space(raw[i])) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !space(raw[i])) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
  }
  return lines;
}

void expect_keyword(const Line& line, std::string_view keyword) {
  if (line.tokens.front().text != keyword)
    parse_error(line.number, line.tokens.front().column,
                "expected '" + std::string(keyword) + "', found '" + std::string(line.tokens.front().text) + "'");
}

struct OrderSpec {
  std::vector<std::string> labels;
  std::vector<OrderedPair> pairs;
};

OrderSpec parse_order_body(const std::vector<Line>& lines, std::size_t first) {
  const std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  if (lines.size() < first + 2) parse_error(last_line + 1, 1, "expected 'elements:' and 'covers:' lines");
  if (lines.size() > first + 2) parse_error(lines[first + 2].number, 1, "unexpected extra line");
  const Line& elements = lines[first];
  const Line& cover_line = lines[first + 1];
  expect_keyword(elements, "elements:");
  expect_keyword(cover_line, "covers:");

  OrderSpec spec;
  for (std::size_t t = 1; t < elements.tokens.size(); ++t) {
    const Token& tok = elements.tokens[t];
    if (tok.text.find('<') != std::string_view::npos) parse_error(elements.number, tok.column, "labels may not contain '<'");
    for (const auto& existing : spec.labels)
      if (existing == tok.text) parse_error(elements.number, tok.column, "duplicate label '" + existing + "'");
    spec.labels.emplace_back(tok.text);
  }
  auto lookup = [&](std::string_view label, const Token& tok) -> ElementId {
    for (ElementId i = 0; i < spec.labels.size(); ++i)
      if (spec.labels[i] == label) return i;
    parse_error(cover_line.number, tok.column, "unknown element '" + std::string(label) + "'");
  };
  for (std::size_t t = 1; t < cover_line.tokens.size(); ++t) {
    const Token& tok = cover_line.tokens[t];
    const auto lt = tok.text.find('<');
    if (lt == std::string_view::npos || lt == 0 || lt + 1 == tok.text.size())
      parse_error(cover_line.number, tok.column, "expected a cover pair 'lower<upper'");
    spec.pairs.emplace_back(lookup(tok.text.substr(0, lt), tok), lookup(tok.text.substr(lt + 1), tok));
  }
  return spec;
}

std::string header_name(const Line& header) {
  if (header.tokens.size() != 2)
    parse_error(header.number, header.tokens.size() > 2 ? header.tokens[2].column : header.tokens[0].column,
                "expected '" + std::string(header.tokens[0].text) + " <name>'");
  return std::string(header.tokens[1].text);
}

NamedPoset parse_poset_lines(const std::vector<Line>& lines) {
  if (lines.empty()) parse_error(1, 1, "empty input");
  expect_keyword(lines[0], "poset");
  NamedPoset out{header_name(lines[0]), {}};
  auto spec = parse_order_body(lines, 1);
  out.poset = poset_from_covers(std::move(spec.labels), spec.pairs);
  return out;
}

NamedLattice parse_lattice_lines(const std::vector<Line>& lines, const std::filesystem::path& base_dir) {
  if (lines.empty()) parse_error(1, 1, "empty input");
  expect_keyword(lines[0], "lattice");
  const Line& header = lines[0];
  if (header.tokens.size() == 3 && header.tokens[1].text == "from-poset") {
    if (lines.size() > 1) parse_error(lines[1].number, 1, "unexpected line after 'lattice from-poset'");
    const auto source = base_dir / std::string(header.tokens[2].text);
    auto obj = load_object(source);
    const auto* p = std::get_if<NamedPoset>(&obj);
    if (!p) parse_error(header.number, header.tokens[2].column, source.string() + " does not hold a poset");
    return NamedLattice{"E(" + p->name + ")", clopen_downset_lattice(p->poset).lattice};
  }
  NamedLattice out{header_name(header), {}};
  auto spec = parse_order_body(lines, 1);
  out.lattice = lattice_from_order(poset_from_covers(std::move(spec.labels), spec.pairs));
  return out;
}

std::string join_labels(const Poset& p, const std::vector<ElementId>& ids, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += p.label(ids[i]);
  }
  return out;
}

std::string format_order(std::string_view keyword, std::string_view name, const Poset& p) {
  std::string out = std::string(keyword) + " " + std::string(name) + "\nelements:";
  for (const auto& l : p.labels()) out += " " + l;
  out += "\ncovers:";
  for (auto [lo, hi] : covers(p)) out += " " + p.label(lo) + "<" + p.label(hi);
  return out + "\n";
}

}  // namespace

NamedPoset parse_poset(std::string_view text) { return parse_poset_lines(tokenize(text)); }

NamedLattice parse_lattice(std::string_view text, const std::filesystem::path& base_dir) {
  return parse_lattice_lines(tokenize(text), base_dir);
}

LoadedObject parse_object(std::string_view text, const std::filesystem::path& base_dir) {
  const auto lines = tokenize(text);
  if (lines.empty()) parse_error(1, 1, "empty input");
  const auto kind = lines[0].tokens[0].text;
  if (kind == "poset") return parse_poset_lines(lines);
  if (kind == "lattice") return parse_lattice_lines(lines, base_dir);
  parse_error(lines[0].number, lines[0].tokens[0].column, "expected 'poset' or 'lattice'");
}

NamedFunction parse_function(std::string_view text, const NamedLattice& lattice) {
  const auto lines = tokenize(text);
  if (lines.empty()) parse_error(1, 1, "empty input");
  const Line& header = lines[0];
  expect_keyword(header, "function");
  if (header.tokens.size() != 5 || header.tokens[3].text != "over" || !header.tokens[2].text.starts_with("arity="))
    parse_error(header.number, 1, "expected 'function <name> arity=<k> over <lattice-name>'");

  std::size_t arity = 0;
  const auto digits = header.tokens[2].text.substr(6);
  if (auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), arity);
      ec != std::errc{} || ptr != digits.data() + digits.size() || arity > 3)
    parse_error(header.number, header.tokens[2].column, "arity must be an integer between 0 and 3");
  if (header.tokens[4].text != lattice.name)
    parse_error(header.number, header.tokens[4].column,
                "function is over '" + std::string(header.tokens[4].text) + "' but the lattice is '" + lattice.name + "'");

  const Lattice& l = lattice.lattice;
  const std::size_t count = tuple_count(l.size(), arity);
  std::vector<ElementId> table(count);
  std::vector<bool> seen(count);
  auto element = [&](const Line& line, const Token& tok) {
    if (auto id = l.order().find(tok.text)) return *id;
    parse_error(line.number, tok.column, "unknown element '" + std::string(tok.text) + "'");
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != arity + 2 || line.tokens[arity].text != "->")
      parse_error(line.number, 1, "expected " + std::to_string(arity) + " arguments, '->' and a value");
    std::size_t index = 0;
    for (std::size_t a = 0; a < arity; ++a) index = index * l.size() + element(line, line.tokens[a]);
    if (seen[index]) parse_error(line.number, 1, "tuple defined twice");
    seen[index] = true;
    table[index] = element(line, line.tokens[arity + 1]);
  }
  for (std::size_t t = 0; t < count; ++t)
    if (!seen[t]) parse_error(lines.back().number + 1, 1, "partial table: " + std::to_string(count) + " tuples required");
  return NamedFunction{std::string(header.tokens[1].text), lattice.name, LatticeFunction(l.size(), arity, std::move(table))};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

LoadedObject load_object(const std::filesystem::path& path) {
  return parse_object(read_file(path), path.parent_path());
}

NamedLattice load_lattice(const std::filesystem::path& path) {
  auto obj = load_object(path);
  if (auto* l = std::get_if<NamedLattice>(&obj)) return std::move(*l);
  throw Error(ErrorKind::ParseError, path.string() + " holds a poset, expected a lattice");
}

std::string format_poset(std::string_view name, const Poset& p) { return format_order("poset", name, p); }

std::string format_lattice(std::string_view name, const Lattice& l) { return format_order("lattice", name, l.order()); }

std::string format_function(std::string_view name, std::string_view lattice_name, const Lattice& l,
                            const LatticeFunction& f) {
  std::string out = "function " + std::string(name) + " arity=" + std::to_string(f.arity()) + " over " +
                    std::string(lattice_name) + "\n";
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    for (ElementId a : f.tuple(t)) out += l.label(a) + " ";
    out += "-> " + l.label(f.at(t)) + "\n";
  }
  return out;
}

std::string to_dot(std::string_view name, const Poset& p) {
  auto quote = [](std::string_view s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph " + quote(name) + " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (ElementId i = 0; i < p.size(); ++i) out += "  n" + std::to_string(i) + " [label=" + quote(p.label(i)) + "];\n";
  for (auto [lo, hi] : covers(p)) out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return out + "}\n";
}

std::string format_interval(const Lattice& l, const Interval& i) {
  return "[" + l.label(i.lo) + ", " + l.label(i.hi) + "]";
}

std::string format_congruence(const Lattice& l, const Congruence& c) {
  std::string out;
  for (const auto& block : c.blocks()) {
    if (!out.empty()) out += " ";
    out += "{" + join_labels(l.order(), block, ",") + "}";
  }
  return out;
}

std::string lattice_report(std::string_view name, const Lattice& l) {
  const auto verdict = gratzer_verdict(l);
  std::string out = "lattice " + std::string(name) + "\n";
  out += "size: " + std::to_string(l.size()) + "\n";
  out += "bottom: " + l.label(l.bottom()) + "\n";
  out += "top: " + l.label(l.top()) + "\n";
  out += "covers: " + std::to_string(covers(l.order()).size()) + "\n";
  out += std::string("affine-complete: ") + (verdict.affine_complete ? "yes" : "no") + "\n";
  out += "witness: " + (verdict.witness ? format_interval(l, *verdict.witness) : std::string("none")) + "\n";
  return out;
}

}  // namespace aclat
