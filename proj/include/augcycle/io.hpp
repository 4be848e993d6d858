#pragma once

// Line-oriented digraph documents and DOT export.
//
// Format, in order, one section per line group; '#' starts a comment anywhere:
//
//   V1: u1 u2
//   V2: v1 v2 v3 v4
//   ARCS:
//   u1 v1
//   ...
//   INTRA:        (optional; present iff the document encodes a completion)
//   u1 u2
//
// ARCS must orient every cross pair exactly once; INTRA, when present, must
// form a tournament on each side. The position of a name in its V-line is the
// vertex index, so files fully determine index-based tie-breaking.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "augcycle/core.hpp"

namespace augcycle {

struct ParseError : std::runtime_error {
  int line;

  ParseError(int at, const std::string& msg)
      : std::runtime_error("line " + std::to_string(at) + ": " + msg), line(at) {}
};

struct DigraphDocument {
  std::vector<std::string> v1;
  std::vector<std::string> v2;
  std::vector<std::pair<std::string, std::string>> arcs;
  bool has_intra = false;
  std::vector<std::pair<std::string, std::string>> intra_arcs;

  friend bool operator==(const DigraphDocument&, const DigraphDocument&) = default;
};

namespace detail {

inline std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace detail

inline DigraphDocument parse_document(std::string_view text) {
  // Tokenized nonempty lines with their 1-based numbers.
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  {
    int no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t eol = std::min(text.find('\n', pos), text.size());
      std::string_view raw = text.substr(pos, eol - pos);
      ++no;
      pos = eol + 1;
      if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
        raw = raw.substr(0, hash);
      auto toks = detail::tokens_of(raw);
      if (!toks.empty()) lines.push_back({no, std::move(toks)});
      if (eol == text.size()) break;
    }
  }

  std::size_t at = 0;
  auto expect_header = [&](const char* name, bool required) {
    if (at < lines.size() && lines[at].second.front() == name) return true;
    if (required) {
      const int no = at < lines.size() ? lines[at].first : (lines.empty() ? 1 : lines.back().first);
      throw ParseError(no, std::string("expected ") + name + " section");
    }
    return false;
  };

  DigraphDocument doc;
  std::map<std::string, VertexId> names;
  for (auto [header, list] : {std::pair{"V1:", &doc.v1}, std::pair{"V2:", &doc.v2}}) {
    expect_header(header, true);
    auto& [no, toks] = lines[at];
    if (toks.size() < 2) throw ParseError(no, std::string(header) + " lists no vertices");
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const Side side = list == &doc.v1 ? Side::one : Side::two;
      if (!names.emplace(toks[i], VertexId{side, static_cast<int>(i) - 1}).second)
        throw ParseError(no, "duplicate vertex name " + toks[i]);
      list->push_back(toks[i]);
    }
    ++at;
  }

  auto lookup = [&](const std::string& name, int no) {
    const auto it = names.find(name);
    if (it == names.end()) throw ParseError(no, "unknown vertex name " + name);
    return it->second;
  };

  expect_header("ARCS:", true);
  if (lines[at].second.size() != 1) throw ParseError(lines[at].first, "ARCS: takes no names");
  int arcs_line = lines[at].first;
  ++at;

  BoolMatrix cross(static_cast<int>(doc.v1.size()), static_cast<int>(doc.v2.size()));
  BoolMatrix seen(static_cast<int>(doc.v1.size()), static_cast<int>(doc.v2.size()));
  while (at < lines.size() && lines[at].second.front() != "INTRA:") {
    auto& [no, toks] = lines[at];
    if (toks.size() != 2) throw ParseError(no, "arc lines name exactly two vertices");
    const VertexId a = lookup(toks[0], no), b = lookup(toks[1], no);
    if (a.side == b.side) throw ParseError(no, "arc " + toks[0] + " " + toks[1] + " joins one side");
    const int i = a.side == Side::one ? a.index : b.index;
    const int j = a.side == Side::one ? b.index : a.index;
    if (seen.at(i, j))
      throw ParseError(no, "pair " + toks[0] + " " + toks[1] + " oriented twice");
    seen.set(i, j, true);
    cross.set(i, j, a.side == Side::one);
    doc.arcs.emplace_back(toks[0], toks[1]);
    arcs_line = no;
    ++at;
  }
  for (int i = 0; i < seen.rows(); ++i)
    for (int j = 0; j < seen.cols(); ++j)
      if (!seen.at(i, j))
        throw ParseError(arcs_line, "missing cross pair " + doc.v1[i] + " " + doc.v2[j]);

  if (at < lines.size()) {
    auto& [no, toks] = lines[at];
    if (toks.front() != "INTRA:") throw ParseError(no, "unexpected section " + toks.front());
    if (toks.size() != 1) throw ParseError(no, "INTRA: takes no names");
    doc.has_intra = true;
    ++at;
    std::map<std::pair<int, int>, bool> intra[2];  // unordered index pair -> oriented low->high
    while (at < lines.size()) {
      auto& [ino, itoks] = lines[at];
      if (itoks.size() != 2) throw ParseError(ino, "arc lines name exactly two vertices");
      const VertexId a = lookup(itoks[0], ino), b = lookup(itoks[1], ino);
      if (a.side != b.side)
        throw ParseError(ino, "intra arc " + itoks[0] + " " + itoks[1] + " crosses sides");
      if (a.index == b.index) throw ParseError(ino, "self-arc " + itoks[0]);
      const std::pair<int, int> key = std::minmax(a.index, b.index);
      auto& side_map = intra[a.side == Side::one ? 0 : 1];
      if (side_map.contains(key))
        throw ParseError(ino, "pair " + itoks[0] + " " + itoks[1] + " oriented twice");
      side_map[key] = a.index < b.index;
      doc.intra_arcs.emplace_back(itoks[0], itoks[1]);
      ++at;
    }
    for (int s = 0; s < 2; ++s) {
      const auto& list = s == 0 ? doc.v1 : doc.v2;
      for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
          if (!intra[s].contains({static_cast<int>(i), static_cast<int>(j)}))
            throw ParseError(lines.back().first, "missing intra pair " + list[i] + " " + list[j]);
    }
  }
  return doc;
}

inline BipartiteTournament to_bipartite(const DigraphDocument& doc) {
  std::map<std::string, VertexId> names;
  for (std::size_t i = 0; i < doc.v1.size(); ++i)
    names[doc.v1[i]] = {Side::one, static_cast<int>(i)};
  for (std::size_t j = 0; j < doc.v2.size(); ++j)
    names[doc.v2[j]] = {Side::two, static_cast<int>(j)};
  BoolMatrix cross(static_cast<int>(doc.v1.size()), static_cast<int>(doc.v2.size()));
  for (const auto& [from, to] : doc.arcs) {
    const VertexId a = names.at(from), b = names.at(to);
    if (a.side == Side::one) cross.set(a.index, b.index, true);
  }
  return {static_cast<int>(doc.v1.size()), static_cast<int>(doc.v2.size()), std::move(cross)};
}

inline Completion to_completion(const DigraphDocument& doc) {
  if (!doc.has_intra)
    throw std::invalid_argument("to_completion: document has no INTRA section");
  BipartiteTournament base = to_bipartite(doc);
  std::map<std::string, VertexId> names;
  for (std::size_t i = 0; i < doc.v1.size(); ++i)
    names[doc.v1[i]] = {Side::one, static_cast<int>(i)};
  for (std::size_t j = 0; j < doc.v2.size(); ++j)
    names[doc.v2[j]] = {Side::two, static_cast<int>(j)};
  BoolMatrix in1(base.n1(), base.n1()), in2(base.n2(), base.n2());
  for (const auto& [from, to] : doc.intra_arcs) {
    const VertexId a = names.at(from), b = names.at(to);
    (a.side == Side::one ? in1 : in2).set(a.index, b.index, true);
  }
  return {std::move(base), std::move(in1), std::move(in2)};
}

// Document for d with the given names, cross arcs listed pair by pair.
inline DigraphDocument document_from(const BipartiteTournament& d, std::vector<std::string> names1,
                                     std::vector<std::string> names2) {
  if (static_cast<int>(names1.size()) != d.n1() || static_cast<int>(names2.size()) != d.n2())
    throw std::invalid_argument("document_from: name count mismatch");
  DigraphDocument doc;
  doc.v1 = std::move(names1);
  doc.v2 = std::move(names2);
  for (int i = 0; i < d.n1(); ++i)
    for (int j = 0; j < d.n2(); ++j) {
      if (d.cross_arc(i, j))
        doc.arcs.emplace_back(doc.v1[i], doc.v2[j]);
      else
        doc.arcs.emplace_back(doc.v2[j], doc.v1[i]);
    }
  return doc;
}

// Same base document plus the completion's intra arcs.
inline DigraphDocument with_completion(DigraphDocument doc, const Completion& t) {
  doc.has_intra = true;
  doc.intra_arcs.clear();
  for (const auto& [side, list] : {std::pair{Side::one, &doc.v1}, std::pair{Side::two, &doc.v2}}) {
    const int ns = static_cast<int>(list->size());
    for (int i = 0; i < ns; ++i)
      for (int j = i + 1; j < ns; ++j) {
        if (t.arc(VertexId{side, i}, VertexId{side, j}))
          doc.intra_arcs.emplace_back((*list)[i], (*list)[j]);
        else
          doc.intra_arcs.emplace_back((*list)[j], (*list)[i]);
      }
  }
  return doc;
}

inline std::string format_document(const DigraphDocument& doc) {
  std::ostringstream out;
  out << "V1:";
  for (const auto& n : doc.v1) out << ' ' << n;
  out << "\nV2:";
  for (const auto& n : doc.v2) out << ' ' << n;
  out << "\nARCS:\n";
  for (const auto& [from, to] : doc.arcs) out << from << ' ' << to << '\n';
  if (doc.has_intra) {
    out << "INTRA:\n";
    for (const auto& [from, to] : doc.intra_arcs) out << from << ' ' << to << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string dot_quote(const std::string& name) {
  std::string q = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + "\"";
}

}  // namespace detail

// DOT text; cross arcs solid, intra arcs dashed.
inline std::string export_dot(const DigraphDocument& doc) {
  std::ostringstream out;
  out << "digraph {\n  rankdir=LR;\n";
  for (const auto& [cluster, list] :
       {std::pair{"side1", &doc.v1}, std::pair{"side2", &doc.v2}}) {
    out << "  subgraph cluster_" << cluster << " {\n    label=" << detail::dot_quote(cluster)
        << ";\n";
    for (const auto& n : *list) out << "    " << detail::dot_quote(n) << ";\n";
    out << "  }\n";
  }
  for (const auto& [from, to] : doc.arcs)
    out << "  " << detail::dot_quote(from) << " -> " << detail::dot_quote(to) << ";\n";
  for (const auto& [from, to] : doc.intra_arcs)
    out << "  " << detail::dot_quote(from) << " -> " << detail::dot_quote(to)
        << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace augcycle
