#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "domcolor/errors.hpp"
#include "domcolor/graph.hpp"

namespace domcolor {

// ---------------------------------------------------------------------------
// graph6, standard short form only (n <= 62). Header byte is n + 63; the
// upper triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... are packed six
// per byte, most significant bit first, zero-padded, each byte + 63.
// ---------------------------------------------------------------------------

inline std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6 long form unsupported (n > 62)");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.empty())
    throw ParseError(ParseError::Kind::MalformedHeader, "empty graph6 string");
  unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126)
    throw ParseError(ParseError::Kind::MalformedHeader,
                     "graph6 long form unsupported (header '~')");
  if (header < 63 || header > 125)
    throw ParseError(ParseError::Kind::MalformedHeader,
                     "graph6 header byte out of range");
  int n = header - 63;
  int bits = n * (n - 1) / 2;
  std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - 1 < body)
    throw ParseError(ParseError::Kind::TruncatedBody,
                     "graph6 bit body shorter than n*(n-1)/2 bits");
  if (text.size() - 1 > body)
    throw ParseError(ParseError::Kind::TrailingData,
                     "unexpected characters after graph6 bit body");
  EdgeList edges;
  int bit_index = 0;
  int u = 0, v = 1;
  for (std::size_t i = 1; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError(ParseError::Kind::OutOfRangeChar,
                       "graph6 body byte out of range");
    int word = c - 63;
    for (int b = 5; b >= 0 && bit_index < bits; --b, ++bit_index) {
      if ((word >> b) & 1) edges.emplace_back(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Edge-list text: first line "n" or "n root", then one "u v" line per edge.
// ---------------------------------------------------------------------------

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order();
  if (g.root()) out << ' ' << *g.root();
  out << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace detail {

inline bool parse_int_token(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::optional<int> root;
  EdgeList edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (n < 0) {
      long long nn = 0, rr = 0;
      if (toks.size() > 2 || !detail::parse_int_token(toks[0], nn))
        throw ParseError(ParseError::Kind::BadHeaderLine,
                         "expected 'n [root]' on the first line");
      if (nn < 0 || nn > kMaxVertices)
        throw ParseError(ParseError::Kind::BadHeaderLine,
                         "vertex count must be between 0 and 64");
      n = static_cast<int>(nn);
      if (toks.size() == 2) {
        if (!detail::parse_int_token(toks[1], rr) || rr < 0 || rr >= nn)
          throw ParseError(ParseError::Kind::BadHeaderLine,
                           "root index out of range on header line");
        root = static_cast<int>(rr);
      }
      continue;
    }
    long long u = 0, v = 0;
    if (toks.size() != 2 || !detail::parse_int_token(toks[0], u) ||
        !detail::parse_int_token(toks[1], v))
      throw ParseError(ParseError::Kind::BadLine,
                       "expected 'u v' on line " + std::to_string(lineno));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(ParseError::Kind::BadEndpoint,
                       "edge endpoint out of range on line " + std::to_string(lineno));
    if (u == v)
      throw ParseError(ParseError::Kind::SelfLoop,
                       "self-loop on line " + std::to_string(lineno));
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError(ParseError::Kind::DuplicateEdge,
                       "duplicate edge on line " + std::to_string(lineno));
    edges.push_back(e);
  }
  if (n < 0)
    throw ParseError(ParseError::Kind::BadHeaderLine, "missing header line");
  return Graph::from_edges(n, edges, root);
}

// ---------------------------------------------------------------------------
// Format dispatch. graph6 bytes are all >= '?' (63), so a leading digit
// safely identifies edge-list text.
// ---------------------------------------------------------------------------

enum class GraphFormat { Graph6, EdgeListText };

inline GraphFormat sniff_format(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return std::isdigit(static_cast<unsigned char>(c)) ? GraphFormat::EdgeListText
                                                       : GraphFormat::Graph6;
  }
  return GraphFormat::Graph6;
}

inline Graph parse_graph(std::string_view text,
                         std::optional<GraphFormat> format = std::nullopt) {
  GraphFormat f = format ? *format : sniff_format(text);
  if (f == GraphFormat::EdgeListText) return parse_edge_list(text);
  // Trim surrounding whitespace; graph6 payload is a single token.
  std::size_t b = text.find_first_not_of(" \t\r\n");
  std::size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    throw ParseError(ParseError::Kind::MalformedHeader, "empty graph text");
  return parse_graph6(text.substr(b, e - b + 1));
}

}  // namespace domcolor
