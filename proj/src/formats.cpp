#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <sstream>

#include "kura/errors.hpp"
#include "kura/graph.hpp"

namespace kura {
namespace {

std::string strip_trailing_ws(const std::string& s) {
  size_t end = s.size();
  while (end > 0 && std::isspace(static_cast<unsigned char>(s[end - 1]))) end--;
  return s.substr(0, end);
}

// Pulls the 6-bit groups of a graph6/sparse6 body.
struct BitReader {
  const std::string& s;
  size_t pos;        // byte position in s
  int bit = 0;       // next bit within current byte, 0..5
  BitReader(const std::string& str, size_t start) : s(str), pos(start) {}

  size_t bits_left() const { return (s.size() - pos) * 6 - bit; }
  int next_bit() {
    if (pos >= s.size()) throw parse_error("graph6: unexpected end of data", pos);
    int c = static_cast<unsigned char>(s[pos]) - 63;
    if (c < 0 || c > 63) throw parse_error("graph6: byte out of range", pos);
    int b = (c >> (5 - bit)) & 1;
    if (++bit == 6) {
      bit = 0;
      pos++;
    }
    return b;
  }
  long long next_bits(int k) {
    long long x = 0;
    for (int i = 0; i < k; i++) x = (x << 1) | next_bit();
    return x;
  }
};

// Reads the N(n) size field shared by graph6 and sparse6.
int read_g6_size(const std::string& s, size_t& pos) {
  if (pos >= s.size()) throw parse_error("graph6: empty input", pos);
  int c0 = static_cast<unsigned char>(s[pos]) - 63;
  if (c0 < 0 || c0 > 63) throw parse_error("graph6: size byte out of range", pos);
  if (c0 <= 62) {
    pos++;
    return c0;
  }
  // '~': 18-bit or 36-bit size
  pos++;
  bool wide = pos < s.size() && s[pos] == '~';
  if (wide) pos++;
  int nbytes = wide ? 6 : 3;
  long long n = 0;
  for (int i = 0; i < nbytes; i++, pos++) {
    if (pos >= s.size()) throw parse_error("graph6: truncated size field", pos);
    int c = static_cast<unsigned char>(s[pos]) - 63;
    if (c < 0 || c > 63) throw parse_error("graph6: size byte out of range", pos);
    n = (n << 6) | c;
  }
  if (n > 1'000'000) throw parse_error("graph6: vertex count too large", pos);
  return static_cast<int>(n);
}

size_t skip_header(const std::string& s, const std::string& hdr) {
  if (s.rfind(hdr, 0) == 0) return hdr.size();
  return 0;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  std::string s = strip_trailing_ws(text);
  size_t pos = skip_header(s, ">>graph6<<");
  int n = read_g6_size(s, pos);
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  size_t want = pos + static_cast<size_t>((nbits + 5) / 6);
  if (s.size() < want) throw parse_error("graph6: body too short", s.size());
  if (s.size() > want) throw parse_error("graph6: trailing data", want);
  BitReader br(s, pos);
  std::vector<std::pair<int, int>> es;
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++)
      if (br.next_bit()) es.push_back({i, j});
  return Graph(n, std::move(es));
}

std::string to_graph6(const Graph& g) {
  std::string out;
  long long n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < (1LL << 18)) {
    out.push_back('~');
    for (int sh = 12; sh >= 0; sh -= 6)
      out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  } else {
    out += "~~";
    for (int sh = 30; sh >= 0; sh -= 6)
      out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  }
  int acc = 0, nb = 0;
  for (int j = 1; j < g.n(); j++)
    for (int i = 0; i < j; i++) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nb = 0;
      }
    }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

Graph parse_sparse6(const std::string& text) {
  std::string s = strip_trailing_ws(text);
  size_t pos = skip_header(s, ">>sparse6<<");
  if (pos >= s.size() || s[pos] != ':')
    throw parse_error("sparse6: missing ':' prefix", pos);
  pos++;
  int n = read_g6_size(s, pos);
  int k = 1;
  while ((1 << k) < n) k++;  // bits needed for n-1 (k >= 1)
  BitReader br(s, pos);
  std::vector<std::pair<int, int>> es;
  long long v = 0;
  while (br.bits_left() >= static_cast<size_t>(k + 1)) {
    int b = br.next_bit();
    long long x = br.next_bits(k);
    if (b) v++;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw parse_error("sparse6: loop edge rejected", br.pos);
      es.push_back({static_cast<int>(x), static_cast<int>(v)});
    }
  }
  return Graph(n, std::move(es));  // parallel edges rejected by Graph ctor
}

Graph parse_edge_list(const std::string& text) {
  struct Line {
    size_t offset;
    long long a, b;
  };
  std::vector<Line> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      std::istringstream is(line);
      long long a, b;
      std::string extra;
      if (!(is >> a >> b) || (is >> extra))
        throw parse_error("edge list: expected two integers", pos);
      if (a < 0 || b < 0)
        throw parse_error("edge list: negative vertex id", pos);
      lines.push_back({pos, a, b});
    }
    pos = eol + 1;
  }
  // Header "n m" recognized when m matches the number of remaining lines and
  // every following vertex id fits under n; otherwise every line is an edge.
  long long rest_max = -1;
  for (size_t i = 1; i < lines.size(); i++)
    rest_max = std::max({rest_max, lines[i].a, lines[i].b});
  size_t first = 0;
  long long n = -1;
  if (!lines.empty() &&
      lines[0].b == static_cast<long long>(lines.size()) - 1 &&
      lines[0].a > rest_max) {
    n = lines[0].a;
    first = 1;
  }
  std::vector<std::pair<int, int>> es;
  long long maxv = -1;
  for (size_t i = first; i < lines.size(); i++) {
    es.push_back({static_cast<int>(lines[i].a), static_cast<int>(lines[i].b)});
    maxv = std::max({maxv, lines[i].a, lines[i].b});
  }
  if (n < 0) n = maxv + 1;
  try {
    return Graph(static_cast<int>(n), std::move(es));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("edge list: ") + e.what(), 0);
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("json: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw parse_error("json graph: need object with n and edges", 0);
  std::vector<std::pair<int, int>> es;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw parse_error("json graph: edge must be a pair", 0);
    es.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return Graph(j["n"].get<int>(), std::move(es));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("json graph: ") + e.what(), 0);
  }
}

std::string to_graph_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  auto arr = nlohmann::json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u, v});
  j["edges"] = arr;
  return j.dump();
}

Graph load_graph(const std::string& text, GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: {
      std::string s = strip_trailing_ws(text);
      size_t p = skip_header(s, ">>sparse6<<");
      if (p < s.size() && s[p] == ':') return parse_sparse6(text);
      return parse_graph6(text);
    }
    case GraphFormat::edge_list:
      return parse_edge_list(text);
    case GraphFormat::json:
      return parse_graph_json(text);
  }
  throw std::invalid_argument("load_graph: unknown format");
}

std::string save_graph(const Graph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6:
      return to_graph6(g);
    case GraphFormat::edge_list:
      return to_edge_list(g);
    case GraphFormat::json:
      return to_graph_json(g);
  }
  throw std::invalid_argument("save_graph: unknown format");
}

}  // namespace kura
