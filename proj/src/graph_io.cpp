#include "irreg/graph_io.hpp"

#include "irreg/errors.hpp"

#include <charconv>
#include <sstream>

namespace irreg {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  if (line.empty()) throw InputError("empty graph6 line");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw InputError("invalid graph6 character in '" + std::string(line) + "'");
  }
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long value = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= line.size()) throw InputError("truncated graph6 size field");
      value = (value << 6) | (line[pos++] - kBias);
    }
    return value;
  };
  if (line[0] != '~') {
    n = take(1);
  } else if (line.size() > 1 && line[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n < 1) throw InputError("graph6 graph with no vertices");
  if (n > 100000) throw CapabilityError("graph6 order too large: " + std::to_string(n));
  const long long pairs = n * (n - 1) / 2;
  const long long expected = (pairs + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != expected) {
    throw InputError("graph6 length mismatch for n=" + std::to_string(n));
  }
  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  return b.build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<long long> numbers;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw InputError("edge list: not an integer: '" + token + "'");
      }
      numbers.push_back(value);
    }
  }
  if (numbers.size() < 2) throw InputError("edge list: missing 'n m' header");
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 1 || n > 100000) throw InputError("edge list: invalid vertex count " + std::to_string(n));
  if (m < 0) throw InputError("edge list: negative edge count");
  if (static_cast<long long>(numbers.size()) != 2 + 2 * m) {
    throw InputError("edge list: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string((numbers.size() - 2) / 2) + (numbers.size() % 2 ? " and a dangling value" : ""));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long k = 0; k < m; ++k) {
    const long long u = numbers[2 + 2 * k];
    const long long v = numbers[3 + 2 * k];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge list: vertex out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return from_edge_list(static_cast<int>(n), edges);
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::istringstream lines(text);
  std::string line;
  std::string_view first;
  while (std::getline(lines, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    first = t;
    break;
  }
  if (first.empty()) throw InputError("no graph in input");

  std::istringstream probe{std::string(first)};
  long long a = 0, b = 0;
  std::string rest;
  if ((probe >> a >> b) && !(probe >> rest)) return {parse_edge_list(text)};

  std::vector<Graph> out;
  std::istringstream again(text);
  while (std::getline(again, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(from_graph6(t));
  }
  return out;
}

}  // namespace irreg
