#include "token_spectra/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "token_spectra/error.hpp"

namespace token_spectra {

namespace {

// Splits a data line into exactly two non-negative decimal integers.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  auto skip_ws = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    return i;
  };
  auto read_int = [&](std::size_t& i, long long& out) {
    i = skip_ws(i);
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), out);
    if (ec != std::errc{} || out < 0) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    return true;
  };
  std::size_t i = 0;
  if (!read_int(i, a) || !read_int(i, b)) return false;
  return skip_ws(i) == line.size();
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    long long a = 0, b = 0;
    if (!parse_pair(line, a, b)) parse_fail(lineno, "expected two non-negative integers");
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a >= n || b >= n) parse_fail(lineno, "vertex out of range");
    if (a == b) parse_fail(lineno, "self-loop");
    if (a > b) parse_fail(lineno, "edge must satisfy u < v");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) parse_fail(lineno, "missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    parse_fail(lineno, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_edge_list(out, g, comments);
  return out.str();
}

}  // namespace token_spectra
