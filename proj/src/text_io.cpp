#include "tgraph/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace tgraph {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

namespace {

struct Parsed {
  std::optional<std::size_t> n;
  std::vector<Appearance> appearances;
};

template <typename T>
T parse_number(const std::string& token, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": bad number '" + token + "'");
  return value;
}

Parsed parse(std::istream& in) {
  Parsed out;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream fields(text);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens[0] == "n") {
      if (tokens.size() != 2 || out.n)
        throw ParseError("line " + std::to_string(line_no) + ": expected a single 'n <count>' line");
      out.n = parse_number<std::size_t>(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v t'");
    out.appearances.push_back({parse_number<Vertex>(tokens[0], line_no),
                               parse_number<Vertex>(tokens[1], line_no),
                               parse_number<double>(tokens[2], line_no)});
  }
  return out;
}

}  // namespace

void write_graph(std::ostream& out, const TemporalGraph& g) {
  out << "n " << g.n() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (double t : g.labels(e))
      out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << format_double(t) << '\n';
}

TemporalGraph read_graph(std::istream& in, std::optional<Window> window) {
  Parsed parsed = parse(in);
  if (!parsed.n) throw ParseError("missing 'n <count>' line");
  Window w{0.0, 1.0};
  if (window) {
    w = *window;
  } else {
    for (const auto& a : parsed.appearances) {
      w.start = std::min(w.start, a.t);
      w.end = std::max(w.end, a.t);
    }
  }
  for (const auto& a : parsed.appearances)
    if (a.u >= *parsed.n || a.v >= *parsed.n)
      throw ParseError("vertex id out of range in appearance " + std::to_string(a.u) +
                       " " + std::to_string(a.v));
  try {
    return TemporalGraph::from_appearances(*parsed.n, w, std::move(parsed.appearances));
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
}

std::vector<Appearance> read_appearances(std::istream& in) {
  return parse(in).appearances;
}

void write_appearances(std::ostream& out, std::size_t n,
                       const std::vector<Appearance>& appearances) {
  out << "n " << n << '\n';
  for (const auto& a : appearances)
    out << a.u << ' ' << a.v << ' ' << format_double(a.t) << '\n';
}

}  // namespace tgraph
