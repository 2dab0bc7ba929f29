#include "oddcycle/pattern.hpp"

#include "oddcycle/errors.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace oddcycle {

Pattern Pattern::cycle(unsigned m) {
  if (m < 2) {
    throw InputError("cycle pattern needs m >= 2");
  }
  return {Kind::cycle, m, 0, 0};
}

Pattern Pattern::path(unsigned m) { return {Kind::path, m, 0, 0}; }

Pattern Pattern::figure_eight(unsigned q, unsigned r) {
  if (q < 1 || r < 1) {
    throw InputError("figure-eight pattern needs q >= 1 and r >= 1");
  }
  return {Kind::figure_eight, 0, q, r};
}

namespace {

unsigned parse_count(const std::string &digits, const std::string &whole) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError("cannot parse pattern '" + whole + "'");
  }
  return static_cast<unsigned>(std::stoul(digits));
}

} // namespace

Pattern Pattern::parse(const std::string &text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower.rfind("fig8:", 0) == 0) {
    const auto rest = lower.substr(5);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) {
      throw InputError("figure-eight pattern must look like fig8:q,r");
    }
    return figure_eight(parse_count(rest.substr(0, comma), text),
                        parse_count(rest.substr(comma + 1), text));
  }
  if (!lower.empty() && lower[0] == 'c') {
    return cycle(parse_count(lower.substr(1), text));
  }
  if (!lower.empty() && lower[0] == 'p') {
    return path(parse_count(lower.substr(1), text));
  }
  throw InputError("unknown pattern '" + text + "' (expected cN, pN or fig8:q,r)");
}

std::string Pattern::name() const {
  switch (kind) {
  case Kind::cycle:
    return "C" + std::to_string(length);
  case Kind::path:
    return "P" + std::to_string(length);
  case Kind::figure_eight:
    return "fig8:" + std::to_string(q) + "," + std::to_string(r);
  }
  return {};
}

std::size_t Pattern::vertex_count() const {
  switch (kind) {
  case Kind::cycle:
    return length;
  case Kind::path:
    return length + 1;
  case Kind::figure_eight:
    return 2 * q + 2 * r;
  }
  return 0;
}

std::size_t Pattern::edge_count() const {
  switch (kind) {
  case Kind::cycle:
    return length == 2 ? 1 : length;
  case Kind::path:
    return length;
  case Kind::figure_eight:
    return (q == 1 ? 1 : 2 * q) + 2 * r + 1;
  }
  return 0;
}

Graph Pattern::graph() const {
  std::vector<Edge> edges;
  switch (kind) {
  case Kind::cycle:
    for (Vertex i = 0; i < length; ++i) {
      edges.emplace_back(i, (i + 1) % length);
    }
    break;
  case Kind::path:
    for (Vertex i = 0; i < length; ++i) {
      edges.emplace_back(i, i + 1);
    }
    break;
  case Kind::figure_eight: {
    // Even cycle on 0, 1..2q-1; odd cycle on 0, 2q..2q+2r-1.
    const Vertex even = 2 * q;
    for (Vertex i = 0; i < even; ++i) {
      edges.emplace_back(i, (i + 1) % even);
    }
    const Vertex odd = 2 * r + 1;
    auto label = [&](Vertex i) { return i == 0 ? Vertex{0} : even - 1 + i; };
    for (Vertex i = 0; i < odd; ++i) {
      edges.emplace_back(label(i), label((i + 1) % odd));
    }
    break;
  }
  }
  // from_edge_list collapses the doubled edge of C_2.
  return Graph::from_edge_list(vertex_count(), edges);
}

} // namespace oddcycle
