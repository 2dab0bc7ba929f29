#include "oddcycle/counting.hpp"

#include "oddcycle/errors.hpp"

#include <cmath>
#include <functional>

namespace oddcycle {

namespace {

bool add_into(std::uint64_t &acc, std::uint64_t v) {
  return !__builtin_add_overflow(acc, v, &acc);
}
bool add_into(Count &acc, const Count &v) {
  acc += v;
  return true;
}
bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t &out) {
  return !__builtin_mul_overflow(a, b, &out);
}
bool checked_mul(const Count &a, const Count &b, Count &out) {
  out = a * b;
  return true;
}

// Runs f with 64-bit arithmetic and falls back to Count when it reports
// overflow by returning nullopt.
template <class F> Count exact_scalar(F &&f) {
  if (auto narrow = f(std::uint64_t{})) {
    return Count(*narrow);
  }
  return *f(Count{});
}

template <class F> std::vector<Count> exact_vector(F &&f) {
  if (auto narrow = f(std::uint64_t{})) {
    return std::vector<Count>(narrow->begin(), narrow->end());
  }
  return *f(Count{});
}

// One walk step on a dense row-major table: next(x,y) = sum_{z ~ y} cur(x,z).
template <class T>
std::optional<std::vector<T>> walk_step(const Graph &g, const std::vector<T> &cur) {
  const auto n = g.vertex_count();
  std::vector<T> next(n * n, T{0});
  for (std::size_t x = 0; x < n; ++x) {
    const T *row = cur.data() + x * n;
    T *out = next.data() + x * n;
    for (Vertex y = 0; y < n; ++y) {
      T acc{0};
      for (Vertex z : g.neighbors(y)) {
        if (!add_into(acc, row[z])) {
          return std::nullopt;
        }
      }
      out[y] = std::move(acc);
    }
  }
  return next;
}

template <class T>
std::optional<std::vector<T>> walk_power(const Graph &g, unsigned k) {
  const auto n = g.vertex_count();
  std::vector<T> table(n * n, T{0});
  for (std::size_t x = 0; x < n; ++x) {
    table[x * n + x] = T{1};
  }
  for (unsigned step = 0; step < k; ++step) {
    auto next = walk_step(g, table);
    if (!next) {
      return std::nullopt;
    }
    table = std::move(*next);
  }
  return table;
}

// (A^m)_{xx} for every x, as sum_y w_a(x,y) w_b(x,y) with a + b = m.
template <class T>
std::optional<std::vector<T>> closed_walks(const Graph &g, unsigned m) {
  const auto n = g.vertex_count();
  const unsigned a = m / 2;
  auto left = walk_power<T>(g, a);
  if (!left) {
    return std::nullopt;
  }
  std::optional<std::vector<T>> right_storage;
  if (m - a != a) {
    right_storage = walk_step(g, *left);
    if (!right_storage) {
      return std::nullopt;
    }
  }
  const auto &right = right_storage ? *right_storage : *left;
  std::vector<T> diag(n, T{0});
  for (std::size_t x = 0; x < n; ++x) {
    T acc{0};
    T term{0};
    for (std::size_t y = 0; y < n; ++y) {
      const auto &l = (*left)[x * n + y];
      if (l == 0) {
        continue;
      }
      if (!checked_mul(l, right[x * n + y], term) || !add_into(acc, term)) {
        return std::nullopt;
      }
    }
    diag[x] = std::move(acc);
  }
  return diag;
}

template <class T> std::optional<T> sum_all(const std::vector<T> &values) {
  T acc{0};
  for (const auto &v : values) {
    if (!add_into(acc, v)) {
      return std::nullopt;
    }
  }
  return acc;
}

} // namespace

double to_double(const Count &c) { return c.convert_to<double>(); }

Count WalkTable::at(Vertex x, Vertex y) const {
  const auto index = static_cast<std::size_t>(x) * n_ + y;
  return std::visit([&](const auto &v) { return Count(v.at(index)); }, entries_);
}

Count WalkTable::row_sum(Vertex x) const {
  Count acc = 0;
  for (Vertex y = 0; y < n_; ++y) {
    acc += at(x, y);
  }
  return acc;
}

WalkTable walk_table(const Graph &g, unsigned k) {
  WalkTable t;
  t.length_ = k;
  t.n_ = g.vertex_count();
  if (auto narrow = walk_power<std::uint64_t>(g, k)) {
    t.entries_ = std::move(*narrow);
  } else {
    t.entries_ = *walk_power<Count>(g, k);
  }
  return t;
}

Count hom_count_cycle(const Graph &g, unsigned m) {
  if (m < 2) {
    throw InputError("hom_count_cycle: m must be at least 2");
  }
  return exact_scalar([&](auto zero) -> std::optional<decltype(zero)> {
    using T = decltype(zero);
    auto diag = closed_walks<T>(g, m);
    if (!diag) {
      return std::nullopt;
    }
    return sum_all(*diag);
  });
}

Count hom_count_path(const Graph &g, unsigned m) {
  return exact_scalar([&](auto zero) -> std::optional<decltype(zero)> {
    using T = decltype(zero);
    const auto n = g.vertex_count();
    // walks[y] = number of j-edge walks ending at y.
    std::vector<T> walks(n, T{1});
    for (unsigned step = 0; step < m; ++step) {
      std::vector<T> next(n, T{0});
      for (Vertex y = 0; y < n; ++y) {
        for (Vertex z : g.neighbors(y)) {
          if (!add_into(next[y], walks[z])) {
            return std::nullopt;
          }
        }
      }
      walks = std::move(next);
    }
    return sum_all(walks);
  });
}

std::vector<Count> rooted_odd_cycle_counts(const Graph &g, unsigned k) {
  if (k < 1) {
    throw InputError("rooted_odd_cycle_counts: k must be at least 1");
  }
  return exact_vector([&](auto zero) -> std::optional<std::vector<decltype(zero)>> {
    using T = decltype(zero);
    const auto n = g.vertex_count();
    auto wk = walk_power<T>(g, k);
    if (!wk) {
      return std::nullopt;
    }
    // (w_k 1_G)(x, y) = w_{k+1}(x, y)
    auto wk1 = walk_step(g, *wk);
    if (!wk1) {
      return std::nullopt;
    }
    std::vector<T> rooted(n, T{0});
    T term{0};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!checked_mul((*wk)[x * n + y], (*wk1)[x * n + y], term) ||
            !add_into(rooted[x], term)) {
          return std::nullopt;
        }
      }
    }
    return rooted;
  });
}

namespace {

// Depth-first enumeration of injective closed m-walks. The visitor returns
// false to stop the search.
void enumerate_injective_cycles(const Graph &g, unsigned m, std::uint64_t budget,
                                const std::function<bool(const std::vector<Vertex> &)> &visit) {
  if (m < 3) {
    throw InputError("injective cycle search needs m >= 3");
  }
  const auto n = g.vertex_count();
  std::vector<Vertex> path;
  path.reserve(m);
  std::vector<bool> used(n, false);
  std::uint64_t extensions = 0;
  bool stop = false;

  std::function<void()> extend = [&]() {
    const Vertex last = path.back();
    if (path.size() == m) {
      if (g.adjacent(last, path.front())) {
        stop = !visit(path);
      }
      return;
    }
    for (Vertex next : g.neighbors(last)) {
      if (used[next]) {
        continue;
      }
      if (++extensions > budget) {
        throw ResourceError("injective cycle search exceeded " +
                            std::to_string(budget) + " partial extensions");
      }
      used[next] = true;
      path.push_back(next);
      extend();
      path.pop_back();
      used[next] = false;
      if (stop) {
        return;
      }
    }
  };

  for (Vertex start = 0; start < n && !stop; ++start) {
    used[start] = true;
    path.push_back(start);
    extend();
    path.pop_back();
    used[start] = false;
  }
}

} // namespace

Count injective_count_cycle(const Graph &g, unsigned m, std::uint64_t budget) {
  Count total = 0;
  std::uint64_t narrow = 0;
  enumerate_injective_cycles(g, m, budget, [&](const std::vector<Vertex> &) {
    if (!add_into(narrow, std::uint64_t{1})) {
      total += narrow;
      narrow = 1;
    }
    return true;
  });
  return total + narrow;
}

std::optional<std::vector<Vertex>> find_cycle(const Graph &g, unsigned m,
                                              std::uint64_t budget) {
  std::optional<std::vector<Vertex>> found;
  enumerate_injective_cycles(g, m, budget, [&](const std::vector<Vertex> &cycle) {
    found = cycle;
    return false;
  });
  return found;
}

Count figure_eight_hom_count(const Graph &g, unsigned q, unsigned r) {
  if (q < 1 || r < 1) {
    throw InputError("figure-eight count needs q >= 1 and r >= 1");
  }
  return exact_scalar([&](auto zero) -> std::optional<decltype(zero)> {
    using T = decltype(zero);
    auto even = closed_walks<T>(g, 2 * q);
    auto odd = even ? closed_walks<T>(g, 2 * r + 1) : std::nullopt;
    if (!odd) {
      return std::nullopt;
    }
    T acc{0};
    T term{0};
    for (std::size_t x = 0; x < even->size(); ++x) {
      if (!checked_mul((*even)[x], (*odd)[x], term) || !add_into(acc, term)) {
        return std::nullopt;
      }
    }
    return acc;
  });
}

double figure_eight_bound(const NdlCertificate &cert, unsigned q, unsigned r) {
  const double d = static_cast<double>(cert.d);
  const double n = static_cast<double>(cert.n);
  const double l = cert.lambda;
  const double s = static_cast<double>(q + r);
  const double even_factor = q == 1 ? 1.0 : std::pow(l, 2.0 * q - 2);
  return std::pow(d, 2 * s + 1) / n + even_factor * std::pow(d, 2.0 * r + 2) +
         l * std::pow(d, 2 * s) + std::pow(l, 2 * s - 1) * d * n;
}

FigureEightCheck figure_eight_bound_check(const NdlCertificate &cert,
                                          const Graph &g, unsigned q,
                                          unsigned r) {
  const auto profile = degree_profile(g);
  if (!profile.regular_degree || *profile.regular_degree != cert.d ||
      g.vertex_count() != cert.n) {
    throw CertificationError(
        "figure-eight bound: graph is not the regular graph of the certificate");
  }
  FigureEightCheck check;
  check.count = figure_eight_hom_count(g, q, r);
  check.bound = figure_eight_bound(cert, q, r);
  check.holds = to_double(check.count) <= check.bound + bound_slack(check.bound);
  return check;
}

Count hom_count(const Pattern &h, const Graph &g) {
  switch (h.kind) {
  case Pattern::Kind::cycle:
    return hom_count_cycle(g, h.length);
  case Pattern::Kind::path:
    return hom_count_path(g, h.length);
  case Pattern::Kind::figure_eight:
    return figure_eight_hom_count(g, h.q, h.r);
  }
  return 0;
}

std::uint64_t brute_hom_count(const Graph &h, const Graph &g) {
  const auto hn = h.vertex_count();
  const auto gn = g.vertex_count();
  if (hn > brute_max_pattern_vertices || gn > brute_max_host_vertices) {
    throw ResourceError("brute_hom_count: limited to |V(H)| <= " +
                        std::to_string(brute_max_pattern_vertices) +
                        " and |V(G)| <= " +
                        std::to_string(brute_max_host_vertices));
  }
  if (hn == 0) {
    return 1;
  }
  // For each pattern vertex, its neighbours with a smaller label; those are
  // already mapped when the vertex is assigned.
  std::vector<std::vector<Vertex>> earlier(hn);
  for (auto [u, v] : h.edges()) {
    earlier[v].push_back(u);
  }
  std::vector<Vertex> image(hn, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == hn) {
      ++count;
      return;
    }
    for (Vertex target = 0; target < gn; ++target) {
      bool ok = true;
      for (Vertex prior : earlier[i]) {
        if (!g.adjacent(image[prior], target)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        image[i] = target;
        assign(i + 1);
      }
    }
  };
  assign(0);
  return count;
}

CountReport count_report(const std::string &graph_id, const Graph &g,
                         const Pattern &pattern, bool with_injective) {
  CountReport report;
  report.graph_id = graph_id;
  report.pattern = pattern;
  report.hom = hom_count(pattern, g);
  if (with_injective) {
    if (pattern.kind != Pattern::Kind::cycle || pattern.length < 3) {
      throw InputError("injective counts are available for cycles C_m, m >= 3");
    }
    report.injective = injective_count_cycle(g, pattern.length);
  }
  const auto n = g.vertex_count();
  if (n > 0) {
    report.density = to_double(report.hom) /
                     std::pow(static_cast<double>(n),
                              static_cast<double>(pattern.vertex_count()));
  }
  return report;
}

} // namespace oddcycle
