#include <array>
#include <string>

#include "construct_detail.hpp"
#include "nplab/construct.hpp"
#include "nplab/error.hpp"
#include "nplab/hamilton.hpp"
#include "nplab/search.hpp"

namespace nplab {
namespace {

std::string gp_name(std::size_t n, std::size_t k) {
  return "GP(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

Label gp_residue(std::size_t r, std::size_t n) {
  r %= 2 * n;
  return static_cast<Label>(r == 0 ? 2 * n : r);
}

Certificate search_or_unknown(const Graph& g, const SearchBudget& budget) {
  return search_npl(g, budget);
}

/// Hamilton cycle of an m x n grid (m even, n >= 2) given an index map.
/// Row 0 left to right, rows 1..m-1 snaking over columns 1..n-1, then back
/// up column 0.
template <class Index>
std::vector<Vertex> snake_cycle(std::size_t m, std::size_t n, Index idx) {
  std::vector<Vertex> out;
  out.reserve(m * n);
  for (std::size_t c = 0; c < n; ++c) out.push_back(idx(0, c));
  for (std::size_t r = 1; r < m; ++r) {
    if (r % 2 == 1) {
      for (std::size_t c = n - 1; c >= 1; --c) out.push_back(idx(r, c));
    } else {
      for (std::size_t c = 1; c < n; ++c) out.push_back(idx(r, c));
    }
  }
  for (std::size_t r = m - 1; r >= 1; --r) out.push_back(idx(r, 0));
  return out;
}

/// Hamilton cycle of the m x n grid (row-major) when m or n is even and
/// both are >= 2.
std::vector<Vertex> grid_hamilton_cycle(std::size_t m, std::size_t n) {
  if (m % 2 == 0) {
    return snake_cycle(m, n, [n](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * n + c); });
  }
  return snake_cycle(n, m, [n](std::size_t c, std::size_t r) { return static_cast<Vertex>(r * n + c); });
}

/// Cycle through every vertex of an odd x odd grid except (0, 0): the even
/// rows 1..m-1 carry a snake cycle whose first row detours through row 0.
std::vector<Vertex> grid_cycle_missing_corner(std::size_t m, std::size_t n) {
  auto idx = [n](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * n + c); };
  std::vector<Vertex> out;
  out.push_back(idx(1, 0));
  for (std::size_t c = 1; c + 1 < n; c += 2) {
    out.push_back(idx(1, c));
    out.push_back(idx(0, c));
    out.push_back(idx(0, c + 1));
    out.push_back(idx(1, c + 1));
  }
  for (std::size_t r = 2; r < m; ++r) {
    if (r % 2 == 0) {
      for (std::size_t c = n - 1; c >= 1; --c) out.push_back(idx(r, c));
    } else {
      for (std::size_t c = 1; c < n; ++c) out.push_back(idx(r, c));
    }
  }
  for (std::size_t r = m - 1; r >= 2; --r) out.push_back(idx(r, 0));
  return out;
}

/// The explicit (mn-1)-cycle for m = 1 mod 4, n = 3 mod 4 missing u_{1,1};
/// indices below are 1-based as (row, column).
std::vector<Vertex> grid_cycle_explicit(std::size_t m, std::size_t n) {
  auto idx = [n](std::size_t i, std::size_t j) { return static_cast<Vertex>((i - 1) * n + (j - 1)); };
  std::vector<Vertex> out;
  for (std::size_t j = 3; j <= n; ++j) out.push_back(idx(1, j));
  for (std::size_t i = 2; i <= m; ++i) out.push_back(idx(i, n));
  for (std::size_t j = n - 1; j >= 3; --j) {
    const bool up = (n - 1 - j) % 2 == 0;
    if (up) {
      for (std::size_t i = m; i >= 2; --i) out.push_back(idx(i, j));
    } else {
      for (std::size_t i = 2; i <= m; ++i) out.push_back(idx(i, j));
    }
  }
  for (std::size_t i = m; i >= 2; --i) {
    if ((m - i) % 2 == 0) {
      out.push_back(idx(i, 2));
      out.push_back(idx(i, 1));
    } else {
      out.push_back(idx(i, 1));
      out.push_back(idx(i, 2));
    }
  }
  out.push_back(idx(1, 2));
  return out;
}

/// Transposes a row-major cycle of an n x m grid into the m x n layout.
std::vector<Vertex> transpose_cycle(const std::vector<Vertex>& seq, std::size_t rows,
                                    std::size_t cols) {
  std::vector<Vertex> out;
  out.reserve(seq.size());
  for (Vertex v : seq) {
    const std::size_t r = v / cols;
    const std::size_t c = v % cols;
    out.push_back(static_cast<Vertex>(c * rows + r));
  }
  return out;
}

}  // namespace

FamilyLabeling label_gp(std::size_t n, std::size_t k, const SearchBudget& budget) {
  Graph g = gen_generalized_petersen(n, k);
  const std::size_t order = 2 * n;

  if (n % 4 == 0 && n >= 8 && 2 * k == n) {
    std::vector<Label> labels(order);
    for (std::size_t t = 0; t < n / 2; ++t) {
      labels[2 * t] = gp_residue(1 + 4 * t, n);
      labels[2 * t + 1] = gp_residue(n + 3 + 4 * t, n);
      labels[n + 2 * t] = gp_residue(n + 2 + 4 * t, n);
      labels[n + 2 * t + 1] = gp_residue(4 + 4 * t, n);
    }
    auto cert = make_npl_certificate(g, Labeling(std::move(labels)),
                                     reason::ExplicitFormula{gp_name(n, n / 2)});
    return FamilyLabeling{std::move(g), std::move(cert)};
  }

  const bool non_hamiltonian = n % 6 == 5 && (k == 2 || 2 * k + 1 == n);
  if (!non_hamiltonian) {
    auto ham = find_hamilton_cycle(g, budget);
    if (ham.found()) {
      const HamiltonCycle& c = *ham.value;
      if (n % 2 == 0) {
        auto cert = label_hamiltonian(g, c);
        return FamilyLabeling{std::move(g), std::move(cert)};
      }
      if (auto ch = find_odd_chord(g, c)) {
        auto cert = label_ham_odd_chord(g, c, *ch);
        return FamilyLabeling{std::move(g), std::move(cert)};
      }
      throw InternalError("no odd chord on a Hamilton cycle of " + gp_name(n, k));
    }
  }
  auto cert = search_or_unknown(g, budget);
  return FamilyLabeling{std::move(g), std::move(cert)};
}

FamilyLabeling label_grid(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw PreconditionError("grid sides must be >= 1");
  Graph g = gen_grid({m, n});
  const std::size_t order = m * n;

  if (m == 1 || n == 1) {
    auto cert = make_npl_certificate(g, Labeling(standard_cycle_labels(order)),
                                     reason::ExplicitFormula{"path"});
    return FamilyLabeling{std::move(g), std::move(cert)};
  }
  if (order % 4 == 0) {
    auto cert = label_hamiltonian(g, HamiltonCycle{grid_hamilton_cycle(m, n)});
    return FamilyLabeling{std::move(g), std::move(cert)};
  }
  if (order % 4 == 2) {
    HamiltonCycle c{grid_hamilton_cycle(m, n)};
    auto ch = find_chord_4k(g, c);
    if (!ch) throw InternalError("grid Hamilton cycle without a 4k chord");
    auto cert = label_ham_chord_4k(g, c, *ch);
    return FamilyLabeling{std::move(g), std::move(cert)};
  }
  if (order % 4 == 1) {
    auto cert = label_circumference(g, HamiltonCycle{grid_cycle_missing_corner(m, n)}, 0);
    return FamilyLabeling{std::move(g), std::move(cert)};
  }
  // m*n = 3 mod 4: the explicit cycle is written for m = 1, n = 3 (mod 4).
  std::vector<Vertex> seq = m % 4 == 1 ? grid_cycle_explicit(m, n)
                                       : transpose_cycle(grid_cycle_explicit(n, m), n, m);
  std::vector<Label> labels(order, 0);
  const auto along = standard_cycle_labels(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) labels[seq[i]] = along[i];
  labels[0] = static_cast<Label>(order);
  auto cert = make_npl_certificate(g, Labeling(std::move(labels)),
                                   reason::ExplicitFormula{"grid cycle missing a corner"});
  return FamilyLabeling{std::move(g), std::move(cert)};
}

FamilyLabeling label_grid3(std::size_t l, std::size_t m, std::size_t n) {
  if (l < 2 || m < 2 || n < 2) throw PreconditionError("3D grid sides must be >= 2");
  if ((l * m * n) % 4 != 0) throw PreconditionError("3D grid order must be divisible by 4");
  const std::array<std::size_t, 3> dims{l, m, n};
  Graph g = gen_grid(std::span<const std::size_t>(dims));

  // Snake path through the two remaining sides, then a cycle of
  // (even side) x (path) which is an ordinary even-by-anything grid.
  std::size_t even_axis = 0;
  while (dims[even_axis] % 2 != 0) ++even_axis;
  const std::size_t a_axis = even_axis == 0 ? 1 : 0;
  const std::size_t b_axis = 3 - even_axis - a_axis;
  std::vector<std::array<std::size_t, 2>> path;
  for (std::size_t a = 0; a < dims[a_axis]; ++a) {
    for (std::size_t j = 0; j < dims[b_axis]; ++j) {
      const std::size_t b = a % 2 == 0 ? j : dims[b_axis] - 1 - j;
      path.push_back({a, b});
    }
  }
  auto idx = [&](std::size_t e, std::size_t p) {
    std::array<std::size_t, 3> coord{};
    coord[even_axis] = e;
    coord[a_axis] = path[p][0];
    coord[b_axis] = path[p][1];
    return grid_index(dims, coord);
  };
  HamiltonCycle c{snake_cycle(dims[even_axis], path.size(), idx)};
  auto cert = label_hamiltonian(g, c);
  return FamilyLabeling{std::move(g), std::move(cert)};
}

}  // namespace nplab
