#include "fal/census.hpp"

#include <map>
#include <numeric>
#include <set>

namespace fal {

namespace {

DartMap cycle(int n) {
  // Vertex i carries darts 2i (toward i + 1) and 2((i - 1) mod n) + 1.
  DartMap m;
  m.alpha.resize(2 * n);
  m.sigma.resize(2 * n);
  m.label.assign(2 * n, 0);
  for (int e = 0; e < n; ++e) {
    m.alpha[2 * e] = 2 * e + 1;
    m.alpha[2 * e + 1] = 2 * e;
    int back = 2 * ((e + n - 1) % n) + 1;
    m.sigma[2 * e] = back;
    m.sigma[back] = 2 * e;
  }
  return m;
}

// Adds a path of `len` edges from corner (x, sigma x) to corner (y, sigma y);
// both corners must lie in the same face.
DartMap add_ear(const DartMap& h, int x, int y, int len) {
  DartMap m = h;
  const int base = m.size();
  m.alpha.resize(base + 2 * len);
  m.sigma.resize(base + 2 * len);
  m.label.assign(base + 2 * len, 0);
  for (int i = 0; i < len; ++i) {
    m.alpha[base + 2 * i] = base + 2 * i + 1;
    m.alpha[base + 2 * i + 1] = base + 2 * i;
  }
  // Interior vertex i sits between edge i - 1 (arriving) and edge i.
  for (int i = 1; i < len; ++i) {
    m.sigma[base + 2 * i - 1] = base + 2 * i;
    m.sigma[base + 2 * i] = base + 2 * i - 1;
  }
  const int first = base, last = base + 2 * len - 1;
  const int sx = h.sigma[x], sy = h.sigma[y];
  m.sigma[x] = first;
  m.sigma[first] = sx;
  m.sigma[y] = last;
  m.sigma[last] = sy;
  return m;
}

std::vector<int> vertex_ids(const DartMap& h) {
  std::vector<int> v(h.size(), -1);
  int n = 0;
  for (int s = 0; s < h.size(); ++s) {
    if (v[s] >= 0) continue;
    for (int d = s; v[d] < 0; d = h.sigma[d]) v[d] = n;
    ++n;
  }
  return v;
}

// Ports of edge e in ccw order around its midpoint:
// P0 = corner(sigma^-1 d', d'), P1 = corner(d, sigma d),
// P2 = corner(sigma^-1 d, d), P3 = corner(d', sigma d'), with d = 2e.
// Corner (x, sigma x) joins port P1/P3 of x's edge to port P2/P0 of
// sigma x's edge.
int port_out(int x) { return 4 * (x / 2) + (x % 2 == 0 ? 1 : 3); }
int port_in(int y) { return 4 * (y / 2) + (y % 2 == 0 ? 2 : 0); }

}  // namespace

std::vector<std::vector<DartMap>> nonseparable_maps(int max_edges) {
  std::vector<std::vector<DartMap>> out(std::max(max_edges, 1) + 1);
  std::vector<std::set<Code>> seen(out.size());
  auto keep = [&](DartMap m) {
    const int e = m.size() / 2;
    if (seen[e].insert(canonical_code(m)).second) out[e].push_back(std::move(m));
  };
  for (int e = 2; e <= max_edges; ++e) {
    keep(cycle(e));
    // out[e] is complete here: every smaller level has been extended.
    for (std::size_t i = 0; i < out[e].size(); ++i) {
      const DartMap h = out[e][i];
      int fc = 0;
      std::vector<int> face = h.faces(&fc);
      std::vector<int> vert = vertex_ids(h);
      for (int x = 0; x < h.size(); ++x)
        for (int y = x + 1; y < h.size(); ++y) {
          if (face[x] != face[y] || vert[x] == vert[y]) continue;
          for (int len = 1; e + len <= max_edges; ++len) keep(add_ear(h, x, y, len));
        }
    }
  }
  return out;
}

int medial_knot_count(const DartMap& h, unsigned smoothing) {
  const int ne = h.size() / 2;
  std::vector<int> p(4 * ne);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  auto join = [&](int a, int b) { p[find(a)] = find(b); };
  for (int x = 0; x < h.size(); ++x) join(port_out(x), port_in(h.sigma[x]));
  for (int e = 0; e < ne; ++e) {
    if (smoothing >> e & 1) {
      join(4 * e + 1, 4 * e + 2);
      join(4 * e + 3, 4 * e + 0);
    } else {
      join(4 * e + 0, 4 * e + 1);
      join(4 * e + 2, 4 * e + 3);
    }
  }
  int n = 0;
  for (int i = 0; i < 4 * ne; ++i) n += find(i) == i;
  return n;
}

DartMap medial_fal(const DartMap& h, unsigned smoothing) {
  const int ne = h.size() / 2;
  // Edge e gives cubic vertices 2e (u) and 2e + 1 (w); vertex t has darts
  // 3t, 3t + 1 (knot, in ccw order) and 3t + 2 (clasp).
  DartMap m;
  m.alpha.assign(6 * ne, -1);
  m.sigma.assign(6 * ne, -1);
  m.label.assign(6 * ne, 0);
  std::vector<int> port_dart(4 * ne);
  for (int e = 0; e < ne; ++e) {
    const bool b = smoothing >> e & 1;
    const int u = 2 * e, w = 2 * e + 1;
    const std::array<int, 4> at = b ? std::array<int, 4>{3 * w + 1, 3 * u, 3 * u + 1, 3 * w}
                                    : std::array<int, 4>{3 * u, 3 * u + 1, 3 * w, 3 * w + 1};
    for (int k = 0; k < 4; ++k) port_dart[4 * e + k] = at[k];
    for (int t : {u, w}) {
      m.sigma[3 * t] = 3 * t + 1;
      m.sigma[3 * t + 1] = 3 * t + 2;
      m.sigma[3 * t + 2] = 3 * t;
      m.label[3 * t + 2] = 1;
    }
    m.alpha[3 * u + 2] = 3 * w + 2;
    m.alpha[3 * w + 2] = 3 * u + 2;
  }
  for (int x = 0; x < h.size(); ++x) {
    int a = port_dart[port_out(x)], b = port_dart[port_in(h.sigma[x])];
    m.alpha[a] = b;
    m.alpha[b] = a;
  }
  return m;
}

std::vector<FalMap> census(const CensusLimits& limits, CensusStats* stats) {
  CensusStats st;
  const int max_edges = std::min(limits.max_clasps, limits.max_components - 1);
  auto plane = nonseparable_maps(max_edges);
  std::map<std::pair<int, Code>, FalMap> found;
  for (int e = 2; e <= max_edges; ++e) {
    const int max_knots = limits.max_components - e;
    for (const DartMap& h : plane[e]) {
      ++st.plane_maps;
      for (unsigned s = 0; s < (1u << e); ++s) {
        if (medial_knot_count(h, s) > max_knots) continue;
        ++st.candidates;
        FalMap f = from_dart_map(medial_fal(h, s));
        if (!validate(f).ok()) continue;
        ++st.valid;
        Code c = canonical_form(f);
        found.try_emplace({f.component_count(), std::move(c)}, std::move(f));
      }
    }
  }
  std::vector<FalMap> out;
  for (auto& [key, m] : found) out.push_back(std::move(m));
  if (stats) *stats = st;
  return out;
}

}  // namespace fal
