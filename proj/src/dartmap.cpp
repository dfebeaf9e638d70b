#include "fal/dartmap.hpp"

#include <algorithm>
#include <numeric>

namespace fal {

std::vector<int> DartMap::sigma_inverse() const {
  std::vector<int> inv(sigma.size());
  for (int d = 0; d < size(); ++d) inv[sigma[d]] = d;
  return inv;
}

std::vector<int> DartMap::components(int* count) const {
  std::vector<int> comp(size(), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < size(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      for (int e : {alpha[d], sigma[d]}) {
        if (comp[e] < 0) {
          comp[e] = c;
          stack.push_back(e);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

std::vector<int> DartMap::faces(int* count) const {
  std::vector<int> inv = sigma_inverse();
  std::vector<int> face(size(), -1);
  int f = 0;
  for (int s = 0; s < size(); ++s) {
    if (face[s] >= 0) continue;
    int d = s;
    do {
      face[d] = f;
      d = inv[alpha[d]];
    } while (d != s);
    ++f;
  }
  if (count) *count = f;
  return face;
}

int DartMap::vertex_count() const {
  std::vector<char> seen(size(), 0);
  int v = 0;
  for (int s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    ++v;
    int d = s;
    do {
      seen[d] = 1;
      d = sigma[d];
    } while (d != s);
  }
  return v;
}

namespace {

// BFS code from root. Returns false as soon as the code exceeds `best`
// (when best is non-empty), leaving `out` partially filled.
bool bfs_code(const DartMap& m, const std::vector<int>& rot, int root, Code& out,
              std::vector<int>& num, std::vector<int>& order, const Code* best) {
  out.clear();
  order.clear();
  num.assign(m.size(), -1);
  num[root] = 0;
  order.push_back(root);
  bool tied = best && !best->empty();
  auto emit = [&](int v) {
    std::size_t k = out.size();
    out.push_back(v);
    if (tied) {
      if (v < (*best)[k]) tied = false;
      else if (v > (*best)[k]) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    if (!emit(m.label[x])) return false;
    for (int y : {m.alpha[x], rot[x]}) {
      if (num[y] < 0) {
        num[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
      if (!emit(num[y])) return false;
    }
  }
  return true;
}

}  // namespace

CanonicalTraversal canonical_traversal(const DartMap& m) {
  CanonicalTraversal best;
  if (m.size() == 0) return best;
  const std::vector<int> inv = m.sigma_inverse();
  Code code;
  std::vector<int> num, order;
  // Only darts carrying the least label can start a minimal code.
  int min_label = *std::min_element(m.label.begin(), m.label.end());
  for (int rev = 0; rev < 2; ++rev) {
    const std::vector<int>& rot = rev ? inv : m.sigma;
    for (int r = 0; r < m.size(); ++r) {
      if (m.label[r] != min_label) continue;
      if (!bfs_code(m, rot, r, code, num, order, &best.code)) continue;
      if (best.code.empty() || code < best.code) {
        best.code = code;
        best.root = r;
        best.reversed = rev != 0;
        best.order = order;
      }
    }
  }
  return best;
}

namespace {

// Splits m into connected sub-maps; darts[c][i] is the original dart of
// dart i in component c.
std::vector<DartMap> split(const DartMap& m, std::vector<std::vector<int>>& darts) {
  int nc = 0;
  std::vector<int> comp = m.components(&nc);
  std::vector<int> index(m.size(), -1);
  darts.assign(nc, {});
  for (int d = 0; d < m.size(); ++d) {
    index[d] = static_cast<int>(darts[comp[d]].size());
    darts[comp[d]].push_back(d);
  }
  std::vector<DartMap> parts(nc);
  for (int c = 0; c < nc; ++c)
    for (int d : darts[c]) {
      parts[c].alpha.push_back(index[m.alpha[d]]);
      parts[c].sigma.push_back(index[m.sigma[d]]);
      parts[c].label.push_back(m.label[d]);
    }
  return parts;
}

}  // namespace

Code canonical_code(const DartMap& m) {
  std::vector<std::vector<int>> darts;
  std::vector<DartMap> parts = split(m, darts);
  if (parts.size() <= 1) return canonical_traversal(m).code;
  std::vector<Code> codes;
  for (const DartMap& p : parts) codes.push_back(canonical_traversal(p).code);
  std::sort(codes.begin(), codes.end());
  Code out;
  out.push_back(-static_cast<std::int32_t>(codes.size()));
  for (const Code& p : codes) {
    out.push_back(static_cast<std::int32_t>(p.size()));
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::vector<int> map_isomorphism(const DartMap& a, const DartMap& b) {
  if (a.size() != b.size()) return {};
  std::vector<std::vector<int>> da, db;
  std::vector<DartMap> pa = split(a, da), pb = split(b, db);
  if (pa.size() != pb.size()) return {};
  std::vector<CanonicalTraversal> ta, tb;
  for (const DartMap& p : pa) ta.push_back(canonical_traversal(p));
  for (const DartMap& p : pb) tb.push_back(canonical_traversal(p));
  std::vector<int> out(a.size(), -1);
  std::vector<char> used(pb.size(), 0);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    std::size_t j = 0;
    while (j < pb.size() && (used[j] || tb[j].code != ta[i].code)) ++j;
    if (j == pb.size()) return {};
    used[j] = 1;
    for (std::size_t k = 0; k < ta[i].order.size(); ++k)
      out[da[i][ta[i].order[k]]] = db[j][tb[j].order[k]];
  }
  return out;
}

}  // namespace fal
