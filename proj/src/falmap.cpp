#include "fal/falmap.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace fal {

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
  return a < b;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch))) return false;
  return true;
}

[[noreturn]] void structure(const std::string& msg) {
  throw FalError(FalError::Kind::Structure, msg);
}

}  // namespace

FalMap FalMap::build(FalSpec spec, bool allow_degenerate) {
  const int n = static_cast<int>(spec.vertex_names.size());
  if (static_cast<int>(spec.sides.size()) != n) structure("side bits missing");
  std::set<std::string> seen_names;
  for (const std::string& s : spec.vertex_names) {
    if (!valid_name(s)) structure("invalid vertex name '" + s + "'");
    if (!seen_names.insert(s).second) structure("duplicate vertex '" + s + "'");
  }
  std::set<std::string> comp_names;
  auto claim = [&](const std::string& s) {
    if (!valid_name(s)) structure("invalid component name '" + s + "'");
    if (!comp_names.insert(s).second) structure("duplicate component name '" + s + "'");
  };
  std::vector<int> in_knot(n, 0), in_clasp(n, 0);
  for (const KnotCycle& k : spec.knots) {
    claim(k.name);
    const std::size_t minlen = allow_degenerate ? 1 : 2;
    if (k.verts.size() < minlen) structure("knot " + k.name + " has fewer than 2 passages");
    for (int v : k.verts) {
      if (v < 0 || v >= n) structure("knot " + k.name + " references an unknown vertex");
      if (in_knot[v]++) structure("vertex '" + spec.vertex_names[v] + "' lies on two knot passages");
    }
  }
  for (const Clasp& c : spec.clasps) {
    claim(c.name);
    for (int v : c.verts) {
      if (v < 0 || v >= n) structure("clasp " + c.name + " references an unknown vertex");
      if (in_clasp[v]++) structure("vertex '" + spec.vertex_names[v] + "' lies on two clasps");
    }
    if (c.verts[0] == c.verts[1]) structure("clasp " + c.name + " joins a vertex to itself");
  }
  for (int v = 0; v < n; ++v) {
    if (!in_knot[v]) structure("vertex '" + spec.vertex_names[v] + "' is on no knot circle");
    if (!in_clasp[v]) structure("vertex '" + spec.vertex_names[v] + "' is on no clasp");
  }

  // Normal form: knots by name, each rotated to its least vertex name;
  // vertices renumbered along the knots; clasps by name.
  auto name_less = [&](int a, int b) {
    return natural_less(spec.vertex_names[a], spec.vertex_names[b]);
  };
  std::sort(spec.knots.begin(), spec.knots.end(),
            [](const KnotCycle& a, const KnotCycle& b) { return natural_less(a.name, b.name); });
  FalMap m;
  std::vector<int> renum(n, -1);
  for (KnotCycle& k : spec.knots) {
    auto least = std::min_element(k.verts.begin(), k.verts.end(), name_less);
    std::rotate(k.verts.begin(), least, k.verts.end());
    KnotCycle out{k.name, {}};
    for (int v : k.verts) {
      renum[v] = static_cast<int>(m.names_.size());
      m.names_.push_back(spec.vertex_names[v]);
      m.sides_.push_back(spec.sides[v]);
      out.verts.push_back(renum[v]);
    }
    m.knots_.push_back(std::move(out));
  }
  for (const Clasp& c : spec.clasps) {
    Clasp out{c.name, {renum[c.verts[0]], renum[c.verts[1]]}};
    if (out.verts[0] > out.verts[1]) std::swap(out.verts[0], out.verts[1]);
    m.clasps_.push_back(out);
  }
  std::sort(m.clasps_.begin(), m.clasps_.end(),
            [](const Clasp& a, const Clasp& b) { return natural_less(a.name, b.name); });
  m.finalize();

  // Every connected piece must be a sphere.
  DartMap dm = m.dart_map();
  int nc = 0;
  std::vector<int> comp = dm.components(&nc);
  std::vector<int> darts(nc, 0), faces(nc, 0);
  for (int d = 0; d < dm.size(); ++d) ++darts[comp[d]];
  for (int f = 0; f < m.face_count_; ++f) ++faces[comp[m.face_darts_[f][0]]];
  for (int c = 0; c < nc; ++c) {
    int v = darts[c] / 3, e = darts[c] / 2;
    if (v - e + faces[c] != 2) {
      std::ostringstream os;
      os << "rotation system is not planar (V - E + F = " << v - e + faces[c] << ")";
      throw FalError(FalError::Kind::Genus, os.str());
    }
  }
  return m;
}

void FalMap::finalize() {
  const int n = vertex_count();
  knot_of_.assign(n, -1);
  pos_.assign(n, -1);
  clasp_of_.assign(n, -1);
  degenerate_ = false;
  for (int k = 0; k < knot_count(); ++k) {
    if (knots_[k].verts.size() < 2) degenerate_ = true;
    for (int i = 0; i < static_cast<int>(knots_[k].verts.size()); ++i) {
      knot_of_[knots_[k].verts[i]] = k;
      pos_[knots_[k].verts[i]] = i;
    }
  }
  for (int c = 0; c < clasp_count(); ++c)
    for (int v : clasps_[c].verts) clasp_of_[v] = c;
  DartMap dm = dart_map();
  face_ = dm.faces(&face_count_);
  face_darts_.assign(face_count_, {});
  std::vector<char> done(face_count_, 0);
  std::vector<int> inv = dm.sigma_inverse();
  for (int s = 0; s < dm.size(); ++s) {
    int f = face_[s];
    if (done[f]) continue;
    done[f] = 1;
    int d = s;
    do {
      face_darts_[f].push_back(d);
      d = inv[dm.alpha[d]];
    } while (d != s);
  }
}

int FalMap::succ(int v) const {
  const auto& c = knots_[knot_of_[v]].verts;
  return c[(pos_[v] + 1) % c.size()];
}

int FalMap::pred(int v) const {
  const auto& c = knots_[knot_of_[v]].verts;
  return c[(pos_[v] + c.size() - 1) % c.size()];
}

int FalMap::partner(int v) const {
  const Clasp& c = clasps_[clasp_of_[v]];
  return c.verts[0] == v ? c.verts[1] : c.verts[0];
}

int FalMap::alpha(int d) const {
  int v = d / 3;
  switch (d % 3) {
    case 0: return 3 * succ(v) + 1;
    case 1: return 3 * pred(v);
    default: return 3 * partner(v) + 2;
  }
}

// Left: next -> clasp -> prev -> next. Right: next -> prev -> clasp -> next.
int FalMap::sigma(int d) const {
  int v = d / 3, r = d % 3;
  static constexpr int left[3] = {2, 0, 1};
  static constexpr int right[3] = {1, 2, 0};
  return 3 * v + (sides_[v] == Side::Left ? left[r] : right[r]);
}

int FalMap::sigma_inv(int d) const {
  int v = d / 3, r = d % 3;
  static constexpr int left[3] = {1, 2, 0};
  static constexpr int right[3] = {2, 0, 1};
  return 3 * v + (sides_[v] == Side::Left ? left[r] : right[r]);
}

int FalMap::knot_edge(int d) const {
  int v = d / 3;
  return d % 3 == 0 ? v : pred(v);
}

DartMap FalMap::dart_map() const {
  DartMap dm;
  const int nd = dart_count();
  dm.alpha.resize(nd);
  dm.sigma.resize(nd);
  dm.label.resize(nd);
  for (int d = 0; d < nd; ++d) {
    dm.alpha[d] = alpha(d);
    dm.sigma[d] = sigma(d);
    dm.label[d] = is_clasp_dart(d) ? 1 : 0;
  }
  return dm;
}

int FalMap::find_vertex(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  return -1;
}

int FalMap::find_knot(const std::string& name) const {
  for (int k = 0; k < knot_count(); ++k)
    if (knots_[k].name == name) return k;
  return -1;
}

int FalMap::find_clasp(const std::string& name) const {
  for (int c = 0; c < clasp_count(); ++c)
    if (clasps_[c].name == name) return c;
  return -1;
}

std::string FalMap::component_name(ComponentRef r) const {
  return r.kind == ComponentKind::KnotCircle ? knots_[r.index].name : clasps_[r.index].name;
}

ComponentRef FalMap::find_component(const std::string& name) const {
  if (int k = find_knot(name); k >= 0) return {ComponentKind::KnotCircle, k};
  if (int c = find_clasp(name); c >= 0) return {ComponentKind::CrossingCircle, c};
  return {ComponentKind::KnotCircle, -1};
}

FalSpec FalMap::spec() const { return {names_, knots_, clasps_, sides_}; }

bool FalMap::operator==(const FalMap& o) const {
  if (names_ != o.names_ || sides_ != o.sides_) return false;
  if (knots_.size() != o.knots_.size() || clasps_.size() != o.clasps_.size()) return false;
  for (std::size_t k = 0; k < knots_.size(); ++k)
    if (knots_[k].name != o.knots_[k].name || knots_[k].verts != o.knots_[k].verts) return false;
  for (std::size_t c = 0; c < clasps_.size(); ++c)
    if (clasps_[c].name != o.clasps_[c].name || clasps_[c].verts != o.clasps_[c].verts)
      return false;
  return true;
}

// ---- builder ---------------------------------------------------------------

int FalBuilder::vertex(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  int v = static_cast<int>(spec_.vertex_names.size());
  spec_.vertex_names.push_back(name);
  index_[name] = v;
  return v;
}

FalBuilder& FalBuilder::knot(const std::string& name, const std::vector<std::string>& verts) {
  KnotCycle k{name, {}};
  for (const std::string& v : verts) k.verts.push_back(vertex(v));
  spec_.knots.push_back(std::move(k));
  return *this;
}

FalBuilder& FalBuilder::clasp(const std::string& name, const std::string& a, Side sa,
                              const std::string& b, Side sb) {
  spec_.clasps.push_back({name, {vertex(a), vertex(b)}});
  side_[a] = sa;
  side_[b] = sb;
  return *this;
}

FalMap FalBuilder::build(bool allow_degenerate) const {
  FalSpec s = spec_;
  s.sides.assign(s.vertex_names.size(), Side::Left);
  for (std::size_t v = 0; v < s.vertex_names.size(); ++v) {
    auto it = side_.find(s.vertex_names[v]);
    if (it != side_.end()) s.sides[v] = it->second;
  }
  return FalMap::build(std::move(s), allow_degenerate);
}

FalMap from_dart_map(const DartMap& dm) {
  const int nd = dm.size();
  // Group darts into vertices (sigma orbits of length 3).
  std::vector<int> vert(nd, -1);
  std::vector<std::array<int, 3>> orbit;
  for (int s = 0; s < nd; ++s) {
    if (vert[s] >= 0) continue;
    int v = static_cast<int>(orbit.size());
    orbit.push_back({s, dm.sigma[s], dm.sigma[dm.sigma[s]]});
    if (dm.sigma[orbit.back()[2]] != s) structure("map is not cubic");
    for (int d : orbit.back()) vert[d] = v;
  }
  const int n = static_cast<int>(orbit.size());
  auto clasp_dart = [&](int v) {
    for (int d : orbit[v])
      if (dm.label[d] == 1) return d;
    structure("vertex without clasp dart");
  };
  FalSpec spec;
  for (int v = 0; v < n; ++v) spec.vertex_names.push_back("v" + std::to_string(v));
  spec.sides.assign(n, Side::Left);
  std::vector<char> done(n, 0);
  for (int s = 0; s < n; ++s) {
    if (done[s]) continue;
    KnotCycle k{"K" + std::to_string(spec.knots.size() + 1), {}};
    int c = clasp_dart(s);
    int next = dm.sigma[c];  // a knot dart of s
    int v = s;
    while (!done[v]) {
      done[v] = 1;
      k.verts.push_back(v);
      int cv = clasp_dart(v);
      spec.sides[v] = dm.sigma[next] == cv ? Side::Left : Side::Right;
      int arrive = dm.alpha[next];
      v = vert[arrive];
      // The outgoing knot dart at the new vertex is the one that is neither
      // the arrival dart nor the clasp dart.
      int cn = clasp_dart(v);
      for (int d : orbit[v])
        if (d != arrive && d != cn) next = d;
    }
    spec.knots.push_back(std::move(k));
  }
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int w = vert[dm.alpha[clasp_dart(v)]];
    seen[v] = seen[w] = 1;
    spec.clasps.push_back({"C" + std::to_string(spec.clasps.size() + 1), {v, w}});
  }
  return FalMap::build(std::move(spec), true);
}

// ---- text format -----------------------------------------------------------

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '=') {
      out.push_back({"=", static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '=')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void syntax(int line, int col, const std::string& msg) {
  throw FalError(FalError::Kind::Syntax,
                 "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

}  // namespace

FalMap parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header = false;
  FalSpec spec;
  std::map<std::string, int> index;
  std::map<std::string, Side> sides;
  std::set<std::string> clasp_vertex;
  auto vertex = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int v = static_cast<int>(spec.vertex_names.size());
    spec.vertex_names.push_back(name);
    index[name] = v;
    return v;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<Token> t = tokenize(raw);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 2 || t[0].text != "fal") syntax(lineno, t[0].col, "expected 'fal 1' header");
      if (t[1].text != "1") syntax(lineno, t[1].col, "unsupported format version '" + t[1].text + "'");
      header = true;
      continue;
    }
    const std::string& kw = t[0].text;
    if (kw != "knot" && kw != "clasp") syntax(lineno, t[0].col, "unknown keyword '" + kw + "'");
    if (t.size() < 2 || !valid_name(t[1].text))
      syntax(lineno, t.size() < 2 ? static_cast<int>(raw.size()) + 1 : t[1].col,
             "expected alphanumeric component name");
    if (t.size() < 3 || t[2].text != "=")
      syntax(lineno, t.size() < 3 ? static_cast<int>(raw.size()) + 1 : t[2].col, "expected '='");
    if (kw == "knot") {
      KnotCycle k{t[1].text, {}};
      for (std::size_t i = 3; i < t.size(); ++i) {
        if (!valid_name(t[i].text)) syntax(lineno, t[i].col, "invalid vertex name '" + t[i].text + "'");
        int v = vertex(t[i].text);
        if (std::find(k.verts.begin(), k.verts.end(), v) != k.verts.end())
          structure("vertex '" + t[i].text + "' repeated on knot " + k.name);
        k.verts.push_back(v);
      }
      if (k.verts.empty()) syntax(lineno, static_cast<int>(raw.size()) + 1, "knot has no passages");
      spec.knots.push_back(std::move(k));
    } else {
      if (t.size() != 5)
        syntax(lineno, t.size() > 5 ? t[5].col : static_cast<int>(raw.size()) + 1,
               "clasp needs exactly two endpoints");
      Clasp c{t[1].text, {-1, -1}};
      for (int e = 0; e < 2; ++e) {
        const Token& tok = t[3 + e];
        auto colon = tok.text.find(':');
        if (colon == std::string::npos) syntax(lineno, tok.col, "expected <vertex>:<L|R>");
        std::string name = tok.text.substr(0, colon), side = tok.text.substr(colon + 1);
        if (!valid_name(name)) syntax(lineno, tok.col, "invalid vertex name '" + name + "'");
        if (side != "L" && side != "R")
          syntax(lineno, tok.col + static_cast<int>(colon) + 1, "side must be L or R");
        if (!clasp_vertex.insert(name).second)
          structure("vertex '" + name + "' lies on two clasps");
        c.verts[e] = vertex(name);
        sides[name] = side == "L" ? Side::Left : Side::Right;
      }
      spec.clasps.push_back(c);
    }
  }
  if (!header) syntax(lineno + 1, 1, "missing 'fal 1' header");
  spec.sides.assign(spec.vertex_names.size(), Side::Left);
  for (std::size_t v = 0; v < spec.vertex_names.size(); ++v) {
    auto it = sides.find(spec.vertex_names[v]);
    if (it != sides.end()) spec.sides[v] = it->second;
  }
  return FalMap::build(std::move(spec), true);
}

std::string serialize(const FalMap& m) {
  std::ostringstream os;
  os << "fal 1\n";
  for (const KnotCycle& k : m.knots()) {
    os << "knot " << k.name << " =";
    for (int v : k.verts) os << ' ' << m.vertex_names()[v];
    os << '\n';
  }
  for (const Clasp& c : m.clasps()) {
    os << "clasp " << c.name << " =";
    for (int v : c.verts) os << ' ' << m.vertex_names()[v] << ':' << side_char(m.side(v));
    os << '\n';
  }
  return os.str();
}

// ---- validation ------------------------------------------------------------

std::vector<std::array<int, 2>> two_bonds(const FalMap& m) {
  // Knot edge e (tail vertex e) separates face_of(3e) and face_of(3 succ(e) + 1).
  std::map<std::pair<int, int>, std::vector<int>> by_faces;
  for (int e = 0; e < m.vertex_count(); ++e) {
    int f1 = m.face_of(3 * e), f2 = m.face_of(3 * m.succ(e) + 1);
    if (f1 == f2) continue;
    by_faces[{std::min(f1, f2), std::max(f1, f2)}].push_back(e);
  }
  std::vector<std::array<int, 2>> out;
  for (const auto& [faces, edges] : by_faces)
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) out.push_back({edges[i], edges[j]});
  return out;
}

ValidationReport validate(const FalMap& m) {
  ValidationReport r;
  DartMap dm = m.dart_map();
  int nc = 0;
  dm.components(&nc);
  r.connected = nc == 1;
  if (!r.connected) r.messages.push_back("(a) diagram is split into " + std::to_string(nc) + " pieces");

  r.two_clasps = m.clasp_count() >= 2;
  if (!r.two_clasps) r.messages.push_back("(b) fewer than two crossing circles");

  r.knots_linked = true;
  for (const KnotCycle& k : m.knots()) {
    std::set<int> cs;
    for (int v : k.verts) cs.insert(m.clasp_of(v));
    if (cs.size() < 2) {
      r.knots_linked = false;
      r.messages.push_back("(c) knot " + k.name + " is linked by fewer than two crossing circles");
    }
  }

  // A face clasp, knot, clasp, knot with two different clasps means two
  // parallel crossing circles on the same pair of strands.
  r.twist_reduced = true;
  for (const auto& fd : m.face_darts()) {
    if (fd.size() != 4) continue;
    for (int s = 0; s < 2; ++s) {
      if (FalMap::is_clasp_dart(fd[s]) && !FalMap::is_clasp_dart(fd[s + 1]) &&
          FalMap::is_clasp_dart(fd[s + 2]) && !FalMap::is_clasp_dart(fd[(s + 3) % 4])) {
        int c1 = m.clasp_of(FalMap::vertex_of(fd[s])), c2 = m.clasp_of(FalMap::vertex_of(fd[s + 2]));
        if (c1 != c2) {
          r.twist_reduced = false;
          r.messages.push_back("(d) crossing circles " + m.clasps()[c1].name + " and " +
                               m.clasps()[c2].name + " are parallel");
        }
      }
    }
  }

  auto bonds = two_bonds(m);
  r.prime = bonds.empty();
  for (const auto& b : bonds)
    r.messages.push_back("(e) a curve through knot edges " + m.vertex_names()[b[0]] + "-" +
                         m.vertex_names()[m.succ(b[0])] + " and " + m.vertex_names()[b[1]] + "-" +
                         m.vertex_names()[m.succ(b[1])] + " splits the diagram");
  return r;
}

// ---- canonical forms -------------------------------------------------------

Code canonical_form(const FalMap& m) { return canonical_code(m.dart_map()); }

FalMap mirror(const FalMap& m) {
  FalSpec s = m.spec();
  for (Side& b : s.sides) b = flipped(b);
  return FalMap::build(std::move(s), m.degenerate());
}

FalMap relabel(const FalMap& m, const std::map<std::string, std::string>& vertex_names,
               const std::map<std::string, std::string>& component_names) {
  FalSpec s = m.spec();
  auto rename = [](const std::map<std::string, std::string>& tbl, std::string& name) {
    auto it = tbl.find(name);
    if (it != tbl.end()) name = it->second;
  };
  for (std::string& n : s.vertex_names) rename(vertex_names, n);
  for (KnotCycle& k : s.knots) rename(component_names, k.name);
  for (Clasp& c : s.clasps) rename(component_names, c.name);
  return FalMap::build(std::move(s), m.degenerate());
}

std::vector<int> map_isomorphism(const FalMap& a, const FalMap& b) {
  return map_isomorphism(a.dart_map(), b.dart_map());
}

namespace {

// Colour refinement on a small symmetric multiplicity matrix.
std::vector<int> refine(const std::vector<std::vector<int>>& adj, std::vector<int> colour) {
  const int n = static_cast<int>(adj.size());
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> key{colour[i], adj[i][i]};
      std::vector<int> nb;
      for (int j = 0; j < n; ++j)
        if (j != i && adj[i][j]) nb.push_back(colour[j] * 1000 + adj[i][j]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keys[i] = {key, i};
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return keys[x].first < keys[y].first; });
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && keys[idx[i]].first != keys[idx[i - 1]].first) ++c;
      next[idx[i]] = c;
    }
    int nc = n ? c + 1 : 0;
    colour = next;
    if (nc == classes) return colour;
    classes = nc;
  }
}

void search(const std::vector<std::vector<int>>& adj, const std::vector<int>& colour, Code& best) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> count(n + 1, 0);
  for (int c : colour) ++count[c];
  int target = -1;
  for (int c = 0; c < n && target < 0; ++c)
    if (count[c] > 1) target = c;
  if (target < 0) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[colour[i]] = i;
    Code code;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) code.push_back(adj[order[i]][order[j]]);
    if (best.empty() || code < best) best = code;
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    std::vector<int> c2(n);
    for (int i = 0; i < n; ++i) c2[i] = 2 * colour[i] + (i == v ? 0 : 1);
    search(adj, refine(adj, c2), best);
  }
}

}  // namespace

Code incidence_multigraph(const FalMap& m) {
  // Every crossing circle has two passages, so the bipartite incidence
  // graph is the subdivision of a multigraph on the knot circles.
  const int k = m.knot_count();
  std::vector<std::vector<int>> adj(k, std::vector<int>(k, 0));
  for (const Clasp& c : m.clasps()) {
    int a = m.knot_of(c.verts[0]), b = m.knot_of(c.verts[1]);
    ++adj[a][b];
    if (a != b) ++adj[b][a];
  }
  Code best;
  search(adj, refine(adj, std::vector<int>(k, 0)), best);
  Code out{k, m.clasp_count()};
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

}  // namespace fal
