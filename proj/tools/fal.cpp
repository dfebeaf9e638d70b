#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "fal/census.hpp"
#include "fal/classify.hpp"
#include "fal/families.hpp"
#include "fal/report.hpp"

namespace {

using fal::report::Json;

constexpr int kOk = 0, kError = 2, kDistinct = 3, kUnknown = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

fal::FalMap load(const std::string& path) {
  try {
    return fal::parse(read_input(path));
  } catch (const fal::FalError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

// Operations whose inputs must be flat FALs.
fal::FalMap load_valid(const std::string& path) {
  fal::FalMap m = load(path);
  fal::ValidationReport r = fal::validate(m);
  if (!r.ok()) {
    std::string msg = path + ": not a valid flat FAL";
    for (const auto& s : r.messages) msg += "\n  " + s;
    throw UsageError(msg);
  }
  return m;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string code_text(const fal::Code& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

std::vector<fal::Chord> parse_chords(const std::string& text) {
  std::vector<fal::Chord> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int i = 0, j = 0;
    auto dash = item.find('-');
    if (dash != std::string::npos) {
      i = std::stoi(item.substr(0, dash));
      j = std::stoi(item.substr(dash + 1));
    } else if (item.size() == 2 && std::isdigit(item[0]) && std::isdigit(item[1])) {
      i = item[0] - '0';
      j = item[1] - '0';
    } else {
      throw UsageError("bad chord '" + item + "' (use i-j)");
    }
    out.push_back({std::min(i, j), std::max(i, j)});
  }
  return out;
}

int knot_or_throw(const fal::FalMap& m, const std::string& name) {
  int k = m.find_knot(name);
  if (k < 0) throw UsageError("no knot circle named " + name);
  return k;
}

std::string face_text(const fal::FalMap& m, const fal::ReflectionFace& f) {
  std::ostringstream os;
  os << f.puncture_count() << "-punctured:";
  for (const auto& b : f.boundary) os << " " << m.knots()[b.knot].name;
  for (int v : f.punctures) os << " " << m.clasps()[m.clasp_of(v)].name << "@" << m.vertex_names()[v];
  return os.str();
}

std::string trace_text(const fal::FalMap& m, const fal::DiskTrace& t) {
  std::ostringstream os;
  os << fal::to_string(t.kind);
  if (t.kind == fal::DiskKind::CrossingDisk) {
    os << " " << m.clasps()[t.clasp].name << (t.designated ? " designated" : " across");
    for (int x : t.crossed)
      os << " " << m.vertex_names()[fal::FalMap::vertex_of(x)] << "-"
         << m.vertex_names()[fal::FalMap::vertex_of(m.alpha(x))];
  } else {
    for (const auto& p : t.punctures) os << " " << m.component_name(p.comp);
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Flat fully augmented link workbench"};
  app.require_subcommand(1);
  bool json = false;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };
  int code = kOk;

  // validate
  std::string in1, in2, out_path, kf_name, clasp_name, chords_text;
  auto* validate = app.add_subcommand("validate", "Check the flat FAL conditions");
  validate->add_option("input", in1, "File or -")->required();
  add_json(validate);
  validate->callback([&] {
    fal::FalMap m = load(in1);
    fal::ValidationReport r = fal::validate(m);
    if (json) {
      Json j = fal::report::envelope("validate");
      j["map"] = fal::report::summary(m);
      j["report"] = fal::report::to_json(r);
      emit(j);
    } else {
      std::cout << (r.ok() ? "valid" : "invalid") << " (" << m.knot_count() << " knot, " << m.clasp_count()
                << " crossing circles)\n";
      for (const auto& s : r.messages) std::cout << "  " << s << "\n";
    }
    code = r.ok() ? kOk : kError;
  });

  auto* canon = app.add_subcommand("canon", "Print the canonical form");
  canon->add_option("input", in1)->required();
  add_json(canon);
  canon->callback([&] {
    fal::FalMap m = load(in1);
    fal::Code c = fal::canonical_form(m);
    if (json) {
      Json j = fal::report::envelope("canon");
      j["map"] = fal::report::summary(m);
      j["canonical_form"] = fal::report::to_json(c);
      j["incidence_multigraph"] = fal::report::to_json(fal::incidence_multigraph(m));
      emit(j);
    } else {
      std::cout << code_text(c) << "\n";
    }
  });

  std::string family;
  int n = 0, max_knots = 8;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a family member: borromean, p, o, pretzel, signature, fig14, fig15, random");
  gen->add_option("family", family)->required();
  gen->add_option("n", n, "Family parameter");
  gen->add_option("--chords", chords_text, "Chords for signature, e.g. 1-2,2-5");
  gen->add_option("--seed", seed, "Seed for random");
  gen->add_option("--max-knots", max_knots, "Knot circle bound for random");
  gen->add_option("-o,--output", out_path);
  add_json(gen);
  gen->callback([&] {
    fal::FalMap m;
    if (family == "borromean") m = fal::borromean();
    else if (family == "p") m = fal::chain_p(n);
    else if (family == "o") m = fal::chain_o(n);
    else if (family == "pretzel") m = fal::pretzel(n);
    else if (family == "signature") m = fal::signature_link(n, parse_chords(chords_text));
    else if (family == "fig14") m = fal::figure14();
    else if (family == "fig15") m = fal::figure15();
    else if (family == "random") {
      std::mt19937_64 rng(seed);
      m = fal::random_signature(rng, max_knots);
    } else {
      throw UsageError("unknown family " + family);
    }
    if (json) {
      Json j = fal::report::envelope("gen");
      j["map"] = fal::report::summary(m);
      j["fal"] = fal::serialize(m);
      write_output(out_path, j.dump(2) + "\n");
    } else {
      write_output(out_path, fal::serialize(m));
    }
  });

  auto* classify = app.add_subcommand("classify", "Reflection-surface class");
  classify->add_option("input", in1)->required();
  add_json(classify);
  classify->callback([&] {
    fal::FalMap m = load_valid(in1);
    fal::ReflectionClass c = fal::reflection_class(m);
    if (json) {
      Json j = fal::report::envelope("classify");
      j["map"] = fal::report::summary(m);
      j["reflection_class"] = fal::report::to_json(c);
      emit(j);
    } else {
      std::cout << c.to_string() << "\n";
    }
  });

  std::size_t budget = 0;
  int depth = 0;
  auto* decide = app.add_subcommand("decide", "Decide link equivalence / complement homeomorphism");
  decide->add_option("a", in1)->required();
  decide->add_option("b", in2)->required();
  decide->add_option("--budget", budget, "Maximum canonical forms visited");
  decide->add_option("--depth", depth, "Maximum rewrite depth");
  add_json(decide);
  decide->callback([&] {
    fal::FalMap a = load_valid(in1), b = load_valid(in2);
    fal::Budget bud = fal::Budget::from_env();
    if (budget) bud.max_forms = budget;
    if (depth) bud.max_depth = depth;
    fal::EquivalenceVerdict v = fal::decide_equivalent(a, b, bud);
    if (json) {
      Json j = fal::report::envelope("decide");
      j["result"] = fal::report::to_json(v);
      emit(j);
    } else {
      std::cout << fal::to_string(v.kind) << " (" << v.method << ")\n";
      if (v.kind == fal::EquivalenceVerdict::Kind::Distinct)
        std::cout << "  " << v.witness.invariant << ": " << v.witness.a << " vs " << v.witness.b << "\n";
      for (const auto& s : v.certificate)
        std::cout << "  " << fal::to_string(s.kind) << (s.clasp.empty() ? "" : " " + s.clasp)
                  << (s.k_f.empty() ? "" : " " + s.k_f) << "\n";
      if (v.kind == fal::EquivalenceVerdict::Kind::Unknown)
        std::cout << "  explored " << v.explored << " forms to depth " << v.depth << "\n";
    }
    code = v.kind == fal::EquivalenceVerdict::Kind::Equivalent ? kOk
           : v.kind == fal::EquivalenceVerdict::Kind::Distinct ? kDistinct
                                                               : kUnknown;
  });

  auto* signature = app.add_subcommand("signature", "Signature-link decompositions");
  signature->add_option("input", in1)->required();
  signature->add_option("--kf", kf_name, "Check this knot circle only");
  add_json(signature);
  signature->callback([&] {
    fal::FalMap m = load(in1);
    std::vector<fal::SignatureDecomposition> found;
    std::string why;
    if (!kf_name.empty()) {
      if (auto s = fal::decompose(m, knot_or_throw(m, kf_name), !m.degenerate(), &why)) found.push_back(*s);
    } else {
      found = fal::detect_signature(m);
    }
    if (json) {
      Json j = fal::report::envelope("signature");
      j["signature"] = !found.empty();
      j["decompositions"] = Json::array();
      for (const auto& s : found) j["decompositions"].push_back(fal::report::to_json(m, s));
      if (!why.empty()) j["reason"] = why;
      emit(j);
    } else {
      if (found.empty()) std::cout << "not signature" << (why.empty() ? "" : ": " + why) << "\n";
      for (const auto& s : found) {
        std::cout << "K_f = " << m.knots()[s.k_f].name << ";";
        for (int i = 0; i < s.n(); ++i)
          std::cout << " (" << m.clasps()[s.pairs[i].clasp].name << "," << m.knots()[s.pairs[i].knot].name << ")";
        std::cout << "; chords";
        for (const auto& c : s.chords) std::cout << " " << m.clasps()[c.clasp].name << "{" << c.i << "," << c.j << "}";
        std::cout << "\n";
      }
    }
  });

  auto* swap = app.add_subcommand("swap", "Full swap on a signature decomposition");
  swap->add_option("--input,input", in1)->required();
  swap->add_option("--kf", kf_name)->required();
  swap->add_option("-o,--output", out_path);
  add_json(swap);
  swap->callback([&] {
    fal::FalMap m = load(in1);
    std::string why;
    auto s = fal::decompose(m, knot_or_throw(m, kf_name), !m.degenerate(), &why);
    if (!s) throw UsageError("no signature decomposition on " + kf_name + ": " + why);
    auto [out, step] = fal::full_swap(m, *s);
    Json rec = fal::report::to_json(step);
    if (json) {
      Json j = fal::report::envelope("swap");
      j["step"] = rec;
      j["fal"] = fal::serialize(out);
      write_output(out_path, j.dump(2) + "\n");
    } else {
      write_output(out_path, fal::serialize(out) + "# step: " + rec.dump() + "\n");
    }
  });

  int alt = 0;
  auto* flype = app.add_subcommand("flype", "Move a crossing circle to an alternate crossing disk");
  flype->add_option("--input,input", in1)->required();
  flype->add_option("--clasp", clasp_name)->required();
  flype->add_option("--alt", alt, "Alternate index (1-based, see geodesics)")->required();
  flype->add_option("-o,--output", out_path);
  add_json(flype);
  flype->callback([&] {
    fal::FalMap m = load(in1);
    fal::RewriteStep step;
    step.kind = fal::RewriteKind::Flype;
    step.clasp = clasp_name;
    step.alternate = alt;
    fal::FalMap out;
    try {
      out = fal::apply(m, step);
    } catch (const fal::NotAnAlternate& e) {
      throw UsageError(e.what());
    }
    Json rec = fal::report::to_json(step);
    if (json) {
      Json j = fal::report::envelope("flype");
      j["step"] = rec;
      j["fal"] = fal::serialize(out);
      write_output(out_path, j.dump(2) + "\n");
    } else {
      write_output(out_path, fal::serialize(out) + "# step: " + rec.dump() + "\n");
    }
  });

  auto* geodesics = app.add_subcommand("geodesics", "Reflection faces and totally geodesic disk traces");
  geodesics->add_option("input", in1)->required();
  add_json(geodesics);
  geodesics->callback([&] {
    fal::FalMap m = load(in1);
    auto faces = fal::reflection_faces(m);
    auto crossing = fal::all_crossing_disks(m);
    auto longs = fal::longitudinal_disks(m);
    if (json) {
      Json j = fal::report::envelope("geodesics");
      j["reflection_faces"] = Json::array();
      for (const auto& f : faces) j["reflection_faces"].push_back(fal::report::to_json(m, f));
      j["crossing_disks"] = Json::array();
      int idx = 0, last = -1;
      for (const auto& t : crossing) {
        idx = t.clasp == last ? idx + 1 : 0;
        last = t.clasp;
        Json d = fal::report::to_json(m, t);
        d["alternate"] = idx;
        j["crossing_disks"].push_back(d);
      }
      j["longitudinal_disks"] = Json::array();
      for (const auto& t : longs) j["longitudinal_disks"].push_back(fal::report::to_json(m, t));
      emit(j);
    } else {
      for (const auto& f : faces) std::cout << "face " << face_text(m, f) << "\n";
      int idx = 0, last = -1;
      for (const auto& t : crossing) {
        idx = t.clasp == last ? idx + 1 : 0;
        last = t.clasp;
        std::cout << "disk " << idx << " " << trace_text(m, t) << "\n";
      }
      for (const auto& t : longs) std::cout << "disk " << trace_text(m, t) << "\n";
    }
  });

  int alpha = 0;
  auto* sepsets = app.add_subcommand("sepsets", "Separating pairs, and quadruples for signature links");
  sepsets->add_option("input", in1)->required();
  sepsets->add_option("--kf", kf_name, "Knot circle K_f (default: first decomposition found)");
  sepsets->add_option("--alpha", alpha, "Arc of K_f (1..n; default n)");
  add_json(sepsets);
  sepsets->callback([&] {
    fal::FalMap m = load(in1);
    auto pairs = fal::separating_pairs(m);
    std::optional<fal::SignatureDecomposition> sig;
    std::string why;
    if (!kf_name.empty()) {
      sig = fal::decompose(m, knot_or_throw(m, kf_name), !m.degenerate(), &why);
      if (!sig) throw UsageError("no signature decomposition on " + kf_name + ": " + why);
    } else if (auto all = fal::detect_signature(m); !all.empty()) {
      sig = all.front();
    }
    Json j = fal::report::envelope("sepsets");
    j["pairs"] = Json::array();
    for (const auto& p : pairs) j["pairs"].push_back(fal::report::to_json(m, p));
    if (!json)
      for (const auto& p : pairs)
        std::cout << "pair " << trace_text(m, p.first) << " | " << trace_text(m, p.second) << "\n";
    if (sig) {
      auto quads = fal::separating_quadruples(m, *sig);
      const int a = alpha ? alpha : sig->n();
      if (a < 1 || a > sig->n()) throw UsageError("alpha must lie in 1.." + std::to_string(sig->n()));
      auto order = fal::inside_order(m, *sig, quads, a);
      auto ball = fal::standard_ball(m, *sig, quads, order);
      j["k_f"] = m.knots()[sig->k_f].name;
      j["quadruples"] = Json::array();
      for (const auto& q : quads) j["quadruples"].push_back(fal::report::to_json(m, q));
      j["order"] = fal::report::to_json(m, quads, order);
      j["standard_ball"] = fal::report::to_json(m, quads, ball);
      if (!json) {
        std::cout << "K_f " << m.knots()[sig->k_f].name << ", alpha " << a << "\n";
        for (const auto& q : quads) std::cout << "quadruple " << m.clasps()[q.chord].name << "\n";
        for (const auto& c : j["order"]["covers"]) std::cout << "inside " << c[0].get<std::string>() << " < " << c[1].get<std::string>() << "\n";
        std::cout << "ball";
        for (const auto& s : j["standard_ball"]["run"]) std::cout << " " << s.get<std::string>();
        std::cout << "; punctures";
        for (const auto& s : j["standard_ball"]["sphere_punctures"]) std::cout << " " << s.get<std::string>();
        std::cout << "; certificate " << (ball.certificate_ok ? "ok" : "failed") << "\n";
      }
    }
    if (json) emit(j);
  });

  auto* symmetry = app.add_subcommand("symmetry", "Do link and complement symmetries coincide");
  symmetry->add_option("input", in1)->required();
  add_json(symmetry);
  symmetry->callback([&] {
    fal::FalMap m = load_valid(in1);
    fal::SymmetryReport r = fal::symmetry_report(m);
    if (json) {
      Json j = fal::report::envelope("symmetry");
      j["report"] = fal::report::to_json(m, r);
      emit(j);
    } else {
      std::cout << (r.kind == fal::SymmetryReport::Kind::Coincide ? "Coincide" : "ExtraFullSwaps");
      for (const auto& s : r.decompositions) std::cout << " " << m.knots()[s.k_f].name;
      std::cout << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  } catch (const UsageError& e) {
    std::cerr << "fal: " << e.what() << "\n";
    return kError;
  } catch (const fal::FamilyError& e) {
    std::cerr << "fal: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "fal: " << e.what() << "\n";
    return kError;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
