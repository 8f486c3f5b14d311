#include "flopcalc/cli/run.hpp"

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "flopcalc/catalog/catalog.hpp"
#include "flopcalc/coeff/text.hpp"
#include "flopcalc/contraction/contraction.hpp"
#include "flopcalc/errors.hpp"
#include "flopcalc/flops/pipeline.hpp"
#include "flopcalc/flops/representation.hpp"
#include "flopcalc/flops/superpotential.hpp"
#include "json.hpp"

namespace flopcalc::cli {

namespace {

using json = nlohmann::ordered_json;
using coeff::MultiPoly;
using coeff::ParamRing;
using pathalg::AlgebraPresentation;

constexpr int kSchema = 1;

struct Options {
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  std::optional<int> degree;
  bool heavy = false;

  std::string in, builtin;
  std::string map_file, builtin_map;
  std::string phi_file, builtin_phi;
  std::string rep_file, builtin_rep;
  std::vector<std::string> elements;
  std::optional<int> length;
  std::optional<int> vertex;
  std::optional<std::size_t> dim, dim_ab;
  bool raw = false, nice = false, check_only = false;
};

class Sink {
 public:
  Sink(std::ostream& out, bool structured) : out_(out), structured_(structured) {
    if (structured_) out_ << "schema: " << kSchema << "\n";
  }
  bool structured() const { return structured_; }
  void emit(const json& record, const std::string& text) {
    if (structured_)
      out_ << record.dump() << "\n";
    else
      out_ << text << "\n";
  }

 private:
  std::ostream& out_;
  bool structured_;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::uint64_t budget(const Options& o) { return o.budget.value_or(ncgb::default_budget()); }

AlgebraPresentation load_algebra(const Options& o, const std::string& fallback = "") {
  if (!o.in.empty() && !o.builtin.empty()) throw UsageError("give --in or --builtin, not both");
  if (!o.in.empty()) return pathalg::parse_presentation(read_file(o.in));
  if (!o.builtin.empty()) return catalog::builtin(o.builtin);
  if (!fallback.empty()) return catalog::builtin(fallback);
  throw UsageError("an algebra is required (--in FILE or --builtin NAME)");
}

std::optional<catalog::ClassifyingMap> load_map(const Options& o) {
  if (!o.map_file.empty() && !o.builtin_map.empty()) throw UsageError("give --map or --builtin-map, not both");
  if (!o.map_file.empty()) return flops::parse_classifying_map(read_file(o.map_file));
  if (!o.builtin_map.empty()) return catalog::classifying_map(o.builtin_map);
  return std::nullopt;
}

int check_length(const Options& o) {
  if (!o.length) throw UsageError("--length is required");
  if (*o.length < 1 || *o.length > 6) throw UsageError("--length must be between 1 and 6");
  return *o.length;
}

const char* cost_class(int length) {
  switch (length) {
    case 4: return "seconds to a minute";
    case 5: return "tens of minutes";
    case 6: return "hours";
    default: return "seconds";
  }
}

std::string poly_text(const MultiPoly& p, const ParamRing& r) { return coeff::to_string(p, r); }

void emit_matrix(Sink& s, const std::string& name, const flops::Matrix& m, const ParamRing& r) {
  s.emit({{"record", "matrix"}, {"name", name}, {"rows", m.size()}}, name + " =");
  for (std::size_t i = 0; i < m.size(); ++i) {
    json entries = json::array();
    std::string text = "  [";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      entries.push_back(poly_text(m[i][j], r));
      text += (j ? ", " : "") + entries.back().get<std::string>();
    }
    s.emit({{"record", "matrix_row"}, {"matrix", name}, {"row", i}, {"entries", entries}}, text + "]");
  }
}

/// Returns 0 when every line passes, 1 otherwise.
int emit_report(Sink& s, const std::string& subject, const catalog::Report& rep) {
  for (const auto& l : rep.lines) {
    json j{{"record", "report"}, {"subject", subject}, {"check", l.name}, {"ok", l.ok}};
    if (!l.detail.empty()) j["detail"] = l.detail;
    s.emit(j, std::string(l.ok ? "ok    " : "FAIL  ") + l.name + (l.detail.empty() ? "" : "  (" + l.detail + ")"));
  }
  bool ok = rep.ok();
  s.emit({{"record", "summary"}, {"subject", subject}, {"ok", ok}, {"checks", rep.lines.size()}},
         subject + (ok ? ": all checks passed" : ": some checks failed"));
  return ok ? kOk : kDomain;
}

void emit_presentation(Sink& s, const AlgebraPresentation& alg) {
  auto text = pathalg::print_presentation(alg);
  std::string trimmed = text;
  while (!trimmed.empty() && trimmed.back() == '\n') trimmed.pop_back();
  s.emit({{"record", "presentation"}, {"name", alg.name}, {"text", text}}, trimmed);
}

// ---------------------------------------------------------------- subcommands

int cmd_catalog(Sink& s, const Options& o) {
  if (!o.builtin.empty()) {
    emit_presentation(s, catalog::builtin(o.builtin));
    return kOk;
  }
  if (o.length) {
    int l = check_length(o);
    const auto& e = catalog::universal_flopping_algebra(l);
    const auto& ord = e.presentation.order();
    emit_presentation(s, e.presentation);
    auto el = [&](const char* key, const pathalg::Element& x) {
      auto t = pathalg::to_string(x, ord);
      s.emit({{"record", "element"}, {"name", key}, {"value", t}}, std::string(key) + " = " + t);
    };
    el("x'", e.xprime);
    el("y", e.y);
    el("z", e.z);
    for (std::size_t i = 0; i < e.module_generators.size(); ++i)
      el(("g" + std::to_string(i + 1)).c_str(), e.module_generators[i]);
    s.emit({{"record", "central_equation"}, {"equation", e.central_equation}},
           "central equation: " + e.central_equation);
    s.emit({{"record", "cost"}, {"length", l}, {"gb_degree", e.gb_degree}, {"cost_class", cost_class(l)},
            {"heavy", l >= 4}},
           "gb degree " + std::to_string(e.gb_degree) + ", cost class: " + cost_class(l) +
               (l >= 4 ? " (needs --heavy)" : ""));
    return emit_report(s, "invariants", catalog::verify_invariants(e));
  }
  auto list = [&](const char* kind, const std::vector<std::string>& names) {
    std::string text = std::string(kind) + ":";
    json arr = json::array();
    for (const auto& n : names) {
      text += " " + n;
      arr.push_back(n);
    }
    s.emit({{"record", "catalog"}, {"kind", kind}, {"names", arr}}, text);
  };
  list("algebras", catalog::builtin_names());
  list("maps", catalog::classifying_map_names());
  list("superpotentials", catalog::superpotential_names());
  list("representations", flops::builtin_representation_names());
  return kOk;
}

int cmd_gb(Sink& s, const Options& o) {
  auto alg = load_algebra(o);
  pathalg::validate(alg);
  auto gb = o.degree ? ncgb::truncated_groebner(alg, alg.order(), *o.degree, budget(o))
                     : ncgb::complete_groebner(alg, alg.order(), budget(o));
  const auto& q = alg.quiver();
  json order = json::array();
  for (const auto& n : alg.order().precedence_names(q)) order.push_back(n);
  if (!s.structured()) {
    auto text = ncgb::serialize(gb);
    text.pop_back();
    s.emit({}, text);
  } else {
    s.emit({{"record", "groebner"}, {"algebra", alg.name}, {"order", order}, {"truncation", gb.truncation_degree()},
            {"complete", gb.complete()}, {"rules", gb.size()}},
           "");
    for (const auto& r : gb.rules())
      s.emit({{"record", "rule"}, {"lead", pathalg::path_string(q, r.lead)},
              {"tail", pathalg::to_string(r.tail, gb.order())}},
             "");
  }
  if (gb.complete() && ncgb::finite_normal_words(gb)) {
    auto n = ncgb::enumerate_normal_words(gb).size();
    s.emit({{"record", "dimension"}, {"finite", true}, {"value", n}}, "dimension: " + std::to_string(n));
  }
  return kOk;
}

int cmd_nf(Sink& s, const Options& o) {
  auto alg = load_algebra(o);
  pathalg::validate(alg);
  if (o.elements.empty()) throw UsageError("nf needs at least one --element");
  std::vector<pathalg::Element> xs;
  int top = alg.max_relation_degree();
  for (const auto& t : o.elements) {
    xs.push_back(pathalg::parse_element(t, alg.context));
    top = std::max(top, xs.back().degree(alg.order()));
  }
  auto gb = ncgb::truncated_groebner(alg, alg.order(), o.degree.value_or(top), budget(o));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto r = pathalg::to_string(ncgb::normal_form(xs[i], gb), alg.order());
    s.emit({{"record", "normal_form"}, {"input", o.elements[i]}, {"value", r}}, "NF(" + o.elements[i] + ") = " + r);
  }
  return kOk;
}

struct Prepared {
  flops::PipelineInput input;
  bool universal = true;
};

Prepared prepare(const Options& o, int l, const char* what) {
  const auto& e = catalog::universal_flopping_algebra(l);
  Prepared p{flops::pipeline_input(e), true};
  if (auto m = load_map(o)) {
    if (m->length && m->length != l)
      throw DomainError("map '" + m->name + "' is for length " + std::to_string(m->length));
    p.input = flops::specialize(p.input, *m);
    p.universal = false;
  }
  if (o.degree) p.input.gb_degree = *o.degree;
  if (p.universal && l >= 4 && !o.heavy)
    throw UsageError(std::string(what) + " for length " + std::to_string(l) + " is heavy (cost class: " +
                     cost_class(l) + "); rerun with --heavy");
  return p;
}

int cmd_hypersurface(Sink& s, const Options& o) {
  int l = check_length(o);
  if (o.raw && o.nice) throw UsageError("--raw and --nice-basis are exclusive");
  if (o.nice && l != 2) throw UsageError("--nice-basis is only defined for length 2");
  if (o.nice && (!o.map_file.empty() || !o.builtin_map.empty()))
    throw UsageError("--nice-basis applies to the universal length-2 family only");
  auto p = prepare(o, l, "hypersurface");
  flops::FlopPipeline pipe(p.input, budget(o));
  const auto& h = pipe.hypersurface();
  if (o.nice) {
    auto bc = flops::nice_basis();
    auto f = poly_text(flops::apply(bc, h.equation, h.ring), bc.target);
    s.emit({{"record", "equation"}, {"length", l}, {"basis", "nice"}, {"f", f}}, "f = " + f);
    return kOk;
  }
  auto f = poly_text(h.equation, h.ring);
  s.emit({{"record", "equation"}, {"length", l}, {"basis", "raw"}, {"f", f}, {"g", poly_text(h.g, h.ring)},
          {"P", poly_text(h.P, h.ring)}, {"Q", poly_text(h.Q, h.ring)}},
         "f = " + f + "\nNF(x'^2) = P x' + Q with\n  P = " + poly_text(h.P, h.ring) +
             "\n  Q = " + poly_text(h.Q, h.ring));
  return kOk;
}

int cmd_mf(Sink& s, const Options& o) {
  int l = check_length(o);
  if (o.nice && l != 2) throw UsageError("--nice-basis is only defined for length 2");
  auto p = prepare(o, l, "mf");
  flops::FlopPipeline pipe(p.input, budget(o));
  auto mf = pipe.matrix_factorization();
  auto C = mf.C;
  auto g = mf.g;
  ParamRing ring = mf.ring;
  if (o.nice) {
    auto bc = flops::nice_basis();
    C = flops::apply(bc, C, mf.ring);
    g = flops::apply(bc, g, mf.ring);
    ring = bc.target;
  }
  bool ok = flops::is_zero(flops::mf_residual(C, g));
  if (!o.check_only) {
    s.emit({{"record", "g"}, {"value", poly_text(g, ring)}}, "g = " + poly_text(g, ring));
    emit_matrix(s, "C", C, ring);
  }
  catalog::Report rep;
  rep.lines.push_back({"C^2 = g I (" + std::to_string(C.size()) + "x" + std::to_string(C.size()) + ")", ok, ""});
  return emit_report(s, "mf length " + std::to_string(l), rep);
}

int cmd_specialize(Sink& s, const Options& o) {
  auto alg = load_algebra(o);
  auto m = load_map(o);
  if (!m) throw UsageError("specialize needs --map FILE or --builtin-map NAME");
  auto out = flops::specialize(alg, *m);
  emit_presentation(s, out);
  return kOk;
}

struct PhiInput {
  std::string text;
  std::map<std::string, coeff::Rational> scale;
  std::string algebra;
};

PhiInput parse_phi_file(const std::string& text) {
  PhiInput p;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.rfind("scale:", 0) == 0) {
      std::stringstream ss(line.substr(6));
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected arrow = rational", n, 1);
        auto name = item.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        auto value = item.substr(eq + 1);
        std::optional<MultiPoly> k;
        try {
          k = coeff::parse_poly(value, ParamRing());
        } catch (const Error&) {
        }
        if (!k || !k->is_constant() || k->is_zero()) throw ParseError("bad scale '" + value + "'", n, eq + 2);
        p.scale[name] = k->constant_value();
      }
    } else if (line.rfind("phi:", 0) == 0) {
      p.text += line.substr(4) + " ";
    } else {
      p.text += line + " ";
    }
  }
  if (p.text.find_first_not_of(' ') == std::string::npos) throw ParseError("empty superpotential", n, 1);
  return p;
}

int cmd_superpotential(Sink& s, const Options& o) {
  if (!o.phi_file.empty() && !o.builtin_phi.empty()) throw UsageError("give --phi or --builtin-phi, not both");
  PhiInput phi;
  if (!o.phi_file.empty()) {
    phi = parse_phi_file(read_file(o.phi_file));
  } else if (!o.builtin_phi.empty()) {
    const auto& d = catalog::superpotential(o.builtin_phi);
    phi = {d.phi, d.rescaling, d.algebra};
  } else {
    throw UsageError("superpotential needs --phi FILE or --builtin-phi NAME");
  }
  auto alg = load_algebra(o, phi.algebra);
  pathalg::validate(alg);
  auto w = pathalg::parse_element(phi.text, alg.context);
  if (!phi.scale.empty()) {
    for (const auto& [a, _] : phi.scale)
      if (!alg.quiver().arrow_index(a)) throw DomainError("scale names unknown arrow '" + a + "'");
    w = flops::rescale(w, phi.scale);
    std::string text = "rescaled";
    json sc = json::object();
    for (const auto& [a, k] : phi.scale) {
      text += (sc.empty() ? ": " : ", ") + a + " -> " + coeff::to_string(k) + " " + a;
      sc[a] = coeff::to_string(k);
    }
    s.emit({{"record", "rescaling"}, {"scale", sc}}, text);
  }
  auto ord = alg.order();
  for (const auto& a : alg.quiver().arrows()) {
    auto d = pathalg::to_string(flops::cyclic_derivative(w, a.name), ord);
    s.emit({{"record", "derivative"}, {"arrow", a.name}, {"value", d}}, "d" + a.name + " = " + d);
  }
  return emit_report(s, "superpotential", flops::verify_superpotential(alg, w));
}

int cmd_verify_rep(Sink& s, const Options& o) {
  if (!o.rep_file.empty() && !o.builtin_rep.empty()) throw UsageError("give --rep or --builtin-rep, not both");
  flops::Representation rep;
  if (!o.rep_file.empty())
    rep = flops::parse_representation(read_file(o.rep_file));
  else if (!o.builtin_rep.empty())
    rep = flops::builtin_representation(o.builtin_rep);
  else
    throw UsageError("verify-rep needs --rep FILE or --builtin-rep NAME");
  auto alg = load_algebra(o, o.builtin_rep.empty() ? "" : "length2");
  pathalg::validate(alg);
  return emit_report(s, "representation", flops::verify_representation(alg, rep));
}

std::string tuple_text(const contraction::GvTuple& n) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i]) top = i + 1;
  std::string t = "(";
  for (std::size_t i = 0; i < std::max<std::size_t>(top, 1); ++i) t += (i ? "," : "") + std::to_string(n[i]);
  return t + ")";
}

void emit_gv(Sink& s, std::size_t dim, std::size_t ab, const std::vector<contraction::GvTuple>& sols) {
  json arr = json::array();
  std::string text = "GV:";
  for (const auto& n : sols) {
    arr.push_back(json(n));
    text += " " + tuple_text(n);
  }
  if (sols.empty()) text += " none";
  s.emit({{"record", "gv"}, {"dim", dim}, {"dim_ab", ab}, {"solutions", arr}}, text);
}

int cmd_contraction(Sink& s, const Options& o) {
  auto alg = load_algebra(o);
  pathalg::validate(alg);
  auto v = o.vertex ? pathalg::VertexId(*o.vertex) : alg.quiver().vertices().front();
  if (o.vertex && *o.vertex < 0) throw UsageError("--vertex must be nonnegative");
  if (o.length && (*o.length < 1 || *o.length > 6)) throw UsageError("--length must be between 1 and 6");
  auto r = contraction::contraction_report(alg, v, o.length, budget(o));
  emit_presentation(s, r.presentation);
  json j{{"record", "contraction"}, {"vertex", v}, {"dim", r.dims.dim}, {"dim_ab", r.dims.dim_ab},
         {"global_dim", r.dims.global_dim}, {"global_dim_ab", r.dims.global_dim_ab}};
  if (r.declared_length) j["length"] = *r.declared_length;
  std::string text = "dim " + std::to_string(r.dims.dim) + "\ndim_ab " + std::to_string(r.dims.dim_ab);
  if (r.dims.global_dim != r.dims.dim || r.dims.global_dim_ab != r.dims.dim_ab)
    text += "\nglobal dim " + std::to_string(r.dims.global_dim) + ", global dim_ab " +
            std::to_string(r.dims.global_dim_ab);
  s.emit(j, text);
  emit_gv(s, r.dims.dim, r.dims.dim_ab, r.gv_solutions);
  return kOk;
}

int cmd_gv(Sink& s, const Options& o) {
  if (!o.dim || !o.dim_ab) throw UsageError("gv needs --dim and --dim-ab");
  if (*o.dim_ab > *o.dim) throw DomainError("dim_ab exceeds dim");
  emit_gv(s, *o.dim, *o.dim_ab, contraction::gv_invariants(*o.dim, *o.dim_ab, o.length));
  return kOk;
}

// ---------------------------------------------------------------- errors

int report_error(std::ostream& out, std::ostream& err, bool structured, bool header_written, int code,
                 const char* kind, const std::string& message, json extra = json::object()) {
  json j{{"record", "error"}, {"kind", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  j["exit"] = code;
  if (structured) {
    if (!header_written) out << "schema: " << kSchema << "\n";
    out << j.dump() << "\n";
  } else {
    err << "flopcalc: " << kind << " error: " << message << "\n" << j.dump() << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"flopcalc: flopping algebras, hypersurfaces, matrix factorizations and contraction algebras",
               "flopcalc"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--budget", o.budget, "Reduction-step budget (overrides FLOPCALC_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--degree", o.degree, "Truncation degree override")->check(CLI::PositiveNumber);
  app.add_flag("--heavy", o.heavy, "Allow full pipelines for lengths 4-6");

  auto algebra_opts = [&](CLI::App* c) {
    c->add_option("--in", o.in, "Presentation file");
    c->add_option("--builtin", o.builtin, "Builtin presentation name");
  };
  auto map_opts = [&](CLI::App* c) {
    c->add_option("--map", o.map_file, "Classifying map file");
    c->add_option("--builtin-map", o.builtin_map, "Builtin classifying map");
  };
  auto length_opt = [&](CLI::App* c) { return c->add_option("--length", o.length, "Length 1..6"); };

  auto* cat = app.add_subcommand("catalog", "List builtins, or show one presentation or universal entry");
  cat->add_option("--builtin", o.builtin, "Builtin presentation name");
  length_opt(cat);

  auto* gb = app.add_subcommand("gb", "Groebner basis (complete, or truncated with --degree)");
  algebra_opts(gb);

  auto* nf = app.add_subcommand("nf", "Normal forms");
  algebra_opts(nf);
  nf->add_option("--element", o.elements, "Element to reduce (repeatable)");

  auto* hyp = app.add_subcommand("hypersurface", "Hypersurface equation of a flopping algebra");
  length_opt(hyp);
  map_opts(hyp);
  hyp->add_flag("--raw", o.raw, "Raw output variables (default)");
  hyp->add_flag("--nice-basis", o.nice, "Length 2 in the u, v, w basis");

  auto* mf = app.add_subcommand("mf", "Matrix factorization from the module generators");
  length_opt(mf);
  map_opts(mf);
  mf->add_flag("--check-only", o.check_only, "Only report C^2 = g I");
  mf->add_flag("--nice-basis", o.nice, "Length 2 in the u, v, w basis");

  auto* spec = app.add_subcommand("specialize", "Push relations through a parameter map");
  algebra_opts(spec);
  map_opts(spec);

  auto* sp = app.add_subcommand("superpotential", "Check a superpotential against the relations");
  algebra_opts(sp);
  sp->add_option("--phi", o.phi_file, "Superpotential file");
  sp->add_option("--builtin-phi", o.builtin_phi, "Builtin superpotential");

  auto* vr = app.add_subcommand("verify-rep", "Check a representation against the relations");
  algebra_opts(vr);
  vr->add_option("--rep", o.rep_file, "Representation file");
  vr->add_option("--builtin-rep", o.builtin_rep, "Builtin representation");

  auto* con = app.add_subcommand("contraction", "Contraction algebra, dimensions and GV invariants");
  algebra_opts(con);
  con->add_option("--vertex", o.vertex, "Vertex to contract (default: the smallest)");
  length_opt(con);

  auto* gv = app.add_subcommand("gv", "GV tuples from dimensions");
  gv->add_option("--dim", o.dim, "dim of the contraction algebra")->required();
  gv->add_option("--dim-ab", o.dim_ab, "dim of its abelianization")->required();
  length_opt(gv);

  for (auto* c : app.get_subcommands([](CLI::App*) { return true; })) c->fallthrough();

  // before parsing succeeds, guess the format so usage errors come out in the requested form
  bool structured = std::find(args.begin(), args.end(), "--format=structured") != args.end();
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    structured = structured || (args[i] == "--format" && args[i + 1] == "structured");
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(out, err, structured, false, kUsage, "usage", e.what());
  }
  structured = o.format == "structured";

  Sink sink(out, structured);
  try {
    auto* sub = app.get_subcommands().front();
    auto name = sub->get_name();
    if (name == "catalog") return cmd_catalog(sink, o);
    if (name == "gb") return cmd_gb(sink, o);
    if (name == "nf") return cmd_nf(sink, o);
    if (name == "hypersurface") return cmd_hypersurface(sink, o);
    if (name == "mf") return cmd_mf(sink, o);
    if (name == "specialize") return cmd_specialize(sink, o);
    if (name == "superpotential") return cmd_superpotential(sink, o);
    if (name == "verify-rep") return cmd_verify_rep(sink, o);
    if (name == "contraction") return cmd_contraction(sink, o);
    if (name == "gv") return cmd_gv(sink, o);
    throw UsageError("unknown subcommand '" + name + "'");
  } catch (const ParseError& e) {
    return report_error(out, err, structured, true, kUsage, "parse", e.what(),
                        {{"line", e.line()}, {"column", e.column()}});
  } catch (const UsageError& e) {
    return report_error(out, err, structured, true, kUsage, "usage", e.what());
  } catch (const BudgetExceeded& e) {
    return report_error(out, err, structured, true, kBudget, "budget", e.what(), {{"steps", e.steps()}});
  } catch (const Error& e) {
    return report_error(out, err, structured, true, kDomain, "domain", e.what());
  }
}

}  // namespace flopcalc::cli
