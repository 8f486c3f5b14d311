#include "flopcalc/flops/pipeline.hpp"

#include <cctype>

#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"
#include "flopcalc/pathalg/linear_span.hpp"

namespace flopcalc::flops {

using coeff::Monomial;

namespace {

enum Var { kX = 0, kY = 1, kZ = 2, kXPrime = 3 };

ParamRing output_ring(const PipelineInput& in) {
  const auto& params = in.algebra.params();
  const auto& ord = in.algebra.order();
  std::vector<std::string> names(in.names.begin(), in.names.end());
  std::vector<int> degrees{in.xprime.degree(ord), in.y.degree(ord), in.z.degree(ord)};
  for (const auto& n : in.names)
    if (params.contains(n)) throw DomainError("variable name '" + n + "' clashes with a parameter");
  for (std::size_t i = 0; i < params.size(); ++i) {
    names.push_back(params.name(i));
    degrees.push_back(params.degree(i));
  }
  return ParamRing(names, degrees);
}

// y^i z^j, optionally times x', of degree at most `top`.
std::vector<Monomial> candidates(int dy, int dz, int top, std::optional<int> dx) {
  std::vector<Monomial> out;
  for (int i = 0; i * dy <= top; ++i)
    for (int j = 0; i * dy + j * dz <= top; ++j) {
      auto m = Monomial::variable(kY, unsigned(i)) * Monomial::variable(kZ, unsigned(j));
      out.push_back(m);
      if (dx && i * dy + j * dz + *dx <= top) out.push_back(m * Monomial::variable(kX));
    }
  return out;
}

}  // namespace

PipelineInput pipeline_input(const FlopCatalogEntry& e) {
  return {e.presentation, e.xprime, e.y, e.z, e.module_generators, e.gb_degree, {"x", "y", "z"}};
}

FlopPipeline::FlopPipeline(PipelineInput input, std::uint64_t budget)
    : in_(std::move(input)),
      gb_(ncgb::truncated_groebner(in_.algebra, in_.algebra.order(), in_.gb_degree, budget)),
      ring_(output_ring(in_)) {}

Element FlopPipeline::nf(const Element& x) const {
  try {
    return ncgb::normal_form(x, gb_);
  } catch (const DomainError&) {
    throw DomainError("degree " + std::to_string(x.degree(in_.algebra.order())) +
                      " exceeds the truncation degree " + std::to_string(in_.gb_degree) + "; raise gb_degree");
  }
}

const Element& FlopPipeline::power(int var, unsigned e) {
  auto key = std::make_pair(var, e);
  auto it = powers_.find(key);
  if (it != powers_.end()) return it->second;
  Element base;
  switch (var) {
    case kX:
      if (!hyp_) hypersurface();
      base = x_;
      break;
    case kY: base = in_.y; break;
    case kZ: base = in_.z; break;
    default: base = in_.xprime; break;
  }
  Element v = e == 0 ? Element::idempotent(in_.algebra.context, in_.xprime.endpoints()->first)
                     : nf(power(var, e - 1) * base);
  return powers_.emplace(key, std::move(v)).first->second;
}

Element FlopPipeline::to_element(const MultiPoly& p) {
  const auto& params = in_.algebra.params();
  Element out(in_.algebra.context);
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < params.size(); ++i) m = m * Monomial::variable(i, t.mono.exponent(i + 3));
    Element v = power(kY, t.mono.exponent(kY)) * power(kZ, t.mono.exponent(kZ));
    if (t.mono.exponent(kX) > 0) v = nf(v * power(kX, t.mono.exponent(kX)));
    out += v.scaled(RatFunc(MultiPoly::monomial(m, t.coeff)));
  }
  return nf(out);
}

MultiPoly FlopPipeline::from_coefficients(const std::vector<RatFunc>& k, const std::vector<Monomial>& monos,
                                          const std::string& what) const {
  MultiPoly out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i].is_zero()) continue;
    if (!k[i].is_polynomial())
      throw DomainError(what + " has a non-polynomial coefficient " + coeff::to_string(k[i], in_.algebra.params()));
    out += coeff::rename_into(k[i].num(), in_.algebra.params(), ring_).mul_monomial(monos[i], 1);
  }
  return out;
}

const Hypersurface& FlopPipeline::hypersurface() {
  if (hyp_) return *hyp_;
  const auto& ord = in_.algebra.order();
  int dx = in_.xprime.degree(ord), dy = in_.y.degree(ord), dz = in_.z.degree(ord);
  Element target = nf(in_.xprime * in_.xprime);
  auto monos = candidates(dy, dz, 2 * dx, dx);
  std::vector<Element> span;
  for (const auto& m : monos) {
    Element v = nf(power(kY, m.exponent(kY)) * power(kZ, m.exponent(kZ)));
    if (m.exponent(kX) > 0) v = nf(v * power(kXPrime, 1));
    span.push_back(std::move(v));
  }
  auto k = pathalg::express(target, span, ord);
  if (!k)
    throw DomainError("NF(x'^2) is not of the form P x' + Q at truncation degree " +
                      std::to_string(in_.gb_degree) + "; raise gb_degree");
  std::vector<RatFunc> kp(k->size()), kq(k->size());
  std::vector<Monomial> plain(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    plain[i] = monos[i].with_exponent(kX, 0);
    (monos[i].exponent(kX) > 0 ? kp : kq)[i] = (*k)[i];
  }
  Hypersurface h;
  h.ring = ring_;
  h.P = from_coefficients(kp, plain, "P");
  h.Q = from_coefficients(kq, plain, "Q");
  h.g = h.Q + h.P * h.P * coeff::Rational(1, 4);
  h.equation = MultiPoly::variable(kX).pow(2) - h.g;
  hyp_ = h;
  x_ = in_.xprime - to_element(h.P).scaled(RatFunc(coeff::Rational(1, 2)));
  return *hyp_;
}

MatrixFactorization FlopPipeline::matrix_factorization() {
  const auto& h = hypersurface();
  const auto& ord = in_.algebra.order();
  int dx = in_.xprime.degree(ord), dy = in_.y.degree(ord), dz = in_.z.degree(ord);
  MatrixFactorization mf;
  mf.ring = ring_;
  mf.g = h.g;
  for (const auto& g : in_.generators) mf.generators.push_back(nf(g));
  std::size_t n = mf.generators.size();
  for (std::size_t i = 0; i < n; ++i) {
    Element target = nf(x_ * mf.generators[i]);
    int top = dx + mf.generators[i].degree(ord);
    std::vector<Element> span;
    std::vector<std::pair<std::size_t, Monomial>> index;
    for (std::size_t j = 0; j < n; ++j) {
      int room = top - mf.generators[j].degree(ord);
      if (room < 0) continue;
      for (const auto& m : candidates(dy, dz, room, std::nullopt)) {
        span.push_back(nf(power(kY, m.exponent(kY)) * power(kZ, m.exponent(kZ)) * mf.generators[j]));
        index.emplace_back(j, m);
      }
    }
    auto k = pathalg::express(target, span, ord);
    if (!k)
      throw DomainError("x g" + std::to_string(i + 1) +
                        " is not supported on the generators at this truncation; raise gb_degree");
    std::vector<MultiPoly> row(n);
    for (std::size_t s = 0; s < span.size(); ++s) {
      if ((*k)[s].is_zero()) continue;
      row[index[s].first] += from_coefficients({(*k)[s]}, {index[s].second}, "C");
    }
    mf.C.push_back(std::move(row));
  }
  auto res = mf_residual(mf.C, mf.g);
  if (!is_zero(res)) {
    std::string detail;
    for (std::size_t i = 0; i < n && detail.empty(); ++i)
      for (std::size_t j = 0; j < n && detail.empty(); ++j)
        if (!res[i][j].is_zero())
          detail = " (entry " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ": " + coeff::to_string(res[i][j], ring_) + ")";
    throw DomainError("C^2 != g I" + detail);
  }
  return mf;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), std::vector<MultiPoly>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix mf_residual(const Matrix& C, const MultiPoly& g) {
  Matrix r = multiply(C, C);
  for (std::size_t i = 0; i < r.size(); ++i) r[i][i] -= g;
  return r;
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

Hypersurface hypersurface(const FlopCatalogEntry& entry, int gb_degree) {
  auto in = pipeline_input(entry);
  in.gb_degree = gb_degree;
  return FlopPipeline(in).hypersurface();
}

MatrixFactorization matrix_factorization(const FlopCatalogEntry& entry, int gb_degree) {
  auto in = pipeline_input(entry);
  in.gb_degree = gb_degree;
  return FlopPipeline(in).matrix_factorization();
}

AlgebraPresentation specialize(const AlgebraPresentation& alg, const ParamRing& target,
                               const std::map<std::string, MultiPoly>& map) {
  auto ctx = pathalg::make_context(alg.quiver(), target, alg.order().precedence_names(alg.quiver()));
  AlgebraPresentation out{ctx, {}, alg.name};
  for (const auto& r : alg.relations) {
    auto x = pathalg::map_element(r, ctx, {}, map);
    if (!x.is_zero()) out.relations.push_back(std::move(x));
  }
  pathalg::validate(out);
  return out;
}

AlgebraPresentation specialize(const AlgebraPresentation& alg, const ClassifyingMap& map) {
  auto out = specialize(alg, map.target, map.images);
  out.name = map.name;
  return out;
}

PipelineInput specialize(const PipelineInput& in, const ClassifyingMap& map) {
  PipelineInput out = in;
  out.algebra = specialize(in.algebra, map);
  const auto& ctx = out.algebra.context;
  auto push = [&](const Element& x) { return pathalg::map_element(x, ctx, {}, map.images); };
  out.xprime = push(in.xprime);
  out.y = push(in.y);
  out.z = push(in.z);
  for (auto& g : out.generators) g = push(g);
  // the Laufer target already has y and z
  bool clash = false;
  for (const auto& n : out.names) clash = clash || map.target.contains(n);
  if (clash)
    for (auto& n : out.names)
      for (auto& ch : n) ch = char(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

BaseChange nice_basis() {
  return {ParamRing({"x", "y", "z", "t", "u", "v", "w"}, {6, 4, 4, 2, 4, 4, 4}),
          {{"T0b", "-u"}, {"T0c", "-w"}, {"T0d", "y + z - u - w + t^2/4 + 2*v"}}};
}

MultiPoly apply(const BaseChange& bc, const MultiPoly& p, const ParamRing& from) {
  std::map<std::string, MultiPoly> images;
  for (const auto& [k, v] : bc.images) images[k] = coeff::parse_poly(v, bc.target);
  return coeff::substitute(p, from, bc.target, images);
}

Matrix apply(const BaseChange& bc, const Matrix& m, const ParamRing& from) {
  Matrix out = m;
  for (auto& row : out)
    for (auto& x : row) x = apply(bc, x, from);
  return out;
}

}  // namespace flopcalc::flops
