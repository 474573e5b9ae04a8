#include "gerbeflow/json_io.hpp"

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer()) throw ParseError(std::string(what) + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_array()) throw ParseError(std::string(what) + ": field \"" + key + "\" must be an array");
  return v;
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

int vars_field(const Json& j, const char* what) {
  int n = int_field(j, "vars", what);
  if (n < 0 || n > kMaxVars) throw ParseError(std::string(what) + ": \"vars\" out of range");
  return n;
}

MultiIndex exponent_from(const Json& j, int n, const char* what) {
  auto e = int_list(j, what);
  if (static_cast<int>(e.size()) != n) throw ParseError(std::string(what) + ": exponent length differs from \"vars\"");
  for (int v : e)
    if (v < 0 || v > 0xffff) throw ParseError(std::string(what) + ": exponent out of range");
  return MultiIndex::from_vector(e);
}

Json exponent_to(const MultiIndex& e, int n) { return Json(e.to_vector(n)); }

template <class E>
Json exterior_to_json(const E& x, const char* key) {
  Json terms = Json::array();
  for (const auto& [s, p] : x.terms()) terms.push_back({{key, basis_indices(s)}, {"coef", to_json(p)}});
  return {{"vars", x.num_vars()}, {"terms", terms}};
}

template <class E>
E exterior_from_json(const Json& j, const ArtinRing& ring, const char* key, const char* what) {
  const int n = vars_field(j, what);
  Chart chart{n, ring};
  E total(chart);
  for (const auto& t : array_field(j, "terms", what)) {
    auto dirs = int_list(field(t, key, what), what);
    for (int d : dirs)
      if (d < 0 || d >= n) throw ParseError(std::string(what) + ": direction index out of range");
    Poly c = poly_from_json(field(t, "coef", what), ring);
    if (c.num_vars() != n) throw ParseError(std::string(what) + ": coefficient \"vars\" differs from the container");
    auto [sign, s] = sort_tuple(dirs);
    if (sign == 0) throw ParseError(std::string(what) + ": repeated direction index");
    total += E::basis(chart, dirs, c);
  }
  return total;
}

}  // namespace

Json to_json(const Rational& q) { return rational_to_string(q); }

Json to_json(const Scalar& s) {
  Json j = Json::object();
  for (const auto& [e, q] : s.terms()) j["h" + std::to_string(e)] = rational_to_string(q);
  return j;
}

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", exponent_to(e, p.num_vars())}, {"coef", to_json(c)}});
  return {{"vars", p.num_vars()}, {"terms", terms}};
}

Json to_json(const MultiVector& m) { return exterior_to_json(m, "dirs"); }
Json to_json(const DiffForm& f) { return exterior_to_json(f, "covs"); }

Json to_json(const MultiDiffOp& d) {
  Json terms = Json::array();
  for (const auto& [betas, c] : d.terms()) {
    Json bs = Json::array();
    for (const auto& b : betas) bs.push_back(exponent_to(b, d.num_vars()));
    terms.push_back({{"coef", to_json(c)}, {"betas", bs}});
  }
  return {{"vars", d.num_vars()}, {"arity", d.arity()}, {"terms", terms}};
}

Json to_json(const ArtinRing& r) { return {{"param", r.param_name()}, {"order", r.order()}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational: expected a string \"a/b\"");
  return rational_from_string(j.get<std::string>());
}

Scalar scalar_from_json(const Json& j, int order) {
  if (!j.is_object()) {
    // A bare rational is accepted as an h-free scalar.
    return Scalar(rational_from_json(j), order);
  }
  Scalar s(order);
  for (const auto& [k, v] : j.items()) {
    if (k.size() < 2 || k[0] != 'h' || k.find_first_not_of("0123456789", 1) != std::string::npos)
      throw ParseError("scalar: keys must look like \"h0\", \"h1\", ...; got \"" + k + "\"");
    int e = std::stoi(k.substr(1));
    if (e >= order) throw ParseError("scalar: exponent " + std::to_string(e) + " not below the ring order " + std::to_string(order));
    s += Scalar::monomial(rational_from_json(v), e, order);
  }
  return s;
}

Poly poly_from_json(const Json& j, const ArtinRing& ring) {
  const int n = vars_field(j, "poly");
  std::vector<Poly::Term> terms;
  for (const auto& t : array_field(j, "terms", "poly"))
    terms.emplace_back(exponent_from(field(t, "exp", "poly"), n, "poly"), scalar_from_json(field(t, "coef", "poly"), ring.order()));
  return Poly(n, ring, std::move(terms));
}

MultiVector multivector_from_json(const Json& j, const ArtinRing& ring) {
  return exterior_from_json<MultiVector>(j, ring, "dirs", "multivector");
}

DiffForm diffform_from_json(const Json& j, const ArtinRing& ring) {
  return exterior_from_json<DiffForm>(j, ring, "covs", "form");
}

MultiDiffOp mdo_from_json(const Json& j, const ArtinRing& ring) {
  const int n = vars_field(j, "cochain");
  const int p = int_field(j, "arity", "cochain");
  if (p < 0) throw ParseError("cochain: negative arity");
  std::vector<MultiDiffOp::Term> terms;
  for (const auto& t : array_field(j, "terms", "cochain")) {
    const Json& bs = array_field(t, "betas", "cochain");
    if (static_cast<int>(bs.size()) != p) throw ParseError("cochain: number of betas differs from the arity");
    MultiDiffOp::Betas betas;
    for (const auto& b : bs) betas.push_back(exponent_from(b, n, "cochain"));
    Poly c = poly_from_json(field(t, "coef", "cochain"), ring);
    if (c.num_vars() != n) throw ParseError("cochain: coefficient \"vars\" differs from the container");
    terms.emplace_back(std::move(betas), std::move(c));
  }
  return MultiDiffOp(n, ring, p, std::move(terms));
}

ArtinRing ring_from_json(const Json& j) {
  int order;
  std::string param = "h";
  if (j.is_number_integer()) {
    order = j.get<int>();
  } else {
    order = int_field(j, "order", "ring");
    if (j.contains("param")) {
      if (!j["param"].is_string()) throw ParseError("ring: \"param\" must be a string");
      param = j["param"].get<std::string>();
    }
  }
  if (order < 1) throw ParseError("ring: order must be at least 1");
  return ArtinRing(order, param);
}

MCProblem mc_problem_from_json(const Json& j) {
  MCProblem p{ring_from_json(field(j, "ring", "problem")), DiffForm(), MultiVector(), 1};
  p.max_order = int_field(j, "maxOrder", "problem");
  p.H = diffform_from_json(field(j, "H", "problem"), p.ring);
  p.pi1 = multivector_from_json(field(j, "pi1", "problem"), p.ring);
  if (p.H.num_vars() != p.pi1.num_vars()) throw ParseError("problem: H and pi1 have different \"vars\"");
  return p;
}

Json to_json(const MCProblem& p) {
  return {{"ring", to_json(p.ring)}, {"H", to_json(p.H)}, {"pi1", to_json(p.pi1)}, {"maxOrder", p.max_order}};
}

Json to_json(const MCSolveResult& r) {
  return {{"status", r.solved ? "solved" : "obstructed"}, {"order", r.order}, {"pi", to_json(r.pi)}, {"residual", to_json(r.residual)}};
}

}  // namespace gerbeflow
