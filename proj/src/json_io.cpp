#include "enriques/json_io.hpp"

#include <limits>

#include "enriques/errors.hpp"

namespace enriques::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  return j;
}

Int parse_int(const std::string& s) {
  std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw InvalidInput("malformed integer \"" + s + "\"");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw InvalidInput("malformed integer \"" + s + "\"");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x));
  return Json(x.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long long>()) : Int(j.get<long long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& x) {
  const Int num = numerator(x), den = denominator(x);
  return Json(den == 1 ? num.str() : num.str() + "/" + den.str());
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) return Rational(int_from_json(j));
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  const Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in \"" + s + "\"");
  return Rational(parse_int(s.substr(0, slash)), den);
}

Json vec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

IntVec vec_from_json(const Json& j) {
  IntVec v;
  for (const auto& x : array(j, "vector")) v.push_back(int_from_json(x));
  return v;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  std::vector<IntVec> rows;
  for (const auto& r : array(j, "matrix")) rows.push_back(vec_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InvalidInput("matrix rows have different lengths");
  return IntMatrix::from_rows(rows, cols);
}

Json f2_to_json(Word w, int dim) {
  Json out = Json::array();
  for (int i = 0; i < dim; ++i) out.push_back((w >> i) & 1);
  return out;
}

Word f2_from_json(const Json& j, int dim) {
  array(j, "F2 vector");
  if (static_cast<int>(j.size()) != dim)
    throw InvalidInput("F2 vector must have " + std::to_string(dim) + " entries");
  Word w = 0;
  for (int i = 0; i < dim; ++i) {
    const Json& x = j[i];
    if (!x.is_number_integer() || (x.get<long long>() != 0 && x.get<long long>() != 1))
      throw InvalidInput("F2 vector entries must be 0 or 1");
    if (x.get<long long>() == 1) w |= Word(1) << i;
  }
  return w;
}

Json lattice_to_json(const Lattice& l) {
  Json out;
  out["gram"] = matrix_to_json(l.gram());
  if (l.scale() != 1) out["scale"] = rational_to_json(l.scale());
  return out;
}

Lattice lattice_from_json(const Json& j) {
  IntMatrix g = matrix_from_json(field(j, "gram"));
  if (!g.is_symmetric()) throw InvalidInput("gram matrix must be square and symmetric");
  Rational scale = j.contains("scale") ? rational_from_json(j.at("scale")) : Rational(1);
  if (scale == 0) throw InvalidInput("scale must be nonzero");
  return Lattice(std::move(g), scale);
}

Json glued_input_to_json(const GluedK3Input& in) {
  Json out;
  out["gram_minus"] = matrix_to_json(in.gram_minus);
  Json glue = Json::array();
  for (const auto& g : in.glue) {
    Json m = Json::array();
    for (const auto& x : g.minus) m.push_back(rational_to_json(x));
    Json entry;
    entry["minus"] = std::move(m);
    entry["plus"] = f2_to_json(g.plus, e10::kRank);
    glue.push_back(std::move(entry));
  }
  out["glue"] = std::move(glue);
  return out;
}

GluedK3Input glued_input_from_json(const Json& j) {
  GluedK3Input in;
  in.gram_minus = matrix_from_json(field(j, "gram_minus"));
  if (!in.gram_minus.is_symmetric()) throw InvalidInput("gram_minus must be square and symmetric");
  if (j.contains("glue")) {
    for (const auto& g : array(j.at("glue"), "glue")) {
      GlueClass c;
      for (const auto& x : array(field(g, "minus"), "minus")) c.minus.push_back(rational_from_json(x));
      if (c.minus.size() != in.gram_minus.rows()) throw InvalidInput("glue minus class has wrong length");
      c.plus = f2_from_json(field(g, "plus"), e10::kRank);
      in.glue.push_back(std::move(c));
    }
  }
  return in;
}

Json invariant_to_json(const RootInvariant& inv) {
  Json comps = Json::array();
  for (const auto& c : inv.components) {
    Json entry;
    entry["type"] = c.type.ade.str();
    entry["kernel"] = c.type.kernel;
    if (!c.sigma.empty()) {
      Json s = Json::array();
      for (Word w : c.sigma) s.push_back(f2_to_json(w, e10::kRank));
      entry["sigma"] = std::move(s);
    }
    comps.push_back(std::move(entry));
  }
  Json out;
  out["components"] = std::move(comps);
  return out;
}

RootInvariant invariant_from_json(const Json& j) {
  RootInvariant inv;
  for (const auto& c : array(field(j, "components"), "components")) {
    InvariantComponent comp;
    const Json& t = field(c, "type");
    if (!t.is_string()) throw InvalidInput("component type must be a string");
    comp.type.ade = ADEType::parse(t.get<std::string>());
    const Json& k = c.contains("kernel") ? c.at("kernel") : Json(0);
    if (!k.is_number_integer() || (k != 0 && k != 1)) throw InvalidInput("kernel must be 0 or 1");
    comp.type.kernel = k.get<int>();
    if (c.contains("sigma")) {
      for (const auto& w : array(c.at("sigma"), "sigma")) comp.sigma.push_back(f2_from_json(w, e10::kRank));
      std::sort(comp.sigma.begin(), comp.sigma.end());
      if (std::adjacent_find(comp.sigma.begin(), comp.sigma.end()) != comp.sigma.end())
        throw InvalidInput("sigma contains a repeated vertex");
    }
    inv.components.push_back(std::move(comp));
  }
  return inv;
}

Json vinberg_to_json(const VinbergGroupSpec& spec) {
  Json gens = Json::array();
  for (const auto& g : spec.extra_generators) {
    Json rows = Json::array();
    for (Word w : g.images) rows.push_back(f2_to_json(w, g.dim));
    gens.push_back(std::move(rows));
  }
  Json out;
  out["extra_generators"] = std::move(gens);
  return out;
}

VinbergGroupSpec vinberg_from_json(const Json& j) {
  VinbergGroupSpec spec;
  if (!j.is_object() || !j.contains("extra_generators")) return spec;
  for (const auto& g : array(j.at("extra_generators"), "extra_generators")) {
    array(g, "generator");
    if (g.size() != static_cast<std::size_t>(e10::kRank)) throw InvalidInput("generator must have 10 rows");
    IsometryF2 iso{e10::kRank, {}};
    for (const auto& r : g) iso.images.push_back(f2_from_json(r, e10::kRank));
    spec.extra_generators.push_back(std::move(iso));
  }
  return spec;
}

Json normal_form_to_json(const NormalFormF2& nf) {
  Json out;
  out["normal_form"] = nf.str();
  out["u"] = nf.u;
  out["v"] = nf.v;
  out["e"] = nf.e;
  out["k"] = nf.k;
  return out;
}

Json quad_space_to_json(const QuadSpaceF2& V) {
  Json b = Json::array();
  for (int i = 0; i < V.dim(); ++i) b.push_back(f2_to_json(V.bilinear_rows()[i], V.dim()));
  Json out;
  out["b"] = std::move(b);
  out["q"] = f2_to_json(V.qdiag(), V.dim());
  return out;
}

QuadSpaceF2 quad_space_from_json(const Json& j) {
  if (j.is_object() && j.contains("gram")) {
    IntMatrix g = matrix_from_json(j.at("gram"));
    if (!g.is_symmetric()) throw InvalidInput("gram matrix must be square and symmetric");
    if (static_cast<int>(g.rows()) > kMaxF2Dim) throw InvalidInput("dimension too large");
    return QuadSpaceF2::from_even_gram(g);
  }
  const Json& b = array(field(j, "b"), "b");
  const int dim = static_cast<int>(b.size());
  if (dim > kMaxF2Dim) throw InvalidInput("dimension too large");
  std::vector<Word> rows;
  for (const auto& r : b) rows.push_back(f2_from_json(r, dim));
  const Word q = f2_from_json(field(j, "q"), dim);
  for (int i = 0; i < dim; ++i) {
    if ((rows[i] >> i) & 1) throw InvalidInput("bilinear form must be alternating");
    for (int k = 0; k < dim; ++k)
      if (((rows[i] >> k) & 1) != ((rows[k] >> i) & 1)) throw InvalidInput("bilinear form must be symmetric");
  }
  return QuadSpaceF2(dim, std::move(rows), q);
}

}  // namespace enriques::json_io
