#include "confcoh/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace confcoh {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw SpecError("expected an integer for " + what + ", got '" + s + "'");
}

Rat parse_rat_spec(const std::string& s, const std::string& what) {
  try {
    return parse_rat(s);
  } catch (const std::exception&) {
    throw SpecError("expected a rational for " + what + ", got '" + s + "'");
  }
}

RatPoly poly_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return RatPoly(Rat(j.get<long>()));
  if (!j.is_string()) throw SpecError(where + ": expected a polynomial string");
  try {
    return parse_poly(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), e.line(), e.column());
  }
}

// Only lam1 and d may appear in structure polynomials.
void check_table_vars(const RatPoly& p, const std::string& where) {
  for (VarId v : p.variables())
    if (v != VarId::lam(1) && v != VarId::del())
      throw SpecError(where + ": structure polynomials may only use lam and d, found " + v.to_string());
}

int index_in(const std::vector<std::string>& names, const Json& j, const std::string& where) {
  if (!j.is_string()) throw SpecError(where + ": expected a name");
  const auto it = std::find(names.begin(), names.end(), j.get<std::string>());
  if (it == names.end()) throw SpecError(where + ": unknown name '" + j.get<std::string>() + "'");
  return static_cast<int>(it - names.begin());
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::vector<std::string> name_list(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SpecError(where + ": expected a non-empty list of names");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw SpecError(where + ": expected a name");
    out.push_back(x.get<std::string>());
  }
  return out;
}

// {name: poly} into a vector indexed by `names`.
std::vector<RatPoly> value_map(const Json& j, const std::vector<std::string>& names, const std::string& where) {
  std::vector<RatPoly> out(names.size());
  if (!j.is_object()) {
    if (names.size() != 1) throw SpecError(where + ": expected an object {basis name: polynomial}");
    out[0] = poly_field(j, where);
    return out;
  }
  for (const auto& [k, v] : j.items()) out[static_cast<std::size_t>(index_in(names, Json(k), where))] = poly_field(v, where + "." + k);
  return out;
}

Json value_json(const std::vector<RatPoly>& v, const std::vector<std::string>& names) {
  Json out = Json::object();
  for (std::size_t r = 0; r < v.size(); ++r)
    if (!v[r].is_zero()) out[names[r]] = v[r].to_string();
  return out;
}

std::string kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Lie: return "lie";
    case AlgebraKind::Associative: return "associative";
    case AlgebraKind::Leibniz: return "leibniz";
  }
  return "lie";
}

}  // namespace

LiePresentation lie_from_name(const std::string& name) {
  if (name == "sl2") return LiePresentation::sl2();
  if (name == "sl3") return LiePresentation::sl3();
  if (name.rfind("abelian:", 0) == 0) {
    const int n = parse_int(name.substr(8), "abelian dimension");
    if (n < 1) throw SpecError("abelian dimension must be positive");
    return LiePresentation::abelian(n);
  }
  throw SpecError("unknown Lie algebra '" + name + "' (expected sl2, sl3 or abelian:<n>)");
}

ConformalAlgebra algebra_from_name(const std::string& name) {
  if (name == "vir") return build_vir();
  if (name == "cur:dual") return build_dual_numbers_current();
  if (name == "leibniz") return build_leibniz_fixture();
  if (name.rfind("cur:", 0) == 0) return build_current(lie_from_name(name.substr(4)));
  throw SpecError("unknown algebra '" + name + "' (expected vir, cur:<lie>, cur:dual or leibniz)");
}

LieRep rep_from_name(const LiePresentation& g, const std::string& name) {
  if (name == "adjoint") return adjoint_rep(g);
  if (name == "trivial") return trivial_rep(g, 1);
  if (g.name() == "sl2" && name.size() > 1 && name[0] == 'V') {
    const int m = parse_int(name.substr(1), "sl2 highest weight");
    if (m < 0) throw SpecError("sl2 highest weight must be non-negative");
    return sl2_irrep(m);
  }
  if (g.name() == "sl3" && name == "standard") return sl3_standard();
  if (g.name() == "sl3" && name.rfind("sym", 0) == 0) {
    const int k = parse_int(name.substr(3), "symmetric power");
    if (k < 0) throw SpecError("symmetric power must be non-negative");
    return sym_power(sl3_standard(), k);
  }
  throw SpecError("unknown representation '" + name + "' of " + g.name());
}

ConformalModule module_from_name(const std::string& name, const std::string& algebra_name,
                                 const ConformalAlgebra& A) {
  if (name == "trivial") return build_trivial(1, 0);
  if (name == "adjoint") return build_adjoint(A);
  if (name.rfind("ca:", 0) == 0) return build_trivial(1, parse_rat_spec(name.substr(3), "ca:<a>"));
  if (name.rfind("mda:", 0) == 0) {
    const auto parts = split(name.substr(4), ',');
    if (parts.size() != 2) throw SpecError("expected mda:<delta>,<alpha>, got '" + name + "'");
    return build_m_delta_alpha(parse_rat_spec(parts[0], "delta"), parse_rat_spec(parts[1], "alpha"));
  }
  if (name.rfind("mu:", 0) == 0) {
    if (algebra_name.rfind("cur:", 0) != 0 || algebra_name == "cur:dual")
      throw SpecError("mu:<rep> needs a current algebra cur:<lie>, not '" + algebra_name + "'");
    const LiePresentation g = lie_from_name(algebra_name.substr(4));
    return build_m_u(g, rep_from_name(g, name.substr(3)));
  }
  throw SpecError("unknown module '" + name + "' (expected trivial, ca:<a>, mda:<d>,<a>, adjoint or mu:<rep>)");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1;
    int column = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(e.what(), line, column);
  }
}

ConformalAlgebra algebra_from_json(const Json& j) {
  const std::string where = "algebra";
  const auto gens = name_list(field(j, "generators", where), where + ".generators");
  const std::size_t n = gens.size();
  std::vector<std::vector<AlgValue>> table(n, std::vector<AlgValue>(n, AlgValue(n)));
  if (j.contains("brackets")) {
    const Json& br = j.at("brackets");
    if (!br.is_array()) throw SpecError(where + ".brackets: expected a list");
    for (std::size_t e = 0; e < br.size(); ++e) {
      const std::string w = where + ".brackets[" + std::to_string(e) + "]";
      const Json& pair = field(br[e], "pair", w);
      if (!pair.is_array() || pair.size() != 2) throw SpecError(w + ".pair: expected two generator names");
      const int a = index_in(gens, pair[0], w + ".pair");
      const int b = index_in(gens, pair[1], w + ".pair");
      table[a][b] = value_map(field(br[e], "value", w), gens, w + ".value");
      for (const auto& p : table[a][b]) check_table_vars(p, w);
    }
  }
  AlgebraKind kind = AlgebraKind::Lie;
  if (j.contains("kind")) {
    const std::string k = j.at("kind").get<std::string>();
    if (k == "associative")
      kind = AlgebraKind::Associative;
    else if (k == "leibniz")
      kind = AlgebraKind::Leibniz;
    else if (k != "lie")
      throw SpecError(where + ".kind: expected lie, associative or leibniz");
  }
  return ConformalAlgebra(j.value("name", std::string("inline")), gens, std::move(table), kind);
}

Json algebra_to_json(const ConformalAlgebra& A) {
  Json out;
  out["name"] = A.name();
  out["kind"] = kind_name(A.kind());
  out["generators"] = A.gens();
  Json br = Json::array();
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      if (!is_zero(A.entry(a, b))) br.push_back({{"pair", {A.gens()[a], A.gens()[b]}}, {"value", value_json(A.entry(a, b), A.gens())}});
  out["brackets"] = br;
  return out;
}

ConformalModule module_from_json(const Json& j, const ConformalAlgebra& A) {
  const std::string where = "module";
  const std::string kind = j.value("kind", std::string("free"));
  const std::string name = j.value("name", std::string("inline"));
  if (kind == "scalar") {
    const int dim = j.value("dim", 1);
    if (dim < 1) throw SpecError(where + ".dim must be positive");
    Rat a = 0;
    if (j.contains("del")) {
      const RatPoly p = poly_field(j.at("del"), where + ".del");
      if (!p.is_constant()) throw SpecError(where + ".del must be a constant");
      a = p.constant_term();
    }
    return ConformalModule::scalar(name, dim, a);
  }
  if (kind != "free") throw SpecError(where + ".kind: expected free or scalar");
  const auto basis = name_list(field(j, "basis", where), where + ".basis");
  const std::size_t n = basis.size();
  std::vector<PolyMatrix> action(static_cast<std::size_t>(A.size()), PolyMatrix(n, std::vector<RatPoly>(n)));
  if (j.contains("action")) {
    const Json& act = j.at("action");
    if (!act.is_array()) throw SpecError(where + ".action: expected a list");
    for (std::size_t e = 0; e < act.size(); ++e) {
      const std::string w = where + ".action[" + std::to_string(e) + "]";
      const int g = index_in(A.gens(), field(act[e], "generator", w), w + ".generator");
      const int c = index_in(basis, field(act[e], "on", w), w + ".on");
      const auto col = value_map(field(act[e], "value", w), basis, w + ".value");
      for (std::size_t r = 0; r < n; ++r) {
        check_table_vars(col[r], w);
        action[static_cast<std::size_t>(g)][r][static_cast<std::size_t>(c)] = col[r];
      }
    }
  }
  return ConformalModule::free(name, basis, std::move(action));
}

Json module_to_json(const ConformalModule& M, const ConformalAlgebra& A) {
  Json out;
  out["name"] = M.name();
  if (!M.is_free()) {
    out["kind"] = "scalar";
    out["dim"] = M.dim();
    out["del"] = to_string(M.del_scalar());
    return out;
  }
  out["kind"] = "free";
  out["basis"] = M.basis();
  Json act = Json::array();
  for (int g = 0; g < M.action_count(); ++g)
    for (int c = 0; c < M.dim(); ++c) {
      ModValue col(static_cast<std::size_t>(M.dim()));
      for (int r = 0; r < M.dim(); ++r) col[r] = M.action(g)[r][c];
      if (!is_zero(col)) act.push_back({{"generator", A.gens()[static_cast<std::size_t>(g)]}, {"on", M.basis()[c]}, {"value", value_json(col, M.basis())}});
    }
  out["action"] = act;
  return out;
}

Cochain cochain_from_json(const Json& j, const std::vector<std::string>& gens, const std::vector<std::string>& basis) {
  const std::string where = "cochain";
  Variant v;
  try {
    v = parse_variant(field(j, "variant", where).get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecError(where + ".variant: " + e.what());
  }
  const Json& qj = field(j, "q", where);
  if (!qj.is_number_integer() || qj.get<int>() < 0) throw SpecError(where + ".q: expected a non-negative integer");
  const int q = qj.get<int>();
  Cochain g(v, q, static_cast<int>(basis.size()));
  const Json& vals = field(j, "values", where);
  if (!vals.is_array()) throw SpecError(where + ".values: expected a list");
  for (std::size_t e = 0; e < vals.size(); ++e) {
    const std::string w = where + ".values[" + std::to_string(e) + "]";
    const Json& args = field(vals[e], "args", w);
    if (!args.is_array() || static_cast<int>(args.size()) != g.arity())
      throw SpecError(w + ".args: expected " + std::to_string(g.arity()) + " generator names");
    Tuple t;
    for (const auto& a : args) t.push_back(index_in(gens, a, w + ".args"));
    const ModValue val = value_map(field(vals[e], "value", w), basis, w + ".value");
    for (const auto& p : val)
      for (VarId x : p.variables())
        if (x.is_lam() && x.index() > g.arity()) throw SpecError(w + ": " + x.to_string() + " exceeds the arity");
    g.add(t, val);
  }
  g.prune();
  return g;
}

Json cochain_to_json(const Cochain& g, const std::vector<std::string>& gens, const std::vector<std::string>& basis) {
  Json out;
  out["variant"] = variant_name(g.variant);
  out["q"] = g.q;
  Json vals = Json::array();
  for (const auto& [t, v] : g.values) {
    if (is_zero(v)) continue;
    Json args = Json::array();
    for (int x : t) args.push_back(gens[static_cast<std::size_t>(x)]);
    vals.push_back({{"args", args}, {"value", value_json(v, basis)}});
  }
  out["values"] = vals;
  return out;
}

ConformalAlgebra algebra_from_spec(const Json& j) {
  if (j.is_string()) return algebra_from_name(j.get<std::string>());
  return algebra_from_json(j);
}

ConformalModule module_from_spec(const Json& j, const ConformalAlgebra& A, const std::string& algebra_name) {
  if (j.is_string()) return module_from_name(j.get<std::string>(), algebra_name, A);
  return module_from_json(j, A);
}

}  // namespace confcoh
