#include "hcoh/serialize.hpp"

namespace hcoh::io {

json scalar_to_json(const Field& f, Elem a) { return f.coeffs(a); }

Elem scalar_from_json(const Field& f, const json& j) {
  try {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (!j.is_array()) throw Error(Errc::parse_error, "scalar must be an integer array");
    std::vector<int> c = j.get<std::vector<int>>();
    return f.from_coeffs(c);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad scalar: ") + e.what());
  }
}

json element_to_json(const Field& f, const AlgebraElement& x) {
  json out = json::array();
  for (Elem c : x.coords) out.push_back(scalar_to_json(f, c));
  return out;
}

AlgebraElement element_from_json(const Heisenberg& h, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != h.dim())
    throw Error(Errc::parse_error, "algebra element must be an array of " + std::to_string(h.dim()) + " scalars");
  AlgebraElement x = h.zero();
  for (size_t i = 0; i < j.size(); ++i) x.coords[i] = scalar_from_json(h.field(), j[i]);
  return x;
}

json cochain_to_json(const Heisenberg& h, const Cochain& c) {
  const CochainSpace s(h.dim(), c.degree);
  if (c.coords.size() != s.dim()) throw Error(Errc::dimension_mismatch, "cochain length mismatch");
  json out = json::array();
  for (size_t pos = 0; pos < c.coords.size(); ++pos) {
    if (c.coords[pos] == 0) continue;
    const auto ix = s.index(pos);
    out.push_back(json::array({ix.upper, ix.lower, scalar_to_json(h.field(), c.coords[pos])}));
  }
  return out;
}

Cochain cochain_from_json(const Heisenberg& h, int degree, const json& j) {
  const CochainSpace s(h.dim(), degree);
  Cochain c{degree, Vec(s.dim(), 0)};
  if (!j.is_array()) throw Error(Errc::parse_error, "cochain must be a list of [upper, lower, scalar] triples");
  try {
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 3) throw Error(Errc::parse_error, "cochain term must be [upper, lower, scalar]");
      auto upper = t[0].get<std::vector<int>>();
      const int lower = t[1].get<int>();
      if (static_cast<int>(upper.size()) != degree) throw Error(Errc::parse_error, "wrong number of upper indices");
      for (int i : upper) h.conjugate_sign(i);
      h.conjugate_sign(lower);
      s.accumulate(h.field(), c.coords, std::move(upper), lower, scalar_from_json(h.field(), t[2]));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad cochain: ") + e.what());
  }
  return c;
}

json pair_to_json(const Heisenberg& h, const CompatiblePair& pair) {
  json omega = json::array();
  for (const auto& v : pair.omega) omega.push_back(element_to_json(h.field(), v));
  return {{"phi", cochain_to_json(h, pair.phi)}, {"omega", omega}};
}

CompatiblePair pair_from_json(const Heisenberg& h, const json& j) {
  if (!j.is_object() || !j.contains("phi") || !j.contains("omega"))
    throw Error(Errc::parse_error, "pair must be an object with \"phi\" and \"omega\"");
  CompatiblePair pair{cochain_from_json(h, 2, j["phi"]), {}};
  const auto& om = j["omega"];
  if (!om.is_array() || static_cast<int>(om.size()) != h.dim())
    throw Error(Errc::parse_error, "omega must list " + std::to_string(h.dim()) + " algebra elements");
  for (const auto& v : om) pair.omega.push_back(element_from_json(h, v));
  return pair;
}

json verdict_to_json(const Verdict& v) {
  json out{{"space", to_string(v.space)},
           {"predicted_dim", v.predicted_dim ? json(*v.predicted_dim) : json(nullptr)},
           {"computed_dim", v.computed_dim},
           {"pass", v.pass},
           {"diagnostics", v.diagnostics}};
  if (!v.covered) out["covered"] = false;
  return out;
}

json deformation_to_json(const DualDeformation& d) {
  const Heisenberg& h = d.base();
  const Field& f = h.field();
  const int n = h.dim();
  json br = json::array(), pm = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const Dual c = d.bracket_coeff(i, j, k);
        if (c.c0 || c.c1) br.push_back({i, j, k, scalar_to_json(f, c.c0), scalar_to_json(f, c.c1)});
      }
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      const Dual c = d.pmap_coeff(i, k);
      if (c.c0 || c.c1) pm.push_back({i, k, scalar_to_json(f, c.c0), scalar_to_json(f, c.c1)});
    }
  return {{"bracket", br}, {"pmap", pm}};
}

json axioms_to_json(const AxiomReport& r) {
  json out{{"bracket", r.bracket_ok}, {"ad", r.ad_ok}, {"semilinear", r.semilinear_ok}, {"pass", r.ok()},
           {"witnesses", r.witnesses}};
  out["jacobson"] = r.jacobson_checked ? json(r.jacobson_ok) : json("not checked");
  return out;
}

}  // namespace hcoh::io
