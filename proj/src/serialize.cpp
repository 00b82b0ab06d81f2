#include "salemkit/serialize.hpp"

#include <cstdint>

#include "salemkit/error.hpp"

namespace salemkit::serialize {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw_input(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

}  // namespace

Json integer_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) && sizeof(long) >= sizeof(std::int64_t)) return Json(v.get_si());
  return Json(v.get_str());
}

Json rational_json(const Rational& v) { return Json(v.get_str()); }

Json poly_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.descending()) a.push_back(integer_json(c));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json interval_json(const RatInterval& iv) { return Json{{"lo", rational_json(iv.lo)}, {"hi", rational_json(iv.hi)}}; }

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Integer v;
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos ||
        v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) {
      throw_input("not an integer: \"" + s + "\"");
    }
    return v;
  }
  throw_input("expected an integer, got " + j.dump());
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from(j));
  if (!j.is_string()) throw_input("expected a rational string, got " + j.dump());
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer_from(Json(s)));
  const Integer num = integer_from(Json(s.substr(0, slash)));
  const Integer den = integer_from(Json(s.substr(slash + 1)));
  if (den == 0) throw_input("zero denominator in \"" + s + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

IntPoly poly_from(const Json& j) {
  if (!j.is_array() || j.empty()) throw_input("expected a nonempty coefficient array");
  std::vector<Integer> desc;
  for (const auto& c : j) desc.push_back(integer_from(c));
  return IntPoly::from_descending(desc);
}

IntMatrix matrix_from(const Json& j) {
  if (!j.is_array() || j.empty()) throw_input("expected a nonempty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw_input("matrix rows must be arrays");
    std::vector<Integer> row;
    for (const auto& c : r) row.push_back(integer_from(c));
    if (!rows.empty() && row.size() != rows.front().size()) throw_input("matrix rows differ in length");
    rows.push_back(std::move(row));
  }
  if (rows.front().empty()) throw_input("matrix rows are empty");
  return IntMatrix::from_rows(rows);
}

RatInterval interval_from(const Json& j) {
  RatInterval iv{rational_from(field(j, "lo")), rational_from(field(j, "hi"))};
  if (iv.lo > iv.hi) throw_input("interval with lo > hi");
  return iv;
}

Json witness_json(const torus::TorusWitness& w) {
  Json j;
  j["schema"] = kWitnessSchema;
  j["case"] = torus::to_string(w.kind);
  j["S"] = poly_json(w.s);
  j["C"] = poly_json(w.cofactor);
  j["Q"] = poly_json(w.q);
  j["m"] = integer_json(w.m);
  j["n"] = integer_json(w.n);
  j["j"] = integer_json(w.j);
  j["k"] = integer_json(w.k);
  j["P"] = poly_json(w.p);
  j["F1"] = matrix_json(w.f1);
  j["F2"] = matrix_json(w.f2);
  j["wedge_basis"] = torus::kWedgeBasisName;
  j["lambda"] = interval_json(w.lambda);
  return j;
}

torus::TorusWitness witness_from(const Json& j) {
  if (!j.is_object()) throw_input("witness document must be an object");
  if (j.contains("schema") && j.at("schema") != kWitnessSchema) throw_input("unsupported witness schema");
  if (j.contains("wedge_basis") && j.at("wedge_basis") != torus::kWedgeBasisName) {
    throw_input("unsupported wedge basis order");
  }
  const Json& kind = field(j, "case");
  if (!kind.is_string()) throw_input("case must be a string");
  const auto c = torus::case_from_string(kind.get<std::string>());
  if (!c) throw_input("unknown case tag " + kind.dump());
  torus::TorusWitness w;
  w.kind = *c;
  w.s = poly_from(field(j, "S"));
  w.cofactor = poly_from(field(j, "C"));
  w.q = poly_from(field(j, "Q"));
  w.m = integer_from(field(j, "m"));
  w.n = integer_from(field(j, "n"));
  w.j = integer_from(field(j, "j"));
  w.k = integer_from(field(j, "k"));
  w.p = poly_from(field(j, "P"));
  w.f1 = matrix_from(field(j, "F1"));
  w.f2 = matrix_from(field(j, "F2"));
  w.lambda = interval_from(field(j, "lambda"));
  return w;
}

Json isometry_json(const IsometryFile& f) {
  Json j;
  if (f.name) j["name"] = *f.name;
  j["gram"] = matrix_json(f.gram.matrix());
  j["matrix"] = matrix_json(f.matrix);
  return j;
}

IsometryFile isometry_from(const Json& j) {
  if (!j.is_object()) throw_input("isometry document must be an object");
  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw_input("name must be a string");
    name = j.at("name").get<std::string>();
  }
  lattice::Gram g(matrix_from(field(j, "gram")));
  IntMatrix m = matrix_from(field(j, "matrix"));
  if (m.rows() != g.rank() || m.cols() != g.rank()) throw_input("gram and matrix sizes differ");
  return {std::move(name), std::move(g), std::move(m)};
}

Json locations_json(const RootLocationReport& r) {
  return Json{{"real_gt_1", r.n_real_gt1},         {"real_0_1", r.n_real_0_1},
              {"real_lt_minus_1", r.n_real_lt_minus1}, {"real_minus_1_0", r.n_real_minus1_0},
              {"on_circle", r.n_on_circle},        {"complex_off_circle", r.n_complex_off_circle},
              {"at_one", r.at_one},                {"at_minus_one", r.at_minus_one}};
}

Json classification_json(const salem::SalemClassification& c) {
  Json j;
  j["polynomial"] = poly_json(c.input);
  j["text"] = to_string(c.input);
  j["degree"] = c.degree;
  j["is_salem"] = c.is_salem;
  j["reason"] = salem::to_string(c.reason);
  j["monic"] = c.monic;
  j["reciprocal"] = c.reciprocal;
  Json cyc = Json::array();
  for (const auto& f : c.cyclotomic_factors) cyc.push_back(Json{{"n", f.n}, {"multiplicity", f.multiplicity}});
  j["cyclotomic_factors"] = cyc;
  j["core"] = poly_json(c.core);
  if (c.monic && c.reciprocal && c.degree > 0) j["locations"] = locations_json(c.locations);
  if (c.lambda) j["lambda"] = interval_json(*c.lambda);
  return j;
}

Json verify_json(const torus::VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return Json{{"all_passed", r.all_passed()}, {"checks", checks}};
}

Json eigenspaces_json(const lattice::EigenspaceReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"tau", e.tau},
                           {"tau_bracket", interval_json(e.tau_bracket)},
                           {"multiplicity", e.multiplicity},
                           {"dimension", e.dimension},
                           {"signature", Json::array({e.pos, e.neg})},
                           {"determinate", e.determinate},
                           {"margin", e.margin},
                           {"residual", e.residual}});
  }
  return Json{{"tol", r.tol}, {"excluded_rank", r.excluded_rank}, {"entries", entries}};
}

Json mechanics_json(const k3::MechanicsReport& r) {
  return Json{{"salem_factor", poly_json(r.salem_factor)},
              {"lambda", interval_json(r.lambda)},
              {"ambient_signature", Json::array({r.ambient_signature.pos, r.ambient_signature.neg})},
              {"extension_is_isometry", r.extension_is_isometry},
              {"charpoly_extends", r.charpoly_extends},
              {"tau_signature_2_0", r.tau_signature_20},
              {"unique_tau_2_0", r.unique_tau_20},
              {"e8_in_fixed_lattice", r.e8_in_fixed_lattice},
              {"eigenspaces", eigenspaces_json(r.eigenspaces)},
              {"all_passed", r.all_passed()}};
}

Json k3_json(const k3::K3Report& r) {
  Json gm = Json::array();
  for (const auto& c : r.gm) gm.push_back(Json{{"p", c.p}, {"q", c.q}, {"holds", c.holds}});
  Json j{{"degree", r.degree},
         {"verdict", k3::to_string(r.verdict)},
         {"S(1)", integer_json(r.s_at_one)},
         {"S(-1)", integer_json(r.s_at_minus_one)},
         {"necessary",
          Json{{"abs_S(-1)_square", r.necessary.abs_s_minus_one},
               {"abs_S(1)_square", r.necessary.abs_s_one},
               {"minus_product_square", r.necessary.minus_product}}},
         {"product_is_minus_one", r.product_is_minus_one},
         {"gm", gm},
         {"gm_applicable", r.gm_applicable()},
         {"notes", strings(r.notes)}};
  if (r.kummer_witness) j["kummer_witness"] = witness_json(*r.kummer_witness);
  return j;
}

Json decision_json(const torus::TorusDecision& d) {
  Json j{{"degree", d.degree}, {"realizable", d.realizable}, {"reason", d.reason}};
  if (d.degree == 6 || d.witness) {
    Json sq{{"Q(1)", integer_json(d.square.q_at_one)},
            {"Q(-1)", integer_json(d.square.q_at_minus_one)},
            {"holds", d.square.holds}};
    if (d.square.holds) {
      sq["m"] = integer_json(d.square.m);
      sq["n"] = integer_json(d.square.n);
    }
    j["square_property"] = sq;
  }
  if (d.degree == 4) {
    j["cases"] = Json{{"a", d.cases.a}, {"b", d.cases.b}, {"c", d.cases.c}};
    Json hits = Json::array();
    const auto& cof = torus::quartic_cofactors();
    for (std::size_t i = 0; i < cof.size(); ++i)
      hits.push_back(Json{{"C", poly_json(cof[i])}, {"square_property", d.cofactor_hits[i]}});
    j["cofactors"] = hits;
  }
  if (d.witness) j["witness"] = witness_json(*d.witness);
  return j;
}

}  // namespace salemkit::serialize
