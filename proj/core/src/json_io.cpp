#include "twistrep/json_io.hpp"

#include <string>

#include "twistrep/errors.hpp"

namespace twistrep::json {

namespace {

// Wraps nlohmann type errors so callers see one error kind for bad input.
template <class F>
auto parse_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

json lambda_to_json(const LambdaTriple& l) {
  return json::array({complex_to_json(l[0]), complex_to_json(l[1]), complex_to_json(l[2])});
}

LambdaTriple lambda_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw DomainError("lambda must be a list of 3 complex numbers");
  return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2])};
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError("complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat3 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw DomainError("matrix must have 3 rows");
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw DomainError("matrix row must have 3 entries");
    for (int c = 0; c < 3; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back(json::array({t.exp[0], t.exp[1], t.exp[2], t.coeff.get_str()}));
  return terms;
}

LaurentPoly poly_from_json(const json& j) {
  return parse_guard("polynomial", [&] {
    if (!j.is_array()) throw DomainError("polynomial must be a list of terms");
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 4) throw DomainError("polynomial term must be [e1, e2, e3, coeff]");
      mpz_class c;
      if (c.set_str(t[3].get<std::string>(), 10) != 0) throw DomainError("bad coefficient");
      terms.push_back({{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()}, c});
    }
    return LaurentPoly::from_terms(std::move(terms));
  });
}

json curve_to_json(const CurveSpec& spec) {
  json terms = json::array();
  for (const auto& t : spec.poly.terms()) terms.push_back(json::array({t.exp[0], t.exp[1], t.coeff.get_str()}));
  return {{"k", spec.k},
          {"variables", {"l1", "l2"}},
          {"terms", std::move(terms)},
          {"degree", {spec.degree[0], spec.degree[1]}}};
}

CurveSpec curve_from_json(const json& j) {
  return parse_guard("curve", [&] {
    CurveSpec spec;
    spec.k = j.at("k").get<int>();
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw DomainError("curve term must be [e1, e2, coeff]");
      mpz_class c;
      if (c.set_str(t[2].get<std::string>(), 10) != 0) throw DomainError("bad coefficient");
      terms.push_back({{t[0].get<int>(), t[1].get<int>(), 0}, c});
    }
    spec.poly = LaurentPoly::from_terms(std::move(terms));
    const auto& d = j.at("degree");
    spec.degree = {d.at(0).get<int>(), d.at(1).get<int>()};
    return spec;
  });
}

json representation_to_json(const RepresentationRecord& r) {
  json j = {{"k", r.k}, {"X", matrix_to_json(r.rep.X)}, {"Y", matrix_to_json(r.rep.Y)}};
  if (r.lambda) j["lambda"] = lambda_to_json(*r.lambda);
  if (r.branch) j["branch"] = *r.branch;
  if (r.sheet) j["sheet"] = *r.sheet;
  return j;
}

RepresentationRecord representation_from_json(const json& j) {
  return parse_guard("representation", [&] {
    if (!j.is_object()) throw DomainError("representation must be an object");
    RepresentationRecord r;
    r.k = j.value("k", 1);
    if (r.k < 1) throw DomainError("representation: k must be >= 1");
    r.rep.X = matrix_from_json(j.at("X"));
    r.rep.Y = matrix_from_json(j.at("Y"));
    if (j.contains("lambda")) r.lambda = lambda_from_json(j["lambda"]);
    if (j.contains("branch")) r.branch = j["branch"].get<int>();
    if (j.contains("sheet")) r.sheet = j["sheet"].get<int>();
    return r;
  });
}

json character_to_json(const CharacterRecord& c) {
  json j = json::object();
  for (std::size_t i = 0; i < c.traces.size(); ++i) j[CharacterRecord::kWords[i]] = complex_to_json(c.traces[i]);
  return j;
}

json residuals_to_json(const ResidualMap& r) {
  json j = json::object();
  for (const auto& [name, v] : r) j[name] = v;
  return j;
}

json sample_run_to_json(const SampleRun& run) {
  json out = json::array();
  for (const auto& p : run.points) {
    json reps = json::array();
    for (const auto& t : p.representations)
      reps.push_back(representation_to_json({run.options.k, t.rep, p.lambda, t.branch, t.sheet}));
    out.push_back({{"lambda", lambda_to_json(p.lambda)},
                   {"representations", std::move(reps)},
                   {"residuals", residuals_to_json(p.residuals)},
                   {"accepted", p.accepted},
                   {"reject_reason", p.reject_reason ? json(*p.reject_reason) : json(nullptr)}});
  }
  return out;
}

std::vector<RepresentationRecord> sample_run_representations(const json& j) {
  return parse_guard("sample run", [&] {
    if (!j.is_array()) throw DomainError("sample run must be an array");
    std::vector<RepresentationRecord> out;
    for (const auto& p : j)
      for (const auto& r : p.at("representations")) out.push_back(representation_from_json(r));
    return out;
  });
}

}  // namespace twistrep::json
