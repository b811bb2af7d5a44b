#pragma once

// JSON encodings of points, certificates and reports. Rationals are strings
// "n/d"; Gaussian rationals are {"re": ..., "im": ...}.

#include <chrono>
#include <ctime>
#include <fstream>
#include <string>

#include <json.hpp>

#include "quintic/certificate.hpp"
#include "quintic/elliptic.hpp"
#include "quintic/identities.hpp"
#include "quintic/quadform.hpp"

namespace quintic {

using Json = nlohmann::ordered_json;

template <class K>
struct FieldTag;
template <>
struct FieldTag<Rational> {
  static constexpr const char* name = "Q";
};
template <>
struct FieldTag<GaussianRational> {
  static constexpr const char* name = "Qi";
};

inline Json to_json(const Rational& q) { return q.to_string(); }
inline Json to_json(const Integer& n) { return n.get_str(); }
inline Json to_json(const GaussianRational& z) { return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  throw Error(Errc::ParseError, "expected a rational string, got " + j.dump());
}

inline GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_object()) return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
  return GaussianRational(rational_from_json(j));
}

template <class K>
Json point_to_json(const Point4<K>& P) {
  return Json{{"field", FieldTag<K>::name}, {"p", to_json(P.p)}, {"q", to_json(P.q)}, {"r", to_json(P.r)},
              {"s", to_json(P.s)}};
}

inline bool point_is_gaussian(const Json& j) { return j.value("field", "Q") == "Qi"; }

inline Point4<Rational> rational_point_from_json(const Json& j) {
  if (point_is_gaussian(j)) throw Error(Errc::ParseError, "expected a point over Q");
  return {rational_from_json(j.at("p")), rational_from_json(j.at("q")), rational_from_json(j.at("r")),
          rational_from_json(j.at("s"))};
}

inline Point4<GaussianRational> gaussian_point_from_json(const Json& j) {
  return {gaussian_from_json(j.at("p")), gaussian_from_json(j.at("q")), gaussian_from_json(j.at("r")),
          gaussian_from_json(j.at("s"))};
}

inline Json triviality_to_json(const TrivialityReport& t) {
  return Json{{"on_hypersurface", t.on_hypersurface},
              {"coordinate_overlap", t.coordinate_overlap},
              {"value_overlap", t.value_overlap}};
}

template <class K>
Json certificate_to_json(const Certificate<K>& c) {
  Json in = Json::object();
  for (auto& [k, v] : c.inputs) in[k] = v;
  return Json{{"construction", c.construction},
              {"inputs", in},
              {"point", point_to_json(c.point)},
              {"residual", FieldTraits<K>::to_string(c.residual)},
              {"nontrivial", c.triviality.nontrivial},
              {"triviality", triviality_to_json(c.triviality)},
              {"notes", c.notes}};
}

inline Json coeffs_to_json(const QuinticCoeffs& f) {
  return Json{{"a", f.a.get_str()}, {"b", f.b.get_str()}, {"c", f.c.get_str()}};
}

inline Json form_report_to_json(const FormReport& r) {
  const auto& n = r.normalization;
  Json odd = Json::array();
  for (auto& c : r.jones.odd_primes) {
    Json e{{"p", c.p.get_str()}, {"applies", c.applies}, {"ok", c.ok}};
    odd.push_back(e);
  }
  Json raw = Json::array(), form = Json::array(), scale = Json::array();
  for (int i = 0; i < 4; ++i) {
    raw.push_back(n.raw.a[i].get_str());
    form.push_back(n.form.a[i].get_str());
    scale.push_back(n.scale[i].get_str());
  }
  Json witness = nullptr;
  if (r.witness) {
    witness = Json::array();
    for (auto& x : *r.witness) witness.push_back(x.get_str());
  }
  return Json{{"form", raw},
              {"normalized", Json{{"coefficients", form}, {"scale", scale},
                                  {"multiplier", n.multiplier.to_string()}, {"trace", n.trace}}},
              {"conditions", Json{{"signs", r.jones.signs},
                                  {"odd_primes", odd},
                                  {"two_adic", Json{{"applies", r.jones.two_adic_applies}, {"ok", r.jones.two_adic}}}}},
              {"solvable", r.jones.solvable},
              {"witness", witness}};
}

inline Json curve_point_to_json(const CurvePoint& P) {
  if (P.infinity) return Json{{"infinity", true}};
  return Json{{"X", P.x.to_string()}, {"Y", P.y.to_string()}};
}

inline Json identity_results_to_json(const std::vector<IdentityResult>& res) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (auto& r : res) {
    list.push_back(Json{{"name", r.name}, {"description", r.description}, {"pass", r.pass}, {"detail", r.detail}});
    passed += r.pass ? 1 : 0;
  }
  return Json{{"identities", list}, {"passed", passed}, {"total", res.size()}, {"all_pass", passed == res.size()}};
}

inline Json error_to_json(const Error& e) { return Json{{"error", e.name()}, {"message", e.what()}}; }

/// Appends {timestamp, command, inputs, outputs, version} as one JSON line.
inline void append_record(const std::string& path, const std::string& command, const Json& inputs,
                          const Json& outputs) {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  Json rec{{"timestamp", stamp}, {"command", command}, {"inputs", inputs}, {"outputs", outputs},
#ifdef QUINTIC_VERSION
           {"version", QUINTIC_VERSION}
#else
           {"version", "dev"}
#endif
  };
  std::ofstream os(path, std::ios::app);
  if (!os) throw Error(Errc::InvalidInput, "cannot open store '" + path + "'");
  os << rec.dump() << '\n';
}

}  // namespace quintic
