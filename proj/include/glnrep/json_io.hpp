#pragma once

// JSON encoding of segments, multisegments, unitarizable representations and
// generalized Arthur parameters. Rationals are exact strings ("p/q").

#include "glnrep/arthur.hpp"
#include "glnrep/bounds.hpp"
#include "glnrep/multisegment.hpp"
#include "glnrep/rational.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace glnrep {

// A rejected input, addressed by the path of the offending field
// (e.g. "summands[1].x").
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

using Json = nlohmann::json;

inline Json to_json(const Rat& x) { return x.str(); }

inline Json to_json(const SupercuspidalLabel& rho) { return Json{{"id", rho.id}, {"dim", rho.dim}}; }

inline Json to_json(const Segment& s) {
  return Json{{"rho", to_json(s.rho())}, {"a", to_json(s.a())}, {"b", to_json(s.b())}};
}

inline Json to_json(const Multisegment& m) {
  Json segments = Json::array();
  for (const auto& s : m.segments()) segments.push_back(to_json(s));
  return Json{{"segments", segments}};
}

inline Json to_json(const ArthurSummand& s) {
  return Json{{"rho", to_json(s.rho)}, {"a", s.a}, {"d", s.d}, {"x", to_json(s.x)}};
}

inline Json to_json(const UnitaryRep& pi) {
  Json summands = Json::array();
  for (const auto& s : pi.summands()) summands.push_back(to_json(s));
  return Json{{"summands", summands}};
}

inline Json to_json(const GenArthurParam& p) {
  Json summands = Json::array();
  for (const auto& s : p.summands) summands.push_back(Json{{"n", s.n}, {"d", s.d}});
  return Json{{"summands", summands}};
}

namespace detail {

inline const Json& require(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

inline std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

inline std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline Rat parse_rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError(path, "expected a rational as a string \"p/q\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception&) {
    throw ParseError(path, "\"" + j.get<std::string>() + "\" is not a rational number");
  }
}

inline int parse_positive_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected a positive integer");
  auto v = j.get<std::int64_t>();
  if (v < 1 || v > 1'000'000) throw ParseError(path, "expected a positive integer");
  return static_cast<int>(v);
}

inline SupercuspidalLabel parse_label(const Json& j, const std::string& path) {
  const Json& id = require(j, path, "id");
  if (!id.is_string()) throw ParseError(join(path, "id"), "expected a string");
  return SupercuspidalLabel(id.get<std::string>(), parse_positive_int(require(j, path, "dim"), join(path, "dim")));
}

inline const Json& require_array(const Json& obj, const std::string& path, const char* key) {
  const Json& arr = require(obj, path, key);
  if (!arr.is_array()) throw ParseError(join(path, key), "expected an array");
  if (arr.empty()) throw ParseError(join(path, key), "must not be empty");
  return arr;
}

}  // namespace detail

inline Segment segment_from_json(const Json& j, const std::string& path = "") {
  SupercuspidalLabel rho = detail::parse_label(detail::require(j, path, "rho"), detail::join(path, "rho"));
  Rat a = detail::parse_rat(detail::require(j, path, "a"), detail::join(path, "a"));
  Rat b = detail::parse_rat(detail::require(j, path, "b"), detail::join(path, "b"));
  Rat diff = b - a;
  if (!diff.is_integer() || diff.sign() < 0) {
    throw ParseError(detail::join(path, "b"), "b - a = " + diff.str() + " must be a non-negative integer for a segment");
  }
  return Segment(std::move(rho), std::move(a), std::move(b));
}

inline Multisegment multisegment_from_json(const Json& j, const std::string& path = "") {
  const Json& arr = detail::require_array(j, path, "segments");
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < arr.size(); ++i) segments.push_back(segment_from_json(arr[i], detail::index(detail::join(path, "segments"), i)));
  return Multisegment(std::move(segments));
}

inline UnitaryRep unitary_rep_from_json(const Json& j, const std::string& path = "") {
  const Json& arr = detail::require_array(j, path, "summands");
  const std::string base = detail::join(path, "summands");
  std::vector<ArthurSummand> summands;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = detail::index(base, i);
    ArthurSummand s;
    s.rho = detail::parse_label(detail::require(arr[i], p, "rho"), detail::join(p, "rho"));
    s.a = detail::parse_positive_int(detail::require(arr[i], p, "a"), detail::join(p, "a"));
    s.d = detail::parse_positive_int(detail::require(arr[i], p, "d"), detail::join(p, "d"));
    if (arr[i].contains("x")) s.x = detail::parse_rat(arr[i]["x"], detail::join(p, "x"));
    if (s.x.abs() >= Rat(1, 2)) {
      throw ParseError(detail::join(p, "x"), "twist " + s.x.str() + " violates |x| < 1/2 (open interval of the unitary dual)");
    }
    summands.push_back(std::move(s));
  }
  try {
    return UnitaryRep(std::move(summands));
  } catch (const std::domain_error& e) {
    throw ParseError(base, e.what());
  }
}

inline GenArthurParam gen_arthur_param_from_json(const Json& j, const std::string& path = "") {
  const Json& arr = detail::require_array(j, path, "summands");
  const std::string base = detail::join(path, "summands");
  GenArthurParam p;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string e = detail::index(base, i);
    p.summands.push_back(GenSummand{detail::parse_positive_int(detail::require(arr[i], e, "n"), detail::join(e, "n")),
                                    detail::parse_positive_int(detail::require(arr[i], e, "d"), detail::join(e, "d"))});
  }
  return p;
}

using ParsedRep = std::variant<UnitaryRep, Multisegment, GenArthurParam>;

// Decides the kind from the shape: "segments" is a multisegment; "summands"
// with "n" entries is a generalized Arthur parameter, otherwise a unitarizable
// representation.
inline ParsedRep parse_rep(std::string_view bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw ParseError("$", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("$", "expected a JSON object");
  if (j.contains("segments")) return multisegment_from_json(j);
  if (!j.contains("summands")) throw ParseError("$", "expected a \"segments\" or \"summands\" field");
  const Json& arr = detail::require_array(j, "", "summands");
  if (arr.front().is_object() && arr.front().contains("n")) return gen_arthur_param_from_json(j);
  return unitary_rep_from_json(j);
}

}  // namespace glnrep
