#include "hyperconv/spec.hpp"

#include "hyperconv/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace hyperconv {

namespace {

using nlohmann::json;

// Parameters may sit under "params" or beside "builtin".
const json& param(const json& spec, const std::string& key) {
  if (spec.contains("params") && spec["params"].is_object() && spec["params"].contains(key)) return spec["params"][key];
  if (spec.contains(key)) return spec[key];
  throw SpecError("missing parameter '" + key + "' in " + spec.dump());
}

bool has_param(const json& spec, const std::string& key) {
  return (spec.contains("params") && spec["params"].is_object() && spec["params"].contains(key)) || spec.contains(key);
}

Rational rational_param(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SpecError("expected a rational \"p/q\", got " + j.dump());
}

int int_param(const json& j) {
  if (!j.is_number_integer()) throw SpecError("expected an integer, got " + j.dump());
  return j.get<int>();
}

std::string builtin_name(const json& spec) {
  if (!spec.is_object() || !spec.contains("builtin") || !spec["builtin"].is_string())
    throw SpecError("construction spec needs a string \"builtin\": " + spec.dump());
  return spec["builtin"].get<std::string>();
}

Elements elements_param(const CarrierAlgebra& a, const json& j) {
  if (!j.is_array()) throw SpecError("expected an element list, got " + j.dump());
  Elements out;
  for (const auto& x : j) out.push_back(element_from_spec(a, x));
  return out;
}

DeformationWeights weights_param(const json& j) {
  if (j.is_string() && j.get<std::string>().starts_with("[")) return weights_param(json::parse(j.get<std::string>()));
  if (j.is_string()) return DeformationWeights::parse(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Rational> values;
    for (const auto& v : j) values.push_back(rational_param(v));
    return DeformationWeights::explicit_list(std::move(values));
  }
  throw SpecError("deformation weights must be a string or a list, got " + j.dump());
}

std::function<Rational(int)> coefficient_param(const json& j, const std::string& name) {
  if (j.is_array()) {
    std::vector<Rational> values;
    for (const auto& v : j) values.push_back(rational_param(v));
    return [values, name](int n) {
      if (n < 1 || n > static_cast<int>(values.size()))
        throw SpecError("recurrence coefficient " + name + "_" + std::to_string(n) + " not given");
      return values[n - 1];
    };
  }
  const Rational value = rational_param(j);
  return [value](int) { return value; };
}

}  // namespace

Element element_from_spec(const CarrierAlgebra& a, const json& j) {
  if (a.is_finite()) {
    if (j.is_string()) {
      const auto& names = a.element_names();
      auto it = std::find(names.begin(), names.end(), j.get<std::string>());
      if (it == names.end()) throw SpecError("no element named '" + j.get<std::string>() + "' in " + a.name());
      return Element::table(static_cast<std::int32_t>(it - names.begin()));
    }
    if (j.is_number_integer()) return Element::table(j.get<std::int32_t>());
  }
  if (j.is_number_integer() && a.kind() == CarrierAlgebra::Kind::Integers) return Element::integer(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return Element::pair(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  Element x = element_from_json(j);
  if (!a.contains(x)) throw SpecError(to_string(x) + " is not an element of " + a.name());
  return x;
}

CarrierAlgebra algebra_from_spec(const json& spec) {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    if (name == "Z") return integers();
    if (name == "ZxZ") return integer_pairs();
    if (name == "Z+") return nonneg_integers();
    if (name == "NxN") return natural_pairs();
    if (name == "ZxN+") return zxn_adjoined_additive();
    if (name == "ZxNmax") return zxn_adjoined_mixed();
    if (name == "max" || name == "(Z+,max)") return max_semigroup();
    if (name == "S3") return symmetric_group_s3();
    if (name == "V4") return klein_four_group();
    if (name.size() > 1 && name[0] == 'C') return cyclic_group(std::stoi(name.substr(1)));
    if (name.size() > 2 && name.rfind("S_", 0) == 0) return sk_semigroup(std::stoi(name.substr(2)));
    throw SpecError("unknown carrier algebra '" + name + "'");
  }
  if (spec.is_object() && spec.contains("table")) {
    try {
      auto names = spec.at("names").get<std::vector<std::string>>();
      auto table = spec.at("table").get<std::vector<std::vector<int>>>();
      std::optional<int> identity;
      if (spec.contains("identity") && !spec["identity"].is_null()) {
        const json& id = spec["identity"];
        if (id.is_string()) {
          auto it = std::find(names.begin(), names.end(), id.get<std::string>());
          if (it == names.end()) throw SpecError("identity '" + id.get<std::string>() + "' is not a listed name");
          identity = static_cast<int>(it - names.begin());
        } else {
          identity = id.get<int>();
        }
      }
      const std::string name = spec.value("name", std::string("table"));
      return finite_table(name, std::move(names), std::move(table), identity);
    } catch (const json::exception& e) {
      throw SpecError(std::string("malformed table spec: ") + e.what());
    }
  }
  if (spec.is_object() && spec.contains("builtin")) {
    const std::string name = spec["builtin"].get<std::string>();
    if (name == "cyclic") return cyclic_group(int_param(param(spec, "n")));
    if (name == "sk") return sk_semigroup(int_param(param(spec, "k")));
    return algebra_from_spec(json(name));
  }
  throw SpecError("malformed carrier algebra spec " + spec.dump());
}

FiniteAction action_from_spec(const json& spec) {
  if (!has_param(spec, "action")) throw SpecError("orbit construction needs an \"action\"");
  const std::string action = param(spec, "action").get<std::string>();
  if (action == "sign") return sign_action();
  if (action == "klein") return klein_sign_action();
  const CarrierAlgebra carrier = algebra_from_spec(param(spec, "carrier"));
  if (action == "swap") return swap_action(carrier);
  if (action == "reflect") return reflection_action(carrier);
  if (action == "trivial") return trivial_action(carrier);
  throw SpecError("unknown action '" + action + "'");
}

Recurrence recurrence_from_spec(const json& spec) {
  const std::string family = has_param(spec, "family") ? param(spec, "family").get<std::string>() : "custom";
  if (family == "chebyshev_t") return Recurrence::chebyshev_first();
  if (family == "chebyshev_u") return Recurrence::chebyshev_second_normalized();
  if (family == "legendre") return Recurrence::gegenbauer_normalized(make_rational(1, 2));
  if (family == "gegenbauer") return Recurrence::gegenbauer_normalized(rational_param(param(spec, "lambda")));
  if (family.starts_with("gegenbauer(") && family.ends_with(")"))
    return Recurrence::gegenbauer_normalized(parse_rational(family.substr(11, family.size() - 12)));
  if (family != "custom") throw SpecError("unknown polynomial family '" + family + "'");
  const json& rec = param(spec, "recurrence");
  Recurrence out;
  out.name = rec.value("name", std::string("custom"));
  out.a = coefficient_param(rec.at("a"), "a");
  out.b = coefficient_param(rec.at("b"), "b");
  out.c = coefficient_param(rec.at("c"), "c");
  std::vector<Rational> p1;
  for (const auto& v : rec.at("p1")) p1.push_back(rational_param(v));
  out.p1 = Polynomial(std::move(p1));
  return out;
}

HypergroupDescriptor descriptor_from_spec(const json& spec) {
  const std::string name = builtin_name(spec);
  try {
    if (name == "cp1") return cp1();
    if (name == "cp2") return cp2();
    if (name == "dunkl_ramirez") return dunkl_ramirez(rational_param(param(spec, "a")));
    if (name == "max_deformation")
      return max_deformation(weights_param(param(spec, "v")),
                             has_param(spec, "n_max") ? int_param(param(spec, "n_max")) : 20);
    if (name == "polynomial")
      return polynomial_hypergroup(recurrence_from_spec(spec),
                                   has_param(spec, "n_max") ? int_param(param(spec, "n_max")) : 30);
    if (name == "coset" || name == "double_coset") {
      const CarrierAlgebra g = algebra_from_spec(param(spec, "group"));
      const Elements h = elements_param(g, param(spec, "subgroup"));
      return name == "coset" ? coset_semiconvo(g, h) : double_coset_hypergroup(g, h);
    }
    if (name == "automorphism_orbit") return automorphism_orbit_hypergroup(action_from_spec(spec));
    if (name == "orbit") return orbit_semiconvo(action_from_spec(spec));
    if (name == "semigroup_orbit") return semigroup_orbit_semiconvo(action_from_spec(spec));
    if (name == "ross_quotient") {
      const HypergroupDescriptor base = descriptor_from_spec(param(spec, "base"));
      const int radius = has_param(spec, "window") ? int_param(param(spec, "window")) : 12;
      Elements h;
      for (const auto& x : param(spec, "subgroup")) h.push_back(element_from_json(x));
      return ross_quotient(base, h, Window(base.window(radius)));
    }
    if (name == "semigroup" || name == "group") return semigroup_descriptor(algebra_from_spec(param(spec, "algebra")));
    if (name == "deformation") {
      const CarrierAlgebra s = algebra_from_spec(param(spec, "semigroup"));
      IdempotentMeasures q;
      for (const auto& entry : param(spec, "q"))
        q.emplace(element_from_spec(s, entry.at("at")), measure_from_json(entry.at("measure")));
      std::optional<Elements> window;
      if (has_param(spec, "window")) window = s.sample(int_param(param(spec, "window")));
      return deform(s, q, window);
    }
  } catch (const json::exception& e) {
    throw SpecError("malformed '" + name + "' spec: " + e.what());
  }
  throw SpecError("unknown builtin '" + name + "'");
}

json descriptor_to_json(const HypergroupDescriptor& k, int radius) {
  json claims = json::array();
  for (Claim c : k.claims()) claims.push_back(to_string(c));
  json out = {{"name", k.name()},
              {"carrier", k.carrier()},
              {"identity", to_json(k.identity())},
              {"involution", k.involution_kind()},
              {"claims", claims},
              {"polynomial", k.polynomial()},
              {"finite", k.is_finite()},
              {"spec", k.spec()},
              {"spec_hash", spec_hash(k.spec())}};
  const Elements elements = k.window(radius);
  json listed = json::array();
  for (const auto& x : elements) listed.push_back(to_json(x));
  json table = json::array();
  for (const auto& x : elements)
    for (const auto& y : elements) {
      json entry = {{"m", to_json(x)}, {"n", to_json(y)}};
      try {
        entry["product"] = to_json(k.convolve(x, y));
      } catch (const RuleDomainError& e) {
        entry["undefined"] = e.what();
      }
      table.push_back(std::move(entry));
    }
  out[k.is_finite() ? "elements" : "window"] = listed;
  out["table"] = table;
  return out;
}

Coloring coloring_from_spec(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind")) throw SpecError("coloring needs a \"kind\": " + spec.dump());
  const std::string kind = spec["kind"].get<std::string>();
  if (kind == "mod_k") return Coloring::mod_k(int_param(spec.at("k")));
  if (kind == "mod_4k") return Coloring::mod_4k(int_param(spec.at("k")));
  if (kind == "triangular2") return Coloring::triangular_two();
  if (kind == "one") return Coloring::mod_k(1);
  if (kind == "table") {
    std::map<Element, int> classes;
    for (const auto& entry : spec.at("classes")) classes[element_from_json(entry.at("elem"))] = entry.at("class");
    return Coloring::table(std::move(classes), int_param(spec.at("arity")));
  }
  throw SpecError("unknown coloring kind '" + kind + "'");
}

Criterion criterion_from_spec(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind")) throw SpecError("criterion needs a \"kind\": " + spec.dump());
  const std::string kind = spec["kind"].get<std::string>();
  if (kind == "mono") return Criterion::mono();
  if (kind == "alpha") return Criterion::alpha_mass(rational_param(spec.at("alpha")));
  if (kind == "almost") return Criterion::almost_mono(spec.contains("budget") ? int_param(spec["budget"]) : 2);
  throw SpecError("unknown criterion kind '" + kind + "'");
}

ExperimentSpec experiment_from_spec(const json& spec) {
  if (!spec.is_object()) throw SpecError("experiment spec must be an object");
  try {
    return ExperimentSpec{spec.at("hypergroup"), coloring_from_spec(spec.at("coloring")),
                          criterion_from_spec(spec.value("criterion", json{{"kind", "mono"}})),
                          spec.value("depth", 2), spec.value("window", 20)};
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed experiment spec: ") + e.what());
  }
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  if (spec.window < 0) throw SpecError("window must be >= 0");
  const json& h = spec.hypergroup;
  if (h.is_object() && h.value("builtin", std::string()) == "semigroup") {
    const CarrierAlgebra s = algebra_from_spec(param(h, "algebra"));
    return search_fp(s, spec.coloring, spec.depth, Window(s.sample(spec.window)), spec.criterion);
  }
  const HypergroupDescriptor k = descriptor_from_spec(h);
  return search_sequence(k, spec.coloring, spec.depth, Window(k.window(spec.window)), spec.criterion);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string spec_hash(const json& spec) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(spec.dump())));
  return buf;
}

}  // namespace hyperconv
