#include "hclab/io.hpp"

#include <limits>
#include <regex>

#include "hclab/error.hpp"
#include "hclab/version.hpp"

namespace hclab::io {

namespace {

// Converts library-internal failures while decoding a document into ParseError.
template <class F>
auto decoding(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

Json int_or_string(const Dyadic::Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Dyadic::Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Dyadic::Int(j.get<std::uint64_t>());
    return Dyadic::Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const Dyadic d = Dyadic::parse(j.get<std::string>());
    if (!d.is_integer()) throw ParseError("expected an integer numerator");
    return d.numerator();
  }
  throw ParseError("expected an integer");
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// --- scalars and vectors --------------------------------------------------

Json to_json(const Dyadic& d) {
  if (d.is_integer()) return int_or_string(d.numerator());
  return d.to_string();
}

Dyadic dyadic_from_json(const Json& j) {
  if (j.is_number_integer()) return Dyadic(int_from_json(j), 0);
  if (j.is_string()) return Dyadic::parse(j.get<std::string>());
  throw ParseError("scalar must be an integer or a 'p/2^e' string, got " + j.dump());
}

Json to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [i, d] : v.entries()) out.push_back(Json::array({i, int_or_string(d.numerator()), d.exponent()}));
  return out;
}

SparseVector vector_from_json(const Json& j) {
  if (j.is_string()) return SparseVector::parse(j.get<std::string>());
  if (!j.is_array()) throw ParseError("vector must be a list of [index, numerator, exponent] triples");
  SparseVector v;
  Index last = 0;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ParseError("vector entry must be [index, numerator, exponent]");
    const Index i = as_uint(t[0], "vector index");
    if (i == 0 || i <= last) throw ParseError("vector indices must be positive and strictly increasing");
    last = i;
    const Dyadic value(int_from_json(t[1]), as_uint(t[2], "vector exponent"));
    // A stored triple must already be canonical; anything else is not bit-exact.
    if (value.is_zero() || value.numerator() != int_from_json(t[1]) || value.exponent() != t[2].get<std::uint64_t>())
      throw ParseError("vector entry at index " + std::to_string(i) + " is not in canonical form");
    v.set(i, value);
  }
  return v;
}

// --- operators ------------------------------------------------------------

Json to_json(const WeightRule& w) {
  if (w.kind == WeightRule::Kind::Constant) return Json{{"constant", to_json(w.c)}};
  return Json{{"geometric", Json::array({to_json(w.c), w.base_exp})}};
}

WeightRule weight_from_json(const Json& j) {
  if (j.is_object() && j.size() == 1) {
    if (j.contains("constant")) return WeightRule::constant(dyadic_from_json(j["constant"]));
    if (j.contains("geometric")) {
      const Json& g = j["geometric"];
      if (!g.is_array() || g.size() != 2) throw ParseError("geometric weight must be [c, base_exp]");
      return WeightRule::geometric(dyadic_from_json(g[0]), as_int(g[1], "geometric base_exp"));
    }
  }
  throw ParseError("weight must be {\"constant\":c} or {\"geometric\":[c,e]}");
}

Json to_json(const BiorthogonalSystem& s) { return Json{{"sigma", Json::array({s.stride(), s.offset()})}}; }

BiorthogonalSystem system_from_json(const Json& j) {
  return decoding("system", [&] {
    const Json& s = field(j, "sigma");
    if (!s.is_array() || s.size() != 2) throw ParseError("sigma must be [stride, offset]");
    return BiorthogonalSystem(as_int(s[0], "sigma stride"), as_int(s[1], "sigma offset"));
  });
}

Json to_json(const Operator& op) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Operator::Identity>) {
          return "I";
        } else if constexpr (std::is_same_v<T, Operator::BackwardShift>) {
          return "B";
        } else if constexpr (std::is_same_v<T, Operator::ForwardShift>) {
          return "F";
        } else if constexpr (std::is_same_v<T, Operator::Scale>) {
          return Json{{"scale", Json::array({to_json(n.c), to_json(n.inner)})}};
        } else if constexpr (std::is_same_v<T, Operator::WeightedBackwardShift>) {
          return Json{{"wbs", to_json(n.w)}};
        } else if constexpr (std::is_same_v<T, Operator::WeightedForwardShift>) {
          return Json{{"wfs", to_json(n.w)}};
        } else if constexpr (std::is_same_v<T, Operator::Sum>) {
          Json terms = Json::array();
          for (const auto& t : n.terms) terms.push_back(to_json(t));
          return Json{{"sum", terms}};
        } else if constexpr (std::is_same_v<T, Operator::Compose>) {
          return Json{{"compose", Json::array({to_json(n.outer), to_json(n.inner)})}};
        } else if constexpr (std::is_same_v<T, Operator::Power>) {
          return Json{{"power", Json::array({to_json(n.inner), n.m})}};
        } else {
          return Json{{"basis_perturbation", to_json(n.sys)}};
        }
      },
      op.node().v);
}

Operator operator_from_json(const Json& j) {
  return decoding("operator", [&]() -> Operator {
    if (j.is_string()) {
      const auto tag = j.get<std::string>();
      if (tag == "I" || tag == "Identity") return identity_op();
      if (tag == "B") return backward_shift();
      if (tag == "F") return forward_shift();
      throw ParseError("unknown operator tag '" + tag + "'");
    }
    if (!j.is_object() || j.size() != 1) throw ParseError("operator node must be a tag or a single-key object");
    const std::string key = j.begin().key();
    const Json& body = j.begin().value();
    if (key == "scale") {
      if (!body.is_array() || body.size() != 2) throw ParseError("scale must be [c, operator]");
      return scale(dyadic_from_json(body[0]), operator_from_json(body[1]));
    }
    if (key == "wbs") return weighted_backward_shift(weight_from_json(body));
    if (key == "wfs") return weighted_forward_shift(weight_from_json(body));
    if (key == "sum") {
      if (!body.is_array() || body.empty()) throw ParseError("sum must be a non-empty list");
      std::vector<Operator> terms;
      for (const auto& t : body) terms.push_back(operator_from_json(t));
      return sum(std::move(terms));
    }
    if (key == "compose") {
      if (!body.is_array() || body.size() < 2) throw ParseError("compose needs at least two operators");
      // [A, B, C] means A o B o C.
      Operator acc = operator_from_json(body.back());
      for (std::size_t i = body.size() - 1; i-- > 0;) acc = compose(operator_from_json(body[i]), acc);
      return acc;
    }
    if (key == "power") {
      if (!body.is_array() || body.size() != 2) throw ParseError("power must be [operator, m]");
      return power(operator_from_json(body[0]), as_uint(body[1], "power exponent"));
    }
    if (key == "basis_perturbation") return basis_perturbation(system_from_json(body));
    throw ParseError("unknown operator node '" + key + "'");
  });
}

Operator parse_operator(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '"'))
    return operator_from_json(parse_json(text));
  std::string tag(text);
  tag.erase(0, tag.find_first_not_of(" \t\n"));
  tag.erase(tag.find_last_not_of(" \t\n") + 1);
  return operator_from_json(Json(tag));
}

// --- subspaces, sequences, witnesses --------------------------------------

Json to_json(const SubspaceSpec& m) {
  Json j;
  switch (m.pattern()) {
    case SubspaceSpec::Pattern::All:
      j["all"] = true;
      break;
    case SubspaceSpec::Pattern::Odd:
      j["parity"] = "odd";
      break;
    case SubspaceSpec::Pattern::Even:
      j["parity"] = "even";
      break;
    case SubspaceSpec::Pattern::Progression:
      j["progression"] = Json::array({m.stride(), m.offset()});
      break;
    case SubspaceSpec::Pattern::Explicit:
      j["indices"] = m.indices();
      break;
  }
  j["norm"] = std::string(to_string(m.norm()));
  return j;
}

SubspaceSpec subspace_from_json(const Json& j) {
  return decoding("subspace", [&]() -> SubspaceSpec {
    const NormKind norm = parse_norm_kind(field(j, "norm").get<std::string>());
    if (j.contains("all")) return SubspaceSpec::all(norm);
    if (j.contains("parity")) {
      const auto p = j["parity"].get<std::string>();
      if (p == "odd") return SubspaceSpec::odd(norm);
      if (p == "even") return SubspaceSpec::even(norm);
      throw ParseError("parity must be 'odd' or 'even'");
    }
    if (j.contains("progression")) {
      const Json& p = j["progression"];
      if (!p.is_array() || p.size() != 2) throw ParseError("progression must be [stride, offset]");
      return SubspaceSpec::progression(as_int(p[0], "progression stride"), as_int(p[1], "progression offset"), norm);
    }
    if (j.contains("indices")) return SubspaceSpec::explicit_indices(j["indices"].get<std::vector<Index>>(), norm);
    throw ParseError("subspace needs one of all/parity/progression/indices");
  });
}

Json to_json(const PowerSequence& s) { return Json{{"a", s.stride()}, {"b", s.offset()}}; }

PowerSequence sequence_from_json(const Json& j) {
  return decoding("sequence", [&] { return PowerSequence(as_int(field(j, "a"), "a"), as_int(field(j, "b"), "b")); });
}

PowerSequence parse_sequence(std::string_view text) {
  static const std::regex pair(R"(^\s*(\d+)\s*,\s*(-?\d+)\s*$)");
  static const std::regex affine(R"(^\s*(\d*)\s*k\s*(?:([+-])\s*(\d+))?\s*$)");
  const std::string s(text);
  std::smatch match;
  return decoding("sequence", [&] {
    if (std::regex_match(s, match, pair)) return PowerSequence(std::stoll(match[1]), std::stoll(match[2]));
    if (std::regex_match(s, match, affine)) {
      std::int64_t b = match[3].matched ? std::stoll(match[3]) : 0;
      if (match[2] == "-") b = -b;
      return PowerSequence(match[1].length() ? std::stoll(match[1]) : 1, b);
    }
    throw ParseError("sequence must look like '2k', '2k+1' or '2,1'");
  });
}

Json to_json(const DecayCertificate& d) { return Json{{"exact_geometric", d.rate}}; }

DecayCertificate decay_from_json(const Json& j) {
  return decoding("decay", [&] { return DecayCertificate{as_int(field(j, "exact_geometric"), "exact_geometric")}; });
}

Json to_json(const CriterionWitness& w) {
  Json j;
  j["t"] = to_json(w.t);
  j["a"] = to_json(w.a);
  j["m"] = to_json(w.m);
  j["sequence"] = to_json(w.seq);
  j["decay"] = to_json(w.decay);
  j["kernel_budget"] = w.kernel_budget;
  j["scan_limit"] = w.scan_limit;
  return j;
}

CriterionWitness witness_from_json(const Json& j) {
  return decoding("witness", [&] {
    CriterionWitness w;
    w.t = operator_from_json(field(j, "t"));
    w.a = operator_from_json(field(j, "a"));
    w.m = subspace_from_json(field(j, "m"));
    w.seq = sequence_from_json(field(j, "sequence"));
    w.decay = decay_from_json(field(j, "decay"));
    w.kernel_budget = as_uint(field(j, "kernel_budget"), "kernel_budget");
    w.scan_limit = as_uint(field(j, "scan_limit"), "scan_limit");
    if (w.kernel_budget == 0) throw ParseError("kernel_budget must be >= 1");
    return w;
  });
}

// --- certificates ---------------------------------------------------------

Json to_json(const SubseqSelection& s) {
  Json out = Json::array();
  for (const auto& p : s.picks) {
    Json th;
    th["decay_self"] = p.thresholds.decay_self;
    th["decay_next"] = p.thresholds.decay_next;
    th["kernel_p"] = p.thresholds.kernel_p;
    th["doubling"] = p.thresholds.doubling ? Json(*p.thresholds.doubling) : Json(nullptr);
    out.push_back(Json{{"k", p.k}, {"j", p.j}, {"m", p.m}, {"thresholds", th}});
  }
  return out;
}

SubseqSelection selection_from_json(const Json& j) {
  return decoding("selection", [&] {
    if (!j.is_array()) throw ParseError("selection must be a list");
    SubseqSelection s;
    for (const auto& p : j) {
      SelectionPick pick;
      pick.k = as_uint(field(p, "k"), "k");
      pick.j = as_uint(field(p, "j"), "j");
      pick.m = as_uint(field(p, "m"), "m");
      const Json& th = field(p, "thresholds");
      pick.thresholds.decay_self = as_uint(field(th, "decay_self"), "decay_self");
      pick.thresholds.decay_next = as_uint(field(th, "decay_next"), "decay_next");
      pick.thresholds.kernel_p = as_uint(field(th, "kernel_p"), "kernel_p");
      const Json& d = field(th, "doubling");
      if (!d.is_null()) pick.thresholds.doubling = as_uint(d, "doubling");
      s.picks.push_back(pick);
    }
    return s;
  });
}

Json to_json(const CertificateCheck& c) {
  Json j;
  j["k"] = c.k;
  j["exact_error"] = to_json(c.exact_error);
  j["tail_bound"] = to_json(c.tail_bound);
  j["membership_ok"] = c.membership_ok;
  j["vanishing_ok"] = c.vanishing_ok;
  j["bound_holds"] = c.bound_holds;
  j["asserted"] = c.asserted;
  j["detail"] = c.detail;
  return j;
}

CertificateCheck check_from_json(const Json& j) {
  return decoding("check", [&] {
    CertificateCheck c;
    c.k = as_uint(field(j, "k"), "k");
    c.exact_error = dyadic_from_json(field(j, "exact_error"));
    c.tail_bound = dyadic_from_json(field(j, "tail_bound"));
    c.membership_ok = as_bool(field(j, "membership_ok"), "membership_ok");
    c.vanishing_ok = as_bool(field(j, "vanishing_ok"), "vanishing_ok");
    c.bound_holds = as_bool(field(j, "bound_holds"), "bound_holds");
    c.asserted = as_bool(field(j, "asserted"), "asserted");
    c.detail = field(j, "detail").get<std::string>();
    return c;
  });
}

Json certificate_to_json(const HypercyclicCertificate& cert) {
  Json payload;
  payload["witness"] = to_json(cert.witness);
  payload["K"] = cert.K;
  payload["dense_source"] = Json{{"enumeration_offset", cert.enumeration_offset}};
  Json prefix = Json::array();
  for (const auto& x : cert.dense_prefix) prefix.push_back(to_json(x));
  payload["dense_prefix"] = prefix;
  payload["selection"] = to_json(cert.selection);
  payload["x_partial"] = Json{{"computed", to_json(cert.x_partial.computed)},
                              {"tail_bound", to_json(cert.x_partial.tail_bound)},
                              {"norm", std::string(to_string(cert.x_partial.norm))}};
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back(to_json(c));
  payload["checks"] = checks;

  Json doc;
  doc["format"] = std::string(kCertificateFormat);
  doc["payload"] = payload;
  doc["metadata"] = Json{{"tool", "hclab"}, {"version", std::string(kVersion)}};
  return doc;
}

HypercyclicCertificate certificate_from_json(const Json& doc) {
  return decoding("certificate", [&] {
    if (field(doc, "format") != kCertificateFormat) throw ParseError("unsupported certificate format");
    const Json& p = field(doc, "payload");
    HypercyclicCertificate cert;
    cert.witness = witness_from_json(field(p, "witness"));
    cert.K = as_uint(field(p, "K"), "K");
    cert.enumeration_offset = as_uint(field(field(p, "dense_source"), "enumeration_offset"), "enumeration_offset");
    for (const auto& x : field(p, "dense_prefix")) cert.dense_prefix.push_back(vector_from_json(x));
    cert.selection = selection_from_json(field(p, "selection"));
    const Json& xp = field(p, "x_partial");
    cert.x_partial.computed = vector_from_json(field(xp, "computed"));
    cert.x_partial.tail_bound = dyadic_from_json(field(xp, "tail_bound"));
    cert.x_partial.norm = parse_norm_kind(field(xp, "norm").get<std::string>());
    for (const auto& c : field(p, "checks")) cert.checks.push_back(check_from_json(c));
    return cert;
  });
}

// --- reports --------------------------------------------------------------

Json to_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"sample", f.sample},
                            {"input", f.input.to_string()},
                            {"observed", f.observed.to_string()},
                            {"detail", f.detail}});
  }
  return Json{{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"failures", failures}};
}

Json to_json(const ConditionsReport& r) {
  return Json{{"passed", r.passed()},
              {"i_decay", to_json(r.decay)},
              {"ii_membership", to_json(r.membership)},
              {"iii_difference_closure", to_json(r.difference_closure)},
              {"iv_left_inverse", to_json(r.left_inverse)}};
}

Json to_json(const CertificateReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"passed", r.passed()}, {"problems", r.problems}, {"checks", checks}};
}

Json to_json(const LeReport& r) {
  return Json{{"verdict", std::string(to_string(r.verdict))},
              {"kernel", to_json(r.kernel)},
              {"decay", to_json(r.decay)},
              {"left_inverse", to_json(r.left_inverse)},
              {"subspace_membership", to_json(r.subspace_membership)},
              {"invariance", to_json(r.invariance)}};
}

Json to_json(const OrbitReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) {
    Json pt{{"n", p.n}, {"norm", to_json(p.norm)}};
    if (p.vector) pt["vector"] = to_json(*p.vector);
    if (p.nearest_distance) pt["nearest_distance"] = to_json(*p.nearest_distance);
    points.push_back(pt);
  }
  Json hits = Json::array();
  for (const auto& h : r.hits)
    hits.push_back(Json{{"target_index", h.target_index}, {"orbit_index", h.orbit_index}, {"distance", to_json(h.distance)}});
  return Json{{"operator", to_json(r.op)},
              {"start", to_json(r.start)},
              {"norm", std::string(to_string(r.norm))},
              {"tail_bound", to_json(r.tail_bound)},
              {"points", points},
              {"hits", hits},
              {"missed_targets", r.missed_targets}};
}

}  // namespace hclab::io
