#include "qlink/json_io.hpp"

#include <fstream>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::uint32_t exponent_from(const Json& j) {
  const auto v = j.get<long long>();
  if (v < 0 || v > 0xffffffffLL) throw ParseError("exponent out of range");
  return static_cast<std::uint32_t>(v);
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const auto s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto n = std::stoll(s, &used);
      if (used != s.size()) throw ParseError("");
      return Rational(n);
    }
    const auto num = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw ParseError("");
    const auto den_text = s.substr(slash + 1);
    const auto den = std::stoll(den_text, &used);
    if (used != den_text.size() || den == 0) throw ParseError("");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("not a rational number: \"" + s + "\"");
  }
}

Json stat_to_json(const PartStat& s) {
  switch (s.kind) {
    case PartStat::Kind::None: return "none";
    case PartStat::Kind::Parts: return "parts";
    case PartStat::Kind::Residue: return Json{{"residue", s.residue}, {"mod", s.modulus}};
  }
  return nullptr;
}

PartStat stat_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "none") return PartStat::none();
    if (s == "parts") return PartStat::parts();
    throw InvalidSpec("unknown statistic \"" + s + "\"");
  }
  return PartStat::residue_count(j.at("residue").get<int>(), j.at("mod").get<int>());
}

}  // namespace

Json monomial_to_json(const Monomial& m) { return Json::array({m.q, m.x, m.y}); }

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(Json::array({m.q, m.x, m.y, c.get_str()}));
  return out;
}

MultiPoly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    std::vector<MultiPoly::Term> terms;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 4) throw ParseError("polynomial term must be [e_q, e_x, e_y, \"c\"]");
      Integer c;
      const std::string text = t[3].is_string() ? t[3].get<std::string>() : t[3].dump();
      if (c.set_str(text, 10) != 0) throw ParseError("bad coefficient \"" + text + "\"");
      terms.emplace_back(Monomial{exponent_from(t[0]), exponent_from(t[1]), exponent_from(t[2])}, c);
    }
    return MultiPoly::from_terms(std::move(terms));
  });
}

Json series_to_json(const TruncatedSeries& s) { return Json{{"order", s.order()}, {"terms", poly_to_json(s.poly())}}; }

TruncatedSeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    const MultiPoly p = poly_from_json(j.at("terms"));
    const std::uint32_t order = exponent_from(j.at("order"));
    if (!p.is_zero() && max_q_degree(p) > order) throw ParseError("series: term above the stated order");
    return TruncatedSeries(p, order);
  });
}

Json ideal_to_json(const IdealSpec& spec) {
  Json blocks = Json::array();
  for (const auto& b : spec.blocks) blocks.push_back(b.parts());
  Json linking = Json::object();
  for (std::size_t k = 0; k < spec.linking.size(); ++k) {
    Json targets = Json::array();
    for (int t : spec.linking[k]) targets.push_back(t + 1);
    linking[std::to_string(k + 1)] = targets;
  }
  return Json{{"modulus", spec.modulus},
              {"blocks", blocks},
              {"linking", linking},
              {"stats", {{"x", stat_to_json(spec.stats.x)}, {"y", stat_to_json(spec.stats.y)}}}};
}

IdealSpec ideal_from_json(const Json& j) {
  IdealSpec spec = guarded("ideal", [&] {
    IdealSpec s;
    s.modulus = j.at("modulus").get<int>();
    for (const auto& b : j.at("blocks")) s.blocks.emplace_back(b.get<std::vector<int>>());
    s.linking.assign(s.blocks.size(), {});
    const int k = static_cast<int>(s.blocks.size());
    for (const auto& [key, targets] : j.at("linking").items()) {
      std::size_t used = 0;
      int from = 0;
      try {
        from = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || from < 1 || from > k) throw InvalidSpec("linking key \"" + key + "\" is not a block index");
      for (const auto& t : targets) {
        const int to = t.get<int>();
        if (to < 1 || to > k) throw InvalidSpec("linking target " + std::to_string(to) + " is not a block index");
        s.linking[static_cast<std::size_t>(from - 1)].insert(to - 1);
      }
    }
    if (j.contains("stats")) {
      const auto& st = j.at("stats");
      s.stats.x = st.contains("x") ? stat_from_json(st.at("x")) : PartStat::parts();
      s.stats.y = st.contains("y") ? stat_from_json(st.at("y")) : PartStat::none();
    }
    return s;
  });
  spec.validate();
  return spec;
}

Json agspec_to_json(const AGSpec& spec) {
  Json q = Json::array();
  for (const auto& row : spec.Q) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_string(v));
    q.push_back(r);
  }
  Json l2 = Json::array();
  for (const auto& v : spec.L2) l2.push_back(rational_to_string(v));
  return Json{{"r", spec.r},   {"Q", q},         {"L2", l2},          {"L1", spec.L1},
              {"wx", spec.wx}, {"wy", spec.wy}, {"bases", spec.bases}};
}

AGSpec agspec_from_json(const Json& j) {
  AGSpec spec = guarded("AGSpec", [&] {
    AGSpec s;
    s.r = j.at("r").get<std::size_t>();
    for (const auto& row : j.at("Q")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      s.Q.push_back(std::move(r));
    }
    for (const auto& v : j.at("L2")) s.L2.push_back(rational_from_json(v));
    s.L1 = j.at("L1").get<std::vector<int>>();
    s.wx = j.at("wx").get<std::vector<int>>();
    s.wy = j.contains("wy") ? j.at("wy").get<std::vector<int>>() : std::vector<int>(s.r, 0);
    s.bases = j.at("bases").get<std::vector<int>>();
    return s;
  });
  spec.validate();
  return spec;
}

Json qde_to_json(const QDifferenceEquation& eq) {
  Json terms = Json::array();
  for (const auto& t : eq.terms) terms.push_back({{"shift", t.shift}, {"P", poly_to_json(t.p)}});
  return Json{{"step", eq.step}, {"terms", terms}};
}

QDifferenceEquation qde_from_json(const Json& j) {
  return guarded("q-difference equation", [&] {
    QDifferenceEquation eq;
    eq.step = exponent_from(j.at("step"));
    if (eq.step == 0) throw InvalidSpec("step must be positive");
    for (const auto& t : j.at("terms")) eq.terms.push_back({exponent_from(t.at("shift")), poly_from_json(t.at("P"))});
    return eq.canonical();
  });
}

Json recurrence_to_json(const CoefficientRecurrence& rec) {
  Json terms = Json::array();
  for (const auto& t : rec.terms)
    terms.push_back({{"offset", t.offset}, {"alpha", t.alpha}, {"P", poly_to_json(t.p)}});
  return Json{{"step", rec.step}, {"terms", terms}};
}

CoefficientRecurrence recurrence_from_json(const Json& j) {
  return guarded("recurrence", [&] {
    CoefficientRecurrence rec;
    rec.step = exponent_from(j.at("step"));
    if (rec.step == 0) throw InvalidSpec("step must be positive");
    for (const auto& t : j.at("terms"))
      rec.terms.push_back({exponent_from(t.at("offset")), exponent_from(t.at("alpha")), poly_from_json(t.at("P"))});
    return rec.canonical();
  });
}

Json residual_report_to_json(const ResidualReport& r) {
  Json out = Json::array();
  for (const auto& e : r.entries) {
    const auto m = e.first_nonzero();
    out.push_back({{"M", e.m}, {"first_nonzero_monomial", m ? monomial_to_json(*m) : Json(nullptr)}});
  }
  return out;
}

Json stat_table_to_json(const StatTable& t) {
  Json out = Json::array();
  for (const auto& [key, count] : t) out.push_back({{"m", key.first}, {"n", key.second}, {"count", count}});
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace qlink
