#include "strata/io.hpp"

#include <sstream>

namespace strata {

void to_json(json& j, const InvariantTriple& t) {
  j = json{{"rank", t.rank}, {"real_dim", t.real_dim}, {"shilov_dim", t.shilov_dim}};
}

void from_json(const json& j, InvariantTriple& t) {
  j.at("rank").get_to(t.rank);
  j.at("real_dim").get_to(t.real_dim);
  j.at("shilov_dim").get_to(t.shilov_dim);
}

void to_json(json& j, const CartanFactor& f) {
  j = json{{"family", std::string(to_string(f.family()))},
           {"params", std::vector<std::int64_t>(f.params().begin(), f.params().end())}};
}

CartanFactor factor_from_json(const json& j) {
  const auto name = j.at("family").get<std::string>();
  const auto family = family_from_string(name);
  if (!family) throw Error(ErrorCode::SyntaxError, "unknown Cartan family '" + name + "'");
  const auto params = j.at("params").get<std::vector<std::int64_t>>();
  return make_factor(*family, params);
}

void to_json(json& j, const Domain& d) {
  j = json{{"expression", to_string(d)}, {"factors", d.factors()}};
}

Domain domain_from_json(const json& j) {
  std::vector<CartanFactor> factors;
  for (const auto& f : j.at("factors")) factors.push_back(factor_from_json(f));
  return product(std::move(factors));
}

void to_json(json& j, const Collision& c) { j = json{{"triple", c.triple}, {"factors", c.factors}}; }

void to_json(json& j, const TubeCollision& c) {
  j = json{{"rank", c.rank}, {"real_dim", c.real_dim}, {"factors", c.factors}};
}

void to_json(json& j, const ReconstructionReport& r) {
  j = json{{"max_param", r.max_param},
           {"scanned_count", r.scanned_count},
           {"collisions", r.collisions},
           {"tube_collisions", r.tube_collisions},
           {"round_trip_failures", r.round_trip_failures},
           {"tube_violations", r.tube_violations},
           {"elapsed_ms", r.elapsed_ms}};
}

namespace {

std::vector<CartanFactor> factors_from_json(const json& j) {
  std::vector<CartanFactor> out;
  for (const auto& f : j) out.push_back(factor_from_json(f));
  return out;
}

}  // namespace

ReconstructionReport report_from_json(const json& j) {
  ReconstructionReport r;
  j.at("max_param").get_to(r.max_param);
  j.at("scanned_count").get_to(r.scanned_count);
  for (const auto& c : j.at("collisions")) {
    r.collisions.push_back({c.at("triple").get<InvariantTriple>(), factors_from_json(c.at("factors"))});
  }
  for (const auto& c : j.at("tube_collisions")) {
    r.tube_collisions.push_back({c.at("rank").get<std::int64_t>(), c.at("real_dim").get<std::int64_t>(),
                                 factors_from_json(c.at("factors"))});
  }
  r.round_trip_failures = factors_from_json(j.at("round_trip_failures"));
  r.tube_violations = factors_from_json(j.at("tube_violations"));
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  return r;
}

void to_json(json& j, const SpectrumSweepReport& r) {
  j = json{{"domains_checked", r.domains_checked},
           {"automorphisms_checked", r.automorphisms_checked},
           {"violations", r.violations},
           {"elapsed_ms", r.elapsed_ms}};
}

json spectrum_to_json(const StratumPoset& p) {
  json strata = json::array();
  json weights = json::array();
  json labels = json::array();
  for (std::size_t x = 0; x < p.size(); ++x) {
    strata.push_back(p.stratum(x));
    weights.push_back(p.weight(x));
    json label = json::array();
    for (const auto& c : p.label(x)) label.push_back({{"factor", c.factor}, {"index", c.index}});
    labels.push_back(std::move(label));
  }
  json covers = json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return json{{"domain", to_string(p.domain())},
              {"ranks", std::vector<std::int64_t>(p.ranks().begin(), p.ranks().end())},
              {"strata", std::move(strata)},
              {"weights", std::move(weights)},
              {"covers", std::move(covers)},
              {"labels", std::move(labels)}};
}

std::string spectrum_to_dot(const StratumPoset& p) {
  std::ostringstream out;
  out << "digraph spectrum {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto key = tuple_key(p.stratum(x));
    out << "  \"" << key << "\" [label=\"" << key << "|" << p.weight(x) << "\"];\n";
  }
  for (const auto& [lo, hi] : p.covers()) {
    out << "  \"" << tuple_key(p.stratum(lo)) << "\" -> \"" << tuple_key(p.stratum(hi)) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace strata
