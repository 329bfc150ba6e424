#include "jacring/serialize.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace jacring {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({m, to_string(c)}));
  return terms;
}

SparsePoly poly_from_json(const Json& j, const ContextPtr& ctx) {
  SparsePoly p(ctx);
  for (const auto& t : j) {
    Monomial m = t.at(0).get<Monomial>();
    if (m.size() != ctx->size()) throw std::invalid_argument("term arity mismatch");
    p.add_term(m, parse_rational(t.at(1).get<std::string>()));
  }
  return p;
}

Json to_json(const IdealPresentation& pres) {
  Json vars = Json::array();
  const auto& ctx = *pres.context;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    Json v = {{"name", ctx.name(i)}, {"weight1", ctx.weight1()[i]}};
    if (ctx.bigraded()) v["weight2"] = ctx.weight2()[i];
    vars.push_back(v);
  }
  Json gens = Json::array();
  for (const auto& g : pres.generators) gens.push_back(to_json(g));
  return Json{{"schema", kSchemaVersion},
              {"variables", vars},
              {"homogeneity", to_string(pres.homogeneity)},
              {"generators", gens}};
}

IdealPresentation presentation_from_json(const Json& j) {
  if (j.at("schema") != kSchemaVersion) throw std::invalid_argument("unknown presentation schema");
  std::vector<std::string> names;
  std::vector<int> w1, w2;
  bool bi = false;
  for (const auto& v : j.at("variables")) {
    names.push_back(v.at("name"));
    w1.push_back(v.at("weight1"));
    if (v.contains("weight2")) {
      bi = true;
      w2.push_back(v.at("weight2"));
    }
  }
  auto ctx = bi ? make_context(names, w1, w2) : make_context(names, w1);
  IdealPresentation pres{ctx, {}, Homogeneity::none};
  const std::string h = j.at("homogeneity");
  if (h == "graded") pres.homogeneity = Homogeneity::graded;
  if (h == "bigraded") pres.homogeneity = Homogeneity::bigraded;
  for (const auto& g : j.at("generators")) pres.generators.push_back(poly_from_json(g, ctx));
  audit_homogeneity(pres);
  return pres;
}

std::string presentation_hash(const IdealPresentation& pres) { return sha256_hex(to_json(pres).dump()); }

Json to_json(const GammaModule& m) {
  return Json{{"generators", m.base->generators()}, {"adjoined_gaps", m.adjoined_gaps}};
}

Json to_json(const ShiftedModule& m, int p, int q) {
  Json j{{"adjoined_gaps", m.module.adjoined_gaps}, {"shift", m.shift}};
  if (p > 0) j["p_basis"] = p_basis(m, p);
  if (q > 0) j["q_basis"] = q_basis(m, q);
  return j;
}

Json to_json(const FlagTuple& d) { return Json(d.d); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace jacring
