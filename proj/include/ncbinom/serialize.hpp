#pragma once

// Canonical JSON for free-algebra elements:
//   { "terms": [ { "word": ["a","b"],
//                  "coef": [ { "mono": {"q": 2}, "num": "3", "den": "1" } ] } ] }
// Terms follow canonical word order; coefficient terms follow display order.

#include <json.hpp>

#include "free_element.hpp"

namespace ncbinom {

inline nlohmann::json word_to_json(const Word &w, const AlgebraContext &ctx) {
  auto out = nlohmann::json::array();
  for (auto letter : w.letters())
    out.push_back(ctx.generator_name(letter));
  return out;
}

inline Word word_from_json(const nlohmann::json &j, const AlgebraContext &ctx) {
  std::vector<std::uint32_t> letters;
  for (const auto &name : j) {
    auto index = ctx.generator_index(name.get<std::string>());
    if (!index)
      throw ContextError("unknown generator '" + name.get<std::string>() + "'");
    letters.push_back(*index);
  }
  return Word(std::move(letters));
}

inline nlohmann::json coef_to_json(const CoefPoly &c,
                                   std::span<const std::string> order) {
  auto out = nlohmann::json::array();
  for (const auto &[m, r] : c.sorted_terms(order)) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto &[name, e] : m.exponents())
      mono[name] = e;
    out.push_back({{"mono", mono},
                   {"num", r.numerator().get_str()},
                   {"den", r.denominator().get_str()}});
  }
  return out;
}

inline CoefPoly coef_from_json(const nlohmann::json &j) {
  CoefPoly c;
  for (const auto &term : j) {
    ParamMonomial m;
    for (const auto &[name, e] : term.at("mono").items())
      m = m * ParamMonomial::variable(name, e.get<unsigned>());
    c.add_term(m, Rational(mpz_class(term.at("num").get<std::string>()),
                           mpz_class(term.at("den").get<std::string>())));
  }
  return c;
}

inline nlohmann::json to_json(const FreeElement &x) {
  const auto &ctx = *x.context();
  auto terms = nlohmann::json::array();
  for (const auto &[w, c] : x.terms())
    terms.push_back(
        {{"word", word_to_json(w, ctx)}, {"coef", coef_to_json(c, ctx.parameters())}});
  return {{"terms", terms}};
}

inline FreeElement element_from_json(const nlohmann::json &j,
                                     const ContextPtr &ctx) {
  FreeElement x(ctx);
  for (const auto &term : j.at("terms"))
    x += FreeElement::monomial(ctx, word_from_json(term.at("word"), *ctx),
                               coef_from_json(term.at("coef")));
  return x;
}

} // namespace ncbinom
