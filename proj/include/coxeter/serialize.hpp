#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "coxeter/conjugacy.hpp"
#include "coxeter/excess.hpp"
#include "coxeter/group.hpp"
#include "coxeter/involution.hpp"
#include "coxeter/witness.hpp"

namespace coxeter {

inline std::string word_of(const Group& g, const Element& e) {
  return format_word(reduced_word(g, e));
}

inline nlohmann::json to_json(const Group& g, const RichardsonForm& form) {
  return nlohmann::json{{"J", form.J},
                        {"conjugator_word", word_of(g, form.conjugator)},
                        {"wJ_word", word_of(g, form.w_J)}};
}

inline nlohmann::json class_report_json(const Group& g, const ConjugacyClass& cls) {
  return nlohmann::json{{"representative", word_of(g, cls.representative)},
                        {"size", cls.members.size()},
                        {"cuspidal", cls.cuspidal}};
}

inline nlohmann::json spartan_report_json(const Group& g, const Element& w,
                                          const std::vector<SpartanPair>& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SpartanPair& p : pairs)
    arr.push_back({{"x", word_of(g, p.x)}, {"y", word_of(g, p.y)}});
  int e = pairs.empty() ? 0 : pairs.front().defect;
  return nlohmann::json{{"w", word_of(g, w)}, {"excess", e}, {"pairs", arr}};
}

inline nlohmann::json to_json(const Group& g, const WitnessCertificate& cert) {
  return nlohmann::json{{"w", word_of(g, cert.input)},
                        {"w_star", word_of(g, cert.w_star)},
                        {"sigma", word_of(g, cert.sigma)},
                        {"tau", word_of(g, cert.tau)},
                        {"conjugator", word_of(g, cert.conjugator)},
                        {"J", cert.J},
                        {"K", cert.K},
                        {"lengths",
                         {{"w_star", length(g, cert.w_star)},
                          {"sigma", length(g, cert.sigma)},
                          {"tau", length(g, cert.tau)}}}};
}

inline std::string distribution_csv(const ExcessDistribution& dist) {
  std::string out = "excess,count\n";
  for (const auto& [excess_value, count] : dist.counts)
    out += std::to_string(excess_value) + "," + std::to_string(count) + "\n";
  return out;
}

}  // namespace coxeter
