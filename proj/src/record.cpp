#include "pgonal/record.hpp"

#include <stdexcept>

namespace pgonal {

WitnessRecord make_witness_record(const ExtensionWitness& w) {
  WitnessRecord r;
  r.group = w.group.name();
  r.n = w.group.n();
  r.u = w.group.u().value();
  r.quotient_periods = w.quotient_signature.periods();
  for (GroupElement g : w.images) r.images.emplace_back(g.a, g.b);
  return r;
}

ResultRecord make_record(const StratumClass& cls, Int extend_n_max) {
  ResultRecord r;
  r.p = cls.p();
  r.k = cls.k();
  r.canonical = cls.canonical();
  const Profile prof = profile(cls);
  r.profile.assign(prof.counts.begin() + 1, prof.counts.end());
  r.g = cls.genus();
  r.d = cls.dim();
  const IsolationVerdict verdict = isolation_verdict(cls);
  r.verdict = verdict.name();
  for (const auto& c : verdict.candidates()) r.candidates.push_back({c.q, c.u.value(), c.min_fixed_in_s, c.has_cycle});
  if (extend_n_max >= 2)
    for (const auto& w : prove_extension(cls, extend_n_max)) r.witnesses.push_back(make_witness_record(w));
  return r;
}

void to_json(ordered_json& j, const CandidateRecord& r) {
  j = ordered_json{{"q", r.q}, {"u", r.u}, {"min_fixed_in_s", r.min_fixed_in_s}, {"has_cycle", r.has_cycle}};
}

void from_json(const ordered_json& j, CandidateRecord& r) {
  j.at("q").get_to(r.q);
  j.at("u").get_to(r.u);
  j.at("min_fixed_in_s").get_to(r.min_fixed_in_s);
  j.at("has_cycle").get_to(r.has_cycle);
}

void to_json(ordered_json& j, const WitnessRecord& r) {
  ordered_json images = ordered_json::array();
  for (const auto& [a, b] : r.images) images.push_back({a, b});
  j = ordered_json{{"group", r.group},
                   {"n", r.n},
                   {"u", r.u},
                   {"quotient_signature", r.quotient_periods},
                   {"images", images}};
}

void from_json(const ordered_json& j, WitnessRecord& r) {
  j.at("group").get_to(r.group);
  j.at("n").get_to(r.n);
  j.at("u").get_to(r.u);
  j.at("quotient_signature").get_to(r.quotient_periods);
  r.images.clear();
  for (const auto& pair : j.at("images")) r.images.emplace_back(pair.at(0).get<Int>(), pair.at(1).get<Int>());
}

void to_json(ordered_json& j, const ResultRecord& r) {
  j = ordered_json::object();
  j["schema_version"] = r.schema_version;
  j["p"] = r.p;
  j["k"] = r.k;
  j["canonical"] = r.canonical;
  j["profile"] = r.profile;
  j["g"] = r.g;
  j["d"] = r.d;
  j["verdict"] = r.verdict;
  j["candidates"] = r.candidates;
  j["witnesses"] = r.witnesses;
  j["timing"] = r.timing_ms ? ordered_json(*r.timing_ms) : ordered_json(nullptr);
}

void from_json(const ordered_json& j, ResultRecord& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("p").get_to(r.p);
  j.at("k").get_to(r.k);
  j.at("canonical").get_to(r.canonical);
  j.at("profile").get_to(r.profile);
  j.at("g").get_to(r.g);
  j.at("d").get_to(r.d);
  j.at("verdict").get_to(r.verdict);
  j.at("candidates").get_to(r.candidates);
  j.at("witnesses").get_to(r.witnesses);
  if (j.at("timing").is_null())
    r.timing_ms.reset();
  else
    r.timing_ms = j.at("timing").get<double>();
}

ordered_json atlas_entry_json(const AtlasEntry& e) {
  ordered_json j = ordered_json::object();
  j["g"] = e.g;
  j["p"] = e.p;
  j["k"] = e.k;
  j["d"] = e.d;
  j["status"] = to_string(e.status);
  j["witness"] = e.witness ? ordered_json(e.witness->exponents()) : ordered_json(nullptr);
  j["construction_isolated"] = e.construction_isolated;
  j["class_count"] = e.class_count ? ordered_json(*e.class_count) : ordered_json(nullptr);
  j["isolated_count"] = e.isolated_count ? ordered_json(*e.isolated_count) : ordered_json(nullptr);
  j["note"] = e.note;
  return j;
}

std::vector<Int> parse_exponents(const std::string& text) {
  std::vector<Int> out;
  auto parse_int = [&](const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed exponent list '" + text + "'");
    try {
      return static_cast<Int>(std::stoll(token));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("exponent out of range in '" + text + "'");
    }
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (auto caret = token.find('^'); caret != std::string::npos) {
      const Int value = parse_int(token.substr(0, caret));
      const Int count = parse_int(token.substr(caret + 1));
      if (count < 1 || count > 1'000'000) throw std::invalid_argument("bad repeat count in '" + token + "'");
      out.insert(out.end(), static_cast<std::size_t>(count), value);
    } else {
      out.push_back(parse_int(token));
    }
    start = comma + 1;
  }
  return out;
}

std::string format_exponents(const std::vector<Int>& exponents) {
  std::string s;
  for (std::size_t i = 0; i < exponents.size();) {
    std::size_t j = i;
    while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
    const std::size_t run = j - i;
    if (run >= 3) {
      if (!s.empty()) s += ",";
      s += std::to_string(exponents[i]) + "^" + std::to_string(run);
    } else {
      for (std::size_t t = i; t < j; ++t) {
        if (!s.empty()) s += ",";
        s += std::to_string(exponents[t]);
      }
    }
    i = j;
  }
  return s;
}

std::string csv_header() { return "p,k,canonical,g,d,verdict,candidate_count,witness_count"; }

std::string csv_row(const ResultRecord& r) {
  std::string canonical;
  for (std::size_t i = 0; i < r.canonical.size(); ++i) {
    if (i) canonical += " ";
    canonical += std::to_string(r.canonical[i]);
  }
  return std::to_string(r.p) + "," + std::to_string(r.k) + "," + canonical + "," + std::to_string(r.g) + "," +
         std::to_string(r.d) + "," + r.verdict + "," + std::to_string(r.candidates.size()) + "," +
         std::to_string(r.witnesses.size());
}

}  // namespace pgonal
