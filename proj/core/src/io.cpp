#include "orlicz/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orlicz/errors.hpp"

namespace orlicz::io {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

double number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw DomainError(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

double required(const json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return number(j, key, 0.0);
}

ProfileHead parse_head(const json& h) {
  const std::string kind = h.value("kind", "none");
  const json& params = h.contains("params") ? h.at("params") : h;
  if (kind == "none") return {};
  if (kind == "log" || kind == "log_singularity")
    return {ProfileHead::Kind::log, number(params, "scale", 1.0), 1.0, number(params, "end", 1.0)};
  if (kind == "inverse_power")
    return {ProfileHead::Kind::inverse_power, number(params, "scale", 1.0),
            required(params, "exponent"), number(params, "end", 1.0)};
  throw DomainError("unknown head kind '" + kind + "'");
}

Eigen::MatrixXcd parse_matrix_json(const json& j) {
  if (!j.is_object()) throw DomainError("matrix must be a JSON object");
  const auto n = static_cast<Eigen::Index>(required(j, "dim"));
  if (n < 1) throw DomainError("matrix dimension must be >= 1");
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw DomainError("matrix needs an 'entries' array");
  const json& e = j.at("entries");
  if (static_cast<Eigen::Index>(e.size()) != n * n)
    throw DomainError("matrix needs dim*dim entries");
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index k = 0; k < n * n; ++k) {
    const json& z = e[static_cast<std::size_t>(k)];
    std::complex<double> v;
    if (z.is_number())
      v = z.get<double>();
    else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number())
      v = {z[0].get<double>(), z[1].get<double>()};
    else
      throw DomainError("matrix entries must be numbers or [re, im] pairs");
    a(k / n, k % n) = v;
  }
  return a;
}

}  // namespace

DecreasingProfile parse_profile(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw DomainError("profile must be a JSON object");
  std::vector<Step> steps;
  if (j.contains("steps")) {
    for (const auto& s : j.at("steps")) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number())
        throw DomainError("steps must be [level, length] pairs");
      steps.push_back({s[0].get<double>(), s[1].get<double>()});
    }
  }
  ProfileHead head;
  if (j.contains("head")) head = parse_head(j.at("head"));
  ProfileTail tail;
  if (j.contains("tail")) {
    const json& t = j.at("tail");
    const std::string kind = t.value("kind", "zero");
    const json& params = t.contains("params") ? t.at("params") : t;
    if (kind == "zero") {
    } else if (kind == "exponential") {
      tail = ProfileTail::exponential(required(params, "amplitude"), required(params, "rate"));
    } else if (kind == "power") {
      tail = ProfileTail::power(required(params, "amplitude"), required(params, "exponent"),
                                number(params, "offset", 1.0));
    } else if (kind == "log_singularity" || kind == "inverse_power") {
      if (head.kind != ProfileHead::Kind::none) throw DomainError("profile has two singular parts");
      head = parse_head(t);
    } else {
      throw DomainError("unknown tail kind '" + kind + "'");
    }
  }
  return DecreasingProfile(std::move(steps), tail, head);
}

std::string profile_to_json(const DecreasingProfile& p) {
  json j;
  j["steps"] = json::array();
  for (const auto& s : p.steps()) j["steps"].push_back({s.level, s.length});
  const ProfileHead& h = p.head();
  if (h.kind == ProfileHead::Kind::log)
    j["head"] = {{"kind", "log"}, {"scale", h.scale}, {"end", h.end}};
  else if (h.kind == ProfileHead::Kind::inverse_power)
    j["head"] = {{"kind", "inverse_power"}, {"scale", h.scale}, {"exponent", h.exponent}, {"end", h.end}};
  const ProfileTail& t = p.tail();
  switch (t.kind) {
    case ProfileTail::Kind::zero: j["tail"] = {{"kind", "zero"}}; break;
    case ProfileTail::Kind::exponential:
      j["tail"] = {{"kind", "exponential"},
                   {"params", {{"amplitude", t.amplitude}, {"rate", t.rate}}}};
      break;
    case ProfileTail::Kind::power:
      j["tail"] = {{"kind", "power"},
                   {"params", {{"amplitude", t.amplitude}, {"exponent", t.exponent}, {"offset", t.offset}}}};
      break;
  }
  return j.dump();
}

MatrixObservable parse_matrix(std::string_view text) {
  return MatrixObservable(parse_matrix_json(parse_json(text)));
}

std::string matrix_to_json(const MatrixObservable& a) {
  json j;
  j["dim"] = a.dim();
  j["entries"] = json::array();
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) j["entries"].push_back({a.matrix()(r, c).real(), a.matrix()(r, c).imag()});
  return j.dump();
}

PositiveMap parse_map(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw DomainError("map must be a JSON object");
  const std::string kind = j.value("kind", "");
  PositiveMap m = [&] {
    if (kind == "pinching") {
      if (!j.contains("partition")) throw DomainError("pinching needs a 'partition'");
      std::vector<std::vector<int>> blocks;
      for (const auto& b : j.at("partition")) {
        std::vector<int> block;
        for (const auto& i : b) {
          if (!i.is_number_integer()) throw DomainError("partition entries must be integers");
          block.push_back(i.get<int>());
        }
        blocks.push_back(std::move(block));
      }
      return PositiveMap::pinching(std::move(blocks));
    }
    if (kind == "kraus") {
      if (!j.contains("kraus")) throw DomainError("kraus map needs a 'kraus' list");
      std::vector<Eigen::MatrixXcd> ops;
      for (const auto& k : j.at("kraus")) ops.push_back(parse_matrix_json(k));
      return PositiveMap::kraus(std::move(ops));
    }
    if (kind == "unitary_conjugation") {
      if (!j.contains("unitary")) throw DomainError("unitary conjugation needs a 'unitary'");
      return PositiveMap::unitary_conjugation(parse_matrix_json(j.at("unitary")));
    }
    throw DomainError("unknown map kind '" + kind + "'");
  }();
  if (j.contains("C")) {
    const double declared = required(j, "C");
    if (declared < m.trace_constant() * (1.0 - 1e-12))
      throw DomainError("declared trace constant is below the computed one");
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DecreasingProfile load_profile(const std::string& path) { return parse_profile(read_file(path)); }
MatrixObservable load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }
PositiveMap load_map(const std::string& path) { return parse_map(read_file(path)); }

SimpleFunction load_simple_function(const std::string& path, MeasureSpaceDesc space) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return SimpleFunction::load(in, space);
}

YoungFunction load_young(const std::string& spec) {
  try {
    return YoungFunction::parse(spec);
  } catch (const DomainError&) {
    if (!std::filesystem::is_regular_file(spec)) throw;
  }
  std::ifstream in(spec);
  return YoungFunction::load_tabulated(in);
}

}  // namespace orlicz::io
