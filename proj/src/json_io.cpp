#include "trinb/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trinb/error.hpp"

namespace trinb {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Shape parse_dims(const ordered_json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("\"dims\" must be a nonempty array");
  std::vector<int> dims;
  for (const auto& d : j) {
    int m = as_int(d, "dimension");
    if (m < 1) throw ParseError("dimensions must be at least 1");
    dims.push_back(m);
  }
  try {
    return Shape(std::move(dims));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::vector<Alternative> parse_alternatives(const ordered_json& j, const Shape& shape, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array");
  std::vector<Alternative> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw ParseError(std::string("entries of \"") + what + "\" must be strings");
    out.push_back(parse_alternative(s.get<std::string>(), shape));
  }
  return out;
}

std::vector<int> parse_map(const ordered_json& j, int levels, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != levels)
    throw ParseError(std::string(what) + " map must list one entry per level");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

ordered_json alternatives_json(std::vector<Alternative> xs, const Shape& shape) {
  ordered_json a = ordered_json::array();
  for (const auto& x : sorted_unique(std::move(xs))) a.push_back(to_string(x, shape));
  return a;
}

/// One top-level key per line, values compact.
std::string dump_flat(const ordered_json& j) {
  std::string out = "{\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k)
    out += "  " + ordered_json(it.key()).dump() + ": " + it.value().dump() + (k + 1 < j.size() ? ",\n" : "\n");
  return out + "}\n";
}

}  // namespace

TwofoldPartition parse_partition_json(std::string_view text) {
  ordered_json j = parse(text);
  Shape shape = parse_dims(field(j, "dims"));
  return TwofoldPartition::from_satisfactory(shape, parse_alternatives(field(j, "A"), shape, "A"));
}

std::string partition_to_json(const TwofoldPartition& p) {
  ordered_json j;
  j["dims"] = p.shape().dims();
  j["A"] = alternatives_json(p.satisfactory_set(), p.shape());
  return dump_flat(j);
}

OutrankingSpec parse_spec_json(std::string_view text) {
  ordered_json j = parse(text);
  OutrankingSpec spec = OutrankingSpec::plain(parse_dims(field(j, "dims")));
  const Shape& shape = spec.shape;
  const int n = shape.attributes();

  auto per_attribute = [&](const char* key, const char* keyword, auto&& apply) {
    auto it = j.find(key);
    if (it == j.end()) return;
    if (it->is_string()) {
      if (it->get<std::string>() != keyword) throw ParseError(std::string("\"") + key + "\" must be an array or \"" + keyword + "\"");
      return;
    }
    if (!it->is_array() || static_cast<int>(it->size()) != n)
      throw ParseError(std::string("\"") + key + "\" must list one entry per attribute");
    for (int i = 0; i < n; ++i) {
      const auto& e = (*it)[static_cast<std::size_t>(i)];
      if (e.is_string() && e.get<std::string>() == keyword) continue;
      apply(i, parse_map(e, shape.levels(i), key));
    }
  };
  per_attribute("semiorders", "identity", [&](int i, std::vector<int> t) { spec.semiorders[static_cast<std::size_t>(i)].threshold = std::move(t); });
  per_attribute("vetoes", "none", [&](int i, std::vector<int> v) { spec.vetoes[static_cast<std::size_t>(i)].threshold = std::move(v); });

  if (auto it = j.find("coalitions"); it != j.end()) {
    if (!it->is_array()) throw ParseError("\"coalitions\" must be an array of attribute lists");
    std::vector<std::uint32_t> gens;
    for (const auto& c : *it) {
      if (!c.is_array()) throw ParseError("each coalition must be an array of 1-based attribute indices");
      std::uint32_t mask = 0;
      for (const auto& a : c) {
        int k = as_int(a, "attribute index");
        if (k < 1 || k > n) throw ParseError("attribute index " + std::to_string(k) + " out of range");
        mask |= std::uint32_t{1} << (k - 1);
      }
      gens.push_back(mask);
    }
    if (n > CoalitionFamily::kMaxAttributes) throw ParseError("too many attributes for a coalition family");
    spec.coalitions = CoalitionFamily(n, std::move(gens));
  }
  spec.profiles = sorted_unique(parse_alternatives(field(j, "profiles"), shape, "profiles"));
  return spec;
}

std::string spec_to_json(const OutrankingSpec& spec, std::optional<Rule> rule) {
  ordered_json j;
  j["dims"] = spec.shape.dims();
  if (spec.identity_semiorders()) {
    j["semiorders"] = "identity";
  } else {
    ordered_json s = ordered_json::array();
    for (const auto& t : spec.semiorders) s.push_back(t.is_identity() ? ordered_json("identity") : ordered_json(t.threshold));
    j["semiorders"] = s;
  }
  if (spec.no_vetoes()) {
    j["vetoes"] = "none";
  } else {
    ordered_json v = ordered_json::array();
    for (const auto& r : spec.vetoes) v.push_back(r.empty() ? ordered_json("none") : ordered_json(r.threshold));
    j["vetoes"] = v;
  }
  ordered_json c = ordered_json::array();
  for (std::uint32_t mask : spec.coalitions.minimal()) {
    ordered_json members = ordered_json::array();
    for (int i = 0; i < spec.coalitions.attributes(); ++i)
      if (mask >> i & 1u) members.push_back(i + 1);
    c.push_back(members);
  }
  j["coalitions"] = c;
  j["profiles"] = alternatives_json(spec.profiles, spec.shape);
  if (rule) j["rule"] = std::string(to_string(*rule));
  return dump_flat(j);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace trinb
