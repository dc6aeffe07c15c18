// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/bench/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "randbench/bitstream_io.hpp"
#include "randbench/error.hpp"

namespace randbench::bench {
namespace fs = std::filesystem;
namespace pt = boost::property_tree;
using nlohmann::json;

namespace {

// RFC 8439 block-function test key/nonce; the documented default source key.
constexpr std::string_view kDefaultChaChaKey =
    "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f";
constexpr std::string_view kDefaultChaChaNonce = "000000090000004a00000000";

std::string Trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitList(std::string_view s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Keys in one section plus where each came from.
struct Section {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
  std::map<std::string, std::string> origin;
};

class SectionReader {
 public:
  explicit SectionReader(const Section& section) : section_(section) {}

  std::optional<std::string> Take(const std::string& key) {
    for (const auto& [k, v] : section_.entries) {
      if (k == key) {
        used_.insert(key);
        return Trim(v);
      }
    }
    return std::nullopt;
  }

  std::string Origin(const std::string& key) const {
    auto it = section_.origin.find(key);
    return it == section_.origin.end() ? "default" : it->second;
  }

  [[noreturn]] void Fail(const std::string& key, const std::string& what) const {
    throw ConfigError("[" + section_.name + "] " + key + ": " + what);
  }

  template <typename T>
  std::optional<T> Integer(const std::string& key) {
    auto raw = Take(key);
    if (!raw) return std::nullopt;
    std::string digits;
    for (char c : *raw) {
      if (c != '_') digits.push_back(c);
    }
    T value{};
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      Fail(key, "expected an unsigned integer, got '" + *raw + "'");
    }
    return value;
  }

  std::optional<double> Real(const std::string& key) {
    auto raw = Take(key);
    if (!raw) return std::nullopt;
    try {
      std::size_t used = 0;
      double v = std::stod(*raw, &used);
      if (used != raw->size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      Fail(key, "expected a number, got '" + *raw + "'");
    }
  }

  std::optional<bool> Boolean(const std::string& key) {
    auto raw = Take(key);
    if (!raw) return std::nullopt;
    std::string v = *raw;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    Fail(key, "expected a boolean, got '" + *raw + "'");
  }

  void RejectUnknown() const {
    for (const auto& [k, v] : section_.entries) {
      if (!used_.count(k)) throw ConfigError("[" + section_.name + "] unknown key '" + k + "'");
    }
  }

 private:
  const Section& section_;
  std::set<std::string> used_;
};

std::vector<std::uint8_t> ParseHex(SectionReader& r, const std::string& key,
                                   std::string_view hex, std::size_t bytes) {
  if (hex.size() != 2 * bytes) {
    r.Fail(key, "expected " + std::to_string(2 * bytes) + " hex digits");
  }
  std::vector<std::uint8_t> out(bytes);
  for (std::size_t i = 0; i < bytes; ++i) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(hex.data() + 2 * i, hex.data() + 2 * i + 2, v, 16);
    if (ec != std::errc() || ptr != hex.data() + 2 * i + 2) r.Fail(key, "invalid hex");
    out[i] = static_cast<std::uint8_t>(v);
  }
  return out;
}

std::vector<Section> ReadSections(std::string_view text, const std::string& origin) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    std::string msg = e.message();
    if (msg.find("duplicate section") != std::string::npos) {
      throw ConfigError("line " + std::to_string(e.line()) + ": duplicate section (source labels must be unique): " + msg);
    }
    throw ConfigError("line " + std::to_string(e.line()) + ": " + msg);
  }
  std::vector<Section> sections;
  for (const auto& [name, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("key '" + name + "' outside of any section");
    }
    Section s;
    s.name = name;
    for (const auto& [key, value] : body) {
      s.entries.emplace_back(key, value.data());
      s.origin[key] = origin;
    }
    sections.push_back(std::move(s));
  }
  return sections;
}

void Overlay(std::vector<Section>& base, const std::vector<Section>& top) {
  for (const Section& t : top) {
    auto it = std::find_if(base.begin(), base.end(),
                           [&](const Section& b) { return b.name == t.name; });
    if (it == base.end()) {
      base.push_back(t);
      continue;
    }
    for (const auto& [k, v] : t.entries) {
      auto e = std::find_if(it->entries.begin(), it->entries.end(),
                            [&](const auto& kv) { return kv.first == k; });
      if (e == it->entries.end()) {
        it->entries.emplace_back(k, v);
      } else {
        e->second = v;
      }
      it->origin[k] = t.origin.at(k);
    }
  }
}

bool ValidLabel(std::string_view label) {
  return !label.empty() && std::all_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.';
  });
}

void ParseStages(SectionReader& r, bool& pre, bool& post) {
  if (auto stages = r.Take("stages")) {
    pre = post = false;
    for (const std::string& s : SplitList(*stages)) {
      if (s == "pre") {
        pre = true;
      } else if (s == "post") {
        post = true;
      } else {
        r.Fail("stages", "unknown stage '" + s + "' (expected pre, post)");
      }
    }
  }
}

SourceSpec ParseSource(const Section& section, const std::string& label,
                       const fs::path& base_dir, RunConfig& cfg) {
  SectionReader r(section);
  const std::string prefix = "source." + label + ".";
  std::optional<decltype(SourceSpec::params)> params;
  std::size_t requested = 0;
  auto kind = r.Take("kind");
  if (!kind) r.Fail("kind", "missing (lcg, chacha20 or external)");
  cfg.provenance[prefix + "kind"] = r.Origin("kind");
  auto bits = r.Integer<std::size_t>("bits");
  cfg.provenance[prefix + "bits"] = bits ? r.Origin("bits") : "default";

  if (*kind == "lcg") {
    unsigned k = r.Integer<unsigned>("k").value_or(24);
    std::uint64_t x0 = r.Integer<std::uint64_t>("x0").value_or(1);
    unsigned set = r.Integer<unsigned>("set").value_or(1);
    if (set != 1 && set != 2) r.Fail("set", "must be 1 or 2");
    auto a = r.Integer<std::uint64_t>("a");
    auto c = r.Integer<std::uint64_t>("c");
    try {
      LcgParams defaults = DefaultLcg(set == 1 ? LcgParameterSet::kSet1 : LcgParameterSet::kSet2, k);
      params = LcgParams(a.value_or(defaults.a()), c.value_or(defaults.c()), k, x0);
    } catch (const ParameterError& e) {
      r.Fail("lcg", e.what());
    }
    for (const char* key : {"k", "x0", "set", "a", "c"}) {
      cfg.provenance[prefix + key] = r.Origin(key);
    }
    requested = bits.value_or(kDefaultRawBits);
  } else if (*kind == "chacha20") {
    ChaChaParams p;
    std::string key = r.Take("key").value_or(std::string(kDefaultChaChaKey));
    std::string nonce = r.Take("nonce").value_or(std::string(kDefaultChaChaNonce));
    auto kb = ParseHex(r, "key", key, 32);
    auto nb = ParseHex(r, "nonce", nonce, 12);
    std::copy(kb.begin(), kb.end(), p.key.begin());
    std::copy(nb.begin(), nb.end(), p.nonce.begin());
    p.initial_counter = r.Integer<std::uint32_t>("counter").value_or(1);
    for (const char* k : {"key", "nonce", "counter"}) cfg.provenance[prefix + k] = r.Origin(k);
    params = p;
    requested = bits.value_or(kDefaultRawBits);
  } else if (*kind == "external") {
    auto path = r.Take("path");
    if (!path) r.Fail("path", "required for external sources");
    ExternalSource ext;
    ext.path = fs::path(*path).is_absolute() ? fs::path(*path) : base_dir / *path;
    try {
      ext.format = ParseFileFormat(r.Take("format").value_or("packed"));
    } catch (const ParameterError& e) {
      r.Fail("format", e.what());
    }
    params = ext;
    requested = bits.value_or(0);
  } else {
    r.Fail("kind", "unknown source kind '" + *kind + "'");
  }
  r.RejectUnknown();
  return SourceSpec{label, std::move(*params), requested};
}

RunConfig BuildConfig(const std::vector<Section>& sections, const fs::path& base_dir) {
  RunConfig cfg;
  for (const Section& section : sections) {
    SectionReader r(section);
    const std::string& name = section.name;
    if (name.rfind("source.", 0) == 0) {
      std::string label = name.substr(7);
      if (!ValidLabel(label)) {
        throw ConfigError("invalid source label '" + label + "' (use letters, digits, _ - .)");
      }
      cfg.sources.push_back(ParseSource(section, label, base_dir, cfg));
      continue;
    }
    if (name == "run") {
      if (auto out = r.Take("output_dir")) cfg.output_dir = *out;
      cfg.source_threads = r.Integer<unsigned>("threads").value_or(1);
      if (cfg.source_threads == 0) r.Fail("threads", "must be positive");
      cfg.provenance["run.output_dir"] = r.Origin("output_dir");
      cfg.provenance["run.threads"] = r.Origin("threads");
    } else if (name == "extractor") {
      ExtractorConfig& e = cfg.extractor;
      e.enabled = r.Boolean("enabled").value_or(true);
      e.n = r.Integer<std::size_t>("n").value_or(e.n);
      e.m = r.Integer<std::size_t>("m").value_or(e.m);
      e.seed_value = r.Integer<std::uint32_t>("seed_value").value_or(e.seed_value);
      auto inline_seed = r.Take("seed");
      auto seed_file = r.Take("seed_file");
      auto seed_format = r.Take("seed_format");
      if (inline_seed && seed_file) r.Fail("seed", "give either seed or seed_file, not both");
      try {
        if (inline_seed) e.explicit_seed = FromAscii(*inline_seed);
        if (seed_file) {
          fs::path p = fs::path(*seed_file).is_absolute() ? fs::path(*seed_file) : base_dir / *seed_file;
          e.explicit_seed = ReadStream(p, ParseFileFormat(seed_format.value_or("ascii")));
        }
      } catch (const Error& ex) {
        r.Fail(inline_seed ? "seed" : "seed_file", ex.what());
      }
      if (auto t = r.Take("target_bits")) {
        if (*t == "all") {
          e.target_bits.reset();
        } else {
          std::size_t v = 0;
          auto [ptr, ec] = std::from_chars(t->data(), t->data() + t->size(), v);
          if (ec != std::errc() || ptr != t->data() + t->size()) r.Fail("target_bits", "expected an integer or 'all'");
          e.target_bits = v;
        }
      }
      if (auto sweep = r.Take("sweep_targets")) {
        for (const std::string& item : SplitList(*sweep)) {
          std::size_t v = 0;
          auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
          if (ec != std::errc() || ptr != item.data() + item.size() || v == 0) {
            r.Fail("sweep_targets", "expected positive integers");
          }
          e.sweep_targets.push_back(v);
        }
      }
      e.rerun_on_sts_failure = r.Boolean("rerun_on_sts_failure").value_or(false);
      for (const char* k : {"enabled", "n", "m", "seed_value", "seed", "seed_file", "target_bits",
                            "sweep_targets", "rerun_on_sts_failure"}) {
        cfg.provenance[std::string("extractor.") + k] = r.Origin(k);
      }
      if (e.m == 0 || e.m >= e.n) {
        throw ConfigError("[extractor] inconsistent geometry: need 0 < m < n, got n=" +
                          std::to_string(e.n) + " m=" + std::to_string(e.m));
      }
      if (e.explicit_seed && e.explicit_seed->size() != e.n + e.m - 1) {
        throw ConfigError("[extractor] seed length " + std::to_string(e.explicit_seed->size()) +
                          " does not equal n+m-1 = " + std::to_string(e.n + e.m - 1));
      }
      if (e.explicit_seed && (!e.sweep_targets.empty() || e.rerun_on_sts_failure)) {
        throw ConfigError("[extractor] sweep_targets and rerun_on_sts_failure need an MT19937 seed (seed_value), not explicit seed bits");
      }
    } else if (name == "sts") {
      sts::StsProfile& p = cfg.sts;
      p.alpha = r.Real("alpha").value_or(p.alpha);
      cfg.sts_threads = r.Integer<unsigned>("threads").value_or(1);
      p.block_frequency_block = r.Integer<unsigned>("block_frequency_block").value_or(p.block_frequency_block);
      p.nonoverlapping_template_length = r.Integer<unsigned>("nonoverlapping_template_length").value_or(p.nonoverlapping_template_length);
      p.overlapping_template_length = r.Integer<unsigned>("overlapping_template_length").value_or(p.overlapping_template_length);
      p.overlapping_block = r.Integer<unsigned>("overlapping_block").value_or(p.overlapping_block);
      p.linear_complexity_block = r.Integer<unsigned>("linear_complexity_block").value_or(p.linear_complexity_block);
      p.serial_length = r.Integer<unsigned>("serial_length").value_or(p.serial_length);
      p.approximate_entropy_length = r.Integer<unsigned>("approximate_entropy_length").value_or(p.approximate_entropy_length);
      p.universal_block_length = r.Integer<unsigned>("universal_block_length").value_or(p.universal_block_length);
      if (!(p.alpha > 0.0 && p.alpha < 1.0)) r.Fail("alpha", "must be in (0, 1)");
      for (const auto& [k, v] : section.entries) cfg.provenance["sts." + k] = r.Origin(k);
    } else if (name == "measures") {
      MeasuresConfig& m = cfg.measures;
      if (auto enabled = r.Take("enabled")) {
        for (const std::string& item : SplitList(*enabled)) {
          if (item == "sts") {
            m.enabled.insert(Measure::kSts);
          } else if (item == "lz76") {
            m.enabled.insert(Measure::kLz76);
          } else if (item == "borel") {
            m.enabled.insert(Measure::kBorel);
          } else if (item != "none") {
            r.Fail("enabled", "unknown measure '" + item + "' (expected sts, lz76, borel)");
          }
        }
      }
      ParseStages(r, m.pre, m.post);
      m.borel_max_level = r.Integer<unsigned>("borel_max_level").value_or(m.borel_max_level);
      if (m.borel_max_level < 1 || m.borel_max_level > 16) r.Fail("borel_max_level", "must be in [1, 16]");
      if (auto ref = r.Take("lz76_reference")) {
        if (*ref == "mt19937") {
          m.lz76_reference = Lz76Reference::kMt19937;
        } else if (*ref == "recorded") {
          m.lz76_reference = Lz76Reference::kRecorded;
        } else {
          r.Fail("lz76_reference", "expected mt19937 or recorded");
        }
      }
      m.lz76_reference_bits = r.Integer<std::size_t>("lz76_reference_bits");
      for (const char* k : {"enabled", "stages", "borel_max_level", "lz76_reference", "lz76_reference_bits"}) {
        cfg.provenance[std::string("measures.") + k] = r.Origin(k);
      }
    } else if (name == "predictor_export") {
      PredictorExportConfig& p = cfg.predictor_export;
      p.enabled = r.Boolean("enabled").value_or(true);
      ParseStages(r, p.pre, p.post);
      p.window = r.Integer<std::size_t>("window").value_or(p.window);
      p.stride = r.Integer<std::size_t>("stride").value_or(p.stride);
      p.split = r.Real("split").value_or(p.split);
      p.shuffle_seed = r.Integer<std::uint64_t>("shuffle_seed").value_or(p.shuffle_seed);
      if (p.window == 0) r.Fail("window", "must be positive");
      if (p.stride == 0) r.Fail("stride", "must be positive");
      if (!(p.split > 0.0 && p.split < 1.0)) r.Fail("split", "must be in (0, 1)");
      for (const char* k : {"enabled", "stages", "window", "stride", "split", "shuffle_seed"}) {
        cfg.provenance[std::string("predictor_export.") + k] = r.Origin(k);
      }
    } else {
      throw ConfigError("unknown section [" + name + "]");
    }
    r.RejectUnknown();
  }
  if (cfg.measures.lz76_reference == Lz76Reference::kMt19937 &&
      cfg.extractor.explicit_seed && cfg.measures.enabled.count(Measure::kLz76)) {
    throw ConfigError("[measures] lz76_reference = mt19937 needs an MT19937 extractor seed (seed_value), not explicit seed bits");
  }
  return cfg;
}

void CheckFilesExist(const RunConfig& cfg) {
  for (const SourceSpec& s : cfg.sources) {
    if (s.kind() != SourceSpec::Kind::kExternal) continue;
    const auto& ext = std::get<ExternalSource>(s.params);
    if (!fs::exists(ext.path)) {
      throw ConfigError("[source." + s.label + "] file not found: " + ext.path.string());
    }
    if (ext.format == FileFormat::kPacked && !fs::exists(DescriptorPath(ext.path))) {
      throw ConfigError("[source." + s.label + "] descriptor not found: " +
                        DescriptorPath(ext.path).string());
    }
  }
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr std::string_view kThreeSources = R"(
[source.lcg_a1c1_k24]
kind = lcg
set = 1
k = 24

[source.lcg_a2c2_k24]
kind = lcg
set = 2
k = 24

[source.chacha20]
kind = chacha20
)";

std::string AllLcgSources() {
  std::string out;
  for (unsigned k : LcgParams::kSupportedExponents) {
    for (unsigned set : {1U, 2U}) {
      std::string label = "lcg_a" + std::to_string(set) + "c" + std::to_string(set) + "_k" + std::to_string(k);
      out += "\n[source." + label + "]\nkind = lcg\nset = " + std::to_string(set) +
             "\nk = " + std::to_string(k) + "\n";
    }
  }
  out += "\n[source.chacha20]\nkind = chacha20\n";
  return out;
}

}  // namespace

std::string_view MeasureName(Measure m) {
  switch (m) {
    case Measure::kSts: return "sts";
    case Measure::kLz76: return "lz76";
    case Measure::kBorel: return "borel";
  }
  return "unknown";
}

RunConfig ParseConfig(std::string_view text, const fs::path& base_dir) {
  return BuildConfig(ReadSections(text, "config"), base_dir);
}

RunConfig ValidateConfig(const fs::path& path) {
  RunConfig cfg = ParseConfig(ReadText(path), path.parent_path());
  if (cfg.sources.empty()) throw ConfigError(path.string() + ": no [source.<label>] sections");
  CheckFilesExist(cfg);
  return cfg;
}

std::vector<std::string> PresetNames() {
  return {"case1", "case2", "case3", "case4", "case5", "case6"};
}

std::string PresetText(std::string_view name) {
  if (name == "case1") {
    return std::string("[extractor]\nenabled = false\n\n[measures]\nenabled = sts\nstages = pre\n") +
           std::string(kThreeSources);
  }
  if (name == "case2") {
    return std::string("[extractor]\nenabled = true\ntarget_bits = 1200000\nrerun_on_sts_failure = true\n\n"
                       "[measures]\nenabled = sts\nstages = post\n") +
           std::string(kThreeSources);
  }
  if (name == "case3") {
    return "[extractor]\nenabled = false\n\n[measures]\nenabled = none\n\n"
           "[predictor_export]\nenabled = true\nstages = pre\n" + AllLcgSources();
  }
  if (name == "case4") {
    return std::string("[extractor]\nenabled = true\ntarget_bits = 1200000\n"
                       "sweep_targets = 1000000, 1200000, 1500000, 2000000\n\n"
                       "[measures]\nenabled = none\n\n"
                       "[predictor_export]\nenabled = true\nstages = post\n") +
           std::string(kThreeSources);
  }
  if (name == "case5") {
    return "[extractor]\nenabled = true\ntarget_bits = 1200000\n\n"
           "[measures]\nenabled = lz76\nstages = pre, post\n" + AllLcgSources();
  }
  if (name == "case6") {
    return "[extractor]\nenabled = true\ntarget_bits = 1200000\n\n"
           "[measures]\nenabled = borel\nstages = pre, post\nborel_max_level = 4\n" + AllLcgSources();
  }
  throw ConfigError("unknown preset '" + std::string(name) + "' (expected case1..case6)");
}

RunConfig ResolveConfig(std::optional<fs::path> config_path, std::optional<std::string> preset) {
  if (!config_path && !preset) throw ConfigError("need a config file, a preset, or both");
  std::vector<Section> sections;
  if (preset) sections = ReadSections(PresetText(*preset), "preset:" + *preset);
  fs::path base_dir;
  if (config_path) {
    base_dir = config_path->parent_path();
    Overlay(sections, ReadSections(ReadText(*config_path), "config"));
  }
  RunConfig cfg = BuildConfig(sections, base_dir);
  if (cfg.sources.empty()) throw ConfigError("no [source.<label>] sections");
  CheckFilesExist(cfg);
  if (preset) {
    cfg.preset = *preset;
    auto it = cfg.provenance.find("run.output_dir");
    if (it == cfg.provenance.end() || it->second == "default") {
      cfg.output_dir = "run-" + *preset;
      cfg.provenance["run.output_dir"] = "preset:" + *preset;
    }
  }
  return cfg;
}

json ConfigToJson(const RunConfig& cfg) {
  json j;
  j["preset"] = cfg.preset.empty() ? json(nullptr) : json(cfg.preset);
  j["output_dir"] = cfg.output_dir.string();
  j["threads"] = cfg.source_threads;
  json sources = json::array();
  for (const SourceSpec& s : cfg.sources) {
    json src = {{"label", s.label}, {"kind", SourceKindName(s.kind())}, {"bits", s.requested_bits}};
    if (const auto* lcg = std::get_if<LcgParams>(&s.params)) {
      src["a"] = lcg->a();
      src["c"] = lcg->c();
      src["k"] = lcg->k();
      src["x0"] = lcg->x0();
    } else if (const auto* cc = std::get_if<ChaChaParams>(&s.params)) {
      std::ostringstream key, nonce;
      for (auto b : cc->key) key << "0123456789abcdef"[b >> 4] << "0123456789abcdef"[b & 15];
      for (auto b : cc->nonce) nonce << "0123456789abcdef"[b >> 4] << "0123456789abcdef"[b & 15];
      src["key"] = key.str();
      src["nonce"] = nonce.str();
      src["counter"] = cc->initial_counter;
      src["rounds"] = ChaChaParams::kRounds;
    } else if (const auto* ext = std::get_if<ExternalSource>(&s.params)) {
      src["path"] = ext->path.string();
      src["format"] = FileFormatName(ext->format);
    }
    sources.push_back(std::move(src));
  }
  j["sources"] = std::move(sources);
  const ExtractorConfig& e = cfg.extractor;
  j["extractor"] = {
      {"enabled", e.enabled},
      {"n", e.n},
      {"m", e.m},
      {"seed_provenance", e.explicit_seed ? "config" : "mt19937"},
      {"seed_value", e.explicit_seed ? json(nullptr) : json(e.seed_value)},
      {"seed_sha256", e.explicit_seed ? json(Sha256Hex(*e.explicit_seed)) : json(nullptr)},
      {"target_bits", e.target_bits ? json(*e.target_bits) : json("all")},
      {"sweep_targets", e.sweep_targets},
      {"rerun_on_sts_failure", e.rerun_on_sts_failure},
  };
  json measures = json::array();
  for (Measure m : cfg.measures.enabled) measures.push_back(MeasureName(m));
  json stages = json::array();
  if (cfg.measures.pre) stages.push_back("pre");
  if (cfg.measures.post) stages.push_back("post");
  j["measures"] = {
      {"enabled", measures},
      {"stages", stages},
      {"borel_max_level", cfg.measures.borel_max_level},
      {"lz76_reference", cfg.measures.lz76_reference == Lz76Reference::kMt19937 ? "mt19937" : "recorded"},
      {"lz76_reference_bits", cfg.measures.lz76_reference_bits ? json(*cfg.measures.lz76_reference_bits) : json(nullptr)},
  };
  const sts::StsProfile& p = cfg.sts;
  j["sts"] = {
      {"alpha", p.alpha},
      {"threads", cfg.sts_threads},
      {"block_frequency_block", p.block_frequency_block},
      {"nonoverlapping_template_length", p.nonoverlapping_template_length},
      {"overlapping_template_length", p.overlapping_template_length},
      {"overlapping_block", p.overlapping_block},
      {"linear_complexity_block", p.linear_complexity_block},
      {"serial_length", p.serial_length},
      {"approximate_entropy_length", p.approximate_entropy_length},
      {"universal_block_length", p.universal_block_length},
  };
  const PredictorExportConfig& x = cfg.predictor_export;
  json xstages = json::array();
  if (x.pre) xstages.push_back("pre");
  if (x.post) xstages.push_back("post");
  j["predictor_export"] = {
      {"enabled", x.enabled}, {"stages", xstages}, {"window", x.window},
      {"stride", x.stride},   {"split", x.split},  {"shuffle_seed", x.shuffle_seed},
  };
  j["provenance"] = cfg.provenance;
  return j;
}

}  // namespace randbench::bench
