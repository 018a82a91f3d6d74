#include "distlab/table_cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "json.hpp"

namespace distlab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* side_str(Side s) { return s == Side::Ext ? "ext" : "base"; }

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
};

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

json group_json(const MatrixGroup& g) {
  const auto key = CacheKey::of(g);
  return json{{"name", g.name()}, {"kind", kind_name(key.kind)}, {"n", key.n},          {"p", key.p},
              {"f", key.f},        {"side", side_str(key.side)},  {"order", g.order()}};
}

}  // namespace

CacheKey CacheKey::of(const MatrixGroup& g, int version) {
  return CacheKey{g.kind(), g.n(), g.tower().p(), g.tower().f(), g.side(), version};
}

std::string CacheKey::file_name() const {
  std::ostringstream os;
  os << kind_name(kind) << "_n" << n << "_p" << p << "_f" << f << "_" << side_str(side) << "_v" << version
     << ".json";
  return os.str();
}

std::uint64_t class_digest(const MatrixGroup& g, const ConjugacyClasses& cc) {
  Fnv f;
  f.add(static_cast<std::uint64_t>(g.order()));
  f.add(static_cast<std::uint64_t>(cc.count()));
  for (int c = 0; c < cc.count(); ++c) {
    f.add(g.key(cc.reps[c]));
    f.add(static_cast<std::uint64_t>(cc.sizes[c]));
    f.add(static_cast<std::uint64_t>(cc.orders[c]));
  }
  for (int c : cc.class_of) f.add(static_cast<std::uint64_t>(c));
  return f.h;
}

std::string table_to_text(const CharacterTable& t) {
  json chars = json::array();
  for (const auto& chi : t.characters()) {
    json vals = json::array();
    for (const auto& v : chi.values) {
      json terms = json::array();
      for (const auto& term : v.terms()) terms.push_back({term.exp, term.coeff});
      vals.push_back({v.order(), terms});
    }
    chars.push_back({{"degree", chi.degree}, {"values", vals}});
  }
  json doc{{"format", "distlab-character-table"},
           {"version", kCacheFormatVersion},
           {"group", group_json(t.group())},
           {"class_digest", hex(class_digest(t.group(), t.classes()))},
           {"class_count", t.classes().count()},
           {"exponent", t.exponent()},
           {"ell", t.meta().ell},
           {"seed", t.meta().seed},
           {"characters", chars}};
  return doc.dump() + "\n";
}

std::optional<TablePtr> table_from_text(const std::string& text, GroupPtr g, ClassesPtr cc, std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<TablePtr> {
    if (why) *why = msg;
    return std::nullopt;
  };
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return fail("unparseable");
  try {
    if (doc.at("format") != "distlab-character-table") return fail("wrong format tag");
    if (doc.at("version").get<int>() != kCacheFormatVersion) return fail("version mismatch");
    if (doc.at("group") != group_json(*g)) return fail("group metadata mismatch");
    if (doc.at("class_digest").get<std::string>() != hex(class_digest(*g, *cc))) return fail("class digest mismatch");
    if (doc.at("exponent").get<std::int64_t>() != cc->exponent) return fail("exponent mismatch");
    std::vector<Character> chars;
    for (const auto& jc : doc.at("characters")) {
      Character chi;
      chi.degree = jc.at("degree").get<std::int64_t>();
      for (const auto& jv : jc.at("values")) {
        const auto order = jv.at(0).get<std::uint32_t>();
        if (order == 0 || cc->exponent % order != 0) return fail("bad value order");
        std::vector<CycloTerm> terms;
        for (const auto& jt : jv.at(1)) {
          const auto exp = jt.at(0).get<std::uint32_t>();
          if (exp >= order) return fail("bad exponent");
          terms.push_back({exp, jt.at(1).get<std::int64_t>()});
        }
        chi.values.push_back(CyclotomicValue::from_terms(order, std::move(terms)));
      }
      if (chi.values.size() != static_cast<std::size_t>(cc->count())) return fail("wrong number of values");
      chars.push_back(std::move(chi));
    }
    TableMeta meta{doc.at("ell").get<std::uint64_t>(), doc.at("seed").get<std::uint64_t>(), 0, true};
    auto t = std::make_shared<CharacterTable>(std::move(g), std::move(cc), std::move(chars), meta);
    const auto v = validate_table(*t);
    if (!v.ok()) return fail("validation: " + v.failure);
    return TablePtr(t);
  } catch (const std::exception& e) {
    return fail(std::string("malformed: ") + e.what());
  }
}

std::string default_cache_dir() {
  const char* d = std::getenv("DISTLAB_CACHE_DIR");
  return d ? std::string(d) : std::string();
}

std::optional<TablePtr> cache_read(const std::string& dir, GroupPtr g, ClassesPtr cc, std::string* why) {
  if (dir.empty()) return std::nullopt;
  const fs::path path = fs::path(dir) / CacheKey::of(*g).file_name();
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (why) *why = "no entry";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return table_from_text(ss.str(), std::move(g), std::move(cc), why);
}

void cache_write(const std::string& dir, const CharacterTable& t) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / CacheKey::of(t.group()).file_name();
  const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << table_to_text(t);
    if (!out) throw std::runtime_error("cache_write: cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

TablePtr cached_character_table(GroupPtr g, ClassesPtr cc, const std::string& dir, const DixonOptions& opts,
                                std::string* note) {
  std::string why;
  if (auto t = cache_read(dir, g, cc, &why)) return *t;
  if (note && !dir.empty() && why != "no entry") *note = "cache entry rejected: " + why;
  auto t = character_table(std::move(g), std::move(cc), opts);
  cache_write(dir, *t);
  return t;
}

}  // namespace distlab
