// Command-line front end for the derived Hall algebra engine.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spherahall/io.hpp"
#include "spherahall/presentations.hpp"
#include "spherahall/sampling.hpp"

namespace fs = std::filesystem;
using namespace spherahall;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;
constexpr int kCeiling = 3;

const char* kConventions =
    "Conventions: Σ^k S has its homology in degree -k, so S[k] below means Σ^k S\n"
    "and Mn[k] means Σ^k(Γ/t^n). Products follow [X][Y] = Σ_Z F_XY^Z [Z], with\n"
    "F_XY^Z counting triangles Y -> Z -> X -> ΣY. Generators: x_i = Σ^{-2i}S,\n"
    "y_i = Σ^{-2i-1}S (d = 3); z_i = Σ^{-i}S; z_{i,j} = Σ^{-i}M_j (d = 1);\n"
    "z_i = Σ^{-i}T, z'_i = Σ^{-i}T' (d = 0).\n"
    "Objects: 0 | summand+summand+... with summands S[k], Mn[k], T[k], T'[k],\n"
    "shift:len[:branch], optionally prefixed by a count as in 2*S[-1]; or a JSON\n"
    "descriptor {\"d\":3,\"summands\":[{\"shift\":0,\"len\":1}]}.\n"
    "Exit codes: 0 pass, 1 verification failure, 2 bad input, 3 resource ceiling.";

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Content-addressed store of exact results; each file records its full key so
// hash collisions read as misses.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  bool enabled() const { return !dir_.empty(); }

  std::optional<json> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path(key));
    if (!in) return std::nullopt;
    try {
      json j = json::parse(in);
      if (j.value("key", "") != key) return std::nullopt;
      return j.at("value");
    } catch (const json::exception&) {
      return std::nullopt;
    }
  }

  void put(const std::string& key, const json& value) const {
    if (!enabled()) return;
    const fs::path final_path = path(key);
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
      std::ofstream out(tmp);
      out << json{{"key", key}, {"value", value}}.dump();
    }
    fs::rename(tmp, final_path);
  }

 private:
  fs::path path(const std::string& key) const {
    char name[17];
    std::snprintf(name, sizeof name, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return fs::path(dir_) / (std::string(name) + ".json");
  }

  std::string dir_;
};

struct Window {
  int lo = 0;
  int hi = 0;
};

Window parse_window(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw InvalidArgument("window must look like a..b");
  Window w{detail::parse_int(s.substr(0, dots)), detail::parse_int(s.substr(dots + 2))};
  if (w.lo > w.hi) throw InvalidArgument("window lower end exceeds upper end");
  return w;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  int d = 3;
  long q = 2;
  std::string cache_dir;
  std::uint64_t ceiling = 1'000'000;
  bool as_json = false;
  std::string window = "-2..2";
  int blocks = 3;
  int dim_bound = 2;
  int samples = 100;
  std::uint32_t seed = 7;
  std::vector<std::string> objects;
};

int cmd_product(const Options& o, const ResultCache& cache) {
  SphereDim dim{o.d};
  ObjClass x = parse_object(o.objects.at(0), dim), y = parse_object(o.objects.at(1), dim);
  if (x.dim() != y.dim()) throw InvalidArgument("objects over different d");
  PrimeField check(o.q);
  const std::string key = "product|d=" + std::to_string(x.dim().d) + "|q=" + std::to_string(o.q) + "|" + x.str() +
                          "|" + y.str();
  json out;
  if (auto hit = cache.get(key)) {
    out = *hit;
  } else {
    out = to_json(HallElement::basis(x, o.q) * HallElement::basis(y, o.q));
    out["kind"] = "element";
    cache.put(key, out);
  }
  emit(out);
  return kPass;
}

int cmd_number(const Options& o, const ResultCache& cache) {
  SphereDim dim{o.d};
  ObjClass x = parse_object(o.objects.at(0), dim), y = parse_object(o.objects.at(1), dim),
           z = parse_object(o.objects.at(2), dim);
  const std::string key = "number|d=" + std::to_string(x.dim().d) + "|q=" + std::to_string(o.q) + "|" + x.str() +
                          "|" + y.str() + "|" + z.str();
  std::string value;
  if (auto hit = cache.get(key)) {
    value = hit->get<std::string>();
  } else {
    value = hall_number(x, y, z, o.q).str();
    cache.put(key, value);
  }
  if (o.as_json) emit(json{{"kind", "number"}, {"q", o.q}, {"value", value}});
  else std::cout << value << "\n";
  return kPass;
}

int cmd_express(const Options& o, const ResultCache& cache) {
  ObjClass x = parse_object(o.objects.at(0), SphereDim{o.d});
  PrimeField check(o.q);
  const std::string key = "express|d=" + std::to_string(x.dim().d) + "|q=" + std::to_string(o.q) + "|" + x.str();
  json value;
  if (auto hit = cache.get(key)) {
    value = *hit;
  } else {
    NCPolynomial p = express_in_spheres(x, o.q);
    json terms = json::array();
    for (const auto& [word, c] : p.terms()) {
      json w = json::array();
      for (const auto& g : word) w.push_back(g.str());
      terms.push_back(json{{"coeff", rf_eval_at_q(c, o.q).str()}, {"word", std::move(w)}});
    }
    value = json{{"text", format_at_q(p, o.q)}, {"terms", std::move(terms)}};
    cache.put(key, value);
  }
  if (o.as_json)
    emit(json{{"kind", "express"}, {"q", o.q}, {"object", to_json(x)}, {"polynomial", value["text"]},
              {"terms", value["terms"]}});
  else
    std::cout << value["text"].get<std::string>() << "\n";
  return kPass;
}

int cmd_relations(const Options& o) {
  Window w = parse_window(o.window);
  PrimeField check(o.q);
  RelationReport rep = verify_relations(SphereDim{o.d}, w.lo, w.hi, o.q, o.blocks);
  std::size_t failed = 0;
  for (const auto& r : rep.results) failed += r.passed ? 0 : 1;
  if (o.as_json) {
    json results = json::array();
    for (const auto& r : rep.results)
      results.push_back(json{{"id", r.id}, {"relation", r.relation}, {"passed", r.passed}, {"residual", r.residual}});
    emit(json{{"kind", "relations"},
              {"d", o.d},
              {"q", o.q},
              {"window", {w.lo, w.hi}},
              {"blocks", o.blocks},
              {"passed", failed == 0},
              {"results", std::move(results)}});
  } else {
    for (const auto& r : rep.results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id;
      if (!r.passed) std::cout << "  residual: " << r.residual;
      std::cout << "\n";
    }
    std::cout << "relations: " << rep.results.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kPass : kFail;
}

int cmd_basis_check(const Options& o) {
  Window w = parse_window(o.window);
  PrimeField check(o.q);
  RankReport rep = basis_rank_check(w.lo, w.hi, o.dim_bound, o.q);
  if (o.as_json)
    emit(json{{"kind", "basis_check"},
              {"q", o.q},
              {"window", {w.lo, w.hi}},
              {"dim_bound", o.dim_bound},
              {"pairs", rep.pairs},
              {"classes", rep.columns},
              {"rank", rep.rank},
              {"passed", rep.full_rank()}});
  else
    std::cout << "pairs " << rep.pairs << ", classes " << rep.columns << ", rank " << rep.rank << ": "
              << (rep.full_rank() ? "full rank" : "rank deficient") << "\n";
  return rep.full_rank() ? kPass : kFail;
}

int cmd_torus_check(const Options& o) {
  TorusReport rep = torus_relations_check(o.seed);
  if (o.as_json)
    emit(json{{"kind", "torus_check"},
              {"seed", o.seed},
              {"relations_checked", rep.relations_checked},
              {"relations_zero", rep.relations_zero},
              {"commutators_checked", rep.commutators_checked},
              {"commutators_zero", rep.commutators_zero},
              {"failures", rep.failures},
              {"passed", rep.passed()}});
  else
    std::cout << "relations " << rep.relations_zero << "/" << rep.relations_checked << " vanish, commutators "
              << rep.commutators_zero << "/" << rep.commutators_checked << " vanish\n";
  return rep.passed() ? kPass : kFail;
}

int cmd_assoc(const Options& o) {
  SphereDim dim{o.d};
  PrimeField check(o.q);
  std::mt19937 rng(o.seed);
  json failures = json::array();
  for (int k = 0; k < o.samples; ++k) {
    ObjClass x = random_object(dim, rng, 4, -3, 3), y = random_object(dim, rng, 4, -3, 3),
             z = random_object(dim, rng, 4, -3, 3);
    if (!assoc_check(x, y, z, o.q)) {
      failures.push_back(json{to_json(x), to_json(y), to_json(z)});
      if (!o.as_json) std::cout << "FAIL " << x.str() << " | " << y.str() << " | " << z.str() << "\n";
    }
  }
  const bool passed = failures.empty();
  if (o.as_json)
    emit(json{{"kind", "assoc"},
              {"d", o.d},
              {"q", o.q},
              {"seed", o.seed},
              {"samples", o.samples},
              {"failures", std::move(failures)},
              {"passed", passed}});
  else
    std::cout << "associativity: " << o.samples << " triples, " << (passed ? "all pass" : "failures found") << "\n";
  return passed ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived Hall algebras of d-spherical objects over F_q"};
  app.footer(kConventions);
  app.require_subcommand(1);
  Options o;
  const char* env_cache = std::getenv("SPHERAHALL_CACHE");
  if (env_cache) o.cache_dir = env_cache;

  auto common = [&](CLI::App* c) {
    c->add_option("--d", o.d, "dimension d of the spherical object")->capture_default_str();
    c->add_option("--q", o.q, "prime field order")->capture_default_str();
    c->add_option("--cache", o.cache_dir, "result cache directory (also SPHERAHALL_CACHE)");
    c->add_option("--ceiling", o.ceiling, "largest hom space the oracle enumerates")->capture_default_str();
    c->add_flag("--json", o.as_json, "machine-readable report");
  };

  auto* product = app.add_subcommand("product", "expand [X][Y]");
  product->add_option("objects", o.objects, "X Y")->expected(2)->required();
  common(product);
  auto* number = app.add_subcommand("number", "Hall number F_XY^Z");
  number->add_option("objects", o.objects, "X Y Z")->expected(3)->required();
  common(number);
  auto* express = app.add_subcommand("express", "write [X] in the sphere generators (d = 3)");
  express->add_option("object", o.objects, "X")->expected(1)->required();
  common(express);
  auto* relations = app.add_subcommand("relations", "verify the presentation over an index window");
  relations->add_option("--window", o.window, "index window a..b")->capture_default_str();
  relations->add_option("--blocks", o.blocks, "largest Jordan block for d = 1")->capture_default_str();
  common(relations);
  auto* basis = app.add_subcommand("basis-check", "rank of the products [M][N] (d = 3)");
  basis->add_option("--window", o.window, "degree window a..b")->capture_default_str();
  basis->add_option("--dim", o.dim_bound, "total dimension bound")->capture_default_str();
  common(basis);
  auto* torus = app.add_subcommand("torus-check", "torus character of the d = 3 relations");
  torus->add_option("--seed", o.seed, "seed for the random commutators")->capture_default_str();
  common(torus);
  auto* assoc = app.add_subcommand("assoc", "associativity on seeded random triples");
  assoc->add_option("--samples", o.samples, "number of triples")->capture_default_str();
  assoc->add_option("--seed", o.seed, "sampler seed")->capture_default_str();
  common(assoc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    set_enumeration_ceiling(o.ceiling);
    ResultCache cache(o.cache_dir);
    if (product->parsed()) return cmd_product(o, cache);
    if (number->parsed()) return cmd_number(o, cache);
    if (express->parsed()) return cmd_express(o, cache);
    if (relations->parsed()) return cmd_relations(o);
    if (basis->parsed()) return cmd_basis_check(o);
    if (torus->parsed()) return cmd_torus_check(o);
    if (assoc->parsed()) return cmd_assoc(o);
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCeiling;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const WrongFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kBadInput;
}
