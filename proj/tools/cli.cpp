#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <regex>

#include "scknot/braid_text.hpp"
#include "scknot/closure.hpp"
#include "scknot/coset.hpp"
#include "scknot/invariants.hpp"
#include "scknot/lcs.hpp"
#include "scknot/magnus.hpp"
#include "scknot/search.hpp"
#include "scknot/suites.hpp"

namespace scknot::cli {

namespace {

using Json = nlohmann::ordered_json;

// Ordered key/value report; the text form prints "key: value" lines and the
// JSON form carries the same keys.
class Report {
 public:
  void put(const std::string& key, const std::string& text, Json value) {
    lines_.push_back(key + ": " + text);
    json_[key] = std::move(value);
  }
  void put(const std::string& key, const std::string& value) { put(key, value, value); }
  void put(const std::string& key, std::int64_t value) { put(key, std::to_string(value), value); }
  // Text form: the item count, then one bare line per item.
  void put_list(const std::string& key, const std::vector<std::string>& text, Json items) {
    lines_.push_back(key + ": " + std::to_string(text.size()));
    lines_.insert(lines_.end(), text.begin(), text.end());
    json_[key] = std::move(items);
  }

  void emit(std::ostream& out, bool json) const {
    if (json) {
      out << json_.dump(2) << "\n";
      return;
    }
    for (const std::string& l : lines_) out << l << "\n";
  }

 private:
  std::vector<std::string> lines_;
  Json json_ = Json::object();
};

Json poly_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

void put_fingerprint(Report& r, const Fingerprint& f, const std::string& prefix = "") {
  r.put(prefix + "jones", f.jones.to_string(), poly_json(f.jones));
  r.put(prefix + "v2", f.v2);
  r.put(prefix + "v3", f.v3);
}

Json fingerprint_json(const Fingerprint& f) {
  return Json{{"jones", poly_json(f.jones)}, {"v2", f.v2}, {"v3", f.v3}};
}

void put_diagram(Report& r, const LongKnotDiagram& d) {
  r.put("crossings", d.crossing_count());
  r.put("gauss", d.gauss_code());
  r.put("pd", d.pd_code());
}

Json move_json(const OrbitMove& m) {
  return Json{{"side", to_string(m.side)}, {"generator", m.generator}, {"exponent", m.exponent}};
}

std::string move_text(const OrbitMove& m) {
  return std::string(to_string(m.side)) + " " + m.generator + "^" + std::to_string(m.exponent);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

// Purity is checked before parity. An inferred strand count with the wrong
// parity is bumped by one; an explicit one is taken as given.
PureBraid read_pure(const std::string& text, std::optional<int> strands) {
  ParsedWord p = parse_braid_word(text, strands);
  PureBraid b(p.word);
  if (p.inferred_strands && b.strands() % 2 == 0) b = include(b, b.strands() + 1);
  return b;
}

PureBraid require_odd(PureBraid b) {
  if (b.strands() % 2 == 0) {
    throw DomainError("the closure needs an odd strand count, got " + std::to_string(b.strands()));
  }
  return b;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::vector<std::pair<int, int>> out;
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pair_re); it != std::sregex_iterator(); ++it) {
    const std::string gap = text.substr(consumed, static_cast<std::size_t>(it->position()) - consumed);
    if (gap.find_first_not_of(" ,") != std::string::npos) throw ParseError("expected (a,b)", consumed);
    out.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
    consumed = static_cast<std::size_t>(it->position() + it->length());
  }
  if (text.substr(consumed).find_first_not_of(" ,") != std::string::npos) throw ParseError("expected (a,b)", consumed);
  return out;
}

enum class InputFormat { automatic, braid, gauss, pd };

InputFormat detect(const std::string& text) {
  static const std::regex gauss_re(R"(^\s*[OU]\d)");
  if (text.find("X(") != std::string::npos) return InputFormat::pd;
  if (std::regex_search(text, gauss_re)) return InputFormat::gauss;
  return InputFormat::braid;
}

struct Options {
  bool json = false;
  std::size_t word_cap = 100000;

  std::vector<std::string> words;
  std::optional<int> strands;
  bool simplify = false;
  int cap = kDefaultCrossingCap;

  std::string top, bottom;
  bool with_t = false;

  std::string format = "auto";

  std::optional<std::uint64_t> seed;
  int steps = 10;
  std::string to;
  int depth = 4;
  std::size_t budget = 20000;

  int n = 3;
  int dmax = kDefaultMagnusDegree;

  std::string suite;
  std::size_t count = 50;
  bool serial = false;

  int max_length = 3;
};

int cmd_close(const Options& o, std::ostream& out) {
  const PureBraid b = require_odd(read_pure(join(o.words), o.strands));
  LongKnotDiagram d = short_circuit_close(b);
  if (o.simplify) d = simplify(d);
  Report r;
  r.put("braid", b.to_string());
  r.put("strands", b.strands());
  put_diagram(r, d);
  r.emit(out, o.json);
  return kOk;
}

int cmd_plat(const Options& o, std::ostream& out) {
  SigmaWord w;
  if (o.with_t) {
    const PureBraid x = require_odd(read_pure(join(o.words), o.strands));
    const int n = (x.strands() + 1) / 2;
    w = t_braid(n) * include(x, 2 * n).word();
  } else {
    ParsedWord p = parse_braid_word(join(o.words), o.strands);
    w = p.word;
    if (p.inferred_strands && w.strands() % 2 == 1) w = w.with_strands(w.strands() + 1);
  }
  PlatPairing pairing = PlatPairing::standard(w.strands());
  if (!o.top.empty()) pairing.top = parse_pairs(o.top);
  if (!o.bottom.empty()) pairing.bottom = parse_pairs(o.bottom);
  LongKnotDiagram d = plat_close(w, pairing);
  if (o.simplify) d = simplify(d);
  Report r;
  r.put("word", w.to_string());
  r.put("strands", w.strands());
  put_diagram(r, d);
  r.emit(out, o.json);
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const std::string text = join(o.words);
  InputFormat fmt = InputFormat::automatic;
  if (o.format == "braid") fmt = InputFormat::braid;
  else if (o.format == "gauss") fmt = InputFormat::gauss;
  else if (o.format == "pd") fmt = InputFormat::pd;
  if (fmt == InputFormat::automatic) fmt = detect(text);

  Report r;
  LongKnotDiagram d;
  std::optional<int> bridge;
  if (fmt == InputFormat::braid) {
    const PureBraid b = require_odd(read_pure(text, o.strands));
    d = short_circuit_close(b);
    bridge = bridge_upper_bound(b);
    r.put("input", "braid");
  } else if (fmt == InputFormat::gauss) {
    d = LongKnotDiagram::parse_gauss(text);
    r.put("input", "gauss");
  } else {
    d = LongKnotDiagram::parse_pd(text);
    r.put("input", "pd");
  }
  r.put("crossings", d.crossing_count());
  r.put("writhe", writhe(d));
  put_fingerprint(r, fingerprint(d, o.cap));
  if (bridge) r.put("bridge_upper_bound", *bridge);
  r.emit(out, o.json);
  return kOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  if (o.words.size() != 2) throw CLI::ValidationError("tensor takes exactly two braid words");
  const PureBraid b1 = require_odd(read_pure(o.words[0], std::nullopt));
  const PureBraid b2 = require_odd(read_pure(o.words[1], std::nullopt));
  const PureBraid t = tensor(b1, b2);
  const Fingerprint ft = fingerprint(short_circuit_close(t), o.cap);
  const Fingerprint fs = fingerprint(connect_sum(short_circuit_close(b1), short_circuit_close(b2)), o.cap);
  const bool holds = ft == fs;
  Report r;
  r.put("tensor", t.to_string());
  r.put("strands", t.strands());
  put_fingerprint(r, ft, "tensor_");
  put_fingerprint(r, fs, "sum_");
  r.put("identity", holds ? "holds" : "fails");
  r.emit(out, o.json);
  return holds ? kOk : kCheckFailed;
}

int cmd_orbit_walk(const Options& o, std::ostream& out) {
  const PureBraid b = require_odd(read_pure(join(o.words), o.strands));
  const OrbitWalk walk = random_orbit_walk(b, o.steps, *o.seed);
  const auto log = orbit_log(walk, o.cap);
  bool constant = true;
  std::vector<std::string> text;
  Json items = Json::array();
  for (const OrbitLogRecord& rec : log) {
    constant = constant && rec.fingerprint == log.front().fingerprint;
    text.push_back(rec.to_text());
    Json j{{"step", rec.step}};
    j["move"] = rec.move ? move_json(*rec.move) : Json(nullptr);
    j["word_length"] = rec.word_length;
    j["fingerprint"] = fingerprint_json(rec.fingerprint);
    items.push_back(std::move(j));
  }
  Report r;
  r.put("braid", b.to_string());
  r.put("seed", std::to_string(*o.seed), *o.seed);
  r.put_list("steps", text, std::move(items));
  r.put("final", walk.braids.back().to_string());
  r.put("fingerprint", constant ? "constant" : "changed");
  r.emit(out, o.json);
  return constant ? kOk : kCheckFailed;
}

int cmd_orbit_search(const Options& o, std::ostream& out) {
  const PureBraid from = require_odd(read_pure(join(o.words), o.strands));
  const PureBraid to = require_odd(read_pure(o.to, o.strands));
  const OrbitSearchResult res = orbit_search(from, to, o.depth, o.budget);
  const bool found = res.outcome == SearchOutcome::found;
  std::vector<std::string> text;
  Json items = Json::array();
  for (const OrbitMove& m : res.path) {
    text.push_back("move " + move_text(m));
    items.push_back(move_json(m));
  }
  Report r;
  r.put("from", from.to_string());
  r.put("to", to.to_string());
  r.put("outcome", found ? "found" : "not found within budget");
  r.put("explored", static_cast<std::int64_t>(res.explored));
  r.put_list("path", text, std::move(items));
  r.emit(out, o.json);
  return kOk;
}

int cmd_lcs(const Options& o, std::ostream& out) {
  PureBraid b;
  Report r;
  if (o.words.empty()) {
    if (!o.seed) throw CLI::ValidationError("sampling needs --seed (or give a braid word)");
    b = sample_gamma(o.n, o.strands.value_or(3), *o.seed);
    r.put("sampled", "gamma_" + std::to_string(o.n));
    r.put("seed", std::to_string(*o.seed), *o.seed);
  } else {
    b = read_pure(join(o.words), o.strands);
  }
  const CertificateReport cert = n_triviality_certificate(b, o.n);
  r.put("braid", b.to_string());
  r.put("strands", b.strands());
  r.put("n", o.n);
  for (const auto& [name, value] : cert.invariants) r.put(name, value);
  r.put("verdict", std::string(cert.consistent ? "consistent with " : "NOT consistent with ") +
                       std::to_string(o.n) + "-trivial");
  r.put("johnson_degree", johnson_degree(b, o.dmax));
  r.emit(out, o.json);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!is_suite(o.suite)) throw CLI::ValidationError("unknown suite '" + o.suite + "'");
  const SuiteReport rep = run_suite(o.suite, *o.seed, o.count, o.serial ? Execution::serial : Execution::parallel);
  std::vector<std::string> text;
  Json failures = Json::array();
  for (const CaseResult& c : rep.cases) {
    if (c.passed) continue;
    text.push_back("FAIL case " + std::to_string(c.index) + " seed " + std::to_string(c.seed) + ": " + c.detail);
    failures.push_back(Json{{"case", c.index}, {"seed", c.seed}, {"detail", c.detail}});
  }
  Report r;
  r.put("suite", rep.suite);
  r.put("seed", std::to_string(rep.seed), rep.seed);
  r.put("count", static_cast<std::int64_t>(rep.count));
  r.put_list("failures", text, std::move(failures));
  r.put("passed", static_cast<std::int64_t>(rep.passed()));
  r.put("result", rep.ok() ? "pass" : "fail");
  r.emit(out, o.json);
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
  const int strands = o.strands.value_or(3);
  if (strands != 3 && strands != 5) throw DomainError("search enumerates P_3 or P_5 words");
  const SearchSummary s =
      enumerate_closures(strands, o.max_length, o.cap, o.serial ? Execution::serial : Execution::parallel);
  std::vector<std::string> text;
  Json items = Json::array();
  for (const SearchEntry& e : s.entries) {
    text.push_back(e.word_text() + " | bridge_upper_bound " + std::to_string(e.bridge_upper_bound) + " | hits " +
                   std::to_string(e.hits) + " | " + e.fingerprint.to_string());
    Json j{{"word", e.word_text()}, {"braid", e.braid.to_string()}, {"bridge_upper_bound", e.bridge_upper_bound},
           {"hits", e.hits}};
    j["fingerprint"] = fingerprint_json(e.fingerprint);
    items.push_back(std::move(j));
  }
  Report r;
  r.put("strands", strands);
  r.put("max_length", o.max_length);
  r.put("words", static_cast<std::int64_t>(s.words));
  r.put("distinct", static_cast<std::int64_t>(s.entries.size()));
  r.put_list("knots", text, std::move(items));
  r.emit(out, o.json);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Short-circuit closures of pure braids and their invariants", "scknot"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Structured output");
  app.add_option("--word-cap", o.word_cap, "Maximum letters in any braid or free-group word")
      ->check(CLI::PositiveNumber);

  auto strands_opt = [&](CLI::App* c) { c->add_option("--strands", o.strands, "Strand count (default: inferred)"); };
  auto cap_opt = [&](CLI::App* c) {
    c->add_option("--cap", o.cap, "Crossing cap for the bracket, after simplification")->check(CLI::PositiveNumber);
  };

  CLI::App* close = app.add_subcommand("close", "Short-circuit closure of a pure braid");
  close->add_option("word", o.words, "Braid word")->required();
  strands_opt(close);
  close->add_flag("--simplify", o.simplify, "Apply Reidemeister I/II reductions");

  CLI::App* plat = app.add_subcommand("plat", "Plat closure of a braid on an even number of strands");
  plat->add_option("word", o.words, "Braid word")->required();
  strands_opt(plat);
  plat->add_option("--top", o.top, "Top pairing, e.g. \"(1,2),(3,4)\"");
  plat->add_option("--bottom", o.bottom, "Bottom pairing");
  plat->add_flag("--with-t", o.with_t, "Treat the word as x and close t_braid * x");
  plat->add_flag("--simplify", o.simplify, "Apply Reidemeister I/II reductions");

  CLI::App* inv = app.add_subcommand("invariants", "Jones polynomial, v2, v3, writhe and bridge bound");
  inv->add_option("input", o.words, "Braid word, Gauss code or PD code")->required();
  inv->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"auto", "braid", "gauss", "pd"}));
  strands_opt(inv);
  cap_opt(inv);

  CLI::App* ten = app.add_subcommand("tensor", "Compare sigma(b1 (x) b2) with the connected sum");
  ten->add_option("words", o.words, "Two braid words")->required()->expected(2);
  cap_opt(ten);

  CLI::App* orb = app.add_subcommand("orbit", "Random H^T/H^B orbit walk, or a bounded search with --to");
  orb->add_option("word", o.words, "Starting braid word")->required();
  strands_opt(orb);
  orb->add_option("--seed", o.seed, "Seed (required for walks)");
  orb->add_option("--steps", o.steps, "Walk length")->check(CLI::NonNegativeNumber);
  orb->add_option("--to", o.to, "Target braid word for the bounded search");
  orb->add_option("--depth", o.depth, "Search depth")->check(CLI::NonNegativeNumber);
  orb->add_option("--budget", o.budget, "Search node budget");
  cap_opt(orb);

  CLI::App* lcs = app.add_subcommand("lcs", "n-triviality certificate and Johnson degree");
  lcs->add_option("word", o.words, "Braid word (omit to sample gamma_n)");
  strands_opt(lcs);
  lcs->add_option("--n", o.n, "Order n")->required();
  lcs->add_option("--seed", o.seed, "Seed for sampling");
  lcs->add_option("--dmax", o.dmax, "Johnson degree cap")->check(CLI::PositiveNumber);

  CLI::App* ver = app.add_subcommand("verify", "Run a randomized property suite");
  ver->add_option("suite", o.suite, "stabilize, tensor, orbit, lcs or plat")->required();
  ver->add_option("--seed", o.seed, "Seed")->required();
  ver->add_option("--count", o.count, "Number of cases");
  ver->add_flag("--serial", o.serial, "Run cases on one thread");

  CLI::App* sea = app.add_subcommand("search", "Enumerate short A-generator words and their knots");
  strands_opt(sea);
  sea->add_option("--max-length", o.max_length, "Longest word")->check(CLI::NonNegativeNumber);
  sea->add_flag("--serial", o.serial, "Run on one thread");
  cap_opt(sea);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::size_t saved_cap = word_length_cap();
  set_word_length_cap(o.word_cap);
  int code = kOk;
  try {
    if (close->parsed()) code = cmd_close(o, out);
    else if (plat->parsed()) code = cmd_plat(o, out);
    else if (inv->parsed()) code = cmd_invariants(o, out);
    else if (ten->parsed()) code = cmd_tensor(o, out);
    else if (orb->parsed()) {
      if (!o.to.empty()) code = cmd_orbit_search(o, out);
      else if (!o.seed) throw CLI::ValidationError("orbit walks need --seed");
      else code = cmd_orbit_walk(o, out);
    } else if (lcs->parsed()) code = cmd_lcs(o, out);
    else if (ver->parsed()) code = cmd_verify(o, out);
    else code = cmd_search(o, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    code = kDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    code = kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = kInternal;
  }
  set_word_length_cap(saved_cap);
  return code;
}

}  // namespace scknot::cli
