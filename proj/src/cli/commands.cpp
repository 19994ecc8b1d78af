#include "ffh/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ffh/core/error.hpp"
#include "ffh/core/sampler.hpp"
#include "ffh/quasi/quasi.hpp"

namespace ffh::cli {

namespace {

struct OptionSpec {
  std::string name;
  bool flag = false;
  bool repeat = false;
  bool required = false;
};

const std::vector<OptionSpec>& common_options() {
  static const std::vector<OptionSpec> v = {
      {"jobs"}, {"tower-budget"}, {"prec"}, {"seed"}, {"timing", true}, {"out"}, {"text", true}, {"tower", false, true},
  };
  return v;
}

const std::map<std::string, std::vector<OptionSpec>>& verb_options() {
  static const std::map<std::string, std::vector<OptionSpec>> v = {
      {"height", {{"expr", false, false, true}}},
      {"height-point", {{"coords", false, false, true}}},
      {"law-check", {{"law", false, false, true}, {"inputs", false, false, true}}},
      {"places", {{"poly", false, false, true}, {"center", false, false, true}}},
      {"divisor", {{"poly", false, false, true}, {"function"}, {"divisor"}}},
      {"rr", {{"poly", false, false, true}, {"divisor", false, false, true}, {"mode"}}},
      {"constant-c", {{"rho", false, false, true}, {"epsilon", false, false, true}, {"hp", false, false, true}}},
      {"quasi-check",
       {{"poly", false, false, true}, {"epsilon", false, false, true}, {"samples"}, {"tier"}}},
      {"self-test", {}},
  };
  return v;
}

using Clock = std::chrono::steady_clock;

FieldPtr Q() { return Field::rationals(); }
FieldPtr QT() { return Field::rational_functions(); }

PlaceOptions place_options(const Command& c) {
  PlaceOptions o;
  o.tower_budget = static_cast<int>(c.get_long("tower-budget", o.tower_budget));
  o.precision = c.get_long("prec", o.precision);
  if (o.tower_budget < 1 || o.precision < 1) throw InputError("--tower-budget and --prec must be positive");
  return o;
}

bool mentions_t(const std::string& text) { return mentions_symbol(parse_expression(text), "t"); }

// Q or Q(t), then the --tower levels in order. Level k is given as a
// polynomial in Y over level k-1 and its root is called uk.
FieldPtr command_field(const Command& c, const std::vector<std::string>& texts) {
  bool t = false;
  for (const auto& s : texts) t = t || mentions_t(s);
  for (const auto& s : c.all("tower")) t = t || mentions_t(s);
  FieldPtr F = t ? QT() : Q();
  for (const auto& s : c.all("tower")) F = extend_field(F, parse_mpoly(s, F, {"Y"}).to_upoly(0));
  return F;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (out.empty()) throw InputError("empty coordinate list");
  return out;
}

Rational parse_rational_arg(const Command& c, const std::string& key) {
  if (!c.has(key)) throw InputError("missing --" + key);
  return parse_rational(c.get(key));
}

json law_json(const HeightLawReport& r) {
  return json{{"law", r.law},     {"inputs", r.inputs},       {"lhs", to_pq(r.lhs)},
              {"relation", r.relation}, {"rhs", to_pq(r.rhs)}, {"satisfied", r.satisfied}};
}

json log_constant_json(const LogConstant& L) {
  return json{{"coeff", to_pq(L.coeff)}, {"base", L.base.get_si()}, {"exponent", L.exponent_text()}, {"scale", to_pq(L.scale)}};
}

// String leaves of a JSON value, used to decide between Q and Q(t).
void collect_strings(const json& j, std::vector<std::string>& out) {
  if (j.is_string()) out.push_back(j.get<std::string>());
  if (j.is_array() || j.is_object())
    for (const auto& x : j) collect_strings(x, out);
}

const json& field_of(const json& in, const std::string& key) {
  if (!in.contains(key)) throw InputError("law inputs need \"" + key + "\"");
  return in.at(key);
}

std::string text_of(const json& in, const std::string& key) {
  const json& v = field_of(in, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw InputError("\"" + key + "\" must be a string");
}

json run_law(const Command& cmd, const std::string& law, const json& in) {
  std::vector<std::string> texts;
  collect_strings(in, texts);
  const FieldPtr L = command_field(cmd, texts);
  const FieldPtr B = L->base();
  auto elem = [&](const std::string& key) { return parse_elem(text_of(in, key), L); };
  auto elems = [&](const json& arr) {
    if (!arr.is_array() || arr.empty()) throw InputError("expected a nonempty list of elements");
    std::vector<Elem> v;
    for (const auto& x : arr) v.push_back(parse_elem(x.get<std::string>(), L));
    return v;
  };
  auto indexed = [](std::size_t k) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back("X" + std::to_string(i));
    return v;
  };
  const std::vector<std::string> xyz = {"X", "Y", "Z"};
  auto poly = [&](const std::string& key, const std::vector<std::string>& vars) {
    return parse_mpoly(text_of(in, key), B, vars);
  };

  if (law == "power") return law_json(law_power(elem("a"), field_of(in, "n").get<long>()));
  if (law == "morphism") {
    std::vector<std::vector<Elem>> blocks;
    for (const auto& b : field_of(in, "blocks")) blocks.push_back(elems(b));
    std::size_t k = 0;
    for (const auto& b : blocks) k += b.size();
    std::vector<MPoly> phi;
    for (const auto& f : field_of(in, "phi")) phi.push_back(parse_mpoly(f.get<std::string>(), B, indexed(k)));
    return law_json(law_morphism(blocks, phi));
  }
  if (law == "polynomial-value") {
    auto b = elems(field_of(in, "b"));
    return law_json(law_polynomial_value(parse_mpoly(text_of(in, "q"), Q(), indexed(b.size())), b));
  }
  if (law == "sum") return law_json(law_sum(elem("a"), elem("b")));
  if (law == "product") return law_json(law_product(elem("a"), elem("b")));
  if (law == "mobius") {
    const json& cs = field_of(in, "c");
    if (!cs.is_array() || cs.size() != 4) throw InputError("\"c\" must list four rationals");
    std::array<Rational, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = parse_rational(cs[i].is_string() ? cs[i].get<std::string>() : std::to_string(cs[i].get<long>()));
    return law_json(law_mobius(elem("a"), c));
  }
  if (law == "concatenation") return law_json(law_concatenation(elems(field_of(in, "b1")), elems(field_of(in, "b2"))));
  if (law == "coordinate-sum") return law_json(law_coordinate_sum(elems(field_of(in, "b"))));
  if (law == "resultant") {
    const std::string var = in.contains("var") ? in.at("var").get<std::string>() : "Y";
    return law_json(law_resultant(poly("p1", xyz), poly("p2", xyz), var));
  }
  if (law == "shift") return law_json(law_shift(poly("p", {"X", "Y"}), elem("a"), elem("b")));
  if (law == "divisibility") return law_json(law_divisibility(poly("g", xyz), poly("h", xyz)));
  if (law == "root") return law_json(law_root(poly("h", {"X"}).to_upoly(0), elem("a")));
  if (law == "veronese") return law_json(law_veronese(elems(field_of(in, "a")), static_cast<int>(field_of(in, "d").get<long>())));
  if (law == "polynomial-product") return law_json(law_polynomial_product(poly("g", xyz), poly("h", xyz)));
  if (law == "special-curve") {
    json out{{"law", "special-curve"}, {"reports", json::array()}};
    bool ok = true;
    for (const auto& r : special_curve_check(poly("q", {"X", "Y"}), elem("alpha"), elem("beta"))) {
      out["reports"].push_back(law_json(r));
      ok = ok && r.satisfied;
    }
    out["satisfied"] = ok;
    return out;
  }
  std::string known;
  for (const auto& id : law_ids()) known += id + ", ";
  throw InputError("unknown law '" + law + "' (known: " + known + "special-curve)");
}

Divisor parse_divisor(const CurveModel& c, const std::string& text, const PlaceOptions& opt) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("divisor JSON: ") + e.what());
  }
  if (!j.is_array()) throw InputError("divisor must be a JSON list of {center, branch, multiplicity}");
  Divisor D;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("center") || !e.contains("multiplicity"))
      throw InputError("divisor entries need center and multiplicity");
    const std::string center = e.at("center").is_string() ? e.at("center").get<std::string>() : e.at("center").dump();
    const long branch = e.value("branch", 0L);
    auto ps = places_above(c, Center::parse(center, c.K), opt);
    if (branch < 0 || branch >= static_cast<long>(ps.size()))
      throw InputError("center " + center + " has " + std::to_string(ps.size()) + " branches");
    D.add(ps[branch], e.at("multiplicity").get<long>());
  }
  return D;
}

json divisor_json(const Divisor& D) {
  json entries = json::array();
  for (const auto& [k, e] : D.entries())
    entries.push_back({{"place", k},
                       {"center", e.place.center().describe()},
                       {"branch", e.place.branch()},
                       {"multiplicity", e.mult},
                       {"conjugacy_multiplicity", e.place.weight()}});
  return json{{"entries", entries}, {"degree", D.degree()}, {"delta", D.delta()}};
}

std::vector<std::string> tower_levels(const FieldPtr& F) {
  std::vector<std::string> out;
  for (int d = 1; d <= F->depth(); ++d) {
    const std::string whole = F->ancestor(d)->describe();
    out.push_back(whole.substr(F->ancestor(d - 1)->describe().size()));
  }
  return out;
}

// ---- verbs

Outcome verb_height(const Command& c) {
  const std::string expr = c.get("expr");
  const FieldPtr F = command_field(c, {expr});
  const Elem e = parse_elem(expr, F);
  RatFunc r;
  const Rational h = F->in_base(e.value(), &r) ? height_element(r) : height_element(e);
  return {json{{"value", to_pq(h)}}, Ok};
}

Outcome verb_height_point(const Command& c) {
  const auto parts = split_commas(c.get("coords"));
  const FieldPtr F = command_field(c, parts);
  std::vector<Elem> pt;
  for (const auto& s : parts) pt.push_back(parse_elem(s, F));
  return {json{{"value", to_pq(height_point(pt, place_options(c)))}}, Ok};
}

Outcome verb_law_check(const Command& c) {
  json in;
  try {
    in = json::parse(c.get("inputs"));
  } catch (const json::exception& e) {
    throw InputError(std::string("law inputs JSON: ") + e.what());
  }
  if (!in.is_object()) throw InputError("law inputs must be a JSON object");
  json r = run_law(c, c.get("law"), in);
  return {r, r.at("satisfied").get<bool>() ? Ok : Violation};
}

Outcome verb_places(const Command& c) {
  const auto curve = CurveModel::parse(c.get("poly"));
  const PlaceOptions opt = place_options(c);
  const auto ps = places_above(curve, Center::parse(c.get("center"), curve.K), opt);
  const long terms = c.get_long("prec", 8);
  json arr = json::array();
  for (const auto& p : ps) {
    json coeffs = json::array();
    for (const auto& v : p.coefficients(terms)) coeffs.push_back(p.field()->render(v));
    arr.push_back({{"key", p.key()},
                   {"center", p.center().describe()},
                   {"mu", p.mu()},
                   {"nu", p.nu()},
                   {"coefficients", coeffs},
                   {"tower", tower_levels(p.field())},
                   {"conjugacy_multiplicity", p.weight()}});
  }
  return {json{{"curve", curve.to_string()}, {"places", arr}, {"ramification_sum", ramification_sum(ps)}}, Ok};
}

Outcome verb_divisor(const Command& c) {
  const auto curve = CurveModel::parse(c.get("poly"));
  const PlaceOptions opt = place_options(c);
  if (c.has("function") == c.has("divisor")) throw InputError("divisor needs exactly one of --function, --divisor");
  if (c.has("divisor")) return {divisor_json(parse_divisor(curve, c.get("divisor"), opt)), Ok};
  const Fraction f = to_fraction(parse_expression(c.get("function")), curve.K, CurveModel::vars());
  json r = divisor_json(principal_divisor(curve, f, opt));
  r["function"] = c.get("function");
  return {r, r.at("degree").get<long>() == 0 ? Ok : Violation};
}

Outcome verb_rr(const Command& c) {
  const auto curve = CurveModel::parse(c.get("poly"));
  const PlaceOptions opt = place_options(c);
  const Divisor D = parse_divisor(curve, c.get("divisor"), opt);
  RROptions ro;
  const std::string mode = c.get("mode", "faithful");
  if (mode == "fallback") ro.mode = RRMode::Fallback;
  else if (mode != "faithful") throw InputError("--mode must be faithful or fallback");
  const auto ctx = divisor_context(curve, D, opt);
  json r{{"curve", curve.to_string()},
         {"divisor", divisor_json(D)},
         {"mode", mode},
         {"exponent", ctx.exponent},
         {"h_D", to_pq(ctx.hD)}};
  RRElement z;
  try {
    z = rr_element(ctx, ro);
  } catch (const NoSolutionError& e) {
    r["status"] = "no-solution";
    r["reason"] = e.what();
    return {r, Ok};
  }
  r["status"] = "ok";
  r["q"] = z.q.to_string("X");
  r["g"] = z.g.to_string();
  json coeffs = json::array();
  for (const auto& row : z.a) {
    json jr = json::array();
    for (const auto& v : row) jr.push_back(curve.K->render(v));
    coeffs.push_back(jr);
  }
  r["coefficients"] = coeffs;
  r["ansatz_degree"] = z.ansatz - 1;
  r["unknowns"] = z.unknowns;
  r["equations"] = z.equations;
  r["rank"] = z.rank;
  r["height_coefficients"] = to_pq(z.height_a);
  bool ok = true;
  json checks = json::array();
  for (const auto& b : z.checks) {
    checks.push_back({{"name", b.name}, {"bound", b.bound}, {"actual", to_pq(b.actual)}, {"status", b.status}});
    ok = ok && b.status != "violated";
  }
  r["checks"] = checks;
  const auto cert = verify_membership(curve, D, z.z(), ctx.U, opt);
  json entries = json::array();
  for (const auto& e : cert.entries)
    entries.push_back({{"place", e.key}, {"ord", e.ord}, {"mult", e.mult}, {"ok", e.ok}});
  r["membership"] = {{"member", cert.member}, {"entries", entries}, {"structural", cert.structural}};
  ok = ok && cert.member;
  return {r, ok ? Ok : Violation};
}

Outcome verb_constant_c(const Command& c) {
  const long rho = c.get_long("rho", 0);
  const LogConstant C = constant_C(rho, parse_rational_arg(c, "epsilon"), parse_rational_arg(c, "hp"));
  return {log_constant_json(C), Ok};
}

std::vector<RatFunc> load_samples(const Command& c) {
  const std::string spec = c.get("samples", "auto:10");
  std::vector<RatFunc> out;
  if (spec.rfind("auto:", 0) == 0) {
    long n = 0;
    try {
      n = std::stol(spec.substr(5));
    } catch (const std::exception&) {
      throw InputError("bad sample count in " + spec);
    }
    if (n < 1) throw InputError("sample count must be positive");
    Sampler s(static_cast<std::uint64_t>(c.get_long("seed", 1)));
    for (long i = 0; i < n; ++i) out.push_back(s.ratfunc(3, 5));
    return out;
  }
  std::ifstream in(spec);
  if (!in) throw InputError("cannot read samples file " + spec);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(parse_ratfunc(line));
  }
  if (out.empty()) throw InputError("no samples in " + spec);
  return out;
}

json check_json(const ConstantCheck& k) {
  return json{{"name", k.name}, {"lhs", to_pq(k.lhs)}, {"bound", k.bound}, {"ok", k.ok}};
}

Outcome verb_quasi_check(const Command& c) {
  const auto curve = CurveModel::parse(c.get("poly"));
  const Rational eps = parse_rational_arg(c, "epsilon");
  const std::string tier_text = c.get("tier", "heights");
  Tier tier = Tier::Heights;
  if (tier_text == "full") tier = Tier::Full;
  else if (tier_text != "heights") throw InputError("--tier must be heights or full");
  const auto samples = load_samples(c);
  const int jobs = static_cast<int>(c.get_long("jobs", 1));
  const auto rep = quasi_check(curve, samples, eps, tier, place_options(c), std::max(1, jobs));
  const auto& tp = rep.params;

  json heights = json::array();
  for (const auto& e : tp.place_heights)
    heights.push_back({{"place", e.key}, {"height", to_pq(e.height)}, {"bound", to_pq(e.bound)}, {"ok", e.ok}});
  json r{{"curve", rep.curve},
         {"epsilon", to_pq(eps)},
         {"m", tp.m},
         {"n", tp.n},
         {"rho", tp.rho},
         {"lambda1", tp.lambda.l1},
         {"lambda2", tp.lambda.l2},
         {"mobius", {{"c1", to_pq(tp.mobius.c1)}, {"c2", to_pq(tp.mobius.c2)}}},
         {"h_P", to_pq(tp.hP)},
         {"C", log_constant_json(tp.C)},
         {"divisor", divisor_json(tp.D)},
         {"divisor_lower", divisor_json(tp.D_lower)},
         {"degree_ok", tp.degree_ok},
         {"place_heights", heights},
         {"place_heights_ok", tp.place_heights_ok},
         {"tier", tier_text}};
  if (tier == Tier::Full) {
    json sides = json::array();
    for (const auto& sd : rep.sides) {
      json checks = json::array();
      for (const auto& b : sd.z.checks)
        checks.push_back({{"name", b.name}, {"bound", b.bound}, {"actual", to_pq(b.actual)}, {"status", b.status}});
      for (const auto* b : {&sd.Q1_bound, &sd.Q2_bound})
        checks.push_back({{"name", b->name}, {"bound", b->bound}, {"actual", to_pq(b->actual)}, {"status", b->status}});
      sides.push_back({{"side", sd.side},
                       {"q", sd.z.q.to_string("X")},
                       {"g", sd.z.g.to_string()},
                       {"Q1", sd.Q1.Q.to_string()},
                       {"Q2", sd.Q2.Q.to_string()},
                       {"h_Q1", to_pq(sd.Q1.height)},
                       {"h_Q2", to_pq(sd.Q2.height)},
                       {"certificates",
                        {{"Q1_annihilates", sd.Q1.annihilates},
                         {"Q1_divides_resultant", sd.Q1.divides_resultant},
                         {"Q2_annihilates", sd.Q2.annihilates},
                         {"Q2_divides_resultant", sd.Q2.divides_resultant}}},
                       {"checks", checks},
                       {"hypotheses_ok", sd.hypotheses_ok},
                       {"T", log_constant_json(sd.T)}});
    }
    r["sides"] = sides;
  }
  json recs = json::array();
  for (const auto& s : rep.samples) {
    json x{{"a", s.a},         {"b", s.b},           {"field", s.field},       {"h_a", to_pq(s.ha)},
           {"h_b", to_pq(s.hb)}, {"m_h_a", to_pq(s.m_ha)}, {"n_h_b", to_pq(s.n_hb)}, {"upper", check_json(s.upper)},
           {"lower", check_json(s.lower)}, {"passed", s.passed()}};
    if (tier == Tier::Full) {
      json chain = json::array();
      for (const auto& h : s.chain) chain.push_back(law_json(h));
      json consts = json::array();
      for (const auto& k : s.chain_constants) consts.push_back(check_json(k));
      x["chain"] = chain;
      x["chain_constants"] = consts;
      if (!s.chain_note.empty()) x["chain_note"] = s.chain_note;
    }
    recs.push_back(x);
  }
  r["samples"] = recs;
  json skips = json::array();
  for (const auto& s : rep.skipped) skips.push_back({{"a", s.a}, {"reason", s.reason}});
  r["skipped"] = skips;
  r["passed"] = rep.passed();
  return {r, rep.passed() ? Ok : Violation};
}

Outcome verb_self_test(const Command& c) {
  json r = self_test(static_cast<int>(c.get_long("jobs", 1)));
  return {r, r.at("failed").get<long>() == 0 ? Ok : Violation};
}

json echo(const Command& c) {
  json o = json::object();
  for (const auto& [k, v] : c.options) {
    // Output plumbing and parallelism do not change results.
    if (k == "timing" || k == "out" || k == "text" || k == "jobs") continue;
    if (v.size() == 1 && k != "tower") o[k] = v[0];
    else o[k] = v;
  }
  return json{{"verb", c.verb}, {"options", o}};
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {"height", "height-point", "law-check",   "places",   "divisor",
                                             "rr",     "constant-c",   "quasi-check", "self-test"};
  return v;
}

std::string Command::get(const std::string& key, const std::string& fallback) const {
  auto it = options.find(key);
  if (it == options.end() || it->second.empty()) return fallback;
  return it->second.back();
}

long Command::get_long(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  const std::string s = get(key);
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("--" + key + " expects an integer, got '" + s + "'");
}

std::vector<std::string> Command::all(const std::string& key) const {
  auto it = options.find(key);
  return it == options.end() ? std::vector<std::string>{} : it->second;
}

Command parse_command_line(const std::vector<std::string>& args) {
  CLI::App app{"Heights, places and Riemann-Roch constructions over function fields", "ffh"};
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, std::vector<std::string>>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& verb : verbs()) {
    CLI::App* sub = app.add_subcommand(verb);
    subs[verb] = sub;
    std::vector<OptionSpec> opts = verb_options().at(verb);
    opts.insert(opts.end(), common_options().begin(), common_options().end());
    for (const auto& o : opts) {
      if (o.flag) {
        sub->add_flag("--" + o.name, flags[verb][o.name]);
        continue;
      }
      auto* opt = sub->add_option("--" + o.name, values[verb][o.name])->allow_extra_args(false);
      if (o.repeat) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
      else opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->expected(1);
      if (o.required) opt->required();
    }
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw InputError(app.help());
  } catch (const CLI::ParseError& e) {
    throw InputError(e.what());
  }
  Command cmd;
  for (const auto& [verb, sub] : subs)
    if (sub->parsed()) cmd.verb = verb;
  for (auto& [k, v] : values[cmd.verb])
    if (!v.empty()) cmd.options[k] = v;
  for (auto& [k, on] : flags[cmd.verb])
    if (on) cmd.options[k] = {"true"};
  return cmd;
}

Outcome run_command(const Command& cmd) {
  const auto start = Clock::now();
  Outcome out;
  json diagnostics = json::array();
  json results = json::object();
  try {
    if (cmd.verb == "height") out = verb_height(cmd);
    else if (cmd.verb == "height-point") out = verb_height_point(cmd);
    else if (cmd.verb == "law-check") out = verb_law_check(cmd);
    else if (cmd.verb == "places") out = verb_places(cmd);
    else if (cmd.verb == "divisor") out = verb_divisor(cmd);
    else if (cmd.verb == "rr") out = verb_rr(cmd);
    else if (cmd.verb == "constant-c") out = verb_constant_c(cmd);
    else if (cmd.verb == "quasi-check") out = verb_quasi_check(cmd);
    else if (cmd.verb == "self-test") out = verb_self_test(cmd);
    else throw InputError("unknown verb '" + cmd.verb + "'");
    results = out.report;
  } catch (const SyntaxError& e) {
    diagnostics.push_back({{"kind", "syntax"}, {"message", e.what()}, {"offset", e.offset()}});
    out.exit_code = BadInput;
  } catch (const InputError& e) {
    diagnostics.push_back({{"kind", "input"}, {"message", e.what()}});
    out.exit_code = BadInput;
  } catch (const ZeroDivisorError& e) {
    diagnostics.push_back({{"kind", "input"}, {"message", e.what()}});
    out.exit_code = BadInput;
  } catch (const UnsupportedError& e) {
    diagnostics.push_back({{"kind", "unsupported"}, {"message", e.what()}});
    out.exit_code = Unsupported;
  } catch (const Error& e) {
    diagnostics.push_back({{"kind", "failure"}, {"message", e.what()}});
    out.exit_code = Violation;
  } catch (const json::exception& e) {
    diagnostics.push_back({{"kind", "input"}, {"message", e.what()}});
    out.exit_code = BadInput;
  }
  json report{{"schema", "1"}, {"command", echo(cmd)}, {"results", results}, {"diagnostics", diagnostics},
              {"exit_code", out.exit_code}};
  if (cmd.has("timing"))
    report["timing"] = {{"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
  out.report = report;
  return out;
}

namespace {

void render_text(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render(const json& report) { return report.dump(2) + "\n"; }

std::string render_text(const json& report) {
  std::ostringstream os;
  render_text(report, "", os);
  return os.str();
}

}  // namespace ffh::cli
