#include "xprod/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xprod/banach.hpp"
#include "xprod/between.hpp"
#include "xprod/errors.hpp"
#include "xprod/gelfand.hpp"
#include "xprod/idealwin.hpp"
#include "xprod/laurent.hpp"
#include "xprod/literal.hpp"
#include "xprod/random.hpp"
#include "xprod/reduce.hpp"

namespace xprod::cli {

using nlohmann::json;

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr Degree kMaxDegree = 1'000'000;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DegreeWindow parse_window(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("window must look like lo:hi, got \"" + s + "\"");
  long long lo = 0, hi = 0;
  try {
    std::size_t a = 0, b = 0;
    lo = std::stoll(s.substr(0, colon), &a);
    hi = std::stoll(s.substr(colon + 1), &b);
    if (a != colon || b != s.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UsageError("window must look like lo:hi, got \"" + s + "\"");
  }
  if (lo > hi) throw UsageError("window lower end exceeds upper end");
  if (lo < -kMaxDegree || hi > kMaxDegree) throw UsageError("window degrees beyond +-1000000");
  return {lo, hi};
}

json points_json(const PointSet& s) { return json(s); }

json slices_json(const std::map<Degree, std::size_t>& m) {
  json a = json::array();
  for (const auto& [d, k] : m) a.push_back({{"degree", d}, {"dim", k}});
  return a;
}

json window_json(const DegreeWindow& w) { return json::array({w.lo, w.hi}); }

json elements_json(const std::vector<CrossedElement>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back(format_element(e));
  return a;
}

json matrix_json(const linalg::Matrix& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    a.push_back(std::move(r));
  }
  return a;
}

json vec_json(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

json certificate_json(const ReductionCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    if (s.kind == ReductionStep::Kind::right_multiply) {
      steps.push_back({{"kind", "right_multiply"}, {"a", format_func(s.a)}, {"shift", s.shift}});
    } else {
      steps.push_back({{"kind", "commutate"}, {"b", format_func(s.a)}});
    }
  }
  return {{"input", format_element(c.input)}, {"steps", steps}, {"output", format_element(c.output)}};
}

ReductionCertificate certificate_from_json(const std::string& text, const DynSystem& sys) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid certificate JSON: ") + e.what(), e.byte);
  }
  auto str = [](const json& o, const char* key) {
    if (!o.is_object() || !o.contains(key) || !o[key].is_string()) {
      throw ParseError(std::string("certificate field \"") + key + "\" must be a string", 0);
    }
    return o[key].get<std::string>();
  };
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array()) {
    throw ParseError("certificate needs \"input\", \"steps\" and \"output\"", 0);
  }
  ReductionCertificate c{parse_element(str(j, "input"), sys), {}, parse_element(str(j, "output"), sys)};
  for (const auto& s : j["steps"]) {
    const std::string kind = str(s, "kind");
    if (kind == "right_multiply") {
      if (!s.contains("shift") || !s["shift"].is_number_integer()) throw ParseError("step needs an integer shift", 0);
      c.steps.push_back(ReductionStep::right_multiply(parse_func(str(s, "a"), sys.size()), s["shift"].get<Degree>()));
    } else if (kind == "commutate") {
      c.steps.push_back(ReductionStep::commutate(parse_func(str(s, "b"), sys.size())));
    } else {
      throw ParseError("unknown step kind \"" + kind + "\"", 0);
    }
  }
  return c;
}

struct Outcome {
  json result;
  std::string digest;
  int code = ok;
};

struct Globals {
  std::string system_path;
  std::string window = "-4:4";
  bool text = false;
  std::uint64_t seed = 1;
};

DynSystem load_system(const Globals& g) {
  if (g.system_path.empty()) throw UsageError("--system is required");
  return DynSystem::from_json(read_file(g.system_path));
}

Outcome analyze(const DynSystem& sys) {
  json r;
  r["points"] = sys.size();
  json orbs = json::array();
  for (const auto& o : orbits(sys)) orbs.push_back(points_json(o));
  r["orbits"] = orbs;
  const Degree ord = order(sys);
  r["order"] = ord;
  r["least_period"] = least_period(sys);
  for (Degree n = 1; n <= std::min<Degree>(ord, 24); ++n) {
    r["per_" + std::to_string(n)] = points_json(per_n(sys, n));
    r["sep_" + std::to_string(n)] = points_json(sep_n(sys, n));
  }
  r["per_infinity"] = points_json(per_infinity(sys));
  r["per_infinity_dense"] = false;
  const auto pred = dynamics_predicates(sys);
  r["minimal"] = pred.minimal;
  r["transitive"] = pred.topologically_transitive;
  const auto ma = is_maximal_abelian(sys);
  r["maximal_abelian"] = ma.maximal_abelian;
  r["maximal_abelian_explanation"] = ma.explanation;
  if (ma.witness_n) r["maximal_abelian_witness_n"] = *ma.witness_n;
  return {r, digest(sys.to_json())};
}

Outcome reduce_cmd(const DynSystem& sys, const std::string& element, const std::string& replay_path,
                   std::size_t random_cases, std::uint64_t seed) {
  Outcome o{json::object(), digest(sys.to_json())};
  if (!replay_path.empty()) {
    const ReductionCertificate cert = certificate_from_json(read_file(replay_path), sys);
    const ReplayResult rr = replay(sys, cert);
    o.result = {{"ok", rr.ok}, {"reason", rr.reason}, {"steps", cert.steps.size()}};
    o.result["failed_step"] = rr.failed_step ? json(*rr.failed_step) : json(nullptr);
    o.code = rr.ok ? ok : refuted;
    return o;
  }
  if (random_cases > 0) {
    gen::Rng rng(seed);
    std::size_t valid = 0, max_steps = 0;
    for (std::size_t k = 0; k < random_cases; ++k) {
      const CrossedElement f = gen::element(rng, sys.size(), 5, -3, 3);
      const auto cert = reduce_to_commutant(sys, f);
      if (replay(sys, cert)) ++valid;
      max_steps = std::max(max_steps, cert.steps.size());
    }
    o.result = {{"cases", random_cases}, {"valid", valid}, {"max_steps", max_steps}, {"seed", seed}};
    o.code = valid == random_cases ? ok : refuted;
    return o;
  }
  if (element.empty()) throw UsageError("reduce needs --element, --replay or --random");
  const CrossedElement f = parse_element(element, sys);
  const ReductionCertificate cert = reduce_to_commutant(sys, f);
  const ReplayResult rr = replay(sys, cert);
  const auto cw = containment_windows(cert);
  const SubspaceWindow ideal = generate_ideal_window(sys, {f}, cw.multipliers, cw.target);
  const bool member = membership(ideal, cert.output) == Membership::yes;
  o.result = certificate_json(cert);
  o.result["step_bound"] = 2 * f.num_terms();
  o.result["replay_ok"] = rr.ok;
  o.result["in_commutant"] = in_commutant(sys, cert.output);
  o.result["in_generated_ideal_window"] = member;
  o.code = rr.ok && member ? ok : refuted;
  return o;
}

Outcome ideal_cmd(const DynSystem& sys, DegreeWindow w, const std::vector<std::string>& gens,
                  const std::string& member) {
  if (gens.empty()) throw UsageError("ideal needs at least one --generator");
  std::vector<CrossedElement> gs;
  for (const auto& g : gens) gs.push_back(parse_element(g, sys));
  const SubspaceWindow ideal = generate_ideal_window(sys, gs, w, w);
  json r;
  r["window"] = window_json(w);
  r["dim"] = ideal.dim();
  r["ambient_dim"] = ideal.ambient_dim();
  r["slices"] = slices_json(ideal.slice_dims());
  r["basis"] = elements_json(ideal.basis());
  r["certificates_verified"] = verify_certificates(ideal);
  r["meets_A_dim"] = intersect_with_graded(ideal, GradedSubspace::coefficient_algebra(sys.size(), w)).dim();
  r["meets_commutant_dim"] = intersect_with_graded(ideal, commutant_window(sys, w)).dim();
  if (!member.empty()) {
    r["member"] = membership(ideal, parse_element(member, sys)) == Membership::yes ? "yes" : "not_in_window";
  }
  return {r, digest(sys.to_json())};
}

json probe_json(const ProbeReport& p) {
  json entries = json::array();
  for (const auto& e : p.entries) {
    entries.push_back({{"family", e.family}, {"generator", format_element(e.generator)}, {"dim", e.intersection_dim}});
  }
  json r{{"entries", entries}, {"refuted", p.refuted}, {"verdict", p.verdict}};
  r["first_refuting"] = p.first_refuting ? json(*p.first_refuting) : json(nullptr);
  return r;
}

Outcome between_cmd(const DynSystem& sys, DegreeWindow w, const std::string& kind, Degree n, const std::string& u1,
                    std::size_t x0, bool probe) {
  const std::size_t np = sys.size();
  const GradedSubspace a = GradedSubspace::coefficient_algebra(np, w);
  const GradedSubspace ap = commutant_window(sys, w);
  json r;
  r["window"] = window_json(w);
  r["kind"] = kind;
  int code = ok;
  if (kind == "avoiding") {
    if (u1.empty()) throw UsageError("avoiding needs --u1");
    const auto c = build_avoiding_B(sys, n, parse_point_list(u1), w);
    r["n"] = n;
    r["U1"] = points_json(c.U1);
    r["U2"] = points_json(c.U2);
    r["slices"] = {{"A", slices_json(a.slice_dims())},
                   {"B", slices_json(c.B.slice_dims())},
                   {"commutant", slices_json(ap.slice_dims())}};
    const std::size_t bd = c.B.slice(n).dim();
    const bool strict = a.slice(n).dim() < bd && bd < ap.slice(n).dim();
    r["strict_sandwich"] = strict;
    r["in_B_not_A"] = format_element(c.in_B_not_A);
    r["in_commutant_not_B"] = format_element(c.in_Aprime_not_B);
    const auto closure = conv_closure_failure(sys, c.B, w);
    r["closure_failure"] = closure ? json(*closure) : json(nullptr);
    const Func f2 = Func::indicator(np, c.U2);
    const SubspaceWindow wi = avoiding_witness_ideal(sys, n, c.U1, c.U2, f2, w);
    const auto basis = wi.basis();
    const bool paired = std::all_of(basis.begin(), basis.end(), [&](const auto& e) { return paired_form_check(e, n); });
    const std::size_t meets_b = intersect_with_graded(wi, c.B).dim();
    r["witness_ideal"] = {{"generator", format_element(CrossedElement::monomial(f2, 0) +
                                                         CrossedElement::monomial(f2, n))},
                          {"dim", wi.dim()},
                          {"meets_B_dim", meets_b},
                          {"meets_A_dim", intersect_with_graded(wi, a).dim()},
                          {"supported_in_U2", window_supported_in(wi, c.U2)},
                          {"paired_form", paired}};
    if (probe) r["probe"] = probe_json(intersection_property_probe(sys, c.B, w));
    if (!strict || closure || meets_b != 0 || !paired || wi.dim() == 0) code = refuted;
  } else if (kind == "intersecting") {
    const auto c = build_intersecting_B(sys, x0, w);
    r["x0"] = c.x0;
    r["period"] = c.period;
    r["slices"] = {{"A", slices_json(a.slice_dims())},
                   {"B", slices_json(c.B.slice_dims())},
                   {"commutant", slices_json(ap.slice_dims())}};
    r["in_commutant_not_B"] = format_element(c.in_Aprime_not_B);
    r["equals_A"] = c.equals_A;
    r["note"] = c.note;
    const auto closure = conv_closure_failure(sys, c.B, w);
    r["closure_failure"] = closure ? json(*closure) : json(nullptr);
    if (probe) r["probe"] = probe_json(intersection_property_probe(sys, c.B, w));
    if (closure) code = refuted;
  } else {
    throw UsageError("--kind must be avoiding or intersecting");
  }
  return {r, digest(sys.to_json()), code};
}

Outcome laurent_cmd(const std::string& action, const std::string& f_src, const std::string& roots_src) {
  const std::string one_point = DynSystem::identity(1).to_json();
  if (f_src.empty() || roots_src.empty()) throw UsageError("laurent needs --f and --roots");
  const LaurentPoly f = parse_poly(f_src);
  const RootIdeal ideal(parse_scalar_list(roots_src));
  json r{{"f", format_poly(f)}, {"roots", vec_json(ideal.roots)}, {"ideal_generator", format_poly(ideal.generator())}};
  if (action == "member") {
    r["member"] = root_ideal_member(ideal, f);
    return {r, digest(one_point)};
  }
  const TrichotomyWitness w = trichotomy_witness(f, ideal);
  const bool member = root_ideal_member(ideal, w.value);
  const bool replayed = evaluate_in(w.poly_in_f, f) == w.value;
  r["value"] = format_poly(w.value);
  r["shifts"] = vec_json(w.shifts);
  r["poly_in_f"] = vec_json(w.poly_in_f);
  r["member"] = member;
  r["replay_ok"] = replayed;
  return {r, digest(one_point), member && replayed && !w.value.is_zero() ? ok : refuted};
}

json triquiv_json(const TriquivReport& t) {
  return {{"per_infinity_dense", t.per_infinity_dense},
          {"maximal_abelian", t.maximal_abelian},
          {"every_ideal_meets_A", t.every_ideal_meets_A},
          {"agree", t.agree},
          {"maximal_abelian_explanation", t.maximal_abelian_detail.explanation},
          {"witness_generator", format_element(t.witness_generator)},
          {"window", window_json(t.window)},
          {"witness_ideal_dim", t.ideal_window_dim},
          {"witness_meets_A_dim", t.meets_A_dim},
          {"paired_form", t.paired_form_holds}};
}

Outcome gelfand_cmd(const std::string& path) {
  if (path.empty()) throw UsageError("gelfand needs --algebra");
  const AbstractAlgebra alg = AbstractAlgebra::from_json(read_file(path));
  const GelfandData gd = gelfand_transform(alg);
  const TriquivReport t = triquiv_report(gd);
  json r;
  r["dim"] = alg.dim();
  r["characters"] = matrix_json(gd.characters);
  r["induced_sigma"] = json::parse(gd.induced_system.to_json())["sigma"];
  r["transform"] = matrix_json(gd.transform);
  r["separating_element"] = gd.separating_element ? vec_json(*gd.separating_element) : json(nullptr);
  const auto unit = alg.unit();
  r["unit"] = unit ? vec_json(*unit) : json(nullptr);
  r["triquiv"] = triquiv_json(t);
  return {r, digest(gd.induced_system.to_json()), t.agree ? ok : refuted};
}

UnitScalar parse_unit(const std::string& s) {
  auto v = parse_scalar_list(s);
  if (v.size() != 1) throw UsageError("expected a single unit scalar, got \"" + s + "\"");
  return UnitScalar(v[0]);
}

Outcome banach_cmd(const DynSystem& sys, DegreeWindow w, const std::string& action, const std::string& xi_list,
                   const std::string& element, std::size_t x, const std::string& xi, const std::string& other_xi) {
  json r;
  int code = ok;
  if (action == "characters") {
    std::vector<UnitScalar> samples;
    for (const auto& s : parse_scalar_list(xi_list)) samples.emplace_back(s);
    const auto chars = enumerate_characters(sys, samples);
    std::optional<CrossedElement> f;
    if (!element.empty()) f = parse_element(element, sys);
    json list = json::array();
    for (const auto& ch : chars) {
      json c{{"x", ch.x()}, {"xi", ch.xi().value().to_string()}};
      if (f) {
        c["value"] = char_eval(sys, ch, *f).to_string();
        c["bounded"] = char_bounded(sys, ch, *f);
      }
      list.push_back(std::move(c));
    }
    r["per_1"] = points_json(per_n(sys, 1));
    r["characters"] = list;
    r["bijection"] = kCharacterBijection;
    if (f) {
      const L1Norm n = l1_norm(sys, *f);
      r["l1_norm"] = n.display;
      r["l1_norm_exact"] = n.exact ? json(n.exact->to_string()) : json(nullptr);
    }
  } else if (action == "commutator-ideal") {
    const auto rep = commutator_ideal_report(sys, w);
    r["window"] = window_json(w);
    r["per_1"] = points_json(per_n(sys, 1));
    r["ideal_slices"] = slices_json(rep.ideal_slices);
    r["ker_slices"] = slices_json(rep.ker_slices);
    r["equal"] = rep.equal;
    code = rep.equal ? ok : refuted;
  } else if (action == "modular") {
    const Character ch(sys, x, parse_unit(xi));
    const ModularReport m = maximal_modular_report(sys, ch, w);
    r = {{"window", window_json(w)},
         {"x", x},
         {"xi", ch.xi().value().to_string()},
         {"ambient_dim", m.ambient_dim},
         {"kernel_dim", m.kernel_dim},
         {"codim", m.codim},
         {"contains_commutator_ideal", m.contains_commutator_ideal},
         {"closed_under_monomials", m.closed_under_monomials},
         {"unit_outside_kernel", m.unit_outside_kernel},
         {"approximate_unit", m.approximate_unit},
         {"classification", m.classification},
         {"ok", m.ok()}};
    if (!other_xi.empty()) {
      const Character other(sys, x, parse_unit(other_xi));
      const auto wit = kernel_distinguishing_witness(sys, ch, other);
      r["distinguishing_witness"] = wit ? json(format_element(*wit)) : json(nullptr);
      if (wit) {
        r["witness_values"] = {char_eval(sys, ch, *wit).to_string(), char_eval(sys, other, *wit).to_string()};
      }
    }
    code = m.ok() ? ok : refuted;
  } else {
    throw UsageError("banach action must be characters, commutator-ideal or modular");
  }
  return {r, digest(sys.to_json()), code};
}

void emit(std::ostream& out, const std::string& command, const Outcome& o, bool text) {
  json report{{"command", command}, {"system_digest", o.digest}, {"result", o.result}, {"version", 1}};
  if (!text) {
    out << report.dump(2) << '\n';
    return;
  }
  out << "command: " << command << '\n' << "system_digest: " << o.digest << '\n';
  for (const auto& [k, v] : o.result.items()) out << k << ": " << v.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"crossed products of function algebras by finite dynamical systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--system", g.system_path, "system JSON: {\"points\": N, \"sigma\": [...]}");
  app.add_option("--window", g.window, "degree window lo:hi")->capture_default_str();
  auto* json_flag = app.add_flag("--json", "JSON report (default)");
  auto* text_flag = app.add_flag("--text", g.text, "plain key: value lines");
  json_flag->excludes(text_flag);
  app.add_option("--seed", g.seed, "seed for randomized runs")->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "Per/Sep sets, orbits, predicates, maximal-abelian verdict");

  std::string element, replay_path;
  std::size_t random_cases = 0;
  auto* reduce_sub = app.add_subcommand("reduce", "reduce an element into the commutant");
  reduce_sub->add_option("--element", element, "element literal");
  reduce_sub->add_option("--replay", replay_path, "certificate JSON to verify");
  reduce_sub->add_option("--random", random_cases, "reduce this many random elements");

  std::vector<std::string> generators;
  std::string member;
  auto* ideal_sub = app.add_subcommand("ideal", "ideal generated by elements, restricted to the window");
  ideal_sub->add_option("--generator", generators, "generator literal (repeatable)");
  ideal_sub->add_option("--member", member, "element to test for membership");

  std::string kind, u1;
  Degree n = 1;
  std::size_t x0 = 0;
  bool probe = false;
  auto* between_sub = app.add_subcommand("between", "subalgebras between A and its commutant");
  between_sub->add_option("--kind", kind, "avoiding or intersecting")->required();
  between_sub->add_option("--n", n, "degree n (avoiding)")->capture_default_str();
  between_sub->add_option("--u1", u1, "invariant set U1, e.g. 0,1 (avoiding)");
  between_sub->add_option("--x0", x0, "point x0 (intersecting)")->capture_default_str();
  between_sub->add_flag("--probe", probe, "run the intersection-property probe");

  std::string f_src, roots_src;
  auto* laurent_sub = app.add_subcommand("laurent", "one-point system: Laurent polynomials");
  laurent_sub->require_subcommand(1);
  for (const char* name : {"witness", "member"}) {
    auto* s = laurent_sub->add_subcommand(name, name == std::string("witness") ? "prod (f - f(a_i)) and its checks"
                                                                                 : "divisibility by prod (t - a_i)");
    s->add_option("--f", f_src, "polynomial, e.g. t + t^-1")->required();
    s->add_option("--roots", roots_src, "roots, e.g. 2,1/2")->required();
  }

  std::string algebra_path;
  auto* gelfand_sub = app.add_subcommand("gelfand", "characters and induced system of an abstract algebra");
  gelfand_sub->add_option("--algebra", algebra_path, "algebra JSON")->required();

  std::string xi_list = "1,i,-1,-i", xi = "1", other_xi;
  std::size_t x = 0;
  auto* banach_sub = app.add_subcommand("banach", "l1 algebra: characters, commutator ideal, modular ideals");
  banach_sub->require_subcommand(1);
  auto* chars_sub = banach_sub->add_subcommand("characters", "characters (x, xi) for sampled xi");
  chars_sub->add_option("--xi", xi_list, "unit scalars to sample")->capture_default_str();
  chars_sub->add_option("--element", element, "element to evaluate");
  banach_sub->add_subcommand("commutator-ideal", "commutator ideal against Ker(per_1)");
  auto* mod_sub = banach_sub->add_subcommand("modular", "kernel of one character");
  mod_sub->add_option("--x", x, "fixed point")->capture_default_str();
  mod_sub->add_option("--xi", xi, "unit scalar")->capture_default_str();
  mod_sub->add_option("--other-xi", other_xi, "second xi for a kernel-distinguishing witness");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  }

  std::string command;
  for (std::size_t k = 0; k < args.size(); ++k) command += (k ? " " : "") + args[k];

  try {
    const DegreeWindow w = parse_window(g.window);
    Outcome o;
    if (analyze_cmd->parsed()) {
      o = analyze(load_system(g));
    } else if (reduce_sub->parsed()) {
      o = reduce_cmd(load_system(g), element, replay_path, random_cases, g.seed);
    } else if (ideal_sub->parsed()) {
      o = ideal_cmd(load_system(g), w, generators, member);
    } else if (between_sub->parsed()) {
      o = between_cmd(load_system(g), w, kind, n, u1, x0, probe);
    } else if (laurent_sub->parsed()) {
      o = laurent_cmd(laurent_sub->get_subcommands().front()->get_name(), f_src, roots_src);
    } else if (gelfand_sub->parsed()) {
      o = gelfand_cmd(algebra_path);
    } else {
      o = banach_cmd(load_system(g), w, banach_sub->get_subcommands().front()->get_name(), xi_list, element, x, xi,
                     other_xi);
    }
    emit(out, command, o, g.text);
    return o.code;
  } catch (const ParseError& e) {
    if (e.offset() == std::string::npos)
      err << "parse error: " << e.what() << '\n';
    else
      err << "parse error at byte " << e.offset() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return usage;
}

} // namespace xprod::cli
