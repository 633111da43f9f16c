// nsq: command-line front end for the numerical semigroup toolkit.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nsq/ctengine.hpp"
#include "nsq/quotient.hpp"
#include "nsq/render.hpp"
#include "nsq/rgf.hpp"

using namespace nsq;

namespace {

enum Exit { Ok = 0, Usage = 1, Domain = 2, Cap = 3, Check = 4 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Parse:
      return Usage;
    case ErrorKind::CapExceeded:
      return Cap;
    case ErrorKind::InternalMismatch:
    case ErrorKind::CertificationFailed:
      return Check;
    default:
      return Domain;
  }
}

struct Options {
  std::string gens;
  std::int64_t p = 1;
  std::optional<std::int64_t> bound;
  std::optional<std::int64_t> trunc;
  std::optional<std::int64_t> n;
  std::int64_t m = 0;
  std::size_t index = 0;
  std::string expr;
  std::string format = "text";
  bool minimal = false;
  bool verify = false;
  std::int64_t sieve_cap = Limits{}.sieve_cap;
  std::int64_t tp_cap = Limits{}.tp_cap;
  std::size_t count = 50;
  std::uint64_t seed = 1;

  bool json() const { return format == "json"; }
  Limits limits() const { return Limits{sieve_cap, tp_cap}; }
};

GeneratorList parse_gens(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "--gens is required");
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1)
      throw Error(ErrorKind::Parse, "generators must be comma-separated positive integers, got \"" + item + "\"");
    out.push_back(v);
  }
  if (text.back() == ',') throw Error(ErrorKind::Parse, "trailing comma in --gens");
  return GeneratorList(std::move(out));
}

Json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json optional_to_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string optional_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json())
    std::cout << j.dump() << "\n";
  else
    std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
}

std::string series_text(const std::vector<BigInt>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + c[i].get_str();
  return s;
}

Json series_json(const std::vector<BigInt>& c) {
  Json a = Json::array();
  for (const auto& v : c) a.push_back(big_to_json(v));
  return a;
}

std::vector<std::int64_t> members_to(const MembershipTable& t, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= bound; ++n)
    if (t.contains(n)) out.push_back(n);
  return out;
}

void emit_table(const Options& o, const MembershipTable& t) {
  const std::int64_t bound = o.bound.value_or(t.bound());
  const auto members = members_to(t, bound);
  Json j;
  j["bound"] = bound;
  j["members"] = members;
  j["conductor"] = optional_to_json(t.conductor());
  emit(o, j, join_ints(members));
}

std::vector<std::int64_t> denominator_guess(const GeneratorList& g, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (auto a : g.input()) out.push_back(a / std::gcd(a, p));
  return out;
}

/// Renders a rational function over the guessed binomial denominator when it
/// divides evenly, in the same text form as the series route.
std::pair<Json, std::string> rgf_like(const RationalFunction& f, const std::vector<std::int64_t>& denoms) {
  if (auto num = numerator_over(f, denoms)) {
    Json j;
    j["num"] = poly_to_json(*num);
    j["den"] = denoms;
    return {j, RGFRational{*num, denoms, 0}.to_text()};
  }
  return {to_json(f), to_string(f)};
}

int verify_failed(const std::string& what) {
  std::cerr << "verification failed: " << what << "\n";
  return Check;
}

// ---------------------------------------------------------------------------

int cmd_membership(const Options& o) {
  const auto g = parse_gens(o.gens);
  const auto t = o.bound ? build_membership(g, *o.bound, o.limits()) : build_membership(g, std::nullopt, o.limits());
  emit_table(o, t);
  return Ok;
}

int cmd_frobenius(const Options& o) {
  const auto f = frobenius(parse_gens(o.gens), o.limits());
  emit(o, Json{{"frobenius", optional_to_json(f)}}, optional_text(f));
  return Ok;
}

int cmd_gaps(const Options& o) {
  const auto g = gaps(parse_gens(o.gens), o.limits());
  emit(o, Json{{"gaps", g}}, join_ints(g));
  return Ok;
}

int cmd_apery(const Options& o) {
  const auto a = apery(parse_gens(o.gens), o.m, o.limits());
  emit(o, Json{{"m", o.m}, {"apery", a}}, join_ints(a));
  return Ok;
}

int cmd_minimal(const Options& o) {
  const auto g = minimal_generators(parse_gens(o.gens), o.limits());
  emit(o, Json{{"minimal_generators", g}}, join_ints(g));
  return Ok;
}

int cmd_denumerant(const Options& o) {
  const auto g = parse_gens(o.gens);
  if (o.trunc) {
    const auto c = denumerant_series(g, *o.trunc).coefficients();
    emit(o, Json{{"order", *o.trunc}, {"coefficients", series_json(c)}}, series_text(c));
    return Ok;
  }
  if (!o.n) throw Error(ErrorKind::InvalidArgument, "give --n for a single value or --trunc for a series");
  if (*o.n < 0) throw Error(ErrorKind::InvalidArgument, "--n must be nonnegative");
  const BigInt d = denumerant(*o.n, g);
  emit(o, Json{{"n", *o.n}, {"denumerant", big_to_json(d)}}, d.get_str());
  return Ok;
}

QuotientSpec quotient_spec(const Options& o) { return QuotientSpec(parse_gens(o.gens), o.p); }

int cmd_quotient_gens(const Options& o) {
  const auto q = quotient_spec(o);
  const auto g = o.minimal ? minimal_quotient_generators(q, o.limits()) : generators_thm(q, o.limits());
  emit(o, Json{{"generators", g}}, join_ints(g));
  if (o.verify && !o.minimal && !verify_generators(q, o.limits()).pass)
    return verify_failed("generator system differs from the quotient");
  return Ok;
}

int cmd_quotient_membership(const Options& o) {
  emit_table(o, quotient_membership(quotient_spec(o), o.bound, o.limits()));
  return Ok;
}

int cmd_quotient_frobenius(const Options& o) {
  const auto q = quotient_spec(o);
  const auto f = frobenius_quotient(q, o.limits());
  emit(o, Json{{"frobenius", optional_to_json(f)}}, optional_text(f));
  if (o.verify && frobenius_from_rgf(q.gens(), q.p(), o.limits()) != f)
    return verify_failed("series Frobenius number differs");
  return Ok;
}

int cmd_quotient_minimal(const Options& o) {
  const auto g = minimal_quotient_generators(quotient_spec(o), o.limits());
  emit(o, Json{{"minimal_generators", g}}, join_ints(g));
  return Ok;
}

int cmd_quotient_table1(const Options& o) {
  const auto q = quotient_spec(o);
  const auto g = table1_generators(q);
  emit(o, Json{{"generators", g}}, join_ints(g));
  if (o.verify && !semigroup_equal(GeneratorList(g), GeneratorList(generators_thm(q, o.limits())), o.limits()))
    return verify_failed("closed-form system differs from the quotient");
  return Ok;
}

int cmd_quotient_verify(const Options& o) {
  const auto r = verify_generators(quotient_spec(o), o.limits());
  Json j;
  j["pass"] = r.pass;
  j["bound"] = r.bound;
  j["generators"] = r.generators;
  j["first_mismatch"] = optional_to_json(r.first_mismatch);
  emit(o, j, std::string(r.pass ? "pass" : "fail") + " bound=" + std::to_string(r.bound));
  return r.pass ? Ok : Check;
}

int cmd_tp(const Options& o) {
  const auto g = parse_gens(o.gens);
  if (o.p < 1) throw Error(ErrorKind::InvalidArgument, "p must be a positive integer");
  std::vector<std::int64_t> coprime;
  for (auto a : g.sorted())
    if (a % o.p != 0) coprime.push_back(a);
  const auto tp = enumerate_tp(coprime, o.p, o.limits());
  Json j;
  j["p"] = o.p;
  j["gens"] = tp.gens;
  j["tuples"] = tp.tuples;
  j["values"] = tp.values;
  emit(o, j, render_tp_rows(tp));
  return Ok;
}

int cmd_rgf_series(const Options& o) {
  const auto g = parse_gens(o.gens);
  const std::int64_t n = o.trunc.value_or(20);
  const auto c = rgf_series(g, o.p, n).coefficients.coefficients();
  emit(o, Json{{"p", o.p}, {"order", n}, {"coefficients", series_json(c)}}, series_text(c));
  return Ok;
}

int cmd_rgf_rational(const Options& o) {
  const auto g = parse_gens(o.gens);
  const auto r = rgf_rational(g, o.p, o.limits());
  emit(o, to_json(r), r.to_text());
  if (!o.verify) return Ok;
  const long order = 2 * r.certified_to;
  if (series_from_rational(r.to_rational_function(), order) !=
      to_rational_series(rgf_series(g, o.p, order).coefficients))
    return verify_failed("closed form differs from the series past the horizon");
  try {
    if (!(ct_rgf_rational(g, o.p) == r.to_rational_function()))
      return verify_failed("constant-term route differs");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonCoprimeFactors) throw;
    std::cerr << "warning: CT path unavailable; series check only\n";
  }
  return Ok;
}

int cmd_rgf_frobenius(const Options& o) {
  const auto g = parse_gens(o.gens);
  const auto f = frobenius_from_rgf(g, o.p, o.limits());
  emit(o, Json{{"frobenius", optional_to_json(f)}}, optional_text(f));
  if (o.verify && frobenius_quotient(QuotientSpec(g, o.p), o.limits()) != f)
    return verify_failed("sieve Frobenius number differs");
  return Ok;
}

int cmd_rgf_gens(const Options& o) {
  const auto g = parse_gens(o.gens);
  const auto r = rgf_rational(g, o.p, o.limits());
  auto out = gens_from_rgf(r);
  if (o.minimal) out = minimal_generators(GeneratorList(out), o.limits());
  emit(o, Json{{"generators", out}}, join_ints(out));
  if (o.verify && !semigroup_equal(GeneratorList(out), GeneratorList(generators_thm(QuotientSpec(g, o.p), o.limits())),
                                   o.limits()))
    return verify_failed("numerator support does not generate the quotient");
  return Ok;
}

CTExpr parse_expr(const Options& o) {
  if (o.expr.empty()) throw Error(ErrorKind::Parse, "--expr is required");
  return parse_ct_expr(o.expr);
}

std::string_view route_name(CtRoute r) {
  switch (r) {
    case CtRoute::Primal:
      return "primal";
    case CtRoute::Dual:
      return "dual";
    default:
      return "polynomial";
  }
}

int cmd_ct_eval(const Options& o) {
  const auto ev = evaluate_ct(parse_expr(o));
  Json j = to_json(ev.value);
  j["route"] = route_name(ev.route);
  emit(o, j, to_string(ev.value));
  if (o.verify && !(ev.primal && ev.dual))
    std::cerr << "warning: only the " << route_name(ev.route) << " formula applies; nothing to cross-check\n";
  return Ok;
}

int cmd_ct_normalize(const Options& o) {
  const std::string text = render_ct_expr(normalize_expr(parse_expr(o)));
  emit(o, Json{{"expr", text}}, text);
  return Ok;
}

int cmd_ct_residue(const Options& o) {
  const auto r = residue_a0(parse_expr(o), o.index);
  Json j;
  j["index"] = r.factor_index;
  j["a0"] = to_json(r.a0);
  j["contributing"] = to_string(r.contributing);
  emit(o, j, to_string(r.a0) + " (" + std::string(to_string(r.contributing)) + ")");
  return Ok;
}

int cmd_ct_lemma(const Options& o) {
  const bool ok = lemma_zero_check(parse_expr(o));
  emit(o, Json{{"residue_sum_zero", ok}}, ok ? "true" : "false");
  return Ok;
}

int cmd_ct_rgf(const Options& o) {
  const auto g = parse_gens(o.gens);
  try {
    const auto f = ct_rgf_rational(g, o.p);
    auto [j, text] = rgf_like(f, denominator_guess(g, o.p));
    j["route"] = "ct";
    emit(o, j, text);
    if (o.verify && !(rgf_rational(g, o.p, o.limits()).to_rational_function() == f))
      return verify_failed("series route differs");
    return Ok;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonCoprimeFactors) throw;
  }
  std::cerr << "warning: CT path unavailable; series path used\n";
  const auto r = rgf_rational(g, o.p, o.limits());
  Json j = to_json(r);
  j["route"] = "series";
  emit(o, j, r.to_text());
  return Ok;
}

// Random cross-validation of the independent routes.
int cmd_verify(const Options& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<std::int64_t> value(1, 30), pick_p(1, 6);
  std::size_t done = 0, ct_checked = 0;
  std::vector<std::string> failures;
  while (done < o.count) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(count(rng)));
    for (auto& v : a) v = value(rng);
    if (gcd_of(a) != 1) continue;
    const std::int64_t p = pick_p(rng);
    const GeneratorList g(a);
    const QuotientSpec q(g, p);
    const std::string where = "gens=" + join_ints(a, ",") + " p=" + std::to_string(p);
    if (!verify_generators(q, o.limits()).pass) failures.push_back("generators " + where);
    if (frobenius_from_rgf(g, p, o.limits()) != frobenius_quotient(q, o.limits()))
      failures.push_back("frobenius " + where);
    if (a.size() <= 3) {
      try {
        if (!(ct_rgf_rational(g, p) == rgf_rational(g, p, o.limits()).to_rational_function()))
          failures.push_back("ct " + where);
        ++ct_checked;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonCoprimeFactors) throw;
      }
    }
    ++done;
  }
  Json j;
  j["instances"] = done;
  j["ct_checked"] = ct_checked;
  j["failures"] = failures;
  std::string text = "checked " + std::to_string(done) + " instances (" + std::to_string(ct_checked) +
                     " through the CT route): " + (failures.empty() ? "all agree" : "disagreements found");
  for (const auto& f : failures) text += "\n  " + f;
  emit(o, j, text);
  return failures.empty() ? Ok : Check;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups, quotients and representation generating functions"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto common = [&](CLI::App* sub, bool gens, bool p) {
    if (gens) sub->add_option("--gens", o.gens, "comma-separated positive integers")->required();
    if (p) sub->add_option("--p", o.p, "quotient divisor")->required()->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--sieve-cap", o.sieve_cap, "largest sieve size")->envname("NSQ_SIEVE_CAP");
    sub->add_option("--tp-cap", o.tp_cap, "largest tuple enumeration")->envname("NSQ_TP_CAP");
    sub->add_flag("--verify", o.verify, "cross-check against an independent route");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, bool gens, bool p,
                  int (*fn)(const Options&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    common(sub, gens, p);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  leaf(&app, "membership", "members of <A> up to a bound", true, false, cmd_membership)
      ->add_option("--bound", o.bound, "sieve bound");
  leaf(&app, "frobenius", "Frobenius number", true, false, cmd_frobenius);
  leaf(&app, "gaps", "gaps of <A>", true, false, cmd_gaps);
  leaf(&app, "apery", "Apery set with respect to m", true, false, cmd_apery)
      ->add_option("--m", o.m, "a nonzero member")
      ->required();
  leaf(&app, "minimal-gens", "minimal generating set", true, false, cmd_minimal);
  {
    auto* d = leaf(&app, "denumerant", "number of representations", true, false, cmd_denumerant);
    d->add_option("--n", o.n, "value to represent");
    d->add_option("--trunc", o.trunc, "series order");
  }
  {
    auto* q = app.add_subcommand("quotient", "the quotient <A>/p");
    q->require_subcommand(1);
    leaf(q, "gens", "generator system", true, true, cmd_quotient_gens)
        ->add_flag("--minimal", o.minimal, "minimal generators instead");
    leaf(q, "membership", "members up to a bound", true, true, cmd_quotient_membership)
        ->add_option("--bound", o.bound, "bound");
    leaf(q, "frobenius", "Frobenius number of the quotient", true, true, cmd_quotient_frobenius);
    leaf(q, "minimal", "minimal generators", true, true, cmd_quotient_minimal);
    leaf(q, "table1", "closed-form system for three generators, p in {2,3}", true, true, cmd_quotient_table1);
    leaf(q, "verify", "check the generator system against the quotient", true, true, cmd_quotient_verify);
  }
  leaf(&app, "tp", "tuples with positive residue sum divisible by p", true, true, cmd_tp);
  {
    auto* r = app.add_subcommand("rgf", "representation generating function");
    r->require_subcommand(1);
    leaf(r, "series", "coefficients d(p n; A)", true, true, cmd_rgf_series)->add_option("--trunc", o.trunc, "order");
    leaf(r, "rational", "certified closed form", true, true, cmd_rgf_rational);
    leaf(r, "frobenius", "Frobenius number read from the series", true, true, cmd_rgf_frobenius);
    leaf(r, "gens", "generators from the numerator support", true, true, cmd_rgf_gens)
        ->add_flag("--minimal", o.minimal, "minimalize");
  }
  {
    auto* c = app.add_subcommand("ct", "constant terms in L");
    c->require_subcommand(1);
    auto expr = [&](CLI::App* s) { s->add_option("--expr", o.expr, "expression, e.g. 1/((1 - x*L^-2)*(1 - L^3))")->required(); };
    expr(leaf(c, "eval", "constant term", false, false, cmd_ct_eval));
    expr(leaf(c, "normalize", "nonnegative L exponents", false, false, cmd_ct_normalize));
    auto* res = leaf(c, "residue", "A_s(0) at one factor", false, false, cmd_ct_residue);
    expr(res);
    res->add_option("--index", o.index, "factor index")->required();
    expr(leaf(c, "lemma", "residue sum for proper expressions vanishing at 0", false, false, cmd_ct_lemma));
    leaf(c, "rgf", "RGF through constant terms", true, true, cmd_ct_rgf);
  }
  {
    auto* v = leaf(&app, "verify", "random cross-validation", false, false, cmd_verify);
    v->add_option("--count", o.count, "instances");
    v->add_option("--seed", o.seed, "random seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }
  try {
    return action(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
}
