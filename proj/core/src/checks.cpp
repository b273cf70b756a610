#include "hallfix/checks.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "hallfix/characters.hpp"
#include "hallfix/errors.hpp"
#include "hallfix/hall.hpp"

namespace hallfix {

namespace {

// Per-group memo so a scan builds each Hall context once.
class Session {
public:
  explicit Session(CheckTarget target)
  : _target(std::move(target))
  {}

  CheckTarget const &target() const noexcept { return _target; }
  PermGroup const &group() const noexcept { return _target.group; }

  /// nullptr when the group has no Hall pi-subgroup.
  HallContext const *context(PiSet const &pi)
  {
    auto it = _contexts.find(pi);
    if (it == _contexts.end()) {
      std::shared_ptr<HallContext> ctx;
      try {
        ctx = std::make_shared<HallContext>(build_hall_context(group(), pi));
      } catch (NoHallSubgroup const &) {
      }
      it = _contexts.emplace(pi, std::move(ctx)).first;
    }
    return it->second.get();
  }

  bool separable(PiSet const &pi)
  {
    auto it = _separable.find(pi);
    if (it == _separable.end())
      it = _separable.emplace(pi, is_pi_separable(group(), pi)).first;
    return it->second;
  }

private:
  CheckTarget _target;
  std::map<PiSet, std::shared_ptr<HallContext>> _contexts;
  std::map<PiSet, bool> _separable;
};

Record make_record(std::string check, Session const &s, std::string pi)
{
  Record r;
  r.check = std::move(check);
  r.group = s.target().name;
  r.pi = std::move(pi);
  return r;
}

Record no_hall(Record r, PiSet const &pi)
{
  r.status = Status::Inapplicable;
  r.witness = "no Hall " + pi.to_string() + "-subgroup";
  return r;
}

PiSet require_pi(CheckOptions const &o, std::string const &command)
{
  if (!o.pi)
    throw InvalidArgument(command + " requires --pi");
  return *o.pi;
}

Record check_mult(Session &s, PiSet const &pi)
{
  auto r = make_record("verify-mult", s, pi.to_string());
  auto const *ctx = s.context(pi);
  if (!ctx)
    return no_hall(std::move(r), pi);

  auto const alpha = alpha_multiplicative(*ctx, ctx->canonical_hall());
  bool independent = true;
  bool any_cyclic = false;
  for (auto const &h : ctx->halls()) {
    any_cyclic = any_cyclic || h.is_cyclic();
    if (alpha_multiplicative(*ctx, h) != alpha)
      independent = false;
  }
  bool const reduction = radical_reduction_check(*ctx, ctx->canonical_hall());

  r.witness = "alpha=" + alpha.to_string();
  if (!independent)
    r.witness += " depends-on-H";
  if (!reduction)
    r.witness += " radical-reduction-mismatch";

  bool const separable = s.separable(pi);
  bool const expected = s.target().entry && s.target().entry->is_expected_failure("verify-mult", pi);

  if (separable || any_cyclic) {
    r.status = alpha.is_one() && independent && reduction ? Status::Pass : Status::Fail;
  } else if (expected) {
    r.status = alpha.is_one() ? Status::Pass : Status::Fail;
    r.expected_fail = true;
    if (pi.primes().size() == 1u) {
      auto sides = nr2_sides(*ctx, ctx->canonical_hall(), pi.primes().front());
      r.witness += " nr2_raised=" + sides.raised.to_string() +
                   " nr2_powered=" + sides.powered.to_string() +
                   " nr2_deviation=" + sides.deviation().to_string();
    }
  } else {
    r.status = Status::Inapplicable;
    r.witness = "not " + pi.to_string() + "-separable and no cyclic Hall subgroup; " + r.witness;
  }
  return r;
}

Record check_add(Session &s, PiSet const &pi)
{
  auto r = make_record("verify-add", s, pi.to_string());
  auto const *ctx = s.context(pi);
  if (!ctx)
    return no_hall(std::move(r), pi);

  auto const &h = ctx->canonical_hall();
  auto const beta = beta_additive(*ctx);
  bool const normal = ctx->t() == 1u;
  bool const normal_nontrivial = normal && !h.is_trivial();

  std::vector<std::string> problems;
  if (!is_integer(beta))
    problems.push_back("not an integer");
  if (beta < 0)
    problems.push_back("negative");
  if ((beta == 0) != normal_nontrivial)
    problems.push_back("zero iff normal nontrivial violated");
  if (h.is_trivial() && beta != 1)
    problems.push_back("trivial Hall subgroup but beta != 1");
  if (normal != is_normal(s.group(), h))
    problems.push_back("t == 1 disagrees with normality");
  if (!normal && ctx->t() < 3u)
    problems.push_back("non-normal Hall subgroup with t < 3");
  if (ctx->t() <= 10u) {
    for (auto const &k : ctx->halls()) {
      if (beta_additive_for(*ctx, k) != beta) {
        problems.push_back("depends on H");
        break;
      }
    }
  }

  r.status = problems.empty() ? Status::Pass : Status::Fail;
  r.witness = to_decimal(beta);
  for (auto const &p : problems)
    r.witness += "; " + p;
  return r;
}

Record check_sym_char(Session &s, PiSet const &pi)
{
  auto r = make_record("sym-char", s, pi.to_string());

  auto s2 = close({parse_permutation("(1 2)", 2)}, 2);
  SymCharSpec alt(sign_character(s2));
  SymCharSpec sym(trivial_character(s2));

  auto square_ok = [&](CharacterTable const &chi) {
    for (auto const &h : chi.group().elements()) {
      auto a = sym_char(alt, chi, h);
      auto b = sym_char(sym, chi, h);
      auto c = chi(h);
      if (a + b != c * c || b - a != chi(h * h))
        return false;
    }
    return true;
  };

  bool ok = square_ok(conjugation_character(s.group()));
  std::string witness = ok ? "conjugation-square=ok" : "conjugation-square=violated";

  if (auto const *ctx = s.context(pi)) {
    auto const &h = ctx->canonical_hall();
    auto lambda = lambda_character(*ctx, h);
    bool const lam_ok = square_ok(lambda);

    BigRational avg = 0;
    for (auto const &x : h.elements())
      avg += sym_char_cyclic(lambda, ctx->n(), x);
    avg /= BigRational(BigInt(h.order()));
    bool const avg_ok = avg == beta_additive(*ctx);

    ok = ok && lam_ok && avg_ok;
    witness += lam_ok ? " lambda-square=ok" : " lambda-square=violated";
    witness += " cyclic-average=" + to_decimal(avg) + (avg_ok ? "" : " (beta mismatch)");
  } else {
    witness += " lambda part skipped: no Hall " + pi.to_string() + "-subgroup";
  }

  r.status = ok ? Status::Pass : Status::Fail;
  r.witness = witness;
  return r;
}

Record check_interpretation(Session &s, PiSet const &pi, CheckOptions const &o)
{
  auto r = make_record("interpretation", s, pi.to_string());
  auto const *ctx = s.context(pi);
  if (!ctx)
    return no_hall(std::move(r), pi);

  try {
    auto res = interpretation_check(*ctx, o.tuple_cap);
    r.status = res.holds() ? Status::Pass : Status::Fail;
    r.witness = "beta=" + to_decimal(res.beta) + " orbit_sum=" + to_decimal(res.orbit_sum);
  } catch (NotApplicable const &ex) {
    r.status = Status::Inapplicable;
    r.witness = ex.what();
  } catch (CapExceeded const &ex) {
    r.status = Status::Inapplicable;
    r.witness = ex.what();
  }
  return r;
}

std::optional<std::uint64_t> prime_of_power(std::uint64_t n)
{
  auto f = factorize(n);
  if (f.size() != 1u)
    return std::nullopt;
  return f.front().first;
}

Record check_nr(Session &s, CheckOptions const &o)
{
  auto r = make_record("verify-nr", s, o.pi ? o.pi->to_string() : "");
  auto const *entry = s.target().entry;
  if (!entry || !entry->has_scenario()) {
    r.status = Status::Inapplicable;
    r.witness = "no coprime action scenario";
    return r;
  }

  auto scen = entry->scenario(s.group());
  std::optional<std::uint64_t> p;
  if (o.pi) {
    if (o.pi->primes().size() != 1u)
      throw InvalidArgument("verify-nr takes a single prime");
    p = o.pi->primes().front();
  } else {
    p = prime_of_power(scen.h().order());
  }
  if (!p) {
    r.pi = PiSet(prime_divisors(scen.h().order())).to_string();
    r.status = Status::Inapplicable;
    r.witness = "acting group of order " + std::to_string(scen.h().order()) + " is not a p-group";
    return r;
  }
  r.pi = PiSet{*p}.to_string();

  NrCheck nr;
  try {
    nr = nr_check(scen, *p);
  } catch (NotApplicable const &ex) {
    r.status = Status::Inapplicable;
    r.witness = ex.what();
    return r;
  }

  // lambda from the Sylow count must be the centralizer index.
  bool lambda_ok = true;
  if (auto const *ctx = s.context(PiSet{*p})) {
    for (auto const &x : scen.h().elements()) {
      if (ctx->lambda(x) * nr.lhs != centralizer_in(scen.n(), x).order())
        lambda_ok = false;
    }
  } else {
    lambda_ok = false;
  }

  r.status = nr.holds() && lambda_ok ? Status::Pass : Status::Fail;
  r.witness = "C_N(P)=" + std::to_string(nr.lhs) + " rhs=" + nr.rhs.to_string() +
              (nr.rhs_exact ? "" : "(inexact)") + " cleared=" + nr.cleared_left.to_string() +
              "|" + nr.cleared_right.to_string() + " eq2=" + nr.eq2_left.to_string() + "|" +
              nr.eq2_right.to_string() + (lambda_ok ? "" : " lambda-index-mismatch");
  return r;
}

Record check_wielandt(Session &s)
{
  auto r = make_record("verify-wielandt", s, "");
  auto const *entry = s.target().entry;
  if (!entry || !entry->has_scenario()) {
    r.status = Status::Inapplicable;
    r.witness = "no coprime action scenario";
    return r;
  }

  auto scen = entry->scenario(s.group());
  PiSet const pi(prime_divisors(scen.h().order()));
  r.pi = pi.to_string();

  auto sides = wielandt_product(scen);
  auto link = wielandt_alpha_link(scen);

  bool link_ok = false;
  FactoredRational alpha;
  if (auto const *ctx = s.context(pi)) {
    alpha = alpha_multiplicative(*ctx, scen.h());
    link_ok = alpha == link;
  }

  r.status = sides.holds() && link_ok ? Status::Pass : Status::Fail;
  r.witness = "lhs=" + sides.lhs.to_string() + " rhs=" + sides.rhs.to_string() +
              " alpha=" + alpha.to_string() + " link=" + link.to_string();
  return r;
}

Record check_curiosity(Session &s, CheckOptions const &o)
{
  auto const pi = o.pi.value_or(default_curiosity_pi());
  auto r = make_record("curiosity", s, pi.to_string());
  auto const n = o.n.value_or(s.group().order());
  try {
    auto value = curiosity(s.group(), pi, n);
    r.status = is_integer(value) && value >= 0 ? Status::Pass : Status::Fail;
    r.witness = to_decimal(value);
  } catch (NoHallSubgroup const &) {
    return no_hall(std::move(r), pi);
  }
  return r;
}

Record check_lambda(Session &s, PiSet const &pi)
{
  auto r = make_record("lambda", s, pi.to_string());
  auto const *ctx = s.context(pi);
  if (!ctx)
    return no_hall(std::move(r), pi);
  r.status = Status::Pass;
  r.witness = "n=" + std::to_string(ctx->n()) + " t=" + std::to_string(ctx->t());
  return r;
}

Record check_tags(Session &s)
{
  auto r = make_record("tags", s, "");
  auto issues = verify_tags(*s.target().entry);
  r.status = issues.empty() ? Status::Pass : Status::Fail;
  for (auto const &i : issues)
    r.witness += (r.witness.empty() ? "" : "; ") + i;
  return r;
}

void scan_entry(Session &s, CheckOptions const &o, std::vector<Record> &out)
{
  auto const &entry = *s.target().entry;
  out.push_back(check_tags(s));
  for (auto const &pi : entry.scan_pis()) {
    out.push_back(check_mult(s, pi));
    out.push_back(check_add(s, pi));
    out.push_back(check_sym_char(s, pi));
    out.push_back(check_interpretation(s, pi, o));
  }
  if (entry.has_scenario()) {
    CheckOptions nr_opts = o;
    nr_opts.pi.reset();
    out.push_back(check_nr(s, nr_opts));
    out.push_back(check_wielandt(s));
  }
  if (entry.curiosity) {
    CheckOptions c = o;
    c.pi.reset();
    c.n.reset();
    out.push_back(check_curiosity(s, c));
  }
}

} // namespace

std::vector<std::string> const &check_commands()
{
  static std::vector<std::string> const commands{
    "lambda", "verify-mult", "verify-add", "verify-nr", "verify-wielandt",
    "sym-char", "interpretation", "curiosity", "scan"};
  return commands;
}

CheckTarget resolve_target(std::string const &name_or_path, std::uint64_t cap)
{
  CheckTarget t{name_or_path, load_group(name_or_path, cap), find_builtin(name_or_path)};
  return t;
}

std::vector<Record> run_check(std::string const &command, CheckTarget const &target,
                              CheckOptions const &options)
{
  auto const &cmds = check_commands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
    throw InvalidArgument("unknown command '" + command + "'");
  if (command == "scan")
    return scan_corpus(options);

  Session s(target);
  if (command == "lambda")
    return {check_lambda(s, require_pi(options, command))};
  if (command == "verify-mult")
    return {check_mult(s, require_pi(options, command))};
  if (command == "verify-add")
    return {check_add(s, require_pi(options, command))};
  if (command == "sym-char")
    return {check_sym_char(s, require_pi(options, command))};
  if (command == "interpretation")
    return {check_interpretation(s, require_pi(options, command), options)};
  if (command == "verify-nr")
    return {check_nr(s, options)};
  if (command == "verify-wielandt")
    return {check_wielandt(s)};
  return {check_curiosity(s, options)};
}

std::vector<Record> scan_corpus(CheckOptions const &options)
{
  std::vector<Record> out;
  for (auto const &entry : builtin_corpus()) {
    Session s(CheckTarget{entry.name, entry.group(options.cap), &entry});
    scan_entry(s, options, out);
  }
  return out;
}

} // namespace hallfix
