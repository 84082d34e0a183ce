#include "coinc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "coinc/certify.hpp"
#include "coinc/charclass.hpp"
#include "coinc/json.hpp"
#include "coinc/oracle.hpp"
#include "coinc/spaces.hpp"

namespace coinc::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  // sqd
  int q = 0, d = 0;
  bool show_stability = false;
  // alpha / modp / oddp
  unsigned p = 0;
  int i = 0;
  std::optional<int> k;
  // manifolds
  int m = 0, n = 0, l = 0;
  std::optional<int> rp, cp;
  std::string space;
  // oracle
  bool float_mode = false;
  std::uint64_t seed = 1;
};

std::string format_param(const certify::ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bool>)
          return x ? "true" : "false";
        else
          return std::to_string(x);
      },
      v);
}

void print_certificate(std::ostream& out, const certify::Certificate& c) {
  out << certify::kind_name(c.kind) << ": " << (c.conclusive ? "conclusive" : "inconclusive") << "\n";
  out << "  params:";
  for (const auto& [k, v] : c.params) out << " " << k << "=" << format_param(v);
  out << "\n";
  out << "  evaluated: " << c.evaluated.to_string() << "  in " << c.evaluated.ring().id() << "\n";
  out << "  witness: " << (c.witness ? c.witness->to_string() : "none") << "\n";
  out << "  bound: " << (c.bound ? std::to_string(*c.bound) : "none") << "\n";
  for (const auto& note : c.notes) out << "  note: " << note << "\n";
}

int emit_certificate(std::ostream& out, const Options& o, const certify::Certificate& c) {
  if (o.json)
    out << to_json(c).dump(2) << "\n";
  else
    print_certificate(out, c);
  return c.conclusive ? kOk : kInconclusive;
}

spaces::ClassSeries require_space(const Options& o) {
  if (o.space.empty()) throw std::invalid_argument("--space FILE is required");
  return spaces::load_manifest(o.space);
}

int cmd_sqd(std::ostream& out, const Options& o) {
  charclass::SqdResult r = charclass::compute_s(o.q, o.d);
  if (o.json) {
    ordered_json j = to_json(r);
    if (o.show_stability) {
      GradedPoly next = charclass::compute_s_at(o.q, o.d, r.nu + 1, r.mu + 1);
      j["stability"] = {{"nu", r.nu + 1}, {"mu", r.mu + 1}, {"text", next.to_string()}, {"equal", next == r.formula}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << r.formula.to_string() << "\n";
    if (o.show_stability) {
      GradedPoly next = charclass::compute_s_at(o.q, o.d, r.nu + 1, r.mu + 1);
      out << "stability: (nu=" << r.nu << ", mu=" << r.mu << ") " << r.formula.to_string() << "\n";
      out << "stability: (nu=" << r.nu + 1 << ", mu=" << r.mu + 1 << ") " << next.to_string() << "\n";
    }
  }
  return kOk;
}

int cmd_alpha(std::ostream& out, const Options& o) {
  charclass::AlphaResult r = o.k ? charclass::alpha_class(o.p, o.i, *o.k) : charclass::alpha_class(o.p, o.i);
  if (o.json)
    out << to_json(r).dump(2) << "\n";
  else
    out << r.formula.to_string() << "\n";
  return kOk;
}

int cmd_multiplicity_rp(std::ostream& out, const Options& o) {
  return emit_certificate(out, o, certify::multiplicity_rp(o.m, o.n, o.q));
}

int cmd_multiplicity_modp(std::ostream& out, const Options& o) {
  spaces::ClassSeries s = o.cp ? spaces::cp_pontryagin_virtual(*o.cp, o.n, o.p) : require_space(o);
  return emit_certificate(out, o, certify::multiplicity_modp(s, o.p));
}

int cmd_genus_pow2(std::ostream& out, const Options& o) {
  if (o.l > 0) return emit_certificate(out, o, certify::genus_pow2_rp(o.l, o.d, o.q));
  return emit_certificate(out, o, certify::genus_pow2(o.m, o.d, o.q, require_space(o)));
}

int cmd_genus_four(std::ostream& out, const Options& o) {
  if (o.rp) return emit_certificate(out, o, certify::genus_four(*o.rp, spaces::normal_sw_rp(*o.rp)));
  return emit_certificate(out, o, certify::genus_four(o.m, require_space(o)));
}

int cmd_genus_oddp(std::ostream& out, const Options& o) {
  if (o.cp) {
    spaces::ClassSeries dual = spaces::cp_pontryagin_virtual(*o.cp, 0, o.p);
    return emit_certificate(out, o, certify::genus_oddp(2 * *o.cp, o.p, o.i, dual));
  }
  return emit_certificate(out, o, certify::genus_oddp(o.m, o.p, o.i, require_space(o)));
}

template <class S>
void print_tuple(std::ostream& out, const oracle::CoincidentTuple<S>& t) {
  auto show = [&](const auto& v) {
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ")";
  };
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    out << "  point " << i + 1 << ": ";
    show(t.points[i]);
    out << "\n";
  }
  out << "  image: ";
  show(t.image);
  out << "\n  residual: " << t.residual << "\n  min separation: " << t.min_separation << "\n";
}

template <class S>
bool tuple_ok(const oracle::CoincidentTuple<S>& t) {
  if constexpr (std::is_same_v<S, double>)
    return t.residual < 1e-9 && t.min_separation > 0;
  else
    return t.residual == 0 && t.min_separation > 0;
}

template <class S>
int morin(std::ostream& out, const Options& o) {
  auto w = oracle::morin_tuple<S>(o.k.value_or(1), o.m, o.n);
  if (o.json) {
    ordered_json roots = ordered_json::array();
    for (const auto& r : w.roots) roots.push_back(to_json(r));
    out << ordered_json{{"kind", "morin"},
                        {"model", {{"k", w.model.k}, {"m", w.model.m}, {"n", w.model.n}}},
                        {"roots", roots},
                        {"tuple", to_json(w.tuple)}}
               .dump(2)
        << "\n";
  } else {
    out << "morin k=" << w.model.k << " m=" << w.model.m << " n=" << w.model.n << " ("
        << (std::is_same_v<S, double> ? "float" : "exact") << ")\n";
    print_tuple(out, w.tuple);
  }
  return tuple_ok(w.tuple) ? kOk : kInternalError;
}

/// Deterministic small rationals from the seed: num/den with |num| <= 10.
template <class S>
S seeded_value(std::mt19937_64& rng) {
  long long num = (long long)(rng() % 21) - 10;
  long long den = (long long)(rng() % 4) + 1;
  return S(num) / S(den);
}

template <class S>
int moment(std::ostream& out, const Options& o) {
  const int N = o.n + o.d;
  if (o.n < 1 || o.d < 0) throw std::invalid_argument("moment needs n >= 1 and d >= 0");
  std::mt19937_64 rng(o.seed);
  std::vector<S> c, t;
  for (int i = 0; i < N; ++i) c.push_back(seeded_value<S>(rng));
  // Distinct parameters: a random start plus increasing positive steps.
  S cur = seeded_value<S>(rng);
  for (int j = 0; j < o.q; ++j) {
    t.push_back(cur);
    cur = cur + S((long long)(rng() % 3) + 1) / S(2);
  }
  auto tup = oracle::moment_tuple<S>(o.n, o.d, o.q, c, t);
  if (o.json) {
    out << ordered_json{{"kind", "moment"},
                        {"n", o.n},
                        {"d", o.d},
                        {"q", o.q},
                        {"seed", o.seed},
                        {"tuple", to_json(tup)}}
               .dump(2)
        << "\n";
  } else {
    out << "moment curve n=" << o.n << " d=" << o.d << " q=" << o.q << " seed=" << o.seed << "\n";
    print_tuple(out, tup);
  }
  return tuple_ok(tup) ? kOk : kInternalError;
}

int cmd_table(std::ostream& out, const Options& o) {
  auto rows = certify::theorem3_table(o.l);
  const int n = (1 << o.l) - 2;
  if (o.json) {
    ordered_json jr = ordered_json::array();
    for (const auto& r : rows) jr.push_back({{"q", r.q}, {"d", r.d}, {"certificate", to_json(r.cert)}});
    out << ordered_json{{"table", "theorem3"}, {"l", o.l}, {"n", n}, {"rows", std::move(jr)}}.dump(2) << "\n";
    return kOk;
  }
  out << "maps RP^m -> R^" << n << " with m = " << n << " - d (l = " << o.l << ")\n";
  out << "q\td\tm\tverdict\twitness\t(q-1)(d+1)<=m\tq(d+1)<2^l-1\n";
  for (const auto& r : rows) {
    const auto* hyp = r.cert.param("theorem_hypothesis");
    const auto* proof = r.cert.param("proof_condition");
    out << r.q << "\t" << r.d << "\t" << n - r.d << "\t"
        << (r.cert.conclusive ? "multiplicity>=" + std::to_string(r.q) : std::string("inconclusive")) << "\t"
        << (r.cert.witness ? r.cert.witness->to_string() : "-") << "\t"
        << (proof ? format_param(*proof) : "-") << "\t" << (hyp ? format_param(*hyp) : "-") << "\n";
  }
  out << "inconclusive rows are one-sided: they do not show that a map without coincident tuples exists\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic classes of coincident tuples and the bounds they certify", "coinc"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  std::function<int()> fn) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->add_flag("--json", o.json, "Emit one JSON object");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* sqd = leaf(&app, "sqd", "Leading class s_{q,d} of coincident q-tuples (mod 2)", [&] { return cmd_sqd(out, o); });
  sqd->add_option("--q", o.q, "Tuple size (2 or 4)")->required()->check(CLI::IsMember({2, 4}));
  sqd->add_option("--d", o.d, "Codimension d >= 0")->required()->check(CLI::NonNegativeNumber);
  sqd->add_flag("--show-stability", o.show_stability, "Also show the result at the next size");

  auto* alpha = leaf(&app, "alpha", "Class alpha_{p,i} in Pontryagin classes (mod p)", [&] { return cmd_alpha(out, o); });
  alpha->add_option("--p", o.p, "Odd prime")->required();
  alpha->add_option("--i", o.i, "Index i >= 0")->required()->check(CLI::NonNegativeNumber);
  alpha->add_option("--k", o.k, "Number of 2-plane roots");

  auto* mult = app.add_subcommand("multiplicity", "Multiplicity certificates")->require_subcommand(1);
  auto* mrp = leaf(mult, "rp", "Maps RP^m -> R^n, q a power of two", [&] { return cmd_multiplicity_rp(out, o); });
  mrp->add_option("--m", o.m, "dim RP^m")->required();
  mrp->add_option("--n", o.n, "Target dimension")->required();
  mrp->add_option("--q", o.q, "Tuple size (power of two)")->required();
  auto* mmp = leaf(mult, "modp", "Mod-p certificate from a space manifest", [&] { return cmd_multiplicity_modp(out, o); });
  mmp->add_option("--p", o.p, "Odd prime")->required();
  auto* mspace = mmp->add_option("--space", o.space, "Space manifest file");
  auto* mcp = mmp->add_option("--cp", o.cp, "Use CP^M (with --n) instead of a manifest");
  mmp->add_option("--n", o.n, "Target dimension for --cp");
  mspace->excludes(mcp);

  auto* genus = app.add_subcommand("genus", "Genus lower bounds for configuration spaces")->require_subcommand(1);
  auto* gp2 = leaf(genus, "pow2", "g(K^q(M)) from wbar_{d+1}^{q-1}", [&] { return cmd_genus_pow2(out, o); });
  gp2->add_option("--q", o.q, "Power of two")->required();
  gp2->add_option("--d", o.d, "Top degree minus one of the dual class")->required();
  auto* gl = gp2->add_option("--l", o.l, "Use M = RP^{2^l-2-d}");
  auto* gm = gp2->add_option("--m", o.m, "dim M (with --space)");
  gp2->add_option("--space", o.space, "Dual Stiefel-Whitney manifest");
  gl->excludes(gm);
  auto* g4 = leaf(genus, "four", "g(K^4(M)) from s_{4,0} and s_{4,1}", [&] { return cmd_genus_four(out, o); });
  auto* g4rp = g4->add_option("--rp", o.rp, "Use M = RP^M");
  auto* g4m = g4->add_option("--m", o.m, "dim M (with --space)");
  g4->add_option("--space", o.space, "Dual Stiefel-Whitney manifest");
  g4rp->excludes(g4m);
  auto* gop = leaf(genus, "oddp", "g(K^p(M)) from alpha_{p,i}", [&] { return cmd_genus_oddp(out, o); });
  gop->add_option("--p", o.p, "Odd prime")->required();
  gop->add_option("--i", o.i, "Index i >= 1")->required();
  auto* gocp = gop->add_option("--cp", o.cp, "Use M = CP^M");
  auto* gom = gop->add_option("--m", o.m, "dim M (with --space)");
  gop->add_option("--space", o.space, "Dual Pontryagin manifest");
  gocp->excludes(gom);

  auto* orc = app.add_subcommand("oracle", "Explicit coincident tuples of the local models")->require_subcommand(1);
  auto* mor = leaf(orc, "morin", "Morin canonical form Sigma^{1^k}", [&] {
    return o.float_mode ? morin<double>(out, o) : morin<oracle::Rational>(out, o);
  });
  mor->add_option("--k", o.k, "Singularity order")->required();
  mor->add_option("--m", o.m, "Source dimension")->required();
  mor->add_option("--n", o.n, "Target dimension")->required();
  mor->add_flag("--float", o.float_mode, "Use doubles instead of exact rationals");
  auto* mom = leaf(orc, "moment", "Moment-curve fiberwise map", [&] {
    return o.float_mode ? moment<double>(out, o) : moment<oracle::Rational>(out, o);
  });
  mom->add_option("--n", o.n, "n")->required();
  mom->add_option("--d", o.d, "d")->required();
  mom->add_option("--q", o.q, "Tuple size")->required()->check(CLI::Range(2, 64));
  mom->add_option("--seed", o.seed, "Seed for the curve and parameters")->capture_default_str();
  mom->add_flag("--float", o.float_mode, "Use doubles instead of exact rationals");

  auto* table = app.add_subcommand("table", "Parameter sweeps")->require_subcommand(1);
  auto* t3 = leaf(table, "theorem3", "All (q, d) verdicts for maps RP^{2^l-2-d} -> R^{2^l-2}",
                  [&] { return cmd_table(out, o); });
  t3->add_option("--l", o.l, "Exponent l")->required()->check(CLI::Range(2, 6));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kInvalidParameters;
  }
  if (!action) {
    err << app.help();
    return kInvalidParameters;
  }
  try {
    return action();
  } catch (const charclass::ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kInvalidParameters;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace coinc::cli
