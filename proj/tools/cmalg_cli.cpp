#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "cmalg/cmalg.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kNotApplicable = 2, kViolation = 3 };

struct Options {
  std::string input = "-";
  bool json = false;
  std::string of, A, B, ideal, order = "grevlex", J, only;
  int j = 0, k = 0, p = 0, q = 0, t = 2, s = 1, d = 2;
  int param = 0;
  unsigned long long seed = 1;
  int jobs = 1, count = 200, power_cap = 8, reduction_cap = 10, degree_cap = -1;
  int n_min = 3, n_max = 4, d_min = 2, d_max = 3;
  bool no_conjectures = false, linear_only = false;
  std::string check_id, example_name;
};

int fail(const char* what) {
  std::cerr << "error: " << what << ": " << cmalg_last_error() << "\n";
  return kUsage;
}

int print_and_free(char* out) {
  std::fputs(out, stdout);
  cmalg_string_free(out);
  return kOk;
}

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream f(path);
  if (!f) return false;
  std::stringstream ss;
  ss << f.rdbuf();
  text = ss.str();
  return true;
}

struct Session {
  cmalg_session* s = nullptr;
  ~Session() { cmalg_session_free(s); }
};

const char* opt(const std::string& v) { return v.empty() ? nullptr : v.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded free resolutions, regularity and bound checks over prime fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cmalg_version());
  Options o;

  auto with_input = [&](CLI::App* c) {
    c->add_option("--input", o.input, "IdealSource file, - for standard input")->capture_default_str();
    c->add_flag("--json", o.json, "JSON output");
  };
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  auto* betti = app.add_subcommand("betti", "Betti table of a module");
  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  auto* initial = app.add_subcommand("initial", "initial ideal");
  auto* dim = app.add_subcommand("dim", "dimension, depth and projective dimension");
  auto* tor = app.add_subcommand("tor", "Tor_k(A, B)");
  auto* ext = app.add_subcommand("ext", "Ext^k(M, S)");
  auto* power = app.add_subcommand("power-check", "least s with I^s equal to the matching power of m");
  auto* torsion = app.add_subcommand("torsion", "torsion of the symmetric power Sym_t(I)");
  auto* elim = app.add_subcommand("eliminate", "annihilator of coker psi versus the elimination ideal");
  auto* red = app.add_subcommand("reduction", "reduction number r_J(I)");
  auto* check = app.add_subcommand("check", "check a statement on the input");
  auto* fuzz = app.add_subcommand("fuzz", "seeded property run over random instances");
  auto* example = app.add_subcommand("example", "print a named example as an IdealSource");
  auto* list = app.add_subcommand("list", "list statement ids and example names");

  for (auto* c : {gb, betti, reg, initial, dim, tor, ext, power, torsion, elim, red, check}) with_input(c);
  for (auto* c : {gb, initial, power, torsion, elim, red})
    c->add_option("--ideal,--of", o.ideal, "ideal name (default: first ideal)");
  for (auto* c : {gb, initial}) c->add_option("--order", o.order, "grevlex, lex or eliminate<k>")->capture_default_str();
  for (auto* c : {betti, reg, dim, ext}) c->add_option("--of", o.of, "module expression such as S/I or I^2");
  for (auto* c : {tor, check}) {
    c->add_option("--A", o.A, "first module expression (default S/<first ideal>)");
    c->add_option("--B", o.B, "second module expression (default: A)");
  }
  for (auto* c : {tor, ext, check}) c->add_option("--k", o.k, "homological index");
  betti->add_option("--degree-cap", o.degree_cap, "accepted for symmetry with the oracle; unused");
  power->add_option("--power-cap", o.power_cap, "largest exponent tried")->capture_default_str();
  torsion->add_option("--t", o.t, "symmetric power")->capture_default_str();
  red->add_option("--J", o.J, "ideal name for J (default: seeded general combinations)");
  red->add_option("--seed", o.seed, "seed for J")->capture_default_str();
  red->add_option("--reduction-cap", o.reduction_cap, "largest r tried")->capture_default_str();

  check->add_option("id", o.check_id, "statement id (see: list)")->required();
  check->add_option("--j", o.j);
  check->add_option("--p", o.p);
  check->add_option("--q", o.q);
  check->add_option("--t", o.t)->capture_default_str();
  check->add_option("--s", o.s)->capture_default_str();
  check->add_option("--d", o.d)->capture_default_str();
  check->add_option("--seed", o.seed)->capture_default_str();
  check->add_option("--power-cap", o.power_cap)->capture_default_str();
  check->add_option("--reduction-cap", o.reduction_cap)->capture_default_str();

  fuzz->add_flag("--json", o.json, "JSON output");
  fuzz->add_option("--seed", o.seed)->capture_default_str();
  fuzz->add_option("--count", o.count)->capture_default_str();
  fuzz->add_option("--jobs", o.jobs)->capture_default_str();
  fuzz->add_option("--n-min", o.n_min)->capture_default_str();
  fuzz->add_option("--n-max", o.n_max)->capture_default_str();
  fuzz->add_option("--d-min", o.d_min)->capture_default_str();
  fuzz->add_option("--d-max", o.d_max)->capture_default_str();
  fuzz->add_option("--only", o.only, "comma-separated statement ids");
  fuzz->add_flag("--no-conjectures", o.no_conjectures);
  fuzz->add_flag("--linearly-presented", o.linear_only, "only linearly presented m-primary instances");

  example->add_option("name", o.example_name, "example name (see: list)")->required();
  example->add_option("--param", o.param, "size parameter, 0 for the default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  char* out = nullptr;
  if (list->parsed()) {
    char* ids = nullptr;
    char* names = nullptr;
    if (cmalg_check_ids(&ids) != CMALG_OK || cmalg_example_names(&names) != CMALG_OK) return fail("list");
    std::printf("statements:\n%sexamples:\n%s", ids, names);
    cmalg_string_free(ids);
    cmalg_string_free(names);
    return kOk;
  }
  if (example->parsed()) {
    if (cmalg_example(o.example_name.c_str(), o.param, &out) != CMALG_OK) return fail("example");
    return print_and_free(out);
  }
  if (fuzz->parsed()) {
    cmalg_fuzz_params fp;
    cmalg_fuzz_params_init(&fp);
    fp.seed = o.seed;
    fp.count = o.count;
    fp.jobs = o.jobs;
    fp.n_min = o.n_min, fp.n_max = o.n_max, fp.d_min = o.d_min, fp.d_max = o.d_max;
    fp.conjectures = o.no_conjectures ? 0 : 1;
    fp.linearly_presented_only = o.linear_only ? 1 : 0;
    fp.only = opt(o.only);
    int violations = 0;
    if (cmalg_fuzz(&fp, o.json, &out, &violations) != CMALG_OK) return fail("fuzz");
    print_and_free(out);
    return violations > 0 ? kViolation : kOk;
  }

  std::string text;
  if (!read_input(o.input, text)) {
    std::cerr << "error: cannot read " << o.input << "\n";
    return kUsage;
  }
  Session sess;
  if (cmalg_session_new(text.c_str(), &sess.s) != CMALG_OK) return fail("input");

  cmalg_status st = CMALG_OK;
  const char* I = opt(o.ideal);
  if (gb->parsed()) {
    st = cmalg_gb(sess.s, I, o.order.c_str(), o.json, &out);
  } else if (initial->parsed()) {
    st = cmalg_initial(sess.s, I, o.order.c_str(), o.json, &out);
  } else if (betti->parsed()) {
    st = cmalg_betti(sess.s, opt(o.of), o.json, &out);
  } else if (reg->parsed()) {
    st = cmalg_reg(sess.s, opt(o.of), o.json, &out);
  } else if (dim->parsed()) {
    st = cmalg_dim(sess.s, opt(o.of), o.json, &out);
  } else if (tor->parsed()) {
    st = cmalg_tor(sess.s, opt(o.A), opt(o.B), o.k, o.json, &out);
  } else if (ext->parsed()) {
    st = cmalg_ext(sess.s, opt(o.of), o.k, o.json, &out);
  } else if (power->parsed()) {
    st = cmalg_power_check(sess.s, I, o.power_cap, o.json, &out);
  } else if (torsion->parsed()) {
    st = cmalg_torsion(sess.s, I, o.t, o.json, &out);
  } else if (elim->parsed()) {
    st = cmalg_eliminate(sess.s, I, o.json, &out);
  } else if (red->parsed()) {
    st = cmalg_reduction(sess.s, I, opt(o.J), o.seed, o.reduction_cap, o.json, &out);
  } else if (check->parsed()) {
    cmalg_check_params cp;
    cmalg_check_params_init(&cp);
    cp.A = opt(o.A);
    cp.B = opt(o.B);
    cp.j = o.j, cp.k = o.k, cp.p = o.p, cp.q = o.q, cp.t = o.t, cp.s = o.s, cp.d = o.d;
    cp.seed = o.seed;
    cp.power_cap = o.power_cap;
    cp.reduction_cap = o.reduction_cap;
    cmalg_verdict v = CMALG_HOLDS;
    st = cmalg_check(sess.s, o.check_id.c_str(), &cp, o.json, &out, &v);
    if (st != CMALG_OK) return fail("check");
    print_and_free(out);
    return v == CMALG_VIOLATED ? kViolation : v == CMALG_NOT_APPLICABLE ? kNotApplicable : kOk;
  }
  if (st != CMALG_OK) return fail(app.get_subcommands().front()->get_name().c_str());
  return print_and_free(out);
}
