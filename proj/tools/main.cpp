#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowla2/suites.hpp"
#include "chowla2/version.hpp"

// chowla2 — autocorrelation of the Mobius function over F_q[x] in
// characteristic 2: Berlekamp-discriminant computations, Artin-Schreier
// reduction, and the verification suites.  Reports are single JSON records
// with stable key order on stdout; timing goes to stderr.

namespace {

using chowla2::Field;
using chowla2::FqElem;
using chowla2::Poly;
using chowla2::RatFun;
using chowla2::Report;
using chowla2::RunConfig;
using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(sep, pos);
    if (end == std::string::npos) end = s.size();
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end + 1;
    if (end == s.size()) break;
  }
  return out;
}

int emit(const Report& rep, const std::string& format) {
  std::cout << rep.render(format);
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobius autocorrelation and Berlekamp-discriminant toolkit for F_{2^k}[x]"};
  app.set_version_flag("--version", chowla2::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_spec = "k=1";
  std::string format = "record";
  std::uint64_t seed = 1;
  std::uint64_t budget = 1ull << 22;
  unsigned ext_degree = 16;
  app.add_option("--field", field_spec, "field spec, k=<int>[,mod=0x<hex>]")
      ->envname("CHOWLA2_FIELD");
  app.add_option("--format", format, "output format: record | table")
      ->check(CLI::IsMember({"record", "table"}))
      ->envname("CHOWLA2_FORMAT");
  app.add_option("--seed", seed, "seed for all randomized paths")->envname("CHOWLA2_SEED");
  app.add_option("--budget", budget, "enumeration budget; larger ranges are refused")
      ->envname("CHOWLA2_BUDGET");
  app.add_option("--ext-degree", ext_degree, "cap on extension field bits (<= 16)")
      ->envname("CHOWLA2_EXT_DEGREE");

  std::string poly_lit, ratfun_lit, suite;
  unsigned an = 2;
  std::string alphas_lit, eps_lit = "1,1";
  std::string ks_lit, ns_lit;
  unsigned opt_r = 2;
  std::uint64_t count = 1000;

  CLI::App* cmd_mu = app.add_subcommand("mu", "Mobius function of a polynomial");
  cmd_mu->add_option("poly", poly_lit, "polynomial literal")->required();
  CLI::App* cmd_berl = app.add_subcommand("berl", "Berlekamp discriminant of a monic polynomial");
  cmd_berl->add_option("poly", poly_lit, "polynomial literal")->required();
  CLI::App* cmd_xi = app.add_subcommand("xi", "xi(f) = (disc+ - disc)/4 mod 2");
  cmd_xi->add_option("poly", poly_lit, "polynomial literal")->required();
  CLI::App* cmd_delta = app.add_subcommand("delta", "delta(f), the square root of disc f");
  cmd_delta->add_option("poly", poly_lit, "polynomial literal")->required();

  CLI::App* cmd_autocorr = app.add_subcommand("autocorr", "autocorrelation C(alphas; n)");
  cmd_autocorr->add_option("--n", an, "degree n")->required()->envname("CHOWLA2_N");
  cmd_autocorr->add_option("--alphas", alphas_lit, "semicolon-separated shift literals")
      ->required()
      ->envname("CHOWLA2_ALPHAS");
  cmd_autocorr->add_option("--eps", eps_lit, "comma-separated exponents in {1,2}")
      ->envname("CHOWLA2_EPS");

  CLI::App* cmd_asreduce =
      app.add_subcommand("asreduce", "Artin-Schreier reduction of a rational function");
  cmd_asreduce->add_option("ratfun", ratfun_lit, "rational function literal num[/den]")
      ->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "pellet|theorem|n2|badsets|section7|nonvanishing|sqindep|weil|all")
      ->required()
      ->envname("CHOWLA2_SUITE");
  cmd_verify->add_option("--ks", ks_lit, "comma list of field degrees k (suite override)")
      ->envname("CHOWLA2_KS");
  cmd_verify->add_option("--ns", ns_lit, "comma list of degrees n (suite override)")
      ->envname("CHOWLA2_NS");
  cmd_verify->add_option("--r", opt_r, "number of shifts for theorem/n2 suites")
      ->envname("CHOWLA2_R");
  cmd_verify->add_option("--count", count, "random corpus size for the weil suite")
      ->envname("CHOWLA2_COUNT");

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    const Field field = chowla2::parse_field(field_spec);
    Report rep;

    if (cmd_mu->parsed() || cmd_berl->parsed() || cmd_xi->parsed() || cmd_delta->parsed()) {
      const Poly f = Poly::parse(field, poly_lit);
      std::string op = cmd_mu->parsed()    ? "mu"
                       : cmd_berl->parsed() ? "berl"
                       : cmd_xi->parsed()   ? "xi"
                                            : "delta";
      rep.command = op + " " + poly_lit;
      rep.data["field"] = field.to_string();
      rep.data["poly"] = f.pretty();
      if (op == "mu") {
        rep.data["mu"] = chowla2::mobius(f);
      } else if (op == "berl") {
        try {
          rep.data["berl"] = chowla2::berl(f).to_string();
        } catch (const std::domain_error&) {
          rep.data["berl"] = "undefined (zero discriminant)";
        }
      } else if (op == "xi") {
        rep.data["xi"] = chowla2::xi(f).to_string();
      } else {
        rep.data["delta"] = chowla2::delta(f).to_string();
      }
      rc = emit(rep, format);
    } else if (cmd_autocorr->parsed()) {
      std::vector<Poly> alphas;
      for (const std::string& s : split(alphas_lit, ';')) alphas.push_back(Poly::parse(field, s));
      std::vector<int> eps;
      for (const std::string& s : split(eps_lit, ',')) eps.push_back(std::stoi(s));
      if (eps.size() == 1 && alphas.size() > 1) eps.assign(alphas.size(), eps[0]);
      const chowla2::CorrelationSpec spec(field, an, alphas, eps);

      double work = 1;
      for (unsigned i = 0; i < an; ++i) work *= field.size();
      if (work * static_cast<double>(alphas.size()) > static_cast<double>(budget))
        throw std::invalid_argument("autocorr range exceeds --budget; raise it explicitly");

      const chowla2::CorrelationReport r = chowla2::autocorrelation_report(spec);
      rep.command = "autocorr";
      rep.data["field"] = field.to_string();
      rep.data["n"] = an;
      ordered_json aj = ordered_json::array();
      for (const Poly& a : alphas) aj.push_back(a.pretty());
      rep.data["alphas"] = aj;
      rep.data["eps"] = eps;
      rep.data["C_bruteforce"] = r.C;
      if (r.charsum_C) {
        rep.data["C_charsum"] = *r.charsum_C;
        rep.data["discrepancy"] = r.discrepancy;
        rep.checks.push_back({"charsum within r q^(n-1) of brute force",
                              std::llabs(r.discrepancy) <=
                                  static_cast<long long>(alphas.size() * work / field.size()),
                              ""});
      }
      rep.data["theorem_bound"] = r.bound;
      if (spec.n > 2 && spec.not_all_even())
        rep.checks.push_back({"|C| within the theorem bound", r.bound_ok, ""});
      if (r.n2) {
        rep.data["n2_case"] = static_cast<int>(r.n2->which);
        rep.checks.push_back({"n=2 trichotomy branch relation", r.n2->relation_ok, ""});
      }
      rc = emit(rep, format);
    } else if (cmd_asreduce->parsed()) {
      const RatFun p = RatFun::parse(field, ratfun_lit);
      const chowla2::ASReduction red = chowla2::as_reduce(p, seed);
      rep.command = "asreduce";
      rep.data["field"] = field.to_string();
      rep.data["p"] = p.pretty();
      rep.data["p_tilde"] = red.p_tilde.pretty();
      rep.data["Q"] = red.q_shift.pretty();
      rep.data["degenerate"] = red.degenerate;
      if (red.degenerate)
        rep.data["constant"] = red.constant.to_string();
      else
        rep.data["genus"] = red.genus_value;
      ordered_json poles = ordered_json::array();
      for (const auto& [place, m] : red.poles.finite)
        poles.push_back(ordered_json{{"place", place.pretty('t')}, {"order", m}});
      if (red.poles.at_infinity > 0)
        poles.push_back(ordered_json{{"place", "infinity"}, {"order", red.poles.at_infinity}});
      rep.data["poles"] = poles;
      rc = emit(rep, format);
    } else if (cmd_verify->parsed()) {
      RunConfig cfg;
      cfg.field_spec = field_spec;
      cfg.seed = seed;
      cfg.budget = budget;
      cfg.ext_cap_bits = ext_degree;
      cfg.format = format;
      cfg.r = opt_r;
      cfg.count = count;
      for (const std::string& s : split(ks_lit, ',')) cfg.ks.push_back(std::stoul(s));
      for (const std::string& s : split(ns_lit, ',')) cfg.ns.push_back(std::stoul(s));
      const Report r = run_suite(suite, cfg);
      rc = emit(r, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 2;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::fprintf(stderr, "elapsed: %lld ms\n", static_cast<long long>(elapsed.count()));
  return rc;
}
