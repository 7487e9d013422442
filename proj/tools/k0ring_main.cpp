// k0ring: exact computations in the Grothendieck ring of SL2(F_q).
//
// Subcommands: present, decompose, verify, twist, modp, roots, char,
// char-equal, sweep. Every command takes --format json|text; JSON output is
// stable for a fixed --seed, with big integers rendered as decimal strings.
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 usage/input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "k0ring/analysis.hpp"
#include "k0ring/characters.hpp"
#include "k0ring/modp.hpp"
#include "k0ring/steinberg.hpp"
#include "k0ring/sweep.hpp"

using nlohmann::json;
using namespace k0ring;

namespace {

constexpr long kDefaultQCap = 100000;

long env_q_cap() {
  if (const char* env = std::getenv("K0RING_Q_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 2) return v;
    std::cerr << "warning: ignoring malformed K0RING_Q_CAP\n";
  }
  return kDefaultQCap;
}

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t seed = 987654321;
  long q_cap = env_q_cap();
};

json poly_record(const IntPoly& a) {
  json list = json::array();
  for (const auto& c : a.coeffs()) list.push_back(to_decimal(c));
  return json{{"human", a.to_string()},
              {"list", list},
              {"degree", a.is_zero() ? json(nullptr) : json(a.degree())},
              {"monic", a.is_monic()}};
}

void emit(const GlobalOpts& g, const json& record, const std::string& text) {
  if (g.format == "json")
    std::cout << record.dump(2) << "\n";
  else
    std::cout << text;
}

std::vector<long> parse_csv_longs(const std::string& csv) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    out.push_back(std::stol(csv.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

RingElt tuple_product(const FieldPtr& F, const std::vector<long>& ks) {
  if (static_cast<long>(ks.size()) > F->g())
    throw std::invalid_argument("tuple longer than g");
  RingElt acc = RingElt::one(F);
  for (std::size_t i = 0; i < ks.size(); ++i)
    acc = acc * frobenius_twist(sym_class(ks[i], F), static_cast<long>(i));
  return acc;
}

json steinberg_record(const SteinbergVector& v) {
  json mult = json::object();
  for (const auto& [key, m] : v.serialize()) mult[key] = to_decimal(m);
  return mult;
}

int cmd_present(const GlobalOpts& g, long p, long gg) {
  FieldPtr F = GroundField::make(p, gg);
  json rec{{"p", p},
           {"g", gg},
           {"q", F->q()},
           {"f", poly_record(F->f())},
           {"f_g", poly_record(F->f_iterate(gg))},
           {"modulus", poly_record(F->modulus())}};
  std::string text = "K0(SL2(F_q)) = Z[x]/(f^[g](x) - x) with q = " + std::to_string(F->q()) +
                     " " + F->tag() + "\n" + "f       = " + F->f().to_string() + "\n" +
                     "          " + F->f().to_list_string() + "\n" +
                     "f^[g]   = " + F->f_iterate(gg).to_string() + "\n" + "          " +
                     F->f_iterate(gg).to_list_string() + "\n" +
                     "modulus = " + F->modulus().to_string() + "\n" + "          " +
                     F->modulus().to_list_string() + "\n" + "degree " +
                     std::to_string(F->modulus().degree()) + ", monic\n";
  emit(g, rec, text);
  return 0;
}

int cmd_decompose(const GlobalOpts& g, long p, long gg, std::optional<long> sym,
                  const std::string& tuple, bool virtual_ok) {
  FieldPtr F = GroundField::make(p, gg);
  RingElt elt;
  std::string what;
  if (sym) {
    if (*sym < 0 && !virtual_ok)
      throw std::invalid_argument(
          "negative k defines a virtual class; pass --virtual to decompose it");
    elt = sym_class(*sym, F);
    what = "Sym^" + std::to_string(*sym);
  } else {
    std::vector<long> ks = parse_csv_longs(tuple);
    for (long k : ks)
      if (k < 0 && !virtual_ok)
        throw std::invalid_argument(
            "negative k defines a virtual class; pass --virtual to decompose it");
    elt = tuple_product(F, ks);
    what = "product of twisted symmetric powers (" + tuple + ")";
  }
  SteinbergVector v = decompose(elt);
  bool nonneg = true;
  BigInt dim = 0;
  for (long n = 0; n < v.q(); ++n) {
    if (v.at(n) < 0) nonneg = false;
    dim += v.at(n) * tuple_dimension(*F, n);
  }
  BigInt dim_residue = dim_class(elt);
  json rec{{"p", p},      {"g", gg},
           {"what", what}, {"multiplicities", steinberg_record(v)},
           {"dimension", to_decimal(dim_residue)},
           {"dimension_check", dim == dim_residue},
           {"nonnegative", nonneg}};
  std::string text = what + " " + F->tag() + "\n";
  for (const auto& [key, m] : v.serialize())
    text += "  (" + key + "): " + to_decimal(m) + "\n";
  text += "dimension " + to_decimal(dim_residue) +
          (dim == dim_residue ? " (checked)\n" : " (MISMATCH)\n");
  emit(g, rec, text);
  return dim == dim_residue ? 0 : 1;
}

json identity_cell_record(const IdentityCellReport& r) {
  json rec{{"p", r.cell.p},
           {"g", r.cell.g},
           {"q", r.cell.q},
           {"trials", r.trials},
           {"seed", r.seed},
           {"engine", r.engine},
           {"identities_ok", r.identities_ok},
           {"pre_reduction_pi_ok", r.pre_reduction_pi_ok},
           {"pre_reduction_phi_ok", r.pre_reduction_phi_ok},
           {"sigma_pre_reduction_fails", r.sigma_pre_reduction_fails},
           {"seconds", r.seconds}};
  if (r.counterexample) {
    rec["counterexample"] = json{{"identity", r.counterexample->identity},
                                 {"k", r.counterexample->k},
                                 {"h", r.counterexample->h},
                                 {"lhs", r.counterexample->lhs},
                                 {"rhs", r.counterexample->rhs}};
  }
  return rec;
}

int cmd_verify(const GlobalOpts& g, const std::string& identity, std::string primes_csv,
               std::string g_csv, std::optional<long> p_single, std::optional<long> g_single,
               std::optional<long> k, std::optional<long> h, long trials, int threads) {
  if (k) {
    // Single explicit case through the exact ring path.
    long p = p_single.value_or(0), gg = g_single.value_or(1);
    if (!p) throw std::invalid_argument("single-case verify requires --p");
    FieldPtr F = GroundField::make(p, gg);
    std::vector<Identity> ids;
    if (identity == "all")
      ids = {Identity::kDelta, Identity::kSigma, Identity::kPi, Identity::kPhi};
    else if (auto id = identity_from_name(identity))
      ids = {*id};
    else
      throw std::invalid_argument("unknown identity: " + identity);
    bool all_hold = true;
    json cases = json::array();
    std::string text;
    for (Identity id : ids) {
      IdentityReport rep = verify_identity(id, *k, h.value_or(0), F);
      all_hold &= rep.holds;
      cases.push_back(json{{"identity", identity_name(id)},
                           {"k", rep.k},
                           {"h", rep.h},
                           {"holds", rep.holds},
                           {"lhs", rep.lhs.residue().to_string()},
                           {"rhs", rep.rhs.residue().to_string()},
                           {"note", rep.note}});
      text += std::string(identity_name(id)) + " k=" + std::to_string(rep.k) +
              (id == Identity::kPi ? " h=" + std::to_string(rep.h) : "") + ": " +
              (rep.holds ? "holds" : "FAILS") + ", lhs = " + rep.lhs.residue().to_string() +
              ", rhs = " + rep.rhs.residue().to_string() + "\n";
      if (!rep.note.empty()) text += "  note: " + rep.note + "\n";
    }
    emit(g, json{{"p", p}, {"g", gg}, {"cases", cases}}, text);
    return all_hold ? 0 : 1;
  }

  SweepConfig cfg;
  cfg.seed = g.seed;
  cfg.q_cap = g.q_cap;
  cfg.trials = trials;
  cfg.threads = threads;
  if (!primes_csv.empty())
    cfg.primes = parse_csv_longs(primes_csv);
  else if (p_single)
    cfg.primes = {*p_single};
  if (!g_csv.empty())
    cfg.g_values = parse_csv_longs(g_csv);
  else if (g_single)
    cfg.g_values = {*g_single};
  auto reports = identity_sweep(cfg);
  bool all_ok = true;
  json cells = json::array();
  std::string text;
  for (const auto& r : reports) {
    all_ok &= r.ok();
    cells.push_back(identity_cell_record(r));
    text += "p=" + std::to_string(r.cell.p) + " g=" + std::to_string(r.cell.g) +
            " q=" + std::to_string(r.cell.q) + " [" + r.engine + "] " +
            (r.ok() ? "ok" : "FAILED") + " (" + std::to_string(r.trials) + " trials)\n";
  }
  emit(g, json{{"identity", identity}, {"seed", g.seed}, {"cells", cells}, {"all_ok", all_ok}},
       text + (all_ok ? "all identities hold\n" : "FAILURES found\n"));
  return all_ok ? 0 : 1;
}

int cmd_twist(const GlobalOpts& g, long p, long gg, long i, std::optional<long> sym,
              const std::string& poly) {
  FieldPtr F = GroundField::make(p, gg);
  RingElt elt = sym ? sym_class(*sym, F) : reduce(IntPoly::parse(poly), F);
  RingElt twisted = frobenius_twist(elt, i);
  json rec{{"p", p},
           {"g", gg},
           {"i", i},
           {"input", elt.residue().to_string()},
           {"twisted", poly_record(twisted.residue())}};
  emit(g, rec, twisted.to_string() + "\n");
  return 0;
}

int cmd_modp(const GlobalOpts& g, long p, long gg) {
  FiberReport rep = fiber_report(p, gg);
  json pairs = json::array();
  std::string pair_text;
  for (auto [d, psi] : rep.pairs) {
    pairs.push_back(json{{"d", d}, {"psi", psi}});
    if (!pair_text.empty()) pair_text += ", ";
    pair_text += "(" + std::to_string(d) + "," + std::to_string(psi) + ")";
  }
  json rec{{"p", rep.p},
           {"g", rep.g},
           {"q", rep.q},
           {"pairs", pairs},
           {"checks", json{{"congruence", rep.congruence_ok},
                           {"ddf_match", rep.ddf_match},
                           {"dimension_sum", rep.dimension_sum_ok}}}};
  std::string text = "fibers of K0 x Z_p for q = " + std::to_string(rep.q) + ": product of " +
                     "psi(d) fields of degree d over d | g\n  pairs " + pair_text + "\n" +
                     "  congruence " + (rep.congruence_ok ? "ok" : "FAILED") + ", ddf " +
                     (rep.ddf_match ? "ok" : "FAILED") + ", dimension sum " +
                     (rep.dimension_sum_ok ? "ok" : "FAILED") + "\n";
  emit(g, rec, text);
  return rep.all_ok() ? 0 : 1;
}

int cmd_roots(const GlobalOpts& g, long p) {
  RootReport rep = roots_report(p);
  json roots = json::array();
  std::string roots_text;
  for (long r : rep.rational_roots) {
    roots.push_back(r);
    if (!roots_text.empty()) roots_text += ", ";
    roots_text += std::to_string(r);
  }
  json rec{{"p", rep.p},
           {"degree", rep.degree},
           {"rational_roots", roots},
           {"real_root_count", rep.real_root_count},
           {"all_real", rep.all_real}};
  emit(g, rec,
       "f(x) - x for p = " + std::to_string(p) + ": degree " + std::to_string(rep.degree) +
           "\n  rational roots in [-2,2]: [" + roots_text + "]\n  distinct real roots: " +
           std::to_string(rep.real_root_count) + (rep.all_real ? " (all real)\n" : "\n"));
  return 0;
}

int cmd_char(const GlobalOpts& g, long p, long gg, std::optional<long> sym,
             const std::string& tuple) {
  FieldPtr F = GroundField::make(p, gg);
  RingElt elt = sym ? sym_class(*sym, F) : tuple_product(F, parse_csv_longs(tuple));
  SymLaurent ch = char_of_elt(elt);
  json rec{{"p", p},
           {"g", gg},
           {"char", ch.to_string()},
           {"dimension", to_decimal(ch.eval_at_one())}};
  emit(g, rec, ch.to_string() + "\n");
  return 0;
}

int cmd_char_equal(const GlobalOpts& g, long p, long gg, const std::string& lhs,
                   const std::string& rhs) {
  FieldPtr F = GroundField::make(p, gg);
  SymLaurent a = SymLaurent::parse(lhs), b = SymLaurent::parse(rhs);
  bool equal = brauer_equal(a, b, *F);
  emit(g,
       json{{"p", p}, {"g", gg}, {"lhs", a.to_string()}, {"rhs", b.to_string()},
            {"brauer_equal", equal}},
       std::string(equal ? "equal" : "different") + " as Brauer characters " + F->tag() + "\n");
  return 0;
}

int cmd_sweep(const GlobalOpts& g, std::string primes_csv, std::string g_csv, long trials,
              int threads, const std::string& out_path) {
  SweepConfig cfg;
  cfg.seed = g.seed;
  cfg.q_cap = g.q_cap;
  cfg.trials = trials;
  cfg.threads = threads;
  if (!primes_csv.empty()) cfg.primes = parse_csv_longs(primes_csv);
  if (!g_csv.empty()) cfg.g_values = parse_csv_longs(g_csv);

  GridSelection sel = grid_cells(cfg);
  for (const auto& cell : sel.skipped)
    std::cerr << "notice: skipping p=" << cell.p << " g=" << cell.g << " (p^g > q cap "
              << cfg.q_cap << ")\n";

  auto reports = identity_sweep(cfg);
  bool all_ok = true;
  json cells = json::array();
  std::string text;
  for (const auto& r : reports) {
    all_ok &= r.ok();
    cells.push_back(identity_cell_record(r));
    text += "p=" + std::to_string(r.cell.p) + " g=" + std::to_string(r.cell.g) + " q=" +
            std::to_string(r.cell.q) + " [" + r.engine + "] " + (r.ok() ? "ok" : "FAILED") +
            " " + std::to_string(r.seconds) + "s\n";
  }
  json record{{"seed", g.seed}, {"q_cap", cfg.q_cap}, {"cells", cells}, {"all_ok", all_ok}};
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open --out path: " + out_path);
    out << record.dump(2) << "\n";
  }
  emit(g, record, text + (all_ok ? "all cells ok\n" : "FAILURES found\n"));
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the Grothendieck ring K0(SL2(F_q))"};
  app.require_subcommand(1);
  // -h is not a help alias here: verify takes the identity argument --h.
  app.set_help_flag("--help", "print help");
  app.option_defaults()->ignore_case(false);

  GlobalOpts global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "seed for randomized trials")->capture_default_str();
  app.add_option("--q-cap", global.q_cap,
                 "largest admitted q = p^g (default from K0RING_Q_CAP or 100000)");

  long p = 0, gg = 1, i = 1, trials = 200, bound = 2;
  int threads = 0;
  std::optional<long> sym, kk, hh;
  std::string tuple, poly, primes_csv, g_csv, identity = "all", lhs, rhs, out_path;
  bool virtual_ok = false;

  auto* present = app.add_subcommand("present", "print f, f^[g] and the presentation modulus");
  present->add_option("--p", p)->required();
  present->add_option("--g", gg)->capture_default_str();

  auto* dec = app.add_subcommand("decompose", "Steinberg-basis multiplicities of a class");
  dec->add_option("--p", p)->required();
  dec->add_option("--g", gg)->capture_default_str();
  dec->add_option("--sym", sym, "decompose Sym^k");
  dec->add_option("--tuple", tuple, "product over i of twisted Sym^{k_i} (csv)");
  dec->add_flag("--virtual", virtual_ok, "allow negative k (virtual classes)");

  bool all_identities = false;
  auto* ver = app.add_subcommand("verify", "check the ring identities");
  ver->set_help_flag("--help", "print help");
  ver->add_option("--identity", identity, "delta|sigma|pi|phi|all")->capture_default_str();
  ver->add_flag("--all", all_identities, "check all four identities");
  ver->add_option("--p", p);
  ver->add_option("--primes", primes_csv, "prime list, e.g. 2,3,5");
  ver->add_option("--g", g_csv, "g list, e.g. 1,2");
  ver->add_option("--k", kk, "explicit k (single-case mode)");
  ver->add_option("--h", hh, "explicit h (product identity)");
  ver->add_option("--trials", trials)->capture_default_str();
  ver->add_option("--threads", threads);

  auto* twi = app.add_subcommand("twist", "Frobenius twist of a class");
  twi->add_option("--p", p)->required();
  twi->add_option("--g", gg)->capture_default_str();
  twi->add_option("--i", i)->capture_default_str();
  twi->add_option("--sym", sym);
  twi->add_option("--poly", poly, "polynomial to reduce and twist");

  auto* mod = app.add_subcommand("modp", "mod-p fiber structure report");
  mod->add_option("--p", p)->required();
  mod->add_option("--g", gg)->capture_default_str();

  auto* roo = app.add_subcommand("roots", "root analysis of f(x) - x");
  roo->add_option("--p", p)->required();
  roo->add_option("--bound", bound)->capture_default_str();

  auto* cha = app.add_subcommand("char", "formal character of a class");
  cha->add_option("--p", p)->required();
  cha->add_option("--g", gg)->capture_default_str();
  cha->add_option("--sym", sym);
  cha->add_option("--tuple", tuple);

  auto* cheq = app.add_subcommand("char-equal", "Brauer-character equality of two characters");
  cheq->add_option("--p", p)->required();
  cheq->add_option("--g", gg)->capture_default_str();
  cheq->add_option("--lhs", lhs)->required();
  cheq->add_option("--rhs", rhs)->required();

  auto* swp = app.add_subcommand("sweep", "identity sweep over a (p, g) grid");
  swp->add_option("--primes", primes_csv, "prime list");
  swp->add_option("--g", g_csv, "g list (default: all with p^g <= q cap)");
  swp->add_option("--trials", trials)->capture_default_str();
  swp->add_option("--threads", threads);
  swp->add_option("--out", out_path, "write the JSON record to this path");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (present->parsed()) return cmd_present(global, p, gg);
    if (dec->parsed()) {
      if (!sym && tuple.empty())
        throw std::invalid_argument("decompose requires --sym or --tuple");
      return cmd_decompose(global, p, gg, sym, tuple, virtual_ok);
    }
    if (ver->parsed()) {
      if (all_identities) identity = "all";
      std::optional<long> p_opt, g_single;
      if (ver->count("--p")) p_opt = p;
      if (!g_csv.empty() && g_csv.find(',') == std::string::npos && kk)
        g_single = std::stol(g_csv);
      return cmd_verify(global, identity, primes_csv, kk ? "" : g_csv, p_opt, g_single, kk, hh,
                        trials, threads);
    }
    if (twi->parsed()) {
      if (!sym && poly.empty()) throw std::invalid_argument("twist requires --sym or --poly");
      return cmd_twist(global, p, gg, i, sym, poly);
    }
    if (mod->parsed()) return cmd_modp(global, p, gg);
    if (roo->parsed()) return cmd_roots(global, p);
    if (cha->parsed()) {
      if (!sym && tuple.empty()) throw std::invalid_argument("char requires --sym or --tuple");
      return cmd_char(global, p, gg, sym, tuple);
    }
    if (cheq->parsed()) return cmd_char_equal(global, p, gg, lhs, rhs);
    if (swp->parsed()) return cmd_sweep(global, primes_csv, g_csv, trials, threads, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
