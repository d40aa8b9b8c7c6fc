// hyperflex: exact verification CLI for the marked-hyperflex quartic family.
// Exit codes: 0 success, 1 verification failure, 2 invalid input / out of scope.
#include "hyperflex/bitangent.hpp"
#include "hyperflex/e6.hpp"
#include "hyperflex/family.hpp"
#include "hyperflex/padic.hpp"
#include "hyperflex/report.hpp"
#include "hyperflex/stats.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace hfx;

namespace {

Rat parse_rat(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: " + s);
  }
}

std::vector<long> parse_longs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stol(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty list: " + csv);
  return out;
}

json series_json(const Series& s) {
  json a = json::array();
  for (long i = 0; i < s.N; ++i) a.push_back(s.c[i].get_str());
  return json{{"coefficients", a}, {"precision", s.N}};
}

std::string fqpoly_str(const FqField& K, const PolyOf<FqField>& f, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < f.size(); ++i) {
    if (K.is_zero(f[i])) continue;
    std::string c = K.elem_str(f[i]);
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (!K.is_one(f[i])) os << "(" << c << ")*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

long require_prime(long p) {
  if (p < 2 || !is_probable_prime(Int(p)))
    throw std::invalid_argument("not a prime: " + std::to_string(p));
  return p;
}

int cmd_report(const std::string& only, const std::string& format) {
  std::vector<std::string> wanted;
  if (only.empty()) {
    wanted = report::suite_names();
  } else {
    std::stringstream ss(only);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) wanted.push_back(tok);
  }
  std::vector<report::Check> checks;
  for (const std::string& s : wanted) {
    std::vector<report::Check> part = report::run_suite(s);  // throws on unknown name
    checks.insert(checks.end(), part.begin(), part.end());
  }
  int code = report::all_pass(checks) ? 0 : 1;
  if (format == "csv")
    std::cout << report::render_csv(checks);
  else
    std::cout << report::render_json(checks, code) << "\n";
  return code;
}

int cmd_e6_verify() {
  e6::E6RootSystem rs = e6::build_root_system();
  const auto& w = e6::weyl_group();
  e6::CoxeterChecks cc = e6::coxeter_checks();
  e6::ModTwoQuadraticSpace sp = e6::mod2_space();
  int plus = 0, minus = 0;
  for (int v = 1; v < 64; ++v) (sp.q[v] == 1 ? plus : minus)++;
  auto fixed = e6::w_mod2_fixed_space(w);
  auto cen = e6::pairing_centralizer_of_w();
  e6::AutImageChecks ai = e6::aut_image_checks();
  e6::OrbitSectionReport orb = e6::orbit_and_section_checks();
  Rat prop(Int((long)orb.fixing_count), Int((long)orb.weyl_order));
  prop.canonicalize();

  std::ostringstream cp;
  for (size_t i = 0; i < cc.charpoly.size(); ++i) {
    if (i) cp << ",";
    cp << cc.charpoly[i].get_str();
  }
  json j{{"roots", rs.roots.size()},
         {"weyl_order", w.size()},
         {"det_one_minus_coxeter", cc.det_one_minus.get_str()},
         {"coxeter_charpoly_coefficients", cp.str()},
         {"coxeter_order", cc.order},
         {"q_counts", json{{"plus", plus}, {"minus", minus}}},
         {"w_fixed_space_dim", fixed.size()},
         {"centralizer_trivial", cen.size() == 1 && e6::m2_is_identity(cen[0])},
         {"aut_image_injective", ai.injective},
         {"aut_image_order", ai.image_order},
         {"aut_image_preserves_q", ai.image_preserves_q},
         {"dual_index", e6::dual_index().get_str()},
         {"transitive_27", orb.transitive_27},
         {"transitive_36", orb.transitive_36},
         {"sections_ok", orb.sections_ok},
         {"roots_cover_36", orb.roots_cover_36},
         {"coxeter_fixes_none", orb.coxeter_fixes_none},
         {"fixing_proportion", prop.get_str()}};
  bool ok = rs.roots.size() == 72 && w.size() == 51840 && cc.det_one_minus == 3 &&
            cc.order == 12 && plus == 27 && minus == 36 && fixed.empty() &&
            cen.size() == 1 && ai.injective && ai.image_order == 51840 &&
            ai.image_preserves_q && e6::dual_index() == 3 && orb.transitive_27 &&
            orb.transitive_36 && orb.sections_ok && orb.roots_cover_36 &&
            orb.coxeter_fixes_none && prop == Rat(64, 81);
  j["pass"] = ok;
  emit(j);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for a family of plane quartics with a marked hyperflex"};
  app.require_subcommand(1);

  std::string bcsv = "0,0,0,-1,1,1";
  long prime = 2;
  long order = 13;
  std::string height = "1000000";
  bool minimal = false;
  std::string format = "json";
  std::string only;
  std::string primes_csv = "2,3,5,7,11,13";
  std::string selmer = "3";
  std::string d7 = "6/7";
  long maxf7 = 22;

  auto add_b = [&](CLI::App* c) {
    c->add_option("--b", bcsv, "member coordinates p2,p5,p6,p8,p9,p12")
        ->capture_default_str();
  };

  CLI::App* fam = app.add_subcommand("family", "member arithmetic: discriminant, reduction, enumeration");
  fam->require_subcommand(1);
  CLI::App* fam_disc = fam->add_subcommand("disc", "exact normalized discriminant");
  add_b(fam_disc);
  CLI::App* fam_smooth = fam->add_subcommand("smooth", "smoothness over Q or over F_p");
  add_b(fam_smooth);
  bool smooth_modp = false;
  fam_smooth->add_option("--prime", prime, "check reduction mod this prime instead of over Q")
      ->each([&](const std::string&) { smooth_modp = true; });
  CLI::App* fam_count = fam->add_subcommand("count", "projective point count over F_p");
  add_b(fam_count);
  fam_count->add_option("--prime", prime, "field size (prime)")->capture_default_str();
  CLI::App* fam_enum = fam->add_subcommand("enumerate", "count members of height below a bound");
  fam_enum->add_option("--height", height, "height bound a")->capture_default_str();
  fam_enum->add_flag("--minimal", minimal, "restrict to minimal orbit representatives");

  CLI::App* e6cmd = app.add_subcommand("e6", "root-lattice and mod-2 orthogonal-group checks");
  e6cmd->require_subcommand(1);
  e6cmd->add_subcommand("verify", "run the full lattice verification");

  CLI::App* bit = app.add_subcommand("bitangents", "bitangent slope resultant");
  bit->require_subcommand(1);
  CLI::App* bit_res = bit->add_subcommand("resultant", "degree-27 slope resultant");
  add_b(bit_res);
  CLI::App* bit_gal = bit->add_subcommand("galois", "factorization patterns of the resultant mod p");
  add_b(bit_gal);
  bit_gal->add_option("--primes", primes_csv, "comma-separated primes")->capture_default_str();

  CLI::App* pad = app.add_subcommand("padic", "formal-group logarithm on the residue disk at the hyperflex");
  pad->require_subcommand(1);
  CLI::App* pad_log = pad->add_subcommand("log", "three formal logarithm components");
  add_b(pad_log);
  pad_log->add_option("--prime", prime, "residue characteristic")->capture_default_str();
  pad_log->add_option("--order", order, "series truncation order")->capture_default_str();
  CLI::App* pad_rho = pad->add_subcommand("rholog", "reduced projective image of the logarithm on the disk");
  add_b(pad_rho);
  pad_rho->add_option("--prime", prime, "residue characteristic")->capture_default_str();
  pad_rho->add_option("--order", order, "series truncation order")->capture_default_str();
  CLI::App* pad_tor = pad->add_subcommand("torsion", "certify 0 as the only small-valuation root of the third component");
  add_b(pad_tor);
  pad_tor->add_option("--prime", prime, "residue characteristic")->capture_default_str();
  pad_tor->add_option("--order", order, "series truncation order")->capture_default_str();

  CLI::App* st = app.add_subcommand("stats", "exhaustive sweeps and bound combination");
  st->require_subcommand(1);
  CLI::App* st_den = st->add_subcommand("density", "good-reduction density over F_p (exhaustive)");
  st_den->add_option("--prime", prime, "field size (prime, <= 13)")->capture_default_str();
  CLI::App* st_max = st->add_subcommand("maxpoints", "maximum point count over the 7-element field");
  CLI::App* st_box = st->add_subcommand("box", "box cardinality and volume ratio at a height bound");
  st_box->add_option("--height", height, "height bound a")->capture_default_str();
  CLI::App* st_cmb = st->add_subcommand("combine", "combine a descent bound with sweep statistics");
  st_cmb->add_option("--selmer", selmer, "rank bound S")->capture_default_str();
  st_cmb->add_option("--d7", d7, "good-reduction density at 7")->capture_default_str();
  st_cmb->add_option("--maxf7", maxf7, "point-count cap over the 7-element field")->capture_default_str();

  CLI::App* rep = app.add_subcommand("report", "run verification suites and emit a machine-readable report");
  rep->add_option("--only", only, "comma-separated suites (default: all)");
  rep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fam->parsed()) {
      FamilyPoint b = parse_family_point(bcsv);
      if (fam_disc->parsed()) {
        Int d = discriminant(b);
        emit(json{{"b", family_point_csv(b)},
                  {"discriminant", d.get_str()},
                  {"nonzero", d != 0}});
        return 0;
      }
      if (fam_smooth->parsed()) {
        if (smooth_modp) {
          FqField K(require_prime(prime));
          emit(json{{"b", family_point_csv(b)},
                    {"prime", prime},
                    {"smooth", is_smooth_fq(K, b)}});
        } else {
          emit(json{{"b", family_point_csv(b)}, {"smooth", is_smooth_q(b)}});
        }
        return 0;
      }
      if (fam_count->parsed()) {
        FqField K(require_prime(prime));
        emit(json{{"b", family_point_csv(b)},
                  {"prime", prime},
                  {"count", point_count(K, b)}});
        return 0;
      }
      if (fam_enum->parsed()) {
        Int a = parse_int(height);
        if (a < 1) throw std::invalid_argument("height bound must be positive");
        unsigned long long n = enumerate_family(a, minimal, {});
        json j{{"height", a.get_str()}, {"minimal", minimal}, {"count", n}};
        if (!minimal) j["box_count"] = box_count(a).get_str();
        emit(j);
        return 0;
      }
    }
    if (e6cmd->parsed()) return cmd_e6_verify();
    if (bit->parsed()) {
      FamilyPoint b = parse_family_point(bcsv);
      if (bit_res->parsed()) {
        bitangent::BitangentResultant r = bitangent::bitangent_resultant(b);
        json coeffs = json::array(), monic = json::array();
        for (const Int& c : r.primitive) coeffs.push_back(c.get_str());
        for (const Rat& c : r.monic) monic.push_back(c.get_str());
        emit(json{{"b", family_point_csv(b)},
                  {"degree", r.degree},
                  {"coefficients", coeffs},
                  {"monic", monic}});
        return 0;
      }
      if (bit_gal->parsed()) {
        std::vector<long> primes = parse_longs(primes_csv);
        for (long p : primes) require_prime(p);
        bitangent::GaloisReport g = bitangent::galois_pattern_report(b, primes);
        json coeffs = json::array();
        for (const Int& c : g.primitive) coeffs.push_back(c.get_str());
        json per = json::array();
        for (const auto& pr : g.primes) {
          json pat = json::array();
          for (const auto& [deg, mult] : pr.pattern) pat.push_back(json::array({deg, mult}));
          per.push_back(json{{"p", pr.p},
                             {"degree_drop", pr.degree_drop},
                             {"squarefree", pr.squarefree},
                             {"ramified", pr.ramified},
                             {"pattern", pat}});
        }
        json j{{"b", family_point_csv(b)}, {"coefficients", coeffs}, {"primes", per}};
        if (g.has_two_adic) {
          FqField k2(2);
          json segs = json::array();
          for (size_t i = 0; i < g.two_adic.np.segments.size(); ++i) {
            const NPSegment& s = g.two_adic.np.segments[i];
            segs.push_back(json{{"slope", s.slope.get_str()},
                                {"length", s.length},
                                {"denominator", s.e},
                                {"residual", fqpoly_str(k2, g.two_adic.residuals[i], "y")}});
          }
          j["two_adic"] = json{{"segments", segs}};
        }
        emit(j);
        return 0;
      }
    }
    if (pad->parsed()) {
      FamilyPoint b = parse_family_point(bcsv);
      require_prime(prime);
      if (pad_log->parsed()) {
        padic::LogSeries L = padic::formal_log(b, prime, order);
        emit(json{{"b", family_point_csv(b)},
                  {"prime", prime},
                  {"log1", series_json(L.l1)},
                  {"log2", series_json(L.l2)},
                  {"log3", series_json(L.l3)}});
        return 0;
      }
      if (pad_rho->parsed()) {
        padic::RhoLogImage img = padic::rho_log_image(b, prime, order);
        json image = json::array();
        for (const auto& cls : img.image) image.push_back(json::array({cls[0], cls[1], cls[2]}));
        json strata = json::array();
        for (const auto& st2 : img.strata)
          strata.push_back(json{{"m", st2.m},
                                {"valuations", json::array({st2.vals[0], st2.vals[1], st2.vals[2]})},
                                {"class", json::array({st2.cls[0], st2.cls[1], st2.cls[2]})}});
        emit(json{{"b", family_point_csv(b)},
                  {"prime", prime},
                  {"image", image},
                  {"certificate", json{{"strata", strata},
                                       {"stable_from", img.stable_from},
                                       {"precision", img.precision}}}});
        return 0;
      }
      if (pad_tor->parsed()) {
        bool t = padic::torsion_disk_check(b, prime, order);
        emit(json{{"b", family_point_csv(b)},
                  {"prime", prime},
                  {"torsion_trivial_in_disk", t}});
        return 0;
      }
    }
    if (st->parsed()) {
      if (st_den->parsed()) {
        stats::DensityReport d = stats::density_good_reduction(require_prime(prime));
        emit(json{{"p", d.p},
                  {"total", d.total.get_str()},
                  {"smooth", d.smooth.get_str()},
                  {"density", d.density.get_str()},
                  {"decimal", d.decimal}});
        return 0;
      }
      if (st_max->parsed()) {
        stats::MaxPointsReport m = stats::max_points_f7();
        json arg = json::array();
        for (long x : m.argmax) arg.push_back(x);
        emit(json{{"max_count", m.max_count},
                  {"argmax", arg},
                  {"min_count_smooth", m.min_count_smooth}});
        return 0;
      }
      if (st_box->parsed()) {
        stats::BoxReport br = stats::box_count_report(parse_int(height));
        emit(json{{"height", br.a.get_str()},
                  {"count", br.count.get_str()},
                  {"ratio", br.ratio}});
        return 0;
      }
      if (st_cmb->parsed()) {
        stats::ChabautyReport c = stats::chabauty_combine(parse_rat(selmer), parse_rat(d7), maxf7);
        emit(json{{"selmer_bound", c.selmer_bound.get_str()},
                  {"delta_low", c.delta_low.get_str()},
                  {"d7", c.d7.get_str()},
                  {"majority_low", c.majority_low.get_str()},
                  {"max_f7", c.max_f7},
                  {"point_cap", c.point_cap}});
        return 0;
      }
    }
    if (rep->parsed()) return cmd_report(only, format);
  } catch (const padic::ScopeError& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return 2;
  } catch (const padic::PrecisionError& e) {
    std::cerr << "insufficient precision: " << e.what() << "\n";
    return 2;
  } catch (const bitangent::DegenerateFamilyMember& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
