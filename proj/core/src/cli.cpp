#include "adelic/cli.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "adelic/cohomology.hpp"
#include "adelic/harmonic.hpp"
#include "adelic/hecke.hpp"
#include "adelic/lattice.hpp"
#include "adelic/parse.hpp"
#include "adelic/surface.hpp"

namespace adelic::cli {

using nlohmann::json;

namespace {

json series_json(const ZetaSeries& Z) {
  json j;
  j["q"] = Z.q;
  j["lo"] = Z.lo;
  j["coefficients"] = Z.c;
  if (Z.fit) {
    j["fit"]["num"] = Z.fit->num;
    j["fit"]["den"] = Z.fit->den;
  }
  return j;
}

json cyclo_json(const algebra::CycloValue& v) {
  json j;
  j["p"] = v.p;
  std::vector<std::string> coords;
  for (const auto& r : v.c) coords.push_back(r.str());
  j["coords"] = coords;
  return j;
}

algebra::FqPtr field_for(long q) {
  long p = 2;
  while (p <= q && q % p != 0) ++p;
  int k = 0;
  long v = q;
  while (v > 1) {
    if (v % p != 0) throw ContractViolation("--q must be a prime power");
    v /= p;
    ++k;
  }
  if (k == 0) throw ContractViolation("--q must be at least 2");
  return algebra::FqField::make(p, k);
}

curve::CurveModel model_for(long q, const std::string& model, const std::string& poly) {
  json spec;
  spec["q"] = q;
  spec["model"] = model;
  if (!poly.empty()) spec["poly"] = poly;
  return parse::curve_model_json(spec.dump());
}

json cmd_zeta_curve(long q, const std::string& model, const std::string& poly,
                    const std::string& model_json, int terms, const std::string& method,
                    std::string& text) {
  auto m = model_json.empty() ? model_for(q, model, poly) : parse::curve_model_json(model_json);
  if (!model_json.empty()) q = model_field(m)->q();
  bool is_p1 = std::holds_alternative<curve::P1Model>(m);
  json out;
  out["q"] = q;
  out["terms"] = terms;
  std::vector<std::pair<std::string, ZetaSeries>> routes;
  if (method == "euler" || method == "all") routes.emplace_back("euler", curve::zeta_from_counts(m, terms));
  if (method == "dirichlet" || method == "all")
    routes.emplace_back("dirichlet", curve::zeta_effective_divisor_route(m, terms));
  if (method == "hecke" || method == "all") {
    if (!is_p1) {
      if (method == "hecke")
        throw ContractViolation("zeta curve: the single-local-field route needs the p1 model");
    } else {
      auto hz = hecke::hecke_zeta(model_field(m), hecke::DiscretePart::monic_polys(),
                                  hecke::MultiplicativeIntegrand::ideal_char(0), terms);
      routes.emplace_back("hecke", hz.series);
      out["hecke_contributing_pairs"] = hz.contributing_pairs;
    }
  }
  if (routes.empty()) throw ContractViolation("zeta curve: unknown --method");
  bool agree = true;
  for (const auto& [name, Z] : routes) {
    out["methods"][name] = series_json(Z);
    agree = agree && Z.same_coefficients(routes.front().second);
  }
  out["agree"] = agree;
  if (routes.front().second.fit)
    out["functional_equation_ok"] =
        curve::functional_equation_check(routes.front().second, model_genus(m));
  std::ostringstream os;
  for (const auto& [name, Z] : routes) {
    os << name << ":";
    for (long e = 0; e <= std::min<long>(terms, Z.hi() - 1); ++e) os << " " << Z.coeff(e);
    os << "\n";
  }
  os << (agree ? "routes agree" : "ROUTES DISAGREE") << "\n";
  text = os.str();
  if (!agree) throw InstabilityError("zeta curve: routes disagree");
  return out;
}

json cmd_zeta_surface(long q, int terms, std::string& text) {
  auto F = field_for(q);
  auto s = surface::surface_zeta_factorization(F, terms);
  json out;
  out["interpretation"] = "zero_cycle_strata";
  out["plane_stratum"] = series_json(s.plane_stratum);
  out["line_stratum"] = series_json(s.line_stratum);
  out["point_stratum"] = series_json(s.point_stratum);
  out["product"] = series_json(s.product);
  out["product_matches_p2"] = s.product_matches_p2;
  std::ostringstream os;
  os << "product:";
  for (auto c : s.product.c) os << " " << c;
  os << "\nmatches 1/((1-T)(1-qT)(1-q^2T)): " << (s.product_matches_p2 ? "yes" : "no") << "\n";
  text = os.str();
  if (!s.product_matches_p2) throw InstabilityError("zeta surface: product mismatch");
  return out;
}

json cmd_rr_verify(long q, const std::string& divisor, std::string& text) {
  auto F = field_for(q);
  auto D = parse::divisor(F, divisor);
  auto rep = harmonic::rr_via_parseval(D);
  json out;
  out["divisor"] = D.str();
  out["deg"] = rep.deg_D;
  out["l_D"] = rep.l_D;
  out["l_KD"] = rep.l_KD;
  out["window_dim"] = rep.window_dim;
  out["lhs_exponent"] = rep.lhs_exponent;
  out["rhs_exponent"] = rep.rhs_exponent;
  out["orthogonality_ok"] = rep.orthogonality_ok;
  out["parseval_ok"] = rep.parseval_ok;
  out["rr_identity_holds"] = rep.rr_identity_holds;
  std::ostringstream os;
  os << "l(D) = " << rep.l_D << ", l(K-D) = " << rep.l_KD << ", deg D = " << rep.deg_D << "\n"
     << "identity l(D) - l(K-D) = deg D + 1: " << (rep.rr_identity_holds ? "holds" : "FAILS")
     << "\nParseval exponents " << rep.lhs_exponent << " = " << rep.rhs_exponent << ": "
     << (rep.parseval_ok ? "ok" : "FAIL") << "\n";
  text = os.str();
  return out;
}

json cmd_hecke_fe(long q, long shift, int terms, std::string& text) {
  auto F = field_for(q);
  auto rep = hecke::functional_equation(F, hecke::DiscretePart::monic_polys(),
                                        hecke::MultiplicativeIntegrand::ideal_char(shift), terms);
  json out;
  out["zeta"] = series_json(rep.zeta);
  out["monomial_coeff"] = rep.monomial_coeff.str();
  out["monomial_power"] = rep.monomial_power;
  out["equation_holds"] = rep.equation_holds;
  std::ostringstream os;
  os << "Z(1/(qT)) = " << rep.monomial_coeff.str() << " * T^" << rep.monomial_power
     << " * Z(T): " << (rep.equation_holds ? "expected relation holds" : "unexpected relation")
     << "\n";
  text = os.str();
  return out;
}

json cmd_fourier_demo(long q, const std::string& divisor, unsigned seed, std::string& text) {
  auto F = field_for(q);
  curve::Divisor D = divisor.empty() ? curve::Divisor(F) : parse::divisor(F, divisor);
  auto W = harmonic::standard_window(D);
  auto Wd = adeles::dual_window(W);
  auto P = adeles::residue_pairing(W, Wd);
  bool subgroup = harmonic::subgroup_rule_check(W, D);
  std::mt19937 rng(seed);
  auto sp = W.space();
  harmonic::FnTable f(sp);
  std::uniform_int_distribution<long> dist(0, F->p() - 1);
  for (std::uint64_t i = 0; i < f.size(); ++i)
    f.set(i, algebra::CycloValue::zeta_pow(F->p(), dist(rng)));
  bool dbl = harmonic::double_transform_check(W, f);
  auto fhat = harmonic::fourier(f, P);
  harmonic::FnTable g(sp);
  for (std::uint64_t i = 0; i < g.size(); ++i)
    g.set(i, algebra::CycloValue::zeta_pow(F->p(), dist(rng)));
  auto cube = harmonic::cube_check(f, g, P);
  auto fam = harmonic::WindowFamily::standard(D);
  bool square = true;
  json types;
  for (auto [kind, name] : std::initializer_list<std::pair<harmonic::CatalogKind, const char*>>{
           {harmonic::CatalogKind::DeltaD, "delta_D"},
           {harmonic::CatalogKind::DeltaH1, "delta_H1"},
           {harmonic::CatalogKind::DeltaK, "delta_K"},
           {harmonic::CatalogKind::DeltaH0, "delta_H0"}}) {
    auto rep = harmonic::bruhat_type(kind, fam);
    types[name] = harmonic::bruhat_type_name(rep.type);
    square = square && harmonic::fourier_swap_check(kind, fam);
  }
  json out;
  out["window_dim"] = W.dim();
  out["subgroup_rule_ok"] = subgroup;
  out["double_transform_ok"] = dbl;
  out["cube_chain_ok"] = cube.ok;
  out["bruhat_types"] = types;
  out["bruhat_swap_ok"] = square;
  out["sample_transform_at_zero"] = cyclo_json(fhat.at(0));
  std::ostringstream os;
  os << "window dim " << W.dim() << ", subgroup rule: " << (subgroup ? "ok" : "FAIL")
     << ", double transform: " << (dbl ? "ok" : "FAIL")
     << ", cube chain: " << (cube.ok ? "ok" : "FAIL")
     << ", type square: " << (square ? "ok" : "FAIL") << "\n";
  text = os.str();
  if (!subgroup || !dbl || !cube.ok || !square)
    throw InstabilityError("fourier demo: transform identity failed");
  return out;
}

json residues_json(const surface::ResidueReport& rep, const algebra::FqPtr& F, std::string& text) {
  json out;
  json entries = json::array();
  std::ostringstream os;
  for (const auto& e : rep.residues) {
    json je;
    je["at"] = e.label;
    je["residue"] = static_cast<long>(e.value);
    entries.push_back(je);
    os << "res at " << e.label << " = " << static_cast<long>(e.value) << "\n";
  }
  out["residues"] = entries;
  out["sum"] = static_cast<long>(rep.sum);
  out["sum_is_zero"] = rep.sum == 0;
  os << "sum = " << static_cast<long>(rep.sum) << (rep.sum == 0 ? " (zero)" : " (NONZERO)") << "\n";
  text = os.str();
  (void)F;
  return out;
}

json cmd_residue_point(long q, const std::string& form, std::string& text) {
  auto F = field_for(q);
  auto w = parse::two_form(F, form);
  auto rep = surface::residue_relation_point(w);
  auto out = residues_json(rep, F, text);
  if (rep.sum != 0) throw InstabilityError("residue point: relation violated");
  return out;
}

json cmd_residue_curve(long q, const std::string& form, const std::string& curve_text,
                       std::string& text) {
  auto F = field_for(q);
  auto w = parse::two_form(F, form);
  surface::CurveSpec C;
  if (curve_text.rfind("t=", 0) == 0) {
    std::string rhs = curve_text.substr(2);
    if (rhs.find('u') != std::string::npos) {
      C = surface::CurveSpec::graph(parse::poly_in_u(F, rhs));
    } else {
      C = surface::CurveSpec::horizontal(F->from_int(std::stol(rhs)));
    }
  } else if (curve_text.rfind("u=", 0) == 0) {
    C = surface::CurveSpec::vertical(F->from_int(std::stol(curve_text.substr(2))));
  } else {
    throw ContractViolation("--curve must look like t=<c>, u=<c> or t=<phi(u)>");
  }
  auto rep = surface::residue_relation_curve(w, C);
  auto out = residues_json(rep, F, text);
  out["curve"] = curve_text;
  if (rep.sum != 0) throw InstabilityError("residue curve: relation violated");
  return out;
}

json cmd_lattice_enumerate(bool dot, std::string& text) {
  auto L = lattice::enumerate_free_lattice();
  json out;
  out["count"] = L.elements.size();
  std::vector<std::string> names;
  for (const auto& t : L.elements) names.push_back(t.str());
  out["elements"] = names;
  json edges = json::array();
  for (const auto& [lo, hi] : L.hasse) edges.push_back({lo, hi});
  out["hasse"] = edges;
  std::string dotText = lattice::hasse_dot(L);
  out["dot"] = dotText;
  std::ostringstream os;
  os << L.elements.size() << " elements, " << L.hasse.size() << " covering relations\n";
  if (dot) os << dotText;
  text = os.str();
  return out;
}

json cmd_lattice_model(bool search, std::string& text) {
  auto A = lattice::shipped_assignment();
  auto L = lattice::enumerate_free_lattice();
  bool hom = true;
  for (const auto& t1 : L.elements)
    for (const auto& t2 : L.elements) {
      auto m = lattice::model_evaluate(lattice::meet(t1, t2), A);
      auto j = lattice::model_evaluate(lattice::join(t1, t2), A);
      hom = hom &&
            m == lattice::set_intersection(lattice::model_evaluate(t1, A), lattice::model_evaluate(t2, A)) &&
            j == lattice::set_union(lattice::model_evaluate(t1, A), lattice::model_evaluate(t2, A));
    }
  bool inj = lattice::injectivity_check(A);
  json out;
  out["assignment"] = {A[0].str(), A[1].str(), A[2].str()};
  out["homomorphism_ok"] = hom;
  out["injective"] = inj;
  if (search) {
    auto found = lattice::search_assignment();
    out["search_found"] = found.has_value();
    if (found) out["search_assignment"] = {(*found)[0].str(), (*found)[1].str(), (*found)[2].str()};
  }
  std::ostringstream os;
  os << "assignment:\n  01 -> " << A[0].str() << "\n  02 -> " << A[1].str() << "\n  12 -> "
     << A[2].str() << "\n"
     << "lattice homomorphism: " << (hom ? "ok" : "FAIL") << "\n"
     << "pairwise non-commensurable: " << (inj ? "yes" : "no") << "\n";
  text = os.str();
  return out;
}

json cmd_measure_torsor(std::string& text) {
  bool ok = true;
  for (long a = -3; a <= 3 && ok; ++a)
    for (long b = -3; b <= 3 && ok; ++b) {
      surface::NormalizationDatum d0{0, 0}, d1{a, b};
      auto diff = surface::torsor_difference(d1, d0);
      ok = ok && diff.first == a && diff.second == b;
      auto acted = surface::torsor_act(d0, a, b);
      ok = ok && acted == d1;
      for (long c = -2; c <= 2 && ok; ++c)
        for (long e = -2; e <= 2 && ok; ++e) {
          auto two = surface::torsor_act(surface::torsor_act(d0, a, b), c, e);
          ok = ok && two == surface::torsor_act(d0, a + c, b + e);
        }
    }
  // f02 transitivity on a small two-level window
  auto F2 = algebra::FqField::make(2, 1);
  surface::TwoLevelWindow W;
  W.F = F2;
  W.lo_t = 0;
  W.hi_t = 3;
  W.u_windows = {{-1, 1}, {0, 2}, {-1, 1}};
  auto f = harmonic::FnTable::char_mask(W.space(), W.b_type_mask());
  bool transitive = true;
  for (long a = -2; a <= 2 && transitive; ++a)
    for (long b = -2; b <= 2 && transitive; ++b) {
      surface::NormalizationDatum d{a, b};
      surface::TwoLevelWindow W2 = W;
      W2.hi_t = 2;
      W2.u_windows.resize(2);
      auto two = surface::f02_pushforward(surface::f02_pushforward(f, W, 2, d), W2, 1, d);
      transitive = two == surface::f02_pushforward(f, W, 1, d);
    }
  json out;
  out["torsor_laws_ok"] = ok;
  out["f02_transitivity_ok"] = transitive;
  text = std::string("torsor laws on [-3,3]^2: ") + (ok ? "ok" : "FAIL") +
         ", f02 transitivity: " + (transitive ? "ok" : "FAIL") + "\n";
  if (!ok || !transitive) throw InstabilityError("measure torsor: laws failed");
  return out;
}

json cmd_cohomology(long q, const std::string& divisor, std::string& text) {
  auto F = field_for(q);
  auto D = parse::divisor(F, divisor);
  auto rep = adeles::restricted_complex_cohomology(D);
  auto W = harmonic::standard_window(D);
  bool sa = adeles::strong_approximation_check(W, series::ClosedPoint::infinity(F));
  json out;
  out["divisor"] = D.str();
  out["h0"] = rep.h0;
  out["h1"] = rep.h1;
  out["bound_poles"] = rep.bound_poles;
  out["bound_prec"] = rep.bound_prec;
  out["strong_approximation_ok"] = sa;
  std::ostringstream os;
  os << "h0 = " << rep.h0 << ", h1 = " << rep.h1 << " (stable at bounds " << rep.bound_poles << ", "
     << rep.bound_prec << "), strong approximation: " << (sa ? "ok" : "FAIL") << "\n";
  text = os.str();
  return out;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult res;
  auto start = std::chrono::steady_clock::now();

  CLI::App app{"exact higher-adelic zeta, Fourier and residue computations"};
  app.require_subcommand(1);
  app.fallthrough(true);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the JSON payload");

  long q = 2;
  int terms = 12;
  long shift = 0;
  unsigned seed = 1;
  std::string model = "p1", poly, model_json, method = "all", divisor, form, curve_text;
  bool dot = false, do_search = false;

  auto* zeta = app.add_subcommand("zeta", "zeta functions");
  auto* zc = zeta->add_subcommand("curve", "curve zeta by all three routes");
  zc->add_option("--q", q);
  zc->add_option("--model", model, "p1 or plane");
  zc->add_option("--poly", poly, "homogeneous x,y,z polynomial for plane models");
  zc->add_option("--model-json", model_json, "full model document, e.g. {\"q\":2,\"model\":\"p1\"}");
  zc->add_option("--terms", terms);
  zc->add_option("--method", method, "euler|dirichlet|hecke|all");
  auto* zs = zeta->add_subcommand("surface", "three-factor surface zeta");
  zs->add_option("--q", q);
  zs->add_option("--terms", terms);

  auto* rr = app.add_subcommand("rr", "Riemann-Roch via Parseval");
  auto* rrv = rr->add_subcommand("verify", "verify the identity for a divisor");
  rrv->add_option("--q", q);
  rrv->add_option("--divisor", divisor)->required();

  auto* hk = app.add_subcommand("hecke", "single-local-field zeta");
  auto* fe = hk->add_subcommand("fe", "functional equation of the fit");
  fe->add_option("--q", q);
  fe->add_option("--shift", shift, "ideal shift n in char(pi^n O)");
  fe->add_option("--terms", terms);

  auto* fd = app.add_subcommand("fourier", "window Fourier transforms");
  auto* fdd = fd->add_subcommand("demo", "subgroup rule and double transform on a window");
  fdd->add_option("--q", q);
  fdd->add_option("--divisor", divisor);
  fdd->add_option("--seed", seed);

  auto* rs = app.add_subcommand("residue", "two-dimensional residue relations");
  auto* rp = rs->add_subcommand("point", "sum over curves through the origin");
  rp->add_option("--q", q);
  rp->add_option("--form", form)->required();
  auto* rc = rs->add_subcommand("curve", "sum over the points of a curve");
  rc->add_option("--q", q);
  rc->add_option("--form", form)->required();
  rc->add_option("--curve", curve_text)->required();

  auto* lat = app.add_subcommand("lattice", "free distributive lattice");
  auto* le = lat->add_subcommand("enumerate", "the 18 elements and Hasse diagram");
  le->add_flag("--dot", dot, "print the DOT text");
  auto* lm = lat->add_subcommand("model", "quadrant-set model report");
  lm->add_flag("--search", do_search, "run the bounded assignment search");

  auto* ms = app.add_subcommand("measure", "Haar normalization torsor");
  auto* mt = ms->add_subcommand("torsor", "difference/action laws");
  (void)mt;

  auto* ch = app.add_subcommand("cohomology", "restricted adelic complex");
  auto* cr = ch->add_subcommand("restricted", "h0/h1 of A + O_P -> K_P");
  cr->add_option("--q", q);
  cr->add_option("--divisor", divisor)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  json payload;
  try {
    try {
      app.parse(rev);
    } catch (const CLI::ParseError& e) {
      std::ostringstream os;
      if (e.get_exit_code() == 0) {
        // help requested
        res.text = app.help();
        res.status = "ok";
        res.exit_code = 0;
        res.payload_json = "{}";
        return res;
      }
      os << e.what() << "\n" << app.help();
      res.text = os.str();
      res.status = "contract-violation";
      res.exit_code = 2;
      res.payload_json = "{}";
      return res;
    }

    std::string text;
    if (zc->parsed()) payload = cmd_zeta_curve(q, model, poly, model_json, terms, method, text);
    else if (zs->parsed()) payload = cmd_zeta_surface(q, terms, text);
    else if (rrv->parsed()) payload = cmd_rr_verify(q, divisor, text);
    else if (fe->parsed()) payload = cmd_hecke_fe(q, shift, terms, text);
    else if (fdd->parsed()) payload = cmd_fourier_demo(q, divisor, seed, text);
    else if (rp->parsed()) payload = cmd_residue_point(q, form, text);
    else if (rc->parsed()) payload = cmd_residue_curve(q, form, curve_text, text);
    else if (le->parsed()) payload = cmd_lattice_enumerate(dot, text);
    else if (lm->parsed()) payload = cmd_lattice_model(do_search, text);
    else if (mt->parsed()) payload = cmd_measure_torsor(text);
    else if (cr->parsed()) payload = cmd_cohomology(q, divisor, text);
    else {
      res.text = app.help();
      res.status = "contract-violation";
      res.exit_code = 2;
      res.payload_json = "{}";
      return res;
    }
    res.text = text;
    res.status = "ok";
    res.exit_code = 0;
  } catch (const ContractViolation& e) {
    res.status = "contract-violation";
    res.exit_code = 2;
    res.text = std::string("contract violation: ") + e.what() + "\n";
  } catch (const InstabilityError& e) {
    res.status = "instability";
    res.exit_code = 3;
    res.text = std::string("instability: ") + e.what() + "\n";
  }

  auto end = std::chrono::steady_clock::now();
  res.ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  json doc;
  doc["status"] = res.status;
  doc["ms"] = res.ms;
  doc["payload"] = payload;
  res.payload_json = doc.dump(2);
  if (as_json) res.text = res.payload_json + "\n";
  return res;
}

}  // namespace adelic::cli
