// Command-line front end: every subcommand prints one JSON payload with a
// version field, all numbers as decimal strings, and deterministic key order.
// Exit codes: 0 success, 1 bad mathematical input, 2 internal check failure,
// 3 usage error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bcw/jsonio.hpp"
#include "bcw/verify.hpp"

using namespace bcw;

namespace {

struct Ctx {
  std::string output;
  unsigned long seed = 1;
  std::string command;
  Json body;
  bool produced = false;
  bool failed = false;  // payload produced but the run did not verify
};

void emit(Ctx& ctx) {
  std::string payload = finish_payload(ctx.command, ctx.body);
  if (ctx.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(ctx.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + ctx.output);
    out << payload;
  }
}

NumberField load_field(const std::string& poly) {
  return NumberField::make(parse_poly(poly));
}

Json dr_table_json(const NumberField& k, const DRMonoid& m) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json e;
    e["class"] = i;
    e["divisor"] = json_ideal(k, m.component_divisor(i));
    if (m.has_representatives())
      e["repr"] = json_ideal(k, m.representative(i));
    else
      e["repr"] = nullptr;
    elements.push_back(e);
  }
  Json table = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.mul(i, j));
    table.push_back(row);
  }
  Json body;
  body["size"] = m.size();
  body["identity"] = m.identity_index();
  body["elements"] = elements;
  body["table"] = table;
  return body;
}

CyclotomicRing::Elem elem_from_json(const CyclotomicRing& R, const Json& v) {
  if (v.is_string()) return R.from_rational(parse_rat(v.get<std::string>()));
  if (!v.is_array()) throw std::invalid_argument("bad coefficient value");
  CyclotomicRing::Elem e = R.zero();
  if (v.size() > R.degree())
    throw std::invalid_argument("coefficient array longer than the degree");
  for (std::size_t i = 0; i < v.size(); ++i)
    e[i] = parse_rat(v[i].get<std::string>());
  return e;
}

Json elem_to_json(const CyclotomicRing& R, const CyclotomicRing::Elem& e) {
  if (R.degree() == 1) return json_rat(e[0]);
  Json a = Json::array();
  for (const Rat& c : e) a.push_back(json_rat(c));
  return a;
}

TruncationSet trunc_from_json(const Json& data) {
  if (!data.contains("S")) throw std::invalid_argument("missing S");
  std::vector<long> s;
  for (const auto& v : data.at("S")) s.push_back(v.get<long>());
  return TruncationSet(s);
}

std::map<long, CyclotomicRing::Elem> coords_from_json(const CyclotomicRing& R,
                                                      const Json& data,
                                                      const char* key,
                                                      const TruncationSet& S) {
  if (!data.contains(key))
    throw std::invalid_argument(std::string("missing ") + key);
  std::map<long, CyclotomicRing::Elem> out;
  for (const auto& [ks, v] : data.at(key).items())
    out[std::stol(ks)] = elem_from_json(R, v);
  for (long n : S.elements())
    if (!out.count(n))
      throw std::invalid_argument("missing component " + std::to_string(n));
  return out;
}

Json coords_to_json(const CyclotomicRing& R,
                    const std::map<long, CyclotomicRing::Elem>& c) {
  Json out;
  for (const auto& [n, e] : c) out[std::to_string(n)] = elem_to_json(R, e);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  CLI::App app{"exact finite-level class field and Witt vector computations"};
  app.require_subcommand(1);
  app.add_option("--output", ctx.output, "write the JSON payload to a file");
  app.add_option("--seed", ctx.seed, "seed for randomized checks");

  // field new --poly g
  auto* field_cmd = app.add_subcommand("field", "number field data");
  auto* field_new = field_cmd->add_subcommand("new", "construct a field");
  std::string poly;
  field_new->add_option("--poly", poly, "monic defining polynomial in x")
      ->required();
  field_new->callback([&] {
    NumberField k = load_field(poly);
    Json b;
    b["poly"] = k.poly().to_string();
    b["degree"] = k.degree();
    b["discriminant"] = json_int(k.discriminant());
    b["signature"] = Json::array({k.r1(), k.r2()});
    Json basis = Json::array();
    for (const auto& row : k.basis_matrix()) {
      Json r = Json::array();
      for (const Rat& c : row) r.push_back(json_rat(c));
      basis.push_back(r);
    }
    b["integral_basis"] = basis;
    b["torsion_order"] = json_int(k.units().torsion_order);
    Json fu = Json::array();
    for (const FieldElement& u : k.units().fundamental_units)
      fu.push_back(json_element(u));
    b["fundamental_units"] = fu;
    ctx.command = "field new";
    ctx.body = b;
    ctx.produced = true;
  });

  // ideal hnf|factor --field g --gens "..."
  auto* ideal_cmd = app.add_subcommand("ideal", "ideal arithmetic");
  std::string ideal_field, ideal_gens;
  auto* ideal_hnf = ideal_cmd->add_subcommand("hnf", "canonical form");
  auto* ideal_factor = ideal_cmd->add_subcommand("factor", "prime factors");
  for (auto* sub : {ideal_hnf, ideal_factor}) {
    sub->add_option("--field", ideal_field, "defining polynomial")->required();
    sub->add_option("--gens", ideal_gens,
                    "comma-separated generators, t = root of the polynomial")
        ->required();
  }
  ideal_hnf->callback([&] {
    NumberField k = load_field(ideal_field);
    FractionalIdeal a = ideal_from_exprs(k, ideal_gens);
    ctx.command = "ideal hnf";
    ctx.body = json_ideal(k, a);
    ctx.produced = true;
  });
  ideal_factor->callback([&] {
    NumberField k = load_field(ideal_field);
    FractionalIdeal a = ideal_from_exprs(k, ideal_gens);
    Json factors = Json::array();
    for (const auto& [P, e] : factor_ideal(k, a)) {
      Json f;
      f["p"] = json_int(P.p);
      f["ideal"] = json_ideal(k, P.ideal);
      f["residue_degree"] = P.deg;
      f["ramification"] = P.e;
      f["exponent"] = e;
      factors.push_back(f);
    }
    ctx.command = "ideal factor";
    ctx.body["ideal"] = json_ideal(k, a);
    ctx.body["factors"] = factors;
    ctx.produced = true;
  });

  // rayclass --field g --modulus gens [--strict]
  auto* ray_cmd = app.add_subcommand("rayclass", "strict ray class group");
  std::string ray_field, ray_mod;
  bool ray_ordinary = false;
  ray_cmd->add_option("--field", ray_field, "defining polynomial")->required();
  ray_cmd->add_option("--modulus", ray_mod, "modulus generators")->required();
  ray_cmd->add_flag("--ordinary", ray_ordinary,
                    "drop the positivity condition");
  ray_cmd->callback([&] {
    NumberField k = load_field(ray_field);
    FractionalIdeal f = ideal_from_exprs(k, ray_mod);
    RayClassGroup g(k, f, !ray_ordinary);
    Json b;
    Json inv = Json::array();
    for (const Int& d : g.group().invariant_factors())
      inv.push_back(json_int(d));
    b["invariant_factors"] = inv;
    b["order"] = json_int(g.order());
    Json gens = Json::array();
    for (const FractionalIdeal& a : g.generator_ideals())
      gens.push_back(json_ideal(k, a));
    b["generators"] = gens;
    // classes of the small prime ideals coprime to the modulus
    Json artin = Json::array();
    for (long p = 2; p <= 30; ++p) {
      if (!is_prime(Int(p))) continue;
      for (const PrimeIdeal& P : primes_above(k, Int(p))) {
        if (!ideals_coprime(k, P.ideal, f)) continue;
        Json row;
        row["prime"] = json_ideal(k, P.ideal);
        Json cls = Json::array();
        for (const Int& c : g.class_of(P.ideal))
          cls.push_back(json_int(c));
        row["class"] = cls;
        artin.push_back(row);
      }
    }
    b["artin_table"] = artin;
    ctx.command = "rayclass";
    ctx.body = b;
    ctx.produced = true;
  });

  // dr table|project|idempotents
  auto* dr_cmd = app.add_subcommand("dr", "finite quotient monoids");
  std::string dr_field, dr_mod, dr_mod2, dr_constr = "a";
  auto* dr_table = dr_cmd->add_subcommand("table", "full multiplication table");
  dr_table->add_option("--field", dr_field, "defining polynomial")->required();
  dr_table->add_option("--modulus", dr_mod, "modulus generators")->required();
  dr_table->add_option("--construction", dr_constr, "a | b | c");
  dr_table->callback([&] {
    NumberField k = load_field(dr_field);
    FractionalIdeal f = ideal_from_exprs(k, dr_mod);
    DRMonoid m = dr_constr == "a"   ? dr_quotient(k, f)
                 : dr_constr == "b" ? dr_structural(k, f)
                 : dr_constr == "c" ? dr_fiber_product(k, f)
                                    : throw std::invalid_argument(
                                          "construction must be a, b or c");
    ctx.command = "dr table";
    ctx.body = dr_table_json(k, m);
    ctx.produced = true;
  });
  auto* dr_project_cmd =
      dr_cmd->add_subcommand("project", "projection between levels");
  dr_project_cmd->add_option("--field", dr_field, "defining polynomial")
      ->required();
  dr_project_cmd->add_option("--modulus-fine", dr_mod, "finer modulus")
      ->required();
  dr_project_cmd->add_option("--modulus-coarse", dr_mod2, "coarser modulus")
      ->required();
  dr_project_cmd->callback([&] {
    NumberField k = load_field(dr_field);
    DRMonoid fine = dr_quotient(k, ideal_from_exprs(k, dr_mod));
    DRMonoid coarse = dr_quotient(k, ideal_from_exprs(k, dr_mod2));
    Json map = Json::array();
    for (std::size_t i : dr_project(fine, coarse)) map.push_back(i);
    ctx.command = "dr project";
    ctx.body["fine_size"] = fine.size();
    ctx.body["coarse_size"] = coarse.size();
    ctx.body["map"] = map;
    ctx.produced = true;
  });
  auto* dr_idem = dr_cmd->add_subcommand("idempotents", "idempotent classes");
  dr_idem->add_option("--field", dr_field, "defining polynomial")->required();
  dr_idem->add_option("--modulus", dr_mod, "modulus generators")->required();
  dr_idem->callback([&] {
    NumberField k = load_field(dr_field);
    DRMonoid m = dr_quotient(k, ideal_from_exprs(k, dr_mod));
    Json idem = Json::array();
    for (std::size_t i : m.idempotent_indices()) idem.push_back(i);
    ctx.command = "dr idempotents";
    ctx.body["size"] = m.size();
    ctx.body["idempotents"] = idem;
    ctx.produced = true;
  });

  // witt ghost|unghost|member|frobcheck|periodic-rank
  auto* witt_cmd = app.add_subcommand("witt", "Witt vector arithmetic");
  std::string witt_data, witt_field, witt_mod;
  long witt_level = 1, witt_prime = 2;
  int witt_trials = 20;
  auto* w_ghost = witt_cmd->add_subcommand("ghost", "coordinates to ghost");
  auto* w_unghost = witt_cmd->add_subcommand("unghost", "ghost to coordinates");
  auto* w_member =
      witt_cmd->add_subcommand("member", "congruence membership test");
  for (auto* sub : {w_ghost, w_unghost, w_member}) {
    sub->add_option("--data", witt_data, "JSON {\"S\":[...], ...}")->required();
    sub->add_option("--level", witt_level, "cyclotomic coefficient level");
  }
  w_ghost->callback([&] {
    CyclotomicRing R(witt_level);
    Json data = Json::parse(witt_data);
    WittVector x{trunc_from_json(data), {}};
    x.x = coords_from_json(R, data, "x", x.S);
    GhostVector g = ghost(R, x);
    ctx.command = "witt ghost";
    Json s = Json::array();
    for (long n : g.S.elements()) s.push_back(n);
    ctx.body["S"] = s;
    ctx.body["w"] = coords_to_json(R, g.w);
    ctx.produced = true;
  });
  w_unghost->callback([&] {
    CyclotomicRing R(witt_level);
    Json data = Json::parse(witt_data);
    GhostVector g{trunc_from_json(data), {}};
    g.w = coords_from_json(R, data, "w", g.S);
    WittVector x = unghost(R, g);
    ctx.command = "witt unghost";
    Json s = Json::array();
    for (long n : x.S.elements()) s.push_back(n);
    ctx.body["S"] = s;
    ctx.body["x"] = coords_to_json(R, x.x);
    ctx.produced = true;
  });
  w_member->callback([&] {
    CyclotomicRing R(witt_level);
    Json data = Json::parse(witt_data);
    GhostVector g{trunc_from_json(data), {}};
    g.w = coords_from_json(R, data, "w", g.S);
    ctx.command = "witt member";
    ctx.body["member"] = dwork_member(R, g);
    ctx.produced = true;
  });
  auto* w_frob = witt_cmd->add_subcommand("frobcheck", "lift congruence");
  w_frob->add_option("--level", witt_level, "cyclotomic level")->required();
  w_frob->add_option("--prime", witt_prime, "prime not dividing the level")
      ->required();
  w_frob->add_option("--trials", witt_trials, "random elements to test");
  w_frob->callback([&] {
    bool ok =
        cyclotomic_frobenius_check(witt_level, Int(witt_prime), witt_trials,
                                   ctx.seed);
    ctx.command = "witt frobcheck";
    ctx.body["level"] = witt_level;
    ctx.body["prime"] = json_int(Int(witt_prime));
    ctx.body["trials"] = witt_trials;
    ctx.body["passed"] = ok;
    ctx.produced = true;
    ctx.failed = !ok;
  });
  auto* w_rank = witt_cmd->add_subcommand("periodic-rank", "rank identity");
  w_rank->add_option("--field", witt_field, "defining polynomial")->required();
  w_rank->add_option("--modulus", witt_mod, "modulus generators")->required();
  w_rank->callback([&] {
    NumberField k = load_field(witt_field);
    FractionalIdeal f = ideal_from_exprs(k, witt_mod);
    ctx.command = "witt periodic-rank";
    ctx.body["rank"] = json_int(periodic_rank(k, f));
    ctx.produced = true;
  });

  // endo verify|zeta
  auto* endo_cmd = app.add_subcommand("endo", "finite-level endomotive");
  std::string endo_field, endo_mod;
  long endo_bound = 100;
  bool endo_euler = false;
  auto* endo_verify =
      endo_cmd->add_subcommand("verify", "crossed-product relation report");
  endo_verify->add_option("--field", endo_field, "defining polynomial")
      ->required();
  endo_verify->add_option("--modulus", endo_mod, "modulus generators")
      ->required();
  endo_verify->callback([&] {
    NumberField k = load_field(endo_field);
    FractionalIdeal f = ideal_from_exprs(k, endo_mod);
    CrossedOps ops = crossed_ops(k, f);
    const DRMonoid& m = ops.monoid;
    Json relations = Json::array();
    bool all = true;
    auto report = [&](const std::string& name, bool pass) {
      Json r;
      r["relation"] = name;
      r["passed"] = pass;
      relations.push_back(r);
      all = all && pass;
    };
    std::size_t N = m.size();
    for (std::size_t a = 0; a < N; ++a) {
      std::string sa = std::to_string(a);
      report("e(" + sa + ")^2 = e(" + sa + ")",
             rat_mat_mul(ops.proj[a], ops.proj[a]) == ops.proj[a]);
      report("mu(" + sa + ") mu*(" + sa + ") = e(" + sa + ")",
             rat_mat_mul(ops.mu[a], ops.mu_star[a]) == ops.proj[a]);
      RatMat dom = rat_mat_mul(ops.mu_star[a], ops.mu[a]);
      report("mu*(" + sa + ") mu(" + sa + ") idempotent",
             rat_mat_mul(dom, dom) == dom);
      for (std::size_t b2 = 0; b2 < N; ++b2) {
        std::string sb = std::to_string(b2);
        std::string sab = std::to_string(m.mul(a, b2));
        report("sigma(" + sa + ") sigma(" + sb + ") = sigma(" + sab + ")",
               rat_mat_mul(ops.sigma[a], ops.sigma[b2]) ==
                   ops.sigma[m.mul(a, b2)]);
        report("mu(" + sa + ") mu(" + sb + ") = mu(" + sab + ")",
               rat_mat_mul(ops.mu[a], ops.mu[b2]) == ops.mu[m.mul(a, b2)]);
      }
    }
    ctx.command = "endo verify";
    ctx.body["size"] = N;
    ctx.body["relations"] = relations;
    ctx.body["passed"] = all;
    ctx.produced = true;
    ctx.failed = !all;
  });
  auto* endo_zeta = endo_cmd->add_subcommand("zeta", "ideal counting");
  endo_zeta->add_option("--field", endo_field, "defining polynomial")
      ->required();
  endo_zeta->add_option("--bound", endo_bound, "largest norm")->required();
  endo_zeta->add_flag("--euler-check", endo_euler,
                      "cross-check against the Euler product");
  endo_zeta->callback([&] {
    NumberField k = load_field(endo_field);
    std::vector<Int> a = zeta_coefficients(k, endo_bound, endo_euler);
    Json coeffs = Json::array();
    for (const Int& c : a) coeffs.push_back(json_int(c));
    ctx.command = "endo zeta";
    ctx.body["bound"] = endo_bound;
    ctx.body["euler_checked"] = endo_euler;
    ctx.body["coefficients"] = coeffs;
    ctx.produced = true;
  });

  // verify [--suite all]
  auto* verify_cmd =
      app.add_subcommand("verify", "run the full verification suite");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "only 'all' is defined");
  verify_cmd->callback([&] {
    if (suite != "all") throw std::invalid_argument("unknown suite: " + suite);
    auto results = run_acceptance(ctx.seed);
    Json criteria = Json::array();
    bool all = true;
    for (const auto& r : results) {
      Json c;
      c["index"] = r.index;
      c["name"] = r.name;
      c["passed"] = r.passed;
      c["detail"] = r.detail;
      criteria.push_back(c);
      all = all && r.passed;
    }
    ctx.command = "verify";
    ctx.body["seed"] = ctx.seed;
    ctx.body["criteria"] = criteria;
    ctx.body["passed"] = all;
    ctx.produced = true;
    ctx.failed = !all;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const MathInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "bad JSON input: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }

  if (!ctx.produced) {
    std::cerr << "no action selected\n";
    return 3;
  }
  try {
    emit(ctx);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return ctx.failed ? 2 : 0;
}
