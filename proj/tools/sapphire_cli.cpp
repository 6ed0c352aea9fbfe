#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sapphire/coefficients.hpp"
#include "sapphire/group.hpp"
#include "sapphire/homology.hpp"
#include "sapphire/products.hpp"
#include "sapphire/resolution.hpp"
#include "sapphire/verify.hpp"

using nlohmann::ordered_json;

namespace {

sapphire::GroupParams parse_params_arg(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw std::invalid_argument("--params expects four integers r,s,t,u");
  return sapphire::validate_params(sapphire::Int(parts[0]), sapphire::Int(parts[1]),
                                   sapphire::Int(parts[2]), sapphire::Int(parts[3]));
}

ordered_json params_json(const sapphire::GroupParams& P) {
  ordered_json j;
  j["r"] = sapphire::to_long(P.r());
  j["s"] = sapphire::to_long(P.s());
  j["t"] = sapphire::to_long(P.t());
  j["u"] = sapphire::to_long(P.u());
  return j;
}

ordered_json invariants_json(const sapphire::AbelianInvariants& a) {
  ordered_json j;
  j["free_rank"] = a.free_rank;
  ordered_json tor = ordered_json::array();
  for (const auto& d : a.torsion) tor.push_back(sapphire::to_long(d));
  j["torsion"] = tor;
  return j;
}

ordered_json vector_json(const sapphire::IntVector& v) {
  ordered_json j = ordered_json::array();
  for (long i = 0; i < v.size(); ++i) j.push_back(sapphire::to_long(v(i)));
  return j;
}

std::string vector_text(const sapphire::IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (long i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i);
  }
  os << ")";
  return os.str();
}

int cmd_compute(const sapphire::GroupParams& P, const std::string& coeff,
                const std::string& format) {
  sapphire::CoefficientModule A = sapphire::parse_coefficient(P, coeff);
  sapphire::ResolutionData R = sapphire::build_resolution(P);
  sapphire::HomologyEngine engine(R, A);

  if (format == "json") {
    ordered_json results;
    results["coefficients"] = A.label;
    ordered_json coh = ordered_json::array(), hom = ordered_json::array();
    ordered_json gens = ordered_json::array();
    for (int k = 0; k <= 3; ++k) {
      coh.push_back(invariants_json(engine.cohomology(k).invariants()));
      hom.push_back(invariants_json(engine.homology(k).invariants()));
      ordered_json degree = ordered_json::array();
      const auto& g = engine.cohomology(k).generators();
      const auto& orders = engine.cohomology(k).generator_orders();
      for (size_t i = 0; i < g.size(); ++i) {
        ordered_json one;
        one["id"] = "h" + std::to_string(k) + "." + std::to_string(i);
        one["order"] = sapphire::to_long(orders[i]);  // 0 = infinite
        one["cocycle"] = vector_json(g[i]);
        degree.push_back(one);
      }
      gens.push_back(degree);
    }
    results["cohomology"] = coh;
    results["homology"] = hom;
    results["cohomology_generators"] = gens;
    ordered_json out;
    out["params"] = params_json(P);
    out["results"] = results;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "params: r=" << P.r() << " s=" << P.s() << " t=" << P.t() << " u=" << P.u()
            << "\n";
  std::cout << "coefficients: " << A.label << "\n";
  for (int k = 0; k <= 3; ++k)
    std::cout << "H^" << k << " = " << engine.cohomology(k).invariants().to_text() << "\n";
  for (int k = 0; k <= 3; ++k)
    std::cout << "H_" << k << " = " << engine.homology(k).invariants().to_text() << "\n";
  std::cout << "cohomology generators (cocycle coordinate vectors):\n";
  for (int k = 0; k <= 3; ++k) {
    const auto& g = engine.cohomology(k).generators();
    const auto& orders = engine.cohomology(k).generator_orders();
    for (size_t i = 0; i < g.size(); ++i) {
      std::cout << "  h" << k << "." << i << " = " << vector_text(g[i]);
      if (orders[i].is_zero())
        std::cout << "  (infinite order)\n";
      else
        std::cout << "  (order " << orders[i] << ")\n";
    }
  }
  return 0;
}

int cmd_products(const sapphire::GroupParams& P, const std::string& c1, const std::string& c2,
                 const std::string& format) {
  sapphire::CoefficientModule A = sapphire::parse_coefficient(P, c1);
  sapphire::CoefficientModule B = sapphire::parse_coefficient(P, c2);
  sapphire::ResolutionData R = sapphire::build_resolution(P);
  sapphire::ProductTable tab = sapphire::product_table(R, A, B);

  if (format == "json") {
    ordered_json results;
    results["coefficients"] = ordered_json::array({A.label, B.label});
    results["target_h2"] = invariants_json(tab.target_h2);
    results["target_h3"] = invariants_json(tab.target_h3);
    ordered_json entries = ordered_json::array();
    for (const auto& e : tab.entries) {
      ordered_json one;
      one["bidegree"] = ordered_json::array({e.p, e.q});
      one["left"] = e.left;
      one["right"] = e.right;
      one["result"] = vector_json(e.result);
      entries.push_back(one);
    }
    results["products"] = entries;
    ordered_json out;
    out["params"] = params_json(P);
    out["results"] = results;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "params: r=" << P.r() << " s=" << P.s() << " t=" << P.t() << " u=" << P.u()
            << "\n";
  std::cout << "coefficients: " << A.label << " (x) " << B.label << "\n";
  std::cout << "H^2(A (x) B) = " << tab.target_h2.to_text() << "\n";
  std::cout << "H^3(A (x) B) = " << tab.target_h3.to_text() << "\n";
  std::cout << "products (result in target generators h(p+q).i):\n";
  for (const auto& e : tab.entries)
    std::cout << "  (" << e.p << "," << e.q << ") " << e.left << " . " << e.right << " -> "
              << vector_text(e.result) << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, bool inject_fault, const std::string& format) {
  sapphire::VerificationReport rep = sapphire::run_verification(seed, inject_fault);
  if (format == "json") {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
      ordered_json one;
      one["name"] = c.name;
      one["pass"] = c.pass;
      if (!c.detail.empty()) one["detail"] = c.detail;
      checks.push_back(one);
    }
    ordered_json results;
    results["seed"] = seed;
    results["checks"] = checks;
    results["failures"] = rep.failures();
    ordered_json out;
    out["params"] = nullptr;  // verify runs its built-in parameter panel
    out["results"] = results;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
      std::cout << "\n";
    }
    std::cout << rep.checks.size() << " checks, " << rep.failures() << " failures\n";
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology groups and cup/cap products of sapphire fundamental groups"};
  app.require_subcommand(1);

  std::string params_str;
  std::vector<std::string> coeffs;
  std::string format = "text";
  std::uint64_t seed = 917504;
  bool inject_fault = false;

  CLI::App* compute = app.add_subcommand("compute", "cohomology and homology groups");
  CLI::App* products = app.add_subcommand("products", "cup product tables");
  CLI::App* verify = app.add_subcommand("verify", "run the invariant and oracle suite");

  for (CLI::App* sub : {compute, products}) {
    sub->add_option("--params", params_str, "group parameters r,s,t,u")->required();
    sub->add_option("--coeff", coeffs,
                    "coefficient module: Z | Zeta:<s>,<s>,<s> | Zp:<p> | tensor(c1,c2)")
        ->type_size(1);
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", seed, "seed for randomized checks (unused here)");
  }
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_flag("--inject-fault", inject_fault,
                   "flip one differential sign first (negative control)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(seed, inject_fault, format);

    sapphire::GroupParams P = parse_params_arg(params_str);
    if (app.got_subcommand(compute)) {
      if (coeffs.size() > 1)
        throw std::invalid_argument("compute takes at most one --coeff");
      return cmd_compute(P, coeffs.empty() ? "Z" : coeffs[0], format);
    }
    if (coeffs.empty() || coeffs.size() > 2)
      throw std::invalid_argument("products takes one or two --coeff options");
    return cmd_products(P, coeffs[0], coeffs.size() == 2 ? coeffs[1] : coeffs[0], format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
