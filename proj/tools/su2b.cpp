// Command-line front end: parse presentation files, run the bundle and
// classification computations, emit text or JSON reports.
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 resource limit.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "su2b/su2b.hpp"

namespace {

using namespace su2b;
using nlohmann::ordered_json;

int g_threads = 1;  // accepted cap; every desk-scale search runs on one thread

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

ordered_json stable_json(const ManifoldPresentation& m) {
  ordered_json arr = ordered_json::array();
  for (const R24& v : m.stable()) arr.push_back(v.value());
  return arr;
}

std::string total_space_name(int rank, Div24 lambda_s, int eps_s) {
  if (lambda_s.divisor() == 24 && eps_s == 0) {
    if (rank == 1) return "S4 x S7";
    return "#^" + std::to_string(rank) + " (S4 x S7)";
  }
  return "rank " + std::to_string(rank) + " total space with lambda_s = " +
         std::to_string(lambda_s.display()) + ", eps_s = " + std::to_string(eps_s);
}

int cmd_invariants(const std::string& file, bool json) {
  ManifoldPresentation m = manifold_from_file(file);
  const Parity par = parity(m);
  const Div24 sig = sigma(m);
  if (json) {
    ordered_json doc;
    doc["k"] = m.k();
    doc["parity"] = par == Parity::Odd ? "odd" : "even";
    doc["sigma"] = sig.divisor();
    doc["stable"] = stable_json(m);
    doc["stably_trivial"] = is_stably_trivial(m);
    emit(doc);
  } else {
    std::cout << "k = " << m.k() << "\n";
    std::cout << "parity = " << (par == Parity::Odd ? "odd" : "even") << "\n";
    std::cout << "sigma = " << sig.divisor() << "\n";
    std::cout << "stable = " << detail::vec_str([&] {
      std::vector<i64> v;
      for (const R24& x : m.stable()) v.push_back(x.value());
      return v;
    }()) << "\n";
    std::cout << "stably trivial = " << (is_stably_trivial(m) ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_bundles(const std::string& file, bool enumerate, bool json) {
  ManifoldPresentation m = manifold_from_file(file);
  SearchOptions opts;
  if (enumerate) {
    auto residues = enumerate_admissible_residues(m, opts);
    if (json) {
      ordered_json doc;
      doc["exists"] = !residues.empty();
      doc["count"] = residues.size();
      ordered_json arr = ordered_json::array();
      for (const auto& r : residues) arr.push_back(r);
      doc["residues"] = std::move(arr);
      emit(doc);
    } else {
      if (residues.empty()) {
        std::cout << "no admissible class\n";
      } else {
        std::cout << residues.size() << " admissible residue classes mod 24:\n";
        for (const auto& r : residues) std::cout << "  " << detail::vec_str(r) << "\n";
      }
    }
    return 0;
  }
  const bool exists = exists_bundle(m, opts);
  if (json) {
    ordered_json doc;
    doc["exists"] = exists;
    emit(doc);
  } else {
    std::cout << (exists ? "admissible class exists" : "no admissible class") << "\n";
  }
  return 0;
}

int cmd_lambda(const std::string& file, const std::vector<i64>& psi, bool json) {
  ManifoldPresentation m = manifold_from_file(file);
  if (int(psi.size()) != m.k())
    throw InputError("psi length " + std::to_string(psi.size()) + " does not match k = " +
                     std::to_string(m.k()));
  if (!is_admissible(m, psi)) throw InputError("psi is not an admissible class");
  const Div24 lam = lambda_of(m, psi);
  const int eps = epsilon_of(m, psi).value_or(0);
  const int rank = m.k() - 1;
  if (json) {
    ordered_json doc;
    doc["psi"] = psi;
    doc["lambda"] = lam.display();
    doc["eps_s"] = eps;
    doc["total_space"]["rank"] = rank;
    doc["total_space"]["name"] = total_space_name(rank, lam, eps);
    emit(doc);
  } else {
    std::cout << "lambda = " << lam.display() << "; E = " << total_space_name(rank, lam, eps)
              << "\n";
  }
  return 0;
}

int cmd_achievable(const std::string& file, int lift_radius, i64 budget, bool json) {
  ManifoldPresentation m = manifold_from_file(file);
  SearchOptions opts;
  opts.lift_radius = lift_radius;
  if (budget > 0) opts.budget = budget;
  AchievableReport rep = achievable_lambdas(m, opts);
  if (json) {
    ordered_json doc;
    doc["sigma"] = sigma(m).divisor();
    doc["lambdas"] = detail::set_json(rep.lambdas);
    doc["classes_visited"] = rep.classes_visited;
    doc["lambdas_computed"] = rep.lambdas_computed;
    doc["early_exit"] = rep.early_exit;
    doc["budget_exhausted"] = rep.budget_exhausted;
    doc["box_insufficient"] = rep.box_insufficient;
    emit(doc);
  } else {
    std::cout << "achievable lambda = " << detail::set_str(rep.lambdas) << "\n";
    std::cout << "sigma = " << sigma(m).divisor() << ", classes visited = "
              << rep.classes_visited << (rep.early_exit ? ", early exit" : "") << "\n";
    if (rep.budget_exhausted) std::cout << "warning: budget exhausted, set may be partial\n";
    if (rep.box_insufficient)
      std::cout << "warning: lift box insufficient, set may be partial\n";
  }
  return 0;
}

ordered_json normal_form_json(const ENormalForm& nf) {
  ordered_json doc;
  doc["rank"] = nf.rank;
  doc["lambda_s"] = nf.lambda_s.display();
  doc["eps_hat"] = nf.eps_hat;
  doc["tail"]["lambda"] = nf.tail.lambda.value();
  doc["tail"]["s"] = nf.tail.epsilon.value();
  doc["tail"]["r"] = nf.tail.delta.value();
  return doc;
}

std::string normal_form_str(const ENormalForm& nf) {
  std::ostringstream os;
  const bool trivial = nf.lambda_s.divisor() == 24 && nf.eps_hat == 0 &&
                       nf.tail.lambda.value() == 0 && nf.tail.epsilon.value() == 0 &&
                       nf.tail.delta.value() == 0;
  if (trivial) {
    os << (nf.rank == 1 ? "S4 x S7" : "#^" + std::to_string(nf.rank) + " (S4 x S7)");
    return os.str();
  }
  if (nf.rank == 1) {
    os << "E(" << nf.tail.lambda.value() << "," << nf.tail.epsilon.value() << ","
       << nf.tail.delta.value() << ")";
    return os.str();
  }
  if (nf.rank > 2) os << "#^" << (nf.rank - 2) << " (S4 x S7) # ";
  os << "E(0," << nf.eps_hat << ",0) # E(" << nf.tail.lambda.value() << ","
     << nf.tail.epsilon.value() << "," << nf.tail.delta.value() << ")";
  return os.str();
}

int cmd_classify_e(const std::string& file, bool json) {
  EPresentation e = e_from_file(file);
  ENormalForm nf = normal_form(e);
  StableInvariants st = stable_invariants(e);
  if (json) {
    ordered_json doc;
    doc["normal_form"] = normal_form_json(nf);
    doc["name"] = normal_form_str(nf);
    doc["stable"]["lambda_s"] = st.lambda_s.display();
    doc["stable"]["eps_s"] = st.eps_s;
    emit(doc);
  } else {
    std::cout << "normal form: " << normal_form_str(nf) << "\n";
    std::cout << "rank = " << nf.rank << ", lambda_s = " << st.lambda_s.display()
              << ", eps_s = " << st.eps_s << "\n";
  }
  return 0;
}

int cmd_equal_e(const std::string& file1, const std::string& file2, bool json) {
  EPresentation a = e_from_file(file1);
  EPresentation b = e_from_file(file2);
  const bool eq = homotopy_equal(a, b);
  if (json) {
    ordered_json doc;
    doc["equal"] = eq;
    doc["first"] = normal_form_json(normal_form(a));
    doc["second"] = normal_form_json(normal_form(b));
    emit(doc);
  } else {
    std::cout << (eq ? "homotopy equivalent" : "not homotopy equivalent") << "\n";
  }
  return eq ? 0 : 1;
}

int cmd_table1(bool json) {
  const auto rows = table1();
  if (json) {
    ordered_json arr = ordered_json::array();
    size_t total = 0;
    for (const auto& [lam, classes] : rows) {
      ordered_json row;
      row["lambda"] = lam;
      ordered_json cs = ordered_json::array();
      for (const RankOneClass& c : classes)
        cs.push_back({c.epsilon.value(), c.delta.value()});
      row["classes"] = std::move(cs);
      row["count"] = classes.size();
      total += classes.size();
      arr.push_back(std::move(row));
    }
    ordered_json doc;
    doc["rows"] = std::move(arr);
    doc["total"] = total;
    emit(doc);
  } else {
    for (const auto& [lam, classes] : rows) {
      std::cout << "lambda = " << (lam < 10 ? " " : "") << lam << ": ";
      for (const RankOneClass& c : classes)
        std::cout << "(" << c.epsilon.value() << "," << c.delta.value() << ") ";
      std::cout << "[" << classes.size() << "]\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int samples, i64 budget,
               bool json) {
  SearchOptions opts;
  if (budget > 0) opts.budget = budget;
  std::vector<VerificationReport> reports;
  if (suite == "A") {
    reports = verify_theorem_A(samples > 0 ? samples : 100, seed);
  } else if (suite == "B") {
    reports = verify_theorem_B(samples > 0 ? samples : 50, seed);
  } else if (suite == "D") {
    // One odd rank-7 instance with sigma = 1 (the full achievable sweep) and
    // two even rank-6 instances with sigma = 2, one on each side of (H4).
    ManifoldPresentation odd7(IntMatrix::identity(7), std::vector<i64>(7, 0));
    ManifoldPresentation even_h4(detail::block_form(3, {}), {1, 0, 0, 0, 0, 0});
    ManifoldPresentation even_noh4(detail::block_form(3, {}), {1, 11, 0, 0, 0, 0});
    int idx = 0;
    for (const ManifoldPresentation* m : {&odd7, &even_h4, &even_noh4}) {
      auto part = verify_theorem_D(*m, opts);
      for (auto& r : part) r.id = "D." + std::to_string(idx) + r.id.substr(1);
      reports.insert(reports.end(), part.begin(), part.end());
      ++idx;
    }
  } else if (suite == "rank2") {
    reports = verify_rank2_example();
  } else if (suite == "sigma") {
    ManifoldPresentation odd5(IntMatrix::identity(5), std::vector<i64>(5, 0));
    ManifoldPresentation odd7(IntMatrix::identity(7), std::vector<i64>(7, 0));
    int idx = 0;
    for (const ManifoldPresentation* m : {&odd5, &odd7}) {
      auto part = verify_sigma_achievability(*m, opts);
      for (auto& r : part) r.id = "S." + std::to_string(idx) + r.id.substr(1);
      reports.insert(reports.end(), part.begin(), part.end());
      ++idx;
    }
  } else {
    throw InputError("unknown suite \"" + suite + "\" (expected A, B, D, rank2, or sigma)");
  }
  if (json)
    emit(render_json(reports));
  else
    std::cout << render_text(reports);
  for (const auto& r : reports)
    if (r.status == VerifyStatus::Fail) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic SU(2)-bundle existence, invariants, and total-space "
               "classification over rank-k presentations"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text")->configurable(false);
  app.add_option("--threads", g_threads, "worker thread cap (searches currently use one)")
      ->envname("SU2B_THREADS")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string file, file2, suite;
  std::vector<i64> psi;
  int lift_radius = 24;
  i64 budget = 0;
  std::uint64_t seed = 1;
  int samples = 0;

  auto* inv = app.add_subcommand("invariants", "k, parity, sigma, stable vector");
  inv->add_option("file", file, "presentation JSON")->required();

  auto* bun = app.add_subcommand("bundles", "bundle existence / admissible residues");
  bun->add_option("file", file, "presentation JSON")->required();
  bool enumerate = false, exists_only = false;
  bun->add_flag("--enumerate", enumerate, "list admissible residue classes mod 24");
  bun->add_flag("--exists", exists_only, "existence decision only (default)");

  auto* lam = app.add_subcommand("lambda", "lambda and total space of a class");
  lam->add_option("file", file, "presentation JSON")->required();
  lam->add_option("--psi", psi, "comma-separated class coefficients")
      ->required()
      ->delimiter(',');

  auto* ach = app.add_subcommand("achievable", "achievable lambda values");
  ach->add_option("file", file, "presentation JSON")->required();
  ach->add_option("--lift-radius", lift_radius, "primitive lift search radius")
      ->check(CLI::PositiveNumber);
  ach->add_option("--budget", budget, "cap on visited residue classes");

  auto* cls = app.add_subcommand("classify-e", "normal form of a total-space presentation");
  cls->add_option("file", file, "e-presentation JSON")->required();

  auto* eq = app.add_subcommand("equal-e", "homotopy equivalence of two presentations");
  eq->add_option("file1", file, "e-presentation JSON")->required();
  eq->add_option("file2", file2, "e-presentation JSON")->required();

  app.add_subcommand("table1", "rank-one classification table");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "A, B, D, rank2, or sigma")->required();
  ver->add_option("--seed", seed, "suite seed");
  ver->add_option("--samples", samples, "random instance count");
  ver->add_option("--budget", budget, "cap on visited residue classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (inv->parsed()) return cmd_invariants(file, json);
    if (bun->parsed()) return cmd_bundles(file, enumerate, json);
    if (lam->parsed()) return cmd_lambda(file, psi, json);
    if (ach->parsed()) return cmd_achievable(file, lift_radius, budget, json);
    if (cls->parsed()) return cmd_classify_e(file, json);
    if (eq->parsed()) return cmd_equal_e(file, file2, json);
    if (app.get_subcommand("table1")->parsed()) return cmd_table1(json);
    if (ver->parsed()) return cmd_verify(suite, seed, samples, budget, json);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
