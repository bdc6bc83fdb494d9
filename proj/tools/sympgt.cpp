#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympgt/algebra.hpp"
#include "sympgt/branching.hpp"
#include "sympgt/errors.hpp"
#include "sympgt/serialize.hpp"

namespace {

using namespace sympgt;

struct Options {
  std::string lambda_csv;
  bool positive_labels = false;
  std::string generator = "F[1,-1]";
  std::string format = "exact-json";
  std::string out_path;
  long long guard = 20000;
  int jobs = 1;
};

std::vector<Entry> parse_csv(const std::string& text) {
  std::vector<Entry> values;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("could not parse '" + item +
                            "' in --lambda (expected comma-separated integers)");
    }
  }
  if (values.empty()) {
    throw ValidationError("--lambda needs at least one integer");
  }
  return values;
}

HighestWeight weight_from(const Options& o) {
  const auto entries = parse_csv(o.lambda_csv);
  return o.positive_labels ? HighestWeight::from_nonnegative(entries)
                           : HighestWeight::validate(entries);
}

int effective_jobs(const Options& o) {
  if (o.jobs > 0) return o.jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file '" + out_path + "'");
  file << content;
}

void run_enumerate(const Options& o) {
  const auto w = weight_from(o);
  std::ostringstream out;
  for (const auto& p : enumerate_patterns(w, Int(o.guard))) {
    out << p.to_string() << '\n';
  }
  emit(o.out_path, out.str());
}

void run_dim(const Options& o) {
  const auto w = weight_from(o);
  const Int count = count_patterns(w);
  const Int oracle = weyl_dim(w);
  if (count != oracle) {
    throw ConsistencyError("pattern count " + count.str() +
                           " disagrees with the dimension formula " +
                           oracle.str());
  }
  emit(o.out_path, count.str() + "\n");
}

void run_matrix(const Options& o) {
  const auto w = weight_from(o);
  const GeneratorId gen = GeneratorId::parse(o.generator);
  GeneratorId::Kind kind;
  try {
    kind = gen.classify(w.rank());
  } catch (const StructuralError& e) {
    throw ValidationError(e.what());  // user-supplied index out of range
  }
  const SparseOperator op =
      kind == GeneratorId::Kind::General
          ? close_algebra(w, Int(o.guard), effective_jobs(o))
                .operator_for(gen.i, gen.j)
          : build_generator_matrix(w, gen, Int(o.guard), effective_jobs(o));
  emit(o.out_path, o.format == "exact-json" ? to_exact_json(w, gen, op)
                                            : to_matrix_market(w, gen, op));
}

int run_verify(const Options& o) {
  const auto w = weight_from(o);
  const int n = w.rank();
  const int jobs = effective_jobs(o);
  nlohmann::ordered_json report;
  report["schema"] = "sympgt-verify/1";
  report["lambda"] = w.entries();
  bool all_ok = true;

  // Any suite may flag a consistency failure; the remaining suites still
  // run so the report shows everything that is wrong at once.
  const auto suite = [&](const char* name, auto&& body) {
    nlohmann::ordered_json entry;
    try {
      body(entry);
      entry["pass"] = true;
    } catch (const ConsistencyError& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
      all_ok = false;
    }
    report["suites"][name] = entry;
    std::cerr << name << ": "
              << (entry["pass"].get<bool>() ? "ok" : "FAIL") << '\n';
  };

  const ClosedAlgebra alg = close_algebra(w, Int(o.guard), jobs);
  report["dimension"] = alg.dimension();
  report["suites"] = nlohmann::ordered_json::object();

  suite("closure", [&](nlohmann::ordered_json& entry) {
    entry["span_dimension"] = alg.span_dim();
    entry["algebra_dimension"] = n * (2 * n + 1);
    if (alg.span_dim() != static_cast<std::size_t>(n * (2 * n + 1))) {
      throw ConsistencyError("span short of the algebra dimension");
    }
  });

  suite("relations", [&](nlohmann::ordered_json& entry) {
    const RelationReport rel = verify_relations(alg, jobs);
    entry["pairs"] = rel.pairs_checked;
    entry["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : rel.failures) {
      entry["failures"].push_back(
          {GeneratorId{f.left.first, f.left.second}.name(),
           GeneratorId{f.right.first, f.right.second}.name()});
    }
    entry["structure_constants"] = rel.structure_constants_ok;
    if (!rel.ok()) throw ConsistencyError("commutation relations violated");
  });

  suite("casimir", [&](nlohmann::ordered_json& entry) {
    const Rational scalar = casimir(alg).second;
    entry["scalar"] = to_fraction_string(scalar);
    // For the defining-representation weight the module scalar must agree
    // with the independently built 2n-dimensional matrices.
    std::vector<Entry> defining(static_cast<std::size_t>(n), 0);
    defining.back() = -1;
    if (w.entries() == defining) {
      const Rational reference = casimir_defining_scalar(n);
      entry["defining_scalar"] = to_fraction_string(reference);
      if (scalar != reference) {
        throw ConsistencyError("Casimir differs from the defining "
                               "representation");
      }
    }
  });

  suite("highest_vector", [&](nlohmann::ordered_json& entry) {
    entry["index"] = highest_vector(alg, w);
  });

  suite("dimension_oracle", [&](nlohmann::ordered_json& entry) {
    const Int count = count_patterns(w);
    const Int oracle = weyl_dim(w);
    entry["count"] = count.str();
    entry["weyl"] = oracle.str();
    if (count != oracle || Int(alg.dimension()) != count) {
      throw ConsistencyError("dimension oracle mismatch");
    }
  });

  suite("character_oracle", [&](nlohmann::ordered_json& entry) {
    const auto from_patterns = character(w, Int(o.guard));
    const auto from_formula = character_determinantal(w);
    entry["weights"] = from_patterns.size();
    if (from_patterns != from_formula) {
      throw ConsistencyError("character disagrees with the alternating-sum "
                             "formula");
    }
  });

  if (n >= 2) {
    suite("branching", [&](nlohmann::ordered_json& entry) {
      const auto terms = branch(w);
      entry["terms"] = terms.size();
      Int total = 0;
      for (const auto& t : terms) total += t.multiplicity * weyl_dim(t.mu);
      entry["restricted_dimension"] = total.str();
      if (total != weyl_dim(w)) {
        throw ConsistencyError("branch terms do not add up to the dimension");
      }
    });
  }

  report["pass"] = all_ok;
  emit(o.out_path, report.dump(2) + "\n");
  std::cerr << (all_ok ? "all suites passed" : "SUITE FAILURES") << '\n';
  return all_ok ? 0 : 1;
}

void run_branch(const Options& o) {
  const auto w = weight_from(o);
  const auto terms = branch(w);
  std::ostringstream out;
  Int total = 0;
  const auto join = [](const std::vector<Rational>& values) {
    std::string text = "(";
    for (std::size_t t = 0; t < values.size(); ++t) {
      if (t) text += ',';
      text += to_fraction_string(values[t]);
    }
    return text + ")";
  };
  for (const auto& t : terms) {
    const Int dim = weyl_dim(t.mu);
    total += t.multiplicity * dim;
    out << "mu=" << t.mu.to_string() << " c=" << t.multiplicity.str()
        << " alpha=" << join(t.alphas) << " beta=" << join(t.betas)
        << " dim=" << dim.str() << '\n';
  }
  const Int dim_lam = weyl_dim(w);
  if (total != dim_lam) {
    throw ConsistencyError("restricted dimension " + total.str() +
                           " does not match dim " + dim_lam.str());
  }
  out << "identity: sum c(mu)*dim(mu) = " << total.str() << " = dim "
      << w.to_string() << '\n';
  emit(o.out_path, out.str());
}

void run_character(const Options& o) {
  const auto w = weight_from(o);
  std::ostringstream out;
  for (const auto& [weight, mult] : character(w, Int(o.guard))) {
    out << weight_to_string(weight) << ' ' << mult.str() << '\n';
  }
  emit(o.out_path, out.str());
}

void run_casimir(const Options& o) {
  const auto w = weight_from(o);
  const ClosedAlgebra alg = close_algebra(w, Int(o.guard), effective_jobs(o));
  emit(o.out_path, to_fraction_string(casimir(alg).second) + "\n");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--lambda", o.lambda_csv,
                  "Highest weight as comma-separated integers")
      ->required();
  sub->add_flag("--positive-labels", o.positive_labels,
                "Interpret --lambda as non-negative labels a_1 >= ... >= a_n");
  sub->add_option("--guard", o.guard,
                  "Maximum basis size to materialize")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--jobs", o.jobs, "Worker threads; 0 = all cores")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--out", o.out_path, "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weight bases of irreducible symplectic Lie algebra "
               "representations"};
  app.require_subcommand(1);
  Options o;
  int exit_code = 0;

  add_common(app.add_subcommand("enumerate",
                                "List all patterns in canonical order"),
             o);
  add_common(app.add_subcommand("dim", "Basis size, checked against the "
                                       "dimension formula"),
             o);
  auto* matrix = app.add_subcommand("matrix", "Serialize one generator matrix");
  add_common(matrix, o);
  matrix->add_option("--generator", o.generator, "Element name like F[1,-1]")
      ->required();
  matrix->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"exact-json", "matrix-market"}))
      ->capture_default_str();
  add_common(app.add_subcommand("verify", "Run the full verification suite"),
             o);
  add_common(app.add_subcommand("branch",
                                "Restriction to the rank n-1 subalgebra"),
             o);
  add_common(app.add_subcommand("character", "Weight multiplicities"), o);
  add_common(app.add_subcommand("casimir", "Casimir scalar of the module"), o);

  app.get_subcommand("enumerate")->callback([&] { run_enumerate(o); });
  app.get_subcommand("dim")->callback([&] { run_dim(o); });
  app.get_subcommand("matrix")->callback([&] { run_matrix(o); });
  app.get_subcommand("verify")->callback([&] { exit_code = run_verify(o); });
  app.get_subcommand("branch")->callback([&] { run_branch(o); });
  app.get_subcommand("character")->callback([&] { run_character(o); });
  app.get_subcommand("casimir")->callback([&] { run_casimir(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
