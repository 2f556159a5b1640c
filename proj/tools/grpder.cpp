// grpder: compute and verify the derivation algebra of F V_8n.
//
// Subcommands:
//   dims      print a dimension table over a grid of (n, characteristic)
//   verify    run the full per-case verification and emit a JSON report
//   basis     emit a basis (full space, inner, or an anti-centralizer) as JSON
//   classify  decide whether a derivation given by generator images is inner
//
// Exit codes: 0 all checks pass, 1 verification mismatch, 2 usage/parse error.

#include "grpder/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace grpder;

constexpr int kDefaultMaxN = 12;

int max_n_cap() {
  const char* env = std::getenv("GRPDER_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::string(env).size() || cap < 1)
      throw std::invalid_argument("");
    return cap;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("GRPDER_MAX_N is not a positive integer: ") + env);
  }
}

void check_n(int n) {
  const int cap = max_n_cap();
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > cap)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds GRPDER_MAX_N = " +
                                std::to_string(cap));
}

std::vector<std::int64_t> parse_int_list(const std::string& csv, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + " list entry: " + tok);
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

int cmd_dims(const std::string& n_csv, const std::string& char_csv) {
  const auto ns = parse_int_list(n_csv, "n");
  const auto chars = parse_int_list(char_csv, "characteristic");
  for (const auto n : ns) check_n(static_cast<int>(n));
  std::vector<FieldSpec> fields;
  for (const auto c : chars) fields.push_back(FieldSpec::of_characteristic(c));

  std::printf("%4s %6s %8s %12s %10s %10s  %s\n", "n", "char", "dim_der", "closed_form",
              "dim_inner", "dim_outer", "match");
  bool all_match = true;
  for (const auto n : ns) {
    const GroupParams p(static_cast<int>(n));
    for (const FieldSpec& f : fields) {
      const std::size_t der = derivation_space(p, f).dim();
      const std::size_t inner = inner_span(p, f).dim();
      const std::size_t closed = expected_derivation_dim(p, f);
      const bool match = der == closed && inner == expected_inner_dim(p);
      all_match = all_match && match;
      std::printf("%4d %6lld %8zu %12zu %10zu %10zu  %s\n", p.n,
                  static_cast<long long>(f.characteristic()), der, closed, inner,
                  der - inner, match ? "yes" : "no");
    }
  }
  return all_match ? 0 : 1;
}

int cmd_verify(int n_max, const std::string& char_csv, const std::string& out_path) {
  check_n(n_max);
  const auto chars = parse_int_list(char_csv, "characteristic");
  for (const auto c : chars) FieldSpec::of_characteristic(c);  // validate early
  std::vector<CaseSpec> specs;
  for (int n = 1; n <= n_max; ++n)
    for (const auto c : chars) specs.push_back(CaseSpec{n, c});

  const VerificationReport report = run_grid(specs);
  const std::string text = report_to_string(report);
  write_output(text, out_path);
  if (!out_path.empty()) {
    for (const CaseResult& r : report.cases)
      std::printf("case n=%d char=%lld: %s\n", r.spec.n,
                  static_cast<long long>(r.spec.characteristic),
                  r.pass ? "pass" : "FAIL");
    std::printf("%zu cases, %s; report written to %s\n", report.cases.size(),
                report.pass ? "all pass" : "FAILURES PRESENT", out_path.c_str());
  }
  return report.pass ? 0 : 1;
}

int cmd_basis(int n, std::int64_t characteristic, const std::string& which,
              const std::string& out_path) {
  check_n(n);
  const GroupParams p(n);
  const FieldSpec f = FieldSpec::of_characteristic(characteristic);
  Json out = Json::array();
  if (which == "full") {
    for (const DerivationPair& d : derivation_space(p, f).basis_pairs())
      out.push_back(pair_to_json(d));
  } else if (which == "inner") {
    for (const DerivationPair& d : inner_basis(p, f)) out.push_back(pair_to_json(d));
  } else if (which.rfind("anti_centralizer:", 0) == 0) {
    const GroupElement g = element_from_text(which.substr(17), p);
    const Subspace s = anti_centralizer(AlgebraElement::unit(p, f, g));
    for (std::size_t r = 0; r < s.dim(); ++r)
      out.push_back(algebra_to_json(AlgebraElement::from_vector(p, f, s.basis().row(r))));
  } else {
    throw std::invalid_argument(
        "--which must be full, inner, or anti_centralizer:<element>");
  }
  write_output(out.dump(2) + "\n", out_path);
  return 0;
}

int cmd_classify(int n, std::int64_t characteristic, const std::string& in_path) {
  check_n(n);
  const GroupParams p(n);
  const FieldSpec f = FieldSpec::of_characteristic(characteristic);
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + in_path);
  Json j;
  in >> j;
  const GeneratorImages images = images_from_json(j);
  if (images.params() != p || !(images.field() == f))
    throw std::invalid_argument("derivation pair is over a different n or characteristic");

  const auto obs = relator_obstructions(images);
  std::vector<const char*> failing;
  for (std::size_t t = 0; t < obs.size(); ++t)
    if (!obs[t].is_zero()) failing.push_back(kRelatorNames[t]);
  if (!failing.empty()) {
    std::printf("NotADerivation\n");
    for (const char* name : failing) std::printf("nonzero obstruction: %s\n", name);
    return 0;
  }
  const DerivationPair d{images};
  if (classify(d) == Classification::Inner) {
    std::printf("Inner\n");
    if (const auto beta = inner_witness(d))
      std::printf("witness: beta = %s\n", beta->str().c_str());
    return 0;
  }
  std::printf("Outer\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derivation algebra of the group algebra F V_8n"};
  app.require_subcommand(1);

  std::string n_csv, char_csv = "0,3,5", out_path, in_path, which = "full";
  int n = 1, n_max = 4;
  std::int64_t characteristic = 0;

  CLI::App* dims = app.add_subcommand("dims", "print a dimension table");
  dims->add_option("--n-list", n_csv, "comma-separated n values")->required();
  std::string dims_chars;
  dims->add_option("--char-list", dims_chars, "comma-separated characteristics")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the verification grid");
  verify->add_option("--n-max", n_max, "verify n = 1..n-max (default 4)");
  verify->add_option("--chars", char_csv, "comma-separated characteristics (default 0,3,5)");
  verify->add_option("--out", out_path, "write the JSON report here (default stdout)");

  CLI::App* basis = app.add_subcommand("basis", "emit a basis as JSON");
  basis->add_option("--n", n, "group parameter n")->required();
  basis->add_option("--char", characteristic, "field characteristic")->required();
  basis->add_option("--which", which, "full | inner | anti_centralizer:<element>");
  basis->add_option("--out", out_path, "write JSON here (default stdout)");

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a derivation pair");
  classify_cmd->add_option("--n", n, "group parameter n")->required();
  classify_cmd->add_option("--char", characteristic, "field characteristic")->required();
  classify_cmd->add_option("--in", in_path, "JSON file holding the pair")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dims->parsed()) return cmd_dims(n_csv, dims_chars);
    if (verify->parsed()) return cmd_verify(n_max, char_csv, out_path);
    if (basis->parsed()) return cmd_basis(n, characteristic, which, out_path);
    return cmd_classify(n, characteristic, in_path);
  } catch (const CharTwoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
