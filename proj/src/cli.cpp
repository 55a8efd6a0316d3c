#include "altwidth/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "altwidth/constructions.hpp"
#include "altwidth/error.hpp"
#include "altwidth/metrics.hpp"
#include "altwidth/oracle.hpp"
#include "altwidth/permutation.hpp"

namespace altwidth {
namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;   // verification failed / unreachable
constexpr int kUsage = 2;  // malformed input

std::string real12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

const char* reason_name(UnreachableReason reason) {
  switch (reason) {
    case UnreachableReason::parity: return "parity";
    case UnreachableReason::depth_limit: return "depth_limit";
    case UnreachableReason::exhausted: return "exhausted";
  }
  return "?";
}

nlohmann::json bounds_json(const BoundsInterval& b) {
  return {{"lower", b.lower.to_string()},
          {"upper", b.upper.to_string()},
          {"source", b.upper_source == UpperSource::certificate
                         ? "certificate"
                         : "formula"}};
}

std::string bounds_text(const BoundsInterval& b) {
  return "[" + b.lower.to_string() + ", " + b.upper.to_string() + "] (" +
         (b.upper_source == UpperSource::certificate ? "certificate"
                                                     : "formula") +
         ")";
}

struct Args {
  std::string g, h;
  std::vector<std::string> perms;
  std::string file;
  std::string out_path;
  std::uint32_t universe = 0;  // 0: derive from supports
  std::uint32_t max_depth = 12;
  std::uint64_t seed = 0;
  std::uint64_t count = 100;
  std::uint64_t lambda_min = 2;
  std::uint64_t lambda_max = 4096;
  bool json = false;
};

int cmd_lambda(const Args& a, std::ostream& out) {
  const Permutation p = parse_cycles(a.perms.at(0));
  if (a.json) {
    const nlohmann::json doc = {{"perm", format_cycles(p)},
                                {"lambda", word_length(p)}};
    out << doc.dump(2) << "\n";
  } else {
    out << word_length(p) << "\n";
  }
  return kOk;
}

int emit_perm(const Permutation& p, bool json, std::ostream& out) {
  if (json) {
    const nlohmann::json doc = {{"result", format_cycles(p)}};
    out << doc.dump(2) << "\n";
  } else {
    out << format_cycles(p) << "\n";
  }
  return kOk;
}

int cmd_compose(const Args& a, std::ostream& out) {
  Permutation acc = parse_cycles(a.perms.at(0));
  for (std::size_t i = 1; i < a.perms.size(); ++i)
    acc = compose(acc, parse_cycles(a.perms[i]));
  return emit_perm(acc, a.json, out);
}

int cmd_inverse(const Args& a, std::ostream& out) {
  return emit_perm(inverse(parse_cycles(a.perms.at(0))), a.json, out);
}

int cmd_conjugate(const Args& a, std::ostream& out) {
  return emit_perm(conjugate(parse_cycles(a.perms.at(0)),
                             parse_cycles(a.perms.at(1))),
                   a.json, out);
}

int cmd_decompose(const Args& a, std::ostream& out) {
  const Certificate cert =
      decompose(parse_cycles(a.g), parse_cycles(a.h));
  if (a.json) {
    out << certificate_to_json(cert).dump(2) << "\n";
    return kOk;
  }
  const VerificationReport report = verify_certificate(cert);
  out << "target: " << format_cycles(cert.target) << "\n"
      << "base class: " << cert.base_type.to_string() << "\n"
      << "factors: " << cert.factors.size()
      << " (bound " << report.bound.to_string() << ")\n";
  for (const auto& f : cert.factors) out << format_cycles(f) << "\n";
  return kOk;
}

int cmd_verify(const Args& a, std::istream& in, std::ostream& out) {
  std::string text;
  if (a.file.empty()) {
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(a.file);
    if (!f) throw InvalidArgumentError("cannot open " + a.file);
    text.assign(std::istreambuf_iterator<char>(f),
                std::istreambuf_iterator<char>());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
  const Certificate cert = certificate_from_json(doc);
  const VerificationReport report = verify_certificate(cert);
  if (a.json) {
    const nlohmann::json resp = {
        {"product_ok", report.product_ok},
        {"types_ok", report.types_ok},
        {"factor_count", report.factor_count},
        {"bound", report.has_bound ? nlohmann::json(report.bound.to_string())
                                   : nlohmann::json()},
        {"within_bound", report.within_bound},
        {"pass", report.pass}};
    out << resp.dump(2) << "\n";
  } else {
    out << "product: " << (report.product_ok ? "ok" : "MISMATCH") << "\n"
        << "types: " << (report.types_ok ? "ok" : "MISMATCH") << "\n"
        << "factors: " << report.factor_count;
    if (report.has_bound)
      out << " (bound " << report.bound.to_string()
          << (report.within_bound ? ", within" : ", EXCEEDED") << ")";
    out << "\n" << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kOk : kFail;
}

int cmd_oracle(const Args& a, std::ostream& out, std::ostream& err) {
  const Permutation g = parse_cycles(a.g);
  const Permutation h = parse_cycles(a.h);
  UniverseSpec universe =
      a.universe == 0 ? default_universe(g, h) : UniverseSpec{a.universe, 12};
  universe.max_depth = a.max_depth;
  const ExactLambda got = exact_lambda(g, h, universe);
  if (a.json) {
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& w : got.witness) witness.push_back(format_cycles(w));
    const nlohmann::json doc = {
        {"value", got.value ? nlohmann::json(*got.value) : nlohmann::json()},
        {"reason", got.value ? nlohmann::json() : nlohmann::json(reason_name(got.reason))},
        {"universe", {{"n", got.universe.n}, {"max_depth", got.universe.max_depth}}},
        {"stabilized", got.stabilized},
        {"witness", std::move(witness)}};
    out << doc.dump(2) << "\n";
    return got.value ? kOk : kFail;
  }
  if (!got.value) {
    out << "unreachable (" << reason_name(got.reason) << ")\n";
    return kFail;
  }
  out << *got.value << "\n";
  if (!got.stabilized)
    err << "note: value not confirmed stable at n=" << universe.n + 2 << "\n";
  return kOk;
}

int cmd_d_bounds(const Args& a, std::ostream& out) {
  const ClassId g{cycle_type(parse_cycles(a.g))};
  const ClassId h{cycle_type(parse_cycles(a.h))};
  const DBounds bounds = d_bounds(g, h);
  if (a.json) {
    const nlohmann::json doc = {{"class_g", g.to_string()},
                                {"class_h", h.to_string()},
                                {"lambda_g", lambda_class(g)},
                                {"lambda_h", lambda_class(h)},
                                {"g_from_h", bounds_json(bounds.g_from_h)},
                                {"h_from_g", bounds_json(bounds.h_from_g)},
                                {"d_lower", bounds.d_lower},
                                {"d_upper", bounds.d_upper}};
    out << doc.dump(2) << "\n";
  } else {
    out << "class_g: " << g.to_string() << " (lambda " << lambda_class(g)
        << ")\n"
        << "class_h: " << h.to_string() << " (lambda " << lambda_class(h)
        << ")\n"
        << "lambda_[h]([g]) in " << bounds_text(bounds.g_from_h) << "\n"
        << "lambda_[g]([h]) in " << bounds_text(bounds.h_from_g) << "\n"
        << "d_lower: " << real12(bounds.d_lower) << "\n"
        << "d_upper: " << real12(bounds.d_upper) << "\n";
  }
  return kOk;
}

int cmd_experiment(const Args& a, std::ostream& out) {
  ExperimentParams params;
  params.pair_count = a.count;
  params.lambda_min = a.lambda_min;
  params.lambda_max = a.lambda_max;
  params.seed = a.seed;
  const ExperimentResult result = experiment_quasi_isometry(params);
  const std::string csv = experiment_csv(result);
  if (!a.out_path.empty()) {
    std::ofstream f(a.out_path, std::ios::binary);
    if (!f) throw InvalidArgumentError("cannot open " + a.out_path);
    f << csv;
    if (!f) throw InvalidArgumentError("failed writing " + a.out_path);
  }
  if (a.json) {
    out << experiment_json(result);
  } else if (a.out_path.empty()) {
    out << csv;
  } else {
    out << "rows: " << result.pair_count << "  max_gap: "
        << real12(result.max_gap) << "  -> " << a.out_path << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy width toolkit for finite-support alternating groups",
               "alt-width"};
  // --h is a real option below, so the help flag keeps only its long form.
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Args a;

  CLI::App* lambda = app.add_subcommand(
      "lambda", "Word length (minimal transposition count) of a permutation");
  lambda->add_option("perm", a.perms, "cycle notation, e.g. \"(1 2 3)\"")
      ->required()
      ->expected(1);
  lambda->add_flag("--json", a.json, "machine-readable output");

  CLI::App* comp = app.add_subcommand(
      "compose", "Product p1 * p2 * ... (rightmost factor applies first)");
  comp->add_option("perms", a.perms, "two or more permutations")
      ->required()
      ->expected(2, 1000000);
  comp->add_flag("--json", a.json, "machine-readable output");

  CLI::App* inv = app.add_subcommand("inverse", "Inverse permutation");
  inv->add_option("perm", a.perms, "cycle notation")->required()->expected(1);
  inv->add_flag("--json", a.json, "machine-readable output");

  CLI::App* conj = app.add_subcommand(
      "conjugate", "conjugate p c = c * p * c^-1 (relabel p through c)");
  conj->add_option("perms", a.perms, "p then c")->required()->expected(2);
  conj->add_flag("--json", a.json, "machine-readable output");

  CLI::App* dec = app.add_subcommand(
      "decompose",
      "Write even g as a bounded product of conjugates of h (a certificate)");
  dec->add_option("--g", a.g, "target permutation (even)")->required();
  dec->add_option("--h", a.h, "base permutation (nontrivial)")->required();
  dec->add_flag("--json", a.json, "emit the certificate JSON");

  CLI::App* ver = app.add_subcommand(
      "verify", "Check a certificate JSON (from a file or stdin)");
  ver->add_option("file", a.file, "certificate path; omit to read stdin");
  ver->add_flag("--json", a.json, "machine-readable report");

  CLI::App* orc = app.add_subcommand(
      "oracle",
      "Exact shortest-product length within a bounded universe (exhaustive)");
  orc->add_option("--g", a.g, "target permutation")->required();
  orc->add_option("--h", a.h, "base permutation")->required();
  orc->add_option("--universe", a.universe,
                  "points 1..n (default: moved points + 4, capped at 10)");
  orc->add_option("--max-depth", a.max_depth, "search cutoff (default 12)");
  orc->add_flag("--json", a.json, "machine-readable output");

  CLI::App* db = app.add_subcommand(
      "d-bounds", "Two-sided enclosure of the class distance d([g],[h])");
  db->add_option("--g", a.g, "even representative of [g]")->required();
  db->add_option("--h", a.h, "even representative of [h]")->required();
  db->add_flag("--json", a.json, "machine-readable output");

  CLI::App* exp = app.add_subcommand(
      "experiment",
      "Sample class pairs and tabulate d bounds against psi differences");
  exp->add_option("--count", a.count, "number of pairs (default 100)");
  exp->add_option("--lambda-min", a.lambda_min, "minimum word length");
  exp->add_option("--lambda-max", a.lambda_max, "maximum word length");
  exp->add_option("--seed", a.seed, "RNG seed (default 0)");
  exp->add_option("--out", a.out_path, "write the CSV table to this path");
  exp->add_flag("--json", a.json, "emit rows plus summary as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(lambda)) return cmd_lambda(a, out);
    if (app.got_subcommand(comp)) return cmd_compose(a, out);
    if (app.got_subcommand(inv)) return cmd_inverse(a, out);
    if (app.got_subcommand(conj)) return cmd_conjugate(a, out);
    if (app.got_subcommand(dec)) return cmd_decompose(a, out);
    if (app.got_subcommand(ver)) return cmd_verify(a, in, out);
    if (app.got_subcommand(orc)) return cmd_oracle(a, out, err);
    if (app.got_subcommand(db)) return cmd_d_bounds(a, out);
    if (app.got_subcommand(exp)) return cmd_experiment(a, out);
    err << "error: no subcommand\n";
    return kUsage;
  } catch (const ParityObstructionError& e) {
    err << "unreachable: " << e.what() << "\n";
    return kFail;
  } catch (const UnreachableError& e) {
    err << "unreachable: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace altwidth
