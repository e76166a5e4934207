// Command-line front end. Every subcommand builds the same JSON inputs the
// batch runner accepts and prints the library's result; --json prints it raw.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicsym/batch.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/io.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kExhausted = 3 };

json run(const std::string& task, const json& inputs) {
  return json::parse(cubicsym::runTaskJson(task, inputs.dump(), ""));
}

std::string blocksString(const json& blocks) {
  std::string s;
  for (const auto& b : blocks) {
    s += "{";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::string("x") + std::to_string(b[i].get<int>());
    s += "}";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups of smooth cubic hypersurfaces: exact tools"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "Print the raw JSON result");

  std::string form, group, matrix, manifest, exampleId, abelian, witnessDir, corpus;
  int order = 1, degree = 3, vars = 7;
  size_t budget = 1000000, cap = 300000;
  bool exactOnly = false, filter = false;

  auto* smooth = app.add_subcommand("smooth", "Decide smoothness of a form");
  smooth->add_option("--form", form, "Form file")->required();
  smooth->add_option("--budget", budget, "Groebner reduction budget");
  smooth->add_flag("--exact-only", exactOnly, "Skip the modular certificate");

  auto* rank = app.add_subcommand("rank", "Rank of the order-i partial derivative matrix");
  rank->add_option("--form", form, "Form file")->required();
  rank->add_option("--order", order, "Derivative order")->required();

  auto* partition = app.add_subcommand("partition", "Partition report from support or group eigenvalues");
  partition->add_option("--form", form, "Form file")->required();
  partition->add_option("--group", group, "Group file");

  auto* orderCmd = app.add_subcommand("order", "Group order by closure");
  orderCmd->add_option("--group", group, "Group file")->required();
  orderCmd->add_option("--cap", cap, "Closure cap");

  auto* inv = app.add_subcommand("check-invariance", "Check that every generator fixes the form");
  inv->add_option("--group", group, "Group file")->required();
  inv->add_option("--form", form, "Form file")->required();

  auto* invariants = app.add_subcommand("invariants", "Basis of invariant forms of a degree");
  invariants->add_option("--group", group, "Group file")->required();
  invariants->add_option("--degree", degree, "Degree")->required();

  auto* symp = app.add_subcommand("symplectic", "Symplectic test det(A) = lambda^2");
  symp->add_option("--matrix", matrix, "Matrix file")->required();
  symp->add_option("--form", form, "Form file")->required();

  auto* reps = app.add_subcommand("reps", "Diagonal representations of an abelian group up to d-equivalence");
  reps->add_option("--abelian", abelian, "Cyclic orders, comma separated (e.g. 9,5)")->required();
  reps->add_option("--vars", vars, "Number of variables m");
  reps->add_option("--degree", degree, "Degree d");
  reps->add_flag("--filter", filter, "Decide which classes preserve a smooth form");
  reps->add_option("--witness-dir", witnessDir, "Write accepted witnesses as form files here");

  auto* lift = app.add_subcommand("lift", "Covering lift diag(A,1) plus diag(xi_d I, 1)");
  lift->add_option("--group", group, "Group file")->required();
  lift->add_option("--degree", degree, "Degree d");
  lift->add_option("--form", form, "Form file; checks that the lift fixes F + x_{m+1}^d");
  lift->add_option("--cap", cap, "Closure cap");

  auto* example = app.add_subcommand("example", "Shipped examples");
  auto* verify = example->add_subcommand("verify", "Verify one example against its stored orders");
  verify->add_option("id", exampleId, "Example id, e.g. X20 or X15'")->required();
  verify->add_option("--corpus", corpus, "Corpus directory");
  verify->add_option("--cap", cap, "Closure cap");
  example->require_subcommand(1);

  auto* runCmd = app.add_subcommand("run", "Run a batch manifest; prints JSON lines");
  runCmd->add_option("manifest", manifest, "Manifest file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (runCmd->parsed()) {
      auto out = cubicsym::runManifest(manifest, cubicsym::threadsFromEnv());
      for (const auto& line : out.lines) std::cout << line << "\n";
      return out.exitCode;
    }

    std::string task;
    json in;
    if (smooth->parsed()) {
      task = "smooth";
      in = {{"form", form}, {"budget", budget}, {"exact_only", exactOnly}};
    } else if (rank->parsed()) {
      task = "rank";
      in = {{"form", form}, {"order", order}};
    } else if (partition->parsed()) {
      task = "partition";
      in = {{"form", form}};
      if (!group.empty()) in["group"] = group;
    } else if (orderCmd->parsed()) {
      task = "order";
      in = {{"group", group}, {"cap", cap}};
    } else if (inv->parsed()) {
      task = "check-invariance";
      in = {{"group", group}, {"form", form}};
    } else if (invariants->parsed()) {
      task = "invariants";
      in = {{"group", group}, {"degree", degree}};
    } else if (symp->parsed()) {
      task = "symplectic";
      in = {{"matrix", matrix}, {"form", form}};
    } else if (reps->parsed()) {
      task = "reps";
      std::vector<unsigned> orders;
      for (const auto& part : CLI::detail::split(abelian, ',')) {
        try {
          orders.push_back(static_cast<unsigned>(std::stoul(part)));
        } catch (const std::exception&) {
          throw cubicsym::InputError("--abelian expects comma-separated positive integers");
        }
      }
      in = {{"abelian", orders}, {"vars", vars}, {"degree", degree}, {"filter", filter},
            {"threads", cubicsym::threadsFromEnv()}};
    } else if (lift->parsed()) {
      task = "lift";
      in = {{"group", group}, {"degree", degree}, {"cap", cap}};
      if (!form.empty()) in["form"] = form;
    } else if (verify->parsed()) {
      task = "example";
      in = {{"id", exampleId}, {"cap", cap}};
      if (!corpus.empty()) in["corpus"] = corpus;
    }

    json r = run(task, in);
    bool exhausted = r.value("status", "") == "EXHAUSTED";
    if (asJson) {
      std::cout << r.dump() << "\n";
    } else if (task == "smooth") {
      std::cout << r["status"].get<std::string>() << " (" << r["method"].get<std::string>() << ")\n";
      if (!r["witness"].is_null()) std::cout << "witness: " << r["witness"].get<std::string>() << "\n";
    } else if (task == "rank") {
      std::cout << r["rank"].get<int>() << "\n";
    } else if (task == "partition") {
      std::cout << blocksString(r["blocks"]) << " residual=" << blocksString(json::array({r["residual"]}))
                << " certifiedBy=" << r["certified_by"].get<std::string>();
      if (!r["note"].get<std::string>().empty()) std::cout << " (" << r["note"].get<std::string>() << ")";
      std::cout << "\n";
    } else if (task == "order") {
      if (exhausted) {
        std::cout << "EXHAUSTED after " << r["partial"] << " elements\n";
      } else {
        std::cout << "order " << r["order"] << " projective " << r["projective"] << "\n";
      }
    } else if (task == "check-invariance") {
      std::cout << (r["invariant"].get<bool>() ? "YES" : "NO") << "\n";
      for (size_t i = 0; i < r["factors"].size(); ++i) {
        const auto& f = r["factors"][i];
        std::cout << "  generator " << i + 1 << ": "
                  << (f.is_null() ? std::string("not semi-invariant") : "lambda = " + f.get<std::string>()) << "\n";
      }
      return r["invariant"].get<bool>() ? kOk : kMismatch;
    } else if (task == "invariants") {
      std::cout << "dimension " << r["dimension"] << "\n";
      for (const auto& b : r["basis_encoded"]) std::cout << b.get<std::string>();
    } else if (task == "symplectic") {
      std::cout << (r["symplectic"].get<bool>() ? "YES" : "NO") << " (lambda = " << r["lambda"].get<std::string>()
                << ", det = " << r["det"].get<std::string>() << ")\n";
    } else if (task == "reps") {
      std::cout << r["group"].get<std::string>() << ": " << r["classes"] << " classes"
                << (r["pruned"].get<bool>() ? " (column sets closed under chi -> -(d-1)chi)" : "") << "\n";
      if (filter) {
        std::cout << "accepted " << r["accepted"] << ", rejected " << r["rejected"] << ", undecided "
                  << r["undecided"] << "\n";
        int k = 0;
        for (const auto& a : r["accepted_classes"]) {
          std::cout << a["class"].get<std::string>() << " ACCEPTED";
          if (!witnessDir.empty()) {
            std::filesystem::create_directories(witnessDir);
            auto path = (std::filesystem::path(witnessDir) / ("witness_" + std::to_string(++k) + ".form")).string();
            cubicsym::writeFile(path, a["witness_encoded"].get<std::string>());
            std::cout << " " << path;
          } else {
            std::cout << " " << a["witness"].get<std::string>();
          }
          std::cout << "\n";
        }
        for (const auto& u : r["undecided_classes"]) std::cout << u.get<std::string>() << " UNDECIDED\n";
      }
    } else if (task == "lift") {
      if (exhausted) {
        std::cout << "EXHAUSTED after " << r["partial"] << " elements\n";
      } else {
        std::cout << "lifted order " << r["order"] << " = " << degree << " x " << r["original_projective"]
                  << (r["covering"].get<bool>() ? "" : " (MISMATCH)") << "\n";
        if (r.contains("fixes_hat")) std::cout << "fixes hat(F): " << (r["fixes_hat"].get<bool>() ? "YES" : "NO") << "\n";
      }
    } else if (task == "example") {
      std::cout << r["id"].get<std::string>() << "\n";
      for (const auto& c : r["checks"]) {
        std::cout << "  " << c["name"].get<std::string>() << ": " << c["status"].get<std::string>();
        if (!c["detail"].get<std::string>().empty()) std::cout << " (" << c["detail"].get<std::string>() << ")";
        std::cout << "\n";
      }
    }
    if (exhausted) return kExhausted;
    if (task == "example" && !r["passed"].get<bool>()) return kMismatch;
    return kOk;
  } catch (const cubicsym::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const cubicsym::CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExhausted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
