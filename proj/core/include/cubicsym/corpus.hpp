#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cubicsym {

struct ExampleRecord {
  std::string id;
  int vars = 0;
  std::string form;                   // path relative to the corpus directory
  std::optional<std::string> group;   // absent when no generators are shipped
  size_t linearOrder = 0;
  size_t projectiveOrder = 0;
  std::optional<size_t> symplecticOrder;
  bool partial = false;
  std::string note;
};

// CUBICSYM_CORPUS_DIR from the environment if set, else the build-time path.
std::string defaultCorpusDir();

// Reads examples.json. Throws InputError on a missing or malformed catalog.
std::vector<ExampleRecord> loadCatalog(const std::string& corpusDir);
// Accepts "X15'" and the file-name spelling "X15p". Throws InputError when absent.
ExampleRecord findExample(const std::vector<ExampleRecord>& catalog, const std::string& id);

enum class CheckStatus { Pass, Fail, Skipped, Exhausted };
std::string checkStatusName(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct ExampleReport {
  std::string id;
  std::vector<CheckResult> checks;

  // No check failed.
  bool passed() const;
  bool exhausted() const;
  std::string str() const;
};

struct VerifyOptions {
  size_t smoothBudget = 1000000;
  size_t closureCap = 300000;
  bool checkSmooth = true;
};

// Smoothness, exact invariance of every shipped generator, closure order
// against the stored linear and projective orders, and the symplectic order
// for fourfolds. Checks that cannot run are reported as Skipped with a reason.
ExampleReport verifyExample(const std::string& corpusDir, const ExampleRecord& rec, const VerifyOptions& opt = {});
ExampleReport verifyExample(const std::string& id, const VerifyOptions& opt = {});

}  // namespace cubicsym
