#include "cubicsym/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <numeric>

#include <json.hpp>

#include "cubicsym/errors.hpp"
#include "cubicsym/groups.hpp"
#include "cubicsym/invariants.hpp"
#include "cubicsym/io.hpp"
#include "cubicsym/smooth.hpp"

#ifndef CUBICSYM_DEFAULT_CORPUS_DIR
#define CUBICSYM_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace cubicsym {

std::string defaultCorpusDir() {
  if (const char* env = std::getenv("CUBICSYM_CORPUS_DIR"); env && *env) return env;
  return CUBICSYM_DEFAULT_CORPUS_DIR;
}

std::vector<ExampleRecord> loadCatalog(const std::string& corpusDir) {
  auto path = (std::filesystem::path(corpusDir) / "examples.json").string();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(readFile(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed catalog " + path + ": " + e.what());
  }
  std::vector<ExampleRecord> out;
  try {
    for (const auto& r : j) {
      ExampleRecord rec;
      rec.id = r.at("id").get<std::string>();
      rec.vars = r.at("vars").get<int>();
      rec.form = r.at("form").get<std::string>();
      if (!r.at("group").is_null()) rec.group = r.at("group").get<std::string>();
      rec.linearOrder = r.at("linear_order").get<size_t>();
      rec.projectiveOrder = r.at("projective_order").get<size_t>();
      if (!r.at("symplectic_order").is_null()) rec.symplecticOrder = r.at("symplectic_order").get<size_t>();
      rec.partial = r.at("partial").get<bool>();
      rec.note = r.value("note", "");
      out.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed catalog record: " + std::string(e.what()));
  }
  return out;
}

ExampleRecord findExample(const std::vector<ExampleRecord>& catalog, const std::string& id) {
  std::string want = id;
  if (!want.empty() && want.back() == 'p') want.back() = '\'';
  for (const auto& r : catalog) {
    if (r.id == want) return r;
  }
  throw InputError("no example with id " + id);
}

std::string checkStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "SKIPPED";
    case CheckStatus::Exhausted:
      return "EXHAUSTED";
  }
  return "?";
}

bool ExampleReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

bool ExampleReport::exhausted() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Exhausted; });
}

std::string ExampleReport::str() const {
  std::string s = id + "\n";
  for (const auto& c : checks) {
    s += "  " + c.name + ": " + checkStatusName(c.status);
    if (!c.detail.empty()) s += " (" + c.detail + ")";
    s += "\n";
  }
  return s;
}

ExampleReport verifyExample(const std::string& corpusDir, const ExampleRecord& rec, const VerifyOptions& opt) {
  namespace fs = std::filesystem;
  ExampleReport rep;
  rep.id = rec.id;
  Form f = loadForm((fs::path(corpusDir) / rec.form).string());

  if (opt.checkSmooth) {
    SmoothOptions so;
    so.budget = opt.smoothBudget;
    auto r = isSmooth(f, so);
    CheckStatus st = r.status == SmoothStatus::Smooth     ? CheckStatus::Pass
                     : r.status == SmoothStatus::Singular ? CheckStatus::Fail
                                                          : CheckStatus::Exhausted;
    rep.checks.push_back({"smooth", st, statusName(r.status) + " via " + r.method});
  } else {
    rep.checks.push_back({"smooth", CheckStatus::Skipped, "disabled"});
  }

  if (!rec.group) {
    std::string why = "no generators shipped";
    rep.checks.push_back({"invariance", CheckStatus::Skipped, why});
    rep.checks.push_back({"order", CheckStatus::Skipped, why + "; expected " + std::to_string(rec.linearOrder)});
    if (rec.symplecticOrder) {
      rep.checks.push_back(
          {"symplectic", CheckStatus::Skipped, why + "; expected " + std::to_string(*rec.symplecticOrder)});
    }
    return rep;
  }

  GroupFile gf = loadGroup((fs::path(corpusDir) / *rec.group).string());
  bool invariant = true;
  for (size_t i = 0; i < gf.gens.size(); ++i) {
    unsigned l = std::lcm(gf.gens[i].conductor(), f.conductor());
    Form fl = f.embedded(l);
    if (apply(gf.gens[i].embedded(l), fl) != fl) invariant = false;
  }
  rep.checks.push_back({"invariance", invariant ? CheckStatus::Pass : CheckStatus::Fail,
                        std::to_string(gf.gens.size()) + " generators"});

  if (rec.partial) {
    std::string why = "partial record: shipped generators cover a subgroup only";
    rep.checks.push_back({"order", CheckStatus::Skipped, why + "; expected " + std::to_string(rec.linearOrder)});
    if (rec.symplecticOrder) {
      rep.checks.push_back(
          {"symplectic", CheckStatus::Skipped, why + "; expected " + std::to_string(*rec.symplecticOrder)});
    }
    return rep;
  }
  if (rec.linearOrder > opt.closureCap) {
    std::string why = "above closure cap " + std::to_string(opt.closureCap);
    rep.checks.push_back({"order", CheckStatus::Skipped, why + "; expected " + std::to_string(rec.linearOrder)});
    if (rec.symplecticOrder) {
      rep.checks.push_back(
          {"symplectic", CheckStatus::Skipped, why + "; expected " + std::to_string(*rec.symplecticOrder)});
    }
    return rep;
  }
  try {
    MatGroup g = MatGroup::closure(gf.gens, opt.closureCap);
    size_t lin = g.order();
    size_t proj = projectiveOrder(g);
    bool ok = lin == rec.linearOrder && proj == rec.projectiveOrder;
    rep.checks.push_back({"order", ok ? CheckStatus::Pass : CheckStatus::Fail,
                          "linear " + std::to_string(lin) + " (expected " + std::to_string(rec.linearOrder) +
                              "), projective " + std::to_string(proj) + " (expected " +
                              std::to_string(rec.projectiveOrder) + ")"});
    if (rec.symplecticOrder) {
      size_t s = symplecticOrder(g, f);
      rep.checks.push_back({"symplectic", s == *rec.symplecticOrder ? CheckStatus::Pass : CheckStatus::Fail,
                            std::to_string(s) + " (expected " + std::to_string(*rec.symplecticOrder) + ")"});
    }
  } catch (const CapExceeded& e) {
    rep.checks.push_back({"order", CheckStatus::Exhausted, e.what()});
  }
  return rep;
}

ExampleReport verifyExample(const std::string& id, const VerifyOptions& opt) {
  std::string dir = defaultCorpusDir();
  return verifyExample(dir, findExample(loadCatalog(dir), id), opt);
}

}  // namespace cubicsym
