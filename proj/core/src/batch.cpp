#include "cubicsym/batch.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "cubicsym/corpus.hpp"
#include "cubicsym/diffrank.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/groups.hpp"
#include "cubicsym/invariants.hpp"
#include "cubicsym/io.hpp"
#include "cubicsym/reps.hpp"
#include "cubicsym/smooth.hpp"

namespace cubicsym {

using nlohmann::json;

namespace {

std::string resolve(const std::string& baseDir, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_absolute() || baseDir.empty()) return p;
  return (std::filesystem::path(baseDir) / path).string();
}

template <class T>
T required(const json& in, const char* key) {
  if (!in.contains(key)) throw InputError(std::string("missing input \"") + key + "\"");
  try {
    return in.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("input \"") + key + "\" has the wrong type");
  }
}

template <class T>
T optional(const json& in, const char* key, T fallback) {
  return in.contains(key) ? required<T>(in, key) : fallback;
}

json oneBased(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

json smoothTask(const json& in, const std::string& base) {
  Form f = loadForm(resolve(base, required<std::string>(in, "form")));
  SmoothOptions so;
  so.budget = optional<size_t>(in, "budget", so.budget);
  so.exactOnly = optional<bool>(in, "exact_only", false);
  auto r = isSmooth(f, so);
  json out{{"status", statusName(r.status)}, {"method", r.method}};
  out["witness"] = r.witness ? json(r.witness->describe()) : json(nullptr);
  return out;
}

json rankTask(const json& in, const std::string& base) {
  Form f = loadForm(resolve(base, required<std::string>(in, "form")));
  return json{{"rank", rankD(f, required<int>(in, "order"))}};
}

MatGroup loadMatGroup(const json& in, const std::string& base) {
  return MatGroup(loadGroup(resolve(base, required<std::string>(in, "group"))).gens);
}

json partitionTask(const json& in, const std::string& base) {
  Form f = loadForm(resolve(base, required<std::string>(in, "form")));
  std::optional<MatGroup> g;
  if (in.contains("group")) {
    g = loadMatGroup(in, base);
    try {
      g->materialize(optional<size_t>(in, "cap", kDefaultClosureCap));
    } catch (const CapExceeded&) {
      g = loadMatGroup(in, base);  // generators only
    }
  }
  auto rep = partitionReport(f, g ? &*g : nullptr);
  json blocks = json::array();
  for (const auto& b : rep.blocks) blocks.push_back(oneBased(b));
  return json{{"blocks", blocks},
              {"residual", oneBased(rep.residual)},
              {"certified_by", certificateName(rep.certifiedBy)},
              {"note", rep.note}};
}

json orderTask(const json& in, const std::string& base) {
  MatGroup g = loadMatGroup(in, base);
  try {
    g.materialize(optional<size_t>(in, "cap", kDefaultClosureCap));
  } catch (const CapExceeded& e) {
    return json{{"status", "EXHAUSTED"}, {"partial", e.partial()}};
  }
  return json{{"order", g.order()}, {"projective", projectiveOrder(g)}};
}

json invarianceTask(const json& in, const std::string& base) {
  Form f = loadForm(resolve(base, required<std::string>(in, "form")));
  GroupFile gf = loadGroup(resolve(base, required<std::string>(in, "group")));
  bool all = true;
  json factors = json::array();
  for (const auto& a : gf.gens) {
    unsigned l = std::lcm(a.conductor(), f.conductor());
    auto lambda = semiInvarianceFactor(a.embedded(l), f.embedded(l));
    all = all && lambda && lambda->isOne();
    factors.push_back(lambda ? json(lambda->pretty()) : json(nullptr));
  }
  return json{{"invariant", all}, {"factors", factors}};
}

json invariantsTask(const json& in, const std::string& base) {
  GroupFile gf = loadGroup(resolve(base, required<std::string>(in, "group")));
  auto sp = invariantForms(gf.gens, required<int>(in, "degree"));
  json basis = json::array();
  json encoded = json::array();
  for (const auto& b : sp.basis) {
    basis.push_back(b.pretty());
    encoded.push_back(serializeForm(b));
  }
  return json{{"dimension", sp.dim()}, {"basis", basis}, {"basis_encoded", encoded}};
}

json symplecticTask(const json& in, const std::string& base) {
  Form f = loadForm(resolve(base, required<std::string>(in, "form")));
  CycMatrix a = loadMatrix(resolve(base, required<std::string>(in, "matrix")));
  auto c = symplecticCheck(a, f);
  return json{{"symplectic", c.symplectic}, {"lambda", c.lambda.pretty()}, {"det", c.det.pretty()}};
}

json repsTask(const json& in, const std::string&) {
  auto orders = required<std::vector<unsigned>>(in, "abelian");
  int m = required<int>(in, "vars");
  int d = required<int>(in, "degree");
  auto spec = AbelianGroupSpec::fromCyclicOrders(orders);
  auto en = enumerateDiagonalReps(spec, m, d);
  json out{{"group", spec.str()}, {"candidates", en.candidates}, {"classes", en.classes.size()}, {"pruned", en.pruned}};
  if (optional<bool>(in, "filter", true)) {
    FilterOptions fo;
    fo.threads = optional<unsigned>(in, "threads", 1);
    auto vs = filterToNdReps(en.classes, m - 2, d, fo);
    size_t acc = 0, rej = 0, und = 0;
    json accepted = json::array();
    json undecided = json::array();
    for (const auto& v : vs) {
      if (v.status == VerdictStatus::Accepted) {
        ++acc;
        accepted.push_back(json{{"class", v.cls.str()},
                                {"method", v.method},
                                {"witness", v.witness->pretty()},
                                {"witness_encoded", serializeForm(*v.witness)}});
      } else if (v.status == VerdictStatus::RejectedNonSmooth) {
        ++rej;
      } else {
        ++und;
        undecided.push_back(v.cls.str());
      }
    }
    out["accepted"] = acc;
    out["rejected"] = rej;
    out["undecided"] = und;
    out["accepted_classes"] = accepted;
    out["undecided_classes"] = undecided;
  }
  return out;
}

json liftTask(const json& in, const std::string& base) {
  GroupFile gf = loadGroup(resolve(base, required<std::string>(in, "group")));
  int d = required<int>(in, "degree");
  size_t cap = optional<size_t>(in, "cap", kDefaultClosureCap);
  auto lifted = coveringLift(gf.gens, d);
  json out;
  try {
    MatGroup orig = MatGroup::closure(gf.gens, cap);
    MatGroup lg = MatGroup::closure(lifted, cap);
    size_t proj = projectiveOrder(orig);
    out = json{{"order", lg.order()}, {"original_projective", proj}, {"covering", lg.order() == proj * d}};
    if (in.contains("form")) {
      Form fh = hat(loadForm(resolve(base, required<std::string>(in, "form"))));
      bool fixes = true;
      for (const auto& a : lifted) {
        unsigned l = std::lcm(a.conductor(), fh.conductor());
        Form fl = fh.embedded(l);
        fixes = fixes && apply(a.embedded(l), fl) == fl;
      }
      out["fixes_hat"] = fixes;
    }
  } catch (const CapExceeded& e) {
    out = json{{"status", "EXHAUSTED"}, {"partial", e.partial()}};
  }
  return out;
}

json exampleTask(const json& in, const std::string& base) {
  std::string dir = in.contains("corpus") ? resolve(base, required<std::string>(in, "corpus")) : defaultCorpusDir();
  VerifyOptions vo;
  vo.smoothBudget = optional<size_t>(in, "budget", vo.smoothBudget);
  vo.closureCap = optional<size_t>(in, "cap", vo.closureCap);
  auto rep = verifyExample(dir, findExample(loadCatalog(dir), required<std::string>(in, "id")), vo);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(json{{"name", c.name}, {"status", checkStatusName(c.status)}, {"detail", c.detail}});
  }
  json out{{"id", rep.id}, {"passed", rep.passed()}, {"checks", checks}};
  if (rep.exhausted()) out["status"] = "EXHAUSTED";
  return out;
}

json runTask(const std::string& task, const json& in, const std::string& base) {
  if (!in.is_object()) throw InputError("task inputs must be a JSON object");
  if (task == "smooth") return smoothTask(in, base);
  if (task == "rank") return rankTask(in, base);
  if (task == "partition") return partitionTask(in, base);
  if (task == "order") return orderTask(in, base);
  if (task == "check-invariance") return invarianceTask(in, base);
  if (task == "invariants") return invariantsTask(in, base);
  if (task == "symplectic") return symplecticTask(in, base);
  if (task == "reps") return repsTask(in, base);
  if (task == "lift") return liftTask(in, base);
  if (task == "example") return exampleTask(in, base);
  throw InputError("unknown task " + task);
}

}  // namespace

std::string runTaskJson(const std::string& task, const std::string& inputsJson, const std::string& baseDir) {
  json in;
  try {
    in = json::parse(inputsJson);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed inputs: ") + e.what());
  }
  return runTask(task, in, baseDir).dump();
}

std::string taskStatusName(TaskStatus s) {
  switch (s) {
    case TaskStatus::Pass:
      return "PASS";
    case TaskStatus::Fail:
      return "FAIL";
    case TaskStatus::Error:
      return "ERROR";
    case TaskStatus::Exhausted:
      return "EXHAUSTED";
    case TaskStatus::Done:
      return "DONE";
  }
  return "?";
}

BatchOutcome runManifestText(const std::string& text, const std::string& baseDir, unsigned threads) {
  BatchOutcome out;
  bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
  if (blank) return out;
  json manifest;
  try {
    manifest = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed manifest: ") + e.what());
  }
  if (manifest.is_object()) manifest = manifest.value("tasks", json::array());
  if (!manifest.is_array()) throw InputError("manifest must be an array of tasks");

  size_t n = manifest.size();
  out.lines.resize(n);
  out.statuses.resize(n);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i; (i = next++) < n;) {
      const json& t = manifest[i];
      json rec{{"index", i}};
      TaskStatus st = TaskStatus::Done;
      try {
        if (!t.is_object()) throw InputError("task must be a JSON object");
        std::string name = t.value("task", "");
        json in = t.value("inputs", json::object());
        rec["task"] = name;
        rec["inputs"] = in;
        json result = runTask(name, in, baseDir);
        rec["result"] = result;
        if (result.value("status", "") == "EXHAUSTED") {
          st = TaskStatus::Exhausted;
        } else if (t.contains("expect")) {
          st = TaskStatus::Pass;
          for (const auto& [k, v] : t.at("expect").items()) {
            if (!result.contains(k) || result.at(k) != v) st = TaskStatus::Fail;
          }
        } else if (name == "example") {
          st = result.at("passed").get<bool>() ? TaskStatus::Pass : TaskStatus::Fail;
        }
      } catch (const std::exception& e) {
        st = TaskStatus::Error;
        rec["error"] = e.what();
      }
      rec["status"] = taskStatusName(st);
      out.lines[i] = rec.dump();
      out.statuses[i] = st;
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  auto any = [&](TaskStatus s) { return std::find(out.statuses.begin(), out.statuses.end(), s) != out.statuses.end(); };
  out.exitCode = any(TaskStatus::Error) ? 2 : any(TaskStatus::Fail) ? 1 : any(TaskStatus::Exhausted) ? 3 : 0;
  return out;
}

BatchOutcome runManifest(const std::string& path, unsigned threads) {
  std::string text = readFile(path);
  return runManifestText(text, std::filesystem::path(path).parent_path().string(), threads);
}

unsigned threadsFromEnv() {
  const char* env = std::getenv("CUBICSYM_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  return (end != env && *end == '\0' && v > 0) ? static_cast<unsigned>(v) : 1;
}

}  // namespace cubicsym
