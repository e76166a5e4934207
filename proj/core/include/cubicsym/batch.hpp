#pragma once

#include <string>
#include <vector>

namespace cubicsym {

// Task names: smooth, rank, partition, order, check-invariance, invariants,
// symplectic, reps, lift, example. Inputs and results are JSON objects; file
// paths in inputs are resolved against baseDir unless absolute.
//
// Returns the result object as JSON text. Throws InputError on unknown tasks,
// missing inputs and unreadable files.
std::string runTaskJson(const std::string& task, const std::string& inputsJson, const std::string& baseDir);

enum class TaskStatus { Pass, Fail, Error, Exhausted, Done };
std::string taskStatusName(TaskStatus s);

struct BatchOutcome {
  // One JSON object per task, in manifest order:
  // {index, task, inputs, result, status[, error]}.
  std::vector<std::string> lines;
  std::vector<TaskStatus> statuses;
  // 0 when every task is decisive and matches its expectation; otherwise 2
  // for any error, else 1 for any mismatch, else 3 for an exhausted budget.
  int exitCode = 0;
};

// The manifest is a JSON array of tasks, or an object with a "tasks" array.
// A task is {"task": name, "inputs": {...}, "expect": {...}}; every key of
// "expect" must equal the same key of the result. An empty file is an empty
// manifest. Tasks run on up to `threads` workers.
BatchOutcome runManifestText(const std::string& text, const std::string& baseDir, unsigned threads = 1);
BatchOutcome runManifest(const std::string& path, unsigned threads = 1);

// CUBICSYM_THREADS if set to a positive integer, else 1.
unsigned threadsFromEnv();

}  // namespace cubicsym
