#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubicsym/forms.hpp"
#include "cubicsym/matrix.hpp"

namespace cubicsym {

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored on input; output is canonical, so parse(serialize(x)) == x and
// serialize(parse(t)) == t for canonical t.
//
//   form <m> <d> <N>
//   <e1> ... <em> | <cyclotomic encoding>        (one per term, grevlex descending)
//
//   matrix <m> <N>
//   <enc> ; <enc> ; ... ; <enc>                  (m rows of m entries)
//
//   group <m> <N> <k>
//   <k matrix blocks>

Form parseForm(std::string_view text);
std::string serializeForm(const Form& f);

CycMatrix parseMatrix(std::string_view text);
std::string serializeMatrix(const CycMatrix& a);

struct GroupFile {
  int m = 0;
  unsigned conductor = 1;
  std::vector<CycMatrix> gens;
};

GroupFile parseGroup(std::string_view text);
std::string serializeGroup(const GroupFile& g);

// Throws InputError when the file cannot be read.
std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

Form loadForm(const std::string& path);
CycMatrix loadMatrix(const std::string& path);
GroupFile loadGroup(const std::string& path);

}  // namespace cubicsym
