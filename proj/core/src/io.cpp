#include "cubicsym/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cubicsym/errors.hpp"

namespace cubicsym {

namespace {

std::vector<std::string> contentLines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t p = line.find_first_not_of(" \t");
    if (p == std::string::npos || line[p] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> w;
  std::string t;
  while (in >> t) w.push_back(t);
  return w;
}

long long parseSmall(const std::string& s, long long lo, long long hi, const char* what) {
  Int v = Int::parse(s);
  if (!v.isSmall() || v.small() < lo || v.small() > hi) {
    throw InputError(std::string(what) + " out of range: " + s);
  }
  return v.small();
}

CycNum parseEntry(const std::string& s, unsigned n) {
  CycNum c = CycNum::decode(s);
  if (c.conductor() != n) {
    throw InputError("entry conductor " + std::to_string(c.conductor()) + " differs from header conductor " +
                     std::to_string(n));
  }
  return c;
}

CycMatrix parseMatrixLines(const std::vector<std::string>& lines, size_t& pos, int expectM, unsigned expectN) {
  if (pos >= lines.size()) throw InputError("missing matrix header");
  auto hdr = words(lines[pos]);
  if (hdr.size() != 3 || hdr[0] != "matrix") throw InputError("expected 'matrix <m> <N>', got '" + lines[pos] + "'");
  int m = static_cast<int>(parseSmall(hdr[1], 1, kMaxVars, "matrix dimension"));
  unsigned n = static_cast<unsigned>(parseSmall(hdr[2], 1, 100000, "conductor"));
  if ((expectM && m != expectM) || (expectN && n != expectN)) {
    throw InputError("matrix header '" + lines[pos] + "' does not match group header");
  }
  ++pos;
  CycMatrix a(m, m, n);
  for (int i = 0; i < m; ++i) {
    if (pos >= lines.size()) throw InputError("matrix has fewer than " + std::to_string(m) + " rows");
    const std::string& row = lines[pos++];
    std::vector<std::string> cells;
    size_t start = 0;
    while (true) {
      size_t p = row.find(';', start);
      cells.push_back(row.substr(start, p == std::string::npos ? std::string::npos : p - start));
      if (p == std::string::npos) break;
      start = p + 1;
    }
    if (static_cast<int>(cells.size()) != m) {
      throw InputError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                       " entries, expected " + std::to_string(m));
    }
    for (int j = 0; j < m; ++j) a(i, j) = parseEntry(cells[j], n);
  }
  return a;
}

}  // namespace

Form parseForm(std::string_view text) {
  auto lines = contentLines(text);
  if (lines.empty()) throw InputError("empty form file");
  auto hdr = words(lines[0]);
  if (hdr.size() != 4 || hdr[0] != "form") throw InputError("expected 'form <m> <d> <N>', got '" + lines[0] + "'");
  int m = static_cast<int>(parseSmall(hdr[1], 1, kMaxVars, "number of variables"));
  int d = static_cast<int>(parseSmall(hdr[2], 0, 255, "degree"));
  unsigned n = static_cast<unsigned>(parseSmall(hdr[3], 1, 100000, "conductor"));
  std::vector<Term> terms;
  std::set<Exps> seen;
  for (size_t k = 1; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    size_t bar = line.find('|');
    if (bar == std::string::npos) throw InputError("term line lacks '|': '" + line + "'");
    auto ex = words(line.substr(0, bar));
    if (static_cast<int>(ex.size()) != m) throw InputError("term line needs " + std::to_string(m) + " exponents: '" + line + "'");
    Exps e{};
    int deg = 0;
    for (int i = 0; i < m; ++i) {
      e[i] = static_cast<uint8_t>(parseSmall(ex[i], 0, 255, "exponent"));
      deg += e[i];
    }
    if (deg != d) throw InputError("term degree differs from header degree: '" + line + "'");
    if (!seen.insert(e).second) throw InputError("duplicate monomial: '" + line + "'");
    CycNum c = parseEntry(line.substr(bar + 1), n);
    if (c.isZero()) throw InputError("zero coefficient: '" + line + "'");
    terms.emplace_back(e, std::move(c));
  }
  return Form::fromTerms(m, d, n, std::move(terms));
}

std::string serializeForm(const Form& f) {
  std::string s = "form " + std::to_string(f.nvars()) + " " + std::to_string(f.degree()) + " " +
                  std::to_string(f.conductor()) + "\n";
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < f.nvars(); ++i) {
      s += std::to_string(e[i]);
      s += ' ';
    }
    s += "| " + c.encode() + "\n";
  }
  return s;
}

CycMatrix parseMatrix(std::string_view text) {
  auto lines = contentLines(text);
  size_t pos = 0;
  CycMatrix a = parseMatrixLines(lines, pos, 0, 0);
  if (pos != lines.size()) throw InputError("trailing content after matrix");
  return a;
}

std::string serializeMatrix(const CycMatrix& a) {
  std::string s = "matrix " + std::to_string(a.rows()) + " " + std::to_string(a.conductor()) + "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) s += " ; ";
      s += a(i, j).encode();
    }
    s += "\n";
  }
  return s;
}

GroupFile parseGroup(std::string_view text) {
  auto lines = contentLines(text);
  if (lines.empty()) throw InputError("empty group file");
  auto hdr = words(lines[0]);
  if (hdr.size() != 4 || hdr[0] != "group") throw InputError("expected 'group <m> <N> <k>', got '" + lines[0] + "'");
  GroupFile g;
  g.m = static_cast<int>(parseSmall(hdr[1], 1, kMaxVars, "dimension"));
  g.conductor = static_cast<unsigned>(parseSmall(hdr[2], 1, 100000, "conductor"));
  long long k = parseSmall(hdr[3], 0, 100000, "generator count");
  size_t pos = 1;
  for (long long i = 0; i < k; ++i) g.gens.push_back(parseMatrixLines(lines, pos, g.m, g.conductor));
  if (pos != lines.size()) throw InputError("trailing content after group generators");
  return g;
}

std::string serializeGroup(const GroupFile& g) {
  std::string s = "group " + std::to_string(g.m) + " " + std::to_string(g.conductor) + " " +
                  std::to_string(g.gens.size()) + "\n";
  for (const auto& a : g.gens) s += serializeMatrix(a);
  return s;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file '" + path + "'");
  out << content;
}

Form loadForm(const std::string& path) { return parseForm(readFile(path)); }
CycMatrix loadMatrix(const std::string& path) { return parseMatrix(readFile(path)); }
GroupFile loadGroup(const std::string& path) { return parseGroup(readFile(path)); }

}  // namespace cubicsym
