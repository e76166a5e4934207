#include "cubicsym/reps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "cubicsym/errors.hpp"

namespace cubicsym {

AbelianGroupSpec::AbelianGroupSpec(std::vector<unsigned> invariantFactors) : n_(std::move(invariantFactors)) {
  for (size_t i = 0; i < n_.size(); ++i) {
    if (n_[i] < 2) throw InputError("invariant factors must be at least 2");
    if (i > 0 && n_[i] % n_[i - 1] != 0) throw InputError("invariant factors must form a divisibility chain");
  }
}

AbelianGroupSpec AbelianGroupSpec::fromCyclicOrders(const std::vector<unsigned>& orders) {
  std::map<unsigned, std::vector<unsigned>> primePowers;
  for (unsigned n : orders) {
    if (n == 0) throw InputError("cyclic orders must be positive");
    for (unsigned p = 2; n > 1; ++p) {
      if (p * p > n) p = n;
      unsigned q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) primePowers[p].push_back(q);
    }
  }
  size_t k = 0;
  for (auto& [p, qs] : primePowers) {
    std::sort(qs.rbegin(), qs.rend());
    k = std::max(k, qs.size());
  }
  // Largest factor first, then reversed into a divisibility chain.
  std::vector<unsigned> f(k, 1);
  for (const auto& [p, qs] : primePowers) {
    for (size_t i = 0; i < qs.size(); ++i) f[i] *= qs[i];
  }
  std::reverse(f.begin(), f.end());
  return AbelianGroupSpec(std::move(f));
}

size_t AbelianGroupSpec::order() const noexcept {
  size_t o = 1;
  for (unsigned n : n_) o *= n;
  return o;
}

std::vector<unsigned> AbelianGroupSpec::digits(size_t index) const {
  std::vector<unsigned> d(n_.size());
  for (size_t j = n_.size(); j-- > 0;) {
    d[j] = static_cast<unsigned>(index % n_[j]);
    index /= n_[j];
  }
  return d;
}

size_t AbelianGroupSpec::index(const std::vector<unsigned>& digits) const {
  size_t idx = 0;
  for (size_t j = 0; j < n_.size(); ++j) idx = idx * n_[j] + digits.at(j) % n_[j];
  return idx;
}

unsigned AbelianGroupSpec::pairing(size_t chi, size_t g) const {
  unsigned l = exponent();
  auto a = digits(chi);
  auto b = digits(g);
  unsigned long long s = 0;
  for (size_t j = 0; j < n_.size(); ++j) s += static_cast<unsigned long long>(a[j]) * b[j] % n_[j] * (l / n_[j]);
  return static_cast<unsigned>(s % l);
}

unsigned AbelianGroupSpec::elementOrder(size_t g) const {
  auto b = digits(g);
  unsigned o = 1;
  for (size_t j = 0; j < n_.size(); ++j) o = std::lcm(o, n_[j] / std::gcd(b[j], n_[j]));
  return o;
}

std::string AbelianGroupSpec::str() const {
  if (n_.empty()) return "C1";
  std::string s;
  for (size_t j = 0; j < n_.size(); ++j) s += (j ? "xC" : "C") + std::to_string(n_[j]);
  return s;
}

namespace {

using Vec = std::vector<uint32_t>;

// Prefixes packed base L, so numeric order is lexicographic order.
// Requires L^m < 2^64 (checked by the caller).
std::vector<uint64_t> packedPrefixes(const std::vector<Vec>& elems, const std::vector<int>& order, uint64_t base) {
  std::vector<uint64_t> out;
  out.reserve(elems.size());
  for (const auto& e : elems) {
    uint64_t v = 0;
    for (int c : order) v = v * base + e[c];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// count, then the sorted distinct prefixes of the given column order.
Vec levelCode(const std::vector<Vec>& elems, const std::vector<int>& order, uint64_t base) {
  auto packed = packedPrefixes(elems, order, base);
  Vec out{static_cast<uint32_t>(packed.size())};
  size_t k = order.size();
  for (uint64_t v : packed) {
    size_t at = out.size();
    out.resize(at + k);
    for (size_t i = k; i-- > 0;) {
      out[at + i] = static_cast<uint32_t>(v % base);
      v /= base;
    }
  }
  return out;
}

}  // namespace

CanonicalCode canonicalizeSubgroup(const DiagonalSubgroup& d) {
  int m = d.m;
  unsigned big = d.modulus;
  unsigned l = 1;
  for (const auto& e : d.elements) {
    unsigned g = big;
    for (uint32_t v : e) g = std::gcd(g, v % big);
    l = std::lcm(l, big / g);
  }
  unsigned scale = big / l;
  std::vector<Vec> elems;
  for (const auto& e : d.elements) {
    Vec v(m);
    for (int c = 0; c < m; ++c) v[c] = (e[c] % big) / scale;
    elems.push_back(std::move(v));
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  // Permutation-invariant column keys; the canonical order is sorted by key.
  if (std::pow(static_cast<double>(l), m) >= 1.8e19) throw InputError("diagonal group too large to canonicalize");
  auto distinctCount = [&](std::initializer_list<int> cols) {
    return static_cast<uint32_t>(packedPrefixes(elems, std::vector<int>(cols), l).size());
  };
  std::vector<Vec> keys(m);
  std::vector<int> sameAs(m);
  for (int c = 0; c < m; ++c) {
    keys[c].push_back(distinctCount({c}));
    Vec pairs;
    for (int c2 = 0; c2 < m; ++c2) {
      if (c2 != c) pairs.push_back(distinctCount({c, c2}));
    }
    std::sort(pairs.begin(), pairs.end());
    keys[c].insert(keys[c].end(), pairs.begin(), pairs.end());
    sameAs[c] = c;
    for (int c2 = 0; c2 < c; ++c2) {
      bool eq = std::all_of(elems.begin(), elems.end(), [&](const Vec& e) { return e[c] == e[c2]; });
      if (eq) {
        sameAs[c] = sameAs[c2];
        break;
      }
    }
  }
  std::vector<Vec> sortedKeys = keys;
  std::sort(sortedKeys.begin(), sortedKeys.end());

  CanonicalCode code{l, static_cast<uint32_t>(m)};
  std::vector<std::vector<int>> states{{}};
  for (int k = 0; k < m; ++k) {
    std::optional<Vec> best;
    std::vector<std::vector<int>> next;
    for (const auto& st : states) {
      std::vector<bool> used(m, false);
      for (int c : st) used[c] = true;
      for (int c = 0; c < m; ++c) {
        if (used[c] || keys[c] != sortedKeys[k]) continue;
        // Identical columns are interchangeable: only the first unused copy is tried.
        bool earlierTwin = false;
        for (int c2 = 0; c2 < c; ++c2) earlierTwin = earlierTwin || (!used[c2] && sameAs[c2] == sameAs[c]);
        if (earlierTwin) continue;
        std::vector<int> order = st;
        order.push_back(c);
        Vec lc = levelCode(elems, order, l);
        if (!best || lc < *best) {
          best = std::move(lc);
          next.clear();
          next.push_back(std::move(order));
        } else if (lc == *best) {
          next.push_back(std::move(order));
        }
      }
    }
    code.insert(code.end(), best->begin(), best->end());
    states = std::move(next);
  }
  return code;
}

size_t RepClass::column(int c) const {
  std::vector<unsigned> dg(spec.rank());
  for (size_t j = 0; j < spec.rank(); ++j) dg[j] = expMatrix[j][c];
  return spec.index(dg);
}

std::vector<CycMatrix> RepClass::generators() const {
  std::vector<CycMatrix> out;
  for (size_t j = 0; j < spec.rank(); ++j) {
    unsigned n = spec.factors()[j];
    std::vector<CycNum> diag;
    for (int c = 0; c < m; ++c) diag.push_back(CycNum::zeta(n, expMatrix[j][c]));
    out.push_back(CycMatrix::diagonal(diag));
  }
  if (out.empty()) out.push_back(CycMatrix::identity(m, 1));
  return out;
}

DiagonalSubgroup RepClass::subgroupWithScalars() const {
  unsigned l = spec.exponent();
  unsigned big = std::lcm(l, static_cast<unsigned>(d));
  std::vector<size_t> cols(m);
  for (int c = 0; c < m; ++c) cols[c] = column(c);
  std::set<Vec> elems;
  for (int t = 0; t < d; ++t) {
    for (size_t g = 0; g < spec.order(); ++g) {
      Vec v(m);
      for (int c = 0; c < m; ++c) v[c] = (t * (big / d) + spec.pairing(cols[c], g) * (big / l)) % big;
      elems.insert(std::move(v));
    }
  }
  return DiagonalSubgroup{big, m, {elems.begin(), elems.end()}};
}

std::string RepClass::str() const {
  std::string s = spec.str() + " [";
  for (size_t j = 0; j < expMatrix.size(); ++j) {
    if (j) s += "; ";
    for (int c = 0; c < m; ++c) s += (c ? " " : "") + std::to_string(expMatrix[j][c]);
  }
  return s + "]";
}

RepClass makeRepClass(const AbelianGroupSpec& spec, int d, const std::vector<size_t>& columns) {
  RepClass cls;
  cls.spec = spec;
  cls.m = static_cast<int>(columns.size());
  cls.d = d;
  cls.expMatrix.assign(spec.rank(), std::vector<unsigned>(cls.m));
  for (int c = 0; c < cls.m; ++c) {
    auto dg = spec.digits(columns[c]);
    for (size_t j = 0; j < spec.rank(); ++j) cls.expMatrix[j][c] = dg[j];
  }
  cls.canonical = canonicalize(cls);
  return cls;
}

CanonicalCode canonicalize(const RepClass& cls) { return canonicalizeSubgroup(cls.subgroupWithScalars()); }

bool isFaithful(const AbelianGroupSpec& spec, const std::vector<size_t>& columns) {
  for (size_t g = 1; g < spec.order(); ++g) {
    bool trivial = std::all_of(columns.begin(), columns.end(), [&](size_t c) { return spec.pairing(c, g) == 0; });
    if (trivial) return false;
  }
  return true;
}

bool isProjectivelyFaithful(const AbelianGroupSpec& spec, const std::vector<size_t>& columns) {
  if (columns.empty()) return spec.order() == 1;
  for (size_t g = 1; g < spec.order(); ++g) {
    unsigned v = spec.pairing(columns[0], g);
    bool scalar = std::all_of(columns.begin(), columns.end(), [&](size_t c) { return spec.pairing(c, g) == v; });
    if (scalar) return false;
  }
  return true;
}

namespace {

double multisetCount(size_t n, int m) {
  double r = 1;
  for (int i = 1; i <= m; ++i) r = r * static_cast<double>(n + i - 1) / i;
  return r;
}

// Sorted column multisets whose distinct columns are closed under chi -> -(d-1) chi.
std::vector<std::vector<size_t>> closedMultisets(const AbelianGroupSpec& spec, int m, int d) {
  size_t n = spec.order();
  auto image = [&](size_t chi) {
    auto dg = spec.digits(chi);
    for (size_t j = 0; j < dg.size(); ++j) {
      unsigned nj = spec.factors()[j];
      dg[j] = static_cast<unsigned>((nj - (static_cast<unsigned long long>(d - 1) * dg[j]) % nj) % nj);
    }
    return spec.index(dg);
  };
  std::vector<std::vector<size_t>> orbit(n);
  for (size_t c = 0; c < n; ++c) {
    std::set<size_t> seen;
    for (size_t x = c; seen.insert(x).second;) x = image(x);
    orbit[c].assign(seen.begin(), seen.end());
  }
  std::set<std::vector<size_t>> sets;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, size_t from, std::set<size_t> s) -> void {
    if (!s.empty()) sets.insert(std::vector<size_t>(s.begin(), s.end()));
    for (size_t c = from; c < n; ++c) {
      if (s.count(c)) continue;
      std::set<size_t> t = s;
      t.insert(orbit[c].begin(), orbit[c].end());
      if (static_cast<int>(t.size()) <= m) self(self, c + 1, std::move(t));
    }
  };
  rec(rec, 0, {});
  std::vector<std::vector<size_t>> out;
  for (const auto& s : sets) {
    int k = static_cast<int>(s.size());
    // Multiplicities: positive, summing to m.
    std::vector<int> mult(k, 1);
    auto emit = [&]() {
      std::vector<size_t> ms;
      for (int i = 0; i < k; ++i) ms.insert(ms.end(), mult[i], s[i]);
      out.push_back(std::move(ms));
    };
    auto dist = [&](auto&& self, int i, int left) -> void {
      if (i == k - 1) {
        mult[i] = 1 + left;
        emit();
        return;
      }
      for (int a = 0; a <= left; ++a) {
        mult[i] = 1 + a;
        self(self, i + 1, left - a);
      }
    };
    dist(dist, 0, m - k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RepEnumeration enumerateDiagonalReps(const AbelianGroupSpec& spec, int m, int d, const EnumerateOptions& opt) {
  if (m < 1 || m > kMaxVars) throw InputError("dimension out of range");
  if (d < 1) throw InputError("degree must be positive");
  RepEnumeration res;
  size_t n = spec.order();
  std::set<CanonicalCode> seen;
  auto visit = [&](const std::vector<size_t>& cols) {
    if (!isFaithful(spec, cols) || !isProjectivelyFaithful(spec, cols)) return;
    ++res.candidates;
    RepClass cls = makeRepClass(spec, d, cols);
    if (seen.insert(cls.canonical).second) res.classes.push_back(std::move(cls));
  };
  if (multisetCount(n, m) > static_cast<double>(opt.exhaustiveLimit)) {
    res.pruned = true;
    for (const auto& cols : closedMultisets(spec, m, d)) visit(cols);
    return res;
  }
  std::vector<size_t> cols(m, 0);
  while (true) {
    visit(cols);
    int i = m - 1;
    while (i >= 0 && cols[i] == n - 1) --i;
    if (i < 0) break;
    ++cols[i];
    for (int k = i + 1; k < m; ++k) cols[k] = cols[i];
  }
  return res;
}

std::vector<Exps> invariantSupport(const RepClass& cls) {
  std::vector<Exps> out;
  for (const auto& e : monomials(cls.m, cls.d)) {
    bool fixed = true;
    for (size_t j = 0; j < cls.spec.rank() && fixed; ++j) {
      unsigned long long s = 0;
      for (int c = 0; c < cls.m; ++c) s += static_cast<unsigned long long>(e[c]) * cls.expMatrix[j][c];
      fixed = s % cls.spec.factors()[j] == 0;
    }
    if (fixed) out.push_back(e);
  }
  return out;
}

std::string verdictName(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Accepted:
      return "ACCEPTED";
    case VerdictStatus::RejectedNonSmooth:
      return "REJECTED";
    case VerdictStatus::Undecided:
      return "UNDECIDED";
  }
  return "?";
}

bool checkWitness(const RepClass& cls, const Form& f, size_t budget) {
  auto gens = cls.generators();
  unsigned l = std::lcm(commonConductor(gens), f.conductor());
  Form fl = f.embedded(l);
  for (const auto& g : gens) {
    if (apply(g.embedded(l), fl) != fl) return false;
  }
  SmoothOptions so;
  so.budget = budget;
  so.exactFallback = false;
  return isSmooth(f, so).status == SmoothStatus::Smooth;
}

namespace {

constexpr unsigned kCoeffConductor = 12;

// 1, -1, zeta_3, 3(sqrt 3 - 1) in Q(zeta_12).
std::vector<CycNum> candidateCoefficients() {
  CycNum one = CycNum::one(kCoeffConductor);
  CycNum sqrt3 = CycNum::zeta(kCoeffConductor, 1) + CycNum::zeta(kCoeffConductor, 11);
  return {one, -one, CycNum::zeta(kCoeffConductor, 4), (sqrt3 - one).scaled(Int(3))};
}

Form randomMember(const std::vector<Exps>& supp, int m, int d, std::mt19937_64& rng) {
  static const std::vector<CycNum> coeffs = candidateCoefficients();
  std::uniform_int_distribution<size_t> pick(0, coeffs.size() - 1);
  std::vector<Term> terms;
  for (const auto& e : supp) terms.emplace_back(e, coeffs[pick(rng)]);
  return Form::fromTerms(m, d, kCoeffConductor, std::move(terms));
}

// Sum over i of one x_i^(d-1) x_j, choices in mixed radix order with the
// pure power first in each option list.
std::vector<Form> structuredCandidates(const std::vector<Exps>& supp, int m, int d, int limit) {
  std::vector<std::vector<Exps>> options(m);
  for (const auto& e : supp) {
    for (int i = 0; i < m; ++i) {
      if (e[i] >= d - 1) options[i].push_back(e);
    }
  }
  for (int i = 0; i < m; ++i) {
    if (options[i].empty()) return {};
    std::stable_sort(options[i].begin(), options[i].end(),
                     [&](const Exps& a, const Exps& b) { return a[i] > b[i]; });
  }
  std::vector<Form> out;
  std::set<std::vector<Exps>> seen;
  std::vector<size_t> digit(m, 0);
  CycNum one = CycNum::one(kCoeffConductor);
  for (int iter = 0; static_cast<int>(out.size()) < limit && iter < 64 * limit; ++iter) {
    std::set<Exps, GrevlexGreater> chosen;
    for (int i = 0; i < m; ++i) chosen.insert(options[i][digit[i]]);
    std::vector<Exps> key(chosen.begin(), chosen.end());
    if (seen.insert(key).second) {
      std::vector<Term> terms;
      for (const auto& e : key) terms.emplace_back(e, one);
      out.push_back(Form::fromTerms(m, d, kCoeffConductor, std::move(terms)));
    }
    int i = m - 1;
    while (i >= 0 && digit[i] + 1 == options[i].size()) digit[i--] = 0;
    if (i < 0) break;
    ++digit[i];
  }
  return out;
}

uint64_t codeSeed(const CanonicalCode& code) {
  uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (uint32_t v : code) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

RepVerdict judge(const RepClass& cls, const FilterOptions& opt) {
  RepVerdict v;
  v.cls = cls;
  v.support = invariantSupport(cls);
  int m = cls.m;
  int d = cls.d;
  std::mt19937_64 rng(codeSeed(cls.canonical));

  if (v.support.empty()) {
    NonSmoothWitness w;
    w.kind = WitnessKind::JacobianZero;
    w.detail = "no invariant form of degree " + std::to_string(d);
    v.status = VerdictStatus::RejectedNonSmooth;
    v.nonSmooth = w;
    v.method = "empty-support";
    return v;
  }
  if (d == 3) {
    auto w = combinatorialNonSmooth(v.support, m);
    v.method = "support-monomial";
    if (!w) {
      w = findPartitionCover(v.support, m);
      v.method = "support-partition";
    }
    if (w) {
      for (int s = 0; s < opt.rejectionSamples; ++s) {
        if (!replayWitness(randomMember(v.support, m, d, rng), *w)) {
          throw std::logic_error("support-level rejection failed on an invariant member");
        }
      }
      v.status = VerdictStatus::RejectedNonSmooth;
      v.nonSmooth = std::move(w);
      return v;
    }
  }
  auto tryForm = [&](const Form& f, const char* how) {
    ++v.candidatesTried;
    if (checkWitness(cls, f, opt.smoothBudget)) {
      v.status = VerdictStatus::Accepted;
      v.witness = f;
      v.method = how;
      return true;
    }
    return false;
  };
  for (const auto& f : structuredCandidates(v.support, m, d, opt.structuredCandidates)) {
    if (tryForm(f, "structured-witness")) return v;
  }
  for (int r = 0; r < opt.randomCandidates; ++r) {
    if (tryForm(randomMember(v.support, m, d, rng), "random-witness")) return v;
  }
  v.status = VerdictStatus::Undecided;
  v.method = "witness-search-exhausted";
  return v;
}

}  // namespace

std::vector<RepVerdict> filterToNdReps(const std::vector<RepClass>& classes, int n, int d, const FilterOptions& opt) {
  std::vector<RepVerdict> out(classes.size());
  for (const auto& c : classes) {
    if (c.m != n + 2) throw InputError("class dimension must be n + 2");
    if (c.d != d) throw InputError("class degree differs from the requested degree");
  }
  unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(classes.size())));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  auto worker = [&]() {
    for (size_t i; (i = next++) < classes.size();) {
      try {
        out[i] = judge(classes[i], opt);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failureMutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

RepClass restrictToCyclic(const RepClass& cls, size_t g) {
  unsigned o = cls.spec.elementOrder(g);
  unsigned l = cls.spec.exponent();
  AbelianGroupSpec sub = o == 1 ? AbelianGroupSpec() : AbelianGroupSpec({o});
  std::vector<size_t> cols(cls.m);
  for (int c = 0; c < cls.m; ++c) cols[c] = o == 1 ? 0 : cls.spec.pairing(cls.column(c), g) / (l / o);
  return makeRepClass(sub, cls.d, cols);
}

std::vector<Exps> forcedMonomials(const std::vector<Exps>& supp, int m) {
  std::vector<Exps> out;
  if (supp.empty()) return out;
  int d = totalDegree(supp.front());
  for (int i = 0; i < m; ++i) {
    std::vector<Exps> hits;
    for (const auto& e : supp) {
      if (e[i] >= d - 1) hits.push_back(e);
    }
    if (hits.size() == 1 && std::find(out.begin(), out.end(), hits[0]) == out.end()) out.push_back(hits[0]);
  }
  return out;
}

std::vector<std::vector<unsigned>> cyclicExtensionsFixing(const std::vector<Exps>& monos, int m, unsigned n) {
  double total = std::pow(static_cast<double>(n), m);
  if (total > 1e7) throw InputError("too many characters to enumerate");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> a(m, 0);
  while (true) {
    bool ok = true;
    for (const auto& e : monos) {
      unsigned long long s = 0;
      for (int c = 0; c < m; ++c) s += static_cast<unsigned long long>(e[c]) * a[c];
      if (s % n) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
    int i = m - 1;
    while (i >= 0 && a[i] + 1 == n) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

}  // namespace cubicsym
