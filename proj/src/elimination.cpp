#include "ap5/elimination.hpp"

#include "ap5/errors.hpp"

#include <algorithm>
#include <set>

namespace ap5 {

NormTable::NormTable(const NumberFieldElem& ap) : charpoly_(nf_charpoly(ap)) {}

Int NormTable::norm_minus(const Int& c) const {
  // Norm(a_p - c) = (-1)^d chi(c) for chi = prod (x - sigma(a_p)).
  Rat acc = 0;
  for (auto it = charpoly_.rbegin(); it != charpoly_.rend(); ++it) acc = acc * Rat(c) + *it;
  if ((charpoly_.size() - 1) % 2 == 1) acc = -acc;
  acc.canonicalize();
  if (acc.get_den() != 1) throw PreconditionError("NormTable: a_p is not an algebraic integer");
  return acc.get_num();
}

bool divides_norm(std::uint64_t n, const Int& v) {
  return v == 0 || mpz_divisible_ui_p(v.get_mpz_t(), n) != 0;
}

int kappa_for_level(std::uint64_t level) noexcept {
  for (int k : {1, 2, 5, 10}) {
    if (frey_level(k) == level) return k;
  }
  return 0;
}

ExponentBound bound_exponent(const NewformClass& form) {
  const NormTable t(form.a(3));
  ExponentBound out;
  out.norm_minus4 = t.norm_minus(4);
  out.norm_plus4 = t.norm_minus(-4);
  if (out.norm_minus4 == 0 || out.norm_plus4 == 0) {
    out.unbounded = true;
    return out;
  }
  std::set<std::uint64_t> ns;
  for (const Int* v : {&out.norm_minus4, &out.norm_plus4}) {
    for (const Int& q : prime_divisors(*v)) {
      if (q >= 7) ns.insert(static_cast<std::uint64_t>(to_i64(q)));
    }
  }
  out.primes.assign(ns.begin(), ns.end());
  return out;
}

namespace {

// Norms consumed by the stage-2 test at p: a_p - 2m for |m| <= sqrt p, and a_p -+ (p + 1).
std::vector<Int> stage2_norms(const NewformClass& form, std::uint64_t p) {
  const NormTable t(form.a(p));
  std::vector<Int> out;
  long m = 0;
  while (static_cast<std::uint64_t>((m + 1) * (m + 1)) <= p) ++m;
  for (long k = -m; k <= m; ++k) out.push_back(t.norm_minus(Int(2 * k)));
  out.push_back(t.norm_minus(Int(p + 1)));
  out.push_back(t.norm_minus(-Int(p + 1)));
  return out;
}

bool any_divisible(std::uint64_t n, const std::vector<Int>& norms) {
  return std::any_of(norms.begin(), norms.end(), [n](const Int& v) { return divides_norm(n, v); });
}

}  // namespace

CongruenceOutcome congruence_sieve(const NewformClass& form, std::uint64_t n,
                                   const std::vector<std::uint64_t>& primes) {
  CongruenceOutcome out;
  for (std::uint64_t p : primes) {
    if (p == n || form.level % p == 0) continue;
    if (!any_divisible(n, stage2_norms(form, p))) {
      out.survives = false;
      out.witness_p = p;
      return out;
    }
  }
  return out;
}

KrausOutcome kraus_eliminate(const NewformClass& form, std::uint64_t n, std::uint64_t p,
                             const KrausTraceSet& traces) {
  if (n == 0 || p % n != 1) {
    throw PreconditionError("kraus_eliminate: need p = 1 mod n (p = " + std::to_string(p) + ", n = " +
                            std::to_string(n) + ")");
  }
  if ((70 * n) % p == 0) throw PreconditionError("kraus_eliminate: p divides 70n");
  const NormTable t(form.a(p));
  KrausOutcome out;
  out.trace_count = traces.traces.size();
  out.singular_triples = traces.singular.size();
  // p + 1 = 2 mod n, so the a_p = +-(p+1) alternative is the +-2 one.
  out.bad_reduction_clause = divides_norm(n, t.norm_minus(2)) || divides_norm(n, t.norm_minus(-2));
  for (long tr : traces.traces) {
    if (divides_norm(n, t.norm_minus(Int(tr)))) {
      out.matching_trace = tr;
      break;
    }
  }
  out.eliminated = !out.bad_reduction_clause && !out.matching_trace;
  return out;
}

KrausOutcome kraus_eliminate(const NewformClass& form, std::uint64_t n, std::uint64_t p, int kappa) {
  if (n == 0 || p % n != 1) {
    throw PreconditionError("kraus_eliminate: need p = 1 mod n (p = " + std::to_string(p) + ", n = " +
                            std::to_string(n) + ")");
  }
  return kraus_eliminate(form, n, p, kraus_trace_set(kappa, n, p));
}

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig c;
  c.stage2_primes = primes_between(11, 97);
  c.stage3_primes = {{7, {29, 43}}, {11, {23, 89}}, {13, {53, 79, 157}}};
  return c;
}

void PipelineConfig::check() const {
  for (std::uint64_t p : stage2_primes) {
    if (!is_prime_u64(p)) throw ConfigError("stage-2 entry " + std::to_string(p) + " is not prime");
  }
  for (const auto& [n, ps] : stage3_primes) {
    if (!is_prime_u64(n)) throw ConfigError("stage-3 exponent " + std::to_string(n) + " is not prime");
    for (std::uint64_t p : ps) {
      if (!is_prime_u64(p)) throw ConfigError("stage-3 entry " + std::to_string(p) + " is not prime");
      if (p % n != 1) {
        throw ConfigError("stage-3 prime " + std::to_string(p) + " is not 1 mod " + std::to_string(n));
      }
      if ((70 * n) % p == 0) throw ConfigError("stage-3 prime " + std::to_string(p) + " divides 70n");
    }
  }
}

std::map<std::uint64_t, std::map<std::uint64_t, std::size_t>> EliminationReport::tally(
    const std::vector<PairRef>& pairs) {
  std::map<std::uint64_t, std::map<std::uint64_t, std::size_t>> out;
  for (const auto& r : pairs) ++out[r.n][r.level];
  return out;
}

namespace {

json pair_json(const PairRef& r) { return json{{"level", r.level}, {"label", r.label}, {"n", r.n}}; }

json tally_json(const std::vector<PairRef>& pairs) {
  json out = json::object();
  for (const auto& [n, by_level] : EliminationReport::tally(pairs)) {
    json row = json::object();
    std::size_t total = 0;
    for (const auto& [level, c] : by_level) {
      row[std::to_string(level)] = c;
      total += c;
    }
    row["total"] = total;
    out[std::to_string(n)] = row;
  }
  return out;
}

}  // namespace

json EliminationReport::to_json() const {
  json s1 = json::array();
  for (const auto& e : stage1) {
    s1.push_back({{"level", e.level}, {"label", e.label}, {"exponents", e.primes}, {"unbounded", e.unbounded}});
  }
  json s2 = json::array();
  for (const auto& r : stage2_survivors) s2.push_back(pair_json(r));
  json s2e = json::array();
  for (const auto& [r, p] : stage2_witness) {
    json j = pair_json(r);
    j["p"] = p;
    s2e.push_back(j);
  }
  json steps = json::array();
  for (const auto& s : stage3_steps) {
    steps.push_back({{"n", s.n},
                     {"p", s.p},
                     {"tested", s.tested},
                     {"eliminated", s.eliminated},
                     {"trace_set", s.traces},
                     {"singular_triples", s.singular_triples}});
  }
  json s3e = json::array();
  for (const auto& [r, p] : stage3_witness) {
    json j = pair_json(r);
    j["p"] = p;
    s3e.push_back(j);
  }
  json fin = json::array();
  for (const auto& r : final_survivors) fin.push_back(pair_json(r));
  return json{{"stage1", {{"classes", s1}, {"max_exponent", stage1_max_n}, {"pairs", stage1_pairs.size()}}},
              {"stage2", {{"survivors", s2}, {"counts", tally_json(stage2_survivors)}, {"eliminated", s2e}}},
              {"stage3", {{"steps", steps}, {"eliminated", s3e}}},
              {"final", {{"survivors", fin}, {"counts", tally_json(final_survivors)}}},
              {"skipped", skipped}};
}

EliminationReport run_pipeline(const NewformStore& store, const PipelineConfig& config) {
  config.check();
  EliminationReport rep;

  struct Entry {
    const NewformClass* form;
    int kappa;
  };
  std::vector<Entry> forms;
  for (const auto& [level, classes] : store.levels) {
    const int kappa = kappa_for_level(level);
    if (kappa == 0) {
      rep.skipped.push_back("level " + std::to_string(level) + " matches no Frey model");
      continue;
    }
    for (const auto& f : classes) forms.push_back({&f, kappa});
  }
  std::sort(forms.begin(), forms.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.form->level, x.form->label) < std::tie(y.form->level, y.form->label);
  });

  // Stage 1.
  std::map<std::string, std::size_t> index;  // "level/label" -> forms index
  for (std::size_t k = 0; k < forms.size(); ++k) {
    const NewformClass& f = *forms[k].form;
    index[std::to_string(f.level) + "/" + f.label] = k;
    const ExponentBound b = bound_exponent(f);
    rep.stage1.push_back({f.level, f.label, b.primes, b.unbounded});
    if (b.unbounded) {
      rep.skipped.push_back(f.label + ": a_3 = +-4 exactly, exponent unbounded");
      continue;
    }
    for (std::uint64_t n : b.primes) {
      rep.stage1_pairs.push_back({f.level, f.label, n});
      rep.stage1_max_n = std::max(rep.stage1_max_n, n);
    }
  }

  // Stage 2, norms computed once per (form, p).
  std::map<std::pair<std::size_t, std::uint64_t>, std::vector<Int>> cache;
  for (const PairRef& pr : rep.stage1_pairs) {
    const std::size_t k = index.at(std::to_string(pr.level) + "/" + pr.label);
    const NewformClass& f = *forms[k].form;
    bool survives = true;
    for (std::uint64_t p : config.stage2_primes) {
      if (p == pr.n) continue;
      if (f.level % p == 0) {
        rep.skipped.push_back(f.label + ": stage-2 prime " + std::to_string(p) + " divides the level");
        continue;
      }
      auto it = cache.find({k, p});
      if (it == cache.end()) it = cache.emplace(std::make_pair(k, p), stage2_norms(f, p)).first;
      if (!any_divisible(pr.n, it->second)) {
        survives = false;
        rep.stage2_witness[pr] = p;
        break;
      }
    }
    if (survives) rep.stage2_survivors.push_back(pr);
  }

  // Stage 3, primes applied in configured order.
  std::vector<PairRef> alive = rep.stage2_survivors;
  std::map<std::tuple<int, std::uint64_t, std::uint64_t>, KrausTraceSet> traces;
  for (const auto& [n, ps] : config.stage3_primes) {
    for (std::uint64_t p : ps) {
      KrausStep step;
      step.n = n;
      step.p = p;
      std::vector<PairRef> next;
      std::set<long> seen;
      for (const PairRef& pr : alive) {
        if (pr.n != n) {
          next.push_back(pr);
          continue;
        }
        const std::size_t k = index.at(std::to_string(pr.level) + "/" + pr.label);
        const int kappa = forms[k].kappa;
        auto key = std::make_tuple(kappa, n, p);
        auto it = traces.find(key);
        if (it == traces.end()) it = traces.emplace(key, kraus_trace_set(kappa, n, p)).first;
        seen.insert(it->second.traces.begin(), it->second.traces.end());
        step.singular_triples += it->second.singular.size();
        ++step.tested;
        if (kraus_eliminate(*forms[k].form, n, p, it->second).eliminated) {
          ++step.eliminated;
          rep.stage3_witness[pr] = p;
        } else {
          next.push_back(pr);
        }
      }
      step.traces.assign(seen.begin(), seen.end());
      rep.stage3_steps.push_back(step);
      alive = std::move(next);
    }
  }
  rep.final_survivors = alive;
  return rep;
}

}  // namespace ap5
