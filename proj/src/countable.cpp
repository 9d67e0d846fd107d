#include "exchg/countable.hpp"

#include <set>

#include "exchg/permutations.hpp"

namespace exchg {

namespace {

Gamble truncate(const Gamble& g, std::size_t k) {
  const SequenceSpace target(g.space().base(), k);
  Vector values(target.size());
  Sequence x(g.space().length(), 0);
  for (std::size_t i = 0; i < target.size(); ++i) {
    const Sequence prefix = target.sequence_at(i);
    std::copy(prefix.begin(), prefix.end(), x.begin());
    values[i] = g.at(x);
  }
  return Gamble(target, std::move(values));
}

bool depends_only_on_prefix(const Gamble& g, std::size_t k) {
  const SequenceSpace& space = g.space();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Sequence x = space.sequence_at(i);
    std::fill(x.begin() + static_cast<std::ptrdiff_t>(k), x.end(), 0);
    if (g[i] != g.at(x)) return false;
  }
  return true;
}

Gamble minimal_table(const Gamble& g) {
  const std::size_t n = g.space().length();
  for (std::size_t k = 1; k < n; ++k) {
    if (depends_only_on_prefix(g, k)) return truncate(g, k);
  }
  return g;
}

}  // namespace

FiniteStructureGamble::FiniteStructureGamble(const Gamble& table) : table_(minimal_table(table)) {}

Gamble cylindrical_extend(const FiniteStructureGamble& f, std::size_t n) {
  if (n < f.degree()) {
    throw PreconditionFailed("cylindrical_extend: target length " + std::to_string(n) + " below degree " +
                             std::to_string(f.degree()));
  }
  const SequenceSpace space(f.base(), n);
  Vector values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    Sequence x = space.sequence_at(i);
    x.resize(f.degree());
    values[i] = f.table().at(x);
  }
  return Gamble(space, std::move(values));
}

FiniteStructureGamble canonical_degree(const Gamble& g) { return FiniteStructureGamble(g); }

FiniteStructureGamble fs_add(const FiniteStructureGamble& f, const FiniteStructureGamble& g) {
  const std::size_t n = std::max(f.degree(), g.degree());
  return FiniteStructureGamble(gamble_add(cylindrical_extend(f, n), cylindrical_extend(g, n)));
}

FiniteStructureGamble fs_scale(const Rational& lambda, const FiniteStructureGamble& f) {
  return FiniteStructureGamble(gamble_scale(lambda, f.table()));
}

bool fs_strictly_below(const FiniteStructureGamble& f, const FiniteStructureGamble& g) {
  const std::size_t n = std::max(f.degree(), g.degree());
  return gamble_strictly_below(cylindrical_extend(f, n), cylindrical_extend(g, n));
}

OptionOps<FiniteStructureGamble> fs_ops() {
  OptionOps<FiniteStructureGamble> ops;
  ops.strictly_below = fs_strictly_below;
  ops.scale = fs_scale;
  ops.add = fs_add;
  return ops;
}

Marginal marginalize_choice_tracked(const FsChoiceTable& t, std::size_t n) {
  Marginal m;
  m.degree = n;
  std::vector<std::size_t> local(t.pool.size(), t.pool.size());
  for (std::size_t i = 0; i < t.pool.size(); ++i) {
    if (t.pool[i].degree() > n) continue;
    local[i] = m.table.pool.size();
    m.table.pool.push_back(cylindrical_extend(t.pool[i], n));
    m.pool_origin.push_back(i);
  }
  for (std::size_t e = 0; e < t.entries.size(); ++e) {
    const auto& entry = t.entries[e];
    const bool inside = std::all_of(entry.options.begin(), entry.options.end(),
                                    [&](std::size_t i) { return local[i] < t.pool.size(); });
    if (!inside) continue;
    ChoiceEntry out;
    for (std::size_t i : entry.options) out.options.push_back(local[i]);
    for (std::size_t i : entry.chosen) out.chosen.push_back(local[i]);
    m.table.entries.push_back(std::move(out));
    m.entry_origin.push_back(e);
  }
  // local indices are increasing in the source order, so lists stay sorted
  return m;
}

GambleChoiceTable marginalize_choice(const FsChoiceTable& t, std::size_t n) {
  return marginalize_choice_tracked(t, n).table;
}

GeneratorSet marginal_assessment(const CountableAssessment& a, std::size_t n) {
  const SequenceSpace space(a.base, n);
  auto collect = [&](const std::vector<FiniteStructureGamble>& list) {
    std::vector<Gamble> out;
    for (const auto& f : list) {
      if (f.degree() <= n) out.push_back(cylindrical_extend(f, n));
    }
    return out;
  };
  GeneratorSet model(space, collect(a.desirable), collect(a.indifferent));
  return a.declare_exchangeable ? model.with_exchangeability() : model;
}

namespace {

void require_horizon(std::size_t degree, const Horizon& horizon) {
  if (horizon.max_degree == 0) throw PreconditionFailed("horizon must be positive");
  if (degree > horizon.max_degree) {
    throw PreconditionFailed("option of degree " + std::to_string(degree) + " exceeds the horizon M = " +
                             std::to_string(horizon.max_degree));
  }
}

void record(CountableReport& report, DegreeVerdict verdict) {
  if (!verdict.passed && report.passed) {
    report.passed = false;
    report.first_failure = verdict.degree;
  }
  report.degrees.push_back(std::move(verdict));
}

}  // namespace

CountableReport check_countable_exchangeable(const FsChoiceTable& t, const Horizon& horizon) {
  for (const auto& f : t.pool) require_horizon(f.degree(), horizon);
  CountableReport report;
  report.horizon = horizon.max_degree;
  for (std::size_t n = 1; n <= horizon.max_degree; ++n) {
    DegreeVerdict v;
    v.degree = n;
    const GambleChoiceTable marginal = marginalize_choice(t, n);
    v.size = marginal.entries.size();
    v.compatibility = check_indifference_compatibility(marginal);
    v.passed = v.compatibility.passed();
    record(report, std::move(v));
  }
  return report;
}

CountableReport check_countable_exchangeable(const CountableAssessment& a, const Horizon& horizon) {
  for (const auto& f : a.desirable) require_horizon(f.degree(), horizon);
  for (const auto& f : a.indifferent) require_horizon(f.degree(), horizon);
  CountableReport report;
  report.horizon = horizon.max_degree;
  for (std::size_t n = 1; n <= horizon.max_degree; ++n) {
    DegreeVerdict v;
    v.degree = n;
    const GeneratorSet marginal = marginal_assessment(a, n);
    v.size = marginal.generators().size();
    v.coherent = is_coherent(marginal).coherent;
    if (!v.coherent) {
      v.passed = false;
    } else if (marginal.generators().empty() && marginal.indifferent().empty()) {
      // vacuous marginal, read as the vacuous exchangeable model
      v.passed = true;
    } else {
      v.exchangeability = is_exchangeable(marginal);
      v.passed = v.exchangeability->exchangeable;
    }
    record(report, std::move(v));
  }
  return report;
}

PerDegreeAxioms per_degree_coherence(const PolyChoiceTable& r, const Horizon& horizon,
                                     const std::vector<Rational>& scalars) {
  PerDegreeAxioms out;
  out.horizon = horizon.max_degree;
  std::vector<std::size_t> degree_of;
  for (const auto& p : r.pool) degree_of.push_back(reduce_degree(p).degree());
  for (std::size_t n = 1; n <= horizon.max_degree; ++n) {
    PolyChoiceTable restricted;
    std::vector<std::size_t> local(r.pool.size(), r.pool.size());
    for (std::size_t i = 0; i < r.pool.size(); ++i) {
      if (degree_of[i] > n) continue;
      local[i] = restricted.pool.size();
      restricted.pool.push_back(degree_elevate(reduce_degree(r.pool[i]), n));
    }
    for (const auto& entry : r.entries) {
      const bool inside = std::all_of(entry.options.begin(), entry.options.end(),
                                      [&](std::size_t i) { return local[i] < r.pool.size(); });
      if (!inside) continue;
      ChoiceEntry e;
      for (std::size_t i : entry.options) e.options.push_back(local[i]);
      for (std::size_t i : entry.chosen) e.chosen.push_back(local[i]);
      restricted.entries.push_back(std::move(e));
    }
    AxiomReport report = check_coherence_axioms(restricted, scalars, poly_ops(n));
    if (!report.passed()) out.passed = false;
    out.degrees.emplace_back(n, std::move(report));
  }
  return out;
}

PolyChoiceTable canonical_poly_table(const PolyChoiceTable& r) {
  std::vector<BernsteinPoly> reduced;
  for (const auto& p : r.pool) reduced.push_back(reduce_degree(p));
  PolyChoiceTable out;
  out.pool = reduced;
  std::sort(out.pool.begin(), out.pool.end());
  out.pool.erase(std::unique(out.pool.begin(), out.pool.end()), out.pool.end());
  auto index = [&](std::size_t i) {
    return static_cast<std::size_t>(std::lower_bound(out.pool.begin(), out.pool.end(), reduced[i]) -
                                    out.pool.begin());
  };
  for (const auto& e : r.entries) {
    ChoiceEntry c;
    for (std::size_t i : e.options) c.options.push_back(index(i));
    for (std::size_t i : e.chosen) c.chosen.push_back(index(i));
    out.entries.push_back(std::move(c));
  }
  normalize_table(out);
  std::sort(out.entries.begin(), out.entries.end(),
            [](const ChoiceEntry& a, const ChoiceEntry& b) { return a.options < b.options; });
  return out;
}

PolySet canonical_poly_set(const PolySet& s) {
  auto clean = [](const std::vector<BernsteinPoly>& in, bool drop_zero) {
    std::vector<BernsteinPoly> out;
    for (const auto& p : in) {
      BernsteinPoly r = reduce_degree(p);
      if (drop_zero && vec_is_zero(r.coefficients())) continue;
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return PolySet{clean(s.generators, false), clean(s.indifferent, true)};
}

PolyChoiceTable countable_represent(const FsChoiceTable& t, const Horizon& horizon) {
  const CountableReport check = check_countable_exchangeable(t, horizon);
  if (!check.passed) {
    throw PreconditionFailed("countable_represent: marginal at n = " + std::to_string(*check.first_failure) +
                             " is not exchangeable");
  }
  std::vector<PolyChoiceTable> per_degree;
  std::set<BernsteinPoly> pool;
  for (std::size_t n = 1; n <= horizon.max_degree; ++n) {
    per_degree.push_back(canonical_poly_table(represent_choice_poly(marginalize_choice(t, n))));
    pool.insert(per_degree.back().pool.begin(), per_degree.back().pool.end());
  }
  PolyChoiceTable out;
  out.pool.assign(pool.begin(), pool.end());
  auto global = [&](const PolyChoiceTable& local, const std::vector<std::size_t>& set) {
    std::vector<std::size_t> ids;
    for (std::size_t i : set) {
      ids.push_back(static_cast<std::size_t>(
          std::lower_bound(out.pool.begin(), out.pool.end(), local.pool[i]) - out.pool.begin()));
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  std::map<std::vector<std::size_t>, std::pair<std::vector<std::size_t>, std::size_t>> assembled;
  for (std::size_t k = 0; k < per_degree.size(); ++k) {
    const std::size_t n = k + 1;
    for (const auto& e : per_degree[k].entries) {
      auto key = global(per_degree[k], e.options);
      auto chosen = global(per_degree[k], e.chosen);
      const auto [it, inserted] = assembled.emplace(key, std::pair{chosen, n});
      if (!inserted && it->second.first != chosen) {
        throw RepresentationConflict("cross_degree", {it->second.second, n},
                                     "degrees " + std::to_string(it->second.second) + " and " + std::to_string(n) +
                                         " choose differently from the same polynomial option set");
      }
    }
  }
  for (auto& [key, value] : assembled) out.entries.push_back(ChoiceEntry{key, value.first});
  return out;
}

CountableRepresentation countable_represent(const CountableAssessment& a, const Horizon& horizon) {
  const CountableReport check = check_countable_exchangeable(a, horizon);
  if (!check.passed) {
    throw PreconditionFailed("countable_represent: marginal at n = " + std::to_string(*check.first_failure) +
                             " is not coherent and exchangeable");
  }
  CountableRepresentation out;
  out.horizon = horizon.max_degree;
  PolySet all;
  for (std::size_t n = 1; n <= horizon.max_degree; ++n) {
    PolySet images = represent_desirability_poly(marginal_assessment(a, n));
    all.generators.insert(all.generators.end(), images.generators.begin(), images.generators.end());
    all.indifferent.insert(all.indifferent.end(), images.indifferent.begin(), images.indifferent.end());
    out.per_degree.emplace_back(n, std::move(images));
  }
  out.polys = canonical_poly_set(all);
  return out;
}

}  // namespace exchg
