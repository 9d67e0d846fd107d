#include "exchg/choice.hpp"

#include <optional>

namespace exchg {

OptionOps<Gamble> gamble_ops() {
  OptionOps<Gamble> ops;
  ops.strictly_below = [](const Gamble& u, const Gamble& v) { return gamble_strictly_below(u, v); };
  ops.scale = [](const Rational& l, const Gamble& u) { return gamble_scale(l, u); };
  ops.add = [](const Gamble& u, const Gamble& v) { return gamble_add(u, v); };
  return ops;
}

OptionOps<CountGamble> count_gamble_ops() {
  OptionOps<CountGamble> ops;
  ops.strictly_below = [](const CountGamble& u, const CountGamble& v) { return count_gamble_strictly_below(u, v); };
  ops.scale = [](const Rational& l, const CountGamble& u) { return count_gamble_scale(l, u); };
  ops.add = [](const CountGamble& u, const CountGamble& v) { return count_gamble_add(u, v); };
  return ops;
}

OptionOps<BernsteinPoly> poly_ops(std::size_t degree) {
  OptionOps<BernsteinPoly> ops;
  ops.strictly_below = [degree](const BernsteinPoly& u, const BernsteinPoly& v) {
    return bernstein_leq_at_degree(u, v, degree) && !poly_equal(u, v);
  };
  ops.scale = [](const Rational& l, const BernsteinPoly& u) { return poly_scale(l, u); };
  ops.add = [](const BernsteinPoly& u, const BernsteinPoly& v) { return poly_add(u, v); };
  ops.key = [](const BernsteinPoly& u) { return reduce_degree(u); };
  return ops;
}

AxiomReport check_coherence_axioms(const GambleChoiceTable& table, const std::vector<Rational>& scalars) {
  return check_coherence_axioms(table, scalars, gamble_ops());
}

std::vector<Rational> default_scalars() { return {Rational(1, 2), Rational(1), Rational(2)}; }

GeneratorSet derive_desirability(const GambleChoiceTable& table) {
  if (table.pool.empty()) throw PreconditionFailed("derive_desirability: empty pool");
  const SequenceSpace& space = table.pool.front().space();
  std::optional<std::size_t> zero;
  for (std::size_t i = 0; i < table.pool.size(); ++i) {
    if (table.pool[i].is_zero()) zero = i;
  }
  if (!zero) throw PreconditionFailed("derive_desirability: the pool must contain the zero gamble");
  std::map<std::vector<std::size_t>, const ChoiceEntry*> by_options;
  for (const auto& e : table.entries) by_options.emplace(e.options, &e);
  std::vector<Gamble> desirable;
  for (std::size_t u = 0; u < table.pool.size(); ++u) {
    if (u == *zero) continue;
    std::vector<std::size_t> pair{std::min(u, *zero), std::max(u, *zero)};
    const auto it = by_options.find(pair);
    if (it == by_options.end()) {
      throw PreconditionFailed("derive_desirability: domain lacks the pair {0, option " + std::to_string(u) + "}");
    }
    if (it->second->chosen == std::vector<std::size_t>{u}) desirable.push_back(table.pool[u]);
  }
  return GeneratorSet(space, std::move(desirable));
}

namespace {

// Class ids of the pool under a representation map (equal ids = equal images).
template <class Image, class Map>
std::pair<std::vector<Image>, std::vector<std::size_t>> image_classes(const std::vector<Gamble>& pool, Map map) {
  std::vector<Image> images;
  images.reserve(pool.size());
  for (const auto& g : pool) images.push_back(map(g));
  std::vector<Image> distinct = images;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> ids(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    ids[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), images[i]) - distinct.begin());
  }
  return {std::move(distinct), std::move(ids)};
}

std::vector<std::size_t> mapped(const std::vector<std::size_t>& set, const std::vector<std::size_t>& ids) {
  std::vector<std::size_t> out;
  out.reserve(set.size());
  for (std::size_t i : set) out.push_back(ids[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class Image, class Map>
ChoiceTable<Image> represent_impl(const GambleChoiceTable& table, Map map) {
  auto [distinct, ids] = image_classes<Image>(table.pool, map);
  std::map<std::vector<std::size_t>, std::pair<std::vector<std::size_t>, std::size_t>> by_key;
  for (std::size_t e = 0; e < table.entries.size(); ++e) {
    const auto& entry = table.entries[e];
    auto key = mapped(entry.options, ids);
    auto image = mapped(entry.chosen, ids);
    for (std::size_t o : entry.options) {
      const bool chosen = std::binary_search(entry.chosen.begin(), entry.chosen.end(), o);
      if (!chosen && std::binary_search(image.begin(), image.end(), ids[o])) {
        throw RepresentationConflict("unsaturated", {e},
                                     "entry " + std::to_string(e) + " rejects option " + std::to_string(o) +
                                         " but chooses an option with the same image");
      }
    }
    const auto [it, inserted] = by_key.emplace(key, std::pair{image, e});
    if (!inserted && it->second.first != image) {
      throw RepresentationConflict("well_definedness", {it->second.second, e},
                                   "entries " + std::to_string(it->second.second) + " and " + std::to_string(e) +
                                       " have the same image but choose different images");
    }
  }
  ChoiceTable<Image> out;
  out.pool = std::move(distinct);
  for (auto& [key, value] : by_key) out.entries.push_back(ChoiceEntry{key, value.first});
  return out;
}

template <class Image, class Map>
std::vector<Gamble> reconstruct_impl(const ChoiceTable<Image>& r, const std::vector<Gamble>& options, Map map) {
  std::map<Image, std::size_t> index;
  for (std::size_t i = 0; i < r.pool.size(); ++i) index.emplace(r.pool[i], i);
  std::vector<std::size_t> ids;
  for (const auto& f : options) {
    const auto it = index.find(map(f));
    if (it == index.end()) throw PreconditionFailed("reconstruct_choice: option image is not in the representing table");
    ids.push_back(it->second);
  }
  std::vector<std::size_t> key = ids;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  for (const auto& e : r.entries) {
    if (e.options != key) continue;
    std::vector<Gamble> chosen;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (std::binary_search(e.chosen.begin(), e.chosen.end(), ids[i])) chosen.push_back(options[i]);
    }
    return chosen;
  }
  throw PreconditionFailed("reconstruct_choice: option set image is not a key of the representing table");
}

}  // namespace

CompatibilityReport check_indifference_compatibility(const GambleChoiceTable& table) {
  CompatibilityReport report;
  if (table.pool.empty()) return report;
  auto [distinct, ids] = image_classes<CountGamble>(table.pool, [](const Gamble& g) { return hy_map(g); });
  std::optional<std::size_t> zero;
  for (std::size_t i = 0; i < table.pool.size(); ++i) {
    if (table.pool[i].is_zero()) zero = i;
  }
  std::map<std::vector<std::size_t>, std::pair<std::vector<std::size_t>, std::size_t>> by_key;
  for (std::size_t e = 0; e < table.entries.size(); ++e) {
    const auto& entry = table.entries[e];
    auto is_chosen = [&](std::size_t o) { return std::binary_search(entry.chosen.begin(), entry.chosen.end(), o); };
    const bool has_zero = zero && std::binary_search(entry.options.begin(), entry.options.end(), *zero);
    for (std::size_t a = 0; a < entry.options.size(); ++a) {
      for (std::size_t b = a + 1; b < entry.options.size(); ++b) {
        const std::size_t u = entry.options[a];
        const std::size_t v = entry.options[b];
        if (ids[u] != ids[v] || is_chosen(u) == is_chosen(v)) continue;
        const bool indifference = has_zero && (u == *zero || v == *zero);
        if (has_zero && !indifference && ids[u] == ids[*zero]) continue;  // reported via the 0-pair
        report.violations.push_back(CompatibilityViolation{
            indifference ? "indifference" : "saturation", {e}, {u, v},
            "options " + std::to_string(u) + " and " + std::to_string(v) +
                " are indifferent but treated differently in entry " + std::to_string(e)});
      }
    }
    auto key = mapped(entry.options, ids);
    auto image = mapped(entry.chosen, ids);
    const auto [it, inserted] = by_key.emplace(key, std::pair{image, e});
    if (!inserted && it->second.first != image) {
      report.violations.push_back(CompatibilityViolation{
          "well_definedness", {it->second.second, e}, {},
          "entries " + std::to_string(it->second.second) + " and " + std::to_string(e) +
              " have class-equal option sets but choose different classes"});
    }
  }
  return report;
}

CountChoiceTable represent_choice(const GambleChoiceTable& table) {
  return represent_impl<CountGamble>(table, [](const Gamble& g) { return hy_map(g); });
}

PolyChoiceTable represent_choice_poly(const GambleChoiceTable& table) {
  return represent_impl<BernsteinPoly>(table, [](const Gamble& g) { return mn_map(g); });
}

std::vector<Gamble> reconstruct_choice(const CountChoiceTable& r, const std::vector<Gamble>& options) {
  return reconstruct_impl(r, options, [](const Gamble& g) { return hy_map(g); });
}

std::vector<Gamble> reconstruct_choice_poly(const PolyChoiceTable& r, const std::vector<Gamble>& options) {
  return reconstruct_impl(r, options, [](const Gamble& g) { return mn_map(g); });
}

GambleChoiceTable choice_from_desirability(const GeneratorSet& model, std::vector<Gamble> pool,
                                           const std::vector<std::vector<std::size_t>>& domain) {
  const ConeModel cone = model.cone();
  const std::size_t n = pool.size();
  GambleChoiceTable table;
  table.pool = std::move(pool);
  // prefers[v][u]: v - u is desirable.
  std::vector<std::vector<std::optional<bool>>> prefers(n, std::vector<std::optional<bool>>(n));
  auto preferred = [&](std::size_t v, std::size_t u) {
    if (!prefers[v][u]) prefers[v][u] = cone.member(gamble_sub(table.pool[v], table.pool[u]).values()).member;
    return *prefers[v][u];
  };
  for (const auto& options : domain) {
    ChoiceEntry entry{options, {}};
    for (std::size_t u : options) {
      const bool dominated =
          std::any_of(options.begin(), options.end(), [&](std::size_t v) { return v != u && preferred(v, u); });
      if (!dominated) entry.chosen.push_back(u);
    }
    table.entries.push_back(std::move(entry));
  }
  normalize_table(table);
  return table;
}

std::vector<std::vector<std::size_t>> all_nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<bool> select(n, false);
    std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (select[i]) subset.push_back(i);
      }
      out.push_back(std::move(subset));
    } while (std::prev_permutation(select.begin(), select.end()));
  }
  return out;
}

}  // namespace exchg
