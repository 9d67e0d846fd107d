#include "exchg/oracles.hpp"

#include <set>

#include "exchg/permutations.hpp"

namespace exchg {

namespace {

constexpr std::size_t kMaxConstraints = 200000;

/// a.x <= b, or a.x = b when `equality`.
struct Constraint {
  Vector a;
  Rational b;
  bool equality = false;
};

bool all_zero(const Vector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v.is_zero(); });
}

// p + factor * q, coefficientwise.
Constraint combine(const Constraint& p, const Rational& factor, const Constraint& q) {
  Constraint out{p.a, p.b, p.equality};
  out.b.add_product(factor, q.b);
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    if (!q.a[i].is_zero()) out.a[i].add_product(factor, q.a[i]);
  }
  return out;
}

// Scales an inequality so its first nonzero coefficient has absolute value 1.
void normalize(Constraint& c) {
  for (const auto& v : c.a) {
    if (v.is_zero()) continue;
    const Rational s = Rational(1) / abs(v);
    for (auto& w : c.a) w *= s;
    c.b *= s;
    return;
  }
}

bool fm_solve(std::size_t vars, std::vector<Constraint> system) {
  // Equalities first: substitute one variable per equality.
  while (true) {
    auto eq = std::find_if(system.begin(), system.end(), [](const Constraint& c) { return c.equality; });
    if (eq == system.end()) break;
    const Constraint pivot = *eq;
    system.erase(eq);
    std::size_t j = 0;
    while (j < vars && pivot.a[j].is_zero()) ++j;
    if (j == vars) {
      if (!pivot.b.is_zero()) return false;
      continue;
    }
    for (auto& c : system) {
      if (c.a[j].is_zero()) continue;
      c = combine(c, -(c.a[j] / pivot.a[j]), pivot);
    }
  }
  std::vector<Constraint> current;
  for (auto& c : system) {
    if (all_zero(c.a)) {
      if (c.b.sign() < 0) return false;
      continue;
    }
    normalize(c);
    current.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < vars; ++j) {
    std::vector<const Constraint*> pos;
    std::vector<const Constraint*> neg;
    std::set<std::pair<Vector, Rational>> seen;
    std::vector<Constraint> next;
    auto keep = [&](Constraint c) {
      if (all_zero(c.a)) return c.b.sign() >= 0;
      normalize(c);
      if (seen.emplace(c.a, c.b).second) next.push_back(std::move(c));
      if (next.size() > kMaxConstraints) throw BudgetExceeded("fm: constraint explosion");
      return true;
    };
    for (const auto& c : current) {
      const int s = c.a[j].sign();
      if (s > 0) {
        pos.push_back(&c);
      } else if (s < 0) {
        neg.push_back(&c);
      } else if (!keep(c)) {
        return false;
      }
    }
    for (const Constraint* p : pos) {
      for (const Constraint* n : neg) {
        const Rational factor = p->a[j] / -n->a[j];
        if (!keep(combine(*p, factor, *n))) return false;
      }
    }
    current = std::move(next);
  }
  return true;
}

Constraint row(std::size_t vars) { return Constraint{Vector(vars), Rational(), false}; }

void add_nonnegativity(std::vector<Constraint>& system, std::size_t vars, std::size_t first, std::size_t count) {
  for (std::size_t k = first; k < first + count; ++k) {
    Constraint c = row(vars);
    c.a[k] = -1;
    system.push_back(std::move(c));
  }
}

void check_budget(std::size_t dimension, std::size_t generators) {
  if (dimension > kFmMaxDimension || generators > kFmMaxGenerators) {
    throw BudgetExceeded("fm oracle: instance above " + std::to_string(kFmMaxDimension) + " dimensions or " +
                         std::to_string(kFmMaxGenerators) + " generators");
  }
}

bool in_span(const std::vector<Vector>& basis, const Vector& target) {
  const std::size_t vars = basis.size();
  std::vector<Constraint> system;
  for (std::size_t i = 0; i < target.size(); ++i) {
    Constraint c = row(vars);
    for (std::size_t k = 0; k < vars; ++k) c.a[k] = basis[k][i];
    c.b = target[i];
    c.equality = true;
    system.push_back(std::move(c));
  }
  return fm_solve(vars, std::move(system));
}

}  // namespace

bool fm_feasible(const std::vector<Vector>& generators, const Vector& target) {
  check_budget(target.size(), generators.size());
  for (const auto& g : generators) {
    if (g.size() != target.size()) throw SpaceMismatch("fm_feasible: dimension mismatch");
  }
  const std::size_t vars = generators.size();
  std::vector<Constraint> system;
  for (std::size_t i = 0; i < target.size(); ++i) {
    Constraint c = row(vars);
    for (std::size_t k = 0; k < vars; ++k) c.a[k] = generators[k][i];
    c.b = target[i];
    c.equality = true;
    system.push_back(std::move(c));
  }
  add_nonnegativity(system, vars, 0, vars);
  return fm_solve(vars, std::move(system));
}

bool fm_cone_member(const ConeModel& model, const Vector& target) {
  const auto& a = model.desirable();
  const auto& b = model.indifferent();
  const std::size_t d = model.dimension();
  check_budget(d, a.size() + b.size());
  if (target.size() != d) throw SpaceMismatch("fm_cone_member: dimension mismatch");
  const std::size_t vars = a.size() + b.size();

  // sum lambda*a + sum mu*b <= rhs pointwise; the gap is the indicator slack.
  auto pointwise = [&](const Vector& rhs) {
    std::vector<Constraint> system;
    for (std::size_t x = 0; x < d; ++x) {
      Constraint c = row(vars);
      for (std::size_t k = 0; k < a.size(); ++k) c.a[k] = a[k][x];
      for (std::size_t k = 0; k < b.size(); ++k) c.a[a.size() + k] = b[k][x];
      c.b = rhs[x];
      system.push_back(std::move(c));
    }
    add_nonnegativity(system, vars, 0, a.size());
    return system;
  };

  if (!in_span(b, target)) return fm_solve(vars, pointwise(target));

  // target is indifferent: membership needs a nontrivial combination at 0.
  if (!a.empty()) {
    auto system = pointwise(Vector(d));
    Constraint sum = row(vars);
    for (std::size_t k = 0; k < a.size(); ++k) sum.a[k] = 1;
    sum.b = 1;
    sum.equality = true;
    system.push_back(std::move(sum));
    if (fm_solve(vars, std::move(system))) return true;
  }
  if (b.empty()) return false;
  // a nonzero nonpositive vector in span(B)
  std::vector<Constraint> system;
  Constraint total = row(b.size());
  for (std::size_t x = 0; x < d; ++x) {
    Constraint c = row(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
      c.a[k] = b[k][x];
      total.a[k] += b[k][x];
    }
    system.push_back(std::move(c));
  }
  total.b = -1;
  total.equality = true;
  system.push_back(std::move(total));
  return fm_solve(b.size(), std::move(system));
}

bool fm_coherent(const ConeModel& model) { return !fm_cone_member(model, Vector(model.dimension())); }

bool brute_exchangeable(const GeneratorSet& a) {
  if (a.generators().empty()) return true;
  const ConeModel cone = a.cone();
  const std::vector<Rational> scales{1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  const IndifferenceBasis basis = indifference_basis(a.space());
  for (const auto& g : a.generators()) {
    for (const auto& b : basis.vectors) {
      for (const auto& s : scales) {
        if (!cone.member(vec_add(g.values(), vec_scale(s, b.values()))).member) return false;
      }
    }
  }
  return true;
}

}  // namespace exchg
