#include "cpo/cohomology.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>

#include "cpo/lattice.hpp"

namespace cpo {

namespace {

using lattice::BigInt;
using lattice::IntMatrix;
using lattice::IntVector;

void require_same_setup(const ValCocycle& f, const ValCocycle& g) {
  if (f.setup_ptr() != g.setup_ptr() && !(f.setup() == g.setup()))
    throw Error(ErrorCode::SetupMismatch, "cocycles live on different setups");
}

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::CapExhausted, "lattice entry exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// Unknowns c[sigma][m] for sigma != 1, index (sigma - 1) * r + m.
// Rows: c_sigma[m] + c_tau[sigma^-1(m)] - c_{sigma tau}[m] = target[sigma][tau][m].
IntMatrix coboundary_system(const GaloisSetup& setup) {
  const auto& g = setup.group();
  const std::size_t n = setup.order(), r = setup.ideal_count();
  const std::size_t cols = (n - 1) * r;
  IntMatrix rows;
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      for (Label m = 0; m < r; ++m) {
        IntVector row(cols);
        auto add = [&](Elem e, Label l, int coeff) {
          if (e != 0) row[(e - 1) * r + l] += coeff;
        };
        add(s, m, 1);
        add(t, setup.ideals().image(g.inverse(s), m), 1);
        add(g.mul(s, t), m, -1);
        rows.push_back(std::move(row));
      }
  return rows;
}

// Unknowns vals[sigma][tau][m] for sigma, tau != 1.
std::size_t cocycle_coord(std::size_t n, std::size_t r, Elem s, Elem t, Label m) {
  return ((s - 1) * (n - 1) + (t - 1)) * r + m;
}

IntMatrix cocycle_system(const GaloisSetup& setup) {
  const auto& g = setup.group();
  const std::size_t n = setup.order(), r = setup.ideal_count();
  const std::size_t cols = (n - 1) * (n - 1) * r;
  std::set<std::map<std::size_t, int>> seen;
  IntMatrix rows;
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      for (Elem c = 0; c < n; ++c)
        for (Label m = 0; m < r; ++m) {
          std::map<std::size_t, int> sparse;
          auto add = [&](Elem a, Elem b, Label l, int coeff) {
            if (a == 0 || b == 0) return;
            const auto k = cocycle_coord(n, r, a, b, l);
            if ((sparse[k] += coeff) == 0) sparse.erase(k);
          };
          // sigma(f(tau, gamma)) + f(sigma, tau gamma) - f(sigma, tau) - f(sigma tau, gamma)
          add(t, c, setup.ideals().image(g.inverse(s), m), 1);
          add(s, g.mul(t, c), m, 1);
          add(s, t, m, -1);
          add(g.mul(s, t), c, m, -1);
          if (sparse.empty() || !seen.insert(sparse).second) continue;
          IntVector row(cols);
          for (const auto& [k, v] : sparse) row[k] = v;
          rows.push_back(std::move(row));
        }
  return rows;
}

// Draws from a bounded range using only the fully specified mt19937_64
// output, so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Depth-first search for valid cocycles with entries in [0, bound].
//
// Every normalized valuation cocycle is a coboundary over Q: with
// S_sigma = sum_gamma f(sigma, gamma), summing the cocycle identity over gamma
// gives n f(sigma, tau) = S_sigma + sigma(S_tau) - S_{sigma tau}. The search
// assigns the integer vectors S_sigma one component at a time and checks each
// entry n f(sigma, tau)[m] (divisible by n, inside [0, n bound]) as soon as
// the three components it reads are known, and forward-checks entries left
// with a single unknown component. Different S can give the same table.
class BoxSearch {
 public:
  using Visit = std::function<bool(const ValTable&)>;

  BoxSearch(const GaloisSetup& setup, std::int64_t bound)
      : setup_(setup), bound_(bound), n_(setup.order()), r_(setup.ideal_count()) {
    const auto& g = setup.group();
    vars_ = (n_ - 1) * r_;
    width_ = static_cast<std::size_t>(bound * static_cast<std::int64_t>(n_ - 1)) + 1;
    touching_.resize(vars_);
    auto var = [&](Elem e, Label l) -> std::ptrdiff_t {
      return e == 0 ? -1 : static_cast<std::ptrdiff_t>((e - 1) * r_ + l);
    };
    for (Elem s = 1; s < n_; ++s)
      for (Elem t = 1; t < n_; ++t)
        for (Label m = 0; m < r_; ++m) {
          Check c{{var(s, m), var(t, setup.ideals().image(g.inverse(s), m)),
                   var(g.mul(s, t), m)}};
          for (std::size_t k = 0; k < 3; ++k)
            if (c.v[k] >= 0) touching_[static_cast<std::size_t>(c.v[k])].push_back(checks_.size());
          checks_.push_back(c);
        }
  }

  // Visits leaves until `visit` returns false or the node budget runs out.
  void run(Rng* rng, std::size_t budget, const Visit& visit) {
    budget_ = budget;
    stop_ = false;
    values_.assign(vars_, 0);
    assigned_.assign(vars_, false);
    if (vars_ == 0) {
      if (!visit(ValTable(n_, std::vector<ValVector>(n_, ValVector(r_))))) stop_ = true;
      return;
    }
    descend(Domains(vars_ * width_, 1), 0, rng, visit);
  }

 private:
  // One entry n f(s, t)[m] = S_s[m] + S_t[s^-1 m] - S_st[m]; -1 stands for S_1 = 0.
  struct Check {
    std::array<std::ptrdiff_t, 3> v;
  };
  static constexpr std::array<std::int64_t, 3> kSign{1, 1, -1};
  using Domains = std::vector<std::uint8_t>;

  bool entry_ok(std::int64_t e) const {
    const auto n = static_cast<std::int64_t>(n_);
    return e >= 0 && e <= n * bound_ && e % n == 0;
  }

  // Filters the domains of variables left alone in a check touched by `v`.
  bool propagate(Domains& dom, std::size_t v) const {
    for (auto ci : touching_[v]) {
      const auto& c = checks_[ci];
      std::int64_t known = 0;
      std::int64_t coeff = 0;
      std::ptrdiff_t open = -1;
      bool several = false;
      for (std::size_t k = 0; k < 3; ++k) {
        const auto x = c.v[k];
        if (x < 0) continue;
        if (assigned_[static_cast<std::size_t>(x)]) {
          known += kSign[k] * values_[static_cast<std::size_t>(x)];
        } else if (open < 0 || open == x) {
          open = x;
          coeff += kSign[k];
        } else {
          several = true;
        }
      }
      if (several) continue;
      if (open < 0) {
        if (!entry_ok(known)) return false;
        continue;
      }
      bool any = false;
      auto* d = &dom[static_cast<std::size_t>(open) * width_];
      for (std::size_t x = 0; x < width_; ++x) {
        if (d[x] && !entry_ok(known + coeff * static_cast<std::int64_t>(x))) d[x] = 0;
        any = any || d[x];
      }
      if (!any) return false;
    }
    return true;
  }

  void descend(const Domains& dom, std::size_t depth, Rng* rng, const Visit& visit) {
    if (stop_ || budget_ == 0) return;
    --budget_;
    if (depth == vars_) {
      leaf(visit);
      return;
    }
    // branch on the open variable with the fewest remaining values
    std::size_t best = vars_;
    std::size_t best_size = width_ + 1;
    for (std::size_t v = 0; v < vars_; ++v) {
      if (assigned_[v]) continue;
      const auto size = static_cast<std::size_t>(
          std::count(dom.begin() + static_cast<std::ptrdiff_t>(v * width_),
                     dom.begin() + static_cast<std::ptrdiff_t>((v + 1) * width_), 1));
      if (size < best_size) {
        best = v;
        best_size = size;
      }
    }
    std::vector<std::int64_t> order;
    for (std::size_t x = 0; x < width_; ++x)
      if (dom[best * width_ + x]) order.push_back(static_cast<std::int64_t>(x));
    if (rng) rng->shuffle(order);
    assigned_[best] = true;
    for (auto x : order) {
      values_[best] = x;
      Domains next = dom;
      if (propagate(next, best)) descend(next, depth + 1, rng, visit);
      if (stop_ || budget_ == 0) break;
    }
    assigned_[best] = false;
  }

  void leaf(const Visit& visit) {
    const auto& g = setup_.group();
    const auto n = static_cast<std::int64_t>(n_);
    ValTable vals(n_, std::vector<ValVector>(n_, ValVector(r_)));
    for (Elem s = 1; s < n_; ++s)
      for (Elem t = 1; t < n_; ++t)
        for (Label m = 0; m < r_; ++m) {
          const Label pulled = setup_.ideals().image(g.inverse(s), m);
          const Elem st = g.mul(s, t);
          const std::int64_t last = st == 0 ? 0 : values_[(st - 1) * r_ + m];
          vals[s][t][m] = (values_[(s - 1) * r_ + m] + values_[(t - 1) * r_ + pulled] - last) / n;
        }
    if (!visit(vals)) stop_ = true;
  }

  const GaloisSetup& setup_;
  std::int64_t bound_;
  std::size_t n_, r_, vars_ = 0, width_ = 0;
  std::vector<Check> checks_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::int64_t> values_;
  std::vector<bool> assigned_;
  std::size_t budget_ = 0;
  bool stop_ = false;
};

}  // namespace

ValTable CocycleLattice::to_table(const std::vector<std::int64_t>& coords) const {
  const std::size_t n = setup->order(), r = setup->ideal_count();
  ValTable vals(n, std::vector<ValVector>(n, ValVector(r)));
  for (Elem s = 1; s < n; ++s)
    for (Elem t = 1; t < n; ++t)
      for (Label m = 0; m < r; ++m) vals[s][t][m] = coords[cocycle_coord(n, r, s, t, m)];
  return vals;
}

std::vector<std::int64_t> CocycleLattice::to_coords(const ValTable& vals) const {
  const std::size_t n = setup->order(), r = setup->ideal_count();
  std::vector<std::int64_t> coords((n - 1) * (n - 1) * r);
  for (Elem s = 1; s < n; ++s)
    for (Elem t = 1; t < n; ++t)
      for (Label m = 0; m < r; ++m) coords[cocycle_coord(n, r, s, t, m)] = vals[s][t][m];
  return coords;
}

ValTable coboundary_of(const CoboundaryWitness& w, const GaloisSetup& setup) {
  const auto& g = setup.group();
  const std::size_t n = setup.order(), r = setup.ideal_count();
  if (w.cvecs.size() != n)
    throw Error(ErrorCode::InvalidArgument, "witness needs one vector per element");
  for (const auto& c : w.cvecs)
    if (c.size() != r) throw Error(ErrorCode::InvalidArgument, "witness vector length");
  if (!w.cvecs[0].is_unit())
    throw Error(ErrorCode::NotNormalized, "c_1 must be 1");
  ValTable out(n, std::vector<ValVector>(n));
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      out[s][t] = w.cvecs[s] + galois_act(s, w.cvecs[t], setup) - w.cvecs[g.mul(s, t)];
  return out;
}

namespace {

std::optional<CoboundaryWitness> solve_coboundary(const GaloisSetup& setup,
                                                  const ValTable& target) {
  const std::size_t n = setup.order(), r = setup.ideal_count();
  const std::size_t cols = (n - 1) * r;
  IntVector rhs;
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      for (Label m = 0; m < r; ++m) rhs.emplace_back(target[s][t][m]);
  CoboundaryWitness w{std::vector<ValVector>(n, ValVector(r))};
  if (cols == 0) {
    for (const auto& b : rhs)
      if (b != 0) return std::nullopt;
    return w;
  }
  const auto sol = lattice::solve(coboundary_system(setup), rhs, cols);
  if (!sol) return std::nullopt;
  for (Elem s = 1; s < n; ++s)
    for (Label m = 0; m < r; ++m) w.cvecs[s][m] = to_i64(sol->particular[(s - 1) * r + m]);
  if (coboundary_of(w, setup) != target)
    throw Error(ErrorCode::InternalInconsistency, "solver witness does not re-verify");
  return w;
}

}  // namespace

std::optional<CoboundaryWitness> is_cohomologous_K_valuation(const ValCocycle& f,
                                                             const ValCocycle& g) {
  require_same_setup(f, g);
  const std::size_t n = f.order();
  ValTable diff(n, std::vector<ValVector>(n));
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t) diff[s][t] = g.at(s, t) - f.at(s, t);
  return solve_coboundary(f.setup(), diff);
}

bool is_cohomologous_S_valuation(const ValCocycle& f, const ValCocycle& g) {
  require_same_setup(f, g);
  return f.table() == g.table();
}

CocycleLattice cocycle_lattice(SetupPtr setup, const std::optional<ValTable>& pin) {
  CocycleLattice lat;
  lat.setup = setup;
  const std::size_t n = setup->order(), r = setup->ideal_count();
  const std::size_t cols = (n - 1) * (n - 1) * r;
  if (cols > 0) {
    const auto kernel = lattice::integer_kernel(cocycle_system(*setup), cols);
    for (const auto& row : kernel) {
      std::vector<std::int64_t> v;
      for (const auto& e : row) v.push_back(to_i64(e));
      lat.basis.push_back(std::move(v));
    }
  }
  if (pin) {
    lat.particular = solve_coboundary(*setup, *pin);
    if (!lat.particular)
      throw Error(ErrorCode::Infeasible, "no integer coboundary reaches the pinned table");
  }
  return lat;
}

std::vector<ValCocycle> sample_cocycles(SetupPtr setup, std::int64_t max_exponent,
                                        std::size_t count, std::uint64_t seed) {
  return sample_cocycles(cocycle_lattice(std::move(setup)), max_exponent, count, seed);
}

std::vector<ValCocycle> sample_cocycles(const CocycleLattice& lat,
                                        std::int64_t max_exponent,
                                        std::size_t count, std::uint64_t seed) {
  if (max_exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent bound");
  constexpr std::size_t kNodeBudget = 20000;
  const std::size_t max_attempts = 20 * count + 50;
  Rng rng(seed);
  BoxSearch search(*lat.setup, max_exponent);
  std::vector<ValCocycle> out;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt)
    search.run(&rng, kNodeBudget, [&](const ValTable& vals) {
      out.push_back(ValCocycle::validate(lat.setup, vals));
      return false;
    });
  if (out.size() < count)
    throw Error(ErrorCode::CapExhausted, "found " + std::to_string(out.size()) + " of " +
                                             std::to_string(count) + " cocycles");
  return out;
}

std::vector<ValCocycle> enumerate_cocycles(const CocycleLattice& lat,
                                           std::int64_t max_exponent,
                                           std::size_t limit) {
  std::vector<ValCocycle> out;
  if (limit == 0) return out;
  std::set<ValTable> seen;
  BoxSearch search(*lat.setup, max_exponent);
  search.run(nullptr, std::numeric_limits<std::size_t>::max(), [&](const ValTable& vals) {
    if (seen.insert(vals).second) out.push_back(ValCocycle::validate(lat.setup, vals));
    return out.size() < limit;
  });
  return out;
}

}  // namespace cpo
