// Copyright 2026 The imprecise-ror Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ror/properties.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "ror/dominance.hpp"
#include "ror/group_engine.hpp"
#include "ror/robustness.hpp"
#include "ror/ror_engine.hpp"

namespace ror {

bool PropertyReport::passed() const { return failures() == 0; }

long PropertyReport::failures() const {
  long f = 0;
  for (const auto& c : clauses) f += c.failures;
  return f;
}

bool PropertyReport::passed(const std::string& prefix) const {
  for (const auto& c : clauses)
    if (c.name.starts_with(prefix) && c.failures) return false;
  return true;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

PreferenceStatement propose(std::mt19937_64& rng, const PerformanceTable& t,
                            const std::vector<std::string>& ref, const std::string& author,
                            std::size_t serial) {
  constexpr StatementKind kinds[] = {
      StatementKind::holistic_strict,       StatementKind::holistic_strict,
      StatementKind::holistic_indifferent,  StatementKind::intensity_strict,
      StatementKind::intensity_indifferent, StatementKind::marginal_strict,
      StatementKind::marginal_indifferent,  StatementKind::marginal_intensity_strict,
      StatementKind::marginal_intensity_indifferent,
  };
  PreferenceStatement s;
  s.kind = kinds[uniform(rng, 0, static_cast<int>(std::size(kinds)) - 1)];
  s.id = author + "_s" + std::to_string(serial);
  s.author = author;
  auto pick_pair = [&] {
    const int r = static_cast<int>(ref.size());
    const int x = uniform(rng, 0, r - 1);
    int y = uniform(rng, 0, r - 2);
    if (y >= x) ++y;
    s.operands.push_back(ref[static_cast<std::size_t>(x)]);
    s.operands.push_back(ref[static_cast<std::size_t>(y)]);
  };
  pick_pair();
  if (is_intensity(s.kind)) pick_pair();
  if (is_marginal(s.kind))
    s.criterion = t.criteria()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(t.num_criteria()) - 1))].id;
  return s;
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, const GeneratorOptions& opts) {
  for (;;) {
    const int na = uniform(rng, 2, opts.max_alternatives);
    const int m = uniform(rng, 1, opts.max_criteria);
    const int n = uniform(rng, 1, opts.max_n);
    std::vector<std::string> crits;
    for (int j = 0; j < m; ++j) crits.push_back("g" + std::to_string(j + 1));
    std::vector<std::pair<std::string, std::vector<std::vector<double>>>> rows;
    for (int a = 0; a < na; ++a) {
      std::vector<std::vector<double>> cells;
      for (int j = 0; j < m; ++j) {
        std::vector<double> pts;
        if (uniform(rng, 0, 3) == 0) {
          pts.assign(static_cast<std::size_t>(n), uniform(rng, 0, opts.value_span));
        } else {
          for (int i = 0; i < n; ++i) pts.push_back(uniform(rng, 0, opts.value_span));
          std::sort(pts.begin(), pts.end());
        }
        cells.push_back(std::move(pts));
      }
      rows.emplace_back(std::string(1, static_cast<char>('a' + a)), std::move(cells));
    }
    PerformanceTable table = numeric_table(n, crits, rows);
    const CharacteristicGrid grid = build_grid(table);
    bool spread = false;
    for (std::size_t j = 0; j < grid.values.size(); ++j) spread = spread || grid.levels(j) > 1;
    if (!spread) continue;

    Instance inst{std::move(table), {}, {}};
    std::vector<std::string> ref;
    for (std::size_t a : inst.table.reference_set()) ref.push_back(inst.table.alternative_id(a));
    const int dms = uniform(rng, 1, std::max(1, opts.max_dms));
    for (int d = 1; d <= dms; ++d) {
      const std::string author = "d" + std::to_string(d);
      inst.dms.push_back(author);
      std::vector<PreferenceStatement> own;
      const int attempts = uniform(rng, 0, opts.max_statements);
      for (int s = 0; s < attempts; ++s) {
        own.push_back(propose(rng, inst.table, ref, author, own.size() + 1));
        if (!check_compatibility(inst.table, own).compatible) own.pop_back();
      }
      inst.statements.insert(inst.statements.end(), own.begin(), own.end());
    }
    return inst;
  }
}

namespace {

// Clauses live in a deque so references stay valid while new names are
// registered; counts are merged into the report on destruction.
class Tally {
 public:
  Tally(PropertyReport& r, std::string context) : report_(r), context_(std::move(context)) {}
  Tally(const Tally&) = delete;
  Tally& operator=(const Tally&) = delete;

  ~Tally() {
    for (auto& c : local_) {
      auto it = std::find_if(report_.clauses.begin(), report_.clauses.end(),
                             [&](const ClauseResult& r) { return r.name == c.name; });
      if (it == report_.clauses.end()) {
        report_.clauses.push_back(std::move(c));
        continue;
      }
      it->checks += c.checks;
      if (c.failures && !it->failures) it->first_failure = c.first_failure;
      it->failures += c.failures;
    }
  }

  ClauseResult& operator[](const std::string& name) {
    for (auto& c : local_)
      if (c.name == name) return c;
    local_.push_back({name, 0, 0, {}});
    return local_.back();
  }

  template <class Describe>
  void expect(ClauseResult& c, bool ok, Describe&& describe) {
    ++c.checks;
    if (ok) return;
    if (c.failures++ == 0) c.first_failure = context_ + ": " + describe();
  }

 private:
  PropertyReport& report_;
  std::string context_;
  std::deque<ClauseResult> local_;
};

struct Dominances {
  int n;
  RelationMatrix normal;
  std::vector<RelationMatrix> ik;
  const RelationMatrix& operator()(int i, int k) const {
    return ik[static_cast<std::size_t>((i - 1) * n + (k - 1))];
  }
};

struct Preferences {
  int n;
  RelationMatrix nc, pc;
  std::vector<RelationMatrix> nik, pik;
  const RelationMatrix& N(int i, int k) const { return nik[static_cast<std::size_t>((i - 1) * n + (k - 1))]; }
  const RelationMatrix& P(int i, int k) const { return pik[static_cast<std::size_t>((i - 1) * n + (k - 1))]; }
};

Dominances dominances(const PerformanceTable& t) {
  Dominances d{t.n(), dominance_matrix(t, DominanceQuery::normal()), {}};
  for (int i = 1; i <= t.n(); ++i)
    for (int k = 1; k <= t.n(); ++k) d.ik.push_back(dominance_matrix(t, DominanceQuery::pair(i, k)));
  return d;
}

Preferences preferences(RorEngine& e) {
  const int n = e.table().n();
  Preferences p{n, {}, {}, {}, {}};
  p.nik.resize(static_cast<std::size_t>(n * n));
  p.pik.resize(static_cast<std::size_t>(n * n));
  // Extreme indices first: they bound every other relation.
  std::vector<std::pair<int, int>> order = {{1, n}, {n, 1}};
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      if (!((i == 1 && k == n) || (i == n && k == 1))) order.emplace_back(i, k);
  for (auto [i, k] : order) {
    const auto slot = static_cast<std::size_t>((i - 1) * n + (k - 1));
    p.nik[slot] = e.relation(Family::necessary, QueryIndex::pair(i, k));
    p.pik[slot] = e.relation(Family::possible, QueryIndex::pair(i, k));
  }
  p.nc = e.relation(Family::necessary, QueryIndex::whole());
  p.pc = e.relation(Family::possible, QueryIndex::whole());
  return p;
}

std::string pair_text(const RelationMatrix& m, std::size_t a, std::size_t b) {
  return m.order()[a] + "," + m.order()[b];
}

std::string triple_text(const RelationMatrix& m, std::size_t a, std::size_t b, std::size_t c) {
  return m.order()[a] + "," + m.order()[b] + "," + m.order()[c];
}

std::string idx_text(std::initializer_list<int> v) {
  std::string s = "(";
  bool first = true;
  for (int x : v) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

// x(a,b) and y(b,c) => z(a,c) over all triples.
void chain(Tally& t, ClauseResult& c, const RelationMatrix& x, const RelationMatrix& y,
           const RelationMatrix& z, const std::string& where = {}) {
  const std::size_t na = x.size();
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      if (!x(a, b)) continue;
      for (std::size_t d = 0; d < na; ++d)
        if (y(b, d)) t.expect(c, z(a, d), [&] { return triple_text(x, a, b, d) + where; });
    }
}

void within(Tally& t, ClauseResult& c, const RelationMatrix& x, const RelationMatrix& y,
            const std::string& where = {}) {
  const auto [a, b] = x.first_not_in(y);
  t.expect(c, a == x.size(), [&, a = a, b = b] { return pair_text(x, a, b) + where; });
}

// a x b or b y a.
void either(Tally& t, ClauseResult& c, const RelationMatrix& x, const RelationMatrix& y,
            const std::string& where = {}) {
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      t.expect(c, x(a, b) || y(b, a), [&] { return pair_text(x, a, b) + where; });
}

void reflexive(Tally& t, ClauseResult& c, const RelationMatrix& x, const std::string& where = {}) {
  for (std::size_t a = 0; a < x.size(); ++a)
    t.expect(c, x(a, a), [&] { return pair_text(x, a, a) + where; });
}

void transitive(Tally& t, ClauseResult& c, const RelationMatrix& x, const std::string& where = {}) {
  chain(t, c, x, x, x, where);
}

void strongly_complete(Tally& t, ClauseResult& c, const RelationMatrix& x, const std::string& where = {}) {
  either(t, c, x, x, where);
}

void negatively_transitive(Tally& t, ClauseResult& c, const RelationMatrix& x,
                           const std::string& where = {}) {
  const std::size_t na = x.size();
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      if (x(a, b)) continue;
      for (std::size_t d = 0; d < na; ++d)
        if (!x(b, d)) t.expect(c, !x(a, d), [&] { return triple_text(x, a, b, d) + where; });
    }
}

void dominance_laws(Tally& t, const Dominances& D) {
  const int n = D.n;
  auto& refl = t["dominance: D(i,k) reflexive for i>=k"];
  auto& trans = t["dominance: D(i,k) transitive for i<=k"];
  auto& preorder = t["dominance: D(i,i) partial preorder"];
  auto& incl = t["dominance: D(i,k) within D(r,s) for r>=i, s<=k"];
  auto& mixed = t["dominance: D(i,k) then D(i1,k1) gives D(r,s) for k>=i1, r>=i, s<=k1"];
  auto& normal_pre = t["dominance: D partial preorder"];
  auto& ik_then_d = t["dominance: D(i,k) then D gives D(s,t) for s>=i, t<=k"];
  auto& d_then_ik = t["dominance: D then D(i,k) gives D(s,t) for s>=i, t<=k"];
  auto& meet = t["dominance: D equals the intersection of D(i,i)"];
  auto& chain_d = t["dominance: D(1,n) within D within D(n,1)"];
  auto& chain_ik = t["dominance: D(1,n) within D(i,k) within D(n,1)"];

  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      const std::string w = " at " + idx_text({i, k});
      if (i >= k) reflexive(t, refl, D(i, k), w);
      if (i <= k) transitive(t, trans, D(i, k), w);
      if (i == k) {
        reflexive(t, preorder, D(i, i), w);
        transitive(t, preorder, D(i, i), w);
      }
      for (int r = i; r <= n; ++r)
        for (int s = 1; s <= k; ++s) {
          const std::string w2 = w + " " + idx_text({r, s});
          within(t, incl, D(i, k), D(r, s), w2);
          chain(t, ik_then_d, D(i, k), D.normal, D(r, s), w2);
          chain(t, d_then_ik, D.normal, D(i, k), D(r, s), w2);
        }
      for (int i1 = 1; i1 <= k; ++i1)
        for (int k1 = 1; k1 <= n; ++k1)
          for (int r = i; r <= n; ++r)
            for (int s = 1; s <= k1; ++s)
              chain(t, mixed, D(i, k), D(i1, k1), D(r, s), w + " " + idx_text({i1, k1, r, s}));
      within(t, chain_ik, D(1, n), D(i, k), w);
      within(t, chain_ik, D(i, k), D(n, 1), w);
    }
  reflexive(t, normal_pre, D.normal);
  transitive(t, normal_pre, D.normal);
  RelationMatrix inter = D(1, 1);
  for (int i = 2; i <= n; ++i) inter = inter.intersect(D(i, i));
  t.expect(meet, inter.same_bits(D.normal), [] { return std::string("matrices differ"); });
  within(t, chain_d, D(1, n), D.normal);
  within(t, chain_d, D.normal, D(n, 1));
}

void value_laws(Tally& t, const RorEngine& e, std::uint64_t seed, int samples) {
  auto& mono = t["preference: U(a^(i)) >= U(a^(k)) for i>=k"];
  auto& bracket = t["preference: 0 <= U(a^(1)) <= U(a) <= U(a^(n)) <= 1"];
  constexpr double tol = 1e-8;
  const int n = e.table().n();
  for (const auto& x : sample_vertices(e, samples, seed)) {
    for (std::size_t a = 0; a < e.table().num_alternatives(); ++a) {
      std::vector<double> u;
      for (int i = 1; i <= n; ++i) u.push_back(e.side_utility(a, QueryIndex::pair(i, i), true).evaluate(x));
      const double whole = e.side_utility(a, QueryIndex::whole(), true).evaluate(x);
      for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k)
          t.expect(mono, u[static_cast<std::size_t>(i - 1)] >= u[static_cast<std::size_t>(k - 1)] - tol,
                   [&] { return e.table().alternative_id(a) + " " + idx_text({i, k}); });
      t.expect(bracket,
               u.front() >= -tol && u.front() <= whole + tol && whole <= u.back() + tol && u.back() <= 1 + tol,
               [&] { return e.table().alternative_id(a); });
    }
  }
}

void preference_laws(Tally& t, const Dominances& D, const Preferences& R) {
  const int n = R.n;
  const auto& N = R.nc;
  const auto& P = R.pc;
  const auto& Dn = D.normal;

  within(t, t["preference: N within P"], N, P);
  auto& ik_np = t["preference: N(i,k) within P(i,k)"];
  auto& n_pre = t["preference: N partial preorder"];
  reflexive(t, n_pre, N);
  transitive(t, n_pre, N);
  strongly_complete(t, t["preference: P strongly complete"], P);
  negatively_transitive(t, t["preference: P negatively transitive"], P);
  either(t, t["preference: aNb or bPa"], N, P);
  within(t, t["preference: D within N"], Dn, N);
  chain(t, t["preference: N then P gives P"], N, P, P);
  chain(t, t["preference: P then N gives P"], P, N, P);
  chain(t, t["preference: D then N gives N"], Dn, N, N);
  chain(t, t["preference: N then D gives N"], N, Dn, N);
  chain(t, t["preference: D then P gives P"], Dn, P, P);
  chain(t, t["preference: P then D gives P"], P, Dn, P);

  auto& dom_nik = t["preference: D(i,k) within N(i,k)"];
  auto& c16 = t["preference: N(i,n) then N gives N(r,1) for r>=i"];
  auto& c17 = t["preference: N then N(1,k) gives N(n,r) for r<=k"];
  auto& c18 = t["preference: P(i,n) then N gives P(r,1) for r>=i"];
  auto& c19 = t["preference: N then P(1,k) gives P(n,r) for r<=k"];
  auto& c20 = t["preference: N(i,n) then P gives P(r,1) for r>=i"];
  auto& c21 = t["preference: P then N(1,k) gives P(n,r) for r<=k"];
  auto& c22 = t["preference: D(i,n) then N gives N(r,1) for r>=i"];
  auto& c23 = t["preference: N then D(1,k) gives N(n,r) for r<=k"];
  auto& c24 = t["preference: D(i,n) then P gives P(r,1) for r>=i"];
  auto& c25 = t["preference: P then D(1,k) gives P(n,r) for r<=k"];
  auto& c26 = t["preference: D then N(1,k) gives N(n,r) for r<=k"];
  auto& c27 = t["preference: N(i,n) then D gives N(r,1) for r>=i"];
  auto& c28 = t["preference: D then P(1,k) gives P(n,r) for r<=k"];
  auto& c29 = t["preference: P(i,n) then D gives P(r,1) for r>=i"];
  for (int i = 1; i <= n; ++i)
    for (int r = i; r <= n; ++r) {
      const std::string w = " " + idx_text({i, r});
      chain(t, c16, R.N(i, n), N, R.N(r, 1), w);
      chain(t, c18, R.P(i, n), N, R.P(r, 1), w);
      chain(t, c20, R.N(i, n), P, R.P(r, 1), w);
      chain(t, c22, D(i, n), N, R.N(r, 1), w);
      chain(t, c24, D(i, n), P, R.P(r, 1), w);
      chain(t, c27, R.N(i, n), Dn, R.N(r, 1), w);
      chain(t, c29, R.P(i, n), Dn, R.P(r, 1), w);
    }
  for (int k = 1; k <= n; ++k)
    for (int r = 1; r <= k; ++r) {
      const std::string w = " " + idx_text({k, r});
      chain(t, c17, N, R.N(1, k), R.N(n, r), w);
      chain(t, c19, N, R.P(1, k), R.P(n, r), w);
      chain(t, c21, P, R.N(1, k), R.P(n, r), w);
      chain(t, c23, N, D(1, k), R.N(n, r), w);
      chain(t, c25, P, D(1, k), R.P(n, r), w);
      chain(t, c26, Dn, R.N(1, k), R.N(n, r), w);
      chain(t, c28, Dn, R.P(1, k), R.P(n, r), w);
    }

  auto& n_refl = t["preference: N(i,k) reflexive for i>=k"];
  auto& n_trans = t["preference: N(i,k) transitive for i<=k"];
  auto& n_pre_ii = t["preference: N(i,i) partial preorder"];
  auto& compl_ik = t["preference: aN(i,k)b or bP(k,i)a"];
  auto& p_sc = t["preference: P(i,k) strongly complete for i>=k"];
  auto& p_nt = t["preference: P(i,k) negatively transitive for i>=k"];
  auto& n_incl = t["preference: N(i,k) within N(i1,k1) for i1>=i, k1<=k"];
  auto& p_incl = t["preference: P(i,k) within P(i1,k1) for i1>=i, k1<=k"];
  auto& n_sand = t["preference: N(1,n) within N(i,k) within N(n,1)"];
  auto& p_sand = t["preference: P(1,n) within P(i,k) within P(n,1)"];
  auto& c41 = t["preference: N(i,k) then N(i1,k1) gives N(r,s) for k>=i1, r>=i, s<=k1"];
  auto& c42 = t["preference: N(i,k) then P(i1,k1) gives P(r,s) for k>=i1, r>=i, s<=k1"];
  auto& c43 = t["preference: P(i,k) then N(i1,k1) gives P(r,s) for k>=i1, r>=i, s<=k1"];
  auto& c44 = t["preference: D(i,k) then N(i1,k1) gives N(r,s) for k>=i1, r>=i, s<=k1"];
  auto& c45 = t["preference: N(i,k) then D(i1,k1) gives N(r,s) for k>=i1, r>=i, s<=k1"];
  auto& c46 = t["preference: D(i,k) then P(i1,k1) gives P(r,s) for k>=i1, r>=i, s<=k1"];
  auto& c47 = t["preference: P(i,k) then D(i1,k1) gives P(r,s) for k>=i1, r>=i, s<=k1"];
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      const std::string w = " at " + idx_text({i, k});
      within(t, ik_np, R.N(i, k), R.P(i, k), w);
      within(t, dom_nik, D(i, k), R.N(i, k), w);
      if (i >= k) {
        reflexive(t, n_refl, R.N(i, k), w);
        strongly_complete(t, p_sc, R.P(i, k), w);
        negatively_transitive(t, p_nt, R.P(i, k), w);
      }
      if (i <= k) transitive(t, n_trans, R.N(i, k), w);
      if (i == k) {
        reflexive(t, n_pre_ii, R.N(i, i), w);
        transitive(t, n_pre_ii, R.N(i, i), w);
      }
      either(t, compl_ik, R.N(i, k), R.P(k, i), w);
      for (int i1 = i; i1 <= n; ++i1)
        for (int k1 = 1; k1 <= k; ++k1) {
          within(t, n_incl, R.N(i, k), R.N(i1, k1), w + " " + idx_text({i1, k1}));
          within(t, p_incl, R.P(i, k), R.P(i1, k1), w + " " + idx_text({i1, k1}));
        }
      within(t, n_sand, R.N(1, n), R.N(i, k), w);
      within(t, n_sand, R.N(i, k), R.N(n, 1), w);
      within(t, p_sand, R.P(1, n), R.P(i, k), w);
      within(t, p_sand, R.P(i, k), R.P(n, 1), w);
      for (int i1 = 1; i1 <= k; ++i1)
        for (int k1 = 1; k1 <= n; ++k1)
          for (int r = i; r <= n; ++r)
            for (int s = 1; s <= k1; ++s) {
              const std::string w2 = w + " " + idx_text({i1, k1, r, s});
              chain(t, c41, R.N(i, k), R.N(i1, k1), R.N(r, s), w2);
              chain(t, c42, R.N(i, k), R.P(i1, k1), R.P(r, s), w2);
              chain(t, c43, R.P(i, k), R.N(i1, k1), R.P(r, s), w2);
              chain(t, c44, D(i, k), R.N(i1, k1), R.N(r, s), w2);
              chain(t, c45, R.N(i, k), D(i1, k1), R.N(r, s), w2);
              chain(t, c46, D(i, k), R.P(i1, k1), R.P(r, s), w2);
              chain(t, c47, R.P(i, k), D(i1, k1), R.P(r, s), w2);
            }
    }
  auto& n_cl = t["preference: N(1,n) within N within N(n,1)"];
  within(t, n_cl, R.N(1, n), N);
  within(t, n_cl, N, R.N(n, 1));
  auto& p_cl = t["preference: P(1,n) within P within P(n,1)"];
  within(t, p_cl, R.P(1, n), P);
  within(t, p_cl, P, R.P(n, 1));
}

void lattice_laws(Tally& t, const Dominances& D, const Preferences& R) {
  const int n = R.n;
  std::map<std::string, const RelationMatrix*> rel = {
      {"DS", &D(1, n)},       {"D", &D.normal},       {"DW", &D(n, 1)},
      {"SN", &R.N(1, n)},     {"N", &R.nc},           {"WN", &R.N(n, 1)},
      {"SP", &R.P(1, n)},     {"P", &R.pc},           {"WP", &R.P(n, 1)},
  };
  const char* arcs[][2] = {{"DS", "D"}, {"D", "DW"}, {"SN", "N"}, {"N", "WN"}, {"SP", "P"}, {"P", "WP"},
                           {"DS", "SN"}, {"D", "N"}, {"DW", "WN"}, {"SN", "SP"}, {"N", "P"}, {"WN", "WP"}};
  for (const auto& [x, y] : arcs)
    within(t, t[std::string("lattice: ") + x + " within " + y], *rel[x], *rel[y]);

  const char* either_laws[][2] = {{"N", "P"}, {"SN", "WP"}, {"WN", "SP"}};
  for (const auto& [x, y] : either_laws)
    either(t, t[std::string("lattice: a") + x + "b or b" + y + "a"], *rel[x], *rel[y]);

  const char* chains[][3] = {
      {"SN", "N", "N"},   {"SN", "P", "P"},   {"N", "SN", "N"},   {"N", "SP", "P"},   {"SP", "N", "P"},
      {"P", "SN", "P"},   {"DS", "D", "DS"},  {"DS", "DW", "DW"}, {"DS", "SN", "SN"}, {"DS", "N", "N"},
      {"DS", "WN", "WN"}, {"DS", "SP", "SP"}, {"DS", "P", "P"},   {"DS", "WP", "WP"}, {"D", "DS", "DS"},
      {"D", "DW", "DW"},  {"D", "SN", "N"},   {"D", "SP", "P"},   {"DW", "D", "DW"},  {"DW", "SN", "WN"},
      {"DW", "SP", "WP"}, {"SN", "DS", "SN"}, {"SN", "D", "N"},   {"SN", "DW", "WN"}, {"SN", "WN", "WN"},
      {"SN", "SP", "SP"}, {"SN", "WP", "WP"}, {"N", "DS", "N"},   {"WN", "DS", "WN"}, {"WN", "SN", "WN"},
      {"WN", "SP", "WP"}, {"SP", "DS", "SP"}, {"SP", "D", "P"},   {"SP", "DW", "WP"}, {"SP", "SN", "SP"},
      {"SP", "WN", "WP"}, {"P", "DS", "P"},   {"WP", "DS", "WP"}, {"WP", "SN", "WP"},
  };
  for (const auto& [x, y, z] : chains)
    chain(t, t[std::string("lattice: ") + x + " then " + y + " gives " + z], *rel[x], *rel[y], *rel[z]);
}

// Group relations by coalition bitmask, outer/inner family and index.
class GroupTable {
 public:
  GroupTable(GroupEngine& g, int n) : g_(g), n_(n) {}

  const RelationMatrix& get(unsigned mask, Family outer, Family inner, const QueryIndex& idx) {
    auto key = std::make_tuple(mask, outer, inner, idx);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<std::string> coalition;
    for (std::size_t d = 0; d < g_.roster().size(); ++d)
      if (mask & (1u << d)) coalition.push_back(g_.roster()[d]);
    return cache_.emplace(key, g_.relation(coalition, outer, inner, idx)).first->second;
  }
  int n() const { return n_; }

 private:
  GroupEngine& g_;
  int n_;
  std::map<std::tuple<unsigned, Family, Family, QueryIndex>, RelationMatrix> cache_;
};

void group_laws(Tally& t, GroupEngine& g, int n) {
  const auto NEC = Family::necessary;
  const auto POS = Family::possible;
  const unsigned full = (1u << g.roster().size()) - 1;
  GroupTable G(g, n);

  auto& bullets1 = t["group: NN within NP within PP"];
  auto& bullets2 = t["group: NN within PN within PP"];
  auto& singleton = t["group: singleton coalition equals the DM relation"];
  auto& mono = t["group: index and family monotonicity"];
  auto& strong_n = t["group: SN,R within N,R within WN,R"];
  auto& strong_p = t["group: SP,R within P,R within WP,R"];
  auto& compl1 = t["group: aNN(i,k)b or bPP(k,i)a"];
  auto& compl2 = t["group: aNP(i,k)b or bPN(k,i)a"];
  auto& tr1 = t["group: N,R1 then N,R2 gives N,R for k>=i1"];
  auto& tr2 = t["group: N,R1 then P,R2 gives P,R for k>=i1"];
  auto& tr3 = t["group: P,R1 then N,R2 gives P,R for k>=i1"];

  std::vector<QueryIndex> indices = {QueryIndex::whole()};
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) indices.push_back(QueryIndex::pair(i, k));

  for (unsigned mask = 1; mask <= full; ++mask) {
    const std::string cw = " coalition " + std::to_string(mask);
    for (const auto& idx : indices) {
      const std::string w = cw + " " + (idx.classic ? std::string("classic") : idx_text({idx.i, idx.k}));
      within(t, bullets1, G.get(mask, NEC, NEC, idx), G.get(mask, NEC, POS, idx), w);
      within(t, bullets1, G.get(mask, NEC, POS, idx), G.get(mask, POS, POS, idx), w);
      within(t, bullets2, G.get(mask, NEC, NEC, idx), G.get(mask, POS, NEC, idx), w);
      within(t, bullets2, G.get(mask, POS, NEC, idx), G.get(mask, POS, POS, idx), w);
      if (std::has_single_bit(mask)) {
        const std::string& dm = g.roster()[static_cast<std::size_t>(std::countr_zero(mask))];
        for (Family outer : {NEC, POS}) {
          const RelationMatrix own = g.engine(dm).relation(outer, idx);
          for (Family inner : {NEC, POS})
            t.expect(singleton, G.get(mask, outer, inner, idx).same_bits(own), [&] { return w; });
        }
      }
    }
    for (Family inner : {NEC, POS}) {
      const std::string w = cw + (inner == NEC ? " inner N" : " inner P");
      within(t, strong_n, G.get(mask, NEC, inner, QueryIndex::strong(n)), G.get(mask, NEC, inner, QueryIndex::whole()), w);
      within(t, strong_n, G.get(mask, NEC, inner, QueryIndex::whole()), G.get(mask, NEC, inner, QueryIndex::weak(n)), w);
      within(t, strong_p, G.get(mask, POS, inner, QueryIndex::strong(n)), G.get(mask, POS, inner, QueryIndex::whole()), w);
      within(t, strong_p, G.get(mask, POS, inner, QueryIndex::whole()), G.get(mask, POS, inner, QueryIndex::weak(n)), w);
    }
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        const auto ik = QueryIndex::pair(i, k);
        const auto ki = QueryIndex::pair(k, i);
        const std::string w = cw + " " + idx_text({i, k});
        either(t, compl1, G.get(mask, NEC, NEC, ik), G.get(mask, POS, POS, ki), w);
        either(t, compl2, G.get(mask, NEC, POS, ik), G.get(mask, POS, NEC, ki), w);
        // Per-DM inclusion N within P and P within P; inner N may weaken to
        // P, inner P stays P.
        const std::pair<Family, Family> outers[] = {{NEC, NEC}, {NEC, POS}, {POS, POS}};
        const std::pair<Family, Family> inners[] = {{NEC, NEC}, {NEC, POS}, {POS, POS}};
        for (int i1 = i; i1 <= n; ++i1)
          for (int k1 = 1; k1 <= k; ++k1)
            for (auto [r1, r1p] : outers)
              for (auto [r2, r2p] : inners)
                within(t, mono, G.get(mask, r1, r2, ik), G.get(mask, r1p, r2p, QueryIndex::pair(i1, k1)),
                       w + " " + idx_text({i1, k1}));
        for (int i1 = 1; i1 <= k; ++i1)
          for (int k1 = 1; k1 <= n; ++k1)
            for (int r = i; r <= n; ++r)
              for (int s = 1; s <= k1; ++s) {
                const auto x1 = QueryIndex::pair(i1, k1);
                const auto rs = QueryIndex::pair(r, s);
                const std::string w2 = w + " " + idx_text({i1, k1, r, s});
                const std::pair<Family, Family> cases[] = {{NEC, NEC}, {NEC, POS}, {POS, NEC}};
                for (auto [q1, q2] : cases) {
                  const Family bar = (q1 == NEC && q2 == NEC) ? NEC : POS;
                  chain(t, tr1, G.get(mask, NEC, q1, ik), G.get(mask, NEC, q2, x1), G.get(mask, NEC, bar, rs), w2);
                  chain(t, tr2, G.get(mask, NEC, q1, ik), G.get(mask, POS, q2, x1), G.get(mask, POS, bar, rs), w2);
                  chain(t, tr3, G.get(mask, POS, q1, ik), G.get(mask, NEC, q2, x1), G.get(mask, POS, bar, rs), w2);
                }
              }
      }
  }
}

}  // namespace

void check_instance(const Instance& inst, PropertyReport& report, std::uint64_t seed,
                    const PropertyOptions& opts) {
  GroupEngine g(inst.table, inst.statements, inst.dms);
  {
    Tally t(report, "instance " + std::to_string(report.instances + 1));
    const Dominances D = dominances(inst.table);
    dominance_laws(t, D);

    for (std::size_t d = 0; d < inst.dms.size(); ++d) {
      RorEngine& e = g.engine(inst.dms[d]);
      if (!e.compatible()) continue;
      const Preferences R = preferences(e);
      value_laws(t, e, seed + d, opts.samples_per_dm);
      preference_laws(t, D, R);
      lattice_laws(t, D, R);
    }
    group_laws(t, g, inst.table.n());
  }
  for (const auto& dm : inst.dms) report.lp_calls += g.engine(dm).stats().lp_calls;
  ++report.instances;
}

PropertyReport check_properties(std::uint64_t seed, int instances, PropertyOptions opts) {
  PropertyReport report;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < instances; ++s) {
    const Instance inst = random_instance(rng, opts.generator);
    check_instance(inst, report, rng(), opts);
  }
  return report;
}

}  // namespace ror
