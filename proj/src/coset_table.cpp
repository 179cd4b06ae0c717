#include "vh/coset_table.hpp"

#include <deque>
#include <numeric>

#include "vh/errors.hpp"

namespace vh {

namespace {

constexpr Gen inv(Gen g) { return static_cast<Gen>(g ^ 1); }

std::vector<Gen> power_of(const std::vector<Gen>& w, int n) {
  std::vector<Gen> out;
  if (n >= 0) {
    for (int k = 0; k < n; ++k) out.insert(out.end(), w.begin(), w.end());
  } else {
    for (int k = 0; k < -n; ++k)
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  }
  return out;
}

std::vector<Gen> cat(std::initializer_list<std::vector<Gen>> parts) {
  std::vector<Gen> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

class Enumerator {
 public:
  explicit Enumerator(std::size_t cap) : cap_(cap) { new_coset(); }

  void run(const std::vector<std::vector<Gen>>& subgroup_gens,
           const std::vector<std::vector<Gen>>& relators) {
    for (const auto& w : subgroup_gens) scan_and_fill(0, w);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : relators) {
        if (!live(c)) break;
        scan_and_fill(static_cast<int>(c), r);
      }
      if (!live(c)) continue;
      for (int g = 0; g < 4; ++g)
        if (table_[c][g] < 0) define(static_cast<int>(c), static_cast<Gen>(g));
    }
  }

  std::vector<std::array<int, 4>> compact() {
    std::vector<int> renum(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) renum[c] = next++;
    std::vector<std::array<int, 4>> out;
    out.reserve(next);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::array<int, 4> row{};
      for (int g = 0; g < 4; ++g) row[g] = renum[rep(table_[c][g])];
      out.push_back(row);
    }
    return out;
  }

 private:
  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_coset() {
    if (table_.size() >= cap_)
      throw EnumerationOverflow("coset enumeration exceeded " + std::to_string(cap_) + " cosets");
    table_.push_back({-1, -1, -1, -1});
    parent_.push_back(static_cast<int>(table_.size() - 1));
    return static_cast<int>(table_.size() - 1);
  }

  void define(int c, Gen g) {
    int n = new_coset();
    table_[c][g] = n;
    table_[n][inv(g)] = c;
  }

  void scan_and_fill(int c, const std::vector<Gen>& w) {
    int f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int nxt = parent_[c];
      parent_[c] = r;
      c = nxt;
    }
    return r;
  }

  void merge(int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue_.push_back(l);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int e = queue_.front();
      queue_.pop_front();
      for (int gi = 0; gi < 4; ++gi) {
        Gen g = static_cast<Gen>(gi);
        int f = table_[e][g];
        if (f < 0) continue;
        table_[f][inv(g)] = -1;
        int mu = rep(e), nu = rep(f);
        if (table_[mu][g] >= 0) {
          merge(nu, table_[mu][g]);
        } else if (table_[nu][inv(g)] >= 0) {
          merge(mu, table_[nu][inv(g)]);
        } else {
          table_[mu][g] = nu;
          table_[nu][inv(g)] = mu;
        }
      }
    }
  }

  std::size_t cap_;
  std::vector<std::array<int, 4>> table_;
  std::vector<int> parent_;
  std::deque<int> queue_;
};

}  // namespace

const std::vector<std::vector<Gen>>& sl2_relators() {
  static const std::vector<std::vector<Gen>> rels = [] {
    const std::vector<Gen> ab{kA, kB}, aba{kA, kB, kA}, a{kA}, b{kB};
    const auto tau = power_of(ab, 3);
    return std::vector<std::vector<Gen>>{
        power_of(ab, 6),
        cat({tau, power_of(aba, -2)}),
        cat({tau, a, power_of(tau, -1), power_of(a, -1)}),
        cat({tau, b, power_of(tau, -1), power_of(b, -1)}),
    };
  }();
  return rels;
}

CosetTable build_coset_table(int i, std::size_t cap) {
  if (i != 3 && i != 4) throw Error("subgroup index must be 3 or 4");
  Enumerator e(cap);
  std::vector<Gen> bi(static_cast<std::size_t>(i), kB);
  e.run({{kA}, bi}, sl2_relators());
  CosetTable t;
  t.i_ = i;
  t.rows_ = e.compact();
  return t;
}

Permutation coset_action(const CosetTable& t, const GenWord& w) {
  if (w.alphabet() != Alphabet::Monodromy) throw Error("coset_action expects a monodromy word");
  const std::size_t n = t.size();
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& s : w.syllables()) {
    Gen g = s.letter == Letter::X ? (s.exp > 0 ? kA : kAinv) : (s.exp > 0 ? kB : kBinv);
    std::int64_t k = s.exp < 0 ? -s.exp : s.exp;
    // the generator permutation has order dividing n!, but its cycles are
    // short; reduce the exponent by the order of this generator's action
    Permutation gp(n);
    for (std::size_t c = 0; c < n; ++c) gp[c] = t(c, g);
    std::int64_t order = 1;
    {
      std::vector<bool> seen(n, false);
      for (std::size_t c = 0; c < n; ++c) {
        if (seen[c]) continue;
        std::int64_t len = 0;
        for (std::size_t d = c; !seen[d]; d = gp[d]) {
          seen[d] = true;
          ++len;
        }
        order = std::lcm(order, len);
      }
    }
    k %= order;
    for (std::int64_t r = 0; r < k; ++r)
      for (auto& c : p) c = gp[c];
  }
  return p;
}

std::int64_t minimal_power(const CosetTable& t, const GenWord& f) {
  Permutation p = coset_action(t, f);
  std::int64_t len = 1;
  for (int c = p[0]; c != 0; c = p[c]) ++len;
  return len;
}

}  // namespace vh
