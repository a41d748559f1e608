#include "knotfold/bracket.hpp"

#include "knotfold/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

namespace knotfold {

namespace {

// Exponent shift (quarter units) of A and A^-1.
constexpr int kA = 4;

const LaurentPolynomial& delta_power(std::size_t k) {
  static thread_local std::vector<LaurentPolynomial> powers{LaurentPolynomial::constant(Variable::A, 1)};
  while (powers.size() <= k) powers.push_back(powers.back() * loop_value());
  return powers[k];
}

LaurentPolynomial statesum(const PlanarDiagram& d, std::size_t cap) {
  const std::size_t n = d.crossing_count();
  if (n > cap)
    throw Error(ErrorKind::CapExceeded,
                "statesum limited to " + std::to_string(cap) + " crossings, diagram has " + std::to_string(n));
  if (n == 0) return LaurentPolynomial::constant(Variable::A, 1);

  std::unordered_map<int, int> index;
  for (const auto& x : d.crossings())
    for (int label : x.arcs) index.emplace(label, static_cast<int>(index.size()));
  std::vector<std::array<int, 4>> arcs;
  arcs.reserve(n);
  for (const auto& x : d.crossings())
    arcs.push_back({index[x.arcs[0]], index[x.arcs[1]], index[x.arcs[2]], index[x.arcs[3]]});

  const std::size_t labels = index.size();
  // counts[a * (labels + 1) + loops]: states with `a` A-smoothings and that many loops.
  std::vector<std::int64_t> counts((n + 1) * (labels + 1), 0);
  std::vector<int> parent(labels);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t loops = labels;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --loops;
      }
    };
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = arcs[c];
      if ((mask >> c) & 1u) {  // B-smoothing
        unite(x[0], x[3]);
        unite(x[1], x[2]);
      } else {
        unite(x[0], x[1]);
        unite(x[2], x[3]);
      }
    }
    const std::size_t b = static_cast<std::size_t>(std::popcount(mask));
    ++counts[(n - b) * (labels + 1) + loops];
  }

  LaurentPolynomial result(Variable::A);
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t loops = 1; loops <= labels; ++loops) {
      const std::int64_t c = counts[a * (labels + 1) + loops];
      if (c == 0) continue;
      const int shift = kA * (static_cast<int>(a) - static_cast<int>(n - a));
      result += delta_power(loops - 1).shifted(shift).scaled(c);
    }
  }
  return result;
}

// Matching on the sorted open boundary: entry i is the index of the endpoint
// paired with endpoint i.
using Matching = std::vector<int>;

class Sweep {
 public:
  Sweep(const PlanarDiagram& d, std::size_t max_states) : d_(d), max_states_(max_states) {}

  LaurentPolynomial run() {
    const std::size_t n = d_.crossing_count();
    std::map<Matching, LaurentPolynomial> states;
    states.emplace(Matching{}, LaurentPolynomial::constant(Variable::A, 1));
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t c = pick(done);
      done[c] = true;
      states = absorb(states, d_.crossings()[c].arcs);
    }
    if (!boundary_.empty() || states.size() != 1)
      throw Error(ErrorKind::Disconnected, "sweep finished with open boundary");
    return states.begin()->second.divide_exact(loop_value());
  }

 private:
  std::vector<int> next_boundary(const std::array<int, 4>& x) const {
    std::vector<int> out = boundary_;
    for (int label : x) {
      auto it = std::lower_bound(out.begin(), out.end(), label);
      if (it != out.end() && *it == label)
        out.erase(it);
      else
        out.insert(it, label);
    }
    return out;
  }

  std::size_t pick(const std::vector<bool>& done) const {
    std::size_t best = 0;
    std::size_t best_size = SIZE_MAX;
    for (std::size_t c = 0; c < done.size(); ++c) {
      if (done[c]) continue;
      const std::size_t size = next_boundary(d_.crossings()[c].arcs).size();
      if (size < best_size) {
        best = c;
        best_size = size;
      }
    }
    return best;
  }

  std::map<Matching, LaurentPolynomial> absorb(const std::map<Matching, LaurentPolynomial>& states,
                                               const std::array<int, 4>& x) {
    const std::vector<int> next = next_boundary(x);
    const int nb = static_cast<int>(boundary_.size());
    const int total = nb + 4;

    // Occurrence o < nb is boundary endpoint o; nb + k is crossing position k.
    // ident[o] joins the two occurrences of an internal label, -1 otherwise.
    std::vector<int> ident(static_cast<std::size_t>(total), -1);
    std::vector<int> label_of(static_cast<std::size_t>(total));
    for (int o = 0; o < nb; ++o) label_of[static_cast<std::size_t>(o)] = boundary_[static_cast<std::size_t>(o)];
    for (int k = 0; k < 4; ++k) label_of[static_cast<std::size_t>(nb + k)] = x[static_cast<std::size_t>(k)];
    for (int a = 0; a < total; ++a)
      for (int b = a + 1; b < total; ++b)
        if (label_of[static_cast<std::size_t>(a)] == label_of[static_cast<std::size_t>(b)]) {
          ident[static_cast<std::size_t>(a)] = b;
          ident[static_cast<std::size_t>(b)] = a;
        }
    // Position of each open occurrence in the next boundary.
    std::vector<int> slot(static_cast<std::size_t>(total), -1);
    for (int o = 0; o < total; ++o) {
      if (ident[static_cast<std::size_t>(o)] != -1) continue;
      slot[static_cast<std::size_t>(o)] = static_cast<int>(
          std::lower_bound(next.begin(), next.end(), label_of[static_cast<std::size_t>(o)]) - next.begin());
    }

    const std::array<std::array<int, 4>, 2> smoothings{{{1, 0, 3, 2}, {3, 2, 1, 0}}};  // A, B partner positions
    const std::array<int, 2> shifts{kA, -kA};

    std::map<Matching, LaurentPolynomial> out;
    std::vector<int> mate(static_cast<std::size_t>(total));
    std::vector<bool> seen(static_cast<std::size_t>(total));
    Matching key(next.size());
    for (const auto& [matching, weight] : states) {
      for (std::size_t s = 0; s < 2; ++s) {
        for (int o = 0; o < nb; ++o) mate[static_cast<std::size_t>(o)] = matching[static_cast<std::size_t>(o)];
        for (int k = 0; k < 4; ++k)
          mate[static_cast<std::size_t>(nb + k)] = nb + smoothings[s][static_cast<std::size_t>(k)];
        std::fill(seen.begin(), seen.end(), false);
        for (int o = 0; o < total; ++o) {
          if (slot[static_cast<std::size_t>(o)] < 0 || seen[static_cast<std::size_t>(o)]) continue;
          int at = o;
          while (true) {
            seen[static_cast<std::size_t>(at)] = true;
            at = mate[static_cast<std::size_t>(at)];
            seen[static_cast<std::size_t>(at)] = true;
            if (ident[static_cast<std::size_t>(at)] == -1) break;
            at = ident[static_cast<std::size_t>(at)];
          }
          key[static_cast<std::size_t>(slot[static_cast<std::size_t>(o)])] = slot[static_cast<std::size_t>(at)];
          key[static_cast<std::size_t>(slot[static_cast<std::size_t>(at)])] = slot[static_cast<std::size_t>(o)];
        }
        std::size_t loops = 0;
        for (int o = 0; o < total; ++o) {
          if (seen[static_cast<std::size_t>(o)]) continue;
          ++loops;
          int at = o;
          do {
            seen[static_cast<std::size_t>(at)] = true;
            at = mate[static_cast<std::size_t>(at)];
            seen[static_cast<std::size_t>(at)] = true;
            at = ident[static_cast<std::size_t>(at)];
          } while (at != o);
        }
        LaurentPolynomial term = weight.shifted(shifts[s]);
        if (loops > 0) term *= delta_power(loops);
        auto [it, inserted] = out.try_emplace(key, std::move(term));
        if (!inserted) {
          it->second += term;
        }
      }
    }
    for (auto it = out.begin(); it != out.end();) {
      if (it->second.is_zero())
        it = out.erase(it);
      else
        ++it;
    }
    if (out.size() > max_states_)
      throw Error(ErrorKind::WidthOverflow, "sweep holds " + std::to_string(out.size()) + " boundary states");
    boundary_ = next;
    return out;
  }

  const PlanarDiagram& d_;
  std::size_t max_states_;
  std::vector<int> boundary_;
};

}  // namespace

const LaurentPolynomial& loop_value() {
  static const LaurentPolynomial value =
      LaurentPolynomial::from_terms(Variable::A, {{2 * kA, -1}, {-2 * kA, -1}});
  return value;
}

LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, BracketMode mode, const BracketOptions& options) {
  if (mode == BracketMode::statesum) return statesum(d, options.statesum_cap);
  if (d.crossing_count() == 0) return LaurentPolynomial::constant(Variable::A, 1);
  return Sweep(d, options.max_states).run();
}

}  // namespace knotfold
