#include "hq/autsearch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hq {

BiPermutation BiPermutation::identity(int nv, int ne) {
  BiPermutation g;
  g.sigma.resize(nv);
  g.tau.resize(ne);
  std::iota(g.sigma.begin(), g.sigma.end(), 0);
  std::iota(g.tau.begin(), g.tau.end(), 0);
  return g;
}

BiPermutation BiPermutation::inverse() const {
  BiPermutation g;
  g.sigma.resize(sigma.size());
  g.tau.resize(tau.size());
  for (size_t i = 0; i < sigma.size(); ++i) g.sigma[sigma[i]] = static_cast<int>(i);
  for (size_t i = 0; i < tau.size(); ++i) g.tau[tau[i]] = static_cast<int>(i);
  return g;
}

BiPermutation BiPermutation::compose(const BiPermutation& first) const {
  BiPermutation g;
  g.sigma.resize(sigma.size());
  g.tau.resize(tau.size());
  for (size_t i = 0; i < sigma.size(); ++i) g.sigma[i] = sigma[first.sigma[i]];
  for (size_t i = 0; i < tau.size(); ++i) g.tau[i] = tau[first.tau[i]];
  return g;
}

namespace {

std::vector<int> apply_sorted(const std::vector<int>& sigma, const std::vector<int>& set) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int v : set) out.push_back(sigma[v]);
  std::sort(out.begin(), out.end());
  return out;
}

void check_defined(const Hypergraph& h, const BiPermutation& g) {
  if (static_cast<int>(g.sigma.size()) != h.num_vertices() ||
      static_cast<int>(g.tau.size()) != h.num_edges()) {
    throw std::runtime_error("permutation size does not match hypergraph");
  }
}

using Matrix = std::vector<std::vector<int>>;

Matrix perm_matrix(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  Matrix p(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) p[sigma[j]][j] = 1;
  return p;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix c(n, std::vector<int>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (a[i][l])
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

}  // namespace

bool is_automorphism(const Hypergraph& h, const BiPermutation& g) {
  check_defined(h, g);
  for (int e = 0; e < h.num_edges(); ++e) {
    if (apply_sorted(g.sigma, h.src(e)) != h.src(g.tau[e])) return false;
    if (apply_sorted(g.sigma, h.rng(e)) != h.rng(g.tau[e])) return false;
  }
  return true;
}

bool is_automorphism_matrix(const Hypergraph& h, const BiPermutation& g) {
  check_defined(h, g);
  IncidencePair inc = incidence(h);
  Matrix ps = perm_matrix(g.sigma), pt = perm_matrix(g.tau);
  return mul(inc.a_s, pt) == mul(ps, inc.a_s) && mul(inc.a_r, pt) == mul(ps, inc.a_r);
}

namespace {

AutGroup brute(const Hypergraph& h, long long cap) {
  long long count = 1;
  for (int i = 2; i <= h.num_vertices(); ++i) {
    count *= i;
    if (count > cap) throw std::runtime_error("brute-force cap exceeded");
  }
  for (int i = 2; i <= h.num_edges(); ++i) {
    count *= i;
    if (count > cap) throw std::runtime_error("brute-force cap exceeded");
  }
  AutGroup out;
  std::vector<int> sigma(h.num_vertices());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<int> tau(h.num_edges());
    std::iota(tau.begin(), tau.end(), 0);
    do {
      BiPermutation g{sigma, tau};
      if (is_automorphism(h, g)) out.elements.push_back(g);
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  out.order = static_cast<long long>(out.elements.size());
  return out;
}

struct BacktrackState {
  const Hypergraph& h;
  std::vector<std::tuple<int, int, bool, bool>> vsig;  // (N_s, N_r, source, sink)
  std::vector<int> vorder;
  std::vector<int> sigma;
  std::vector<char> vused;
  std::vector<int> tau;
  std::vector<char> eused;
  std::vector<BiPermutation>* out;

  void edges(int e) {
    if (e == h.num_edges()) {
      out->push_back(BiPermutation{sigma, tau});
      return;
    }
    std::vector<int> s_img = apply_sorted(sigma, h.src(e));
    std::vector<int> r_img = apply_sorted(sigma, h.rng(e));
    for (int f = 0; f < h.num_edges(); ++f) {
      if (eused[f]) continue;
      if (h.src(f) != s_img || h.rng(f) != r_img) continue;
      eused[f] = 1;
      tau[e] = f;
      edges(e + 1);
      eused[f] = 0;
    }
  }

  void vertices(size_t k) {
    if (k == vorder.size()) {
      edges(0);
      return;
    }
    int v = vorder[k];
    for (int w = 0; w < h.num_vertices(); ++w) {
      if (vused[w]) continue;
      if (vsig[w] != vsig[v]) continue;
      vused[w] = 1;
      sigma[v] = w;
      vertices(k + 1);
      vused[w] = 0;
    }
  }
};

AutGroup backtrack(const Hypergraph& h) {
  PropertyReport rep = classify(h);
  BacktrackState st{h, {}, {}, {}, {}, {}, {}, nullptr};
  st.vsig.resize(h.num_vertices());
  std::map<std::tuple<int, int, bool, bool>, int> rarity;
  for (int v = 0; v < h.num_vertices(); ++v) {
    int ns = rep.n_s.at(h.vertex(v));
    int nr = rep.n_r.at(h.vertex(v));
    st.vsig[v] = {ns, nr, nr == 0, ns == 0};
    ++rarity[st.vsig[v]];
  }
  st.vorder.resize(h.num_vertices());
  std::iota(st.vorder.begin(), st.vorder.end(), 0);
  std::stable_sort(st.vorder.begin(), st.vorder.end(), [&](int a, int b) {
    return rarity[st.vsig[a]] < rarity[st.vsig[b]];
  });
  st.sigma.assign(h.num_vertices(), 0);
  st.vused.assign(h.num_vertices(), 0);
  st.tau.assign(h.num_edges(), 0);
  st.eused.assign(h.num_edges(), 0);
  AutGroup out;
  st.out = &out.elements;
  st.vertices(0);
  std::sort(out.elements.begin(), out.elements.end());
  out.order = static_cast<long long>(out.elements.size());
  return out;
}

}  // namespace

AutGroup enumerate_aut(const Hypergraph& h, AutMethod method, long long brute_cap) {
  return method == AutMethod::Brute ? brute(h, brute_cap) : backtrack(h);
}

TransformInvarianceReport check_transform_invariance(const Hypergraph& h) {
  TransformInvarianceReport rep;
  AutGroup base = enumerate_aut(h, AutMethod::Backtrack);
  AutGroup opp = enumerate_aut(transform(h, Transform::Opposite), AutMethod::Backtrack);
  rep.opposite_equal = base.elements == opp.elements;

  Hypergraph dual = transform(h, Transform::Dual);
  AutGroup dual_aut = enumerate_aut(dual, AutMethod::Backtrack);
  std::vector<BiPermutation> swapped;
  for (const auto& g : base.elements) swapped.push_back(BiPermutation{g.tau, g.sigma});
  std::sort(swapped.begin(), swapped.end());
  rep.dual_swapped = dual_aut.elements == swapped;

  rep.dual_involutive = transform(dual, Transform::Dual).to_json() == h.to_json();

  IncidencePair base_inc = incidence(h);
  IncidencePair dual_inc = incidence(dual);
  bool transposed = true;
  for (int v = 0; v < h.num_vertices() && transposed; ++v) {
    for (int e = 0; e < h.num_edges() && transposed; ++e) {
      transposed = dual_inc.a_s[e][v] == base_inc.a_s[v][e] &&
                   dual_inc.a_r[e][v] == base_inc.a_r[v][e];
    }
  }
  rep.incidence_transposed = transposed;
  return rep;
}

std::vector<BiPermutation> generating_set(const AutGroup& g) {
  if (g.elements.empty()) return {};
  int nv = static_cast<int>(g.elements[0].sigma.size());
  int ne = static_cast<int>(g.elements[0].tau.size());
  std::set<BiPermutation> closure{BiPermutation::identity(nv, ne)};
  std::vector<BiPermutation> gens;
  for (const auto& el : g.elements) {
    if (closure.count(el)) continue;
    gens.push_back(el);
    // Close under products with the new generator.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<BiPermutation> cur(closure.begin(), closure.end());
      for (const auto& a : cur) {
        for (const auto& b : gens) {
          if (closure.insert(b.compose(a)).second) grew = true;
          if (closure.insert(a.compose(b)).second) grew = true;
        }
      }
    }
  }
  return gens;
}

std::string cycle_notation(const std::vector<int>& perm, const std::vector<std::string>& labels) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += labels[j];
      first = false;
      j = static_cast<size_t>(perm[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace hq
