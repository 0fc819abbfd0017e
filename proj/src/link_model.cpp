#include "blowup/link_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace blowup::link {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedPD, what); }

struct Endpoint {
  std::size_t crossing;
  bool under;
};

// Components from oriented crossings.  Walks start at the smallest unvisited
// label, so components come out ordered by smallest label and each starts at
// its own minimum.
std::vector<std::vector<int>> trace_components(const std::vector<Crossing>& cs,
                                               const std::set<int>& extra_labels) {
  std::map<int, Endpoint> enters, exits;
  auto put = [](std::map<int, Endpoint>& m, int label, Endpoint e) {
    if (!m.emplace(label, e).second)
      malformed("label " + std::to_string(label) + " is traversed twice in the same direction");
  };
  for (std::size_t c = 0; c < cs.size(); ++c) {
    put(enters, cs[c].under_in(), {c, true});
    put(exits, cs[c].under_out(), {c, true});
    put(enters, cs[c].over_in_label(), {c, false});
    put(exits, cs[c].over_out_label(), {c, false});
  }
  std::set<int> labels = extra_labels;
  for (const auto& [l, e] : enters) labels.insert(l);
  for (const auto& [l, e] : exits) labels.insert(l);
  for (int l : labels)
    if (enters.count(l) != exits.count(l))
      malformed("label " + std::to_string(l) + " does not close up");

  std::vector<std::vector<int>> comps;
  std::set<int> visited;
  for (int start : labels) {
    if (visited.count(start)) continue;
    std::vector<int> comp;
    int l = start;
    do {
      if (!visited.insert(l).second) malformed("component traversal does not close");
      comp.push_back(l);
      auto it = enters.find(l);
      if (it == enters.end()) break;  // free loop
      const Crossing& c = cs[it->second.crossing];
      l = it->second.under ? c.under_out() : c.over_out_label();
    } while (l != start);
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Relabel 1..N along the components in order.
void relabel_compact(LinkDiagram& d) {
  std::map<int, int> to;
  int next = 1;
  for (auto& comp : d.components)
    for (auto& l : comp) {
      to[l] = next;
      l = next++;
    }
  for (auto& c : d.crossings)
    for (auto& l : c.x) l = to.at(l);
}

LinkDiagram assemble(std::vector<Crossing> cs, const std::set<int>& extra_labels) {
  LinkDiagram d;
  d.components = trace_components(cs, extra_labels);
  d.crossings = std::move(cs);
  relabel_compact(d);
  return d;
}

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    const int r = find(it->second);
    parent[x] = r;
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // smaller label represents
  }
};

struct Arcs {
  std::map<int, std::size_t> of_label;
  std::vector<std::size_t> first_of_component;
  std::size_t count = 0;
};

// A new over-arc begins after every under-pass.
Arcs compute_arcs(const LinkDiagram& d) {
  std::set<int> under_in, under_out;
  for (const auto& c : d.crossings) {
    under_in.insert(c.under_in());
    under_out.insert(c.under_out());
  }
  Arcs a;
  for (const auto& comp : d.components) {
    const std::size_t m = comp.size();
    std::size_t s = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (under_out.count(comp[i])) {
        s = i;
        break;
      }
    std::size_t arc = a.count++;
    a.first_of_component.push_back(arc);
    for (std::size_t k = 0; k < m; ++k) {
      const int l = comp[(s + k) % m];
      a.of_label[l] = arc;
      if (k + 1 < m && under_in.count(l)) arc = a.count++;
    }
  }
  return a;
}

}  // namespace

void validate(const BraidWord& b) {
  if (b.strands < 1) throw Error(Errc::InvalidLetter, "braid needs at least one strand");
  for (int l : b.word)
    if (l == 0 || std::abs(l) > b.strands - 1)
      throw Error(Errc::InvalidLetter, "braid letter " + std::to_string(l) + " invalid for " +
                                           std::to_string(b.strands) + " strands");
}

std::vector<std::size_t> braid_strand_components(const BraidWord& b) {
  validate(b);
  const auto n = static_cast<std::size_t>(b.strands);
  // perm[p] = starting position of the strand now at position p
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : b.word) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(perm[k], perm[k + 1]);
  }
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::size_t p = s;
    while (comp[p] == n) {
      comp[p] = next;
      p = perm[p];
    }
    ++next;
  }
  return comp;
}

std::size_t braid_component_count(const BraidWord& b) {
  const auto comp = braid_strand_components(b);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

LinkDiagram LinkDiagram::unknot() { return from_braid({1, {}}); }

LinkDiagram LinkDiagram::unlink(std::size_t n) {
  return from_braid({static_cast<int>(std::max<std::size_t>(n, 1)), {}});
}

LinkDiagram parse_pd(const PDCode& code) {
  if (code.empty()) {
    LinkDiagram d = LinkDiagram::unknot();
    d.origin = Origin::pd;
    d.braid.reset();
    return d;
  }
  const std::size_t n = code.size();
  std::map<long, std::vector<std::pair<std::size_t, int>>> where;
  for (std::size_t c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      const long l = code[c][static_cast<std::size_t>(p)];
      if (l <= 0) malformed("PD labels must be positive integers");
      if (l > 1000000000L) malformed("PD label out of range");
      where[l].push_back({c, p});
    }
  for (const auto& [l, occ] : where)
    if (occ.size() != 2)
      malformed("label " + std::to_string(l) + " appears " + std::to_string(occ.size()) +
                " times (expected 2)");

  using Occ = std::pair<std::size_t, int>;
  auto other = [&](Occ o) {
    const auto& occ = where.at(code[o.first][static_cast<std::size_t>(o.second)]);
    return occ[0] == o ? occ[1] : occ[0];
  };

  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  std::vector<int> over_in(n, 0);
  for (std::size_t c0 = 0; c0 < n; ++c0)
    for (int p0 = 0; p0 < 4; ++p0) {
      if (seen[c0][static_cast<std::size_t>(p0)]) continue;
      std::vector<Occ> entering;
      Occ e{c0, p0};
      do {
        const Occ x{e.first, (e.second + 2) % 4};
        if (seen[e.first][static_cast<std::size_t>(e.second)] ||
            seen[x.first][static_cast<std::size_t>(x.second)])
          malformed("component traversal does not close");
        seen[e.first][static_cast<std::size_t>(e.second)] = true;
        seen[x.first][static_cast<std::size_t>(x.second)] = true;
        entering.push_back(e);
        e = other(x);
      } while (e != Occ{c0, p0});

      std::size_t at0 = 0, at2 = 0;
      for (const auto& o : entering) {
        if (o.second == 0) ++at0;
        if (o.second == 2) ++at2;
      }
      if (at0 > 0 && at2 > 0) malformed("inconsistent strand orientation");
      bool reverse = at2 > 0;
      if (at0 == 0 && at2 == 0 && entering.size() > 1) {
        // Only over-passes: orient so labels increase away from the minimum.
        std::vector<long> labels;
        for (const auto& o : entering) labels.push_back(code[o.first][static_cast<std::size_t>(o.second)]);
        const std::size_t m = labels.size();
        const std::size_t i = static_cast<std::size_t>(
            std::min_element(labels.begin(), labels.end()) - labels.begin());
        reverse = labels[(i + m - 1) % m] < labels[(i + 1) % m];
      }
      for (const auto& o : entering) {
        const int p = reverse ? (o.second + 2) % 4 : o.second;
        if (p == 1 || p == 3) over_in[o.first] = p;
      }
    }

  std::vector<Crossing> cs(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (over_in[c] == 0) malformed("crossing without an over-strand");
    for (int p = 0; p < 4; ++p)
      cs[c].x[static_cast<std::size_t>(p)] = static_cast<int>(code[c][static_cast<std::size_t>(p)]);
    cs[c].over_in = over_in[c];
    cs[c].sign = over_in[c] == 3 ? 1 : -1;
  }
  // Keep the caller's labels: compute components only.
  LinkDiagram d;
  d.components = trace_components(cs, {});
  d.crossings = std::move(cs);
  d.origin = Origin::pd;
  return d;
}

PDCode to_pd(const LinkDiagram& d) {
  PDCode out;
  out.reserve(d.crossings.size());
  for (const auto& c : d.crossings) out.push_back({c.x[0], c.x[1], c.x[2], c.x[3]});
  return out;
}

LinkDiagram from_braid(const BraidWord& b) {
  validate(b);
  const auto n = static_cast<std::size_t>(b.strands);
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 1);
  int next = b.strands + 1;
  std::vector<Crossing> cs;
  cs.reserve(b.word.size());
  for (int l : b.word) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    const int a = cur[k], bb = cur[k + 1];
    const int e1 = next++;  // new label at position k+1
    const int e2 = next++;  // new label at position k
    Crossing c;
    if (l > 0) {
      c.x = {bb, e1, e2, a};
      c.over_in = 3;
      c.sign = 1;
    } else {
      c.x = {a, bb, e1, e2};
      c.over_in = 1;
      c.sign = -1;
    }
    cs.push_back(c);
    cur[k] = e2;
    cur[k + 1] = e1;
  }
  UnionFind uf;
  for (std::size_t p = 0; p < n; ++p) uf.unite(cur[p], static_cast<int>(p) + 1);
  for (auto& c : cs)
    for (auto& l : c.x) l = uf.find(l);
  std::set<int> loops;
  for (std::size_t p = 0; p < n; ++p) loops.insert(uf.find(static_cast<int>(p) + 1));

  LinkDiagram d = assemble(std::move(cs), loops);
  d.origin = Origin::braid;
  d.braid = b;
  return d;
}

BraidWord braid_sublink(const BraidWord& b, const std::vector<std::size_t>& keep) {
  const auto comp = braid_strand_components(b);
  const std::size_t ncomp = braid_component_count(b);
  if (keep.empty()) throw Error(Errc::EmptySelection, "sublink selection is empty");
  std::vector<bool> kept(ncomp, false);
  for (auto k : keep) {
    if (k >= ncomp) throw Error(Errc::InputError, "component index " + std::to_string(k) + " out of range");
    kept[k] = true;
  }
  std::vector<bool> at(comp.size());  // is the strand now at position p kept?
  for (std::size_t p = 0; p < comp.size(); ++p) at[p] = kept[comp[p]];
  BraidWord out;
  out.strands = static_cast<int>(std::count(at.begin(), at.end(), true));
  for (int l : b.word) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    if (at[k] && at[k + 1]) {
      const auto below = std::count(at.begin(), at.begin() + static_cast<std::ptrdiff_t>(k), true);
      const int idx = static_cast<int>(below) + 1;
      out.word.push_back(l > 0 ? idx : -idx);
    }
    std::swap(at[k], at[k + 1]);
  }
  return out;
}

SeifertMatrix seifert_matrix(const BraidWord& b) {
  validate(b);
  struct Band {
    std::size_t index;
    int sign;
  };
  struct Gen {
    std::size_t pos;
    bool tube;
    Band lo{}, hi{};
  };
  const auto n = static_cast<std::size_t>(b.strands);
  std::vector<std::vector<Band>> bands(n > 0 ? n - 1 : 0);
  for (std::size_t t = 0; t < b.word.size(); ++t) {
    const int l = b.word[t];
    bands[static_cast<std::size_t>(std::abs(l) - 1)].push_back({t, l > 0 ? 1 : -1});
  }
  // Cycles through consecutive bands; an empty position gets a 0-framed
  // tube generator that keeps the surface connected.
  std::vector<Gen> gens;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (bands[i].empty()) {
      gens.push_back({i, true});
      continue;
    }
    for (std::size_t j = 0; j + 1 < bands[i].size(); ++j)
      gens.push_back({i, false, bands[i][j], bands[i][j + 1]});
  }
  const std::size_t N = gens.size();
  algebra::IntMatrix V(N, N, 0);
  for (std::size_t x = 0; x < N; ++x) {
    const Gen& g = gens[x];
    if (g.tube) continue;
    if (g.lo.sign == g.hi.sign) V(x, x) = -g.lo.sign;
    for (std::size_t y = x + 1; y < N; ++y) {
      const Gen& h = gens[y];
      if (h.tube) continue;
      if (h.pos == g.pos && h.lo.index == g.hi.index) {
        if (g.hi.sign > 0)
          V(x, y) = 1;
        else
          V(y, x) = -1;
      } else if (h.pos == g.pos + 1) {
        const auto a1 = g.lo.index, a2 = g.hi.index, b1 = h.lo.index, b2 = h.hi.index;
        if (a1 < b1 && b1 < a2 && a2 < b2)
          V(x, y) = -1;
        else if (b1 < a1 && a1 < b2 && b2 < a2)
          V(x, y) = 1;
      }
    }
  }
  SeifertMatrix s;
  s.V = std::move(V);
  s.rank = N;
  s.boundary_components = braid_component_count(b);
  s.genus = (N + 1 - s.boundary_components) / 2;
  return s;
}

Presentation wirtinger(const LinkDiagram& d) {
  const Arcs arcs = compute_arcs(d);
  Presentation p;
  p.generators = default_generator_names(arcs.count);
  for (const auto& c : d.crossings) {
    const std::size_t in = arcs.of_label.at(c.under_in());
    const std::size_t out = arcs.of_label.at(c.under_out());
    const std::size_t over = arcs.of_label.at(c.over_in_label());
    const int s = c.sign;
    p.relators.push_back({{out, -1}, {over, s}, {in, 1}, {over, -s}});
  }
  p.meridian_markers = arcs.first_of_component;
  return p;
}

algebra::IntMatrix coloring_matrix(const LinkDiagram& d) {
  const Arcs arcs = compute_arcs(d);
  algebra::IntMatrix m(d.crossings.size(), arcs.count, 0);
  for (std::size_t r = 0; r < d.crossings.size(); ++r) {
    const auto& c = d.crossings[r];
    m(r, arcs.of_label.at(c.over_in_label())) += 2;
    m(r, arcs.of_label.at(c.under_in())) -= 1;
    m(r, arcs.of_label.at(c.under_out())) -= 1;
  }
  return m;
}

LinkDiagram sublink(const LinkDiagram& d, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw Error(Errc::EmptySelection, "sublink selection is empty");
  for (auto k : keep)
    if (k >= d.num_components())
      throw Error(Errc::InputError, "component index " + std::to_string(k) + " out of range");
  if (d.origin == Origin::braid && d.braid) return from_braid(braid_sublink(*d.braid, keep));

  std::set<std::size_t> kept(keep.begin(), keep.end());
  std::map<int, std::size_t> comp_of;
  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (int l : d.components[i]) comp_of[l] = i;

  UnionFind uf;
  std::vector<Crossing> cs;
  for (const auto& c : d.crossings) {
    const bool under_kept = kept.count(comp_of.at(c.under_in())) > 0;
    const bool over_kept = kept.count(comp_of.at(c.over_in_label())) > 0;
    if (under_kept && over_kept) {
      cs.push_back(c);
    } else if (under_kept) {
      uf.unite(c.under_in(), c.under_out());
    } else if (over_kept) {
      uf.unite(c.over_in_label(), c.over_out_label());
    }
  }
  for (auto& c : cs)
    for (auto& l : c.x) l = uf.find(l);
  std::set<int> labels;
  for (auto k : kept)
    for (int l : d.components[k]) labels.insert(uf.find(l));
  LinkDiagram out = assemble(std::move(cs), labels);
  out.origin = Origin::pd;
  return out;
}

}  // namespace blowup::link
