/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>
#include <map>
#include <set>

#include "sphquad/nets.hpp"

namespace sphquad::nets {

const char* to_string(ChainKind k) {
  switch (k) {
    case ChainKind::aa: return "aa";
    case ChainKind::bb: return "bb";
    case ChainKind::ab: return "ab";
  }
  return "ab";
}

std::size_t ChainSet::count(ChainKind k) const {
  return static_cast<std::size_t>(
      std::count_if(chains.begin(), chains.end(), [k](const Chain& c) { return c.kind == k; }));
}

bool is_aa_end(const NetDescriptor& net) {
  for (const auto& x : equivalence_class(net))
    if (x.family == Family::U && std::min(x.i, x.l) == 0) return true;
  return false;
}

bool is_bb_end(const NetDescriptor& net) {
  for (const auto& x : equivalence_class(net))
    if (x.family == Family::Ubar && std::min(x.k, x.m) == 0) return true;
  return false;
}

ChainSet build_chains(const IntegerParts& parts) {
  ChainSet out;
  const auto nets = enumerate_nets(parts);
  const auto junctions = enumerate_junctions(parts);

  std::map<NetDescriptor, std::size_t> index;
  for (std::size_t t = 0; t < nets.size(); ++t) index[nets[t]] = t;

  struct Edge {
    std::size_t to;
    std::size_t junction;
  };
  std::vector<std::vector<Edge>> adj(nets.size());
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t t = 0; t < junctions.size(); ++t) {
    const auto [x, y] = adjacency(junctions[t]);
    const auto ix = index.find(canonicalize(x));
    const auto iy = index.find(canonicalize(y));
    if (ix == index.end() || iy == index.end()) {
      out.violations.push_back("junction " + to_string(junctions[t]) + " touches a net outside the enumeration");
      continue;
    }
    if (ix->second == iy->second) {
      out.violations.push_back("junction " + to_string(junctions[t]) + " joins a net to itself");
      continue;
    }
    const auto key = std::minmax(ix->second, iy->second);
    if (!pairs.insert(key).second)
      out.violations.push_back("junction " + to_string(junctions[t]) + " duplicates an existing adjacency");
    adj[ix->second].push_back({iy->second, t});
    adj[iy->second].push_back({ix->second, t});
  }

  std::vector<bool> seen(nets.size(), false);
  for (std::size_t s = 0; s < nets.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (const Edge& e : adj[comp[h]])
        if (!seen[e.to]) {
          seen[e.to] = true;
          comp.push_back(e.to);
        }

    Chain chain;
    std::vector<std::size_t> terminals;
    bool path = true;
    for (std::size_t v : comp) {
      if (adj[v].size() > 2) path = false;
      if (adj[v].size() == 1) terminals.push_back(v);
    }
    if (comp.size() > 1 && terminals.size() != 2) path = false;

    if (!path) {
      out.violations.push_back("component containing " + to_string(nets[s]) + " is not a path");
      std::set<std::size_t> js;
      for (std::size_t v : comp) {
        chain.nets.push_back(nets[v]);
        for (const Edge& e : adj[v]) js.insert(e.junction);
      }
      for (std::size_t t : js) chain.junctions.push_back(junctions[t]);
    } else {
      std::size_t cur = comp.front();
      if (terminals.size() == 2)
        cur = to_string(nets[terminals[0]]) <= to_string(nets[terminals[1]]) ? terminals[0] : terminals[1];
      std::size_t prev = nets.size();
      for (;;) {
        chain.nets.push_back(nets[cur]);
        const Edge* next = nullptr;
        for (const Edge& e : adj[cur])
          if (e.to != prev) next = &e;
        if (next == nullptr) break;
        chain.junctions.push_back(junctions[next->junction]);
        prev = cur;
        cur = next->to;
      }
    }

    std::size_t aa = 0, bb = 0;
    for (const auto& n : chain.nets) {
      aa += is_aa_end(n) ? 1 : 0;
      bb += is_bb_end(n) ? 1 : 0;
    }
    if (aa > 1 || bb > 1 || (aa > 0 && bb > 0))
      out.violations.push_back("chain starting at " + to_string(chain.nets.front()) +
                               " has more than one U-type end");
    chain.kind = aa > 0 ? ChainKind::aa : (bb > 0 ? ChainKind::bb : ChainKind::ab);
    out.chains.push_back(std::move(chain));
  }

  std::sort(out.chains.begin(), out.chains.end(), [](const Chain& a, const Chain& b) {
    return to_string(a.nets.front()) < to_string(b.nets.front());
  });
  return out;
}

}  // namespace sphquad::nets
