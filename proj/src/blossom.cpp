// Primal-dual weighted blossom matching after the classic formulation used
// by Galil and by van Rantwijk's reference implementation: a single
// alternating forest grown from all exposed vertices, blossom contraction on
// tight S-S edges, and four-way dual adjustments. Edges are kept in a flat
// list; "endpoint" indices 2k/2k+1 address the two sides of edge k.

#include "blossom.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitsp::detail {

namespace {

constexpr int kLabelFree = 0;
constexpr int kLabelS = 1;
constexpr int kLabelT = 2;

struct Matcher {
  int nvertex;
  int nedge = 0;
  std::vector<int> edge_u, edge_v;
  std::vector<int64_t> edge_w;
  std::vector<int> endpoint;                 // endpoint[p], p = 2k | side
  std::vector<std::vector<int>> neighbend;   // remote endpoints per vertex

  std::vector<int> mate;            // remote endpoint index or -1
  std::vector<int> label;           // per vertex and blossom
  std::vector<int> labelend;        // endpoint through which the label arrived
  std::vector<int> inblossom;       // top-level blossom of each vertex
  std::vector<int> blossomparent;
  std::vector<std::vector<int>> blossomchilds;
  std::vector<int> blossombase;
  std::vector<std::vector<int>> blossomendps;
  std::vector<int> bestedge;                    // least-slack edge per node
  std::vector<std::vector<int>> blossombestedges;
  std::vector<int> unusedblossoms;
  std::vector<int64_t> dualvar;
  std::vector<char> allowedge;
  std::vector<int> queue;

  explicit Matcher(int n, const std::vector<std::vector<int64_t>>& w) : nvertex(n) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        edge_u.push_back(i);
        edge_v.push_back(j);
        edge_w.push_back(w[i][j]);
      }
    nedge = static_cast<int>(edge_w.size());
    endpoint.resize(2 * nedge);
    neighbend.assign(n, {});
    for (int k = 0; k < nedge; ++k) {
      endpoint[2 * k] = edge_u[k];
      endpoint[2 * k + 1] = edge_v[k];
      neighbend[edge_u[k]].push_back(2 * k + 1);
      neighbend[edge_v[k]].push_back(2 * k);
    }
    int64_t maxweight = 0;
    for (int64_t x : edge_w) maxweight = std::max(maxweight, x);

    mate.assign(n, -1);
    label.assign(2 * n, kLabelFree);
    labelend.assign(2 * n, -1);
    inblossom.resize(n);
    for (int v = 0; v < n; ++v) inblossom[v] = v;
    blossomparent.assign(2 * n, -1);
    blossomchilds.assign(2 * n, {});
    blossombase.resize(2 * n);
    for (int v = 0; v < n; ++v) blossombase[v] = v;
    for (int b = n; b < 2 * n; ++b) blossombase[b] = -1;
    blossomendps.assign(2 * n, {});
    bestedge.assign(2 * n, -1);
    blossombestedges.assign(2 * n, {});
    for (int b = 2 * n - 1; b >= n; --b) unusedblossoms.push_back(b);
    dualvar.assign(2 * n, 0);
    for (int v = 0; v < n; ++v) dualvar[v] = maxweight;
    allowedge.assign(nedge, 0);
  }

  static void check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("blossom invariant violated: ") + what);
  }

  int64_t slack(int k) const { return dualvar[edge_u[k]] + dualvar[edge_v[k]] - 2 * edge_w[k]; }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < nvertex) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds[b]) blossom_leaves(t, out);
  }

  void assign_label(int w, int t, int p) {
    const int b = inblossom[w];
    check(label[w] == kLabelFree && label[b] == kLabelFree, "relabeling a labeled node");
    label[w] = label[b] = t;
    labelend[w] = labelend[b] = p;
    bestedge[w] = bestedge[b] = -1;
    if (t == kLabelS) {
      std::vector<int> leaves;
      blossom_leaves(b, leaves);
      queue.insert(queue.end(), leaves.begin(), leaves.end());
    } else {
      const int base = blossombase[b];
      check(mate[base] >= 0, "T node without matched base");
      assign_label(endpoint[mate[base]], kLabelS, mate[base] ^ 1);
    }
  }

  // Walks up from both sides of a tight S-S edge; returns the base vertex of
  // the closest common ancestor, or -1 when the trees are rooted separately.
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom[v];
      if (label[b] & 4) {
        base = blossombase[b];
        break;
      }
      check(label[b] == kLabelS, "scan through non-S node");
      path.push_back(b);
      label[b] = 5;
      check(labelend[b] == mate[blossombase[b]], "S node label inconsistent with matching");
      if (labelend[b] == -1) {
        v = -1;  // reached an exposed root
      } else {
        v = endpoint[labelend[b]];
        b = inblossom[v];
        check(label[b] == kLabelT, "expected T node on the path");
        check(labelend[b] >= 0, "T node without tree edge");
        v = endpoint[labelend[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label[b] = kLabelS;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edge_u[k];
    int w = edge_v[k];
    const int bb = inblossom[base];
    int bv = inblossom[v];
    int bw = inblossom[w];
    const int b = unusedblossoms.back();
    unusedblossoms.pop_back();
    blossombase[b] = base;
    blossomparent[b] = -1;
    blossomparent[bb] = b;
    auto& path = blossomchilds[b];
    auto& endps = blossomendps[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend[bv]);
      check(labelend[bv] >= 0, "cycle node without entry endpoint");
      v = endpoint[labelend[bv]];
      bv = inblossom[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend[bw] ^ 1);
      check(labelend[bw] >= 0, "cycle node without entry endpoint");
      w = endpoint[labelend[bw]];
      bw = inblossom[w];
    }
    check(label[bb] == kLabelS, "blossom base must be an S node");
    label[b] = kLabelS;
    labelend[b] = labelend[bb];
    dualvar[b] = 0;

    std::vector<int> leaves;
    blossom_leaves(b, leaves);
    for (int x : leaves) {
      if (label[inblossom[x]] == kLabelT) queue.push_back(x);
      inblossom[x] = b;
    }

    // Merge least-slack edge lists so delta3 stays O(n) per update.
    std::vector<int> bestedgeto(2 * nvertex, -1);
    for (int bx : path) {
      if (blossombestedges[bx].empty()) {
        std::vector<int> lv;
        blossom_leaves(bx, lv);
        for (int x : lv)
          for (int p : neighbend[x]) {
            const int ke = p / 2;
            int i = edge_u[ke], j = edge_v[ke];
            if (inblossom[j] == b) std::swap(i, j);
            const int bj = inblossom[j];
            if (bj != b && label[bj] == kLabelS &&
                (bestedgeto[bj] == -1 || slack(ke) < slack(bestedgeto[bj])))
              bestedgeto[bj] = ke;
          }
      } else {
        for (int ke : blossombestedges[bx]) {
          int i = edge_u[ke], j = edge_v[ke];
          if (inblossom[j] == b) std::swap(i, j);
          const int bj = inblossom[j];
          if (bj != b && label[bj] == kLabelS &&
              (bestedgeto[bj] == -1 || slack(ke) < slack(bestedgeto[bj])))
            bestedgeto[bj] = ke;
        }
      }
      blossombestedges[bx].clear();
      bestedge[bx] = -1;
    }
    auto& mine = blossombestedges[b];
    mine.clear();
    for (int ke : bestedgeto)
      if (ke != -1) mine.push_back(ke);
    bestedge[b] = -1;
    for (int ke : mine)
      if (bestedge[b] == -1 || slack(ke) < slack(bestedge[b])) bestedge[b] = ke;
  }

  int child_at(int b, int j) const {
    const int len = static_cast<int>(blossomchilds[b].size());
    return blossomchilds[b][((j % len) + len) % len];
  }
  int endp_at(int b, int j) const {
    const int len = static_cast<int>(blossomendps[b].size());
    return blossomendps[b][((j % len) + len) % len];
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds[b]) {
      blossomparent[s] = -1;
      if (s < nvertex) {
        inblossom[s] = s;
      } else if (endstage && dualvar[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> lv;
        blossom_leaves(s, lv);
        for (int x : lv) inblossom[x] = s;
      }
    }
    if (!endstage && label[b] == kLabelT) {
      // The blossom was reached through a tight edge mid-stage; walk its
      // cycle from the entry child to the base, alternating T and S labels,
      // then clear whatever the walk did not reach.
      check(labelend[b] >= 0, "expanding an unreached T blossom");
      const int entrychild = inblossom[endpoint[labelend[b] ^ 1]];
      int j = static_cast<int>(std::find(blossomchilds[b].begin(), blossomchilds[b].end(), entrychild) -
                               blossomchilds[b].begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= static_cast<int>(blossomchilds[b].size());
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend[b];
      while (j != 0) {
        label[endpoint[p ^ 1]] = kLabelFree;
        label[endpoint[endp_at(b, j - endptrick) ^ endptrick ^ 1]] = kLabelFree;
        assign_label(endpoint[p ^ 1], kLabelT, p);
        allowedge[endp_at(b, j - endptrick) / 2] = 1;
        j += jstep;
        p = endp_at(b, j - endptrick) ^ endptrick;
        allowedge[p / 2] = 1;
        j += jstep;
      }
      const int bv = child_at(b, 0);
      label[endpoint[p ^ 1]] = label[bv] = kLabelT;
      labelend[endpoint[p ^ 1]] = labelend[bv] = p;
      bestedge[bv] = -1;
      j += jstep;
      while (child_at(b, j) != entrychild) {
        const int bx = child_at(b, j);
        if (label[bx] == kLabelS) {
          j += jstep;
          continue;
        }
        std::vector<int> lv;
        blossom_leaves(bx, lv);
        int labeled = -1;
        for (int x : lv)
          if (label[x] != kLabelFree) {
            labeled = x;
            break;
          }
        if (labeled != -1) {
          check(label[labeled] == kLabelT, "unexpected label inside expanded blossom");
          check(inblossom[labeled] == bx, "stale inblossom entry");
          label[labeled] = kLabelFree;
          label[endpoint[mate[blossombase[bx]]]] = kLabelFree;
          assign_label(labeled, kLabelT, labelend[labeled]);
        }
        j += jstep;
      }
    }
    label[b] = kLabelFree;
    labelend[b] = -1;
    blossomchilds[b].clear();
    blossomendps[b].clear();
    blossombase[b] = -1;
    blossombestedges[b].clear();
    bestedge[b] = -1;
    unusedblossoms.push_back(b);
  }

  // Swaps matched and unmatched edges along b's cycle so that vertex v
  // becomes the blossom's base.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent[t] != b) t = blossomparent[t];
    if (t >= nvertex) augment_blossom(t, v);
    const int i = static_cast<int>(std::find(blossomchilds[b].begin(), blossomchilds[b].end(), t) -
                                   blossomchilds[b].begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= static_cast<int>(blossomchilds[b].size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      int tt = child_at(b, j);
      const int p = endp_at(b, j - endptrick) ^ endptrick;
      if (tt >= nvertex) augment_blossom(tt, endpoint[p]);
      j += jstep;
      tt = child_at(b, j);
      if (tt >= nvertex) augment_blossom(tt, endpoint[p ^ 1]);
      mate[endpoint[p]] = p ^ 1;
      mate[endpoint[p ^ 1]] = p;
    }
    std::rotate(blossomchilds[b].begin(), blossomchilds[b].begin() + i, blossomchilds[b].end());
    std::rotate(blossomendps[b].begin(), blossomendps[b].begin() + i, blossomendps[b].end());
    blossombase[b] = blossombase[blossomchilds[b][0]];
    check(blossombase[b] == v, "augment did not rebase the blossom");
  }

  void augment_matching(int k) {
    const int v = edge_u[k];
    const int w = edge_v[k];
    const std::pair<int, int> sides[2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (auto [s, p] : sides) {
      while (true) {
        const int bs = inblossom[s];
        check(label[bs] == kLabelS, "augmenting through non-S node");
        check(labelend[bs] == mate[blossombase[bs]], "S node inconsistent with matching");
        if (bs >= nvertex) augment_blossom(bs, s);
        mate[s] = p;
        if (labelend[bs] == -1) break;  // exposed root reached
        const int t = endpoint[labelend[bs]];
        const int bt = inblossom[t];
        check(label[bt] == kLabelT, "expected T node while augmenting");
        check(labelend[bt] >= 0, "T node without tree edge");
        s = endpoint[labelend[bt]];
        const int j = endpoint[labelend[bt] ^ 1];
        check(blossombase[bt] == t, "T blossom base mismatch");
        if (bt >= nvertex) augment_blossom(bt, j);
        mate[j] = labelend[bt];
        p = labelend[bt] ^ 1;
      }
    }
  }

  void run() {
    for (int stage = 0; stage < nvertex; ++stage) {
      std::fill(label.begin(), label.end(), kLabelFree);
      std::fill(bestedge.begin(), bestedge.end(), -1);
      for (int b = nvertex; b < 2 * nvertex; ++b) blossombestedges[b].clear();
      std::fill(allowedge.begin(), allowedge.end(), 0);
      queue.clear();

      for (int v = 0; v < nvertex; ++v)
        if (mate[v] == -1 && label[inblossom[v]] == kLabelFree) assign_label(v, kLabelS, -1);

      bool augmented = false;
      while (true) {
        while (!queue.empty() && !augmented) {
          const int v = queue.back();
          queue.pop_back();
          check(label[inblossom[v]] == kLabelS, "queued vertex is not in an S node");
          for (int p : neighbend[v]) {
            const int k = p / 2;
            const int w = endpoint[p];
            if (inblossom[v] == inblossom[w]) continue;
            int64_t kslack = 0;
            if (!allowedge[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge[k] = 1;
            }
            if (allowedge[k]) {
              if (label[inblossom[w]] == kLabelFree) {
                assign_label(w, kLabelT, p ^ 1);
              } else if (label[inblossom[w]] == kLabelS) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label[w] == kLabelFree) {
                label[w] = kLabelT;
                labelend[w] = p ^ 1;
              }
            } else if (label[inblossom[w]] == kLabelS) {
              const int b = inblossom[v];
              if (bestedge[b] == -1 || kslack < slack(bestedge[b])) bestedge[b] = k;
            } else if (label[w] == kLabelFree) {
              if (bestedge[w] == -1 || kslack < slack(bestedge[w])) bestedge[w] = k;
            }
          }
        }
        if (augmented) break;

        // Choose the binding dual adjustment. Cardinality always takes
        // priority, so the vertex-dual bound (delta 1) is only the final
        // fallback once no other move exists.
        int deltatype = -1;
        int64_t delta = 0;
        int deltaedge = -1, deltablossom = -1;
        for (int v = 0; v < nvertex; ++v) {
          if (label[inblossom[v]] == kLabelFree && bestedge[v] != -1) {
            const int64_t d = slack(bestedge[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge[v];
            }
          }
        }
        for (int b = 0; b < 2 * nvertex; ++b) {
          if (blossomparent[b] == -1 && label[b] == kLabelS && bestedge[b] != -1) {
            const int64_t kslack = slack(bestedge[b]);
            check(kslack % 2 == 0, "odd S-S slack");
            const int64_t d = kslack / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge[b];
            }
          }
        }
        for (int b = nvertex; b < 2 * nvertex; ++b) {
          if (blossombase[b] >= 0 && blossomparent[b] == -1 && label[b] == kLabelT &&
              (deltatype == -1 || dualvar[b] < delta)) {
            delta = dualvar[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          deltatype = 1;
          int64_t m = dualvar[0];
          for (int v = 1; v < nvertex; ++v) m = std::min(m, dualvar[v]);
          delta = std::max<int64_t>(0, m);
        }

        for (int v = 0; v < nvertex; ++v) {
          const int lb = label[inblossom[v]];
          if (lb == kLabelS)
            dualvar[v] -= delta;
          else if (lb == kLabelT)
            dualvar[v] += delta;
        }
        for (int b = nvertex; b < 2 * nvertex; ++b) {
          if (blossombase[b] >= 0 && blossomparent[b] == -1) {
            if (label[b] == kLabelS)
              dualvar[b] += delta;
            else if (label[b] == kLabelT)
              dualvar[b] -= delta;
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge[deltaedge] = 1;
          int i = edge_u[deltaedge];
          int j = edge_v[deltaedge];
          if (label[inblossom[i]] == kLabelFree) std::swap(i, j);
          check(label[inblossom[i]] == kLabelS, "delta2 edge has no S side");
          queue.push_back(i);
        } else if (deltatype == 3) {
          allowedge[deltaedge] = 1;
          queue.push_back(edge_u[deltaedge]);
        } else if (deltatype == 4) {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;

      for (int b = nvertex; b < 2 * nvertex; ++b)
        if (blossomparent[b] == -1 && blossombase[b] >= 0 && label[b] == kLabelS && dualvar[b] == 0)
          expand_blossom(b, true);
    }
  }
};

}  // namespace

std::vector<int> max_weight_matching(int nvertex, const std::vector<std::vector<int64_t>>& weight) {
  std::vector<int> result(nvertex, -1);
  if (nvertex == 0) return result;
  Matcher m(nvertex, weight);
  m.run();
  for (int v = 0; v < nvertex; ++v)
    if (m.mate[v] >= 0) result[v] = m.endpoint[m.mate[v]];
  for (int v = 0; v < nvertex; ++v)
    Matcher::check(result[v] == -1 || result[result[v]] == v, "mate array is not symmetric");
  return result;
}

}  // namespace semitsp::detail
