#include "folk/fincat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace folk {

FinCat::FinCat(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows,
               std::vector<int> identity, std::vector<int> comp)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      identity_(std::move(identity)),
      comp_(std::move(comp)) {
  // Identity arrows are always named id_<object>, so serialization and
  // the tagged constructions agree on references.
  for (size_t x = 0; x < identity_.size(); ++x)
    if (identity_[x] >= 0) arrows_[identity_[x]].name = "id_" + objects_[x];
  for (int i = 0; i < num_objects(); ++i) obj_index_[objects_[i]] = i;
  for (int i = 0; i < num_arrows(); ++i) arr_index_[arrows_[i].name] = i;
  inverse_.assign(arrows_.size(), -1);
  for (int a = 0; a < num_arrows(); ++a) {
    for (int b = 0; b < num_arrows(); ++b) {
      if (!composable(b, a) || !composable(a, b)) continue;
      if (compose(b, a) == identity_[src(a)] && compose(a, b) == identity_[src(b)]) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

FinCat::FinCat(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows,
               std::vector<int> identity, ProductView view)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      identity_(std::move(identity)),
      view_(std::move(view)) {
  for (size_t x = 0; x < identity_.size(); ++x)
    if (identity_[x] >= 0) arrows_[identity_[x]].name = "id_" + objects_[x];
  for (int i = 0; i < num_objects(); ++i) obj_index_[objects_[i]] = i;
  for (int i = 0; i < num_arrows(); ++i) arr_index_[arrows_[i].name] = i;
}

bool FinCat::is_identity(int a) const { return identity_[arrows_[a].src] == a && arrows_[a].src == arrows_[a].tgt; }

int FinCat::object_index(const std::string& n) const {
  auto it = obj_index_.find(n);
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCat::arrow_index(const std::string& n) const {
  auto it = arr_index_.find(n);
  return it == arr_index_.end() ? -1 : it->second;
}

std::vector<int> FinCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a)
    if (src(a) == x && tgt(a) == y) out.push_back(a);
  return out;
}

int FinCat::unique_arrow(int x, int y) const {
  int found = -1;
  for (int a = 0; a < num_arrows(); ++a) {
    if (src(a) == x && tgt(a) == y) {
      if (found >= 0) throw std::logic_error("unique_arrow: hom-set not a singleton in " + name_);
      found = a;
    }
  }
  if (found < 0) throw std::logic_error("unique_arrow: empty hom-set in " + name_);
  return found;
}

bool FinCat::is_indiscrete() const {
  for (int x = 0; x < num_objects(); ++x)
    for (int y = 0; y < num_objects(); ++y)
      if (hom(x, y).size() != 1) return false;
  return true;
}

std::string ValidationReport::summary() const {
  if (pass()) return "pass";
  std::ostringstream os;
  os << "fail";
  for (const auto& i : issues) os << "\n  " << i.law << ": " << i.witness;
  return os.str();
}

ValidationReport validate(const FinCat& c) {
  ValidationReport rep;
  auto add = [&](const std::string& law, const std::string& witness) {
    rep.issues.push_back({law, witness});
  };
  const int no = c.num_objects(), na = c.num_arrows();
  if (static_cast<int>(c.objects().size()) != no) add("shape", "object list size");
  for (int x = 0; x < no; ++x) {
    int e = c.identity(x);
    if (e < 0 || e >= na) {
      add("identity-total", c.object_name(x));
      continue;
    }
    if (c.src(e) != x || c.tgt(e) != x)
      add("identity-endpoints", c.object_name(x) + " has identity " + c.arrow(e).name);
  }
  for (int g = 0; g < na; ++g) {
    for (int f = 0; f < na; ++f) {
      int gf = c.compose(g, f);
      if (!c.composable(g, f)) {
        if (gf != -1)
          add("composition-domain", c.arrow(g).name + " . " + c.arrow(f).name + " defined but not composable");
        continue;
      }
      if (gf < 0 || gf >= na) {
        add("composition-total", c.arrow(g).name + " . " + c.arrow(f).name + " missing");
        continue;
      }
      if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
        add("composition-endpoints", c.arrow(g).name + " . " + c.arrow(f).name + " = " + c.arrow(gf).name);
    }
  }
  if (!rep.pass()) return rep;  // laws below assume a total well-typed table
  for (int g = 0; g < na; ++g) {
    int l = c.identity(c.tgt(g)), r = c.identity(c.src(g));
    if (c.compose(l, g) != g)
      add("left-unit", "id . " + c.arrow(g).name);
    if (c.compose(g, r) != g)
      add("right-unit", c.arrow(g).name + " . id");
  }
  for (int h = 0; h < na; ++h)
    for (int g = 0; g < na; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < na; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
          add("associativity", "(" + c.arrow(h).name + ", " + c.arrow(g).name + ", " + c.arrow(f).name + ")");
      }
    }
  return rep;
}

bool operator==(const FunctorMap& a, const FunctorMap& b) {
  return a.dom.get() == b.dom.get() && a.cod.get() == b.cod.get() && a.obj_map == b.obj_map &&
         a.arr_map == b.arr_map;
}

FunctorMap identity_functor(CatPtr c) {
  FunctorMap f;
  f.dom = c;
  f.cod = c;
  f.obj_map.resize(c->num_objects());
  f.arr_map.resize(c->num_arrows());
  for (int i = 0; i < c->num_objects(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c->num_arrows(); ++i) f.arr_map[i] = i;
  f.name = "id_" + c->name();
  return f;
}

FunctorMap compose(const FunctorMap& g, const FunctorMap& f) {
  if (f.cod.get() != g.dom.get()) throw std::logic_error("compose: endpoint mismatch");
  FunctorMap out;
  out.dom = f.dom;
  out.cod = g.cod;
  out.obj_map.resize(f.obj_map.size());
  out.arr_map.resize(f.arr_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i) out.obj_map[i] = g.obj_map[f.obj_map[i]];
  for (size_t i = 0; i < f.arr_map.size(); ++i) out.arr_map[i] = g.arr_map[f.arr_map[i]];
  out.name = g.name + "." + f.name;
  return out;
}

ValidationReport validate(const FunctorMap& f) {
  ValidationReport rep;
  auto add = [&](const std::string& law, const std::string& witness) {
    rep.issues.push_back({law, witness});
  };
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  if (static_cast<int>(f.obj_map.size()) != A.num_objects()) {
    add("object-map-total", "size");
    return rep;
  }
  if (static_cast<int>(f.arr_map.size()) != A.num_arrows()) {
    add("arrow-map-total", "size");
    return rep;
  }
  for (int x = 0; x < A.num_objects(); ++x)
    if (f.obj(x) < 0 || f.obj(x) >= B.num_objects()) add("object-map-range", A.object_name(x));
  for (int a = 0; a < A.num_arrows(); ++a)
    if (f.arr(a) < 0 || f.arr(a) >= B.num_arrows()) add("arrow-map-range", A.arrow(a).name);
  if (!rep.pass()) return rep;
  for (int a = 0; a < A.num_arrows(); ++a) {
    if (B.src(f.arr(a)) != f.obj(A.src(a)) || B.tgt(f.arr(a)) != f.obj(A.tgt(a)))
      add("endpoints", A.arrow(a).name);
  }
  for (int x = 0; x < A.num_objects(); ++x)
    if (f.arr(A.identity(x)) != B.identity(f.obj(x))) add("identities", A.object_name(x));
  // Composable pairs only, via adjacency lists on the middle object.
  std::vector<std::vector<int>> in(A.num_objects()), out(A.num_objects());
  for (int a = 0; a < A.num_arrows(); ++a) {
    in[A.tgt(a)].push_back(a);
    out[A.src(a)].push_back(a);
  }
  for (int m = 0; m < A.num_objects(); ++m)
    for (int g : out[m])
      for (int h : in[m]) {
        if (f.arr(A.compose(g, h)) != B.compose(f.arr(g), f.arr(h)))
          add("composition", A.arrow(g).name + " . " + A.arrow(h).name);
      }
  return rep;
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.source_fun == b.source_fun && a.target_fun == b.target_fun &&
         a.components == b.components;
}

ValidationReport validate(const NatTrans& n) {
  ValidationReport rep;
  auto add = [&](const std::string& law, const std::string& witness) {
    rep.issues.push_back({law, witness});
  };
  const FunctorMap& F = n.source_fun;
  const FunctorMap& G = n.target_fun;
  if (F.dom.get() != G.dom.get() || F.cod.get() != G.cod.get()) {
    add("parallel", "source/target functors not parallel");
    return rep;
  }
  const FinCat& A = *F.dom;
  const FinCat& B = *F.cod;
  if (static_cast<int>(n.components.size()) != A.num_objects()) {
    add("components-total", "size");
    return rep;
  }
  for (int x = 0; x < A.num_objects(); ++x) {
    int cx = n.components[x];
    if (cx < 0 || cx >= B.num_arrows() || B.src(cx) != F.obj(x) || B.tgt(cx) != G.obj(x))
      add("component-endpoints", A.object_name(x));
  }
  if (!rep.pass()) return rep;
  for (int u = 0; u < A.num_arrows(); ++u) {
    int x = A.src(u), y = A.tgt(u);
    if (B.compose(n.components[y], F.arr(u)) != B.compose(G.arr(u), n.components[x]))
      add("naturality", A.arrow(u).name);
  }
  return rep;
}

bool commutes(const Square& s) { return compose(s.right, s.top) == compose(s.bottom, s.left); }

Product product(CatPtr a, CatPtr b) {
  const int nao = a->num_objects(), nbo = b->num_objects();
  const int naa = a->num_arrows(), nba = b->num_arrows();
  std::vector<std::string> objects;
  objects.reserve(static_cast<size_t>(nao) * nbo);
  for (int i = 0; i < nao; ++i)
    for (int j = 0; j < nbo; ++j)
      objects.push_back("(" + a->object_name(i) + "," + b->object_name(j) + ")");
  std::vector<Arrow> arrows;
  arrows.reserve(static_cast<size_t>(naa) * nba);
  for (int u = 0; u < naa; ++u)
    for (int w = 0; w < nba; ++w) {
      Arrow ar;
      ar.name = "(" + a->arrow(u).name + "," + b->arrow(w).name + ")";
      ar.src = a->src(u) * nbo + b->src(w);
      ar.tgt = a->tgt(u) * nbo + b->tgt(w);
      arrows.push_back(ar);
    }
  std::vector<int> identity(static_cast<size_t>(nao) * nbo);
  for (int i = 0; i < nao; ++i)
    for (int j = 0; j < nbo; ++j)
      identity[static_cast<size_t>(i) * nbo + j] = a->identity(i) * nba + b->identity(j);
  Product p;
  p.a = a;
  p.b = b;
  p.cat = std::make_shared<FinCat>("(" + a->name() + "x" + b->name() + ")", std::move(objects),
                                   std::move(arrows), std::move(identity),
                                   FinCat::ProductView{a, b});
  FunctorMap p1, p2;
  p1.dom = p.cat;
  p1.cod = a;
  p2.dom = p.cat;
  p2.cod = b;
  for (int i = 0; i < nao; ++i)
    for (int j = 0; j < nbo; ++j) {
      p1.obj_map.push_back(i);
      p2.obj_map.push_back(j);
    }
  for (int u = 0; u < naa; ++u)
    for (int w = 0; w < nba; ++w) {
      p1.arr_map.push_back(u);
      p2.arr_map.push_back(w);
    }
  p1.name = "pr1";
  p2.name = "pr2";
  p.proj1 = std::move(p1);
  p.proj2 = std::move(p2);
  return p;
}

FunctorMap pairing(const Product& p, const FunctorMap& f, const FunctorMap& g) {
  if (f.dom.get() != g.dom.get() || f.cod.get() != p.a.get() || g.cod.get() != p.b.get())
    throw std::logic_error("pairing: endpoint mismatch");
  FunctorMap out;
  out.dom = f.dom;
  out.cod = p.cat;
  for (size_t x = 0; x < f.obj_map.size(); ++x)
    out.obj_map.push_back(p.obj(f.obj_map[x], g.obj_map[x]));
  for (size_t a = 0; a < f.arr_map.size(); ++a)
    out.arr_map.push_back(p.arr(f.arr_map[a], g.arr_map[a]));
  out.name = "<" + f.name + "," + g.name + ">";
  return out;
}

FunctorMap product_map(const Product& pab, const Product& pcd, const FunctorMap& f,
                       const FunctorMap& g) {
  return pairing(pcd, compose(f, pab.proj1), compose(g, pab.proj2));
}

int Exponential::object_index(const FunctorMap& f) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i].obj_map == f.obj_map && objects[i].arr_map == f.arr_map)
      return static_cast<int>(i);
  return -1;
}

int Exponential::arrow_index(int src_obj, int tgt_obj, const std::vector<int>& components) const {
  for (size_t i = 0; i < arrows.size(); ++i) {
    const NatTrans& n = arrows[i];
    if (n.components != components) continue;
    if (objects[src_obj].obj_map != n.source_fun.obj_map ||
        objects[src_obj].arr_map != n.source_fun.arr_map)
      continue;
    if (objects[tgt_obj].obj_map != n.target_fun.obj_map ||
        objects[tgt_obj].arr_map != n.target_fun.arr_map)
      continue;
    return static_cast<int>(i);
  }
  return -1;
}

namespace {

// Enumerates all natural transformations F => G by backtracking over
// components with naturality pruning.
void enumerate_nats(const FunctorMap& F, const FunctorMap& G,
                    std::vector<std::vector<int>>& out) {
  const FinCat& A = *F.dom;
  const FinCat& B = *F.cod;
  const int no = A.num_objects();
  std::vector<int> comp(no, -1);
  std::function<void(int)> rec = [&](int x) {
    if (x == no) {
      out.push_back(comp);
      return;
    }
    for (int c = 0; c < B.num_arrows(); ++c) {
      if (B.src(c) != F.obj(x) || B.tgt(c) != G.obj(x)) continue;
      comp[x] = c;
      bool ok = true;
      for (int u = 0; u < A.num_arrows() && ok; ++u) {
        int sx = A.src(u), tx = A.tgt(u);
        if (sx > x || tx > x) continue;
        if (B.compose(comp[tx], F.arr(u)) != B.compose(G.arr(u), comp[sx])) ok = false;
      }
      if (ok) rec(x + 1);
      comp[x] = -1;
    }
  };
  rec(0);
}

}  // namespace

Exponential exponential_by(CatPtr i, CatPtr b) {
  Exponential e;
  e.exponent = i;
  e.base = b;
  e.objects = enumerate_functors(i, b);
  struct Ar {
    int src, tgt;
    std::vector<int> comp;
  };
  std::vector<Ar> raw;
  for (size_t si = 0; si < e.objects.size(); ++si)
    for (size_t ti = 0; ti < e.objects.size(); ++ti) {
      std::vector<std::vector<int>> comps;
      enumerate_nats(e.objects[si], e.objects[ti], comps);
      for (auto& c : comps) raw.push_back({static_cast<int>(si), static_cast<int>(ti), c});
    }
  std::vector<std::string> objects;
  for (size_t k = 0; k < e.objects.size(); ++k) objects.push_back("F" + std::to_string(k));
  std::vector<Arrow> arrows;
  for (size_t k = 0; k < raw.size(); ++k)
    arrows.push_back({"n" + std::to_string(k), raw[k].src, raw[k].tgt});
  std::vector<int> identity(e.objects.size(), -1);
  for (size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].src != raw[k].tgt) continue;
    bool is_id = true;
    for (int x = 0; x < i->num_objects(); ++x)
      if (raw[k].comp[x] != b->identity(e.objects[raw[k].src].obj(x))) is_id = false;
    if (is_id) identity[raw[k].src] = static_cast<int>(k);
  }
  const size_t n = raw.size();
  std::vector<int> comp(n * n, -1);
  std::map<std::tuple<int, int, std::vector<int>>, int> raw_lookup;
  for (size_t k = 0; k < raw.size(); ++k)
    raw_lookup[{raw[k].src, raw[k].tgt, raw[k].comp}] = static_cast<int>(k);
  auto find_raw = [&](int s, int t, const std::vector<int>& c) {
    auto it = raw_lookup.find({s, t, c});
    return it == raw_lookup.end() ? -1 : it->second;
  };
  for (size_t g = 0; g < n; ++g)
    for (size_t f = 0; f < n; ++f) {
      if (raw[f].tgt != raw[g].src) continue;
      std::vector<int> c(i->num_objects());
      for (int x = 0; x < i->num_objects(); ++x)
        c[x] = b->compose(raw[g].comp[x], raw[f].comp[x]);
      comp[g * n + f] = find_raw(raw[f].src, raw[g].tgt, c);
    }
  e.cat = std::make_shared<FinCat>(b->name() + "^" + i->name(), std::move(objects),
                                   std::move(arrows), std::move(identity), std::move(comp));
  for (size_t k = 0; k < raw.size(); ++k) {
    NatTrans nt;
    nt.source_fun = e.objects[raw[k].src];
    nt.target_fun = e.objects[raw[k].tgt];
    nt.components = raw[k].comp;
    nt.name = "n" + std::to_string(k);
    e.arrows.push_back(std::move(nt));
  }
  return e;
}

int PullbackCat::object_index(int xa, int xb) const {
  for (size_t i = 0; i < object_pairs.size(); ++i)
    if (object_pairs[i] == std::make_pair(xa, xb)) return static_cast<int>(i);
  return -1;
}

int PullbackCat::arrow_index(int ua, int ub) const {
  for (size_t i = 0; i < arrow_pairs.size(); ++i)
    if (arrow_pairs[i] == std::make_pair(ua, ub)) return static_cast<int>(i);
  return -1;
}

PullbackCat pullback(const Cospan& cs) {
  if (cs.left.cod.get() != cs.right.cod.get()) throw std::logic_error("pullback: cospan mismatch");
  const FinCat& A = *cs.left.dom;
  const FinCat& B = *cs.right.dom;
  PullbackCat pb;
  pb.cospan = cs;
  for (int x = 0; x < A.num_objects(); ++x)
    for (int y = 0; y < B.num_objects(); ++y)
      if (cs.left.obj(x) == cs.right.obj(y)) pb.object_pairs.push_back({x, y});
  for (int u = 0; u < A.num_arrows(); ++u)
    for (int w = 0; w < B.num_arrows(); ++w)
      if (cs.left.arr(u) == cs.right.arr(w)) pb.arrow_pairs.push_back({u, w});
  std::vector<std::string> objects;
  for (auto& [x, y] : pb.object_pairs)
    objects.push_back("(" + A.object_name(x) + "|" + B.object_name(y) + ")");
  std::vector<Arrow> arrows;
  for (auto& [u, w] : pb.arrow_pairs) {
    Arrow ar;
    ar.name = "(" + A.arrow(u).name + "|" + B.arrow(w).name + ")";
    ar.src = pb.object_index(A.src(u), B.src(w));
    ar.tgt = pb.object_index(A.tgt(u), B.tgt(w));
    arrows.push_back(ar);
  }
  std::map<std::pair<int, int>, int> arrow_lookup;
  for (size_t i = 0; i < pb.arrow_pairs.size(); ++i)
    arrow_lookup[pb.arrow_pairs[i]] = static_cast<int>(i);
  auto find_arrow = [&](int ua, int ub) {
    auto it = arrow_lookup.find({ua, ub});
    return it == arrow_lookup.end() ? -1 : it->second;
  };
  std::vector<int> identity(pb.object_pairs.size());
  for (size_t i = 0; i < pb.object_pairs.size(); ++i)
    identity[i] = find_arrow(A.identity(pb.object_pairs[i].first),
                             B.identity(pb.object_pairs[i].second));
  const size_t n = pb.arrow_pairs.size();
  std::vector<int> comp(n * n, -1);
  for (size_t g = 0; g < n; ++g)
    for (size_t f = 0; f < n; ++f) {
      if (arrows[f].tgt != arrows[g].src) continue;
      comp[g * n + f] = find_arrow(A.compose(pb.arrow_pairs[g].first, pb.arrow_pairs[f].first),
                                   B.compose(pb.arrow_pairs[g].second, pb.arrow_pairs[f].second));
    }
  pb.cat = std::make_shared<FinCat>("pb(" + cs.left.name + "," + cs.right.name + ")",
                                    std::move(objects), std::move(arrows), std::move(identity),
                                    std::move(comp));
  FunctorMap ta, tb;
  ta.dom = pb.cat;
  ta.cod = cs.left.dom;
  tb.dom = pb.cat;
  tb.cod = cs.right.dom;
  for (auto& [x, y] : pb.object_pairs) {
    ta.obj_map.push_back(x);
    tb.obj_map.push_back(y);
  }
  for (auto& [u, w] : pb.arrow_pairs) {
    ta.arr_map.push_back(u);
    tb.arr_map.push_back(w);
  }
  ta.name = "pb_pr1";
  tb.name = "pb_pr2";
  pb.to_a = std::move(ta);
  pb.to_b = std::move(tb);
  return pb;
}

FunctorMap pullback_induce(const PullbackCat& pb, const FunctorMap& u, const FunctorMap& w) {
  if (u.dom.get() != w.dom.get()) throw std::logic_error("pullback_induce: domain mismatch");
  if (compose(pb.cospan.left, u) != compose(pb.cospan.right, w))
    throw std::logic_error("pullback_induce: legs do not commute with cospan");
  FunctorMap out;
  out.dom = u.dom;
  out.cod = pb.cat;
  for (size_t x = 0; x < u.obj_map.size(); ++x) {
    int o = pb.object_index(u.obj_map[x], w.obj_map[x]);
    if (o < 0) throw std::logic_error("pullback_induce: object not in pullback");
    out.obj_map.push_back(o);
  }
  for (size_t a = 0; a < u.arr_map.size(); ++a) {
    int m = pb.arrow_index(u.arr_map[a], w.arr_map[a]);
    if (m < 0) throw std::logic_error("pullback_induce: arrow not in pullback");
    out.arr_map.push_back(m);
  }
  out.name = "<" + u.name + "|" + w.name + ">";
  return out;
}

FunctorConstraint empty_constraint(const FinCat& a) {
  FunctorConstraint c;
  c.obj.assign(a.num_objects(), -1);
  c.arr.assign(a.num_arrows(), -1);
  return c;
}

namespace {

// Shared backtracking core for enumeration and constrained search.
// Visits functors in deterministic order; returns false from `emit` to
// keep searching, true to stop.
bool functor_backtrack(const CatPtr& a, const CatPtr& b, const FunctorConstraint& constraint,
                       const std::function<bool(const FunctorMap&)>& pred,
                       const std::function<bool(FunctorMap&&)>& emit) {
  const FinCat& A = *a;
  const FinCat& B = *b;
  const int no = A.num_objects(), na = A.num_arrows();
  std::vector<int> obj(constraint.obj), arr(constraint.arr);
  // Non-identity arrows in index order; identities are forced.
  std::vector<int> free_arrows;
  for (int i = 0; i < na; ++i)
    if (!A.is_identity(i)) free_arrows.push_back(i);

  // A composition triple (g, f, gf) becomes checkable exactly when its
  // last member is assigned; the last member is a factor or the composite.
  auto triples_ok = [&](int i) {
    for (int g = 0; g < na; ++g) {
      if (arr[g] < 0) continue;
      if (A.composable(g, i)) {
        int gi = A.compose(g, i);
        if (arr[gi] >= 0 && B.compose(arr[g], arr[i]) != arr[gi]) return false;
      }
      if (A.composable(i, g)) {
        int ig = A.compose(i, g);
        if (arr[ig] >= 0 && B.compose(arr[i], arr[g]) != arr[ig]) return false;
      }
      for (int f = 0; f < na; ++f) {
        if (arr[f] < 0 || !A.composable(g, f)) continue;
        if (A.compose(g, f) == i && B.compose(arr[g], arr[f]) != arr[i]) return false;
      }
    }
    return true;
  };

  std::function<bool(size_t)> rec_arr = [&](size_t k) -> bool {
    if (k == free_arrows.size()) {
      FunctorMap f;
      f.dom = a;
      f.cod = b;
      f.obj_map = obj;
      f.arr_map = arr;
      if (pred && !pred(f)) return false;
      return emit(std::move(f));
    }
    int i = free_arrows[k];
    bool fixed = constraint.arr[i] >= 0;
    int first = fixed ? constraint.arr[i] : 0;
    int last = fixed ? constraint.arr[i] + 1 : B.num_arrows();
    for (int c = first; c < last; ++c) {
      if (B.src(c) != obj[A.src(i)] || B.tgt(c) != obj[A.tgt(i)]) continue;
      arr[i] = c;
      if (triples_ok(i) && rec_arr(k + 1)) return true;
      arr[i] = constraint.arr[i];
    }
    return false;
  };

  std::function<bool(int)> rec_obj = [&](int x) -> bool {
    if (x == no) {
      bool conflict = false;
      for (int i = 0; i < no; ++i) {
        int e = A.identity(i);
        if (constraint.arr[e] >= 0 && constraint.arr[e] != B.identity(obj[i])) conflict = true;
        arr[e] = B.identity(obj[i]);
      }
      bool r = !conflict && rec_arr(0);
      for (int i = 0; i < no; ++i) arr[A.identity(i)] = constraint.arr[A.identity(i)];
      return r;
    }
    bool fixed = constraint.obj[x] >= 0;
    for (int c = fixed ? constraint.obj[x] : 0; c < (fixed ? constraint.obj[x] + 1 : B.num_objects());
         ++c) {
      obj[x] = c;
      if (rec_obj(x + 1)) return true;
      obj[x] = constraint.obj[x];
    }
    return false;
  };

  return rec_obj(0);
}

}  // namespace

std::vector<FunctorMap> enumerate_functors(CatPtr a, CatPtr b) {
  std::vector<FunctorMap> out;
  functor_backtrack(a, b, empty_constraint(*a), nullptr, [&](FunctorMap&& f) {
    f.name = "F" + std::to_string(out.size());
    out.push_back(std::move(f));
    return false;
  });
  return out;
}

std::optional<FunctorMap> search_functor(CatPtr a, CatPtr b, const FunctorConstraint& constraint,
                                         const std::function<bool(const FunctorMap&)>& pred) {
  std::optional<FunctorMap> result;
  functor_backtrack(a, b, constraint, pred, [&](FunctorMap&& f) {
    result = std::move(f);
    return true;
  });
  return result;
}

std::vector<FunctorMap> enumerate_functors_constrained(CatPtr a, CatPtr b,
                                                       const FunctorConstraint& constraint,
                                                       size_t limit) {
  std::vector<FunctorMap> out;
  functor_backtrack(a, b, constraint, nullptr, [&](FunctorMap&& f) {
    f.name = "F" + std::to_string(out.size());
    out.push_back(std::move(f));
    return limit != 0 && out.size() >= limit;
  });
  return out;
}

std::optional<FunctorMap> search_section(const FunctorMap& m) {
  const FinCat& X = *m.dom;  // total
  const FinCat& Y = *m.cod;  // base; we want n : Y -> X with m∘n = id
  const int no = Y.num_objects(), na = Y.num_arrows();
  std::vector<int> obj(no, -1), arr(na, -1);
  std::vector<int> free_arrows;
  for (int i = 0; i < na; ++i)
    if (!Y.is_identity(i)) free_arrows.push_back(i);

  std::function<bool(size_t)> rec_arr = [&](size_t k) -> bool {
    if (k == free_arrows.size()) return true;
    int i = free_arrows[k];
    for (int c = 0; c < X.num_arrows(); ++c) {
      if (m.arr(c) != i) continue;
      if (X.src(c) != obj[Y.src(i)] || X.tgt(c) != obj[Y.tgt(i)]) continue;
      arr[i] = c;
      bool ok = true;
      for (int g = 0; g < na && ok; ++g) {
        if (arr[g] < 0) continue;
        if (Y.composable(g, i)) {
          int gi = Y.compose(g, i);
          if (arr[gi] >= 0 && X.compose(arr[g], arr[i]) != arr[gi]) ok = false;
        }
        if (ok && Y.composable(i, g)) {
          int ig = Y.compose(i, g);
          if (arr[ig] >= 0 && X.compose(arr[i], arr[g]) != arr[ig]) ok = false;
        }
        for (int f = 0; f < na && ok; ++f) {
          if (arr[f] < 0 || !Y.composable(g, f)) continue;
          if (Y.compose(g, f) == i && X.compose(arr[g], arr[f]) != arr[i]) ok = false;
        }
      }
      if (ok && rec_arr(k + 1)) return true;
      arr[i] = -1;
    }
    return false;
  };

  std::function<bool(int)> rec_obj = [&](int y) -> bool {
    if (y == no) {
      for (int i = 0; i < no; ++i) {
        int e = X.identity(obj[i]);
        if (m.arr(e) != Y.identity(i)) return false;
        arr[Y.identity(i)] = e;
      }
      if (rec_arr(0)) return true;
      for (int i = 0; i < no; ++i) arr[Y.identity(i)] = -1;
      return false;
    }
    for (int c = 0; c < X.num_objects(); ++c) {
      if (m.obj(c) != y) continue;
      obj[y] = c;
      if (rec_obj(y + 1)) return true;
      obj[y] = -1;
    }
    return false;
  };

  if (!rec_obj(0)) return std::nullopt;
  FunctorMap n;
  n.dom = m.cod;
  n.cod = m.dom;
  n.obj_map = obj;
  n.arr_map = arr;
  n.name = "sec(" + m.name + ")";
  return n;
}

bool fully_faithful(const FunctorMap& f) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  for (int x = 0; x < A.num_objects(); ++x)
    for (int y = 0; y < A.num_objects(); ++y) {
      std::vector<int> ha = A.hom(x, y);
      std::vector<int> hb = B.hom(f.obj(x), f.obj(y));
      if (ha.size() != hb.size()) return false;
      std::vector<int> image;
      for (int a : ha) image.push_back(f.arr(a));
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    }
  return true;
}

bool essentially_surjective(const FunctorMap& f) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  for (int y = 0; y < B.num_objects(); ++y) {
    bool hit = false;
    for (int x = 0; x < A.num_objects() && !hit; ++x)
      for (int a : B.hom(f.obj(x), y))
        if (B.is_iso(a)) {
          hit = true;
          break;
        }
    if (!hit) return false;
  }
  return true;
}

bool equivalence_oracle(const FunctorMap& f) {
  return fully_faithful(f) && essentially_surjective(f);
}

bool injective_on_objects_oracle(const FunctorMap& j) {
  std::vector<int> seen;
  for (int v : j.obj_map) {
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
    seen.push_back(v);
  }
  return true;
}

bool surjective_on_objects(const FunctorMap& f) {
  std::vector<bool> hit(f.cod->num_objects(), false);
  for (int v : f.obj_map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FunctorMap functor_into_indiscrete(CatPtr dom, CatPtr cod, std::vector<int> obj_map,
                                   std::string name) {
  FunctorMap f;
  f.dom = dom;
  f.cod = cod;
  f.obj_map = std::move(obj_map);
  f.arr_map.resize(dom->num_arrows());
  for (int a = 0; a < dom->num_arrows(); ++a)
    f.arr_map[a] = cod->unique_arrow(f.obj_map[dom->src(a)], f.obj_map[dom->tgt(a)]);
  f.name = std::move(name);
  return f;
}

bool structurally_equal(const FinCat& a, const FinCat& b) {
  // Same objects in order; arrows matched by name (serialization may
  // reorder them, identities in particular), same sources, targets,
  // identities and composition under that matching.
  if (a.objects() != b.objects()) return false;
  if (a.num_arrows() != b.num_arrows()) return false;
  std::vector<int> to_b(a.num_arrows(), -1);
  for (int i = 0; i < a.num_arrows(); ++i) {
    int j = b.arrow_index(a.arrow(i).name);
    if (j < 0 || a.arrow(i).src != b.arrow(j).src || a.arrow(i).tgt != b.arrow(j).tgt)
      return false;
    to_b[i] = j;
  }
  for (int x = 0; x < a.num_objects(); ++x)
    if (to_b[a.identity(x)] != b.identity(x)) return false;
  for (int g = 0; g < a.num_arrows(); ++g)
    for (int f = 0; f < a.num_arrows(); ++f) {
      if (!a.composable(g, f)) continue;
      if (to_b[a.compose(g, f)] != b.compose(to_b[g], to_b[f])) return false;
    }
  return true;
}

}  // namespace folk
