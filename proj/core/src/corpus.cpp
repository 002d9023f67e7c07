#include "folk/corpus.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "folk/textio.hpp"

namespace folk {

namespace {

struct RawArrow {
  std::string name;
  int src, tgt;
};

CatPtr build_category(const std::string& name, std::vector<std::string> objects,
                      std::vector<RawArrow> extra,
                      const std::vector<std::array<int, 3>>& comp_entries) {
  std::vector<Arrow> arrows;
  std::vector<int> identity(objects.size());
  for (size_t x = 0; x < objects.size(); ++x) {
    identity[x] = static_cast<int>(arrows.size());
    arrows.push_back({"id_" + objects[x], static_cast<int>(x), static_cast<int>(x)});
  }
  int base = static_cast<int>(arrows.size());
  for (const auto& ra : extra) arrows.push_back({ra.name, ra.src, ra.tgt});
  const size_t na = arrows.size();
  std::vector<int> comp(na * na, -1);
  for (size_t g = 0; g < na; ++g) {
    if (arrows[g].src == arrows[g].tgt &&
        identity[arrows[g].src] == static_cast<int>(g))
      for (size_t f = 0; f < na; ++f)
        if (arrows[f].tgt == arrows[g].src) comp[g * na + f] = static_cast<int>(f);
    comp[g * na + identity[arrows[g].src]] = static_cast<int>(g);
  }
  for (const auto& e : comp_entries)
    comp[static_cast<size_t>(base + e[0]) * na + (base + e[1])] = base + e[2];
  return std::make_shared<FinCat>(name, std::move(objects), std::move(arrows),
                                  std::move(identity), std::move(comp));
}

}  // namespace

Corpus default_corpus(Kit& kit) {
  Corpus c;
  c.version = "corpus-1";
  CatPtr one = kit.one();
  CatPtr I = kit.I();
  CatPtr S = kit.S();
  CatPtr two = build_category("two", {"a", "b"}, {{"u", 0, 1}}, {});
  CatPtr disc2 = build_category("disc2", {"a", "b"}, {}, {});
  CatPtr parpair = build_category("parpair", {"a", "b"}, {{"u", 0, 1}, {"v", 0, 1}}, {});
  // One-object group Z/2; the 2-object groupoid with Z/2 automorphisms is
  // its product with the interval, rebuilt under a corpus name.
  CatPtr bz2;
  {
    std::vector<std::string> objects{"z"};
    std::vector<Arrow> arrows{{"id_z", 0, 0}, {"t", 0, 0}};
    std::vector<int> identity{0};
    std::vector<int> comp{0, 1, 1, 0};
    bz2 = std::make_shared<FinCat>("bz2", std::move(objects), std::move(arrows),
                                   std::move(identity), std::move(comp));
  }
  Product z2p = product(I, bz2);
  CatPtr z2grp;
  {
    const FinCat& zc = *z2p.cat;
    std::vector<int> ident(zc.num_objects());
    for (int x = 0; x < zc.num_objects(); ++x) ident[x] = zc.identity(x);
    int n = zc.num_arrows();
    std::vector<int> comp(static_cast<size_t>(n) * n);
    for (int g = 0; g < n; ++g)
      for (int f = 0; f < n; ++f) comp[static_cast<size_t>(g) * n + f] = zc.compose_raw(g, f);
    z2grp = std::make_shared<FinCat>("z2grp", zc.objects(), zc.arrows(), std::move(ident),
                                     std::move(comp));
  }
  c.base = {one, two, I, S, disc2, parpair, z2grp};
  c.categories = c.base;
  for (size_t i = 0; i < c.base.size(); ++i)
    for (size_t j = i; j < c.base.size(); ++j)
      c.categories.push_back(product(c.base[i], c.base[j]).cat);
  c.test_family = c.base;
  for (const auto& a : c.base)
    for (const auto& b : c.base) {
      const auto& fs = kit.functors(a, b);
      for (size_t k = 0; k < fs.size(); ++k) {
        FunctorMap f = fs[k];
        f.name = a->name() + ">" + b->name() + "#" + std::to_string(k);
        c.functors.push_back(std::move(f));
      }
    }
  // Curated retract instances: identity retracts and product retracts
  // A as a retract of A x I via (id, const 0).
  auto add_product_retract = [&](const FunctorMap& f) {
    const Product& pa = kit.cyl_product(f.dom);
    const Product& pb = kit.cyl_product(f.cod);
    RetractData d;
    d.g0 = pairing(pa, identity_functor(f.dom), compose(kit.iv().i0, kit.bang(f.dom)));
    d.r0 = pa.proj1;
    d.g1 = pairing(pb, identity_functor(f.cod), compose(kit.iv().i0, kit.bang(f.cod)));
    d.r1 = pb.proj1;
    d.f = kit.cylF(f);
    d.f_prime = f;
    ClosureInstance inst;
    inst.name = "cyl-retract(" + f.name + ")";
    inst.retract = d;
    c.retracts.push_back(inst);
  };
  for (const auto& f : c.functors) {
    if (f.dom->num_arrows() > 4 || f.cod->num_arrows() > 4) continue;
    // Identity retract.
    RetractData d;
    d.g0 = identity_functor(f.dom);
    d.r0 = d.g0;
    d.g1 = identity_functor(f.cod);
    d.r1 = d.g1;
    d.f = f;
    d.f_prime = f;
    c.retracts.push_back({"id-retract(" + f.name + ")", d});
    add_product_retract(f);
    if (c.retracts.size() > 40) break;
  }
  return c;
}

Corpus load_corpus(Kit& kit, const std::string& dir, int max_arrows) {
  Corpus c;
  c.version = "corpus-dir:" + dir;
  Workspace ws;
  ws.kit = &kit;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".cat") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    parse_text(ws, buf.str());
  }
  for (const auto& [name, cat] : ws.categories) {
    c.categories.push_back(cat);
    if (cat->num_arrows() <= max_arrows) c.base.push_back(cat);
  }
  c.test_family = c.base;
  for (const auto& a : c.base)
    for (const auto& b : c.base) {
      const auto& fs = kit.functors(a, b);
      for (size_t k = 0; k < fs.size(); ++k) {
        FunctorMap f = fs[k];
        f.name = a->name() + ">" + b->name() + "#" + std::to_string(k);
        c.functors.push_back(std::move(f));
      }
    }
  return c;
}

std::vector<Homotopy> homotopies_between(Kit& kit, CatPtr a, CatPtr b, size_t cap) {
  std::vector<Homotopy> out;
  CatPtr ca = kit.cyl(a);
  auto carriers = enumerate_functors_constrained(ca, b, empty_constraint(*ca), cap);
  for (const auto& carrier : carriers) out.push_back(make_homotopy(kit, a, carrier));
  return out;
}

std::vector<Homotopy> corpus_homotopies(Kit& kit, const Corpus& corpus, size_t cap_per_pair) {
  std::vector<Homotopy> out;
  for (const auto& a : corpus.base)
    for (const auto& b : corpus.base) {
      size_t before = out.size();
      for (const auto& h : homotopies_between(kit, a, b, cap_per_pair)) out.push_back(h);
      // Identity homotopies are always included when a cap truncated.
      bool capped = cap_per_pair != 0 && out.size() - before >= cap_per_pair;
      if (capped)
        for (const auto& f : kit.functors(a, b)) out.push_back(identity_homotopy(kit, f));
    }
  return out;
}

}  // namespace folk
