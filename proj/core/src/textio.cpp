#include "folk/textio.hpp"

#include <sstream>
#include <vector>

namespace folk {

CatPtr Workspace::category(const std::string& name) const {
  auto it = categories.find(name);
  if (it == categories.end()) throw std::runtime_error("unknown category: " + name);
  return it->second;
}

FunctorMap Workspace::functor(const std::string& name) const {
  auto it = functors.find(name);
  if (it == functors.end()) throw std::runtime_error("unknown functor: " + name);
  return it->second;
}

Homotopy Workspace::homotopy(const std::string& name) const {
  auto it = homotopies.find(name);
  if (it == homotopies.end()) throw std::runtime_error("unknown homotopy: " + name);
  return it->second;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    Line l;
    l.number = number;
    std::string tok;
    while (ls >> tok) l.tokens.push_back(tok);
    if (!l.tokens.empty()) lines.push_back(std::move(l));
  }
  return lines;
}

void expect(bool cond, int line, const std::string& msg) {
  if (!cond) throw ParseError(line, msg);
}

// category block: consumes lines until the next block keyword.
size_t parse_category_block(Workspace& ws, const std::vector<Line>& lines, size_t at) {
  const Line& head = lines[at];
  expect(head.tokens.size() == 2, head.number, "expected: category NAME");
  std::string name = head.tokens[1];
  std::vector<std::string> objects;
  struct RawArrow {
    std::string name, src, tgt;
    int line;
  };
  std::vector<RawArrow> raw_arrows;
  struct RawComp {
    std::string f, g, h;
    int line;
  };
  std::vector<RawComp> raw_comps;
  size_t i = at + 1;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (kw == "category" || kw == "functor" || kw == "nat" || kw == "homotopy" || kw == "square")
      break;
    if (kw == "object") {
      expect(l.tokens.size() == 2, l.number, "expected: object X");
      objects.push_back(l.tokens[1]);
    } else if (kw == "arrow") {
      expect(l.tokens.size() == 6 && l.tokens[2] == ":" && l.tokens[4] == "->", l.number,
             "expected: arrow f : X -> Y");
      raw_arrows.push_back({l.tokens[1], l.tokens[3], l.tokens[5], l.number});
    } else if (l.tokens.size() == 5 && l.tokens[1] == "." && l.tokens[3] == "=") {
      raw_comps.push_back({l.tokens[0], l.tokens[2], l.tokens[4], l.number});
    } else {
      throw ParseError(l.number, "unexpected line in category block");
    }
  }
  // Assemble: identities are implicit and named id_X.
  std::map<std::string, int> obj_idx;
  for (size_t k = 0; k < objects.size(); ++k) {
    expect(!obj_idx.count(objects[k]), head.number, "duplicate object " + objects[k]);
    obj_idx[objects[k]] = static_cast<int>(k);
  }
  std::vector<Arrow> arrows;
  std::vector<int> identity(objects.size());
  for (size_t k = 0; k < objects.size(); ++k) {
    identity[k] = static_cast<int>(arrows.size());
    arrows.push_back({"id_" + objects[k], static_cast<int>(k), static_cast<int>(k)});
  }
  std::map<std::string, int> arr_idx;
  for (size_t k = 0; k < arrows.size(); ++k) arr_idx[arrows[k].name] = static_cast<int>(k);
  for (const auto& ra : raw_arrows) {
    expect(obj_idx.count(ra.src), ra.line, "unknown source object " + ra.src);
    expect(obj_idx.count(ra.tgt), ra.line, "unknown target object " + ra.tgt);
    expect(!arr_idx.count(ra.name), ra.line, "duplicate arrow " + ra.name);
    arr_idx[ra.name] = static_cast<int>(arrows.size());
    arrows.push_back({ra.name, obj_idx[ra.src], obj_idx[ra.tgt]});
  }
  const size_t na = arrows.size();
  std::vector<int> comp(na * na, -1);
  // Identity compositions are implicit.
  for (size_t g = 0; g < na; ++g) {
    if (arrows[g].src == arrows[g].tgt && identity[arrows[g].src] == static_cast<int>(g)) {
      for (size_t f = 0; f < na; ++f)
        if (arrows[f].tgt == arrows[g].src) comp[g * na + f] = static_cast<int>(f);
    }
    comp[g * na + identity[arrows[g].src]] = static_cast<int>(g);
  }
  for (const auto& rc : raw_comps) {
    expect(arr_idx.count(rc.f), rc.line, "unknown arrow " + rc.f);
    expect(arr_idx.count(rc.g), rc.line, "unknown arrow " + rc.g);
    expect(arr_idx.count(rc.h), rc.line, "unknown arrow " + rc.h);
    int fi = arr_idx[rc.f], gi = arr_idx[rc.g], hi = arr_idx[rc.h];
    expect(arrows[gi].tgt == arrows[fi].src, rc.line,
           rc.f + " . " + rc.g + " is not a composable pair");
    comp[static_cast<size_t>(fi) * na + gi] = hi;
  }
  // Totality over non-identity composable pairs.
  for (size_t g = 0; g < na; ++g)
    for (size_t f = 0; f < na; ++f) {
      if (arrows[f].tgt != arrows[g].src) continue;
      if (comp[g * na + f] < 0)
        throw ParseError(head.number, "missing composition entry " + arrows[g].name + " . " +
                                          arrows[f].name + " in category " + name);
    }
  auto cat = std::make_shared<FinCat>(name, objects, std::move(arrows), std::move(identity),
                                      std::move(comp));
  ValidationReport rep = validate(*cat);
  if (!rep.pass())
    throw ParseError(head.number, "category " + name + " fails validation: " + rep.summary());
  // Re-declarations must agree; the original instance stays canonical so
  // functors parsed from different files compose.
  auto existing = ws.categories.find(name);
  if (existing != ws.categories.end()) {
    if (!structurally_equal(*existing->second, *cat))
      throw ParseError(head.number, "category " + name + " redeclared with different structure");
    return i;
  }
  ws.categories[name] = cat;
  return i;
}

size_t parse_functor_block(Workspace& ws, const std::vector<Line>& lines, size_t at) {
  const Line& head = lines[at];
  expect(head.tokens.size() == 6 && head.tokens[2] == ":" && head.tokens[4] == "->", head.number,
         "expected: functor F : C -> D");
  std::string name = head.tokens[1];
  expect(ws.categories.count(head.tokens[3]), head.number, "unknown category " + head.tokens[3]);
  expect(ws.categories.count(head.tokens[5]), head.number, "unknown category " + head.tokens[5]);
  CatPtr dom = ws.categories[head.tokens[3]];
  CatPtr cod = ws.categories[head.tokens[5]];
  FunctorMap f;
  f.dom = dom;
  f.cod = cod;
  f.name = name;
  f.obj_map.assign(dom->num_objects(), -1);
  f.arr_map.assign(dom->num_arrows(), -1);
  size_t i = at + 1;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (kw == "category" || kw == "functor" || kw == "nat" || kw == "homotopy" || kw == "square")
      break;
    if (kw == "object") {
      expect(l.tokens.size() == 4 && l.tokens[2] == "->", l.number, "expected: object X -> U");
      int x = dom->object_index(l.tokens[1]);
      int u = cod->object_index(l.tokens[3]);
      expect(x >= 0, l.number, "unknown object " + l.tokens[1]);
      expect(u >= 0, l.number, "unknown object " + l.tokens[3]);
      f.obj_map[x] = u;
    } else if (kw == "arrow") {
      expect(l.tokens.size() == 4 && l.tokens[2] == "->", l.number, "expected: arrow f -> u");
      int a = dom->arrow_index(l.tokens[1]);
      int u = cod->arrow_index(l.tokens[3]);
      expect(a >= 0, l.number, "unknown arrow " + l.tokens[1]);
      expect(u >= 0, l.number, "unknown arrow " + l.tokens[3]);
      f.arr_map[a] = u;
    } else {
      throw ParseError(l.number, "unexpected line in functor block");
    }
  }
  for (int x = 0; x < dom->num_objects(); ++x)
    expect(f.obj_map[x] >= 0, head.number,
           "functor " + name + " missing object image for " + dom->object_name(x));
  for (int a = 0; a < dom->num_arrows(); ++a) {
    if (f.arr_map[a] >= 0) continue;
    if (dom->is_identity(a)) {
      f.arr_map[a] = cod->identity(f.obj_map[dom->src(a)]);
    } else {
      throw ParseError(head.number,
                       "functor " + name + " missing arrow image for " + dom->arrow(a).name);
    }
  }
  ValidationReport rep = validate(f);
  if (!rep.pass())
    throw ParseError(head.number, "functor " + name + " fails validation: " + rep.summary());
  ws.functors[name] = std::move(f);
  return i;
}

size_t parse_nat_block(Workspace& ws, const std::vector<Line>& lines, size_t at) {
  const Line& head = lines[at];
  expect(head.tokens.size() == 6 && head.tokens[2] == ":" && head.tokens[4] == "=>", head.number,
         "expected: nat N : F => G");
  std::string name = head.tokens[1];
  expect(ws.functors.count(head.tokens[3]), head.number, "unknown functor " + head.tokens[3]);
  expect(ws.functors.count(head.tokens[5]), head.number, "unknown functor " + head.tokens[5]);
  NatTrans n;
  n.name = name;
  n.source_fun = ws.functors[head.tokens[3]];
  n.target_fun = ws.functors[head.tokens[5]];
  CatPtr dom = n.source_fun.dom;
  CatPtr cod = n.source_fun.cod;
  n.components.assign(dom->num_objects(), -1);
  size_t i = at + 1;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (kw == "category" || kw == "functor" || kw == "nat" || kw == "homotopy" || kw == "square")
      break;
    expect(kw == "at" && l.tokens.size() == 4 && l.tokens[2] == ":", l.number,
           "expected: at X : u");
    int x = dom->object_index(l.tokens[1]);
    int u = cod->arrow_index(l.tokens[3]);
    expect(x >= 0, l.number, "unknown object " + l.tokens[1]);
    expect(u >= 0, l.number, "unknown arrow " + l.tokens[3]);
    n.components[x] = u;
  }
  for (int x = 0; x < dom->num_objects(); ++x)
    expect(n.components[x] >= 0, head.number, "nat " + name + " missing component at " +
                                                  dom->object_name(x));
  ValidationReport rep = validate(n);
  if (!rep.pass())
    throw ParseError(head.number, "nat " + name + " fails validation: " + rep.summary());
  ws.nats[name] = std::move(n);
  return i;
}

size_t parse_homotopy_block(Workspace& ws, const std::vector<Line>& lines, size_t at) {
  const Line& head = lines[at];
  expect(ws.kit != nullptr, head.number, "homotopy blocks need a kit");
  expect(head.tokens.size() == 6 && head.tokens[2] == ":" && head.tokens[4] == "->", head.number,
         "expected: homotopy H : A0 -> A1");
  std::string name = head.tokens[1];
  expect(ws.categories.count(head.tokens[3]), head.number, "unknown category " + head.tokens[3]);
  expect(ws.categories.count(head.tokens[5]), head.number, "unknown category " + head.tokens[5]);
  CatPtr a0 = ws.categories[head.tokens[3]];
  CatPtr a1 = ws.categories[head.tokens[5]];
  CatPtr ca = ws.kit->cyl(a0);
  FunctorMap carrier;
  carrier.dom = ca;
  carrier.cod = a1;
  carrier.name = name;
  carrier.obj_map.assign(ca->num_objects(), -1);
  carrier.arr_map.assign(ca->num_arrows(), -1);
  size_t i = at + 1;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (kw == "category" || kw == "functor" || kw == "nat" || kw == "homotopy" || kw == "square")
      break;
    if (kw == "object") {
      expect(l.tokens.size() == 4 && l.tokens[2] == "->", l.number, "expected: object X -> U");
      int x = ca->object_index(l.tokens[1]);
      int u = a1->object_index(l.tokens[3]);
      expect(x >= 0, l.number, "unknown cylinder object " + l.tokens[1]);
      expect(u >= 0, l.number, "unknown object " + l.tokens[3]);
      carrier.obj_map[x] = u;
    } else if (kw == "arrow") {
      expect(l.tokens.size() == 4 && l.tokens[2] == "->", l.number, "expected: arrow f -> u");
      int a = ca->arrow_index(l.tokens[1]);
      int u = a1->arrow_index(l.tokens[3]);
      expect(a >= 0, l.number, "unknown cylinder arrow " + l.tokens[1]);
      expect(u >= 0, l.number, "unknown arrow " + l.tokens[3]);
      carrier.arr_map[a] = u;
    } else {
      throw ParseError(l.number, "unexpected line in homotopy block");
    }
  }
  for (int x = 0; x < ca->num_objects(); ++x)
    expect(carrier.obj_map[x] >= 0, head.number,
           "homotopy " + name + " missing object image for " + ca->object_name(x));
  for (int a = 0; a < ca->num_arrows(); ++a) {
    if (carrier.arr_map[a] >= 0) continue;
    if (ca->is_identity(a)) {
      carrier.arr_map[a] = a1->identity(carrier.obj_map[ca->src(a)]);
    } else {
      throw ParseError(head.number,
                       "homotopy " + name + " missing arrow image for " + ca->arrow(a).name);
    }
  }
  ValidationReport rep = validate(carrier);
  if (!rep.pass())
    throw ParseError(head.number, "homotopy " + name + " fails validation: " + rep.summary());
  ws.homotopies[name] = make_homotopy(*ws.kit, a0, carrier);
  return i;
}

size_t parse_square_block(Workspace& ws, const std::vector<Line>& lines, size_t at) {
  const Line& head = lines[at];
  expect(head.tokens.size() == 2, head.number, "expected: square NAME");
  NamedSquare sq;
  size_t i = at + 1;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (kw == "category" || kw == "functor" || kw == "nat" || kw == "homotopy" || kw == "square")
      break;
    expect(l.tokens.size() == 2, l.number, "expected: left|right|top|bottom F");
    expect(ws.functors.count(l.tokens[1]), l.number, "unknown functor " + l.tokens[1]);
    if (kw == "left")
      sq.left = l.tokens[1];
    else if (kw == "right")
      sq.right = l.tokens[1];
    else if (kw == "top")
      sq.top = l.tokens[1];
    else if (kw == "bottom")
      sq.bottom = l.tokens[1];
    else
      throw ParseError(l.number, "unexpected line in square block");
  }
  expect(!sq.left.empty() && !sq.right.empty() && !sq.top.empty() && !sq.bottom.empty(),
         head.number, "square needs left, right, top and bottom");
  ws.squares[head.tokens[1]] = sq;
  return i;
}

}  // namespace

void parse_text(Workspace& ws, const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  size_t i = 0;
  while (i < lines.size()) {
    const std::string& kw = lines[i].tokens[0];
    if (kw == "category")
      i = parse_category_block(ws, lines, i);
    else if (kw == "functor")
      i = parse_functor_block(ws, lines, i);
    else if (kw == "nat")
      i = parse_nat_block(ws, lines, i);
    else if (kw == "homotopy")
      i = parse_homotopy_block(ws, lines, i);
    else if (kw == "square")
      i = parse_square_block(ws, lines, i);
    else
      throw ParseError(lines[i].number, "expected a category/functor/nat/homotopy/square block");
  }
}

namespace {

// Identities are implicit in the format and always referenced as id_X,
// whatever they are called internally (products synthesize other names).
std::string arrow_ref(const FinCat& c, int a) {
  if (c.is_identity(a)) return "id_" + c.object_name(c.src(a));
  return c.arrow(a).name;
}

}  // namespace

std::string print_category(const FinCat& c) {
  std::ostringstream os;
  os << "category " << c.name() << "\n";
  for (int x = 0; x < c.num_objects(); ++x) os << "object " << c.object_name(x) << "\n";
  for (int a = 0; a < c.num_arrows(); ++a) {
    if (c.is_identity(a)) continue;
    os << "arrow " << c.arrow(a).name << " : " << c.object_name(c.src(a)) << " -> "
       << c.object_name(c.tgt(a)) << "\n";
  }
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int f = 0; f < c.num_arrows(); ++f) {
      if (!c.composable(g, f) || c.is_identity(g) || c.is_identity(f)) continue;
      os << arrow_ref(c, g) << " . " << arrow_ref(c, f) << " = " << arrow_ref(c, c.compose(g, f))
         << "\n";
    }
  return os.str();
}

std::string print_functor(const FunctorMap& f) {
  std::ostringstream os;
  os << "functor " << f.name << " : " << f.dom->name() << " -> " << f.cod->name() << "\n";
  for (int x = 0; x < f.dom->num_objects(); ++x)
    os << "object " << f.dom->object_name(x) << " -> " << f.cod->object_name(f.obj(x)) << "\n";
  for (int a = 0; a < f.dom->num_arrows(); ++a) {
    if (f.dom->is_identity(a)) continue;
    os << "arrow " << arrow_ref(*f.dom, a) << " -> " << arrow_ref(*f.cod, f.arr(a)) << "\n";
  }
  return os.str();
}

std::string print_nat(const NatTrans& n) {
  std::ostringstream os;
  os << "nat " << n.name << " : " << n.source_fun.name << " => " << n.target_fun.name << "\n";
  for (int x = 0; x < n.source_fun.dom->num_objects(); ++x)
    os << "at " << n.source_fun.dom->object_name(x) << " : "
       << arrow_ref(*n.source_fun.cod, n.components[x]) << "\n";
  return os.str();
}

std::string print_homotopy(const Homotopy& h, const std::string& a0_name,
                           const std::string& a1_name) {
  std::ostringstream os;
  os << "homotopy " << (h.carrier.name.empty() ? "h" : h.carrier.name) << " : " << a0_name
     << " -> " << a1_name << "\n";
  const FinCat& ca = *h.carrier.dom;
  for (int x = 0; x < ca.num_objects(); ++x)
    os << "object " << ca.object_name(x) << " -> " << h.a1->object_name(h.carrier.obj(x)) << "\n";
  for (int a = 0; a < ca.num_arrows(); ++a) {
    if (ca.is_identity(a)) continue;
    os << "arrow " << arrow_ref(ca, a) << " -> " << arrow_ref(*h.a1, h.carrier.arr(a)) << "\n";
  }
  return os.str();
}

std::string print_square(const std::string& name, const NamedSquare& sq) {
  std::ostringstream os;
  os << "square " << name << "\n";
  os << "left " << sq.left << "\n";
  os << "right " << sq.right << "\n";
  os << "top " << sq.top << "\n";
  os << "bottom " << sq.bottom << "\n";
  return os.str();
}

}  // namespace folk
