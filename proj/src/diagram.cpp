#include "skeincoeff/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace skein {

namespace {

Diagram raw_union(const Diagram& a, const Diagram& b, int drop_loops) {
  std::vector<int> mates = a.mates();
  const int offset = a.port_count();
  for (int m : b.mates()) mates.push_back(m + offset);
  std::vector<Strand> over = a.over_strands();
  over.insert(over.end(), b.over_strands().begin(), b.over_strands().end());
  return Diagram(std::move(mates), std::move(over), a.free_loops() + b.free_loops() - drop_loops);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

// ------------------------------------------------------------------- Diagram

Diagram::Diagram(std::vector<int> mates, std::vector<Strand> over, int free_loops)
    : mates_(std::move(mates)), over_(std::move(over)), free_loops_(free_loops) {
  if (mates_.size() != 4 * over_.size()) throw std::invalid_argument("diagram: need exactly 4 ports per crossing");
  if (free_loops_ < 0) throw std::invalid_argument("diagram: negative free loop count");
  const int n = port_count();
  for (int p = 0; p < n; ++p) {
    int m = mates_[static_cast<std::size_t>(p)];
    if (m < 0 || m >= n || m == p || mates_[static_cast<std::size_t>(m)] != p)
      throw std::invalid_argument("diagram: port matching is not a perfect matching (port " + std::to_string(p) + ")");
  }
  if (over_.empty() && free_loops_ == 0) throw std::invalid_argument("diagram: no components");
}

Diagram Diagram::unlink(int r) {
  if (r < 1) throw std::invalid_argument("unlink: r must be >= 1");
  return Diagram({}, {}, r);
}

void Diagram::check_crossing(int crossing) const {
  if (crossing < 0 || crossing >= crossing_count())
    throw std::out_of_range("unknown crossing id " + std::to_string(crossing));
}

void Diagram::check_port(int port) const {
  if (port < 0 || port >= port_count()) throw std::out_of_range("unknown port " + std::to_string(port));
}

std::string Diagram::key() const {
  std::string k;
  k.reserve(mates_.size() * 2 + over_.size() + 8);
  auto put = [&](int v) {
    k.push_back(static_cast<char>(v & 0xff));
    k.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  put(free_loops_);
  put(crossing_count());
  for (int m : mates_) put(m);
  for (Strand s : over_) k.push_back(s == Strand::U ? 'u' : 'v');
  return k;
}

// --------------------------------------------------------------- Orientation

Orientation Orientation::parse(std::string_view signs) {
  Orientation o;
  for (char ch : signs) {
    if (ch == '+')
      o.reversed.push_back(false);
    else if (ch == '-')
      o.reversed.push_back(true);
    else
      throw std::invalid_argument(std::string("orientation: expected '+' or '-', got '") + ch + "'");
  }
  return o;
}

std::string Orientation::str() const {
  std::string s;
  for (bool r : reversed) s.push_back(r ? '-' : '+');
  return s;
}

// ---------------------------------------------------------------- components

bool ComponentMap::is_entry(int port, const Orientation& o) const {
  int comp = component_of[static_cast<std::size_t>(port)];
  if (comp >= static_cast<int>(o.reversed.size())) throw std::invalid_argument("orientation does not cover every component");
  return canonical_entry[static_cast<std::size_t>(port)] != o.reversed[static_cast<std::size_t>(comp)];
}

ComponentMap component_map(const Diagram& d) {
  ComponentMap cm;
  const auto n = static_cast<std::size_t>(d.port_count());
  cm.component_of.assign(n, -1);
  cm.canonical_entry.assign(n, false);
  for (int start = 0; start < d.port_count(); ++start) {
    if (cm.component_of[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(cm.closed.size());
    Component comp;
    int port = start;
    do {
      int out = opposite(port);
      cm.component_of[static_cast<std::size_t>(port)] = id;
      cm.component_of[static_cast<std::size_t>(out)] = id;
      cm.canonical_entry[static_cast<std::size_t>(port)] = true;
      comp.ports.push_back(port);
      comp.ports.push_back(out);
      port = d.mate(out);
    } while (port != start);
    cm.closed.push_back(std::move(comp));
  }
  cm.free_loops = d.free_loops();
  return cm;
}

std::vector<Component> components(const Diagram& d) { return component_map(d).closed; }

int r_of(const Diagram& d) { return component_map(d).count(); }

int c_of(const Diagram& d) { return d.crossing_count(); }

int delta_p(const Diagram& d, int p) {
  d.check_crossing(p);
  ComponentMap cm = component_map(d);
  return cm.component_of[static_cast<std::size_t>(port_of(p, 0))] == cm.component_of[static_cast<std::size_t>(port_of(p, 1))] ? 0 : 1;
}

// ------------------------------------------------------------------ excision

namespace detail {

Excision excise(const Diagram& d, const std::vector<int>& crossings, const std::vector<std::array<int, 4>>& through) {
  if (crossings.size() != through.size()) throw std::invalid_argument("excise: one slot pairing per crossing");
  const int c = d.crossing_count();
  std::vector<int> removed_index(static_cast<std::size_t>(c), -1);
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    d.check_crossing(crossings[k]);
    if (removed_index[static_cast<std::size_t>(crossings[k])] != -1) throw std::invalid_argument("excise: repeated crossing");
    removed_index[static_cast<std::size_t>(crossings[k])] = static_cast<int>(k);
  }
  auto removed = [&](int port) { return removed_index[static_cast<std::size_t>(crossing_of(port))] != -1; };
  auto pass = [&](int port) {
    const auto& t = through[static_cast<std::size_t>(removed_index[static_cast<std::size_t>(crossing_of(port))])];
    return port_of(crossing_of(port), t[static_cast<std::size_t>(slot_of(port))]);
  };

  Excision out;
  out.port_map.assign(static_cast<std::size_t>(d.port_count()), -1);
  int next = 0;
  for (int x = 0; x < c; ++x) {
    if (removed_index[static_cast<std::size_t>(x)] != -1) continue;
    for (int s = 0; s < 4; ++s) out.port_map[static_cast<std::size_t>(port_of(x, s))] = port_of(next, s);
    ++next;
  }

  std::vector<int> mates(static_cast<std::size_t>(4 * next), -1);
  std::vector<Strand> over;
  for (int x = 0; x < c; ++x)
    if (removed_index[static_cast<std::size_t>(x)] == -1) over.push_back(d.over(x));

  auto link = [&](int a, int b) {
    int na = out.port_map[static_cast<std::size_t>(a)];
    int nb = out.port_map[static_cast<std::size_t>(b)];
    mates[static_cast<std::size_t>(na)] = nb;
    mates[static_cast<std::size_t>(nb)] = na;
  };

  for (int p = 0; p < d.port_count(); ++p)
    if (!removed(p) && !removed(d.mate(p))) link(p, d.mate(p));

  std::vector<bool> seen(static_cast<std::size_t>(d.port_count()), false);
  for (int p = 0; p < d.port_count(); ++p) {
    if (!removed(p) || seen[static_cast<std::size_t>(p)] || removed(d.mate(p))) continue;
    int cur = p;
    seen[static_cast<std::size_t>(cur)] = true;
    while (true) {
      int t = pass(cur);
      seen[static_cast<std::size_t>(t)] = true;
      int n = d.mate(t);
      if (!removed(n)) {
        link(d.mate(p), n);
        break;
      }
      cur = n;
      seen[static_cast<std::size_t>(cur)] = true;
    }
  }

  int loops = 0;
  for (int p = 0; p < d.port_count(); ++p) {
    if (!removed(p) || seen[static_cast<std::size_t>(p)]) continue;
    int cur = p;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      int t = pass(cur);
      seen[static_cast<std::size_t>(t)] = true;
      cur = d.mate(t);
    } while (cur != p);
    ++loops;
  }

  out.diagram = Diagram(std::move(mates), std::move(over), d.free_loops() + loops);
  return out;
}

}  // namespace detail

// -------------------------------------------------------- local operations

Diagram splice(const Diagram& d, int p, SpliceKind kind) {
  d.check_crossing(p);
  std::array<int, 4> pairing = kind == SpliceKind::A ? std::array<int, 4>{1, 0, 3, 2} : std::array<int, 4>{3, 2, 1, 0};
  return detail::excise(d, {p}, {pairing}).diagram;
}

int delta_shift(const Diagram& d, int p, SpliceKind kind) { return r_of(splice(d, p, kind)) - r_of(d); }

Diagram crossing_change(const Diagram& d, int p) {
  d.check_crossing(p);
  std::vector<Strand> over = d.over_strands();
  over[static_cast<std::size_t>(p)] = other(over[static_cast<std::size_t>(p)]);
  return Diagram(d.mates(), std::move(over), d.free_loops());
}

Diagram mirror(const Diagram& d) {
  std::vector<Strand> over = d.over_strands();
  for (Strand& s : over) s = other(s);
  return Diagram(d.mates(), std::move(over), d.free_loops());
}

namespace {

int sign_with(const Diagram& d, const ComponentMap& cm, int p, const Orientation& o) {
  auto entry_slot = [&](Strand s) {
    int first = s == Strand::U ? 0 : 1;
    return cm.is_entry(port_of(p, first), o) ? first : first + 2;
  };
  int s_over = entry_slot(d.over(p));
  int s_under = entry_slot(d.under(p));
  return ((s_over - s_under) % 4 + 4) % 4 == 3 ? 1 : -1;
}

void check_orientation(const ComponentMap& cm, const Orientation& o) {
  if (static_cast<int>(o.reversed.size()) != cm.count())
    throw std::invalid_argument("orientation has " + std::to_string(o.reversed.size()) + " entries for " +
                                std::to_string(cm.count()) + " components");
}

}  // namespace

int sign_of(const Diagram& d, int p, const Orientation& o) {
  d.check_crossing(p);
  ComponentMap cm = component_map(d);
  check_orientation(cm, o);
  return sign_with(d, cm, p, o);
}

int writhe(const Diagram& d, const Orientation& o) {
  ComponentMap cm = component_map(d);
  check_orientation(cm, o);
  int w = 0;
  for (int p = 0; p < d.crossing_count(); ++p) w += sign_with(d, cm, p, o);
  return w;
}

// ------------------------------------------------------- union and summing

std::vector<EdgeRef> edge_refs(const Diagram& d) {
  std::vector<EdgeRef> out;
  for (int p = 0; p < d.port_count(); ++p) out.push_back({p});
  if (d.free_loops() > 0) out.push_back({EdgeRef::kLoop});
  return out;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) { return raw_union(a, b, 0); }

Diagram connected_sum(const Diagram& a, const Diagram& b, EdgeRef ea, EdgeRef eb) {
  if (ea.port == EdgeRef::kLoop) {
    if (a.free_loops() == 0) throw std::invalid_argument("connected_sum: first diagram has no free loop");
    if (eb.port != EdgeRef::kLoop) b.check_port(eb.port);
    else if (b.free_loops() == 0) throw std::invalid_argument("connected_sum: second diagram has no free loop");
    return raw_union(a, b, 1);
  }
  a.check_port(ea.port);
  if (eb.port == EdgeRef::kLoop) {
    if (b.free_loops() == 0) throw std::invalid_argument("connected_sum: second diagram has no free loop");
    return raw_union(a, b, 1);
  }
  b.check_port(eb.port);
  const int offset = a.port_count();
  std::vector<int> mates = a.mates();
  for (int m : b.mates()) mates.push_back(m + offset);
  const int x = ea.port;
  const int mx = a.mate(x);
  const int x2 = eb.port + offset;
  const int mx2 = b.mate(eb.port) + offset;
  auto join = [&](int u, int v) {
    mates[static_cast<std::size_t>(u)] = v;
    mates[static_cast<std::size_t>(v)] = u;
  };
  join(x, mx2);
  join(x2, mx);
  std::vector<Strand> over = a.over_strands();
  over.insert(over.end(), b.over_strands().begin(), b.over_strands().end());
  return Diagram(std::move(mates), std::move(over), a.free_loops() + b.free_loops());
}

// -------------------------------------------------------------------- faces

std::vector<std::vector<int>> faces(const Diagram& d) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(d.port_count()), false);
  for (int start = 0; start < d.port_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> face;
    int dart = start;
    do {
      seen[static_cast<std::size_t>(dart)] = true;
      face.push_back(dart);
      int arrive = d.mate(dart);
      dart = port_of(crossing_of(arrive), (slot_of(arrive) + 1) % 4);
    } while (dart != start);
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<std::vector<int>> pieces(const Diagram& d) {
  UnionFind uf(d.crossing_count());
  for (int p = 0; p < d.port_count(); ++p) uf.unite(crossing_of(p), crossing_of(d.mate(p)));
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < d.crossing_count(); ++x) groups[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies_euler(const Diagram& d) {
  if (d.crossing_count() == 0) return true;
  UnionFind uf(d.crossing_count());
  for (int p = 0; p < d.port_count(); ++p) uf.unite(crossing_of(p), crossing_of(d.mate(p)));
  std::map<int, int> vertices, face_count;
  for (int x = 0; x < d.crossing_count(); ++x) ++vertices[uf.find(x)];
  for (const auto& f : faces(d)) ++face_count[uf.find(crossing_of(f.front()))];
  for (const auto& [root, v] : vertices) {
    // 4-valent: E = 2V, so V - E + F = 2 means F = V + 2
    if (face_count[root] != v + 2) return false;
  }
  return true;
}

// ----------------------------------------------------------------------- PD

Diagram parse_pd(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("PD parse error at offset " + std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    std::size_t start = pos;
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000'000) fail("edge label too large");
      ++pos;
    }
    if (pos == start) fail("expected a positive integer edge label");
    if (v == 0) fail("edge labels must be positive");
    return static_cast<int>(v);
  };

  std::vector<std::array<int, 4>> quads;
  int loops = 0;
  // tokens may be separated by whitespace and/or commas, as in "X[1,4,2,3], X[3,2,4,1]"
  auto separator = [&](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (true) {
    while (pos < text.size() && separator(text[pos])) ++pos;
    if (pos >= text.size()) break;
    char ch = text[pos];
    if (ch == 'O') {
      ++pos;
      if (pos < text.size() && !separator(text[pos])) fail("malformed token after 'O'");
      ++loops;
    } else if (ch == 'X') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || (text[pos] != '(' && text[pos] != '[')) fail("expected '(' after 'X'");
      char close = text[pos] == '(' ? ')' : ']';
      ++pos;
      std::array<int, 4> q{};
      for (int i = 0; i < 4; ++i) {
        if (i) expect(',');
        q[static_cast<std::size_t>(i)] = number();
      }
      expect(close);
      quads.push_back(q);
    } else {
      fail(std::string("malformed token starting with '") + ch + "'");
    }
  }
  if (quads.empty() && loops == 0) throw ParseError("PD parse error: empty diagram");

  std::map<int, std::vector<int>> where;
  for (std::size_t i = 0; i < quads.size(); ++i)
    for (int s = 0; s < 4; ++s) where[quads[i][static_cast<std::size_t>(s)]].push_back(port_of(static_cast<int>(i), s));
  std::vector<int> mates(4 * quads.size(), -1);
  for (const auto& [label, ports] : where) {
    if (ports.size() != 2)
      throw ParseError("PD parse error: edge label " + std::to_string(label) + " occurs " + std::to_string(ports.size()) +
                       " times (expected 2)");
    mates[static_cast<std::size_t>(ports[0])] = ports[1];
    mates[static_cast<std::size_t>(ports[1])] = ports[0];
  }
  Diagram d(std::move(mates), std::vector<Strand>(quads.size(), Strand::V), loops);
  if (!satisfies_euler(d)) throw ParseError("PD parse error: crossings do not close up into a planar diagram");
  return d;
}

std::vector<std::vector<int>> pd_quadruples(const Diagram& d) {
  std::vector<int> label(static_cast<std::size_t>(d.port_count()), 0);
  int next = 1;
  for (int p = 0; p < d.port_count(); ++p) {
    if (label[static_cast<std::size_t>(p)]) continue;
    label[static_cast<std::size_t>(p)] = next;
    label[static_cast<std::size_t>(d.mate(p))] = next;
    ++next;
  }
  std::vector<std::vector<int>> out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    // entries 1 and 3 of the quadruple must be the under-strand
    int first = d.over(x) == Strand::V ? 0 : 1;
    std::vector<int> q;
    for (int i = 0; i < 4; ++i) q.push_back(label[static_cast<std::size_t>(port_of(x, (first + i) % 4))]);
    out.push_back(std::move(q));
  }
  return out;
}

std::string to_pd(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& q : pd_quadruples(d)) {
    if (!first) os << ' ';
    first = false;
    os << "X(" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ')';
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    if (!first) os << ' ';
    first = false;
    os << 'O';
  }
  return os.str();
}

}  // namespace skein
