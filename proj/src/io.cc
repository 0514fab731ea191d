// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dbmis/io.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace dbmis {

namespace {

int EncodeBound(int b) { return b == kUnbounded ? -1 : b; }

int DecodeBound(long long b) {
  if (b == -1) return kUnbounded;
  if (b < 0 || b > std::numeric_limits<int>::max() - 1) {
    throw InvalidArgument("bound " + std::to_string(b) + " out of range");
  }
  return static_cast<int>(b);
}

class Writer {
 public:
  Writer& Line(std::initializer_list<long long> values) {
    bool first = true;
    for (long long v : values) {
      if (!first) os_ << ' ';
      os_ << v;
      first = false;
    }
    os_ << '\n';
    return *this;
  }
  Writer& Word(std::string_view word) {
    os_ << word;
    return *this;
  }
  Writer& Keyed(std::string_view key, long long value) {
    os_ << key << ' ' << value << '\n';
    return *this;
  }
  // "<prefix> <count> ids..." on one line.
  Writer& Ids(std::string_view prefix, std::span<const int> ids) {
    os_ << prefix;
    if (!prefix.empty()) os_ << ' ';
    os_ << ids.size();
    for (int id : ids) os_ << ' ' << id;
    os_ << '\n';
    return *this;
  }
  std::string str() const { return os_.str(); }
  std::ostream& raw() { return os_; }

 private:
  std::ostringstream os_;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (c == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else {
        std::size_t start = i;
        while (i < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '#') {
          ++i;
        }
        tokens_.emplace_back(std::string(text.substr(start, i - start)), line);
      }
    }
  }

  bool AtEnd() const { return pos_ >= tokens_.size(); }

  std::string_view Peek() const {
    return AtEnd() ? std::string_view() : std::string_view(tokens_[pos_].first);
  }

  std::string Word() {
    if (AtEnd()) Fail("unexpected end of input");
    return tokens_[pos_++].first;
  }

  void Expect(std::string_view word) {
    std::string got = Word();
    if (got != word) {
      --pos_;
      Fail("expected '" + std::string(word) + "', found '" + got + "'");
    }
  }

  long long Int() {
    std::string w = Word();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      --pos_;
      Fail("expected an integer, found '" + w + "'");
    }
    return value;
  }

  int Count() {
    long long v = Int();
    if (v < 0 || v > 100000000) {
      --pos_;
      Fail("bad count " + std::to_string(v));
    }
    return static_cast<int>(v);
  }

  int Small() {
    long long v = Int();
    if (v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max()) {
      --pos_;
      Fail("integer out of range");
    }
    return static_cast<int>(v);
  }

  std::vector<int> Ids() {
    int n = Count();
    std::vector<int> out(n);
    for (int& x : out) x = Small();
    return out;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    std::size_t line = AtEnd() ? (tokens_.empty() ? 1 : tokens_.back().second)
                               : tokens_[pos_].second;
    throw InvalidArgument("line " + std::to_string(line) + ": " + message);
  }

 private:
  std::vector<std::pair<std::string, std::size_t>> tokens_;
  std::size_t pos_ = 0;
};

void WriteMatroid(Writer& w, const MatroidOracle& m) {
  switch (m.kind()) {
    case MatroidKind::kGraphic:
      w.raw() << "graphic " << m.graph_vertices() << ' ' << m.graph_edges().size() << '\n';
      for (auto [a, b] : m.graph_edges()) w.Line({a, b});
      break;
    case MatroidKind::kUniform:
      w.raw() << "uniform " << m.uniform_rank() << ' ';
      w.Ids("", m.ground());
      break;
    case MatroidKind::kFree:
      w.Ids("free", m.ground());
      break;
    case MatroidKind::kPartition:
      w.Ids("partition", m.ground());
      w.Keyed("parts", static_cast<long long>(m.parts().size()));
      for (std::size_t j = 0; j < m.parts().size(); ++j) {
        w.raw() << EncodeBound(m.capacities()[j]) << ' ';
        w.Ids("", m.parts()[j]);
      }
      break;
    case MatroidKind::kDirectSum:
      w.Keyed("direct_sum", static_cast<long long>(m.children().size()));
      for (const auto& child : m.children()) WriteMatroid(w, child);
      break;
    case MatroidKind::kRestriction:
      w.Ids("restriction", m.ground());
      WriteMatroid(w, m.base());
      break;
    case MatroidKind::kCopy: {
      // New id for each base element, in base ground order.
      std::map<ElementId, ElementId> fresh_of;
      for (std::size_t i = 0; i < m.ground().size(); ++i) {
        fresh_of[m.copy_sources()[i]] = m.ground()[i];
      }
      std::vector<int> fresh;
      for (ElementId old : m.base().ground()) fresh.push_back(fresh_of.at(old));
      w.Ids("copy", fresh);
      WriteMatroid(w, m.base());
      break;
    }
  }
}

MatroidOracle ReadMatroid(Reader& r, int depth = 0) {
  if (depth > 64) r.Fail("matroid nesting too deep");
  std::string kind = r.Word();
  if (kind == "graphic") {
    int vertices = r.Count();
    int m = r.Count();
    std::vector<std::pair<int, int>> edges(m);
    for (auto& [a, b] : edges) {
      a = r.Small();
      b = r.Small();
    }
    return MakeGraphic(vertices, edges);
  }
  if (kind == "uniform") {
    int rank = r.Count();
    return MakeUniform(r.Ids(), rank);
  }
  if (kind == "free") return MakeFree(r.Ids());
  if (kind == "partition") {
    std::vector<int> ground = r.Ids();
    r.Expect("parts");
    int count = r.Count();
    std::vector<ElementSet> parts;
    std::vector<int> caps;
    for (int j = 0; j < count; ++j) {
      caps.push_back(DecodeBound(r.Int()));
      parts.push_back(r.Ids());
    }
    return MakePartition(std::move(ground), std::move(parts), std::move(caps));
  }
  if (kind == "direct_sum") {
    int count = r.Count();
    std::vector<MatroidOracle> children;
    for (int j = 0; j < count; ++j) children.push_back(ReadMatroid(r, depth + 1));
    return MakeDirectSum(std::move(children));
  }
  if (kind == "restriction") {
    std::vector<int> allowed = r.Ids();
    return MakeRestriction(ReadMatroid(r, depth + 1), std::move(allowed));
  }
  if (kind == "copy") {
    std::vector<int> fresh = r.Ids();
    return MakeCopy(ReadMatroid(r, depth + 1), std::move(fresh));
  }
  r.Fail("unknown matroid kind '" + kind + "'");
}

void WriteBounds(Writer& w, const ColorBounds& bounds) {
  w.Keyed("default_bound", EncodeBound(bounds.default_bound()));
  auto overrides = bounds.Overrides();
  w.Keyed("bounds", static_cast<long long>(overrides.size()));
  for (auto [v, c, b] : overrides) w.Line({v, c, EncodeBound(b)});
}

ColorBounds ReadBounds(Reader& r, int vertices, int colors) {
  r.Expect("default_bound");
  ColorBounds bounds(vertices, colors, DecodeBound(r.Int()));
  r.Expect("bounds");
  int count = r.Count();
  for (int j = 0; j < count; ++j) {
    int v = r.Small();
    int c = r.Small();
    bounds.set(v, c, DecodeBound(r.Int()));
  }
  return bounds;
}

void WriteEcGraph(Writer& w, const EdgeColoredMultigraph& g) {
  w.Keyed("vertices", g.vertex_count());
  w.Keyed("colors", g.color_count());
  w.Keyed("edges", g.edge_count());
  for (const ColoredEdge& e : g.edges()) w.Line({e.u, e.v, e.color, e.weight});
  WriteBounds(w, g.bounds());
}

EdgeColoredMultigraph ReadEcGraph(Reader& r) {
  r.Expect("vertices");
  int n = r.Count();
  r.Expect("colors");
  int k = r.Count();
  r.Expect("edges");
  int m = r.Count();
  std::vector<ColoredEdge> edges(m);
  for (auto& e : edges) {
    e.u = r.Small();
    e.v = r.Small();
    e.color = r.Small();
    e.weight = r.Int();
  }
  ColorBounds bounds = ReadBounds(r, n, k);
  return EdgeColoredMultigraph(n, k, std::move(edges), std::move(bounds));
}

void WriteMapping(Writer& w, const InstanceFile& file) {
  if (!file.mapping.empty()) {
    w.Keyed("mapping", static_cast<long long>(file.mapping.size()));
    for (auto [a, b] : file.mapping) w.Line({a, b});
  }
  if (!file.roles.empty()) {
    w.Keyed("roles", static_cast<long long>(file.roles.size()));
    for (std::size_t i = 0; i < file.roles.size(); ++i) {
      const CopyInfo& info = file.roles[i];
      w.raw() << i << ' ' << CopyRoleName(info.role) << ' ' << info.source
              << ' ' << info.hyperedge << '\n';
    }
  }
  if (!file.copies.empty()) {
    w.Keyed("copies", static_cast<long long>(file.copies.size()));
    for (std::size_t i = 0; i < file.copies.size(); ++i) {
      w.Line({static_cast<long long>(i), file.copies[i].vertex,
              file.copies[i].edge});
    }
  }
}

void ReadMapping(Reader& r, InstanceFile& file) {
  while (!r.AtEnd()) {
    std::string section = r.Word();
    if (section == "mapping") {
      int count = r.Count();
      for (int j = 0; j < count; ++j) {
        int a = r.Small();
        int b = r.Small();
        file.mapping.emplace_back(a, b);
      }
    } else if (section == "roles") {
      int count = r.Count();
      for (int j = 0; j < count; ++j) {
        if (r.Small() != j) r.Fail("roles must be listed in id order");
        std::string role = r.Word();
        CopyInfo info;
        if (role == "matroid") {
          info.role = CopyRole::kMatroidCopy;
        } else if (role == "hyperedge") {
          info.role = CopyRole::kHyperedgeCopy;
        } else if (role == "dummy") {
          info.role = CopyRole::kDummy;
        } else {
          r.Fail("unknown role '" + role + "'");
        }
        info.source = r.Small();
        info.hyperedge = r.Small();
        file.roles.push_back(info);
      }
    } else if (section == "copies") {
      int count = r.Count();
      for (int j = 0; j < count; ++j) {
        if (r.Small() != j) r.Fail("copies must be listed in id order");
        SplitVertex sv;
        sv.vertex = r.Small();
        sv.edge = r.Small();
        file.copies.push_back(sv);
      }
    } else {
      r.Fail("unexpected section '" + section + "'");
    }
  }
}

}  // namespace

const char* InstanceKind(const AnyInstance& instance) {
  switch (instance.index()) {
    case 0:
      return "dbmis";
    case 1:
      return "ecgraph";
    case 2:
      return "digraph";
    case 3:
      return "bmatching";
    case 4:
      return "parity";
    case 5:
      return "hierarchical";
  }
  return "unknown";
}

std::string RenderMatroid(const MatroidOracle& matroid) {
  Writer w;
  WriteMatroid(w, matroid);
  return w.str();
}

std::string RenderInstance(const AnyInstance& instance) {
  return RenderInstance(InstanceFile{instance, {}, {}, {}});
}

std::string RenderInstance(const InstanceFile& file) {
  Writer w;
  w.raw() << "v1 " << InstanceKind(file.instance) << '\n';
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DbmisInstance>) {
          w.Word("matroid ");
          WriteMatroid(w, x.matroid());
          w.Keyed("weights", static_cast<long long>(x.weights().size()));
          for (Weight v : x.weights()) w.Line({v});
          w.Keyed("hyperedges", static_cast<long long>(x.hyperedges().size()));
          for (const Hyperedge& h : x.hyperedges()) {
            w.raw() << EncodeBound(h.bound) << ' ';
            w.Ids("", h.members);
          }
        } else if constexpr (std::is_same_v<T, EdgeColoredMultigraph>) {
          WriteEcGraph(w, x);
        } else if constexpr (std::is_same_v<T, BMatchingInstance>) {
          WriteEcGraph(w, x.graph);
          w.Keyed("degree_bounds", static_cast<long long>(x.degree_bounds.size()));
          for (int b : x.degree_bounds) w.Line({EncodeBound(b)});
        } else if constexpr (std::is_same_v<T, ColoredDigraph>) {
          w.Keyed("vertices", x.vertex_count());
          w.Keyed("colors", x.color_count());
          w.Keyed("arcs", x.arc_count());
          for (const Arc& a : x.arcs()) {
            w.Line({a.tail, a.head, a.color, a.weight});
          }
          WriteBounds(w, x.bounds());
        } else if constexpr (std::is_same_v<T, ParityInstance>) {
          w.Keyed("k", x.k());
          w.Word("matroid ");
          WriteMatroid(w, x.matroid());
          w.Keyed("sets", x.set_count());
          for (int j = 0; j < x.set_count(); ++j) {
            w.raw() << x.weights()[j];
            for (ElementId id : x.sets()[j]) w.raw() << ' ' << id;
            w.raw() << '\n';
          }
        } else if constexpr (std::is_same_v<T, HierarchicalBMatchingInstance>) {
          w.Keyed("vertices", x.vertex_count());
          w.Keyed("edges", x.edge_count());
          for (int j = 0; j < x.edge_count(); ++j) {
            w.Line({x.edges()[j].first, x.edges()[j].second, x.weights()[j]});
          }
          w.Keyed("family", static_cast<long long>(x.family().size()));
          for (const LaminarSet& s : x.family()) {
            w.raw() << s.vertex << ' ' << s.color << ' ' << EncodeBound(s.bound)
                    << ' ';
            w.Ids("", s.members);
          }
        }
      },
      file.instance);
  WriteMapping(w, file);
  return w.str();
}

InstanceFile ParseInstance(std::string_view text) {
  Reader r(text);
  r.Expect("v1");
  std::string kind = r.Word();
  InstanceFile file;
  if (kind == "dbmis") {
    r.Expect("matroid");
    MatroidOracle matroid = ReadMatroid(r);
    r.Expect("weights");
    int n = r.Count();
    std::vector<Weight> weights(n);
    for (Weight& v : weights) v = r.Int();
    r.Expect("hyperedges");
    int h = r.Count();
    std::vector<Hyperedge> hyperedges(h);
    for (Hyperedge& e : hyperedges) {
      e.bound = DecodeBound(r.Int());
      e.members = r.Ids();
    }
    if (n != static_cast<int>(matroid.ground().size())) {
      r.Fail("weights count does not match the matroid ground set");
    }
    file.instance =
        DbmisInstance(std::move(matroid), std::move(hyperedges), std::move(weights));
  } else if (kind == "ecgraph") {
    file.instance = ReadEcGraph(r);
  } else if (kind == "bmatching") {
    BMatchingInstance b{ReadEcGraph(r), {}};
    r.Expect("degree_bounds");
    int n = r.Count();
    for (int j = 0; j < n; ++j) b.degree_bounds.push_back(DecodeBound(r.Int()));
    b.Validate();
    file.instance = std::move(b);
  } else if (kind == "digraph") {
    r.Expect("vertices");
    int n = r.Count();
    r.Expect("colors");
    int k = r.Count();
    r.Expect("arcs");
    int m = r.Count();
    std::vector<Arc> arcs(m);
    for (Arc& a : arcs) {
      a.tail = r.Small();
      a.head = r.Small();
      a.color = r.Small();
      a.weight = r.Int();
    }
    ColorBounds bounds = ReadBounds(r, n, k);
    file.instance = ColoredDigraph(n, k, std::move(arcs), std::move(bounds));
  } else if (kind == "parity") {
    r.Expect("k");
    int k = r.Count();
    r.Expect("matroid");
    MatroidOracle matroid = ReadMatroid(r);
    r.Expect("sets");
    int m = r.Count();
    std::vector<ElementSet> sets(m);
    std::vector<Weight> weights(m);
    for (int j = 0; j < m; ++j) {
      weights[j] = r.Int();
      for (int i = 0; i < k; ++i) sets[j].push_back(r.Small());
    }
    file.instance = ParityInstance(std::move(matroid), std::move(sets), k,
                                   std::move(weights));
  } else if (kind == "hierarchical") {
    r.Expect("vertices");
    int n = r.Count();
    r.Expect("edges");
    int m = r.Count();
    std::vector<std::pair<int, int>> edges(m);
    std::vector<Weight> weights(m);
    for (int j = 0; j < m; ++j) {
      edges[j].first = r.Small();
      edges[j].second = r.Small();
      weights[j] = r.Int();
    }
    r.Expect("family");
    int f = r.Count();
    std::vector<LaminarSet> family(f);
    for (LaminarSet& s : family) {
      s.vertex = r.Small();
      s.color = r.Small();
      s.bound = DecodeBound(r.Int());
      s.members = r.Ids();
    }
    file.instance = HierarchicalBMatchingInstance(
        n, std::move(edges), std::move(weights), std::move(family));
  } else {
    r.Fail("unknown instance kind '" + kind + "'");
  }
  ReadMapping(r, file);
  return file;
}

std::string RenderSolution(const Solution& s) {
  Writer w;
  w.raw() << "v1 solution\n";
  w.raw() << "kind " << s.kind << '\n';
  w.raw() << "solver " << s.solver << '\n';
  w.Keyed("size", static_cast<long long>(s.items.size()));
  w.Keyed("weight", s.weight);
  w.Ids("items", s.items);
  if (s.has_lifted) w.Ids("lifted", s.lifted);
  return w.str();
}

Solution ParseSolution(std::string_view text) {
  Reader r(text);
  r.Expect("v1");
  r.Expect("solution");
  Solution s;
  r.Expect("kind");
  s.kind = r.Word();
  r.Expect("solver");
  s.solver = r.Word();
  r.Expect("size");
  int size = r.Count();
  r.Expect("weight");
  s.weight = r.Int();
  r.Expect("items");
  s.items = r.Ids();
  if (static_cast<int>(s.items.size()) != size) {
    r.Fail("size does not match the item count");
  }
  if (!r.AtEnd()) {
    r.Expect("lifted");
    s.lifted = r.Ids();
    s.has_lifted = true;
  }
  return s;
}

}  // namespace dbmis
