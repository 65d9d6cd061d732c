#ifndef HYPSURF_TESSELLATION_HPP
#define HYPSURF_TESSELLATION_HPP

// Graphs embedded in closed orientable surfaces, given as lists of face
// cycles. Vertices and edges are derived from the faces.
//
// Document format:
//
//   faces <count>
//   <v1> <v2> ... <vk>      one face per line, vertices in cyclic order
//   # genus <g>             optional; cross-checked against the Euler
//                           characteristic
//
// Other lines starting with '#' and blank lines are ignored.

#include "hypsurf/bignum.hpp"
#include "hypsurf/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hypsurf {

// Malformed input or an input that is not a tessellation.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

using VertexId = long long;
using Edge = std::pair<VertexId, VertexId>;  // first < second

struct ValidationOptions {
  // Reject two faces sharing more than one edge. Off by default: small
  // embeddings of cubic graphs in higher genus routinely have such pairs.
  bool single_shared_edge = false;
};

class Tessellation {
 public:
  using FaceList = std::vector<std::vector<VertexId>>;

  // Validates the tessellation properties; throws ValidationError naming the
  // offending face, edge or vertex.
  static Tessellation from_faces(FaceList faces, std::optional<int> declared_genus = {},
                                 ValidationOptions options = {}) {
    Tessellation t;
    t.faces_ = std::move(faces);
    t.build(declared_genus, options);
    return t;
  }

  const FaceList& faces() const noexcept { return faces_; }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }
  long long euler_characteristic() const noexcept {
    return static_cast<long long>(vertex_count()) - static_cast<long long>(edge_count()) +
           static_cast<long long>(face_count());
  }
  int genus() const noexcept { return genus_; }
  // Pairs of faces sharing more than one edge; zero for strict inputs.
  std::size_t multi_edge_face_pairs() const noexcept { return multi_edge_pairs_; }

  bool has_vertex(VertexId x) const { return incident_.count(x) != 0; }

  // Faces incident to x, by index into faces().
  const std::vector<std::size_t>& incident_faces(VertexId x) const {
    auto it = incident_.find(x);
    if (it == incident_.end()) throw DomainError("unknown vertex " + std::to_string(x));
    return it->second;
  }

  int vertex_degree(VertexId x) const { return static_cast<int>(incident_faces(x).size()); }
  int face_degree(std::size_t face) const { return static_cast<int>(faces_.at(face).size()); }

  int max_vertex_degree() const {
    int m = 0;
    for (VertexId x : vertices_) m = std::max(m, vertex_degree(x));
    return m;
  }
  int max_face_degree() const {
    int m = 0;
    for (const auto& f : faces_) m = std::max(m, static_cast<int>(f.size()));
    return m;
  }
  bool is_cubic() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [&](VertexId x) { return vertex_degree(x) == 3; });
  }

 private:
  Tessellation() = default;

  static std::pair<std::size_t, std::size_t> face_pair(std::size_t a, std::size_t b) {
    return {std::min(a, b), std::max(a, b)};
  }
  static std::string face_name(std::size_t i) { return "face " + std::to_string(i + 1); }
  static std::string edge_name(const Edge& e) {
    return "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
  }

  void build(std::optional<int> declared_genus, ValidationOptions options) {
    if (faces_.empty()) throw ValidationError("no faces");

    std::map<Edge, std::vector<std::size_t>> edge_faces;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      const auto& f = faces_[i];
      if (f.size() < 3) {
        throw ValidationError(face_name(i) + " has degree " + std::to_string(f.size()) +
                              " (< 3)");
      }
      std::set<VertexId> seen;
      for (VertexId v : f) {
        if (v <= 0) throw ValidationError(face_name(i) + " has non-positive vertex id " + std::to_string(v));
        if (!seen.insert(v).second) {
          throw ValidationError(face_name(i) + " repeats vertex " + std::to_string(v) +
                                "; its boundary is not a simple cycle");
        }
        incident_[v].push_back(i);
      }
      for (std::size_t k = 0; k < f.size(); ++k) {
        VertexId a = f[k];
        VertexId b = f[(k + 1) % f.size()];
        edge_faces[{std::min(a, b), std::max(a, b)}].push_back(i);
      }
    }

    for (const auto& [e, fs] : edge_faces) {
      if (fs.size() != 2) {
        throw ValidationError(edge_name(e) + " lies in " + std::to_string(fs.size()) +
                              " faces; every edge must lie in exactly two");
      }
      edges_.push_back(e);
    }

    check_face_intersections(edge_faces, options.single_shared_edge);
    check_orientable(edge_faces);

    for (const auto& [v, fs] : incident_) vertices_.push_back(v);
    std::sort(vertices_.begin(), vertices_.end());
    check_vertex_links();

    const long long chi = euler_characteristic();
    if (chi % 2 != 0 || chi > 2) {
      throw ValidationError("Euler characteristic " + std::to_string(chi) +
                            " is not that of a closed orientable surface");
    }
    genus_ = static_cast<int>((2 - chi) / 2);
    if (declared_genus && *declared_genus != genus_) {
      throw ValidationError("declared genus " + std::to_string(*declared_genus) +
                            " but the Euler characteristic gives genus " +
                            std::to_string(genus_));
    }
  }

  // Two faces meet in a single vertex or along edges, and in the latter case
  // every vertex they share is an end of a shared edge. In strict mode they
  // also share at most one edge.
  void check_face_intersections(const std::map<Edge, std::vector<std::size_t>>& edge_faces,
                                bool strict) {
    std::map<std::pair<std::size_t, std::size_t>, std::set<VertexId>> edge_ends;
    for (const auto& [e, fs] : edge_faces) {
      if (fs[0] == fs[1]) {
        throw ValidationError(edge_name(e) + " appears twice on " + face_name(fs[0]));
      }
      auto& ends = edge_ends[face_pair(fs[0], fs[1])];
      ends.insert(e.first);
      ends.insert(e.second);
    }
    for (const auto& [key, ends] : edge_ends) {
      // k shared edges touch at least k + 1 vertices unless they close a cycle.
      if (ends.size() > 2) ++multi_edge_pairs_;
    }
    for (const auto& [key, ends] : edge_ends) {
      if (strict && ends.size() > 2) {
        throw ValidationError(face_name(key.first) + " and " + face_name(key.second) +
                              " share more than one edge");
      }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::vector<VertexId>> shared_vertices;
    for (const auto& [v, fs] : incident_) {
      for (std::size_t a = 0; a < fs.size(); ++a) {
        for (std::size_t b = a + 1; b < fs.size(); ++b) {
          shared_vertices[face_pair(fs[a], fs[b])].push_back(v);
        }
      }
    }
    for (const auto& [key, vs] : shared_vertices) {
      auto it = edge_ends.find(key);
      if (it == edge_ends.end() && vs.size() == 1) continue;
      for (VertexId v : vs) {
        if (it == edge_ends.end() || it->second.count(v) == 0) {
          throw ValidationError(face_name(key.first) + " and " + face_name(key.second) +
                                " meet at vertex " + std::to_string(v) +
                                " away from any shared edge");
        }
      }
    }
  }

  // Faces may be listed in either direction; some choice of directions must
  // traverse every edge once each way.
  void check_orientable(const std::map<Edge, std::vector<std::size_t>>& edge_faces) const {
    auto direction = [&](std::size_t fi, const Edge& e) {
      const auto& f = faces_[fi];
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] == e.first && f[(k + 1) % f.size()] == e.second) return 1;
      }
      return -1;
    };
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(faces_.size());
    for (const auto& [e, fs] : edge_faces) {
      // Flipping neither or both faces keeps opposite traversals opposite.
      int same = direction(fs[0], e) == direction(fs[1], e) ? 1 : 0;
      adj[fs[0]].push_back({fs[1], same});
      adj[fs[1]].push_back({fs[0], same});
    }
    std::vector<int> flip(faces_.size(), -1);
    for (std::size_t start = 0; start < faces_.size(); ++start) {
      if (flip[start] >= 0) continue;
      flip[start] = 0;
      std::vector<std::size_t> stack{start};
      while (!stack.empty()) {
        std::size_t f = stack.back();
        stack.pop_back();
        for (auto [g, same] : adj[f]) {
          int want = flip[f] ^ same;
          if (flip[g] < 0) {
            flip[g] = want;
            stack.push_back(g);
          } else if (flip[g] != want) {
            throw ValidationError("the faces cannot be oriented consistently (" + face_name(f) +
                                  ", " + face_name(g) + "); the surface is not orientable");
          }
        }
      }
    }
  }

  // The faces around each vertex form one cycle through its edges, and the
  // vertex has at least three neighbours.
  void check_vertex_links() const {
    for (VertexId v : vertices_) {
      const auto& fs = incident_.at(v);
      // Each incident face contributes the two neighbours of v on its cycle;
      // the link is the graph on neighbours with one edge per face.
      std::map<VertexId, std::vector<VertexId>> link;
      for (std::size_t fi : fs) {
        const auto& f = faces_[fi];
        auto pos = static_cast<std::size_t>(std::find(f.begin(), f.end(), v) - f.begin());
        VertexId prev = f[(pos + f.size() - 1) % f.size()];
        VertexId next = f[(pos + 1) % f.size()];
        link[prev].push_back(next);
        link[next].push_back(prev);
      }
      const int degree = static_cast<int>(link.size());
      if (degree < 3) {
        throw ValidationError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(degree) + " (< 3)");
      }
      if (static_cast<std::size_t>(degree) != fs.size()) {
        throw ValidationError("vertex " + std::to_string(v) + " has " + std::to_string(degree) +
                              " neighbours but lies on " + std::to_string(fs.size()) + " faces");
      }
      std::set<VertexId> reached;
      std::vector<VertexId> stack{link.begin()->first};
      while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        if (!reached.insert(u).second) continue;
        for (VertexId w : link[u]) stack.push_back(w);
      }
      if (reached.size() != link.size()) {
        throw ValidationError("the faces around vertex " + std::to_string(v) +
                              " do not form a single disk");
      }
    }
  }

  FaceList faces_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexId, std::vector<std::size_t>> incident_;
  int genus_ = 0;
  std::size_t multi_edge_pairs_ = 0;
};

/// Parses a face-list document.
inline Tessellation load_tessellation(std::istream& in, ValidationOptions options = {}) {
  std::optional<std::size_t> declared_count;
  std::optional<int> declared_genus;
  Tessellation::FaceList faces;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (first[0] == '#') {
      std::string word = first.size() > 1 ? first.substr(1) : "";
      if (word.empty()) ls >> word;
      if (word == "genus") {
        int g;
        if (!(ls >> g)) throw ValidationError(where + ": malformed genus comment");
        declared_genus = g;
      }
      continue;
    }
    if (first == "faces") {
      if (declared_count) throw ValidationError(where + ": duplicate faces header");
      long long n;
      if (!(ls >> n) || n < 0) throw ValidationError(where + ": malformed faces header");
      declared_count = static_cast<std::size_t>(n);
      continue;
    }
    if (!declared_count) throw ValidationError(where + ": missing 'faces <count>' header");
    std::vector<VertexId> face;
    std::istringstream fs(line);
    std::string token;
    while (fs >> token) {
      if (token[0] == '#') break;
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || v <= 0) {
        throw ValidationError(where + ": '" + token + "' is not a positive vertex id");
      }
      face.push_back(v);
    }
    faces.push_back(std::move(face));
  }
  if (!declared_count) throw ValidationError("missing 'faces <count>' header");
  if (*declared_count != faces.size()) {
    throw ValidationError("header declares " + std::to_string(*declared_count) +
                          " faces but " + std::to_string(faces.size()) + " were listed");
  }
  return Tessellation::from_faces(std::move(faces), declared_genus, options);
}

inline Tessellation load_tessellation_string(const std::string& document,
                                            ValidationOptions options = {}) {
  std::istringstream in(document);
  return load_tessellation(in, options);
}

inline Tessellation load_tessellation_file(const std::string& path,
                                          ValidationOptions options = {}) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return load_tessellation(in, options);
}

/// Face-list document for t; load_tessellation reads it back unchanged.
inline std::string to_document(const Tessellation& t) {
  std::ostringstream out;
  out << "faces " << t.face_count() << "\n";
  for (const auto& f : t.faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << "\n";
  }
  out << "# genus " << t.genus() << "\n";
  return out.str();
}

inline Pattern vertex_pattern(const Tessellation& t, VertexId x) {
  std::vector<int> degrees;
  for (std::size_t f : t.incident_faces(x)) degrees.push_back(t.face_degree(f));
  return Pattern(std::move(degrees));
}

}  // namespace hypsurf

#endif  // HYPSURF_TESSELLATION_HPP
