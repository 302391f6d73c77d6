#ifndef MG_TMG_HPP
#define MG_TMG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mg/types.hpp"
#include "mg/value.hpp"

namespace mg {

using EdgeId = std::uint64_t;

// One target position of an edge: an index label in [1..arity] plus a type.
// Several targets may share a label; an edge whose targets all share one
// label is unordered.
struct Target {
  int label = 1;
  std::string type;

  bool operator==(const Target& o) const { return label == o.label && type == o.type; }
  auto operator<=>(const Target& o) const = default;
};

struct Edge {
  EdgeId id = 0;
  std::string type;
  std::vector<Target> targets;
  ValueList values;
  std::string name;  // display name, empty unless assigned; not structural

  int arity() const { return static_cast<int>(targets.size()); }
};

// Joins slot `slot_a` of edge `a` to slot `slot_b` of edge `b`.  Slot 0
// stands for the whole edge; at most one side may be 0.  The first endpoint
// is the source side: connect() wires outputs into inputs left to right,
// and traversal events point from source to destination.
struct Connection {
  EdgeId a = 0;
  int slot_a = 0;
  EdgeId b = 0;
  int slot_b = 0;

  bool operator==(const Connection& o) const = default;
  auto operator<=>(const Connection& o) const = default;
};

struct TargetRef {
  EdgeId edge = 0;
  int slot = 0;  // 0 = whole edge

  bool operator==(const TargetRef& o) const = default;
  auto operator<=>(const TargetRef& o) const = default;
};

enum class Severity { Error, Info };

struct Violation {
  enum class Kind {
    UnknownEdge,
    SlotOutOfRange,
    BothSlotsWhole,
    Incompatible,
    UnknownType,
    MultiConnection,  // informational: one target joined by several connections
  };
  Kind kind;
  Severity severity;
  std::string message;
};

class Tmg {
 public:
  Tmg() : registry_(default_registry()) {}
  explicit Tmg(RegistryPtr reg) : registry_(std::move(reg)) {}

  const RegistryPtr& registry() const { return registry_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const std::vector<Connection>& connections() const { return connections_; }

  bool empty() const { return edges_.empty(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(EdgeId id) const { return edges_.count(id) != 0; }
  const Edge& edge(EdgeId id) const;
  const Edge* find_by_name(const std::string& name) const;

  // Inserts the edge; assigns a fresh id when e.id == 0.  Returns the id.
  EdgeId add_edge(Edge e);
  // Inserts with set semantics (duplicates ignored).  Endpoints must exist
  // and slots must be in range; type compatibility is validate()'s job.
  void add_connection(Connection c);
  void remove_edge(EdgeId id);  // also drops incident connections
  void remove_connection(const Connection& c);

  void set_values(EdgeId id, ValueList vs);
  void set_name(EdgeId id, std::string name);

  // All connections touching (id, slot).
  std::vector<Connection> connections_at(const TargetRef& ref) const;
  bool target_connected(const TargetRef& ref) const;

  bool operator==(const Tmg& o) const {
    return edges_ == o.edges_ && connections_ == o.connections_;
  }

 private:
  RegistryPtr registry_;
  std::map<EdgeId, Edge> edges_;
  std::vector<Connection> connections_;
  EdgeId next_id_ = 1;

  friend bool operator==(const Edge&, const Edge&);
};

bool operator==(const Edge& x, const Edge& y);

// Structural checks.  Violations are data, not exceptions; the graph is
// valid iff no violation has Severity::Error.
std::vector<Violation> validate(const Tmg& g);
bool is_valid(const Tmg& g);

// Target positions participating in no connection, ordered by (edge, slot).
std::vector<std::pair<TargetRef, std::string>> dangling_targets(const Tmg& g);

// Targets of `sub` edges that are dangling in g or connected only to edges
// outside `sub`, ordered by (edge, slot).
std::vector<std::pair<TargetRef, std::string>> external_targets(
    const Tmg& g, const std::set<EdgeId>& sub);

// Adds one unordered wrapper edge of type M with a target connected to each
// edge (slot 0) of g.
Tmg wrap(const Tmg& g, const std::string& wrapper_type = "M");

// Type of the entity a ref points at: the target's type, or the edge's own
// type for slot 0.
const std::string& ref_type(const Tmg& g, const TargetRef& ref);

}  // namespace mg

#endif
