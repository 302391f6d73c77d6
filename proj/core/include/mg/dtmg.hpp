#ifndef MG_DTMG_HPP
#define MG_DTMG_HPP

#include <memory>
#include <set>
#include <vector>

#include "mg/tmg.hpp"

namespace mg {

enum class Role { Lateral, Input, Output };

// A directed view of a TMG: a member subset of a host graph together with a
// partition of the members' external targets into inputs, outputs and
// laterals.  Constructed DTMGs own their host and cover all of it;
// sub-views share a host so that metapath predicates can see the
// connections between them.
class Dtmg {
 public:
  Dtmg();  // the empty DTMG
  explicit Dtmg(RegistryPtr reg);
  Dtmg(std::shared_ptr<const Tmg> host, std::set<EdgeId> members,
       std::vector<TargetRef> inputs, std::vector<TargetRef> outputs,
       std::vector<TargetRef> lateral);

  const std::shared_ptr<const Tmg>& host_ptr() const { return host_; }
  const Tmg& host() const { return *host_; }
  const std::set<EdgeId>& members() const { return members_; }
  const std::vector<TargetRef>& inputs() const { return inputs_; }
  const std::vector<TargetRef>& outputs() const { return outputs_; }
  const std::vector<TargetRef>& lateral() const { return lateral_; }

  const RegistryPtr& registry() const { return host_->registry(); }
  bool empty() const { return members_.empty(); }
  bool covers_host() const { return members_.size() == host_->edge_count(); }

  // Connections with both endpoints in the member set.
  std::vector<Connection> internal_connections() const;

  // Role of an external target under this partition, if any.
  std::optional<Role> role_of(const TargetRef& ref) const;

 private:
  std::shared_ptr<const Tmg> host_;
  std::set<EdgeId> members_;
  std::vector<TargetRef> inputs_, outputs_, lateral_;
};

// Builds a DTMG covering all of g.  The three lists must exactly partition
// the dangling targets of g; anything missing or duplicated is a partition
// error listing the offending refs.
Dtmg make_dtmg(Tmg g, std::vector<TargetRef> inputs, std::vector<TargetRef> outputs,
               std::vector<TargetRef> lateral);

// Builds a member sub-view over a shared host; the lists must partition
// external_targets(host, members).
Dtmg make_sub_dtmg(std::shared_ptr<const Tmg> host, std::set<EdgeId> members,
                   std::vector<TargetRef> inputs, std::vector<TargetRef> outputs,
                   std::vector<TargetRef> lateral);

// All external targets partitioned as lateral.
Dtmg all_lateral_dtmg(Tmg g);

// g2 provides input to g: every ref in g's input list is connected (in the
// shared host) to some ref in g2's output list.  Vacuously true when g has
// no inputs.
bool provides_input(const Dtmg& g2, const Dtmg& g);
// g3 receives output from g: every ref in g's output list is connected to
// some ref in g3's input list.
bool receives_output(const Dtmg& g3, const Dtmg& g);
// g forms a metapath from g2 to g3.
bool is_metapath(const Dtmg& g, const Dtmg& g2, const Dtmg& g3);

// Product over internal connections of the comparability weight of the
// joined types; 1 for crisp registries.
double metapath_weight(const Dtmg& d);

// Copies the member subgraph into a standalone host (external targets
// become dangling), preserving the partition.  Edge ids are renumbered
// 1..n in member order; names are kept.
Dtmg materialize(const Dtmg& d);

}  // namespace mg

#endif
