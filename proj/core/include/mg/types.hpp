#ifndef MG_TYPES_HPP
#define MG_TYPES_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mg {

inline const std::string kRootType = "e";

// Finite set of named types with an acyclic parent relation rooted at `e`.
// Parent links may carry an inheritance probability in [0,1]; a missing
// weight reads as 1.
class TypeRegistry {
 public:
  TypeRegistry();

  // Registers `name` with parent `e`.
  void add(const std::string& name);
  // Registers `name` (if new) and adds a parent link.  The parent must
  // already be registered; a link closing a cycle is rejected.
  void add(const std::string& name, const std::string& parent, double weight = 1.0);

  bool contains(const std::string& name) const;
  void require(const std::string& name) const;
  std::vector<std::string> names() const;

  // Reflexive-transitive closure of the parent relation.
  bool inherits(const std::string& t1, const std::string& t2) const;
  bool comparable(const std::string& t1, const std::string& t2) const;
  // Best (maximum-product) chain weight witnessing comparability; 0 when
  // the two types are incomparable.
  double comparable_weight(const std::string& t1, const std::string& t2) const;

  const std::map<std::string, std::map<std::string, double>>& parent_links() const {
    return parents_;
  }

  bool operator==(const TypeRegistry& o) const { return parents_ == o.parents_; }

 private:
  double chain_weight(const std::string& from, const std::string& to) const;

  // type -> (parent -> weight); every registered type has an entry.
  std::map<std::string, std::map<std::string, double>> parents_;
};

using RegistryPtr = std::shared_ptr<const TypeRegistry>;

RegistryPtr default_registry();
bool same_registry(const RegistryPtr& a, const RegistryPtr& b);

}  // namespace mg

#endif
