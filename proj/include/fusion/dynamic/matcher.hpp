#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fusion/dynamic/driver.hpp"
#include "fusion/types.hpp"

namespace fusion::dynamic {

// Static universe plus descriptors synthesized for runtime-only components.
class WorkingUniverse {
 public:
  explicit WorkingUniverse(const ComponentUniverse& universe) : universe_(universe) {}

  const ComponentDescriptor* find(std::string_view descriptor_id) const;
  const ComponentUniverse& base() const { return universe_; }
  // Sorted by descriptor_id.
  std::vector<ComponentDescriptor> dynamic_descriptors() const { return dynamic_; }

  struct Match {
    std::string descriptor_id;
    bool synthesized = false;
  };
  // Binds by resource id when present, otherwise by (type, text, activity);
  // text is ignored for editable components. Unmatched components get a
  // dynamic_only descriptor derived from type, activity and id or text.
  Match match(const RawComponent& raw, const std::string& activity);

 private:
  const ComponentUniverse& universe_;
  std::vector<ComponentDescriptor> dynamic_;
};

// A localized component: its instance (screenshot not yet set) and its
// position in the observation it came from.
struct LocalizedInstance {
  ComponentInstance instance;
  std::size_t raw_index = 0;
  bool clickable = false;
};

// Matches every raw component and assigns object indices 1..k per
// descriptor following (y, x, descriptor_id, observation order). Result is
// in instance order.
std::vector<LocalizedInstance> localize(const Observation& observation, WorkingUniverse& universe);

// activity, window and the multiset of (descriptor, count) as one string.
std::string state_signature(const Observation& observation, WorkingUniverse& universe);
std::string signature_of(const std::string& activity, const std::string& window,
                         const std::vector<LocalizedInstance>& instances);

}  // namespace fusion::dynamic
