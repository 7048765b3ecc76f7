#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cni {

enum class VarKind {
  PointVar,      ///< a complex point coordinate
  RealSlack,     ///< r, r1, r2, ... standing for a real relational value
  Rabinowitsch,  ///< u, forbidding vanishing denominators
};

struct VarDescriptor {
  std::string name;
  VarKind kind = VarKind::PointVar;

  friend bool operator==(const VarDescriptor&, const VarDescriptor&) = default;
};

/// Ordered list of variables shared by every polynomial of one computation.
/// Names are unique and at most one Rabinowitsch variable exists.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<VarDescriptor> vars);

  /// Appends a variable and returns its index. Throws on a duplicate name or
  /// a second Rabinowitsch variable.
  std::size_t add(std::string name, VarKind kind);

  std::size_t size() const { return vars_.size(); }
  const VarDescriptor& operator[](std::size_t i) const { return vars_.at(i); }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }
  VarKind kind(std::size_t i) const { return vars_.at(i).kind; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::vector<std::size_t> of_kind(VarKind kind) const;
  std::optional<std::size_t> rabinowitsch() const;

  const std::vector<VarDescriptor>& descriptors() const { return vars_; }

  friend bool operator==(const VarTable&, const VarTable&) = default;

 private:
  std::vector<VarDescriptor> vars_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Table holding the given names, all of kind PointVar.
VarTablePtr make_point_table(const std::vector<std::string>& names);

/// Same object, or equal contents.
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace cni
