#include "cni/var_table.hpp"

#include "cni/errors.hpp"

namespace cni {

VarTable::VarTable(std::vector<VarDescriptor> vars) {
  for (auto& v : vars) add(std::move(v.name), v.kind);
}

std::size_t VarTable::add(std::string name, VarKind kind) {
  if (name.empty()) throw Error("empty variable name");
  if (index_of(name)) throw Error("duplicate variable name '" + name + "'");
  if (kind == VarKind::Rabinowitsch && rabinowitsch())
    throw Error("a variable table holds at most one Rabinowitsch variable");
  vars_.push_back({std::move(name), kind});
  return vars_.size() - 1;
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> VarTable::of_kind(VarKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].kind == kind) out.push_back(i);
  return out;
}

std::optional<std::size_t> VarTable::rabinowitsch() const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].kind == VarKind::Rabinowitsch) return i;
  return std::nullopt;
}

VarTablePtr make_point_table(const std::vector<std::string>& names) {
  auto table = std::make_shared<VarTable>();
  for (const auto& n : names) table->add(n, VarKind::PointVar);
  return table;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace cni
