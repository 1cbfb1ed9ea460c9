#pragma once

#include "folia/blowup.hpp"
#include "folia/tower.hpp"
#include "folia/vector_field.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace folia {

// Line-oriented "key=value" text; '#' starts a comment.
struct KeyValue {
    std::string key;
    std::string value;
    std::size_t line;
};
std::vector<KeyValue> parse_key_values(std::string_view text);

// Field file:
//   n=<int>
//   degree=<int>
//   d=<int>            (optional center codimension)
//   P<i> = <poly>      for i = 1..n
// Unknown keys are ignored so reports can be fed back in.
struct FieldFile {
    VectorField field;
    std::optional<std::size_t> d;
};
FieldFile parse_field_file(std::string_view text);
std::string format_field_file(const VectorField& f, std::optional<std::size_t> d = std::nullopt);

// Branch file:
//   zero=<i>[,<j>...]   1-based coordinates vanishing on the branch
//   shift<i> = <poly>   u_i = psi_i on the branch
BranchData parse_branch_file(std::string_view text, std::size_t num_vars);
std::string format_branch_file(const BranchData& b);

// Tower file: n, k, deg, chi, ells=<l1,l2,...>; lambda0 optional and checked.
TowerState parse_tower_file(std::string_view text);
std::string format_tower_file(const TowerState& t);

std::vector<unsigned> parse_unsigned_list(std::string_view text);

}  // namespace folia
