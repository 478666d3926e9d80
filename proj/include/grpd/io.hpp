#ifndef GRPD_IO_HPP_
#define GRPD_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "grpd/action.hpp"

namespace grpd {

// Schemas are documented in docs/formats.md. Readers throw ParseError on
// malformed input and surface validation failures as ValidationFailed.

nlohmann::ordered_json groupoid_to_json(const FiniteGroupoid& g);
GroupoidPtr groupoid_from_json(const nlohmann::json& j);

nlohmann::ordered_json action_to_json(const PartialAction& a);
PartialAction action_from_json(const nlohmann::json& j);

// Built-in actions mirroring the worked examples; base ring selectable.
std::vector<std::string> example_names();
PartialAction example_action(const std::string& name,
                             BaseRing base = BaseRing::rationals());

}  // namespace grpd

#endif  // GRPD_IO_HPP_
