#pragma once

#include <array>
#include <string>
#include <vector>

#include "isogeny.hpp"

namespace isogrowth {

struct CurveRecord {
    std::string label;
    std::string isogeny_class;
    std::array<std::string, 5> coefficients;
};

const std::vector<CurveRecord>& curve_table();
const std::string& curve_table_json();

bool has_curve(const std::string& label);
WeierstrassModel curve_by_label(const std::string& label);

// shortest route through the bundled prime-degree graph, as a descriptor
// with its chain filled in
IsogenyDescriptor descriptor_between(const std::string& from,
                                     const std::string& to);

}  // namespace isogrowth
