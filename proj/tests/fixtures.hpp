#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplicial/complex.hpp"

namespace fixture {

// Simplex ID from node labels, e.g. id(c, {"1", "4"}).
inline simplicial::SimplexId id(const simplicial::CliqueComplex& c, std::initializer_list<const char*> labels)
{
    std::vector<std::string> v(labels.begin(), labels.end());
    const auto found = c.find(v);
    if (!found) {
        throw std::logic_error("fixture simplex not found");
    }
    return *found;
}

}  // namespace fixture
