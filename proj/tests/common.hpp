#pragma once

#include "hodge/specfile.hpp"

#include <memory>
#include <string>

#ifndef HODGE_FIXTURE_DIR
#error "HODGE_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace testing_support {

inline std::string fixture_path(const std::string& name) { return std::string(HODGE_FIXTURE_DIR) + "/" + name + ".spec"; }

inline std::unique_ptr<hodge::Fixture> fixture(const std::string& name, int max_weight = 6)
{
  return hodge::materialize(hodge::load_spec(fixture_path(name)), max_weight);
}

inline hodge::LieAlgebraSpec lie(const std::string& name) { return *hodge::load_spec(fixture_path(name)).lie; }

}  // namespace testing_support
