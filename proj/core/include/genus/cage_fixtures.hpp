#pragma once

#include <string_view>
#include <vector>

namespace genus {

struct CageFixture {
  int girth;
  std::string_view name;
  std::string_view graph6;
};

const std::vector<CageFixture>& cage_fixtures();

}  // namespace genus
