#include "genus/cage_fixtures.hpp"

namespace genus {

// (3, g)-cages; graphs for girth 7..12 come from their LCF codes
// (McGee [12,7,-7]^8, Tutte-Coxeter [-13,-9,7,-7,9,13]^5, Harries
// [-29,-19,-13,13,21,-27,27,33,-13,13,19,-21,-33,29]^5, Tutte 12-cage
// [17,27,-13,-59,-35,35,-11,13,-53,53,-27,21,57,11,-21,-57,59,-17]^7).
// scripts/make_fixtures.py regenerates them.
const std::vector<CageFixture>& cage_fixtures() {
  static const std::vector<CageFixture> fixtures = {
    {3, "K4",
     R"g6(C~)g6"},
    {4, "K3,3",
     R"g6(EFz_)g6"},
    {5, "Petersen",
     R"g6(IheA@GUAo)g6"},
    {6, "Heawood",
     R"g6(MhEGHC@AI?_PC@_G_)g6"},
    {7, "McGee",
     R"g6(WhCGGD@?G?`@_@??_GG_@??C?GGC?H??C?@@?C?GG??o?@@)g6"},
    {8, "Tutte-Coxeter",
     R"g6(]hCGGC@GG?_@?@A?_?G@@??E??GG?G?OC??@??GI???_O?@?@?@??A?a???G??@@?O??E?A??G)g6"},
    {10, "Harries",
     R"g6(~?@EhCGGC@?G?_@?@??_?G?@C?C??G??G??C??@???G?_?_??@???@A???_???G???@????C?G??G??G?G????C????@?_???G?????_????@???@?@??????_?????G??C??@?O????E??????G?A????G???C??C????@?@???????G???????_??C???@@??????@??_?????_?????G?G???????@O???????C?????_??G???_????G?@??????C????O???@??????G??G???????_?c????????@?@???????@?????A????_??G??????G???@?????@????????C?C?_????????G??_???????G???????O??C?????C????@_???A??????G)g6"},
    {12, "Tutte 12-cage (Benson)",
     R"g6(~?@}hCGGC@?G?_@?@??_?G?@??E??G??G??C@?@???G???_??@??O@????_???G???@O???C????G????G????C?C??@?????G?????_??O?@?????@??????_???G?G?????@@?????C??????G????A?G??????C??????@???????G??A????_??????@???????@????????_????_??G???????@????????C?????A??G????????G????????C??????@?@?????????G???G?????_????????@????????O@??????????_A????????G?????????@??????O???C??????????G??????????G??????????C???????C??@??_????????G_??????????_????????O?@???????????@????????????_?????????G?G??O????????@??????@?????C????????????G??????????A?G????????????C????O???????@?G???????????G????????A????_????????????@??C??????????@??????????????_??????????_??G????C????????@???C??????????C???????????A??G??????????????G??????????????C????????????@?@?????A?????????G?????????G?????`??????????????@??????????????O@????????????????_??????A????????G???@???????????@????????????O???C????????????????G?????_??????????G????????????????C?????????????C??@????????_????????G??????_??????????_??????????????O?@?????????????????@?A????????????????_???????????????G?G????????O????????@????????????@?????C???G??????????????G????????????????A?H??????????????????C??????????O???????@???????G???????????G??????????????A????_?C????????????????@????????C??????????@?_??????????????????_????????????????_??G??????????C????????@?????????C??????????E?????????????????A??G)g6"},
  };
  return fixtures;
}

}  // namespace genus
