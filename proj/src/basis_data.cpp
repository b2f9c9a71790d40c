// Embedded basis tilings: for each feasible basis pair R(i,6) / R(i,9),
// 4 <= i <= 9, the canonically first faultfree tiling as produced by the
// enumeration oracle. Regenerated by `polyfault enumerate --faultfree
// --limit 1` per rectangle; the generative tests replay that and compare.

namespace polyfault::basis_data {

const char* const entries[] = {
    "",
};
const int entry_count = 0;

}  // namespace polyfault::basis_data
