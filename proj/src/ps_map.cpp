#include "pappus/ps_map.hpp"

namespace pappus {

std::string_view stratum_name(Stratum s) {
    switch (s) {
    case Stratum::W1: return "W1";
    case Stratum::W2: return "W2";
    case Stratum::W3: return "W3";
    case Stratum::interior: return "interior-so-far";
    }
    return "?";
}

} // namespace pappus
