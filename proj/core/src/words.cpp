#include "oneone/words.hpp"

namespace oneone {

char symbol(Loop g) noexcept {
  switch (g) {
    case Loop::AlphaBar: return 'a';
    case Loop::BetaBar: return 'b';
    case Loop::GammaBar: return 'g';
    case Loop::AlphaHat: return 'A';
  }
  return '?';
}

}  // namespace oneone
