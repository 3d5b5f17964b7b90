#include "irea/bayeraug.hpp"

namespace irea {

AugmentSpec draw_augment_spec(Rng& rng) {
  AugmentSpec s;
  s.rot90_quarter_turns = static_cast<int>(rng.uniform_int(4));
  s.flip_v = rng.bernoulli(0.5);
  s.flip_h = rng.bernoulli(0.5);
  return s;
}

}  // namespace irea
