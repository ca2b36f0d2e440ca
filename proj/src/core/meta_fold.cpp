#include "core/meta_fold.hpp"

namespace esat {

std::optional<GlideBounds> combine_glide(std::span<const ClauseMeta> antecedents) {
  MetaFold fold;
  for (const ClauseMeta& m : antecedents) fold.add(m);
  return fold.result().glide;
}

std::optional<ScaleCore> combine_pyth(std::span<const ClauseMeta> antecedents) {
  MetaFold fold;
  for (const ClauseMeta& m : antecedents) fold.add(m);
  return fold.result().scale;
}

}  // namespace esat
