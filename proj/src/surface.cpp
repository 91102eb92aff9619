#include "necklace/surface.hpp"

namespace necklace {

SurfaceAlgebra::SurfaceAlgebra(int genus, int punctures)
    : genus_(genus), punctures_(punctures), alphabet_(Alphabet::surface(genus, punctures)) {}

Letter SurfaceAlgebra::x(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("x index");
  return static_cast<Letter>(2 * (i - 1));
}

Letter SurfaceAlgebra::y(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("y index");
  return static_cast<Letter>(2 * (i - 1) + 1);
}

Letter SurfaceAlgebra::z(int j) const {
  if (j < 1 || j > punctures_) throw std::out_of_range("z index");
  return static_cast<Letter>(2 * genus_ + (j - 1));
}

TensorSeries SurfaceAlgebra::gen(Letter l, int cutoff) const {
  return TensorSeries::generator(alphabet_, cutoff, l);
}

TensorSeries SurfaceAlgebra::omega0(int cutoff) const {
  TensorSeries w(alphabet_, cutoff);
  for (int i = 1; i <= genus_; ++i)
    w += bracket(gen(x(i), cutoff), gen(y(i), cutoff));
  return w;
}

TensorSeries SurfaceAlgebra::omega(int cutoff) const {
  TensorSeries w = omega0(cutoff);
  for (int j = 1; j <= punctures_; ++j) w += gen(z(j), cutoff);
  return w;
}

}  // namespace necklace
