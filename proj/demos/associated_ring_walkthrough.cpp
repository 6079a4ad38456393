// Walks the construction of the graded ring attached to the lower central
// series of the order-sixteen dihedral group: layers, chosen coset
// representatives, structure constants, and the class comparison.

#include <cstdio>
#include <sstream>

#include "finalg/catalog.hpp"
#include "finalg/lie.hpp"
#include "finalg/lie_io.hpp"

using namespace finalg;

int main() {
  FiniteGroup G = construct_group("dihedral(8)");
  AssociatedLieRing A = associated_lie_ring(G);

  std::printf("group %s: order %d, nilpotency class %d\n", G.name.c_str(), G.n,
              A.group_class);
  for (size_t k = 0; k < A.layers.size(); ++k) {
    std::printf("  layer %zu: quotient order %d, basis at ring index %d:",
                k + 1, A.layers[k].quot.group.n, A.weight_offset[k]);
    for (int rep : A.layers[k].reps) std::printf(" g%d", rep);
    std::printf("\n");
  }

  std::printf("ring: dim %d over GF(%lld), weights", A.ring.dim, A.q);
  for (int w : A.ring.weight) std::printf(" %d", w);
  std::printf("\n");
  int terms = 0;
  for (int i = 0; i < A.ring.dim; ++i)
    for (int j = i + 1; j < A.ring.dim; ++j)
      for (int k = 0; k < A.ring.dim; ++k)
        if (A.ring.sc(i, j, k) != 0) {
          std::printf("  [e%d, e%d] has e%d coefficient %d\n", i, j, k,
                      A.ring.sc(i, j, k));
          ++terms;
        }
  if (terms == 0) std::printf("  (abelian)\n");

  std::ostringstream file;
  write_lie_ring(file, A.ring);
  std::printf("structure-constant file:\n%s", file.str().c_str());

  std::optional<int> lcls = lie_class(A.ring);
  std::printf("ring class %d, group class %d\n", lcls.value_or(-1),
              A.group_class);
  return lcls == A.group_class ? 0 : 1;
}
