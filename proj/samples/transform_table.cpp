// Prints the transform of the Catalan prefix next to the exhaustive
// family counts, the pair of columns the library exists to reconcile.

#include <iostream>

#include <catkit/catkit.hpp>

int main() {
  const int max_n = 7;
  catkit::IntSeq a(max_n + 1);
  for (int n = 0; n <= max_n; ++n) a[n] = catkit::catalan(n);
  const catkit::IntSeq b = catkit::catalan_transform(a, catkit::TransformMode::direct);

  std::cout << " n  catalan      transform    |A_n|\n";
  for (int n = 0; n <= max_n; ++n) {
    const catkit::Natural members = catkit::count_family(catkit::family_a(n));
    std::cout << ' ' << n << "  " << a[n].str() << "\t     " << b[n].str() << "\t  "
              << members.str() << (members == b[n] ? "" : "  MISMATCH") << '\n';
  }
  return 0;
}
